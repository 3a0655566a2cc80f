#include <qsh/suites.hpp>

#include <algorithm>

#include <qsh/universal.hpp>

namespace qsh
{

check_result check_antipode_closed_form(int max_degree)
{
    std::size_t cases = 0;
    for (const auto &a : compositions_up_to(max_degree)) {
        ++cases;
        const graded_element h = x(a);
        if (!(antipode_shuffle(h) == antipode_recursive(h))) {
            return check_result::fail(witness{{a}, "closed form and recursion differ"}, cases);
        }
    }
    return check_result::pass(cases);
}

check_result check_antipode_axiom(const basis &b, int max_degree)
{
    std::size_t cases = 0;
    for (const auto &a : compositions_up_to(max_degree)) {
        ++cases;
        const graded_element h(b, a);
        const graded_element expected(b, composition{}, counit(h));
        if (!(antipode_left_convolution(h) == expected)) {
            return check_result::fail(witness{{a}, "m(S (x) id)Delta differs from u eps"}, cases);
        }
        if (!(antipode_right_convolution(h) == expected)) {
            return check_result::fail(witness{{a}, "m(id (x) S)Delta differs from u eps"}, cases);
        }
    }
    return check_result::pass(cases);
}

check_result check_fg_roundtrip(const character_data &f, int max_degree)
{
    const character_data back = g_to_f(f_to_g(f, max_degree), max_degree);
    std::size_t cases = 0;
    for (const auto &a : compositions_up_to(max_degree)) {
        ++cases;
        if (back(a) != f(a)) {
            return check_result::fail(witness{{a}, "f = " + to_string(f(a)) + ", round trip gives " + to_string(back(a))},
                                      cases);
        }
    }
    return check_result::pass(cases);
}

check_result check_closed_form_g(const character_data &f, closed_form_kind kind, int max_degree)
{
    const infinitesimal_data g = f_to_g(f, max_degree);
    std::size_t cases = 0;
    for (const auto &a : compositions_up_to(max_degree)) {
        if (kind == closed_form_kind::even_odd_odd_sizes && a.size() % 2 == 0) {
            continue;
        }
        ++cases;
        const rational solved = g(a);
        const rational closed = closed_form_g(kind, a);
        if (solved != closed) {
            return check_result::fail(
                witness{{a}, "triangular solve gives " + to_string(solved) + ", closed form " + to_string(closed)},
                cases);
        }
    }
    return check_result::pass(cases);
}

bool suite_report::passed() const
{
    return std::all_of(lines.begin(), lines.end(), [](const suite_line &l) { return l.result.passed; });
}

std::vector<std::string> suite_names()
{
    return {"shuffle-character", "qps", "antipode", "theta-eigen", "integrality", "fg-roundtrip"};
}

suite_report run_suite(std::string_view suite, const registry_entry &entry, int degree)
{
    entry.require_degree(degree);
    const character_data &f = entry.f;
    suite_report r{std::string(suite), {}};
    if (suite == "shuffle-character") {
        r.lines.push_back({"shuffle identity f(a)f(b) = sum over a sh b", is_shuffle_character(f, degree)});
    } else if (suite == "qps") {
        const qps_report q = verify_qps(f, degree);
        r.lines.push_back({"P_a P_b = z_a z_b / z_ab sum over a sh b of P_c", q.multiplication});
        r.lines.push_back({"Delta(P_a) = sum z_a / (z_b z_c) P_b (x) P_c", q.comultiplication});
        r.lines.push_back({"sum over rearrangements of lambda of P_a = p_lambda", q.refinement});
    } else if (suite == "antipode") {
        r.lines.push_back({"closed form antipode of Sh", check_antipode_closed_form(degree)});
        r.lines.push_back({"antipode axiom in QSym", check_antipode_axiom(basis::monomial(), degree)});
        r.lines.push_back({"antipode axiom in Sh", check_antipode_axiom(basis::shuffle_algebra(), degree)});
    } else if (suite == "theta-eigen") {
        r.lines.push_back({"Theta(X_a) = 2^l(a) X_a on odd a, 0 otherwise", theta_eigencheck(f, degree)});
    } else if (suite == "integrality") {
        const integrality_report q = check_integral_nonneg(f, degree);
        r.lines.push_back({"aut(a) f(a, b) is a nonnegative integer", q.full});
        r.lines.push_back({"aut(a) f(a) is a nonnegative integer", q.pointwise});
    } else if (suite == "fg-roundtrip") {
        r.lines.push_back({"g_to_f(f_to_g(f)) = f", check_fg_roundtrip(f, degree)});
        if (f.name() == "type1") {
            r.lines.push_back({"g matches its closed form", check_closed_form_g(f, closed_form_kind::type_one, degree)});
        } else if (f.name() == "type2") {
            r.lines.push_back({"g matches its closed form", check_closed_form_g(f, closed_form_kind::type_two, degree)});
        } else if (f.name() == "even-odd") {
            r.lines.push_back({"g matches its closed form at odd sizes",
                               check_closed_form_g(f, closed_form_kind::even_odd_odd_sizes, degree)});
        }
    } else {
        std::string known;
        for (const auto &n : suite_names()) {
            known += (known.empty() ? "" : ", ") + n;
        }
        throw std::invalid_argument("unknown suite '" + std::string(suite) + "'; known suites: " + known);
    }
    return r;
}

} // namespace qsh
