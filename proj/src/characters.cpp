#include <qsh/characters.hpp>

#include <algorithm>

namespace qsh
{

functional character_data::as_shuffle_functional() const
{
    return functional(basis::shuffle_algebra(), conventions::character_at_empty, m_f);
}

functional infinitesimal_data::as_monomial_functional() const
{
    return functional(basis::monomial(), conventions::infinitesimal_at_empty, m_g);
}

namespace
{

template <class Allowed>
check_result shuffle_identity(const character_data &f, int max_degree, Allowed &&allowed)
{
    std::size_t cases = 0;
    for (int total = 2; total <= max_degree; ++total) {
        for (int da = 1; da < total; ++da) {
            const auto left = compositions_of(da);
            const auto right = compositions_of(total - da);
            for (const auto &a : left) {
                if (!allowed(a)) {
                    continue;
                }
                for (const auto &b : right) {
                    if (!allowed(b)) {
                        continue;
                    }
                    ++cases;
                    rational sum = 0;
                    for (const auto &[c, k] : shuffle(a, b)) {
                        sum += f(c) * static_cast<unsigned long>(k);
                    }
                    const rational prod = f(a) * f(b);
                    if (sum != prod) {
                        return check_result::fail(witness{{a, b}, "f(a) f(b) = " + to_string(prod) +
                                                                      " but the shuffle sum is " + to_string(sum)},
                                                  cases);
                    }
                }
            }
        }
    }
    return check_result::pass(cases);
}

void require_nonsingular(const std::function<rational(const composition &)> &f, int max_degree)
{
    for (int n = 1; n <= max_degree; ++n) {
        if (f(composition{n}) == 0) {
            throw singular_character("value at (" + std::to_string(n) + ") is zero");
        }
    }
}

rational diagonal(const std::function<rational(const composition &)> &f, const composition &a)
{
    rational d = 1;
    for (int part : a.parts()) {
        const rational v = f(composition{part});
        if (v == 0) {
            throw singular_character("value at (" + std::to_string(part) + ") is zero");
        }
        d *= v;
    }
    return d;
}

// Solves sum_{b >= a} known(a, b) unknown(b) = [l(a) = 1] for unknown.
composition_function triangular_inverse(std::function<rational(const composition &)> known)
{
    return composition_function::recursive([known](const composition &a, const composition_function &self) {
        rational rhs = a.length() == 1 ? 1 : 0;
        for (const auto &b : coarsenings(a)) {
            if (b == a) {
                continue;
            }
            const rational coef = extend_over_refinement(known, a, b);
            if (coef != 0) {
                rhs -= coef * self(b);
            }
        }
        return rational(rhs / diagonal(known, a));
    });
}

} // namespace

check_result is_shuffle_character(const character_data &f, int max_degree)
{
    return shuffle_identity(f, max_degree, [](const composition &) { return true; });
}

bool is_normalized(const character_data &f, int max_degree)
{
    for (int n = 1; n <= max_degree; ++n) {
        if (f(composition{n}) != 1) {
            return false;
        }
    }
    return true;
}

character_data normalize(const character_data &f, int max_degree)
{
    require_nonsingular(f, max_degree);
    composition_function fn([f](const composition &a) {
        const rational value = f(a);
        return value == 0 ? value : rational(value / diagonal(f, a));
    });
    return character_data(std::move(fn), f.name());
}

infinitesimal_data f_to_g(const character_data &f, int max_degree)
{
    require_nonsingular(f, max_degree);
    return infinitesimal_data(triangular_inverse(f), f.name());
}

character_data g_to_f(const infinitesimal_data &g, int max_degree)
{
    require_nonsingular(g, max_degree);
    return character_data(triangular_inverse(g), g.name());
}

graded_element basis_expand(const character_data &f, const composition &a)
{
    graded_element r(basis::monomial());
    for (const auto &b : coarsenings(a)) {
        r.add_term(b, extend_over_refinement(f, a, b));
    }
    return r;
}

graded_element basis_contract(const infinitesimal_data &g, const composition &a)
{
    graded_element r(basis::shuffle_basis(g.name()));
    for (const auto &b : coarsenings(a)) {
        r.add_term(b, extend_over_refinement(g, a, b));
    }
    return r;
}

graded_element qps_expand(const character_data &f, const composition &a)
{
    for (int part : a.parts()) {
        if (f(composition{part}) != 1) {
            throw not_normalized("f((" + std::to_string(part) + ")) = " + to_string(f(composition{part})));
        }
    }
    graded_element r = basis_expand(f, a);
    r *= rational(aut(a));
    return r;
}

graded_element qps_contract(const infinitesimal_data &g, const composition &a)
{
    graded_element r(basis::power_sum(g.name()));
    for (const auto &b : coarsenings(a)) {
        r.add_term(b, extend_over_refinement(g, a, b) / rational(aut(b)));
    }
    return r;
}

graded_element to_monomial(const character_data &f, const graded_element &h)
{
    switch (h.basis_tag().type()) {
        case basis::kind::monomial:
            return h;
        case basis::kind::power_sum: {
            graded_element r(basis::monomial());
            for (const auto &[c, q] : h.terms()) {
                r += q * qps_expand(f, c);
            }
            return r;
        }
        case basis::kind::shuffle_basis: {
            graded_element r(basis::monomial());
            for (const auto &[c, q] : h.terms()) {
                r += q * basis_expand(f, c);
            }
            return r;
        }
        default:
            throw basis_mismatch("cannot rewrite " + h.basis_tag().tag() + " in the M basis");
    }
}

graded_element from_monomial(const infinitesimal_data &g, const graded_element &h, const basis &target)
{
    if (h.basis_tag().type() != basis::kind::monomial) {
        throw basis_mismatch("from_monomial expects the M basis");
    }
    graded_element r(target);
    for (const auto &[c, q] : h.terms()) {
        switch (target.type()) {
            case basis::kind::power_sum:
                r += q * qps_contract(g, c);
                break;
            case basis::kind::shuffle_basis: {
                graded_element part = basis_contract(g, c);
                r += q * graded_element(target, part.terms());
                break;
            }
            default:
                throw basis_mismatch("from_monomial target must be a derived basis");
        }
    }
    return r;
}

qps_report verify_qps(const character_data &f, int max_degree, int refinement_degree)
{
    if (refinement_degree < 0) {
        refinement_degree = max_degree;
    }
    const int cache_degree = std::max(max_degree, refinement_degree);
    std::map<composition, graded_element> p;
    for (const auto &a : compositions_up_to(cache_degree)) {
        p.emplace(a, qps_expand(f, a));
    }

    qps_report report;

    {
        std::size_t cases = 0;
        report.multiplication = check_result::pass(0);
        for (int total = 0; total <= max_degree && report.multiplication.passed; ++total) {
            for (int da = 0; da <= total && report.multiplication.passed; ++da) {
                for (const auto &a : compositions_of(da)) {
                    for (const auto &b : compositions_of(total - da)) {
                        ++cases;
                        const graded_element lhs = product(p.at(a), p.at(b));
                        graded_element rhs(basis::monomial());
                        for (const auto &[c, k] : shuffle(a, b)) {
                            rhs += rational(static_cast<unsigned long>(k)) * p.at(c);
                        }
                        rhs *= make_rational(z_value(a) * z_value(b), z_value(a + b));
                        if (!(lhs == rhs)) {
                            report.multiplication = check_result::fail(
                                witness{{a, b}, "P_a P_b differs from the scaled shuffle sum"}, cases);
                            break;
                        }
                    }
                    if (!report.multiplication.passed) {
                        break;
                    }
                }
            }
        }
        if (report.multiplication.passed) {
            report.multiplication.cases = cases;
        }
    }

    {
        std::size_t cases = 0;
        report.comultiplication = check_result::pass(0);
        for (const auto &a : compositions_up_to(max_degree)) {
            ++cases;
            const tensor_element lhs = coproduct(p.at(a));
            tensor_element rhs(basis::monomial());
            for (std::size_t i = 0; i <= a.length(); ++i) {
                const composition b = a.slice(0, i);
                const composition c = a.slice(i, a.length());
                tensor_element t = tensor(p.at(b), p.at(c));
                tensor_element scaled(basis::monomial());
                const rational s = make_rational(z_value(a), z_value(b) * z_value(c));
                for (const auto &[k, v] : t.terms()) {
                    scaled.add_term(k.first, k.second, s * v);
                }
                rhs += scaled;
            }
            if (!(lhs == rhs)) {
                report.comultiplication =
                    check_result::fail(witness{{a}, "Delta(P_a) differs from the scaled deconcatenation"}, cases);
                break;
            }
        }
        if (report.comultiplication.passed) {
            report.comultiplication.cases = cases;
        }
    }

    {
        std::size_t cases = 0;
        report.refinement = check_result::pass(0);
        for (int n = 0; n <= refinement_degree && report.refinement.passed; ++n) {
            for (const auto &lambda : partitions_of(n)) {
                ++cases;
                graded_element sum(basis::monomial());
                for (const auto &a : rearrangements(lambda)) {
                    sum += p.at(a);
                }
                if (!(sum == power_sum(lambda))) {
                    report.refinement =
                        check_result::fail(witness{{lambda}, "sum of P_a over rearrangements is not p_lambda"}, cases);
                    break;
                }
            }
        }
        if (report.refinement.passed) {
            report.refinement.cases = cases;
        }
    }
    return report;
}

character_data prefix_sum_character(tau_function tau, std::string name)
{
    composition_function fn([tau = std::move(tau)](const composition &a) {
        rational prefix = 0;
        rational denom = 1;
        for (std::size_t i = 0; i < a.length(); ++i) {
            prefix += tau(a[i]);
            if (prefix == 0) {
                throw zero_prefix_sum("prefix sum of tau over (" + to_string(a.slice(0, i + 1)) + ") is zero");
            }
            denom *= prefix;
        }
        return rational(1 / denom);
    });
    return character_data(std::move(fn), std::move(name));
}

bool respects(const ordered_partition_spec &spec, const composition &a)
{
    for (std::size_t i = 0; i + 1 < a.length(); ++i) {
        if (spec.precedes(spec.classify(a[i + 1]), spec.classify(a[i]))) {
            return false;
        }
    }
    return true;
}

namespace
{

const character_data &class_character(const ordered_partition_spec &spec, int cls)
{
    if (auto it = spec.per_class.find(cls); it != spec.per_class.end()) {
        return it->second;
    }
    if (spec.default_character) {
        return *spec.default_character;
    }
    throw std::invalid_argument("no shuffle character for class " + std::to_string(cls));
}

void check_bound(const ordered_partition_spec &spec, const composition &a)
{
    if (!spec.part_bound) {
        return;
    }
    for (int part : a.parts()) {
        if (part > *spec.part_bound) {
            throw degree_cap_exceeded("part " + std::to_string(part) + " exceeds the declared bound " +
                                      std::to_string(*spec.part_bound) + " of the ordered partition");
        }
    }
}

} // namespace

character_data ordered_partition_character(const ordered_partition_spec &spec, std::string name)
{
    if (spec.check_degree > 0) {
        for (const auto &[cls, fc] : spec.per_class) {
            auto r = shuffle_identity(fc, spec.check_degree, [&](const composition &a) {
                return std::all_of(a.parts().begin(), a.parts().end(),
                                   [&](int p) { return spec.classify(p) == cls; });
            });
            if (!r.passed) {
                throw not_a_shuffle_character("character of class " + std::to_string(cls) + ": " + describe(r));
            }
        }
        if (spec.default_character) {
            auto r = is_shuffle_character(*spec.default_character, spec.check_degree);
            if (!r.passed) {
                throw not_a_shuffle_character("default class character: " + describe(r));
            }
        }
    }
    composition_function fn([spec](const composition &a) {
        check_bound(spec, a);
        if (!respects(spec, a)) {
            return rational(0);
        }
        // Classes of a respecting composition occupy consecutive blocks.
        rational r = 1;
        std::size_t start = 0;
        while (start < a.length()) {
            const int cls = spec.classify(a[start]);
            std::size_t end = start + 1;
            while (end < a.length() && spec.classify(a[end]) == cls) {
                ++end;
            }
            r *= class_character(spec, cls)(a.slice(start, end));
            if (r == 0) {
                break;
            }
            start = end;
        }
        return r;
    });
    return character_data(std::move(fn), std::move(name));
}

character_data inverse_length_factorial()
{
    return character_data(
        composition_function([](const composition &a) { return rational(1, factorial(static_cast<unsigned>(a.length()))); }),
        "type2");
}

character_data even_odd_character(const character_data &f_even)
{
    ordered_partition_spec spec;
    spec.classify = [](int part) { return part % 2 == 0 ? 0 : 1; };
    spec.precedes = [](int a, int b) { return a == 0 && b == 1; };
    spec.per_class.emplace(0, f_even);
    spec.per_class.emplace(1, inverse_length_factorial());
    return ordered_partition_character(spec, "even-odd");
}

character_data order_basis_character(std::function<bool(int, int)> precedes, std::optional<int> part_bound,
                                     std::string name)
{
    ordered_partition_spec spec;
    spec.classify = [](int part) { return part; };
    spec.precedes = std::move(precedes);
    spec.default_character = inverse_length_factorial();
    spec.part_bound = part_bound;
    return ordered_partition_character(spec, std::move(name));
}

character_data builtin(builtin_kind kind, std::optional<character_data> f_even)
{
    switch (kind) {
        case builtin_kind::type_one: {
            auto f = normalize(prefix_sum_character([](int n) { return rational(n); }, "type1"));
            return f;
        }
        case builtin_kind::type_two:
            return prefix_sum_character([](int) { return rational(1); }, "type2");
        case builtin_kind::even_odd:
            return normalize(even_odd_character(f_even ? *f_even : inverse_length_factorial()));
        case builtin_kind::combinatorial:
            return order_basis_character([](int a, int b) { return a > b; }, std::nullopt, "combinatorial");
        case builtin_kind::reverse_combinatorial:
            return order_basis_character([](int a, int b) { return a < b; }, std::nullopt, "reverse-combinatorial");
    }
    throw std::invalid_argument("unknown builtin");
}

rational closed_form_g(closed_form_kind kind, const composition &a)
{
    if (a.empty()) {
        return rational(conventions::infinitesimal_at_empty);
    }
    const long sign = (a.length() % 2 == 1) ? 1 : -1;
    switch (kind) {
        case closed_form_kind::type_one:
            return make_rational(integer(sign * a.back()), integer(a.size()));
        case closed_form_kind::type_two:
            return rational(sign, static_cast<long>(a.length()));
        case closed_form_kind::even_odd_odd_sizes: {
            if (a.size() % 2 == 0) {
                throw even_size_unsupported("no closed form for the even-odd g at even size " +
                                            std::to_string(a.size()));
            }
            if (a.back() % 2 == 0) {
                return rational(0);
            }
            return rational(sign, stats(a).odd_count);
        }
    }
    throw std::invalid_argument("unknown closed form");
}

rational even_odd_series_coefficient(int m)
{
    rational sum = 0;
    for (const auto &b : compositions_of(m)) {
        if (!is_odd(b)) {
            continue;
        }
        integer num = 1;
        for (std::size_t i = 0; i < b.length(); ++i) {
            num *= -2;
        }
        sum += make_rational(num, part_product(b) * factorial(static_cast<unsigned>(b.length())));
    }
    return sum;
}

namespace
{

bool nonneg_integer(const rational &q)
{
    return q >= 0 && is_integer(q);
}

} // namespace

integrality_report check_integral_nonneg(const character_data &f, int max_degree)
{
    integrality_report report;
    std::size_t cases = 0;
    report.pointwise = check_result::pass(0);
    for (const auto &a : compositions_up_to(max_degree)) {
        if (a.empty()) {
            continue;
        }
        ++cases;
        const rational v = rational(aut(a)) * f(a);
        if (!nonneg_integer(v)) {
            report.pointwise = check_result::fail(witness{{a}, "aut(a) f(a) = " + to_string(v)}, cases);
            break;
        }
    }
    if (report.pointwise.passed) {
        report.pointwise.cases = cases;
    }

    cases = 0;
    report.full = check_result::pass(0);
    for (const auto &a : compositions_up_to(max_degree)) {
        bool ok = true;
        for (const auto &b : coarsenings(a)) {
            ++cases;
            const rational v = rational(aut(a)) * extend_over_refinement(f, a, b);
            if (!nonneg_integer(v)) {
                report.full = check_result::fail(
                    witness{{a, b}, "coefficient of M_b in P_a is " + to_string(v)}, cases);
                ok = false;
                break;
            }
        }
        if (!ok) {
            break;
        }
    }
    if (report.full.passed) {
        report.full.cases = cases;
    }
    return report;
}

} // namespace qsh
