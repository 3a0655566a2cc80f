#include "test_support.hpp"

using namespace qsh;
using qsh::testing::q;

namespace
{

rational inverse_factorial(std::size_t n)
{
    return rational(1) / rational(factorial(static_cast<unsigned>(n)));
}

// Independent oracles for the named characters.
rational type_one_oracle(const composition &a)
{
    return rational(part_product(a)) / rational(prefix_product(a));
}

rational type_two_oracle(const composition &a)
{
    return inverse_factorial(a.length());
}

bool weakly_decreasing(const composition &a)
{
    for (std::size_t i = 1; i < a.length(); ++i) {
        if (a[i] > a[i - 1]) {
            return false;
        }
    }
    return true;
}

rational combinatorial_oracle(const composition &a)
{
    return weakly_decreasing(a) ? rational(1) / rational(aut(a)) : rational(0);
}

rational reverse_combinatorial_oracle(const composition &a)
{
    return combinatorial_oracle(a.reversed());
}

rational even_odd_oracle(const composition &a)
{
    bool seen_odd = false;
    std::size_t evens = 0;
    std::size_t odds = 0;
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (a[i] % 2 == 0) {
            if (seen_odd) {
                return 0;
            }
            ++evens;
        } else {
            seen_odd = true;
            ++odds;
        }
    }
    return inverse_factorial(evens) * inverse_factorial(odds);
}

character_data from_values(std::function<rational(const composition &)> fn, std::string name = "test")
{
    return character_data(composition_function(std::move(fn)), std::move(name));
}

// Type II with f((1,1)) moved from 1/2 to 1.
character_data perturbed_type_two()
{
    return from_values(
        [](const composition &a) { return a == composition{1, 1} ? rational(1) : inverse_factorial(a.length()); },
        "perturbed");
}

void check_agrees(const character_data &f, rational (*oracle)(const composition &), int max_degree)
{
    for (const auto &a : compositions_up_to(max_degree)) {
        if (!a.empty()) {
            CHECK(f(a) == oracle(a));
        }
    }
}

// Same triangular system as f_to_g, solved by explicit elimination over a
// dense matrix per degree.
rational g_by_dense_solve(const character_data &f, const composition &target)
{
    const auto rows = compositions_of(target.size());
    const std::size_t n = rows.size();
    std::vector<std::vector<rational>> m(n, std::vector<rational>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (refines(rows[i], rows[j])) {
                m[i][j] = extend_over_refinement([&](const composition &c) { return f(c); }, rows[i], rows[j]);
            }
        }
        m[i][n] = rows[i].length() == 1 ? 1 : 0;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (m[pivot][col] == 0) {
            ++pivot;
        }
        std::swap(m[pivot], m[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != col && m[r][col] != 0) {
                const rational factor = m[r][col] / m[col][col];
                for (std::size_t k = col; k <= n; ++k) {
                    m[r][k] -= factor * m[col][k];
                }
            }
        }
    }
    const auto it = std::find(rows.begin(), rows.end(), target);
    const std::size_t i = static_cast<std::size_t>(it - rows.begin());
    return m[i][n] / m[i][i];
}

} // namespace

TEST_CASE("is_shuffle_character examples")
{
    CHECK(is_shuffle_character(prefix_sum_character([](int n) { return rational(n); }), 7));
    CHECK(is_shuffle_character(inverse_length_factorial(), 7));
    const check_result r = is_shuffle_character(from_values([](const composition &) { return rational(1); }), 2);
    CHECK_FALSE(r.passed);
    REQUIRE(r.counterexample);
    CHECK(r.counterexample->indices == std::vector<composition>{{1}, {1}});
}

TEST_CASE("named characters agree with their oracles")
{
    check_agrees(builtin(builtin_kind::type_one), type_one_oracle, 8);
    check_agrees(builtin(builtin_kind::type_two), type_two_oracle, 8);
    check_agrees(builtin(builtin_kind::even_odd), even_odd_oracle, 8);
    check_agrees(builtin(builtin_kind::combinatorial), combinatorial_oracle, 8);
    check_agrees(builtin(builtin_kind::reverse_combinatorial), reverse_combinatorial_oracle, 8);
}

TEST_CASE("builtin examples")
{
    CHECK(builtin(builtin_kind::type_one)(composition{1, 2}) == q(2, 3));
    CHECK(builtin(builtin_kind::even_odd)(composition{2, 1}) == 1);
    CHECK(builtin(builtin_kind::even_odd)(composition{1, 2}) == 0);
    CHECK(builtin(builtin_kind::combinatorial)(composition{1, 2}) == 0);
    CHECK(builtin(builtin_kind::combinatorial)(composition{2, 1}) == 1);
    CHECK(builtin(builtin_kind::combinatorial)(composition{1, 1}) == q(1, 2));
    CHECK(builtin(builtin_kind::reverse_combinatorial)(composition{1, 2}) == 1);
    CHECK(builtin(builtin_kind::type_one)(composition{}) == 1);
}

TEST_CASE("every construction is a shuffle character up to degree 8")
{
    for (auto kind : {builtin_kind::type_one, builtin_kind::type_two, builtin_kind::even_odd,
                      builtin_kind::combinatorial, builtin_kind::reverse_combinatorial}) {
        const character_data f = builtin(kind);
        CHECK(is_shuffle_character(f, 8));
        CHECK(is_normalized(f, 8));
    }
    auto &g = testing::rng();
    for (int trial = 0; trial < 3; ++trial) {
        CHECK(is_shuffle_character(testing::random_prefix_sum_character(g), 8));
        CHECK(is_shuffle_character(testing::order_character_from(testing::random_order(g, 8)), 8));
    }
    const character_data f_even = normalize(prefix_sum_character([](int n) { return rational(n); }));
    CHECK(is_shuffle_character(builtin(builtin_kind::even_odd, f_even), 8));
}

TEST_CASE("normalize examples")
{
    const character_data type_one_raw = prefix_sum_character([](int n) { return rational(n); });
    CHECK_FALSE(is_normalized(type_one_raw, 3));
    check_agrees(normalize(type_one_raw), type_one_oracle, 7);

    const character_data already = builtin(builtin_kind::type_two);
    check_agrees(normalize(already), type_two_oracle, 6);

    const character_data scaled = from_values([](const composition &a) -> rational {
        return rational(integer(1) << static_cast<unsigned>(a.length())) * inverse_factorial(a.length());
    });
    check_agrees(normalize(scaled), type_two_oracle, 6);

    const character_data singular = from_values([](const composition &a) {
        return a == composition{2} ? rational(0) : rational(1);
    });
    CHECK_THROWS_AS(normalize(singular, 3), singular_character);
}

TEST_CASE("f_to_g examples")
{
    const infinitesimal_data g2 = f_to_g(builtin(builtin_kind::type_two));
    const infinitesimal_data g1 = f_to_g(builtin(builtin_kind::type_one));
    for (const auto &a : compositions_up_to(6)) {
        if (a.empty()) {
            CHECK(g2(a) == 0);
            continue;
        }
        const int sign = a.length() % 2 == 1 ? 1 : -1;
        CHECK(g2(a) == rational(sign) / rational(static_cast<long>(a.length())));
        CHECK(g1(a) == make_rational(sign * a[a.length() - 1], a.size()));
    }

    const character_data diagonal_only = from_values([](const composition &a) {
        return a.length() == 1 ? rational(1) : rational(0);
    });
    const infinitesimal_data gd = f_to_g(diagonal_only);
    CHECK(gd(composition{3}) == 1);
    CHECK(gd(composition{1, 2}) == 0);
    CHECK(gd(composition{2, 1, 1}) == 0);

    const character_data singular = from_values([](const composition &a) {
        return a == composition{1} ? rational(0) : rational(1);
    });
    CHECK_THROWS_AS(f_to_g(singular, 3), singular_character);
}

TEST_CASE("f_to_g agrees with dense elimination")
{
    auto &g = testing::rng();
    const character_data random_f = testing::random_prefix_sum_character(g);
    for (const auto &f : {builtin(builtin_kind::even_odd), builtin(builtin_kind::combinatorial), random_f}) {
        const infinitesimal_data solved = f_to_g(f);
        for (const auto &a : compositions_up_to(5)) {
            if (!a.empty()) {
                CHECK(solved(a) == g_by_dense_solve(f, a));
            }
        }
    }
}

TEST_CASE("g_to_f examples and round trips")
{
    check_agrees(g_to_f(f_to_g(builtin(builtin_kind::type_two))), type_two_oracle, 7);

    const infinitesimal_data g_diag(composition_function([](const composition &a) {
        return a.length() == 1 ? rational(1) : rational(0);
    }));
    const character_data fd = g_to_f(g_diag);
    CHECK(fd(composition{4}) == 1);
    CHECK(fd(composition{1, 3}) == 0);

    for (auto kind : {builtin_kind::type_one, builtin_kind::type_two, builtin_kind::even_odd,
                      builtin_kind::combinatorial, builtin_kind::reverse_combinatorial}) {
        const character_data f = builtin(kind);
        const character_data back = g_to_f(f_to_g(f, 7), 7);
        for (const auto &a : compositions_up_to(7)) {
            CHECK(back(a) == f(a));
        }
    }

    // Nonsingular but otherwise random g.
    auto &rg = testing::rng();
    auto values = std::make_shared<std::map<composition, rational>>();
    for (const auto &a : compositions_up_to(6)) {
        if (!a.empty()) {
            (*values)[a] = a.length() == 1 ? testing::random_rational(rg, 5, true) : testing::random_rational(rg);
        }
    }
    const infinitesimal_data g(composition_function([values](const composition &a) { return values->at(a); }));
    const infinitesimal_data round = f_to_g(g_to_f(g, 6), 6);
    for (const auto &[a, v] : *values) {
        CHECK(round(a) == v);
    }
}

TEST_CASE("closed form g examples")
{
    CHECK(closed_form_g(closed_form_kind::type_one, composition{2, 1}) == q(-1, 3));
    CHECK(closed_form_g(closed_form_kind::type_two, composition{5}) == 1);
    CHECK(closed_form_g(closed_form_kind::even_odd_odd_sizes, composition{2, 1}) == -1);
    CHECK(f_to_g(builtin(builtin_kind::even_odd))(composition{2, 1}) == -1);
    CHECK_THROWS_AS(closed_form_g(closed_form_kind::even_odd_odd_sizes, composition{2, 2}), even_size_unsupported);
}

TEST_CASE("closed form g agrees with the triangular solve")
{
    const infinitesimal_data g1 = f_to_g(builtin(builtin_kind::type_one));
    const infinitesimal_data g2 = f_to_g(builtin(builtin_kind::type_two));
    const infinitesimal_data ge = f_to_g(builtin(builtin_kind::even_odd));
    for (const auto &a : compositions_up_to(7)) {
        if (a.empty()) {
            continue;
        }
        CHECK(g1(a) == closed_form_g(closed_form_kind::type_one, a));
        CHECK(g2(a) == closed_form_g(closed_form_kind::type_two, a));
        if (a.size() % 2 == 1) {
            CHECK(ge(a) == closed_form_g(closed_form_kind::even_odd_odd_sizes, a));
        }
    }
}

TEST_CASE("even-odd series coefficients")
{
    for (int m = 1; m <= 9; ++m) {
        CHECK(even_odd_series_coefficient(m) == (m % 2 == 0 ? 2 : -2));
    }
}

TEST_CASE("basis_expand examples")
{
    CHECK(basis_expand(builtin(builtin_kind::type_one), composition{2, 1}) == M({2, 1}) + M({3}, q(1, 3)));
    CHECK(basis_expand(builtin(builtin_kind::type_two), composition{4}) == M({4}));
    CHECK(basis_expand(builtin(builtin_kind::even_odd), composition{1, 2}) == M({1, 2}));
    CHECK(basis_expand(builtin(builtin_kind::type_one), composition{}) == M({}));
}

TEST_CASE("basis_contract examples")
{
    const infinitesimal_data g2 = f_to_g(builtin(builtin_kind::type_two));
    const graded_element c = basis_contract(g2, composition{1, 1});
    CHECK(c.basis_tag() == basis::shuffle_basis("type2"));
    CHECK(c.coefficient(composition{1, 1}) == 1);
    CHECK(c.coefficient(composition{2}) == q(-1, 2));
    CHECK(c.terms().size() == 2);
    CHECK(basis_contract(g2, composition{3}).terms() == term_map{{composition{3}, rational(1)}});
}

TEST_CASE("change of basis is unitriangular and expand then contract is the identity")
{
    for (auto kind : {builtin_kind::type_one, builtin_kind::type_two, builtin_kind::even_odd,
                      builtin_kind::combinatorial}) {
        const character_data f = builtin(kind);
        const infinitesimal_data g = f_to_g(f);
        const basis xb = basis::shuffle_basis(f.name());
        const basis pb = basis::power_sum(f.name());
        for (const auto &a : compositions_up_to(7)) {
            const graded_element xa = basis_expand(f, a);
            CHECK(xa.coefficient(a) == 1);
            for (const auto &[b, coef] : xa.terms()) {
                CHECK(b.size() == a.size());
                CHECK(refines(a, b));
            }
            CHECK(from_monomial(g, xa, xb) == graded_element(xb, a));
            CHECK(to_monomial(f, basis_contract(g, a)) == M(a));

            const graded_element pa = qps_expand(f, a);
            CHECK(pa.coefficient(a) == rational(aut(a)));
            CHECK(from_monomial(g, pa, pb) == graded_element(pb, a));
            CHECK(to_monomial(f, qps_contract(g, a)) == M(a));
        }
    }
}

TEST_CASE("qps_expand examples")
{
    CHECK(qps_expand(builtin(builtin_kind::type_one), composition{2, 1}) == M({2, 1}) + M({3}, q(1, 3)));
    CHECK(qps_expand(builtin(builtin_kind::type_two), composition{2, 1}) == M({2, 1}) + M({3}, q(1, 2)));
    CHECK(qps_expand(builtin(builtin_kind::combinatorial), composition{2, 1}) == M({2, 1}) + M({3}));
    CHECK(qps_expand(builtin(builtin_kind::combinatorial), composition{1, 2}) == M({1, 2}));
    CHECK(qps_expand(builtin(builtin_kind::type_two), composition{1, 1}) == M({1, 1}, 2) + M({2}));
    CHECK_THROWS_AS(qps_expand(prefix_sum_character([](int n) { return rational(n); }), composition{2}),
                    not_normalized);
}

TEST_CASE("power sum refinement in degree 3")
{
    const character_data f = builtin(builtin_kind::type_one);
    CHECK(qps_expand(f, composition{2, 1}) + qps_expand(f, composition{1, 2}) == power_sum(composition{2, 1}));
}

TEST_CASE("verify_qps passes for the named bases")
{
    for (auto kind : {builtin_kind::type_one, builtin_kind::type_two, builtin_kind::even_odd,
                      builtin_kind::combinatorial, builtin_kind::reverse_combinatorial}) {
        const qps_report r = verify_qps(builtin(kind), 6);
        CHECK(r.multiplication.passed);
        CHECK(r.comultiplication.passed);
        CHECK(r.refinement.passed);
        CHECK(r.passed());
    }
}

TEST_CASE("verify_qps rejects a perturbed character")
{
    const qps_report r = verify_qps(perturbed_type_two(), 4);
    CHECK_FALSE(r.multiplication.passed);
    REQUIRE(r.multiplication.counterexample);
    CHECK(r.multiplication.counterexample->indices == std::vector<composition>{{1}, {1}});
    CHECK_FALSE(r.passed());
}

TEST_CASE("prefix_sum_character examples")
{
    check_agrees(prefix_sum_character([](int n) { return rational(n); }),
                 [](const composition &a) -> rational { return rational(1) / rational(prefix_product(a)); }, 7);
    check_agrees(prefix_sum_character([](int) { return rational(1); }), type_two_oracle, 7);
    const character_data cancel = prefix_sum_character([](int n) { return n == 1 ? rational(1) : rational(-1); });
    CHECK(cancel(composition{2}) == -1);
    CHECK(cancel(composition{1, 1}) == q(1, 2));
    CHECK_THROWS_AS(cancel(composition{2, 1}), zero_prefix_sum);
    CHECK_THROWS_AS(cancel(composition{1, 2}), zero_prefix_sum);
}

TEST_CASE("ordered_partition_character examples")
{
    ordered_partition_spec even_odd;
    even_odd.classify = [](int n) { return n % 2; };
    even_odd.precedes = [](int a, int b) { return a == 0 && b == 1; };
    even_odd.default_character = inverse_length_factorial();
    check_agrees(ordered_partition_character(even_odd), even_odd_oracle, 7);

    ordered_partition_spec singletons;
    singletons.classify = [](int n) { return n; };
    singletons.precedes = [](int a, int b) { return a > b; };
    singletons.default_character = inverse_length_factorial();
    check_agrees(ordered_partition_character(singletons), combinatorial_oracle, 7);
    singletons.precedes = [](int a, int b) { return a < b; };
    check_agrees(ordered_partition_character(singletons), reverse_combinatorial_oracle, 7);

    ordered_partition_spec bounded = singletons;
    bounded.part_bound = 3;
    const character_data fb = ordered_partition_character(bounded);
    CHECK(fb(composition{1, 3}) == 1);
    CHECK_THROWS_AS(fb(composition{4}), degree_cap_exceeded);

    ordered_partition_spec bad = even_odd;
    bad.per_class[0] = from_values([](const composition &) { return rational(1); });
    bad.check_degree = 4;
    CHECK_THROWS_AS(ordered_partition_character(bad), not_a_shuffle_character);
}

TEST_CASE("ordered partition characters factor over classes")
{
    // Classes by residue mod 3, ordered 2 before 0 before 1, with distinct
    // characters per class.
    ordered_partition_spec spec;
    spec.classify = [](int n) { return n % 3; };
    const std::vector<int> rank{1, 2, 0};
    spec.precedes = [rank](int a, int b) {
        return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)];
    };
    spec.per_class[0] = builtin(builtin_kind::type_one);
    spec.per_class[1] = builtin(builtin_kind::type_two);
    spec.per_class[2] = builtin(builtin_kind::combinatorial);
    const character_data f = ordered_partition_character(spec, "mod3");
    CHECK(is_shuffle_character(f, 7));
    for (const auto &a : compositions_up_to(6)) {
        if (a.empty()) {
            continue;
        }
        if (!respects(spec, a)) {
            CHECK(f(a) == 0);
            continue;
        }
        rational expected = 1;
        for (int cls = 0; cls < 3; ++cls) {
            std::vector<int> restricted;
            for (std::size_t i = 0; i < a.length(); ++i) {
                if (a[i] % 3 == cls) {
                    restricted.push_back(a[i]);
                }
            }
            expected *= spec.per_class.at(cls)(composition(restricted));
        }
        CHECK(f(a) == expected);
    }
}

TEST_CASE("order_basis_character examples")
{
    check_agrees(order_basis_character([](int a, int b) { return a > b; }), combinatorial_oracle, 7);
    check_agrees(order_basis_character([](int a, int b) { return a < b; }), reverse_combinatorial_oracle, 7);
    const character_data custom = testing::order_character_from({2, 1, 3, 4});
    CHECK(custom(composition{2, 1}) == 1);
    CHECK(custom(composition{1, 2}) == 0);
    CHECK(custom(composition{2, 2, 1}) == q(1, 2));
    CHECK_THROWS_AS(custom(composition{5}), degree_cap_exceeded);
}

TEST_CASE("integrality examples")
{
    const integrality_report comb = check_integral_nonneg(builtin(builtin_kind::combinatorial), 7);
    CHECK(comb.passed());
    CHECK(comb.agree());

    const integrality_report t1 = check_integral_nonneg(builtin(builtin_kind::type_one), 3);
    CHECK_FALSE(t1.full.passed);
    CHECK_FALSE(t1.pointwise.passed);
    CHECK(t1.agree());
    REQUIRE(t1.full.counterexample);
    // The coefficient of M_3 in the type I P_(2,1) is not an integer.
    CHECK(qps_expand(builtin(builtin_kind::type_one), composition{2, 1}).coefficient(composition{3}) == q(1, 3));

    auto &g = testing::rng();
    for (int trial = 0; trial < 3; ++trial) {
        const integrality_report r = check_integral_nonneg(testing::order_character_from(testing::random_order(g, 6)), 6);
        CHECK(r.passed());
    }
}

TEST_CASE("integrality checks agree on the named bases")
{
    for (auto kind : {builtin_kind::type_one, builtin_kind::type_two, builtin_kind::even_odd,
                      builtin_kind::combinatorial, builtin_kind::reverse_combinatorial}) {
        CHECK(check_integral_nonneg(builtin(kind), 5).agree());
    }
}
