#include <qsh/polynomial.hpp>
#include <qsh/universal.hpp>

#include "test_support.hpp"

using namespace qsh;
using qsh::testing::q;

namespace
{

// M_a in n variables by summing over increasing index tuples directly.
polynomial monomial_by_indices(const composition &a, int n)
{
    polynomial out(n);
    const std::size_t l = a.length();
    if (l == 0) {
        out.add_term(polynomial::exponents(static_cast<std::size_t>(n), 0), 1);
        return out;
    }
    std::vector<int> idx(l);
    auto place = [&](auto &&self, std::size_t k, int start) -> void {
        if (k == l) {
            polynomial::exponents e(static_cast<std::size_t>(n), 0);
            for (std::size_t i = 0; i < l; ++i) {
                e[static_cast<std::size_t>(idx[i])] = a[i];
            }
            out.add_term(e, 1);
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[k] = i;
            self(self, k + 1, i + 1);
        }
    };
    place(place, 0, 0);
    return out;
}

// Element built from a random selection of compositions up to max_degree.
graded_element random_element(std::mt19937 &g, const basis &b, int max_degree)
{
    graded_element h(b);
    std::bernoulli_distribution keep(0.3);
    for (const auto &c : compositions_up_to(max_degree)) {
        if (keep(g)) {
            h.add_term(c, testing::random_rational(g));
        }
    }
    return h;
}

functional xi_s()
{
    return canonical(canonical_name::xi_s);
}

} // namespace

TEST_CASE("elements prune zero coefficients")
{
    graded_element h = M({2, 1}, 3) + M({1}, 1);
    h -= M({2, 1}, 3);
    CHECK(h == M({1}));
    CHECK(h.terms().size() == 1);
    CHECK((M({1}) - M({1})).is_zero());
    CHECK(M({2}, 0).is_zero());
    const graded_element mixed = M({1}) + M({2, 1}) + M({3});
    CHECK(mixed.homogeneous_part(3) == M({2, 1}) + M({3}));
    CHECK(mixed.max_degree() == 3);
    CHECK(graded_element().max_degree() == -1);
    CHECK_THROWS_AS(M({1}) + x({1}), basis_mismatch);
}

TEST_CASE("product examples")
{
    CHECK(product(x({1, 2}), x({2})) == x({1, 2, 2}, 2) + x({2, 1, 2}));
    CHECK(product(M({}), M({2, 1})) == M({2, 1}));
    CHECK(product(M({2}), M({1})) == M({2, 1}) + M({1, 2}) + M({3}));
    CHECK_THROWS_AS(product(M({1}), x({1})), basis_mismatch);
    CHECK_THROWS_AS(product(graded_element(basis::power_sum("type1"), composition{1}), M({1})), basis_mismatch);
}

TEST_CASE("coproduct examples")
{
    const tensor_element d = coproduct(x({3, 1}));
    tensor_element expected(basis::shuffle_algebra());
    expected.add_term({}, {3, 1}, 1);
    expected.add_term({3}, {1}, 1);
    expected.add_term({3, 1}, {}, 1);
    CHECK(d == expected);

    tensor_element unit(basis::monomial());
    unit.add_term({}, {}, 1);
    CHECK(coproduct(M({})) == unit);

    tensor_element m12(basis::monomial());
    m12.add_term({}, {1, 2}, 1);
    m12.add_term({1}, {2}, 1);
    m12.add_term({1, 2}, {}, 1);
    CHECK(coproduct(M({1, 2})) == m12);
    CHECK_THROWS_AS(coproduct(graded_element(basis::power_sum("type1"), composition{1})), basis_mismatch);
}

TEST_CASE("delta_alpha examples")
{
    const auto split = delta_alpha(M({1, 2, 1}), composition{3, 1});
    REQUIRE(split.size() == 1);
    CHECK(split[0].first == block_tuple{{1, 2}, {1}});
    CHECK(split[0].second == 1);

    const auto whole = delta_alpha(M({2}), composition{2});
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].first == block_tuple{{2}});

    // With one block the iterated coproduct is the identity.
    const auto single = delta_alpha(M({1, 1}), composition{2});
    REQUIRE(single.size() == 1);
    CHECK(single[0].first == block_tuple{{1, 1}});
    CHECK(delta_alpha(M({1, 1}), composition{1, 1}).size() == 1);
    CHECK(delta_alpha(M({2}), composition{1, 1}).empty());
    CHECK_THROWS_AS(delta_alpha(M({1, 1}), composition{3}), degree_mismatch);
}

TEST_CASE("delta_alpha agrees with the provider version")
{
    const qsym_provider qp;
    for (const auto &c : compositions_up_to(6)) {
        for (const auto &alpha : compositions_of(c.size())) {
            label_tuples<composition> from_element;
            for (const auto &[t, coef] : delta_alpha(M(c), alpha)) {
                from_element[t] += coef;
            }
            CHECK(from_element == delta_alpha(qp, c, alpha));
        }
    }
}

TEST_CASE("antipode examples")
{
    CHECK(antipode_shuffle(x({3, 1})) == x({1, 3}));
    CHECK(antipode_shuffle(x({})) == x({}));
    CHECK(antipode_shuffle(x({2})) == -x({2}));
    CHECK_THROWS_AS(antipode_shuffle(M({2})), basis_mismatch);

    CHECK(antipode_monomial(M({})) == M({}));
    CHECK(antipode_monomial(M({1})) == -M({1}));
    CHECK(antipode_monomial(M({1, 1})) == M({1, 1}) + M({2}));
    CHECK(antipode_left_convolution(M({1, 1})).is_zero());
}

TEST_CASE("antipode axiom holds in both bases")
{
    for (const auto &b : {basis::monomial(), basis::shuffle_algebra()}) {
        for (const auto &c : compositions_up_to(6)) {
            const graded_element h(b, c);
            const graded_element expected(b, composition{}, counit(h));
            CHECK(antipode_left_convolution(h) == expected);
            CHECK(antipode_right_convolution(h) == expected);
        }
    }
}

TEST_CASE("shuffle antipode closed form agrees with the recursion")
{
    for (const auto &c : compositions_up_to(7)) {
        CHECK(antipode_shuffle(x(c)) == antipode_recursive(x(c)));
    }
}

TEST_CASE("coproduct is coassociative")
{
    for (const auto &b : {basis::monomial(), basis::shuffle_algebra()}) {
        for (const auto &c : compositions_up_to(6)) {
            const graded_element h(b, c);
            std::map<std::vector<composition>, rational> left;
            std::map<std::vector<composition>, rational> right;
            const tensor_element once = coproduct(h);
            for (const auto &[k, coef] : once.terms()) {
                const tensor_element first = coproduct(graded_element(b, k.first));
                for (const auto &[k2, d] : first.terms()) {
                    left[{k2.first, k2.second, k.second}] += coef * d;
                }
                const tensor_element second = coproduct(graded_element(b, k.second));
                for (const auto &[k2, d] : second.terms()) {
                    right[{k.first, k2.first, k2.second}] += coef * d;
                }
            }
            CHECK(left == right);
            CHECK(left == iterated_coproduct(h, 3));
        }
    }
}

TEST_CASE("bialgebra compatibility")
{
    for (const auto &b : {basis::monomial(), basis::shuffle_algebra()}) {
        for (int total = 0; total <= 5; ++total) {
            for (int da = 0; da <= total; ++da) {
                for (const auto &a : compositions_of(da)) {
                    for (const auto &c : compositions_of(total - da)) {
                        const graded_element ha(b, a);
                        const graded_element hc(b, c);
                        CHECK(coproduct(product(ha, hc)) == tensor_product(coproduct(ha), coproduct(hc)));
                    }
                }
            }
        }
    }
}

TEST_CASE("product is associative and commutative")
{
    auto &g = testing::rng();
    for (const auto &b : {basis::monomial(), basis::shuffle_algebra()}) {
        for (int trial = 0; trial < 10; ++trial) {
            const graded_element a = random_element(g, b, 2);
            const graded_element c = random_element(g, b, 2);
            const graded_element d = random_element(g, b, 2);
            CHECK(product(a, c) == product(c, a));
            CHECK(product(product(a, c), d) == product(a, product(c, d)));
        }
    }
}

TEST_CASE("convolution examples")
{
    const functional eps = functional::counit(basis::monomial());
    const functional zeta = canonical(canonical_name::zeta_q);
    CHECK(functionals_agree(convolve(eps, zeta), zeta, 6));
    CHECK(convolve(zeta, zeta)(composition{1}) == 2);
    CHECK(convolve(xi_s(), xi_s())(composition{1, 1}) == 1);
    CHECK(convolve(zeta, zeta).at_empty() == 1);
}

TEST_CASE("convolution is associative")
{
    auto &g = testing::rng();
    const basis m = basis::monomial();
    const functional a = testing::random_functional(g, m, testing::random_rational(g), 5);
    const functional b = testing::random_functional(g, m, testing::random_rational(g), 5);
    const functional c = testing::random_functional(g, m, testing::random_rational(g), 5);
    CHECK(functionals_agree(convolve(convolve(a, b), c), convolve(a, convolve(b, c)), 5));
}

TEST_CASE("functional_inverse examples")
{
    const functional eps = functional::counit(basis::monomial());
    CHECK(functionals_agree(functional_inverse(eps), eps, 6));

    const functional zeta = canonical(canonical_name::zeta_q);
    const functional inv = functional_inverse(zeta);
    for (const auto &c : compositions_up_to(6)) {
        CHECK(inv(c) == zeta(antipode_monomial(M(c))));
    }

    const functional shifted = xi_s() + functional::counit(basis::shuffle_algebra());
    const functional shifted_inv = functional_inverse(shifted);
    CHECK(functionals_agree(convolve(shifted_inv, shifted), functional::counit(basis::shuffle_algebra()), 6));
    CHECK(functionals_agree(convolve(shifted, shifted_inv), functional::counit(basis::shuffle_algebra()), 6));

    CHECK_THROWS_AS(functional_inverse(xi_s()), not_invertible);
}

TEST_CASE("inverse of a character is the character after the antipode")
{
    const functional zeta_sh = testing::order_character_from({1, 2, 3, 4, 5, 6}).as_shuffle_functional();
    const functional inv = functional_inverse(zeta_sh);
    for (const auto &c : compositions_up_to(6)) {
        CHECK(inv(c) == zeta_sh(antipode_shuffle(x(c))));
    }
}

TEST_CASE("exp and log examples")
{
    const functional zero = functional::zero(basis::monomial());
    CHECK(functionals_agree(exp_functional(zero, 6), functional::counit(basis::monomial()), 6));
    CHECK(exp_functional(xi_s(), 4)(composition{1, 1}) == q(1, 2));
    CHECK_THROWS_AS(exp_functional(canonical(canonical_name::zeta_q), 4), nonvanishing_at_empty);
    CHECK_THROWS_AS(exp_functional(xi_s(), 3)(composition{2, 2}), degree_cap_exceeded);

    CHECK(functionals_agree(log_functional(functional::counit(basis::monomial()), 6), zero, 6));
    CHECK(log_functional(canonical(canonical_name::zeta_q), 4)(composition{1, 1}) == q(-1, 2));
    CHECK_THROWS_AS(log_functional(xi_s(), 4), wrong_value_at_empty);

    const functional g2 = f_to_g(builtin(builtin_kind::type_two)).as_monomial_functional();
    CHECK(functionals_agree(exp_functional(g2, 6), canonical(canonical_name::zeta_q), 6));
}

TEST_CASE("exp and log are mutually inverse")
{
    auto &g = testing::rng();
    for (int trial = 0; trial < 3; ++trial) {
        const functional xi = testing::random_functional(g, basis::monomial(), 0, 6);
        CHECK(functionals_agree(log_functional(exp_functional(xi, 6), 6), xi, 6));
        const functional zeta = testing::random_functional(g, basis::shuffle_algebra(), 1, 6);
        CHECK(functionals_agree(exp_functional(log_functional(zeta, 6), 6), zeta, 6));
    }
}

TEST_CASE("lie bracket examples")
{
    const functional xi = xi_s();
    CHECK(functionals_agree(lie_bracket(xi, xi), functional::zero(basis::shuffle_algebra()), 6));
    const functional reweighted(basis::shuffle_algebra(), 0, [xi](const composition &c) -> rational {
        return xi(c) * rational(integer(1) << static_cast<unsigned>(c.size()));
    });
    const functional bracket = lie_bracket(xi, reweighted);
    CHECK(bracket(composition{1, 2}) == 2);
    CHECK(bracket(composition{2, 1}) == -2);
}

TEST_CASE("lie bracket of infinitesimal characters is infinitesimal")
{
    auto &g = testing::rng();
    const functional a = testing::random_infinitesimal_character(g);
    const functional b = testing::random_infinitesimal_character(g);
    REQUIRE(is_infinitesimal_character(a, 6));
    REQUIRE(is_infinitesimal_character(b, 6));
    CHECK(is_infinitesimal_character(lie_bracket(a, b), 6));
}

TEST_CASE("character predicates")
{
    CHECK(is_character(canonical(canonical_name::zeta_q), 6));
    const check_result r = is_character(xi_s(), 2);
    CHECK_FALSE(r.passed);
    REQUIRE(r.counterexample);
    CHECK(r.counterexample->indices == std::vector<composition>{{1}, {1}});
    CHECK(is_character(functional::counit(basis::monomial()), 6));

    CHECK(is_infinitesimal_character(xi_s(), 8));
    CHECK(is_infinitesimal_character(canonical(canonical_name::eta), 6));
    const check_result z = is_infinitesimal_character(canonical(canonical_name::zeta_q), 4);
    CHECK_FALSE(z.passed);
    REQUIRE(z.counterexample);
    CHECK(z.counterexample->indices == std::vector<composition>{composition{}});
}

TEST_CASE("expand_polynomial examples")
{
    polynomial squares(2);
    squares.add_term({2, 0}, 1);
    squares.add_term({0, 2}, 1);
    CHECK(expand_polynomial(M({2}), 2) == squares);
    CHECK(expand_polynomial(M({1, 1}), 1) == polynomial(1));
    CHECK(expand_polynomial(product(M({1}), M({1})), 3) == expand_polynomial(M({1, 1}, 2) + M({2}), 3));
    CHECK(expand_polynomial(M({2, 1}), 3).evaluate_all(1) == 3);
}

TEST_CASE("expand_polynomial agrees with index enumeration")
{
    for (const auto &c : compositions_up_to(5)) {
        for (int n = 0; n <= 4; ++n) {
            CHECK(expand_polynomial(M(c), n) == monomial_by_indices(c, n));
        }
    }
}

TEST_CASE("quasi-shuffle product agrees with polynomial multiplication")
{
    for (int total = 0; total <= 6; ++total) {
        for (int da = 0; da <= total; ++da) {
            for (const auto &a : compositions_of(da)) {
                for (const auto &b : compositions_of(total - da)) {
                    // Enough variables that the truncation is faithful.
                    const int n = static_cast<int>(a.length() + b.length());
                    CHECK(expand_polynomial(product(M(a), M(b)), n) ==
                          monomial_by_indices(a, n) * monomial_by_indices(b, n));
                }
            }
        }
    }
}

TEST_CASE("power_sum examples")
{
    CHECK(power_sum(composition{4}) == M({4}));
    CHECK(power_sum(composition{2, 1}) == M({2, 1}) + M({1, 2}) + M({3}));
    CHECK(power_sum(composition{1, 1}) == M({1, 1}, 2) + M({2}));
    CHECK_THROWS_AS(power_sum(composition{1, 2}), not_a_partition);
}

TEST_CASE("element JSON and text round trips")
{
    const graded_element h = M({2, 1}) + M({3}, q(1, 3)) + M({}, q(-2, 5));
    const json j = element_to_json(h);
    CHECK(j["basis"] == "M");
    CHECK(j["terms"][0]["comp"] == json::array());
    CHECK(j["terms"][0]["coef"] == "-2/5");
    CHECK(element_from_json(j) == h);
    CHECK(format_element(M({2, 1}) + M({3}, q(1, 3))) == "M[2,1] + 1/3 M[3]");
    CHECK(format_element(graded_element()) == "0");
    CHECK(parse_element("M[2,1] + 1/3 M[3]", basis::monomial()) == M({2, 1}) + M({3}, q(1, 3)));
    CHECK(parse_element("0", basis::monomial()).is_zero());
    CHECK_THROWS_AS(parse_element("x[1]", basis::monomial()), parse_error);

    const json loose = json::parse(R"({"basis":"x","terms":[{"comp":"1,2","coef":3}]})");
    CHECK(element_from_json(loose) == x({1, 2}, 3));

    auto &g = testing::rng();
    for (const auto &b : {basis::monomial(), basis::shuffle_algebra(), basis::power_sum("type1")}) {
        for (int trial = 0; trial < 20; ++trial) {
            const graded_element r = random_element(g, b, 4);
            CHECK(element_from_json(element_to_json(r)) == r);
            CHECK(parse_element(format_element(r), b) == r);
        }
    }
}

TEST_CASE("rational helpers")
{
    CHECK(to_string(q(-6, 4)) == "-3/2");
    CHECK(to_string(q(4, 2)) == "2");
    CHECK(parse_rational("-3/6") == q(-1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational("1.5"), parse_error);
    CHECK(make_rational(integer(4), integer(-6)) == q(-2, 3));
    CHECK(make_rational(integer(4), integer(-6)).get_den() == 3);
}
