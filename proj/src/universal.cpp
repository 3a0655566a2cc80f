#include <qsh/universal.hpp>

namespace qsh
{

label_tensor<composition> qsym_provider::coproduct(const composition &a) const
{
    label_tensor<composition> r;
    for (std::size_t i = 0; i <= a.length(); ++i) {
        r.emplace(std::pair{a.slice(0, i), a.slice(i, a.length())}, rational(1));
    }
    return r;
}

namespace
{

label_element<composition> to_label_element(const composition_multiset &m)
{
    label_element<composition> r;
    for (const auto &[c, k] : m) {
        r.emplace(c, rational(static_cast<unsigned long>(k)));
    }
    return r;
}

} // namespace

label_element<composition> qsym_provider::product(const composition &a, const composition &b) const
{
    return to_label_element(quasi_shuffle(a, b));
}

label_element<composition> sh_provider::product(const composition &a, const composition &b) const
{
    return to_label_element(shuffle(a, b));
}

functional as_functional(const basis &b, const label_functional<composition> &phi)
{
    return functional(b, phi(composition{}), composition_function::body(phi));
}

functional canonical(canonical_name name)
{
    switch (name) {
        case canonical_name::zeta_q:
            return functional(basis::monomial(), 1,
                              [](const composition &a) { return rational(a.length() <= 1 ? 1 : 0); });
        case canonical_name::bar_zeta_q:
            return functional(basis::monomial(), 1, [](const composition &a) {
                if (a.length() > 1) {
                    return rational(0);
                }
                return rational(a.size() % 2 == 0 ? 1 : -1);
            });
        case canonical_name::xi_s:
            return functional(basis::shuffle_algebra(), 0,
                              [](const composition &a) { return rational(a.length() == 1 ? 1 : 0); });
        case canonical_name::nu_q:
            return functional(basis::monomial(), 1, [](const composition &a) {
                if (a.back() % 2 == 0) {
                    return rational(0);
                }
                return rational((a.size() + static_cast<int>(a.length())) % 2 == 0 ? 2 : -2);
            });
        case canonical_name::eta:
            return functional(basis::monomial(), conventions::last_part_of_empty, [](const composition &a) {
                return rational(a.length() % 2 == 1 ? a.back() : -a.back());
            });
        case canonical_name::counit:
            return functional::counit(basis::monomial());
    }
    throw std::invalid_argument("unknown canonical functional");
}

functional nu_via_convolution()
{
    return convolve(functional_inverse(canonical(canonical_name::bar_zeta_q)), canonical(canonical_name::zeta_q));
}

namespace
{

graded_element theta_monomial(const composition &c, const functional &nu)
{
    return universal_to_qsym(qsym_provider{}, on_labels(nu), c, precondition::trust);
}

graded_element theta_with_cache(const graded_element &h, const functional &nu,
                                std::map<composition, graded_element> &cache)
{
    graded_element r(basis::monomial());
    for (const auto &[c, q] : h.terms()) {
        auto it = cache.find(c);
        if (it == cache.end()) {
            it = cache.emplace(c, theta_monomial(c, nu)).first;
        }
        r += q * it->second;
    }
    return r;
}

} // namespace

graded_element theta(const graded_element &h)
{
    if (h.basis_tag().type() != basis::kind::monomial) {
        throw basis_mismatch("theta acts on the M basis, got " + h.basis_tag().tag());
    }
    const functional nu = canonical(canonical_name::nu_q);
    std::map<composition, graded_element> cache;
    return theta_with_cache(h, nu, cache);
}

check_result theta_eigencheck(const character_data &f_even, int max_degree)
{
    const character_data f = even_odd_character(f_even);
    const functional nu = canonical(canonical_name::nu_q);
    std::map<composition, graded_element> cache;
    std::size_t cases = 0;
    for (const auto &a : compositions_up_to(max_degree)) {
        ++cases;
        const graded_element xa = basis_expand(f, a);
        const graded_element image = theta_with_cache(xa, nu, cache);
        graded_element expected(basis::monomial());
        if (is_odd(a)) {
            expected = rational(integer(1) << static_cast<mp_bitcnt_t>(a.length())) * xa;
        }
        if (!(image == expected)) {
            return check_result::fail(witness{{a}, is_odd(a) ? "Theta(X_a) is not 2^l(a) X_a" : "Theta(X_a) is not 0"},
                                      cases);
        }
    }
    return check_result::pass(cases);
}

} // namespace qsh
