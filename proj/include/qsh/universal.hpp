#ifndef QSH_UNIVERSAL_HPP
#define QSH_UNIVERSAL_HPP

#include <concepts>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <qsh/characters.hpp>
#include <qsh/check.hpp>
#include <qsh/composition.hpp>
#include <qsh/element.hpp>
#include <qsh/functional.hpp>

namespace qsh
{

template <class L>
using label_element = std::map<L, rational>;
template <class L>
using label_tensor = std::map<std::pair<L, L>, rational>;
template <class L>
using label_functional = std::function<rational(const L &)>;
template <class L>
using label_tuples = std::map<std::vector<L>, rational>;

// A connected graded Hopf algebra of finite type, given on a basis of labels.
// product is only used to check the character predicates.
template <class H>
concept hopf_provider = requires(const H &h, const typename H::label_type &a, int n) {
    { h.basis_of_degree(n) } -> std::same_as<std::vector<typename H::label_type>>;
    { h.coproduct(a) } -> std::same_as<label_tensor<typename H::label_type>>;
    { h.counit(a) } -> std::same_as<rational>;
    { h.degree(a) } -> std::same_as<int>;
    { h.product(a, a) } -> std::same_as<label_element<typename H::label_type>>;
    { h.describe(a) } -> std::same_as<std::string>;
};

// QSym on the M basis.
struct qsym_provider {
    using label_type = composition;

    std::vector<composition> basis_of_degree(int n) const
    {
        return compositions_of(n);
    }
    label_tensor<composition> coproduct(const composition &a) const;
    rational counit(const composition &a) const
    {
        return a.empty() ? rational(1) : rational(0);
    }
    int degree(const composition &a) const
    {
        return a.size();
    }
    label_element<composition> product(const composition &a, const composition &b) const;
    std::string describe(const composition &a) const
    {
        return "M[" + to_string(a) + "]";
    }
};

// The shuffle algebra on the x basis.
struct sh_provider : qsym_provider {
    label_element<composition> product(const composition &a, const composition &b) const;
    std::string describe(const composition &a) const
    {
        return "x[" + to_string(a) + "]";
    }
};

// Label-level view of a functional on the M or x basis.
inline label_functional<composition> on_labels(const functional &phi)
{
    return [phi](const composition &c) { return phi(c); };
}

// Memoized functional on a primitive basis from label-level values.
functional as_functional(const basis &b, const label_functional<composition> &phi);

enum class canonical_name { zeta_q, bar_zeta_q, xi_s, nu_q, eta, counit };

// zeta_q, bar_zeta_q, nu_q, eta and counit live on the M basis; xi_s on x.
functional canonical(canonical_name name);

// bar_zeta_q^{-1} * zeta_q by inversion and convolution.
functional nu_via_convolution();

// Connectedness and gradedness of the provider up to max_degree.
template <hopf_provider H>
check_result check_connected(const H &h, int max_degree)
{
    std::size_t cases = 0;
    const auto units = h.basis_of_degree(0);
    ++cases;
    if (units.size() != 1 || h.counit(units.front()) != 1) {
        return check_result::fail(witness{{}, "degree 0 must be spanned by a unit with counit 1"}, cases);
    }
    for (int n = 1; n <= max_degree; ++n) {
        for (const auto &a : h.basis_of_degree(n)) {
            ++cases;
            if (h.counit(a) != 0) {
                return check_result::fail(witness{{}, "counit is nonzero on " + h.describe(a)}, cases);
            }
            for (const auto &[k, c] : h.coproduct(a)) {
                if (h.degree(k.first) + h.degree(k.second) != n) {
                    return check_result::fail(witness{{}, "coproduct of " + h.describe(a) + " is not graded"}, cases);
                }
            }
        }
    }
    return check_result::pass(cases);
}

namespace detail
{

template <class L>
void add_to(std::map<L, rational> &m, const L &key, const rational &value)
{
    if (value == 0) {
        return;
    }
    auto [it, inserted] = m.try_emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) {
            m.erase(it);
        }
    }
}

} // namespace detail

// Component of the iterated coproduct of a in multidegree alpha, splitting
// the last factor left to right.
template <hopf_provider H>
label_tuples<typename H::label_type> delta_alpha(const H &h, const typename H::label_type &a, const composition &alpha)
{
    using L = typename H::label_type;
    if (h.degree(a) != alpha.size()) {
        throw degree_mismatch("label " + h.describe(a) + " has degree " + std::to_string(h.degree(a)) +
                              ", multidegree " + to_string(alpha) + " has size " + std::to_string(alpha.size()));
    }
    label_tuples<L> current;
    if (alpha.empty()) {
        detail::add_to(current, std::vector<L>{}, h.counit(a));
        return current;
    }
    current.emplace(std::vector<L>{a}, rational(1));
    for (std::size_t i = 0; i + 1 < alpha.length(); ++i) {
        label_tuples<L> next;
        for (const auto &[tuple, c] : current) {
            for (const auto &[k, d] : h.coproduct(tuple.back())) {
                if (h.degree(k.first) != alpha[i]) {
                    continue;
                }
                std::vector<L> longer(tuple.begin(), tuple.end() - 1);
                longer.push_back(k.first);
                longer.push_back(k.second);
                detail::add_to(next, longer, rational(c * d));
            }
        }
        current = std::move(next);
    }
    return current;
}

// (Delta (x) id) Delta = (id (x) Delta) Delta on every label of degree <= max_degree.
template <hopf_provider H>
check_result check_coassociative(const H &h, int max_degree)
{
    using L = typename H::label_type;
    std::size_t cases = 0;
    for (int n = 0; n <= max_degree; ++n) {
        for (const auto &a : h.basis_of_degree(n)) {
            ++cases;
            label_tuples<L> left;
            label_tuples<L> right;
            for (const auto &[k, c] : h.coproduct(a)) {
                for (const auto &[k2, d] : h.coproduct(k.first)) {
                    detail::add_to(left, std::vector<L>{k2.first, k2.second, k.second}, rational(c * d));
                }
                for (const auto &[k2, d] : h.coproduct(k.second)) {
                    detail::add_to(right, std::vector<L>{k.first, k2.first, k2.second}, rational(c * d));
                }
            }
            if (left != right) {
                return check_result::fail(witness{{}, "coproduct is not coassociative at " + h.describe(a)}, cases);
            }
        }
    }
    return check_result::pass(cases);
}

namespace detail
{

// Calls visit(a, b) on all pairs of positive-degree labels with total
// degree <= max_degree; stops at the first false.
template <hopf_provider H, class Visit>
bool for_each_label_pair(const H &h, int max_degree, std::size_t &cases, Visit &&visit)
{
    for (int total = 2; total <= max_degree; ++total) {
        for (int da = 1; da < total; ++da) {
            const auto left = h.basis_of_degree(da);
            const auto right = h.basis_of_degree(total - da);
            for (const auto &a : left) {
                for (const auto &b : right) {
                    ++cases;
                    if (!visit(a, b)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

template <class L, class F>
rational apply(const F &phi, const label_element<L> &h)
{
    rational r = 0;
    for (const auto &[a, c] : h) {
        r += c * phi(a);
    }
    return r;
}

} // namespace detail

// Multiplicativity on pairs of total degree <= max_degree, then the unit.
template <hopf_provider H, class F>
check_result is_character(const H &h, const F &phi, int max_degree)
{
    std::size_t cases = 0;
    std::string bad;
    detail::for_each_label_pair(h, max_degree, cases, [&](const auto &a, const auto &b) {
        const rational lhs = detail::apply(phi, h.product(a, b));
        const rational rhs = phi(a) * phi(b);
        if (lhs != rhs) {
            bad = "value on " + h.describe(a) + " * " + h.describe(b) + " is " + to_string(lhs) + ", expected " +
                  to_string(rhs);
            return false;
        }
        return true;
    });
    if (!bad.empty()) {
        return check_result::fail(witness{{}, bad}, cases);
    }
    ++cases;
    const auto unit = h.basis_of_degree(0).front();
    if (phi(unit) != 1) {
        return check_result::fail(witness{{}, "value at the unit is " + to_string(phi(unit))}, cases);
    }
    return check_result::pass(cases);
}

// Vanishing at the unit, then on products of positive-degree labels.
template <hopf_provider H, class F>
check_result is_infinitesimal_character(const H &h, const F &phi, int max_degree)
{
    std::size_t cases = 1;
    const auto unit = h.basis_of_degree(0).front();
    if (phi(unit) != 0) {
        return check_result::fail(witness{{}, "value at the unit is " + to_string(phi(unit))}, cases);
    }
    std::string bad;
    detail::for_each_label_pair(h, max_degree, cases, [&](const auto &a, const auto &b) {
        const rational value = detail::apply(phi, h.product(a, b));
        if (value != 0) {
            bad = "value on " + h.describe(a) + " * " + h.describe(b) + " is " + to_string(value);
            return false;
        }
        return true;
    });
    if (!bad.empty()) {
        return check_result::fail(witness{{}, bad}, cases);
    }
    return check_result::pass(cases);
}

// Whether the universal maps verify their functional argument up to the
// degree of the input before use.
enum class precondition { check, trust };

namespace detail
{

template <hopf_provider H>
int max_label_degree(const H &h, const label_element<typename H::label_type> &x)
{
    int n = 0;
    for (const auto &[a, c] : x) {
        n = std::max(n, h.degree(a));
    }
    return n;
}

// sum over alpha |= deg(a) of phi^{(x) l(alpha)} Delta_alpha(a) weight(alpha).
template <hopf_provider H, class F, class Weight>
void universal_terms(const H &h, const F &phi, const typename H::label_type &a, Weight &&weight)
{
    for (const auto &alpha : compositions_of(h.degree(a))) {
        rational total = 0;
        for (const auto &[tuple, c] : delta_alpha(h, a, alpha)) {
            rational term = c;
            for (const auto &block : tuple) {
                term *= phi(block);
                if (term == 0) {
                    break;
                }
            }
            total += term;
        }
        if (total != 0) {
            weight(alpha, total);
        }
    }
}

} // namespace detail

// Phi(h) = sum_alpha (zeta^{(x) l(alpha)} Delta_alpha(h)) M_alpha.
template <hopf_provider H, class F>
graded_element universal_to_qsym(const H &h, const F &zeta, const label_element<typename H::label_type> &x,
                                 precondition pre = precondition::check)
{
    if (pre == precondition::check) {
        const auto r = is_character(h, zeta, detail::max_label_degree(h, x));
        if (!r.passed) {
            throw not_a_character(describe(r));
        }
    }
    graded_element out(basis::monomial());
    for (const auto &[a, c] : x) {
        detail::universal_terms(h, zeta, a,
                                [&](const composition &alpha, const rational &v) { out.add_term(alpha, c * v); });
    }
    return out;
}

template <hopf_provider H, class F>
graded_element universal_to_qsym(const H &h, const F &zeta, const typename H::label_type &a,
                                 precondition pre = precondition::check)
{
    return universal_to_qsym(h, zeta, label_element<typename H::label_type>{{a, rational(1)}}, pre);
}

// Psi(h) = sum_alpha (xi^{(x) l(alpha)} Delta_alpha(h)) x_alpha.
template <hopf_provider H, class F>
graded_element universal_to_sh(const H &h, const F &xi, const label_element<typename H::label_type> &x,
                               precondition pre = precondition::check)
{
    if (pre == precondition::check) {
        const auto r = is_infinitesimal_character(h, xi, detail::max_label_degree(h, x));
        if (!r.passed) {
            throw not_an_infinitesimal_character(describe(r));
        }
    }
    graded_element out(basis::shuffle_algebra());
    for (const auto &[a, c] : x) {
        // The degree 0 part of Psi is the counit; xi vanishes at the unit.
        if (h.degree(a) == 0) {
            out.add_term(composition{}, c * h.counit(a));
            continue;
        }
        detail::universal_terms(h, xi, a,
                                [&](const composition &alpha, const rational &v) { out.add_term(alpha, c * v); });
    }
    return out;
}

template <hopf_provider H, class F>
graded_element universal_to_sh(const H &h, const F &xi, const typename H::label_type &a,
                               precondition pre = precondition::check)
{
    return universal_to_sh(h, xi, label_element<typename H::label_type>{{a, rational(1)}}, pre);
}

// zeta(h) = sum_alpha (xi^{(x) l} Delta_alpha(h)) f(alpha).
template <hopf_provider H, class F>
label_functional<typename H::label_type> infchar_to_char(const H &h, const F &xi, const character_data &f)
{
    return [h, xi, f](const typename H::label_type &a) {
        if (h.degree(a) == 0) {
            return h.counit(a);
        }
        rational r = 0;
        detail::universal_terms(h, xi, a, [&](const composition &alpha, const rational &v) { r += v * f(alpha); });
        return r;
    };
}

// xi(h) = sum_alpha (zeta^{(x) l} Delta_alpha(h)) g(alpha) with g = f_to_g(f).
template <hopf_provider H, class F>
label_functional<typename H::label_type> char_to_infchar(const H &h, const F &zeta, const character_data &f)
{
    const infinitesimal_data g = f_to_g(f);
    return [h, zeta, g](const typename H::label_type &a) {
        rational r = 0;
        if (h.degree(a) == 0) {
            return r;
        }
        detail::universal_terms(h, zeta, a, [&](const composition &alpha, const rational &v) { r += v * g(alpha); });
        return r;
    };
}

// Theta(h) = sum_alpha (nu_q^{(x) l} Delta_alpha(h)) M_alpha on the M basis,
// through the universal formula on the QSym provider.
graded_element theta(const graded_element &h);

// Theta(X_a) = 2^{l(a)} X_a for odd a and 0 otherwise, where X is the shuffle
// basis of the even-odd character with f_even on even parts.
check_result theta_eigencheck(const character_data &f_even, int max_degree);

} // namespace qsh

#endif
