#ifndef QSH_FUNCTIONAL_HPP
#define QSH_FUNCTIONAL_HPP

#include <functional>
#include <memory>

#include <qsh/check.hpp>
#include <qsh/composition.hpp>
#include <qsh/element.hpp>
#include <qsh/rational.hpp>

namespace qsh
{

// A memoized rational-valued function on compositions. Copies share the
// cache. Evaluation is safe from several threads: values are computed outside
// the lock and inserted idempotently.
//
// A recursive body receives the function itself as its second argument, so
// triangular solves can call back into the memo without an ownership cycle.
class composition_function
{
public:
    using body = std::function<rational(const composition &)>;
    using recursive_body = std::function<rational(const composition &, const composition_function &)>;

    composition_function();
    explicit composition_function(body fn);
    static composition_function recursive(recursive_body fn);

    rational operator()(const composition &c) const;

    std::size_t cached_count() const;

private:
    struct state;
    std::shared_ptr<state> m_state;
};

// Linear functional on a deconcatenation basis (M or x): a value at the empty
// composition plus a function on nonempty compositions.
class functional
{
public:
    functional(basis b, rational at_empty, composition_function on_nonempty)
        : m_basis(std::move(b)), m_at_empty(std::move(at_empty)), m_on_nonempty(std::move(on_nonempty))
    {
    }
    functional(basis b, rational at_empty, composition_function::body on_nonempty)
        : functional(std::move(b), std::move(at_empty), composition_function(std::move(on_nonempty)))
    {
    }

    const basis &basis_tag() const noexcept
    {
        return m_basis;
    }
    const rational &at_empty() const noexcept
    {
        return m_at_empty;
    }

    rational operator()(const composition &c) const
    {
        return c.empty() ? m_at_empty : m_on_nonempty(c);
    }
    rational operator()(const graded_element &h) const;

    static functional zero(basis b);
    static functional counit(basis b);

    friend functional operator+(const functional &a, const functional &b);
    friend functional operator-(const functional &a, const functional &b);
    friend functional operator*(const rational &s, const functional &a);

private:
    basis m_basis;
    rational m_at_empty;
    composition_function m_on_nonempty;
};

// (phi * psi)(b_gamma) = sum over deconcatenations gamma = ab of phi(b_a) psi(b_b).
functional convolve(const functional &phi, const functional &psi);

// Convolution inverse by recursion on degree. Throws not_invertible when the
// value at the empty composition is zero.
functional functional_inverse(const functional &zeta);

// sum_m xi^{*m} / m!. Evaluating above max_degree throws degree_cap_exceeded.
functional exp_functional(const functional &xi, int max_degree);

// sum_{m>=1} (-1)^{m-1}/m (zeta - eps)^{*m}.
functional log_functional(const functional &zeta, int max_degree);

functional lie_bracket(const functional &a, const functional &b);

// Unit and multiplicativity on all pairs of basis elements of total degree
// <= max_degree, using the product of the functional's basis.
check_result is_character(const functional &phi, int max_degree);

// Vanishing at the unit and on all products of positive-degree basis elements
// of total degree <= max_degree.
check_result is_infinitesimal_character(const functional &phi, int max_degree);

// Equality of two functionals on every composition of size <= max_degree.
check_result functionals_agree(const functional &a, const functional &b, int max_degree);

} // namespace qsh

#endif
