#ifndef QSH_POLYNOMIAL_HPP
#define QSH_POLYNOMIAL_HPP

#include <map>
#include <vector>

#include <qsh/element.hpp>
#include <qsh/rational.hpp>

namespace qsh
{

// Polynomial in a fixed number of commuting variables, keyed by exponent
// vectors. Used as the truncation oracle for quasisymmetric functions.
class polynomial
{
public:
    using exponents = std::vector<int>;

    explicit polynomial(int num_vars) : m_vars(num_vars) {}

    int num_vars() const noexcept
    {
        return m_vars;
    }
    const std::map<exponents, rational> &terms() const noexcept
    {
        return m_terms;
    }
    void add_term(const exponents &e, const rational &c);
    rational coefficient(const exponents &e) const;

    polynomial &operator+=(const polynomial &other);
    friend polynomial operator*(const polynomial &a, const polynomial &b);
    friend bool operator==(const polynomial &, const polynomial &) = default;

    // Substitute every variable by the same value.
    rational evaluate_all(const rational &value) const;

private:
    int m_vars;
    std::map<exponents, rational> m_terms;
};

// Substitutes x_{n+1} = x_{n+2} = ... = 0 into an element of the M basis.
polynomial expand_polynomial(const graded_element &h, int num_vars);

} // namespace qsh

#endif
