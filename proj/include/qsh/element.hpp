#ifndef QSH_ELEMENT_HPP
#define QSH_ELEMENT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <qsh/composition.hpp>
#include <qsh/rational.hpp>

namespace qsh
{

// Which basis the coefficients of an element refer to. The library stores
// products and coproducts only for the monomial basis of QSym and the x basis
// of the shuffle algebra; anything else is a named derived basis of QSym
// (a quasisymmetric power sum basis or an unscaled shuffle basis).
class basis
{
public:
    enum class kind { monomial, shuffle_algebra, power_sum, shuffle_basis, monomial_dual };

    static basis monomial()
    {
        return basis(kind::monomial, {});
    }
    static basis shuffle_algebra()
    {
        return basis(kind::shuffle_algebra, {});
    }
    // P_alpha of the named character.
    static basis power_sum(std::string name)
    {
        return basis(kind::power_sum, std::move(name));
    }
    // X_alpha of the named character.
    static basis shuffle_basis(std::string name)
    {
        return basis(kind::shuffle_basis, std::move(name));
    }
    // Dual monomial basis; used to serialize functionals.
    static basis monomial_dual()
    {
        return basis(kind::monomial_dual, {});
    }

    kind type() const noexcept
    {
        return m_kind;
    }
    const std::string &name() const noexcept
    {
        return m_name;
    }
    bool is_primitive() const noexcept
    {
        return m_kind == kind::monomial || m_kind == kind::shuffle_algebra;
    }

    // Symbol used in text output: M, x, P, X, M*.
    std::string symbol() const;
    // Tag used in JSON: "M", "x", "P:<name>", "X:<name>", "M*".
    std::string tag() const;
    static basis from_tag(const std::string &tag);

    friend bool operator==(const basis &, const basis &) = default;

private:
    basis(kind k, std::string name) : m_kind(k), m_name(std::move(name)) {}

    kind m_kind;
    std::string m_name;
};

using term_map = std::map<composition, rational>;

// Finitely supported linear combination of basis elements. Zero coefficients
// are never stored, so equality of elements is equality of term maps.
class graded_element
{
public:
    explicit graded_element(basis b = basis::monomial()) : m_basis(std::move(b)) {}
    graded_element(basis b, const composition &c, rational coef = 1);
    graded_element(basis b, term_map terms);

    const basis &basis_tag() const noexcept
    {
        return m_basis;
    }
    const term_map &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }

    rational coefficient(const composition &c) const;
    void add_term(const composition &c, const rational &coef);

    // Sum restricted to compositions of size n.
    graded_element homogeneous_part(int n) const;
    // -1 for the zero element.
    int max_degree() const;
    bool is_homogeneous_of(int n) const;

    graded_element &operator+=(const graded_element &other);
    graded_element &operator-=(const graded_element &other);
    graded_element &operator*=(const rational &s);

    friend graded_element operator+(graded_element a, const graded_element &b)
    {
        return a += b;
    }
    friend graded_element operator-(graded_element a, const graded_element &b)
    {
        return a -= b;
    }
    friend graded_element operator-(graded_element a)
    {
        return a *= rational(-1);
    }
    friend graded_element operator*(const rational &s, graded_element a)
    {
        return a *= s;
    }

    friend bool operator==(const graded_element &, const graded_element &) = default;

private:
    void require_same_basis(const graded_element &other) const;

    basis m_basis;
    term_map m_terms;
};

inline graded_element M(const composition &c, rational coef = 1)
{
    return graded_element(basis::monomial(), c, std::move(coef));
}
inline graded_element x(const composition &c, rational coef = 1)
{
    return graded_element(basis::shuffle_algebra(), c, std::move(coef));
}

// Element of H (x) H in a primitive basis.
class tensor_element
{
public:
    using key = std::pair<composition, composition>;

    explicit tensor_element(basis b = basis::monomial()) : m_basis(std::move(b)) {}

    const basis &basis_tag() const noexcept
    {
        return m_basis;
    }
    const std::map<key, rational> &terms() const noexcept
    {
        return m_terms;
    }
    void add_term(const composition &left, const composition &right, const rational &coef);
    rational coefficient(const composition &left, const composition &right) const;

    tensor_element &operator+=(const tensor_element &other);

    // Sum of coef * lhs(left) * rhs(right).
    template <class F, class G>
    rational evaluate(const F &lhs, const G &rhs) const
    {
        rational r = 0;
        for (const auto &[k, c] : m_terms) {
            r += c * lhs(k.first) * rhs(k.second);
        }
        return r;
    }

    friend bool operator==(const tensor_element &, const tensor_element &) = default;

private:
    basis m_basis;
    std::map<key, rational> m_terms;
};

// a (x) b for graded elements in the same primitive basis.
tensor_element tensor(const graded_element &a, const graded_element &b);
tensor_element tensor_product(const tensor_element &a, const tensor_element &b);

// Quasi-shuffle product for M, shuffle product for x.
graded_element product(const graded_element &a, const graded_element &b);

// Deconcatenation coproduct.
tensor_element coproduct(const graded_element &h);

// (Delta (x) id) Delta and (id (x) Delta) Delta flattened to triples.
std::map<std::vector<composition>, rational> iterated_coproduct(const graded_element &h, int factors);

using block_tuple = std::vector<composition>;

// Component of the iterated coproduct in multidegree alpha.
std::vector<std::pair<block_tuple, rational>> delta_alpha(const graded_element &h, const composition &alpha);

// S(x_alpha) = (-1)^l(alpha) x_rev(alpha).
graded_element antipode_shuffle(const graded_element &h);
// Antipode of QSym by the connected-graded recursion S(h) = -sum S(h') h''.
graded_element antipode_monomial(const graded_element &h);
// The same recursion in either primitive basis; used to cross-check the
// closed form in the shuffle algebra.
graded_element antipode_recursive(const graded_element &h);

// m o (S (x) id) o Delta and m o (id (x) S) o Delta.
graded_element antipode_left_convolution(const graded_element &h);
graded_element antipode_right_convolution(const graded_element &h);

// p_lambda = M_{lambda_1} ... M_{lambda_l}.
graded_element power_sum(const composition &lambda);

// Counit: the coefficient of the empty composition.
rational counit(const graded_element &h);

} // namespace qsh

#endif
