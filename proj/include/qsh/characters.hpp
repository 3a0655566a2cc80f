#ifndef QSH_CHARACTERS_HPP
#define QSH_CHARACTERS_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <qsh/check.hpp>
#include <qsh/composition.hpp>
#include <qsh/element.hpp>
#include <qsh/functional.hpp>

namespace qsh
{

// Coefficient data f of a basis X_a = sum_{b >= a} f(a, b) M_b. Defined on
// nonempty compositions; the value at the empty composition is 1.
class character_data
{
public:
    character_data() = default;
    character_data(composition_function f, std::string name = {}) : m_f(std::move(f)), m_name(std::move(name)) {}

    rational operator()(const composition &a) const
    {
        return a.empty() ? rational(conventions::character_at_empty) : m_f(a);
    }
    const std::string &name() const noexcept
    {
        return m_name;
    }
    const composition_function &function() const noexcept
    {
        return m_f;
    }

    // f^Sh on the x basis of the shuffle algebra.
    functional as_shuffle_functional() const;

private:
    composition_function m_f;
    std::string m_name;
};

// Coefficient data g of M_a = sum_{b >= a} g(a, b) X_b. The value at the
// empty composition is 0.
class infinitesimal_data
{
public:
    infinitesimal_data() = default;
    infinitesimal_data(composition_function g, std::string name = {}) : m_g(std::move(g)), m_name(std::move(name))
    {
    }

    rational operator()(const composition &a) const
    {
        return a.empty() ? rational(conventions::infinitesimal_at_empty) : m_g(a);
    }
    const std::string &name() const noexcept
    {
        return m_name;
    }
    const composition_function &function() const noexcept
    {
        return m_g;
    }

    // g^QSym on the M basis.
    functional as_monomial_functional() const;

private:
    composition_function m_g;
    std::string m_name;
};

// f(a) f(b) = sum_{c in a sh b} f(c) for all nonempty a, b with |a|+|b| <= max_degree.
check_result is_shuffle_character(const character_data &f, int max_degree);

// Whether f((n)) = 1 for 1 <= n <= max_degree.
bool is_normalized(const character_data &f, int max_degree);

// f~(a) = f(a) / prod f((a_i)). Nonsingularity is checked eagerly up to
// max_degree and lazily beyond.
character_data normalize(const character_data &f, int max_degree = 0);

// Triangular solve of sum_{b >= a} f(a, b) g(b) = [l(a) = 1].
infinitesimal_data f_to_g(const character_data &f, int max_degree = 0);
// The same system with the roles of f and g switched.
character_data g_to_f(const infinitesimal_data &g, int max_degree = 0);

// X_a = sum_{b >= a} f(a, b) M_b.
graded_element basis_expand(const character_data &f, const composition &a);
// M_a = sum_{b >= a} g(a, b) X_b, as an element of the named shuffle basis.
graded_element basis_contract(const infinitesimal_data &g, const composition &a);

// P_a = aut(a) sum_{b >= a} f(a, b) M_b. Throws not_normalized.
graded_element qps_expand(const character_data &f, const composition &a);
// M_a = sum_{b >= a} g(a, b) / aut(b) P_b.
graded_element qps_contract(const infinitesimal_data &g, const composition &a);

// Rewrites an element of a derived basis of the character in the M basis.
graded_element to_monomial(const character_data &f, const graded_element &h);
// Rewrites an element of the M basis in the derived basis (P or X by target).
graded_element from_monomial(const infinitesimal_data &g, const graded_element &h, const basis &target);

struct qps_report {
    check_result multiplication;
    check_result comultiplication;
    check_result refinement;

    bool passed() const noexcept
    {
        return multiplication.passed && comultiplication.passed && refinement.passed;
    }
};

// The three power sum axioms: products for |a|+|b| <= max_degree, coproducts
// for |a| <= max_degree, and sum_{a ~ lambda} P_a = p_lambda for
// lambda |- n <= refinement_degree (defaults to max_degree).
qps_report verify_qps(const character_data &f, int max_degree, int refinement_degree = -1);

using tau_function = std::function<rational(int)>;

// f(a) = prod_i (tau(a_1) + ... + tau(a_i))^{-1}. Vanishing prefix sums throw
// zero_prefix_sum when first evaluated.
character_data prefix_sum_character(tau_function tau, std::string name = "prefix-sum");

// An ordered partition of the positive integers, given as decision procedures
// on parts. part_bound, if set, is the largest part the procedures are valid
// for; evaluating a composition with a larger part throws degree_cap_exceeded.
struct ordered_partition_spec {
    std::function<int(int)> classify;
    // Strict total order on class identifiers.
    std::function<bool(int, int)> precedes;
    std::map<int, character_data> per_class;
    // Used for classes without an entry in per_class.
    std::optional<character_data> default_character;
    std::optional<int> part_bound;
    // Degree up to which each per-class character is verified on construction
    // (0 disables the check).
    int check_degree = 0;
};

character_data ordered_partition_character(const ordered_partition_spec &spec, std::string name = "ordered-partition");

// Whether the class sequence of a is weakly increasing.
bool respects(const ordered_partition_spec &spec, const composition &a);

// f(a) = 1 / l(a)!.
character_data inverse_length_factorial();

// Evens before odds with the given character on even parts and 1/l! on odd parts.
character_data even_odd_character(const character_data &f_even);

// f(a) = 1/aut(a) when the parts weakly increase under precedes, else 0.
character_data order_basis_character(std::function<bool(int, int)> precedes, std::optional<int> part_bound = {},
                                     std::string name = "order");

enum class builtin_kind { type_one, type_two, even_odd, combinatorial, reverse_combinatorial };

// Normalized characters of the named bases. For even_odd, f_even defaults to 1/l!.
character_data builtin(builtin_kind kind, std::optional<character_data> f_even = {});

enum class closed_form_kind { type_one, type_two, even_odd_odd_sizes };

rational closed_form_g(closed_form_kind kind, const composition &a);

// sum over odd b |= m of (-2)^l(b) / (p(b) l(b)!).
rational even_odd_series_coefficient(int m);

struct integrality_report {
    // aut(a) f(a, b) in Z_{>=0} for all a <= b.
    check_result full;
    // aut(a) f(a) in Z_{>=0} for all a.
    check_result pointwise;

    bool agree() const noexcept
    {
        return full.passed == pointwise.passed;
    }
    bool passed() const noexcept
    {
        return full.passed && pointwise.passed;
    }
};

integrality_report check_integral_nonneg(const character_data &f, int max_degree);

} // namespace qsh

#endif
