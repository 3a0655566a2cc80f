#ifndef QSH_COMPOSITION_HPP
#define QSH_COMPOSITION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <qsh/errors.hpp>
#include <qsh/rational.hpp>

namespace qsh
{

// A finite sequence of positive integers. Every basis in the library is
// indexed by compositions. Ordering is graded (by size), then lexicographic
// on the parts; with this order a proper refinement always sorts before its
// coarsenings.
class composition
{
public:
    composition() = default;
    composition(std::initializer_list<int> parts);
    explicit composition(std::vector<int> parts);

    std::span<const int> parts() const noexcept
    {
        return m_parts;
    }
    std::size_t length() const noexcept
    {
        return m_parts.size();
    }
    int size() const noexcept
    {
        return m_size;
    }
    bool empty() const noexcept
    {
        return m_parts.empty();
    }
    int operator[](std::size_t i) const noexcept
    {
        return m_parts[i];
    }
    int front() const noexcept
    {
        return m_parts.front();
    }
    int back() const noexcept
    {
        return m_parts.back();
    }

    composition reversed() const;
    // Parts [first, last).
    composition slice(std::size_t first, std::size_t last) const;
    // Parts satisfying the predicate, in order (the restriction alpha|_C).
    composition restricted(const std::function<bool(int)> &keep) const;

    friend composition operator+(const composition &a, const composition &b);

    friend bool operator==(const composition &, const composition &) = default;
    friend std::strong_ordering operator<=>(const composition &a, const composition &b);

private:
    std::vector<int> m_parts;
    int m_size = 0;
};

struct composition_hash {
    std::size_t operator()(const composition &c) const noexcept;
};

// Conventions at the empty composition, kept in one place.
namespace conventions
{
inline constexpr int last_part_of_empty = 0;
inline constexpr int part_product_of_empty = 1;
inline constexpr int aut_of_empty = 1;
inline constexpr int z_of_empty = 1;
inline constexpr int prefix_product_of_empty = 1;
inline constexpr int character_at_empty = 1;
inline constexpr int infinitesimal_at_empty = 0;
} // namespace conventions

struct composition_stats {
    int size = 0;
    int length = 0;
    int last_part = 0;
    integer part_product;   // p
    integer aut_count;      // product of m_i!
    integer z_value;        // p * aut
    integer prefix_product; // a1 (a1+a2) ... (a1+...+al)
    int even_count = 0;
    int odd_count = 0;
    composition sorted_partition;
};

composition_stats stats(const composition &a);

integer aut(const composition &a);
integer part_product(const composition &a);
integer z_value(const composition &a);
integer prefix_product(const composition &a);

bool is_partition(const composition &a);
bool is_odd(const composition &a);
bool is_even(const composition &a);
composition sorted_partition(const composition &a);
bool rearrangement_of(const composition &a, const composition &b);

// All compositions of n in canonical order; 2^(n-1) of them for n >= 1.
std::vector<composition> compositions_of(int n);
// All compositions of size 0..max_size, canonical order.
std::vector<composition> compositions_up_to(int max_size);
// Partitions of n in canonical order.
std::vector<composition> partitions_of(int n);
// Distinct rearrangements of the parts of a.
std::vector<composition> rearrangements(const composition &a);

// All beta >= a (a refines beta), a included, canonical order.
std::vector<composition> coarsenings(const composition &a);

// Whether a refines b. Throws not_a_refinement if the sizes differ.
bool refines(const composition &a, const composition &b);

// The unique blocks a = a^(1) ... a^(l(b)) with a^(i) a composition of b_i.
std::vector<composition> refinement_split(const composition &a, const composition &b);

// Finitely supported multiset of compositions.
using composition_multiset = std::map<composition, std::uint64_t>;

std::uint64_t total_multiplicity(const composition_multiset &m);

composition_multiset shuffle(const composition &a, const composition &b);
composition_multiset quasi_shuffle(const composition &a, const composition &b);

// f(a, b) = f(a^(1)) ... f(a^(l(b))); f(empty, empty) = 1.
template <class F>
rational extend_over_refinement(const F &f, const composition &a, const composition &b)
{
    if (a.empty() && b.empty()) {
        return rational(1);
    }
    rational r = 1;
    for (const auto &block : refinement_split(a, b)) {
        r *= f(block);
        if (r == 0) {
            break;
        }
    }
    return r;
}

// Text format: "2,1,3"; the empty composition is "-".
std::string to_string(const composition &a);
composition parse_composition(std::string_view text);

} // namespace qsh

#endif
