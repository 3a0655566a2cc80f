#ifndef QSH_DEMOS_HPP
#define QSH_DEMOS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <qsh/characters.hpp>
#include <qsh/element.hpp>
#include <qsh/universal.hpp>

namespace qsh
{

inline constexpr int max_demo_vertices = 8;

// Simple graph on vertices 1..n, stored as adjacency bitmasks (bit j of
// row i set when i+1 and j+1 are adjacent).
class small_graph
{
public:
    small_graph() = default;
    explicit small_graph(int n);
    // Edges as 1-based vertex pairs. Throws invalid_structure on loops,
    // out-of-range vertices or n > 8.
    small_graph(int n, const std::vector<std::pair<int, int>> &edges);

    int vertex_count() const noexcept
    {
        return m_n;
    }
    std::size_t edge_count() const;
    bool adjacent(int u, int v) const noexcept
    {
        return (m_adj[u - 1] >> (v - 1)) & 1U;
    }
    // Neighbours of 1-based vertex v as a bitmask over 0-based indices.
    std::uint8_t neighbours(int v) const noexcept
    {
        return m_adj[v - 1];
    }
    void add_edge(int u, int v);

    // Subgraph induced on the vertices in the 0-based mask, relabelled in order.
    small_graph induced(std::uint32_t mask) const;
    // Vertex i+1 becomes perm[i]+1.
    small_graph relabelled(const std::vector<int> &perm) const;

    friend small_graph disjoint_union(const small_graph &a, const small_graph &b);

    friend bool operator==(const small_graph &, const small_graph &) = default;
    friend auto operator<=>(const small_graph &, const small_graph &) = default;

private:
    int m_n = 0;
    std::array<std::uint8_t, max_demo_vertices> m_adj{};
};

// "n; u-v,u-v,...". The edge list may be empty ("3;" or "3").
small_graph parse_graph(std::string_view text);
std::string to_string(const small_graph &g);

// Finite poset on 1..n, stored as strict down-sets: bit j of row i set when
// j+1 < i+1 in the order.
class small_poset
{
public:
    small_poset() = default;
    explicit small_poset(int n);
    // Generating relations u < v, closed transitively. Throws
    // invalid_structure when the closure is not antisymmetric.
    small_poset(int n, const std::vector<std::pair<int, int>> &relations);

    int element_count() const noexcept
    {
        return m_n;
    }
    bool less(int u, int v) const noexcept
    {
        return (m_below[v - 1] >> (u - 1)) & 1U;
    }
    std::uint8_t strictly_below(int v) const noexcept
    {
        return m_below[v - 1];
    }

    // Whether the 0-based mask is closed downwards.
    bool is_order_ideal(std::uint32_t mask) const;
    std::vector<std::uint32_t> order_ideals() const;
    std::vector<int> minimal_elements() const;

    small_poset induced(std::uint32_t mask) const;
    small_poset relabelled(const std::vector<int> &perm) const;

    friend small_poset disjoint_union(const small_poset &a, const small_poset &b);

    friend bool operator==(const small_poset &, const small_poset &) = default;
    friend auto operator<=>(const small_poset &, const small_poset &) = default;

private:
    int m_n = 0;
    std::array<std::uint8_t, max_demo_vertices> m_below{};
};

// "n; u<v,u<v,...".
small_poset parse_poset(std::string_view text);
std::string to_string(const small_poset &p);

// Hopf algebra of graphs: the coproduct splits the vertex set into the
// induced subgraphs on S and its complement.
struct graph_provider {
    using label_type = small_graph;

    // All labelled graphs on n vertices; n <= 6.
    std::vector<small_graph> basis_of_degree(int n) const;
    label_tensor<small_graph> coproduct(const small_graph &g) const;
    rational counit(const small_graph &g) const
    {
        return g.vertex_count() == 0 ? rational(1) : rational(0);
    }
    int degree(const small_graph &g) const
    {
        return g.vertex_count();
    }
    label_element<small_graph> product(const small_graph &a, const small_graph &b) const
    {
        return {{disjoint_union(a, b), rational(1)}};
    }
    std::string describe(const small_graph &g) const
    {
        return "G[" + to_string(g) + "]";
    }
};

// Hopf algebra of posets: the coproduct sums I (x) (P \ I) over order ideals I.
struct poset_provider {
    using label_type = small_poset;

    // All naturally labelled posets on n elements; n <= 6.
    std::vector<small_poset> basis_of_degree(int n) const;
    label_tensor<small_poset> coproduct(const small_poset &p) const;
    rational counit(const small_poset &p) const
    {
        return p.element_count() == 0 ? rational(1) : rational(0);
    }
    int degree(const small_poset &p) const
    {
        return p.element_count();
    }
    label_element<small_poset> product(const small_poset &a, const small_poset &b) const
    {
        return {{disjoint_union(a, b), rational(1)}};
    }
    std::string describe(const small_poset &p) const
    {
        return "P[" + to_string(p) + "]";
    }
};

// zeta(G) = [G has no edges].
rational edgeless_indicator(const small_graph &g);
// zeta(P) = 1.
rational poset_one(const small_poset &p);
// xi(P) = [P has a unique minimal element].
rational unique_minimal(const small_poset &p);

// X_G as the universal image of the graph under [no edges].
graded_element chromatic_symmetric(const small_graph &g);
// X_G from proper colourings: the coefficient of M_a counts colourings
// using colours 1..l(a) with colour i on exactly a_i vertices.
graded_element chromatic_symmetric_by_colourings(const small_graph &g);

// Number of proper colourings with k colours, by backtracking.
integer count_proper_colourings(const small_graph &g, int k);

// Coefficients of chi_G(k), lowest degree first, from the counts at
// k = 0..n by exact interpolation.
std::vector<integer> chromatic_polynomial(const small_graph &g);
std::string polynomial_to_string(const std::vector<integer> &coeffs, char variable = 'k');

// M_a(1^k) = binomial(k, l(a)), extended linearly.
rational specialize_ones(const graded_element &h, int k);

// ([k^1] chi_G, char_to_infchar([no edges], f)(G)).
std::pair<rational, rational> graph_infchar_two_ways(const small_graph &g, const character_data &f);

// K_P as the universal image of the poset under zeta = 1.
graded_element kp_generating_function(const small_poset &p);
// K_P from flags of order ideals: the coefficient of M_a counts chains
// of ideals whose successive differences have sizes a_1, ..., a_l.
graded_element kp_by_ideal_flags(const small_poset &p);

// (eta(K_P), [P has a unique minimal element]).
std::pair<rational, rational> eta_check(const small_poset &p);

} // namespace qsh

#endif
