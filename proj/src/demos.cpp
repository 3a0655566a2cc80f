#include <qsh/demos.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace qsh
{

namespace
{

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

int parse_int(std::string_view s, std::string_view what)
{
    s = trim(s);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw parse_error("expected an integer for " + std::string(what) + ", got '" + std::string(s) + "'");
    }
    return value;
}

// Splits "n; a<sep>b,a<sep>b" into n and the pairs.
std::pair<int, std::vector<std::pair<int, int>>> parse_pairs(std::string_view text, char sep)
{
    const auto semi = text.find(';');
    const int n = parse_int(text.substr(0, semi), "the vertex count");
    std::vector<std::pair<int, int>> pairs;
    if (semi == std::string_view::npos) {
        return {n, pairs};
    }
    std::string_view rest = trim(text.substr(semi + 1));
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = trim(rest.substr(0, comma));
        const auto mid = item.find(sep);
        if (mid == std::string_view::npos) {
            throw parse_error("expected u" + std::string(1, sep) + "v, got '" + std::string(item) + "'");
        }
        pairs.emplace_back(parse_int(item.substr(0, mid), "a vertex"), parse_int(item.substr(mid + 1), "a vertex"));
        if (comma == std::string_view::npos) {
            break;
        }
        rest = rest.substr(comma + 1);
    }
    return {n, pairs};
}

void check_count(int n)
{
    if (n < 0 || n > max_demo_vertices) {
        throw invalid_structure("vertex count must be in 0.." + std::to_string(max_demo_vertices) + ", got " +
                                std::to_string(n));
    }
}

void check_vertex(int n, int v)
{
    if (v < 1 || v > n) {
        throw invalid_structure("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    }
}

// 0-based positions of the set bits of mask, in increasing order.
std::vector<int> members(std::uint32_t mask)
{
    std::vector<int> r;
    for (int i = 0; mask != 0; ++i, mask >>= 1) {
        if (mask & 1U) {
            r.push_back(i);
        }
    }
    return r;
}

// Compresses the bits of row selected by the positions in keep.
std::uint8_t compress(std::uint8_t row, const std::vector<int> &keep)
{
    std::uint8_t r = 0;
    for (std::size_t k = 0; k < keep.size(); ++k) {
        if ((row >> keep[k]) & 1U) {
            r |= static_cast<std::uint8_t>(1U << k);
        }
    }
    return r;
}

std::uint8_t permute(std::uint8_t row, const std::vector<int> &perm)
{
    std::uint8_t r = 0;
    for (std::size_t j = 0; j < perm.size(); ++j) {
        if ((row >> j) & 1U) {
            r |= static_cast<std::uint8_t>(1U << perm[j]);
        }
    }
    return r;
}

void check_permutation(const std::vector<int> &perm, int n)
{
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(sorted.size()) != n || sorted[i] != i) {
            throw invalid_structure("relabelling is not a permutation of 0.." + std::to_string(n - 1));
        }
    }
}

void require_enumerable(int n)
{
    if (n < 0 || n > 6) {
        throw degree_cap_exceeded("labelled enumeration is limited to 6 vertices, got " + std::to_string(n));
    }
}

} // namespace

small_graph::small_graph(int n) : m_n(n)
{
    check_count(n);
}

small_graph::small_graph(int n, const std::vector<std::pair<int, int>> &edges) : small_graph(n)
{
    for (const auto &[u, v] : edges) {
        add_edge(u, v);
    }
}

std::size_t small_graph::edge_count() const
{
    std::size_t twice = 0;
    for (int i = 0; i < m_n; ++i) {
        twice += static_cast<std::size_t>(std::popcount(m_adj[i]));
    }
    return twice / 2;
}

void small_graph::add_edge(int u, int v)
{
    check_vertex(m_n, u);
    check_vertex(m_n, v);
    if (u == v) {
        throw invalid_structure("loop at vertex " + std::to_string(u));
    }
    m_adj[u - 1] |= static_cast<std::uint8_t>(1U << (v - 1));
    m_adj[v - 1] |= static_cast<std::uint8_t>(1U << (u - 1));
}

small_graph small_graph::induced(std::uint32_t mask) const
{
    const auto keep = members(mask);
    small_graph r(static_cast<int>(keep.size()));
    for (std::size_t k = 0; k < keep.size(); ++k) {
        r.m_adj[k] = compress(m_adj[keep[k]], keep);
    }
    return r;
}

small_graph small_graph::relabelled(const std::vector<int> &perm) const
{
    check_permutation(perm, m_n);
    small_graph r(m_n);
    for (int i = 0; i < m_n; ++i) {
        r.m_adj[perm[i]] = permute(m_adj[i], perm);
    }
    return r;
}

small_graph disjoint_union(const small_graph &a, const small_graph &b)
{
    small_graph r(a.m_n + b.m_n);
    for (int i = 0; i < a.m_n; ++i) {
        r.m_adj[i] = a.m_adj[i];
    }
    for (int i = 0; i < b.m_n; ++i) {
        r.m_adj[a.m_n + i] = static_cast<std::uint8_t>(b.m_adj[i] << a.m_n);
    }
    return r;
}

small_graph parse_graph(std::string_view text)
{
    auto [n, edges] = parse_pairs(text, '-');
    return small_graph(n, edges);
}

std::string to_string(const small_graph &g)
{
    std::ostringstream os;
    os << g.vertex_count() << ';';
    const char *sep = " ";
    for (int u = 1; u <= g.vertex_count(); ++u) {
        for (int v = u + 1; v <= g.vertex_count(); ++v) {
            if (g.adjacent(u, v)) {
                os << sep << u << '-' << v;
                sep = ",";
            }
        }
    }
    return os.str();
}

small_poset::small_poset(int n) : m_n(n)
{
    check_count(n);
}

small_poset::small_poset(int n, const std::vector<std::pair<int, int>> &relations) : small_poset(n)
{
    for (const auto &[u, v] : relations) {
        check_vertex(n, u);
        check_vertex(n, v);
        m_below[v - 1] |= static_cast<std::uint8_t>(1U << (u - 1));
    }
    for (int k = 0; k < n; ++k) {
        for (int v = 0; v < n; ++v) {
            if ((m_below[v] >> k) & 1U) {
                m_below[v] |= m_below[k];
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if ((m_below[v] >> v) & 1U) {
            throw invalid_structure("relations contain a cycle through " + std::to_string(v + 1));
        }
    }
}

bool small_poset::is_order_ideal(std::uint32_t mask) const
{
    for (int v : members(mask)) {
        if ((m_below[v] & ~mask) != 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> small_poset::order_ideals() const
{
    std::vector<std::uint32_t> r;
    for (std::uint32_t mask = 0; mask < (1U << m_n); ++mask) {
        if (is_order_ideal(mask)) {
            r.push_back(mask);
        }
    }
    return r;
}

std::vector<int> small_poset::minimal_elements() const
{
    std::vector<int> r;
    for (int v = 0; v < m_n; ++v) {
        if (m_below[v] == 0) {
            r.push_back(v + 1);
        }
    }
    return r;
}

small_poset small_poset::induced(std::uint32_t mask) const
{
    const auto keep = members(mask);
    small_poset r(static_cast<int>(keep.size()));
    for (std::size_t k = 0; k < keep.size(); ++k) {
        r.m_below[k] = compress(m_below[keep[k]], keep);
    }
    return r;
}

small_poset small_poset::relabelled(const std::vector<int> &perm) const
{
    check_permutation(perm, m_n);
    small_poset r(m_n);
    for (int i = 0; i < m_n; ++i) {
        r.m_below[perm[i]] = permute(m_below[i], perm);
    }
    return r;
}

small_poset disjoint_union(const small_poset &a, const small_poset &b)
{
    small_poset r(a.m_n + b.m_n);
    for (int i = 0; i < a.m_n; ++i) {
        r.m_below[i] = a.m_below[i];
    }
    for (int i = 0; i < b.m_n; ++i) {
        r.m_below[a.m_n + i] = static_cast<std::uint8_t>(b.m_below[i] << a.m_n);
    }
    return r;
}

small_poset parse_poset(std::string_view text)
{
    auto [n, relations] = parse_pairs(text, '<');
    return small_poset(n, relations);
}

std::string to_string(const small_poset &p)
{
    std::ostringstream os;
    os << p.element_count() << ';';
    const char *sep = " ";
    for (int u = 1; u <= p.element_count(); ++u) {
        for (int v = 1; v <= p.element_count(); ++v) {
            if (!p.less(u, v)) {
                continue;
            }
            // Only cover relations are printed.
            bool cover = true;
            for (int w = 1; w <= p.element_count() && cover; ++w) {
                cover = !(p.less(u, w) && p.less(w, v));
            }
            if (cover) {
                os << sep << u << '<' << v;
                sep = ",";
            }
        }
    }
    return os.str();
}

std::vector<small_graph> graph_provider::basis_of_degree(int n) const
{
    require_enumerable(n);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    std::vector<small_graph> r;
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
        small_graph g(n);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if ((mask >> k) & 1U) {
                g.add_edge(pairs[k].first, pairs[k].second);
            }
        }
        r.push_back(g);
    }
    return r;
}

label_tensor<small_graph> graph_provider::coproduct(const small_graph &g) const
{
    label_tensor<small_graph> r;
    const std::uint32_t full = (1U << g.vertex_count()) - 1;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        r[{g.induced(mask), g.induced(full & ~mask)}] += 1;
    }
    return r;
}

std::vector<small_poset> poset_provider::basis_of_degree(int n) const
{
    require_enumerable(n);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    std::vector<small_poset> r;
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> relations;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if ((mask >> k) & 1U) {
                relations.push_back(pairs[k]);
            }
        }
        small_poset p(n, relations);
        // Keep the subsets that were already transitively closed.
        std::size_t closed_size = 0;
        for (int v = 1; v <= n; ++v) {
            closed_size += static_cast<std::size_t>(std::popcount(p.strictly_below(v)));
        }
        if (closed_size == relations.size()) {
            r.push_back(p);
        }
    }
    return r;
}

label_tensor<small_poset> poset_provider::coproduct(const small_poset &p) const
{
    label_tensor<small_poset> r;
    const std::uint32_t full = (1U << p.element_count()) - 1;
    for (std::uint32_t ideal : p.order_ideals()) {
        r[{p.induced(ideal), p.induced(full & ~ideal)}] += 1;
    }
    return r;
}

rational edgeless_indicator(const small_graph &g)
{
    return g.edge_count() == 0 ? rational(1) : rational(0);
}

rational poset_one(const small_poset &)
{
    return rational(1);
}

rational unique_minimal(const small_poset &p)
{
    return p.minimal_elements().size() == 1 ? rational(1) : rational(0);
}

graded_element chromatic_symmetric(const small_graph &g)
{
    return universal_to_qsym(graph_provider{}, edgeless_indicator, g, precondition::trust);
}

namespace
{

// Assigns colours 1..k to vertices 0..n-1 in order, calling visit on every
// proper colouring.
template <class Visit>
void for_each_proper_colouring(const small_graph &g, int k, std::vector<int> &colour, int v, Visit &&visit)
{
    const int n = g.vertex_count();
    if (v == n) {
        visit(colour);
        return;
    }
    for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) {
            ok = !(g.adjacent(u + 1, v + 1) && colour[u] == c);
        }
        if (ok) {
            colour[v] = c;
            for_each_proper_colouring(g, k, colour, v + 1, visit);
        }
    }
}

} // namespace

graded_element chromatic_symmetric_by_colourings(const small_graph &g)
{
    const int n = g.vertex_count();
    graded_element r(basis::monomial());
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    for_each_proper_colouring(g, n, colour, 0, [&](const std::vector<int> &c) {
        std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
        for (int v : c) {
            ++counts[v];
        }
        // Only colourings using exactly the colours 1..m contribute to M_a.
        std::vector<int> parts;
        std::size_t i = 1;
        while (i <= static_cast<std::size_t>(n) && counts[i] > 0) {
            parts.push_back(counts[i]);
            ++i;
        }
        while (i <= static_cast<std::size_t>(n) && counts[i] == 0) {
            ++i;
        }
        if (i > static_cast<std::size_t>(n)) {
            r.add_term(composition(parts), 1);
        }
    });
    return r;
}

integer count_proper_colourings(const small_graph &g, int k)
{
    integer count = 0;
    std::vector<int> colour(static_cast<std::size_t>(g.vertex_count()), 0);
    for_each_proper_colouring(g, k, colour, 0, [&](const std::vector<int> &) { ++count; });
    return count;
}

std::vector<integer> chromatic_polynomial(const small_graph &g)
{
    const int n = g.vertex_count();
    // Newton form on the points 0..n: chi(k) = sum_j d_j binomial(k, j).
    std::vector<rational> diffs;
    for (int k = 0; k <= n; ++k) {
        diffs.emplace_back(count_proper_colourings(g, k));
    }
    std::vector<rational> newton;
    for (int j = 0; j <= n; ++j) {
        newton.push_back(diffs[0]);
        for (std::size_t i = 0; i + 1 < diffs.size(); ++i) {
            diffs[i] = diffs[i + 1] - diffs[i];
        }
        diffs.pop_back();
    }
    std::vector<rational> coeffs(static_cast<std::size_t>(n) + 1, rational(0));
    std::vector<rational> falling{rational(1)};
    for (int j = 0; j <= n; ++j) {
        const rational scale = newton[j] / rational(factorial(static_cast<unsigned>(j)));
        for (std::size_t d = 0; d < falling.size(); ++d) {
            coeffs[d] += scale * falling[d];
        }
        // falling *= (k - j)
        std::vector<rational> next(falling.size() + 1, rational(0));
        for (std::size_t d = 0; d < falling.size(); ++d) {
            next[d + 1] += falling[d];
            next[d] -= rational(j) * falling[d];
        }
        falling = std::move(next);
    }
    std::vector<integer> r;
    for (const auto &c : coeffs) {
        if (!is_integer(c)) {
            throw std::logic_error("chromatic polynomial has a non-integral coefficient " + to_string(c));
        }
        r.push_back(c.get_num());
    }
    return r;
}

std::string polynomial_to_string(const std::vector<integer> &coeffs, char variable)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const integer &c = coeffs[i];
        if (c == 0) {
            continue;
        }
        const integer mag = abs(c);
        if (first) {
            os << (c < 0 ? "-" : "");
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || i == 0) {
            os << mag.get_str();
        }
        if (i >= 1) {
            os << variable;
        }
        if (i >= 2) {
            os << '^' << i;
        }
    }
    return first ? "0" : os.str();
}

rational specialize_ones(const graded_element &h, int k)
{
    if (h.basis_tag().type() != basis::kind::monomial) {
        throw basis_mismatch("specialize_ones expects the M basis");
    }
    rational r = 0;
    for (const auto &[c, q] : h.terms()) {
        integer b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(c.length()));
        r += q * b;
    }
    return r;
}

std::pair<rational, rational> graph_infchar_two_ways(const small_graph &g, const character_data &f)
{
    const auto chi = chromatic_polynomial(g);
    const rational linear = chi.size() > 1 ? rational(chi[1]) : rational(0);
    const auto xi = char_to_infchar(graph_provider{}, edgeless_indicator, f);
    return {linear, xi(g)};
}

graded_element kp_generating_function(const small_poset &p)
{
    return universal_to_qsym(poset_provider{}, poset_one, p, precondition::trust);
}

namespace
{

void extend_flags(const std::vector<std::uint32_t> &ideals, std::uint32_t current, std::uint32_t full,
                  std::vector<int> &parts, graded_element &out)
{
    if (current == full) {
        out.add_term(composition(parts), 1);
        return;
    }
    for (std::uint32_t next : ideals) {
        if (next != current && (next & current) == current) {
            parts.push_back(std::popcount(next & ~current));
            extend_flags(ideals, next, full, parts, out);
            parts.pop_back();
        }
    }
}

} // namespace

graded_element kp_by_ideal_flags(const small_poset &p)
{
    graded_element r(basis::monomial());
    std::vector<int> parts;
    extend_flags(p.order_ideals(), 0, (1U << p.element_count()) - 1, parts, r);
    return r;
}

std::pair<rational, rational> eta_check(const small_poset &p)
{
    return {canonical(canonical_name::eta)(kp_generating_function(p)), unique_minimal(p)};
}

} // namespace qsh
