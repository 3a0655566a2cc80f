#include <qsh/composition.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace qsh
{

composition::composition(std::initializer_list<int> parts) : composition(std::vector<int>(parts)) {}

composition::composition(std::vector<int> parts) : m_parts(std::move(parts))
{
    for (int p : m_parts) {
        if (p < 1) {
            throw invalid_composition("composition parts must be positive, got " + std::to_string(p));
        }
        m_size += p;
    }
}

composition composition::reversed() const
{
    composition r;
    r.m_parts.assign(m_parts.rbegin(), m_parts.rend());
    r.m_size = m_size;
    return r;
}

composition composition::slice(std::size_t first, std::size_t last) const
{
    composition r;
    r.m_parts.assign(m_parts.begin() + static_cast<std::ptrdiff_t>(first),
                     m_parts.begin() + static_cast<std::ptrdiff_t>(last));
    r.m_size = std::accumulate(r.m_parts.begin(), r.m_parts.end(), 0);
    return r;
}

composition composition::restricted(const std::function<bool(int)> &keep) const
{
    composition r;
    for (int p : m_parts) {
        if (keep(p)) {
            r.m_parts.push_back(p);
            r.m_size += p;
        }
    }
    return r;
}

composition operator+(const composition &a, const composition &b)
{
    composition r = a;
    r.m_parts.insert(r.m_parts.end(), b.m_parts.begin(), b.m_parts.end());
    r.m_size += b.m_size;
    return r;
}

std::strong_ordering operator<=>(const composition &a, const composition &b)
{
    if (auto c = a.m_size <=> b.m_size; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.m_parts.begin(), a.m_parts.end(), b.m_parts.begin(),
                                                  b.m_parts.end());
}

std::size_t composition_hash::operator()(const composition &c) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int p : c.parts()) {
        h ^= static_cast<std::size_t>(p);
        h *= 0x100000001b3ULL;
    }
    return h ^ c.length();
}

integer aut(const composition &a)
{
    std::vector<int> sorted(a.parts().begin(), a.parts().end());
    std::sort(sorted.begin(), sorted.end());
    integer r = 1;
    unsigned run = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        run = (i > 0 && sorted[i] == sorted[i - 1]) ? run + 1 : 1;
        r *= run;
    }
    return r;
}

integer part_product(const composition &a)
{
    integer r = 1;
    for (int p : a.parts()) {
        r *= p;
    }
    return r;
}

integer z_value(const composition &a)
{
    return part_product(a) * aut(a);
}

integer prefix_product(const composition &a)
{
    integer r = 1;
    long running = 0;
    for (int p : a.parts()) {
        running += p;
        r *= running;
    }
    return r;
}

composition sorted_partition(const composition &a)
{
    std::vector<int> parts(a.parts().begin(), a.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return composition(std::move(parts));
}

composition_stats stats(const composition &a)
{
    composition_stats s;
    s.size = a.size();
    s.length = static_cast<int>(a.length());
    s.last_part = a.empty() ? conventions::last_part_of_empty : a.back();
    s.part_product = part_product(a);
    s.aut_count = aut(a);
    s.z_value = s.part_product * s.aut_count;
    s.prefix_product = prefix_product(a);
    for (int p : a.parts()) {
        (p % 2 == 0 ? s.even_count : s.odd_count) += 1;
    }
    s.sorted_partition = sorted_partition(a);
    return s;
}

bool is_partition(const composition &a)
{
    return std::is_sorted(a.parts().begin(), a.parts().end(), std::greater<>());
}

bool is_odd(const composition &a)
{
    return std::all_of(a.parts().begin(), a.parts().end(), [](int p) { return p % 2 == 1; });
}

bool is_even(const composition &a)
{
    return std::all_of(a.parts().begin(), a.parts().end(), [](int p) { return p % 2 == 0; });
}

bool rearrangement_of(const composition &a, const composition &b)
{
    return sorted_partition(a) == sorted_partition(b);
}

namespace
{

void compositions_rec(int remaining, std::vector<int> &prefix, std::vector<composition> &out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int first = 1; first <= remaining; ++first) {
        prefix.push_back(first);
        compositions_rec(remaining - first, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<composition> compositions_of(int n)
{
    if (n < 0) {
        throw std::invalid_argument("compositions_of: negative size");
    }
    std::vector<composition> out;
    out.reserve(n == 0 ? 1 : std::size_t{1} << (n - 1));
    std::vector<int> prefix;
    compositions_rec(n, prefix, out);
    return out;
}

std::vector<composition> compositions_up_to(int max_size)
{
    std::vector<composition> out;
    for (int n = 0; n <= max_size; ++n) {
        auto c = compositions_of(n);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

std::vector<composition> partitions_of(int n)
{
    std::vector<composition> out;
    for (auto &c : compositions_of(n)) {
        if (is_partition(c)) {
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<composition> rearrangements(const composition &a)
{
    std::vector<int> parts(a.parts().begin(), a.parts().end());
    std::sort(parts.begin(), parts.end());
    std::vector<composition> out;
    do {
        out.emplace_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
}

std::vector<composition> coarsenings(const composition &a)
{
    if (a.empty()) {
        return {a};
    }
    const std::size_t gaps = a.length() - 1;
    std::vector<composition> out;
    out.reserve(std::size_t{1} << gaps);
    // Bit i set: merge part i with part i+1.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gaps); ++mask) {
        std::vector<int> parts{a[0]};
        for (std::size_t i = 0; i < gaps; ++i) {
            if (mask >> i & 1U) {
                parts.back() += a[i + 1];
            } else {
                parts.push_back(a[i + 1]);
            }
        }
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace
{

// Block boundaries of a inside b, or empty optional-like flag on failure.
bool split_points(const composition &a, const composition &b, std::vector<std::size_t> &cuts)
{
    cuts.clear();
    cuts.push_back(0);
    std::size_t i = 0;
    for (int target : b.parts()) {
        int sum = 0;
        while (sum < target && i < a.length()) {
            sum += a[i++];
        }
        if (sum != target) {
            return false;
        }
        cuts.push_back(i);
    }
    return i == a.length();
}

void check_sizes(const composition &a, const composition &b)
{
    if (a.size() != b.size()) {
        throw not_a_refinement("refinement needs equal sizes: " + to_string(a) + " vs " + to_string(b));
    }
}

} // namespace

bool refines(const composition &a, const composition &b)
{
    check_sizes(a, b);
    std::vector<std::size_t> cuts;
    return split_points(a, b, cuts);
}

std::vector<composition> refinement_split(const composition &a, const composition &b)
{
    check_sizes(a, b);
    std::vector<std::size_t> cuts;
    if (!split_points(a, b, cuts)) {
        throw not_a_refinement(to_string(a) + " does not refine " + to_string(b));
    }
    std::vector<composition> blocks;
    blocks.reserve(b.length());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        blocks.push_back(a.slice(cuts[k], cuts[k + 1]));
    }
    return blocks;
}

std::uint64_t total_multiplicity(const composition_multiset &m)
{
    std::uint64_t t = 0;
    for (const auto &[c, k] : m) {
        t += k;
    }
    return t;
}

namespace
{

void shuffle_rec(std::span<const int> a, std::span<const int> b, std::vector<int> &prefix, composition_multiset &out)
{
    if (a.empty() || b.empty()) {
        std::vector<int> full = prefix;
        full.insert(full.end(), a.begin(), a.end());
        full.insert(full.end(), b.begin(), b.end());
        ++out[composition(std::move(full))];
        return;
    }
    prefix.push_back(a.front());
    shuffle_rec(a.subspan(1), b, prefix, out);
    prefix.back() = b.front();
    shuffle_rec(a, b.subspan(1), prefix, out);
    prefix.pop_back();
}

void quasi_shuffle_rec(std::span<const int> a, std::span<const int> b, std::vector<int> &prefix,
                       composition_multiset &out)
{
    if (a.empty() || b.empty()) {
        std::vector<int> full = prefix;
        full.insert(full.end(), a.begin(), a.end());
        full.insert(full.end(), b.begin(), b.end());
        ++out[composition(std::move(full))];
        return;
    }
    prefix.push_back(a.front());
    quasi_shuffle_rec(a.subspan(1), b, prefix, out);
    prefix.back() = b.front();
    quasi_shuffle_rec(a, b.subspan(1), prefix, out);
    prefix.back() = a.front() + b.front();
    quasi_shuffle_rec(a.subspan(1), b.subspan(1), prefix, out);
    prefix.pop_back();
}

} // namespace

composition_multiset shuffle(const composition &a, const composition &b)
{
    composition_multiset out;
    std::vector<int> prefix;
    prefix.reserve(a.length() + b.length());
    shuffle_rec(a.parts(), b.parts(), prefix, out);
    return out;
}

composition_multiset quasi_shuffle(const composition &a, const composition &b)
{
    composition_multiset out;
    std::vector<int> prefix;
    prefix.reserve(a.length() + b.length());
    quasi_shuffle_rec(a.parts(), b.parts(), prefix, out);
    return out;
}

std::string to_string(const composition &a)
{
    if (a.empty()) {
        return "-";
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (i > 0) {
            os << ',';
        }
        os << a[i];
    }
    return os.str();
}

composition parse_composition(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
            s.remove_prefix(1);
        }
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
            s.remove_suffix(1);
        }
        return s;
    };
    text = trim(text);
    if (text == "-") {
        return {};
    }
    if (text.empty()) {
        throw parse_error("empty composition literal (use '-' for the empty composition)");
    }
    std::vector<int> parts;
    while (true) {
        auto comma = text.find(',');
        auto token = trim(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value < 1) {
            throw parse_error("invalid composition part '" + std::string(token) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return composition(std::move(parts));
}

} // namespace qsh
