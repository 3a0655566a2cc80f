#include <qsh/registry.hpp>

#include <algorithm>
#include <charconv>
#include <memory>

namespace qsh
{

void registry_entry::require_degree(int degree) const
{
    if (degree_bound && degree > *degree_bound) {
        throw degree_cap_exceeded("basis '" + f.name() + "' is defined up to degree " + std::to_string(*degree_bound) +
                                  ", requested " + std::to_string(degree));
    }
}

namespace
{

const std::vector<std::string> fixed_names{"type1", "type2", "even-odd", "combinatorial", "reverse-combinatorial"};

[[noreturn]] void unknown(std::string_view name, const std::string &why = {})
{
    std::string known;
    for (const auto &n : registry_names()) {
        known += (known.empty() ? "" : ", ") + n;
    }
    throw unknown_basis("unknown basis '" + std::string(name) + "'" + (why.empty() ? "" : " (" + why + ")") +
                        "; known names: " + known);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> r;
    while (true) {
        const auto pos = s.find(sep);
        r.push_back(s.substr(0, pos));
        if (pos == std::string_view::npos) {
            return r;
        }
        s = s.substr(pos + 1);
    }
}

std::optional<int> to_int(std::string_view s)
{
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

registry_entry prefix_sum_entry(std::string_view name, std::string_view params)
{
    std::string full(name);
    if (params == "n") {
        return {normalize(prefix_sum_character([](int n) { return rational(n); }, full)), std::nullopt};
    }
    if (params.substr(0, 2) == "n^") {
        const auto k = to_int(params.substr(2));
        if (!k || *k < 0) {
            unknown(name, "exponent must be a nonnegative integer");
        }
        const int e = *k;
        return {normalize(prefix_sum_character(
                    [e](int n) {
                        integer p;
                        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(e));
                        return rational(p);
                    },
                    full)),
                std::nullopt};
    }
    try {
        if (params.substr(0, 6) == "const:") {
            const rational q = parse_rational(params.substr(6));
            if (q == 0) {
                unknown(name, "a zero constant makes every prefix sum vanish");
            }
            return {normalize(prefix_sum_character([q](int) { return q; }, full)), std::nullopt};
        }
        if (params.substr(0, 7) == "values:") {
            auto values = std::make_shared<std::vector<rational>>();
            for (auto item : split(params.substr(7), ',')) {
                values->push_back(parse_rational(item));
            }
            const int bound = static_cast<int>(values->size());
            registry_entry e{prefix_sum_character(
                                 [values, full](int n) {
                                     if (n > static_cast<int>(values->size())) {
                                         throw degree_cap_exceeded("tau of '" + full + "' is only given up to " +
                                                                   std::to_string(values->size()));
                                     }
                                     return (*values)[static_cast<std::size_t>(n - 1)];
                                 },
                                 full),
                             bound};
            e.f = normalize(e.f, bound);
            return e;
        }
    } catch (const parse_error &err) {
        unknown(name, err.what());
    }
    unknown(name, "unrecognized tau for prefix-sum");
}

registry_entry order_entry(std::string_view name, std::string_view params)
{
    std::vector<int> perm;
    for (auto item : split(params, ',')) {
        const auto v = to_int(item);
        if (!v) {
            unknown(name, "order must be a comma-separated permutation");
        }
        perm.push_back(*v);
    }
    const int m = static_cast<int>(perm.size());
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < m; ++i) {
        if (sorted[i] != i + 1) {
            unknown(name, "order must be a permutation of 1.." + std::to_string(m));
        }
    }
    auto position = std::make_shared<std::vector<int>>(static_cast<std::size_t>(m) + 1, 0);
    for (int i = 0; i < m; ++i) {
        (*position)[static_cast<std::size_t>(perm[i])] = i;
    }
    auto precedes = [position](int a, int b) {
        return (*position)[static_cast<std::size_t>(a)] < (*position)[static_cast<std::size_t>(b)];
    };
    return {order_basis_character(precedes, m, std::string(name)), m};
}

} // namespace

registry_entry lookup_basis(std::string_view name)
{
    if (name == "type1") {
        return {builtin(builtin_kind::type_one), std::nullopt};
    }
    if (name == "type2") {
        return {builtin(builtin_kind::type_two), std::nullopt};
    }
    if (name == "even-odd") {
        return {builtin(builtin_kind::even_odd), std::nullopt};
    }
    if (name == "combinatorial") {
        return {builtin(builtin_kind::combinatorial), std::nullopt};
    }
    if (name == "reverse-combinatorial") {
        return {builtin(builtin_kind::reverse_combinatorial), std::nullopt};
    }
    if (name.substr(0, 11) == "prefix-sum:") {
        return prefix_sum_entry(name, name.substr(11));
    }
    if (name.substr(0, 6) == "order:") {
        return order_entry(name, name.substr(6));
    }
    unknown(name);
}

std::vector<std::string> registry_names()
{
    std::vector<std::string> r = fixed_names;
    r.insert(r.end(), {"prefix-sum:n", "prefix-sum:n^<k>", "prefix-sum:const:<q>", "prefix-sum:values:<q1>,<q2>,...",
                       "order:<permutation of 1..m>"});
    return r;
}

} // namespace qsh
