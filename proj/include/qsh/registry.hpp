#ifndef QSH_REGISTRY_HPP
#define QSH_REGISTRY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <qsh/characters.hpp>

namespace qsh
{

// A named normalized shuffle character from the registry, with the largest
// degree it is defined for (unbounded when empty).
struct registry_entry {
    character_data f;
    std::optional<int> degree_bound;

    // Throws degree_cap_exceeded when degree exceeds the bound.
    void require_degree(int degree) const;
};

// Names: type1, type2, even-odd, combinatorial, reverse-combinatorial,
//   prefix-sum:n, prefix-sum:n^k, prefix-sum:const:<q>,
//   prefix-sum:values:<q1>,<q2>,... (tau(i) = q_i, bounded by the list length),
//   order:<permutation of 1..m> (parts ordered by position, bounded by m).
// Throws unknown_basis listing the known names.
registry_entry lookup_basis(std::string_view name);

// The fixed names plus one example of each parametrized family.
std::vector<std::string> registry_names();

} // namespace qsh

#endif
