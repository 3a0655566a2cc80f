#ifndef QSH_CHECK_HPP
#define QSH_CHECK_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <qsh/composition.hpp>

namespace qsh
{

// Where a verification failed: the indices involved and a human-readable
// account of the mismatch.
struct witness {
    std::vector<composition> indices;
    std::string detail;
};

// Outcome of an exhaustive check up to some degree.
struct check_result {
    bool passed = true;
    std::optional<witness> counterexample;
    std::size_t cases = 0;

    explicit operator bool() const noexcept
    {
        return passed;
    }

    static check_result pass(std::size_t cases)
    {
        return {true, std::nullopt, cases};
    }
    static check_result fail(witness w, std::size_t cases = 0)
    {
        return {false, std::move(w), cases};
    }
};

std::string describe(const check_result &r);

} // namespace qsh

#endif
