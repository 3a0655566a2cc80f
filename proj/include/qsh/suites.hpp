#ifndef QSH_SUITES_HPP
#define QSH_SUITES_HPP

#include <string>
#include <string_view>
#include <vector>

#include <qsh/characters.hpp>
#include <qsh/check.hpp>
#include <qsh/registry.hpp>

namespace qsh
{

// S(x_a) = (-1)^l(a) x_rev(a) against the generic recursion, |a| <= max_degree.
check_result check_antipode_closed_form(int max_degree);

// m o (S (x) id) o Delta = m o (id (x) S) o Delta = u eps on every basis
// element of degree <= max_degree of the M or x basis.
check_result check_antipode_axiom(const basis &b, int max_degree);

// g_to_f(f_to_g(f)) = f on every |a| <= max_degree.
check_result check_fg_roundtrip(const character_data &f, int max_degree);

// f_to_g(f) against closed_form_g. For the even-odd form only odd sizes are compared.
check_result check_closed_form_g(const character_data &f, closed_form_kind kind, int max_degree);

struct suite_line {
    std::string name;
    check_result result;
};

struct suite_report {
    std::string suite;
    std::vector<suite_line> lines;

    bool passed() const;
};

// Runs a named verification suite on a registry basis:
// shuffle-character, qps, antipode, theta-eigen, integrality, fg-roundtrip.
// theta-eigen uses the basis as the even-part character. Throws
// std::invalid_argument for unknown suites.
suite_report run_suite(std::string_view suite, const registry_entry &entry, int degree);

std::vector<std::string> suite_names();

} // namespace qsh

#endif
