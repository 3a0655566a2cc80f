#ifndef QSH_IO_HPP
#define QSH_IO_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <qsh/element.hpp>
#include <qsh/functional.hpp>

namespace qsh
{

using json = nlohmann::json;

// {"basis":"M","terms":[{"comp":[2,1],"coef":"1/3"}]}, terms in canonical order.
json element_to_json(const graded_element &h);
// Accepts compositions as arrays or as text ("2,1", "-") and coefficients as
// strings or integers.
graded_element element_from_json(const json &j);

// "M[2,1] + 1/3 M[3]"; the zero element is "0".
std::string format_element(const graded_element &h);
// Inverse of format_element. Every term must use the symbol of b.
graded_element parse_element(std::string_view text, const basis &b);

// Nonzero values on compositions of size <= max_degree, serialized as an
// element with basis tag "M*".
json functional_to_json(const functional &phi, int max_degree);
std::string format_functional(const functional &phi, int max_degree);
// Values listed in the JSON; every unlisted composition maps to 0. The
// functional lives on the given primitive basis.
functional functional_from_json(const json &j, const basis &on);

// Square or rectangular matrix indexed by compositions.
struct composition_table {
    std::vector<composition> rows;
    std::vector<composition> cols;
    std::vector<std::vector<rational>> entries;
};

// Header row of column labels, then one row per composition.
void write_csv(std::ostream &out, const composition_table &t);
json table_to_json(const composition_table &t);
void write_text(std::ostream &out, const composition_table &t);

} // namespace qsh

#endif
