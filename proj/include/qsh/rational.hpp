#ifndef QSH_RATIONAL_HPP
#define QSH_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qsh
{

// All coefficients in the library are exact rationals. GMP keeps values in
// lowest terms after every arithmetic operation.
using rational = mpq_class;
using integer = mpz_class;

rational make_rational(long num, long den = 1);
// num/den in lowest terms; mpq_class(num, den) alone does not reduce.
rational make_rational(const integer &num, const integer &den);

// "p/q" in lowest terms with the sign on the numerator; integers print as "p".
std::string to_string(const rational &q);

// Accepts "p", "-p", "p/q" (q != 0). Throws parse_error otherwise.
rational parse_rational(std::string_view text);

bool is_integer(const rational &q);

integer factorial(unsigned n);

} // namespace qsh

#endif
