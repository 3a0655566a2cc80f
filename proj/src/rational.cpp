#include <qsh/rational.hpp>

#include <cctype>

#include <qsh/errors.hpp>

namespace qsh
{

rational make_rational(long num, long den)
{
    if (den == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    rational q(num, den);
    q.canonicalize();
    return q;
}

rational make_rational(const integer &num, const integer &den)
{
    if (den == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const rational &q)
{
    return q.get_str();
}

namespace
{

bool valid_integer_text(std::string_view s, bool allow_sign)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    if (!valid_integer_text(num, true)) {
        throw parse_error("invalid rational: '" + std::string(text) + "'");
    }
    if (num[0] == '+') {
        num.remove_prefix(1);
    }
    rational q;
    if (slash == std::string_view::npos) {
        q = rational(integer(std::string(num)));
        return q;
    }
    auto den = text.substr(slash + 1);
    if (!valid_integer_text(den, false)) {
        throw parse_error("invalid rational: '" + std::string(text) + "'");
    }
    integer d(std::string{den});
    if (d == 0) {
        throw parse_error("zero denominator in '" + std::string(text) + "'");
    }
    q = rational(integer(std::string(num)), d);
    q.canonicalize();
    return q;
}

bool is_integer(const rational &q)
{
    return q.get_den() == 1;
}

integer factorial(unsigned n)
{
    integer r = 1;
    for (unsigned i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

} // namespace qsh
