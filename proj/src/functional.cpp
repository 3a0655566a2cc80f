#include <qsh/functional.hpp>

#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace qsh
{

struct composition_function::state {
    recursive_body fn;
    mutable std::shared_mutex mutex;
    mutable std::unordered_map<composition, rational, composition_hash> cache;
};

composition_function::composition_function() : composition_function(body([](const composition &) {
    return rational(0);
}))
{
}

composition_function::composition_function(body fn) : m_state(std::make_shared<state>())
{
    m_state->fn = [f = std::move(fn)](const composition &c, const composition_function &) { return f(c); };
}

composition_function composition_function::recursive(recursive_body fn)
{
    composition_function r;
    r.m_state = std::make_shared<state>();
    r.m_state->fn = std::move(fn);
    return r;
}

rational composition_function::operator()(const composition &c) const
{
    {
        std::shared_lock lock(m_state->mutex);
        if (auto it = m_state->cache.find(c); it != m_state->cache.end()) {
            return it->second;
        }
    }
    rational value = m_state->fn(c, *this);
    std::unique_lock lock(m_state->mutex);
    m_state->cache.try_emplace(c, value);
    return value;
}

std::size_t composition_function::cached_count() const
{
    std::shared_lock lock(m_state->mutex);
    return m_state->cache.size();
}

std::string describe(const check_result &r)
{
    std::ostringstream os;
    os << (r.passed ? "pass" : "FAIL") << " (" << r.cases << " cases)";
    if (r.counterexample) {
        os << " witness:";
        for (const auto &c : r.counterexample->indices) {
            os << " (" << to_string(c) << ")";
        }
        if (!r.counterexample->detail.empty()) {
            os << " -- " << r.counterexample->detail;
        }
    }
    return os.str();
}

rational functional::operator()(const graded_element &h) const
{
    if (!(h.basis_tag() == m_basis)) {
        throw basis_mismatch("functional on " + m_basis.tag() + " applied to element in " + h.basis_tag().tag());
    }
    rational r = 0;
    for (const auto &[c, q] : h.terms()) {
        r += q * (*this)(c);
    }
    return r;
}

functional functional::zero(basis b)
{
    return functional(std::move(b), 0, composition_function());
}

functional functional::counit(basis b)
{
    return functional(std::move(b), 1, composition_function());
}

namespace
{

void require_same_basis(const functional &a, const functional &b, const char *op)
{
    if (!(a.basis_tag() == b.basis_tag())) {
        throw basis_mismatch(std::string(op) + ": functionals on " + a.basis_tag().tag() + " and " +
                             b.basis_tag().tag());
    }
}

} // namespace

functional operator+(const functional &a, const functional &b)
{
    require_same_basis(a, b, "sum");
    return functional(a.basis_tag(), a.at_empty() + b.at_empty(),
                      [a, b](const composition &c) { return rational(a(c) + b(c)); });
}

functional operator-(const functional &a, const functional &b)
{
    require_same_basis(a, b, "difference");
    return functional(a.basis_tag(), a.at_empty() - b.at_empty(),
                      [a, b](const composition &c) { return rational(a(c) - b(c)); });
}

functional operator*(const rational &s, const functional &a)
{
    return functional(a.basis_tag(), s * a.at_empty(), [s, a](const composition &c) { return rational(s * a(c)); });
}

functional convolve(const functional &phi, const functional &psi)
{
    require_same_basis(phi, psi, "convolve");
    return functional(phi.basis_tag(), phi.at_empty() * psi.at_empty(), [phi, psi](const composition &c) {
        rational r = 0;
        for (std::size_t i = 0; i <= c.length(); ++i) {
            r += phi(c.slice(0, i)) * psi(c.slice(i, c.length()));
        }
        return r;
    });
}

functional functional_inverse(const functional &zeta)
{
    if (zeta.at_empty() == 0) {
        throw not_invertible("functional vanishes at the empty composition");
    }
    const rational inv0 = 1 / zeta.at_empty();
    // (zeta^{-1} * zeta)(c) = 0 for c nonempty, solved for the term with the
    // full composition on the left.
    auto fn = composition_function::recursive([zeta, inv0](const composition &c, const composition_function &self) {
        rational r = 0;
        for (std::size_t i = 0; i < c.length(); ++i) {
            const composition left = c.slice(0, i);
            r += (left.empty() ? inv0 : self(left)) * zeta(c.slice(i, c.length()));
        }
        return rational(-r * inv0);
    });
    return functional(zeta.basis_tag(), inv0, std::move(fn));
}

namespace
{

// Convolution powers base^{*0..max_degree}.
std::vector<functional> convolution_powers(const functional &base, int max_degree)
{
    std::vector<functional> powers{functional::counit(base.basis_tag())};
    for (int m = 1; m <= max_degree; ++m) {
        powers.push_back(convolve(powers.back(), base));
    }
    return powers;
}

void check_cap(const composition &c, int max_degree, const char *op)
{
    if (c.size() > max_degree) {
        throw degree_cap_exceeded(std::string(op) + " was built for degree <= " + std::to_string(max_degree) +
                                  ", evaluated at " + to_string(c));
    }
}

} // namespace

functional exp_functional(const functional &xi, int max_degree)
{
    if (xi.at_empty() != 0) {
        throw nonvanishing_at_empty("exp needs a functional vanishing at the empty composition");
    }
    auto powers = convolution_powers(xi, max_degree);
    return functional(xi.basis_tag(), 1, [powers, max_degree](const composition &c) {
        check_cap(c, max_degree, "exp");
        // xi^{*m} vanishes on c once m exceeds its length.
        rational r = 0;
        integer fact = 1;
        for (std::size_t m = 1; m <= c.length(); ++m) {
            fact *= static_cast<unsigned long>(m);
            r += powers[m](c) / rational(fact);
        }
        return r;
    });
}

functional log_functional(const functional &zeta, int max_degree)
{
    if (zeta.at_empty() != 1) {
        throw wrong_value_at_empty("log needs a functional equal to 1 at the empty composition");
    }
    auto shifted = zeta - functional::counit(zeta.basis_tag());
    auto powers = convolution_powers(shifted, max_degree);
    return functional(zeta.basis_tag(), 0, [powers, max_degree](const composition &c) {
        check_cap(c, max_degree, "log");
        rational r = 0;
        for (std::size_t m = 1; m <= c.length(); ++m) {
            rational term = powers[m](c) / static_cast<long>(m);
            r += (m % 2 == 1) ? term : rational(-term);
        }
        return r;
    });
}

functional lie_bracket(const functional &a, const functional &b)
{
    return convolve(a, b) - convolve(b, a);
}

namespace
{

composition_multiset basis_product(const basis &b, const composition &u, const composition &v)
{
    if (b.type() == basis::kind::monomial) {
        return quasi_shuffle(u, v);
    }
    if (b.type() == basis::kind::shuffle_algebra) {
        return shuffle(u, v);
    }
    throw basis_mismatch("products are only available in the M and x bases, got " + b.tag());
}

// Calls visit(a, b, products) for all nonempty a, b with |a|+|b| <= max_degree,
// by increasing total degree; stops at the first false.
template <class Visit>
bool for_each_positive_pair(const basis &b, int max_degree, std::size_t &cases, Visit &&visit)
{
    for (int total = 2; total <= max_degree; ++total) {
        for (int da = 1; da < total; ++da) {
            const auto left = compositions_of(da);
            const auto right = compositions_of(total - da);
            for (const auto &u : left) {
                for (const auto &v : right) {
                    ++cases;
                    if (!visit(u, v, basis_product(b, u, v))) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

rational sum_over(const functional &phi, const composition_multiset &m)
{
    rational r = 0;
    for (const auto &[c, k] : m) {
        r += phi(c) * static_cast<unsigned long>(k);
    }
    return r;
}

} // namespace

check_result is_character(const functional &phi, int max_degree)
{
    std::size_t cases = 0;
    std::optional<witness> bad;
    for_each_positive_pair(phi.basis_tag(), max_degree, cases,
                           [&](const composition &u, const composition &v, const composition_multiset &prod) {
                               const rational lhs = sum_over(phi, prod);
                               const rational rhs = phi(u) * phi(v);
                               if (lhs != rhs) {
                                   bad = witness{{u, v}, "phi(ab) = " + to_string(lhs) +
                                                             " but phi(a) phi(b) = " + to_string(rhs)};
                                   return false;
                               }
                               return true;
                           });
    if (bad) {
        return check_result::fail(std::move(*bad), cases);
    }
    ++cases;
    if (phi.at_empty() != 1) {
        return check_result::fail(witness{{composition{}}, "phi(1) = " + to_string(phi.at_empty())}, cases);
    }
    return check_result::pass(cases);
}

check_result is_infinitesimal_character(const functional &phi, int max_degree)
{
    std::size_t cases = 1;
    if (phi.at_empty() != 0) {
        return check_result::fail(witness{{composition{}}, "value at the unit is " + to_string(phi.at_empty())},
                                  cases);
    }
    std::optional<witness> bad;
    for_each_positive_pair(phi.basis_tag(), max_degree, cases,
                           [&](const composition &u, const composition &v, const composition_multiset &prod) {
                               const rational value = sum_over(phi, prod);
                               if (value != 0) {
                                   bad = witness{{u, v}, "value on the product is " + to_string(value)};
                                   return false;
                               }
                               return true;
                           });
    if (bad) {
        return check_result::fail(std::move(*bad), cases);
    }
    return check_result::pass(cases);
}

check_result functionals_agree(const functional &a, const functional &b, int max_degree)
{
    std::size_t cases = 0;
    for (const auto &c : compositions_up_to(max_degree)) {
        ++cases;
        const rational va = a(c);
        const rational vb = b(c);
        if (va != vb) {
            return check_result::fail(witness{{c}, to_string(va) + " vs " + to_string(vb)}, cases);
        }
    }
    return check_result::pass(cases);
}

} // namespace qsh
