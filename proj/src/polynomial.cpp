#include <qsh/polynomial.hpp>

namespace qsh
{

void polynomial::add_term(const exponents &e, const rational &c)
{
    if (static_cast<int>(e.size()) != m_vars) {
        throw std::invalid_argument("exponent vector has the wrong number of variables");
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

rational polynomial::coefficient(const exponents &e) const
{
    auto it = m_terms.find(e);
    return it == m_terms.end() ? rational(0) : it->second;
}

polynomial &polynomial::operator+=(const polynomial &other)
{
    if (other.m_vars != m_vars) {
        throw std::invalid_argument("polynomials in different numbers of variables");
    }
    for (const auto &[e, c] : other.m_terms) {
        add_term(e, c);
    }
    return *this;
}

polynomial operator*(const polynomial &a, const polynomial &b)
{
    if (a.m_vars != b.m_vars) {
        throw std::invalid_argument("polynomials in different numbers of variables");
    }
    polynomial r(a.m_vars);
    for (const auto &[ea, ca] : a.m_terms) {
        for (const auto &[eb, cb] : b.m_terms) {
            polynomial::exponents e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] += eb[i];
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

rational polynomial::evaluate_all(const rational &value) const
{
    rational total = 0;
    for (const auto &[e, c] : m_terms) {
        rational term = c;
        for (int k : e) {
            for (int i = 0; i < k; ++i) {
                term *= value;
            }
        }
        total += term;
    }
    return total;
}

polynomial expand_polynomial(const graded_element &h, int num_vars)
{
    if (h.basis_tag().type() != basis::kind::monomial) {
        throw basis_mismatch("expand_polynomial expects the M basis");
    }
    polynomial p(num_vars);
    for (const auto &[c, q] : h.terms()) {
        const auto len = static_cast<int>(c.length());
        if (len > num_vars) {
            continue;
        }
        // Increasing index tuples i_1 < ... < i_l in [0, num_vars).
        std::vector<int> idx(static_cast<std::size_t>(len));
        for (int k = 0; k < len; ++k) {
            idx[k] = k;
        }
        while (true) {
            polynomial::exponents e(static_cast<std::size_t>(num_vars), 0);
            for (int k = 0; k < len; ++k) {
                e[idx[k]] = c[k];
            }
            p.add_term(e, q);
            int k = len - 1;
            while (k >= 0 && idx[k] == num_vars - len + k) {
                --k;
            }
            if (k < 0) {
                break;
            }
            ++idx[k];
            for (int j = k + 1; j < len; ++j) {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    return p;
}

} // namespace qsh
