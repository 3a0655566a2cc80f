#include <qsh/element.hpp>

#include <sstream>

namespace qsh
{

std::string basis::symbol() const
{
    switch (m_kind) {
        case kind::monomial:
            return "M";
        case kind::shuffle_algebra:
            return "x";
        case kind::power_sum:
            return "P";
        case kind::shuffle_basis:
            return "X";
        case kind::monomial_dual:
            return "M*";
    }
    return "?";
}

std::string basis::tag() const
{
    switch (m_kind) {
        case kind::power_sum:
        case kind::shuffle_basis:
            return symbol() + ":" + m_name;
        default:
            return symbol();
    }
}

basis basis::from_tag(const std::string &tag)
{
    if (tag == "M") {
        return monomial();
    }
    if (tag == "x") {
        return shuffle_algebra();
    }
    if (tag == "M*") {
        return monomial_dual();
    }
    if (tag.size() > 2 && tag[1] == ':' && (tag[0] == 'P' || tag[0] == 'X')) {
        return tag[0] == 'P' ? power_sum(tag.substr(2)) : shuffle_basis(tag.substr(2));
    }
    throw parse_error("unknown basis tag '" + tag + "'");
}

graded_element::graded_element(basis b, const composition &c, rational coef) : m_basis(std::move(b))
{
    add_term(c, coef);
}

graded_element::graded_element(basis b, term_map terms) : m_basis(std::move(b))
{
    for (auto &[c, q] : terms) {
        add_term(c, q);
    }
}

rational graded_element::coefficient(const composition &c) const
{
    auto it = m_terms.find(c);
    return it == m_terms.end() ? rational(0) : it->second;
}

void graded_element::add_term(const composition &c, const rational &coef)
{
    if (coef == 0) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(c, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

graded_element graded_element::homogeneous_part(int n) const
{
    graded_element r(m_basis);
    for (const auto &[c, q] : m_terms) {
        if (c.size() == n) {
            r.m_terms.emplace(c, q);
        }
    }
    return r;
}

int graded_element::max_degree() const
{
    // Terms are sorted by size first.
    return m_terms.empty() ? -1 : m_terms.rbegin()->first.size();
}

bool graded_element::is_homogeneous_of(int n) const
{
    for (const auto &[c, q] : m_terms) {
        if (c.size() != n) {
            return false;
        }
    }
    return true;
}

void graded_element::require_same_basis(const graded_element &other) const
{
    if (!(m_basis == other.m_basis)) {
        throw basis_mismatch("cannot combine elements in bases " + m_basis.tag() + " and " + other.m_basis.tag());
    }
}

graded_element &graded_element::operator+=(const graded_element &other)
{
    require_same_basis(other);
    for (const auto &[c, q] : other.m_terms) {
        add_term(c, q);
    }
    return *this;
}

graded_element &graded_element::operator-=(const graded_element &other)
{
    require_same_basis(other);
    for (const auto &[c, q] : other.m_terms) {
        add_term(c, -q);
    }
    return *this;
}

graded_element &graded_element::operator*=(const rational &s)
{
    if (s == 0) {
        m_terms.clear();
        return *this;
    }
    for (auto &[c, q] : m_terms) {
        q *= s;
    }
    return *this;
}

void tensor_element::add_term(const composition &left, const composition &right, const rational &coef)
{
    if (coef == 0) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(key{left, right}, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

rational tensor_element::coefficient(const composition &left, const composition &right) const
{
    auto it = m_terms.find(key{left, right});
    return it == m_terms.end() ? rational(0) : it->second;
}

tensor_element &tensor_element::operator+=(const tensor_element &other)
{
    if (!(m_basis == other.m_basis)) {
        throw basis_mismatch("tensor basis mismatch");
    }
    for (const auto &[k, c] : other.m_terms) {
        add_term(k.first, k.second, c);
    }
    return *this;
}

namespace
{

void require_primitive(const basis &b, const char *op)
{
    if (!b.is_primitive()) {
        throw basis_mismatch(std::string(op) + " is only defined in the M and x bases, got " + b.tag());
    }
}

composition_multiset basis_product(const basis &b, const composition &u, const composition &v)
{
    return b.type() == basis::kind::monomial ? quasi_shuffle(u, v) : shuffle(u, v);
}

} // namespace

tensor_element tensor(const graded_element &a, const graded_element &b)
{
    if (!(a.basis_tag() == b.basis_tag())) {
        throw basis_mismatch("tensor factors in different bases");
    }
    tensor_element t(a.basis_tag());
    for (const auto &[u, p] : a.terms()) {
        for (const auto &[v, q] : b.terms()) {
            t.add_term(u, v, p * q);
        }
    }
    return t;
}

tensor_element tensor_product(const tensor_element &a, const tensor_element &b)
{
    if (!(a.basis_tag() == b.basis_tag())) {
        throw basis_mismatch("tensor factors in different bases");
    }
    const basis &bt = a.basis_tag();
    require_primitive(bt, "tensor product");
    tensor_element t(bt);
    for (const auto &[ka, ca] : a.terms()) {
        for (const auto &[kb, cb] : b.terms()) {
            auto left = basis_product(bt, ka.first, kb.first);
            auto right = basis_product(bt, ka.second, kb.second);
            for (const auto &[l, ml] : left) {
                for (const auto &[r, mr] : right) {
                    t.add_term(l, r, ca * cb * ml * mr);
                }
            }
        }
    }
    return t;
}

graded_element product(const graded_element &a, const graded_element &b)
{
    if (!(a.basis_tag() == b.basis_tag())) {
        throw basis_mismatch("product of elements in bases " + a.basis_tag().tag() + " and " + b.basis_tag().tag());
    }
    require_primitive(a.basis_tag(), "product");
    graded_element r(a.basis_tag());
    for (const auto &[u, p] : a.terms()) {
        for (const auto &[v, q] : b.terms()) {
            for (const auto &[w, mult] : basis_product(a.basis_tag(), u, v)) {
                r.add_term(w, p * q * mult);
            }
        }
    }
    return r;
}

tensor_element coproduct(const graded_element &h)
{
    require_primitive(h.basis_tag(), "coproduct");
    tensor_element t(h.basis_tag());
    for (const auto &[c, q] : h.terms()) {
        for (std::size_t i = 0; i <= c.length(); ++i) {
            t.add_term(c.slice(0, i), c.slice(i, c.length()), q);
        }
    }
    return t;
}

std::map<std::vector<composition>, rational> iterated_coproduct(const graded_element &h, int factors)
{
    require_primitive(h.basis_tag(), "iterated coproduct");
    std::map<std::vector<composition>, rational> out;
    for (const auto &[c, q] : h.terms()) {
        // Choose factors-1 cut points 0 <= c1 <= ... <= c_{k-1} <= l.
        std::vector<std::size_t> cuts(static_cast<std::size_t>(factors) + 1, 0);
        cuts.back() = c.length();
        auto emit = [&] {
            std::vector<composition> blocks;
            for (int k = 0; k < factors; ++k) {
                blocks.push_back(c.slice(cuts[k], cuts[k + 1]));
            }
            out[blocks] += q;
        };
        auto rec = [&](auto &&self, int pos) -> void {
            if (pos == factors) {
                emit();
                return;
            }
            for (std::size_t v = cuts[pos - 1]; v <= c.length(); ++v) {
                cuts[pos] = v;
                self(self, pos + 1);
            }
        };
        if (factors == 1) {
            out[{c}] += q;
        } else {
            rec(rec, 1);
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

std::vector<std::pair<block_tuple, rational>> delta_alpha(const graded_element &h, const composition &alpha)
{
    require_primitive(h.basis_tag(), "delta_alpha");
    if (!h.is_homogeneous_of(alpha.size())) {
        throw degree_mismatch("delta_alpha needs an element homogeneous of degree " + std::to_string(alpha.size()));
    }
    std::vector<std::pair<block_tuple, rational>> out;
    for (const auto &[c, q] : h.terms()) {
        if (alpha.empty()) {
            out.emplace_back(block_tuple{}, q);
        } else if (refines(c, alpha)) {
            out.emplace_back(refinement_split(c, alpha), q);
        }
    }
    return out;
}

graded_element antipode_shuffle(const graded_element &h)
{
    if (h.basis_tag().type() != basis::kind::shuffle_algebra) {
        throw basis_mismatch("antipode_shuffle expects the x basis, got " + h.basis_tag().tag());
    }
    graded_element r(h.basis_tag());
    for (const auto &[c, q] : h.terms()) {
        r.add_term(c.reversed(), c.length() % 2 == 0 ? q : rational(-q));
    }
    return r;
}

namespace
{

const graded_element &antipode_of_basis_element(const basis &b, const composition &c,
                                                std::map<composition, graded_element> &memo)
{
    if (auto it = memo.find(c); it != memo.end()) {
        return it->second;
    }
    graded_element s(b);
    if (c.empty()) {
        s.add_term(c, 1);
    } else {
        for (std::size_t i = 0; i < c.length(); ++i) {
            const graded_element &left = antipode_of_basis_element(b, c.slice(0, i), memo);
            s -= product(left, graded_element(b, c.slice(i, c.length())));
        }
    }
    return memo.emplace(c, std::move(s)).first->second;
}

} // namespace

graded_element antipode_recursive(const graded_element &h)
{
    require_primitive(h.basis_tag(), "antipode");
    std::map<composition, graded_element> memo;
    graded_element r(h.basis_tag());
    for (const auto &[c, q] : h.terms()) {
        r += q * antipode_of_basis_element(h.basis_tag(), c, memo);
    }
    return r;
}

graded_element antipode_monomial(const graded_element &h)
{
    if (h.basis_tag().type() != basis::kind::monomial) {
        throw basis_mismatch("antipode_monomial expects the M basis, got " + h.basis_tag().tag());
    }
    return antipode_recursive(h);
}

namespace
{

graded_element antipode(const graded_element &h)
{
    return h.basis_tag().type() == basis::kind::shuffle_algebra ? antipode_shuffle(h) : antipode_monomial(h);
}

} // namespace

graded_element antipode_left_convolution(const graded_element &h)
{
    graded_element r(h.basis_tag());
    const tensor_element split = coproduct(h);
    for (const auto &[k, c] : split.terms()) {
        r += c * product(antipode(graded_element(h.basis_tag(), k.first)), graded_element(h.basis_tag(), k.second));
    }
    return r;
}

graded_element antipode_right_convolution(const graded_element &h)
{
    graded_element r(h.basis_tag());
    const tensor_element split = coproduct(h);
    for (const auto &[k, c] : split.terms()) {
        r += c * product(graded_element(h.basis_tag(), k.first), antipode(graded_element(h.basis_tag(), k.second)));
    }
    return r;
}

graded_element power_sum(const composition &lambda)
{
    if (!is_partition(lambda)) {
        throw not_a_partition(to_string(lambda) + " is not weakly decreasing");
    }
    graded_element r = M({});
    for (int part : lambda.parts()) {
        r = product(r, M({part}));
    }
    return r;
}

rational counit(const graded_element &h)
{
    return h.coefficient(composition{});
}

} // namespace qsh
