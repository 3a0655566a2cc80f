#include <qsh/io.hpp>

#include <algorithm>
#include <cctype>
#include <memory>
#include <sstream>

namespace qsh
{

namespace
{

json composition_to_json(const composition &c)
{
    json a = json::array();
    for (int p : c.parts()) {
        a.push_back(p);
    }
    return a;
}

composition composition_from_json(const json &j)
{
    if (j.is_string()) {
        return parse_composition(j.get<std::string>());
    }
    if (!j.is_array()) {
        throw parse_error("composition must be an array or a string");
    }
    std::vector<int> parts;
    for (const auto &p : j) {
        if (!p.is_number_integer()) {
            throw parse_error("composition parts must be integers");
        }
        parts.push_back(p.get<int>());
    }
    try {
        return composition(std::move(parts));
    } catch (const invalid_composition &e) {
        throw parse_error(e.what());
    }
}

rational coefficient_from_json(const json &j)
{
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return rational(integer(std::to_string(j.get<long long>())));
    }
    throw parse_error("coefficient must be a string \"p/q\" or an integer");
}

json terms_to_json(const term_map &terms)
{
    json a = json::array();
    for (const auto &[c, q] : terms) {
        a.push_back({{"comp", composition_to_json(c)}, {"coef", to_string(q)}});
    }
    return a;
}

} // namespace

json element_to_json(const graded_element &h)
{
    return {{"basis", h.basis_tag().tag()}, {"terms", terms_to_json(h.terms())}};
}

graded_element element_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms") || !j["basis"].is_string() ||
        !j["terms"].is_array()) {
        throw parse_error("element JSON needs a string \"basis\" and an array \"terms\"");
    }
    graded_element h(basis::from_tag(j["basis"].get<std::string>()));
    for (const auto &t : j["terms"]) {
        if (!t.is_object() || !t.contains("comp") || !t.contains("coef")) {
            throw parse_error("each term needs \"comp\" and \"coef\"");
        }
        h.add_term(composition_from_json(t["comp"]), coefficient_from_json(t["coef"]));
    }
    return h;
}

std::string format_element(const graded_element &h)
{
    if (h.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[c, q] : h.terms()) {
        const bool negative = q < 0;
        const rational mag = abs(q);
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (mag != 1) {
            os << to_string(mag) << ' ';
        }
        os << h.basis_tag().symbol() << '[' << to_string(c) << ']';
    }
    return os.str();
}

graded_element parse_element(std::string_view text, const basis &b)
{
    graded_element h(b);
    const std::string symbol = b.symbol();
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
    };
    skip();
    if (text.substr(i) == "0") {
        return h;
    }
    bool first = true;
    while (true) {
        skip();
        if (i == text.size()) {
            if (first) {
                throw parse_error("empty element");
            }
            break;
        }
        bool negative = false;
        if (text[i] == '+' || text[i] == '-') {
            negative = text[i] == '-';
            ++i;
            skip();
        } else if (!first) {
            throw parse_error("expected + or - at position " + std::to_string(i));
        }
        first = false;
        rational coef = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            const std::size_t start = i;
            while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) {
                ++i;
            }
            coef = parse_rational(text.substr(start, i - start));
            skip();
        }
        if (text.substr(i, symbol.size()) != symbol || text.substr(i + symbol.size(), 1) != "[") {
            throw parse_error("expected " + symbol + "[...] at position " + std::to_string(i));
        }
        i += symbol.size() + 1;
        const auto close = text.find(']', i);
        if (close == std::string_view::npos) {
            throw parse_error("missing ]");
        }
        h.add_term(parse_composition(text.substr(i, close - i)), negative ? rational(-coef) : coef);
        i = close + 1;
    }
    return h;
}

json functional_to_json(const functional &phi, int max_degree)
{
    term_map values;
    for (const auto &c : compositions_up_to(max_degree)) {
        const rational v = phi(c);
        if (v != 0) {
            values.emplace(c, v);
        }
    }
    return {{"basis", basis::monomial_dual().tag()}, {"terms", terms_to_json(values)}};
}

std::string format_functional(const functional &phi, int max_degree)
{
    std::ostringstream os;
    for (const auto &c : compositions_up_to(max_degree)) {
        os << phi.basis_tag().symbol() << '[' << to_string(c) << "] -> " << to_string(phi(c)) << '\n';
    }
    return os.str();
}

functional functional_from_json(const json &j, const basis &on)
{
    if (!on.is_primitive()) {
        throw basis_mismatch("functionals live on the M or x basis");
    }
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        throw parse_error("functional JSON needs an array \"terms\"");
    }
    auto values = std::make_shared<term_map>();
    for (const auto &t : j["terms"]) {
        if (!t.is_object() || !t.contains("comp") || !t.contains("coef")) {
            throw parse_error("each term needs \"comp\" and \"coef\"");
        }
        (*values)[composition_from_json(t["comp"])] += coefficient_from_json(t["coef"]);
    }
    rational at_empty = 0;
    if (auto it = values->find(composition{}); it != values->end()) {
        at_empty = it->second;
    }
    return functional(on, at_empty, [values](const composition &c) {
        auto it = values->find(c);
        return it == values->end() ? rational(0) : it->second;
    });
}

void write_csv(std::ostream &out, const composition_table &t)
{
    out << "\"\"";
    for (const auto &c : t.cols) {
        out << ",\"" << to_string(c) << '"';
    }
    out << '\n';
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        out << '"' << to_string(t.rows[i]) << '"';
        for (const auto &q : t.entries[i]) {
            out << ',' << to_string(q);
        }
        out << '\n';
    }
}

json table_to_json(const composition_table &t)
{
    json rows = json::array();
    json cols = json::array();
    json entries = json::array();
    for (const auto &c : t.rows) {
        rows.push_back(composition_to_json(c));
    }
    for (const auto &c : t.cols) {
        cols.push_back(composition_to_json(c));
    }
    for (const auto &row : t.entries) {
        json r = json::array();
        for (const auto &q : row) {
            r.push_back(to_string(q));
        }
        entries.push_back(std::move(r));
    }
    return {{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

void write_text(std::ostream &out, const composition_table &t)
{
    std::vector<std::size_t> width(t.cols.size() + 1, 0);
    for (const auto &c : t.rows) {
        width[0] = std::max(width[0], to_string(c).size());
    }
    for (std::size_t j = 0; j < t.cols.size(); ++j) {
        width[j + 1] = to_string(t.cols[j]).size();
        for (const auto &row : t.entries) {
            width[j + 1] = std::max(width[j + 1], to_string(row[j]).size());
        }
    }
    auto pad = [&out](const std::string &s, std::size_t w) { out << std::string(w - s.size(), ' ') << s; };
    pad("", width[0]);
    for (std::size_t j = 0; j < t.cols.size(); ++j) {
        out << "  ";
        pad(to_string(t.cols[j]), width[j + 1]);
    }
    out << '\n';
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        pad(to_string(t.rows[i]), width[0]);
        for (std::size_t j = 0; j < t.cols.size(); ++j) {
            out << "  ";
            pad(to_string(t.entries[i][j]), width[j + 1]);
        }
        out << '\n';
    }
}

} // namespace qsh
