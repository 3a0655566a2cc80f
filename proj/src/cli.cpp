#include <qsh/cli.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include <qsh/characters.hpp>
#include <qsh/demos.hpp>
#include <qsh/io.hpp>
#include <qsh/registry.hpp>
#include <qsh/suites.hpp>
#include <qsh/universal.hpp>

namespace qsh
{

namespace
{

struct config {
    std::string basis_name;
    std::string comp;
    std::string element;
    std::string functional_json;
    std::string canonical;
    std::string graph;
    std::string poset;
    std::string suite;
    std::string scale = "qps";
    std::string format = "text";
    std::string out_path;
    int degree = 0;
    bool inverse = false;
};

// Raised for well-formed commands whose arguments do not fit together.
class usage_error : public error
{
public:
    using error::error;
};

// Raised after the report has been written when a check fails.
struct verification_failed {
};

const std::map<std::string, canonical_name> canonical_names{
    {"zetaQ", canonical_name::zeta_q}, {"barZetaQ", canonical_name::bar_zeta_q}, {"xiS", canonical_name::xi_s},
    {"nuQ", canonical_name::nu_q},     {"eta", canonical_name::eta},             {"counit", canonical_name::counit},
};

void require_format(const config &c, std::initializer_list<const char *> allowed)
{
    if (std::find(allowed.begin(), allowed.end(), c.format) == allowed.end()) {
        throw usage_error("format '" + c.format + "' is not available for this command");
    }
}

composition input_composition(const config &c)
{
    const composition a = parse_composition(c.comp);
    if (a.size() > cli_degree_cap) {
        throw degree_cap_exceeded("composition size " + std::to_string(a.size()) + " exceeds the cap " +
                                  std::to_string(cli_degree_cap));
    }
    return a;
}

graded_element input_element(const config &c)
{
    graded_element h;
    if (!c.comp.empty() && !c.element.empty()) {
        throw usage_error("give either --comp or --element, not both");
    }
    if (!c.comp.empty()) {
        h = M(input_composition(c));
    } else if (!c.element.empty()) {
        try {
            h = element_from_json(json::parse(c.element));
        } catch (const json::exception &e) {
            throw parse_error(std::string("malformed element JSON: ") + e.what());
        }
        if (h.max_degree() > cli_degree_cap) {
            throw degree_cap_exceeded("element degree exceeds the cap " + std::to_string(cli_degree_cap));
        }
    } else {
        throw usage_error("an input is required: --comp or --element");
    }
    return h;
}

graded_element input_monomial_element(const config &c)
{
    graded_element h = input_element(c);
    if (h.basis_tag().type() != basis::kind::monomial) {
        throw basis_mismatch("expected an element of the M basis, got " + h.basis_tag().tag());
    }
    return h;
}

registry_entry input_basis(const config &c, int degree)
{
    if (c.basis_name.empty()) {
        throw usage_error("--basis is required");
    }
    registry_entry e = lookup_basis(c.basis_name);
    e.require_degree(degree);
    return e;
}

basis derived_basis(const config &c, const character_data &f)
{
    return c.scale == "qps" ? basis::power_sum(f.name()) : basis::shuffle_basis(f.name());
}

void print_element(std::ostream &os, const config &c, const graded_element &h)
{
    require_format(c, {"text", "json"});
    if (c.format == "json") {
        os << element_to_json(h).dump() << '\n';
    } else {
        os << format_element(h) << '\n';
    }
}

void print_functional(std::ostream &os, const config &c, const functional &phi)
{
    require_format(c, {"text", "json"});
    if (c.format == "json") {
        os << functional_to_json(phi, c.degree).dump() << '\n';
    } else {
        os << format_functional(phi, c.degree);
    }
}

void cmd_expand(const config &c, std::ostream &os)
{
    const composition a = input_composition(c);
    const registry_entry e = input_basis(c, a.size());
    print_element(os, c, c.scale == "qps" ? qps_expand(e.f, a) : basis_expand(e.f, a));
}

void cmd_convert(const config &c, std::ostream &os)
{
    const graded_element h = input_element(c);
    const registry_entry e = input_basis(c, std::max(h.max_degree(), 0));
    if (h.basis_tag().type() == basis::kind::monomial) {
        print_element(os, c, from_monomial(f_to_g(e.f), h, derived_basis(c, e.f)));
        return;
    }
    if (h.basis_tag().is_primitive() || h.basis_tag().name() != e.f.name()) {
        throw basis_mismatch("cannot convert an element of " + h.basis_tag().tag() + " with basis '" + e.f.name() +
                             "'");
    }
    print_element(os, c, to_monomial(e.f, h));
}

void cmd_table(const config &c, std::ostream &os)
{
    const registry_entry e = input_basis(c, c.degree);
    composition_table t;
    t.rows = compositions_of(c.degree);
    t.cols = t.rows;
    const infinitesimal_data g = f_to_g(e.f);
    for (const auto &a : t.rows) {
        graded_element row;
        if (c.inverse) {
            row = from_monomial(g, M(a), derived_basis(c, e.f));
        } else {
            row = c.scale == "qps" ? qps_expand(e.f, a) : basis_expand(e.f, a);
        }
        std::vector<rational> entries;
        for (const auto &b : t.cols) {
            entries.push_back(row.coefficient(b));
        }
        t.entries.push_back(std::move(entries));
    }
    if (c.format == "csv") {
        write_csv(os, t);
    } else if (c.format == "json") {
        json j = table_to_json(t);
        j["basis"] = e.f.name();
        j["rows_in"] = c.inverse ? "M" : derived_basis(c, e.f).tag();
        j["cols_in"] = c.inverse ? derived_basis(c, e.f).tag() : "M";
        os << j.dump() << '\n';
    } else {
        write_text(os, t);
    }
}

json witness_json(const check_result &r)
{
    if (!r.counterexample) {
        return nullptr;
    }
    json indices = json::array();
    for (const auto &a : r.counterexample->indices) {
        indices.push_back(to_string(a));
    }
    return {{"indices", indices}, {"detail", r.counterexample->detail}};
}

void cmd_verify(const config &c, std::ostream &os)
{
    const std::string name = c.basis_name.empty() ? "type2" : c.basis_name;
    const registry_entry e = lookup_basis(name);
    suite_report report;
    try {
        report = run_suite(c.suite, e, c.degree);
    } catch (const std::invalid_argument &err) {
        throw usage_error(err.what());
    }
    require_format(c, {"text", "json"});
    if (c.format == "json") {
        json checks = json::array();
        for (const auto &l : report.lines) {
            checks.push_back({{"name", l.name},
                              {"passed", l.result.passed},
                              {"cases", l.result.cases},
                              {"witness", witness_json(l.result)}});
        }
        os << json{{"suite", c.suite},
                   {"basis", name},
                   {"degree", c.degree},
                   {"passed", report.passed()},
                   {"checks", checks}}
                  .dump()
           << '\n';
    } else {
        os << "suite " << c.suite << ", basis " << name << ", degree <= " << c.degree << '\n';
        for (const auto &l : report.lines) {
            os << "  " << (l.result.passed ? "pass" : "FAIL") << "  " << l.name << "  (" << l.result.cases
               << " cases)\n";
            if (l.result.counterexample) {
                os << "        witness:";
                for (const auto &a : l.result.counterexample->indices) {
                    os << " (" << to_string(a) << ')';
                }
                os << "  " << l.result.counterexample->detail << '\n';
            }
        }
        os << (report.passed() ? "result: pass" : "result: FAIL") << '\n';
    }
    if (!report.passed()) {
        throw verification_failed{};
    }
}

void cmd_theta(const config &c, std::ostream &os)
{
    print_element(os, c, theta(input_monomial_element(c)));
}

void cmd_phi(const config &c, std::ostream &os)
{
    if (!c.graph.empty()) {
        print_element(os, c, chromatic_symmetric(parse_graph(c.graph)));
    } else if (!c.poset.empty()) {
        print_element(os, c, kp_generating_function(parse_poset(c.poset)));
    } else {
        const graded_element h = input_monomial_element(c);
        label_element<composition> x(h.terms().begin(), h.terms().end());
        print_element(os, c, universal_to_qsym(qsym_provider{}, on_labels(canonical(canonical_name::zeta_q)), x));
    }
}

void cmd_psi(const config &c, std::ostream &os)
{
    if (!c.poset.empty()) {
        print_element(os, c, universal_to_sh(poset_provider{}, unique_minimal, parse_poset(c.poset)));
        return;
    }
    if (!c.graph.empty()) {
        const small_graph g = parse_graph(c.graph);
        const registry_entry e = input_basis(c, g.vertex_count());
        const auto xi = char_to_infchar(graph_provider{}, edgeless_indicator, e.f);
        print_element(os, c, universal_to_sh(graph_provider{}, xi, g));
        return;
    }
    const graded_element h = input_monomial_element(c);
    const registry_entry e = input_basis(c, std::max(h.max_degree(), 0));
    const infinitesimal_data g = f_to_g(e.f);
    label_element<composition> x(h.terms().begin(), h.terms().end());
    print_element(os, c, universal_to_sh(qsym_provider{}, g, x));
}

functional input_functional(const config &c, bool allow_basis)
{
    const int given = static_cast<int>(!c.functional_json.empty()) + static_cast<int>(!c.canonical.empty()) +
                      static_cast<int>(allow_basis && !c.basis_name.empty());
    if (given != 1) {
        throw usage_error(allow_basis ? "give exactly one of --functional, --canonical, --basis"
                                      : "give exactly one of --functional, --canonical");
    }
    if (!c.functional_json.empty()) {
        try {
            return functional_from_json(json::parse(c.functional_json), basis::monomial());
        } catch (const json::exception &e) {
            throw parse_error(std::string("malformed functional JSON: ") + e.what());
        }
    }
    if (!c.canonical.empty()) {
        auto it = canonical_names.find(c.canonical);
        if (it == canonical_names.end()) {
            throw usage_error("unknown canonical functional '" + c.canonical +
                              "'; known: zetaQ, barZetaQ, xiS, nuQ, eta, counit");
        }
        return canonical(it->second);
    }
    const registry_entry e = input_basis(c, c.degree);
    return f_to_g(e.f).as_monomial_functional();
}

void cmd_exp(const config &c, std::ostream &os)
{
    print_functional(os, c, exp_functional(input_functional(c, true), c.degree));
}

void cmd_log(const config &c, std::ostream &os)
{
    print_functional(os, c, log_functional(input_functional(c, false), c.degree));
}

void cmd_demo_graph(const config &c, std::ostream &os)
{
    require_format(c, {"text", "json"});
    const small_graph g = parse_graph(c.graph);
    const int n = g.vertex_count();
    const graded_element xg = chromatic_symmetric(g);
    const graded_element oracle = chromatic_symmetric_by_colourings(g);
    const auto chi = chromatic_polynomial(g);
    bool specializes = true;
    for (int k = 0; k <= n; ++k) {
        specializes = specializes && specialize_ones(xg, k) == rational(count_proper_colourings(g, k));
    }
    std::vector<std::string> names;
    if (c.basis_name.empty()) {
        names = {"type1", "type2"};
    } else {
        names = {c.basis_name};
    }
    bool ok = xg == oracle && specializes;
    json pairs = json::array();
    std::ostringstream text;
    for (const auto &name : names) {
        const registry_entry e = lookup_basis(name);
        e.require_degree(n);
        if (n == 0) {
            continue;
        }
        const auto [linear, xi] = graph_infchar_two_ways(g, e.f);
        ok = ok && linear == xi;
        pairs.push_back({{"basis", name}, {"chi_linear", to_string(linear)}, {"xi", to_string(xi)}});
        text << "[k^1] chi_G = " << to_string(linear) << ", xi(G) via " << name << " = " << to_string(xi) << "  "
             << (linear == xi ? "equal" : "DIFFER") << '\n';
    }
    if (c.format == "json") {
        os << json{{"graph", to_string(g)},
                   {"X_G", element_to_json(xg)},
                   {"X_G_matches_colourings", xg == oracle},
                   {"chromatic_polynomial", polynomial_to_string(chi)},
                   {"chi_equals_X_G_at_ones", specializes},
                   {"infinitesimal", pairs},
                   {"passed", ok}}
                  .dump()
           << '\n';
    } else {
        os << "graph " << to_string(g) << '\n';
        os << "X_G = " << format_element(xg) << '\n';
        os << "proper colourings give " << format_element(oracle) << "  " << (xg == oracle ? "equal" : "DIFFER")
           << '\n';
        os << "chi_G(k) = " << polynomial_to_string(chi) << '\n';
        os << "chi_G(k) = X_G(1^k) for k = 0.." << n << "  " << (specializes ? "equal" : "DIFFER") << '\n';
        os << text.str();
    }
    if (!ok) {
        throw verification_failed{};
    }
}

void cmd_demo_poset(const config &c, std::ostream &os)
{
    require_format(c, {"text", "json"});
    const small_poset p = parse_poset(c.poset);
    const graded_element kp = kp_generating_function(p);
    const graded_element flags = kp_by_ideal_flags(p);
    bool ok = kp == flags;
    std::optional<std::pair<rational, rational>> eta;
    if (p.element_count() > 0) {
        eta = eta_check(p);
        ok = ok && eta->first == eta->second;
    }
    if (c.format == "json") {
        json j{{"poset", to_string(p)}, {"K_P", element_to_json(kp)}, {"K_P_matches_flags", kp == flags}};
        if (eta) {
            j["eta_of_K_P"] = to_string(eta->first);
            j["unique_minimal"] = to_string(eta->second);
        }
        j["passed"] = ok;
        os << j.dump() << '\n';
    } else {
        os << "poset " << to_string(p) << '\n';
        os << "K_P = " << format_element(kp) << '\n';
        os << "ideal flags give " << format_element(flags) << "  " << (kp == flags ? "equal" : "DIFFER") << '\n';
        if (eta) {
            os << "eta(K_P) = " << to_string(eta->first) << ", [unique minimal element] = " << to_string(eta->second)
               << "  " << (eta->first == eta->second ? "equal" : "DIFFER") << '\n';
        }
    }
    if (!ok) {
        throw verification_failed{};
    }
}

void add_format(CLI::App *cmd, config &c, bool csv)
{
    cmd->add_option("--format", c.format, "Output format")
        ->check(csv ? CLI::IsMember({"text", "json", "csv"}) : CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", c.out_path, "Write the result to this file");
}

void add_degree(CLI::App *cmd, config &c, bool required)
{
    auto *opt = cmd->add_option("--degree", c.degree, "Degree bound")->check(CLI::Range(1, cli_degree_cap));
    if (required) {
        opt->required();
    }
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    config c;
    CLI::App app{"Exact computations with shuffle bases of quasisymmetric functions", "qsh"};
    app.require_subcommand(1);

    auto *expand = app.add_subcommand("expand", "Print P_a (or X_a) of a basis in the M basis");
    expand->add_option("--basis", c.basis_name, "Registry basis name")->required();
    expand->add_option("--comp", c.comp, "Composition, e.g. 2,1")->required();
    expand->add_option("--scale", c.scale, "qps for P_a, shuffle for X_a")->check(CLI::IsMember({"qps", "shuffle"}));
    add_format(expand, c, false);

    auto *convert = app.add_subcommand("convert", "Rewrite M_a (or an element) in another basis");
    convert->add_option("--basis", c.basis_name, "Registry basis name")->required();
    convert->add_option("--comp", c.comp, "M_a for this composition");
    convert->add_option("--element", c.element, "Element JSON");
    convert->add_option("--scale", c.scale, "qps for P, shuffle for X")->check(CLI::IsMember({"qps", "shuffle"}));
    add_format(convert, c, false);

    auto *table = app.add_subcommand("table", "Change of basis matrix in one degree");
    table->add_option("--basis", c.basis_name, "Registry basis name")->required();
    add_degree(table, c, true);
    table->add_option("--scale", c.scale, "qps for P, shuffle for X")->check(CLI::IsMember({"qps", "shuffle"}));
    table->add_flag("--inverse", c.inverse, "Rows M_a in the derived basis instead");
    add_format(table, c, true);

    auto *verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suites;
    for (const auto &s : suite_names()) {
        suites += (suites.empty() ? "" : ", ") + s;
    }
    verify->add_option("--suite", c.suite, "One of: " + suites)->required();
    verify->add_option("--basis", c.basis_name, "Registry basis name (default type2)");
    add_degree(verify, c, true);
    add_format(verify, c, false);

    auto *theta_cmd = app.add_subcommand("theta", "Apply Theta to an element of the M basis");
    theta_cmd->add_option("--comp", c.comp, "M_a for this composition");
    theta_cmd->add_option("--element", c.element, "Element JSON in the M basis");
    add_format(theta_cmd, c, false);

    auto *phi = app.add_subcommand("phi", "Universal map to QSym");
    phi->add_option("--graph", c.graph, "Graph 'n; u-v,...' with zeta = [no edges]");
    phi->add_option("--poset", c.poset, "Poset 'n; u<v,...' with zeta = 1");
    phi->add_option("--comp", c.comp, "M_a with zeta_Q");
    phi->add_option("--element", c.element, "Element JSON in the M basis with zeta_Q");
    add_format(phi, c, false);

    auto *psi = app.add_subcommand("psi", "Universal map to Sh");
    psi->add_option("--graph", c.graph, "Graph with xi from [no edges] and --basis");
    psi->add_option("--poset", c.poset, "Poset with xi = [unique minimal element]");
    psi->add_option("--comp", c.comp, "M_a with xi = g of --basis");
    psi->add_option("--element", c.element, "Element JSON in the M basis with xi = g of --basis");
    psi->add_option("--basis", c.basis_name, "Registry basis name");
    add_format(psi, c, false);

    auto *exp_cmd = app.add_subcommand("exp", "Convolution exponential of a functional on QSym");
    exp_cmd->add_option("--functional", c.functional_json, "Functional JSON on the M basis");
    exp_cmd->add_option("--canonical", c.canonical, "zetaQ, barZetaQ, xiS, nuQ, eta or counit");
    exp_cmd->add_option("--basis", c.basis_name, "Use g of this registry basis");
    add_degree(exp_cmd, c, true);
    add_format(exp_cmd, c, false);

    auto *log_cmd = app.add_subcommand("log", "Convolution logarithm of a functional on QSym");
    log_cmd->add_option("--functional", c.functional_json, "Functional JSON on the M basis");
    log_cmd->add_option("--canonical", c.canonical, "zetaQ, barZetaQ, xiS, nuQ, eta or counit");
    add_degree(log_cmd, c, true);
    add_format(log_cmd, c, false);

    auto *demo_graph = app.add_subcommand("demo-graph", "Chromatic checks on a graph");
    demo_graph->add_option("--graph", c.graph, "Graph 'n; u-v,...'")->required();
    demo_graph->add_option("--basis", c.basis_name, "Registry basis (default: type1 and type2)");
    add_format(demo_graph, c, false);

    auto *demo_poset = app.add_subcommand("demo-poset", "P-partition checks on a poset");
    demo_poset->add_option("--poset", c.poset, "Poset 'n; u<v,...'")->required();
    add_format(demo_poset, c, false);

    const std::map<CLI::App *, void (*)(const config &, std::ostream &)> handlers{
        {expand, cmd_expand},     {convert, cmd_convert}, {table, cmd_table}, {verify, cmd_verify},
        {theta_cmd, cmd_theta},   {phi, cmd_phi},         {psi, cmd_psi},     {exp_cmd, cmd_exp},
        {log_cmd, cmd_log},       {demo_graph, cmd_demo_graph}, {demo_poset, cmd_demo_poset},
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    CLI::App *chosen = app.get_subcommands().front();
    std::ostringstream buffer;
    int status = exit_ok;
    try {
        handlers.at(chosen)(c, buffer);
    } catch (const verification_failed &) {
        status = exit_verification_failed;
    } catch (const error &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    if (c.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(c.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << c.out_path << '\n';
            return exit_usage;
        }
        file << buffer.str();
    }
    return status;
}

} // namespace qsh
