// Command-line front end: constructions, invariants, bounds, exhaustive
// search and table verification. JSON on stdout by default; graph6 and DOT
// on request. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcgraph/bounds.hpp"
#include "rcgraph/cayley.hpp"
#include "rcgraph/census.hpp"
#include "rcgraph/chromatic.hpp"
#include "rcgraph/constructions.hpp"
#include "rcgraph/graph6.hpp"
#include "rcgraph/search.hpp"
#include "rcgraph/table.hpp"

using nlohmann::json;

namespace {

std::vector<int> parse_int_list(const std::string& text, char sep) {
    std::vector<int> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, sep)) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

json graph_json(const rcg::Graph& g) {
    auto inv = rcg::chromatic_number(g);
    return json{{"order", g.order()},
                {"regular", g.regularity()},
                {"chi", inv.chi},
                {"graph6", rcg::encode_graph6(g)}};
}

void emit_graph(const rcg::Graph& g, const std::string& format) {
    if (format == "graph6")
        std::cout << rcg::encode_graph6(g) << "\n";
    else if (format == "dot")
        std::cout << rcg::encode_dot(g);
    else
        std::cout << graph_json(g).dump(2) << "\n";
}

json certificate_json(const rcg::SearchCertificate& cert) {
    json exhausted = json::array();
    for (const auto& e : cert.exhausted)
        exhausted.push_back(json{{"n", e.n}, {"count", e.count}});
    json j{{"r", cert.r},
           {"chi", cert.chi},
           {"witnesses", cert.witnesses},
           {"exhausted", exhausted},
           {"seconds", cert.seconds}};
    if (cert.minimal_order)
        j["minimal_order"] = *cert.minimal_order;
    else
        j["open_above"] = cert.open_above;
    return j;
}

rcg::Graph read_graph_arg(const std::string& g6, const std::string& path) {
    if (!g6.empty()) return rcg::decode_graph6(g6);
    std::string line;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw rcg::ValidationError("cannot open input file " + path);
        std::getline(in, line);
    } else {
        std::getline(std::cin, line);
    }
    return rcg::decode_graph6(line);
}

const char* minimality_str(rcg::Minimality m) {
    switch (m) {
        case rcg::Minimality::kByLowerBound: return "minimal (order equals lower bound)";
        case rcg::Minimality::kSearchConfirmed: return "minimal (exhaustive search)";
        case rcg::Minimality::kNotChecked: return "construction verified, minimality not machine-checked";
        case rcg::Minimality::kOpen: return "open";
    }
    return "?";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(r|chi)-graph toolkit: extremal regular graphs with prescribed chromatic number"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand(
        "construct", "Build a named graph family instance (turan, antihole, "
                     "cycle-union-complement, doubled-turan, t-star, g-act, "
                     "t-double-star, theorem1, prism)");
    std::string family, format = "json", lengths_text;
    int p_n = 0, p_chi = 0, p_k = 0, p_a = 0, p_c = 0, p_t = 0, p_r = 0;
    construct->add_option("--family", family, "family name")->required();
    construct->add_option("--n", p_n, "order parameter n");
    construct->add_option("--k", p_k, "part count k (turan)");
    construct->add_option("--chi", p_chi, "chromatic parameter (doubled-turan, t-star, theorem1)");
    construct->add_option("--r", p_r, "regularity parameter (theorem1)");
    construct->add_option("--a", p_a, "part size a (g-act)");
    construct->add_option("--c", p_c, "modified vertex count c (g-act)");
    construct->add_option("--t", p_t, "part count t (g-act)");
    construct->add_option("--lengths", lengths_text, "comma-separated cycle lengths");
    construct->add_option("--format", format, "json | graph6 | dot");

    // cayley
    auto* cayley = app.add_subcommand(
        "cayley", "Cayley graph over a direct product of cyclic groups");
    std::string moduli_text, connection_text, cayley_format = "graph6";
    bool require_generating = false;
    cayley->add_option("--moduli", moduli_text, "comma-separated cyclic moduli, e.g. 2,3")
        ->required();
    cayley->add_option("--connection", connection_text,
                       "semicolon-separated tuples, e.g. 0,1;0,2;1,1;1,2")
        ->required();
    cayley->add_flag("--require-generating", require_generating,
                     "fail unless the connection set generates the group");
    cayley->add_option("--format", cayley_format, "graph6 | json | dot");

    // chi / invariants
    std::string in_g6, in_path;
    auto* chi_cmd = app.add_subcommand("chi", "Exact chromatic number with certificate");
    chi_cmd->add_option("--graph6", in_g6, "graph6 input");
    chi_cmd->add_option("--input", in_path, "file with a graph6 line (default stdin)");
    auto* invariants = app.add_subcommand(
        "invariants", "chi, clique, independence, max degree and Reed value");
    invariants->add_option("--graph6", in_g6, "graph6 input");
    invariants->add_option("--input", in_path, "file with a graph6 line (default stdin)");

    // bounds
    int b_r = 0, b_chi = 0;
    auto* bounds_cmd = app.add_subcommand("bounds", "Order bounds on n(r|chi)");
    bounds_cmd->add_option("--r", b_r, "regularity")->required();
    bounds_cmd->add_option("--chi", b_chi, "chromatic number")->required();

    // search
    int s_r = 0, s_chi = 0, s_jobs = 1;
    std::optional<int> s_max;
    std::string census_path;
    bool from_trivial = false;
    auto* search_cmd = app.add_subcommand(
        "search", "Certify n(r|chi) by exhaustive enumeration");
    search_cmd->add_option("--r", s_r, "regularity")->required();
    search_cmd->add_option("--chi", s_chi, "chromatic number")->required();
    search_cmd->add_option("--max-order", s_max, "stop after this order (default: Theorem 3 bound)");
    search_cmd->add_option("--jobs", s_jobs, "parallel enumeration workers");
    search_cmd->add_option("--census", census_path, "enumeration cache file");
    search_cmd->add_flag("--from-trivial", from_trivial,
                         "start at order r+1 instead of the theorem lower bound");

    // verify-table
    int vt_jobs = 1;
    auto* verify_cmd = app.add_subcommand(
        "verify-table", "Re-verify every named graph of the extremal table");
    verify_cmd->add_option("--census", census_path, "enumeration cache file");
    verify_cmd->add_option("--jobs", vt_jobs, "parallel enumeration workers");

    // resolve-66
    int r66_jobs = 1;
    auto* resolve_cmd = app.add_subcommand(
        "resolve-66", "Settle n(6|6) by enumerating 6-regular graphs on 11 vertices");
    resolve_cmd->add_option("--census", census_path, "enumeration cache file");
    resolve_cmd->add_option("--jobs", r66_jobs, "parallel enumeration workers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) {
            rcg::Graph g;
            if (family == "turan") g = rcg::turan(p_n, p_k);
            else if (family == "antihole") g = rcg::antihole(p_n);
            else if (family == "cycle-union-complement")
                g = rcg::cycle_union_complement(
                    rcg::CycleUnionSpec(parse_int_list(lengths_text, ',')));
            else if (family == "doubled-turan") g = rcg::doubled_turan(p_n, p_chi);
            else if (family == "t-star") g = rcg::t_star(p_n, p_chi);
            else if (family == "g-act") g = rcg::g_act(p_a, p_c, p_t);
            else if (family == "t-double-star") g = rcg::t_double_star_16_3();
            else if (family == "theorem1") g = rcg::theorem1_graph(p_r, p_chi);
            else if (family == "prism") g = rcg::prism(p_n);
            else throw rcg::ValidationError("unknown family '" + family + "'");
            emit_graph(g, format);
        } else if (cayley->parsed()) {
            rcg::GroupSpec group(parse_int_list(moduli_text, ','));
            rcg::ConnectionSet x;
            std::istringstream is(connection_text);
            std::string tuple;
            while (std::getline(is, tuple, ';'))
                if (!tuple.empty()) x.elements.push_back(parse_int_list(tuple, ','));
            rcg::validate_connection_set(group, x);
            if (!rcg::connection_set_generates(group, x)) {
                if (require_generating)
                    throw rcg::ValidationError("connection set does not generate the group");
                std::cerr << "warning: connection set does not generate the group "
                             "(graph is disconnected)\n";
            }
            emit_graph(rcg::cayley_graph(group, x), cayley_format);
        } else if (chi_cmd->parsed()) {
            auto g = read_graph_arg(in_g6, in_path);
            auto res = rcg::chromatic_number(g);
            json j{{"chi", res.chi},
                   {"coloring", res.coloring.colors},
                   {"clique", res.clique}};
            if (res.refuted_k >= 0) j["refuted_k"] = res.refuted_k;
            std::cout << j.dump(2) << "\n";
        } else if (invariants->parsed()) {
            auto g = read_graph_arg(in_g6, in_path);
            auto rep = rcg::compute_invariants(g);
            json j{{"chi", rep.chi},
                   {"coloring", rep.coloring.colors},
                   {"omega", rep.omega},
                   {"clique", rep.clique},
                   {"alpha", rep.alpha},
                   {"independent_set", rep.independent_set},
                   {"delta_max", rep.delta_max},
                   {"reed_value", rep.reed_value}};
            std::cout << j.dump(2) << "\n";
        } else if (bounds_cmd->parsed()) {
            auto rep = rcg::bounds_report(b_r, b_chi);
            json j{{"r", rep.r},
                   {"chi", rep.chi},
                   {"lower", rep.lower},
                   {"lower_raw", rep.lower_raw},
                   {"upper_thm2", rep.upper_thm2},
                   {"upper_thm3", rep.upper_thm3},
                   {"a", rep.decomposition.a},
                   {"b", rep.decomposition.b}};
            std::cout << j.dump(2) << "\n";
        } else if (search_cmd->parsed() || resolve_cmd->parsed() ||
                   verify_cmd->parsed()) {
            rcg::Census census;
            if (!census_path.empty()) census = rcg::Census::load(census_path);
            rcg::SearchOptions opts;
            opts.census = &census;
            if (search_cmd->parsed()) {
                opts.jobs = s_jobs;
                if (from_trivial) opts.start_order = s_r + 1;
                int max_order = s_max.value_or(rcg::upper_bound_thm3(s_r, s_chi));
                auto cert = rcg::extremal_search(s_r, s_chi, max_order, opts);
                if (!census_path.empty()) census.save(census_path);
                std::cout << certificate_json(cert).dump(2) << "\n";
                return cert.minimal_order ? 0 : 1;
            }
            if (resolve_cmd->parsed()) {
                opts.jobs = r66_jobs;
                auto cert = rcg::resolve_66(opts);
                if (!census_path.empty()) census.save(census_path);
                std::cout << certificate_json(cert).dump(2) << "\n";
                return 0;
            }
            opts.jobs = vt_jobs;
            auto report = rcg::verify_table(opts);
            if (!census_path.empty()) census.save(census_path);
            for (const auto& cell : report.cells) {
                if (cell.open) {
                    std::cout << "cell (" << cell.r << "," << cell.chi
                              << "): open in the published table; run resolve-66\n";
                    continue;
                }
                for (const auto& g : cell.graphs)
                    std::cout << "cell (" << cell.r << "," << cell.chi << ") "
                              << g.name << ": " << (g.pass() ? "pass" : "FAIL")
                              << " (order " << cell.expected_order << ", chi "
                              << g.chi_found << ")\n";
                std::cout << "cell (" << cell.r << "," << cell.chi
                          << "): " << minimality_str(cell.minimality) << "\n";
            }
            std::cout << report.cells_checked << " cells verified ("
                      << report.graphs_checked << " named graphs), "
                      << report.open_cells << " open cell\n";
            return report.all_pass() ? 0 : 1;
        }
    } catch (const rcg::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rcg::Graph6ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rcg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
