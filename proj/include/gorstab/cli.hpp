#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gorstab/ehrhart.hpp"
#include "gorstab/errors.hpp"
#include "gorstab/g21.hpp"
#include "gorstab/graph.hpp"
#include "gorstab/halfspace.hpp"
#include "gorstab/lattice.hpp"
#include "gorstab/monomial.hpp"
#include "gorstab/polytope.hpp"
#include "gorstab/vertex_enum.hpp"

// Command-line front end. Exit codes: 0 success, 1 a --expect value (or the
// replication harness) was contradicted, 2 any error (usage, parse, domain).

namespace gorstab::cli {

// Which library operations each subcommand exercises (input plumbing such
// as parsing, generators and system construction is shared by all).
struct CommandInfo {
    std::string name;
    std::vector<std::string> operations;
};

inline const std::vector<CommandInfo>& command_table() {
    static const std::vector<CommandInfo> table = {
        {"cliques", {"maximal_cliques", "all_cliques", "is_triangle_free"}},
        {"holes", {"chordless_odd_cycles", "all_odd_cycles"}},
        {"stable-sets", {"stable_sets", "count_stable_sets", "certify_not_in_stab"}},
        {"gorenstein", {"gorenstein_criterion", "trace_test", "tstab_clique_family"}},
        {"umember",
         {"u_membership", "tu_membership", "qu_membership", "in_ehrhart_ring",
          "in_canonical_ideal", "symbolic_power_membership"}},
        {"decompose", {"decompose_into_u1"}},
        {"hperfect", {"is_h_perfect"}},
        {"vertices",
         {"enumerate_vertices", "remove_redundant", "contains", "relint_contains",
          "in_convex_hull"}},
        {"ehrhart", {"count_lattice_points", "ehrhart_polynomial"}},
        {"delta", {"delta_vector"}},
        {"oracle", {"gorenstein_oracle"}},
        {"replicate-example", {"build_g21", "g21_mu", "g21_nu", "replicate_example"}},
    };
    return table;
}

namespace detail {

inline Graph graph_from_generator(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto int_arg = [&]() {
        try {
            std::size_t used = 0;
            const int value = std::stoi(arg, &used);
            if (used != arg.size()) throw std::invalid_argument(arg);
            return value;
        } catch (const std::exception&) {
            throw InvalidParameter("generator '" + spec + "' needs an integer parameter");
        }
    };
    if (kind == "g21") {
        if (!arg.empty()) throw InvalidParameter("g21 takes no parameter");
        return build_g21().first;
    }
    if (kind == "cycle") return cycle_graph(int_arg());
    if (kind == "complete") return complete_graph(int_arg());
    if (kind == "path") return path_graph(int_arg());
    if (kind == "wheel") return wheel_graph(int_arg());
    if (kind == "edgeless") return edgeless_graph(int_arg());
    if (kind == "bipartite") {
        const auto x = arg.find('x');
        if (x == std::string::npos)
            throw InvalidParameter("bipartite generator wants AxB, e.g. bipartite:2x3");
        try {
            std::size_t ua = 0, ub = 0;
            const int a = std::stoi(arg.substr(0, x), &ua);
            const int b = std::stoi(arg.substr(x + 1), &ub);
            if (ua != x || ub != arg.size() - x - 1) throw std::invalid_argument(arg);
            return complete_bipartite_graph(a, b);
        } catch (const std::exception&) {
            throw InvalidParameter("bipartite generator wants AxB, e.g. bipartite:2x3");
        }
    }
    throw InvalidParameter("unknown generator '" + spec + "'");
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidParameter("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline nlohmann::json parse_json_file(const std::string& path) {
    try {
        return nlohmann::json::parse(slurp(path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad JSON in '" + path + "': " + e.what());
    }
}

// options shared by the graph-consuming subcommands
struct GraphSource {
    std::string generator;
    std::string input_path;
    std::string format = "edge_list";

    void attach(CLI::App* cmd) {
        cmd->add_option("--gen", generator,
                        "generate a graph: cycle:N, complete:N, path:N, wheel:N, "
                        "edgeless:N, bipartite:AxB, g21");
        cmd->add_option("--input", input_path, "read a graph from a file");
        cmd->add_option("--format", format, "input format: edge_list or json")
            ->check(CLI::IsMember({"edge_list", "json"}));
    }

    Graph resolve() const {
        if (!generator.empty() && !input_path.empty())
            throw InvalidParameter("--gen and --input are mutually exclusive");
        if (!generator.empty()) return graph_from_generator(generator);
        if (!input_path.empty())
            return parse_graph(slurp(input_path), format == "json" ? GraphFormat::json
                                                                   : GraphFormat::edge_list);
        throw InvalidParameter("no graph given: use --gen or --input");
    }
};

inline StabVariant variant_from_string(const std::string& name) {
    if (name == "hstab") return StabVariant::hstab;
    if (name == "tstab") return StabVariant::tstab;
    if (name == "qstab") return StabVariant::qstab;
    throw InvalidParameter("unknown variant '" + name + "'");
}

inline HalfspaceSystem build_variant_system(const Graph& g, const std::string& variant,
                                            bool full_system) {
    if (variant == "hstab") return hstab_system(g, !full_system);
    if (full_system) throw InvalidParameter("--full-system only applies to hstab");
    if (variant == "tstab") return tstab_system(g);
    if (variant == "qstab") return qstab_system(g);
    throw InvalidParameter("unknown variant '" + variant + "'");
}

inline std::vector<std::string> name_list(const Graph& g, const VertexSet& vertices) {
    std::vector<std::string> out;
    out.reserve(vertices.size());
    for (int v : vertices) out.push_back(g.name(v));
    return out;
}

// verdict printing plus --expect handling; returns the process exit code
inline int finish_verdict(bool value, const std::optional<bool>& expected) {
    if (expected && *expected != value) return 1;
    return 0;
}

inline std::optional<bool> parse_expect(const std::string& text) {
    if (text.empty()) return std::nullopt;
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw InvalidParameter("--expect wants true or false");
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Gorenstein toolkit for stable set polytope relaxations"};
    app.require_subcommand(1);

    detail::GraphSource cliques_src, holes_src, stable_src, gor_src, umember_src,
        decompose_src, hperfect_src, vertices_src, ehrhart_src, delta_src, oracle_src;
    bool json_output = false;
    app.add_flag("--json", json_output, "emit JSON instead of text");
    auto with_json = [&json_output](CLI::App* cmd) {
        cmd->add_flag("--json", json_output, "emit JSON instead of text");
        return cmd;
    };

    // cliques
    auto* cliques_cmd = with_json(app.add_subcommand("cliques", "maximal (or all) cliques"));
    cliques_src.attach(cliques_cmd);
    bool cliques_all = false;
    cliques_cmd->add_flag("--all", cliques_all, "every nonempty clique, not just maximal");

    // holes
    auto* holes_cmd = with_json(app.add_subcommand("holes", "chordless (or all) odd cycles"));
    holes_src.attach(holes_cmd);
    bool holes_all = false;
    int holes_min_len = 5;
    holes_cmd->add_flag("--all", holes_all, "every odd cycle, chords allowed (length >= 3)");
    holes_cmd->add_option("--min-len", holes_min_len, "minimum length for chordless cycles");

    // stable-sets
    auto* stable_cmd = with_json(app.add_subcommand("stable-sets", "stable sets / membership certificate"));
    stable_src.attach(stable_cmd);
    std::string stable_point_path, stable_witness_path;
    bool stable_count_only = false;
    stable_cmd->add_option("--certify", stable_point_path,
                           "point file: certify it lies outside the stable set polytope");
    stable_cmd->add_option("--witnesses", stable_witness_path,
                           "witness vertex sets (JSON array of arrays) for --certify");
    stable_cmd->add_flag("--count", stable_count_only, "print only the number of stable sets");

    // gorenstein
    auto* gor_cmd = with_json(app.add_subcommand("gorenstein", "combinatorial Gorenstein test"));
    gor_src.attach(gor_cmd);
    std::string gor_variant = "hstab", gor_expect;
    bool gor_trace = false;
    gor_cmd->add_option("--variant", gor_variant, "hstab, tstab or qstab")
        ->check(CLI::IsMember({"hstab", "tstab", "qstab"}));
    gor_cmd->add_flag("--check-trace", gor_trace,
                      "also run the independent trace reformulation (hstab only)");
    gor_cmd->add_option("--expect", gor_expect, "fail (exit 1) unless the verdict matches");

    // umember
    auto* umember_cmd = with_json(app.add_subcommand("umember", "membership in the graded piece U^(n)"));
    umember_src.attach(umember_cmd);
    std::string umember_mu_path, umember_variant = "hstab", umember_expect;
    long long umember_n = 1;
    umember_cmd->add_option("--mu", umember_mu_path, "monomial file (JSON)")->required();
    umember_cmd->add_option("--n", umember_n, "which graded piece (default 1)");
    umember_cmd->add_option("--variant", umember_variant, "hstab, tstab or qstab")
        ->check(CLI::IsMember({"hstab", "tstab", "qstab"}));
    umember_cmd->add_option("--expect", umember_expect, "fail (exit 1) unless the verdict matches");

    // decompose
    auto* decompose_cmd = with_json(app.add_subcommand("decompose", "write a monomial as a sum of k U^(1) members"));
    decompose_src.attach(decompose_cmd);
    std::string decompose_mu_path;
    int decompose_k = 2;
    long long decompose_budget = 100'000'000;
    decompose_cmd->add_option("--mu", decompose_mu_path, "monomial file (JSON)")->required();
    decompose_cmd->add_option("--k", decompose_k, "number of summands")->required();
    decompose_cmd->add_option("--budget", decompose_budget, "search node budget");

    // hperfect
    auto* hperfect_cmd = with_json(app.add_subcommand("hperfect", "is the clique/odd-cycle relaxation integral?"));
    hperfect_src.attach(hperfect_cmd);
    std::string hperfect_expect;
    hperfect_cmd->add_option("--expect", hperfect_expect, "fail (exit 1) unless the verdict matches");

    // vertices
    auto* vertices_cmd = with_json(app.add_subcommand("vertices", "vertex enumeration / point location"));
    vertices_src.attach(vertices_cmd);
    std::string vertices_variant = "hstab", vertices_system_path, vertices_point_path;
    bool vertices_full = false, vertices_irredundant = false;
    vertices_cmd->add_option("--variant", vertices_variant, "hstab, tstab or qstab")
        ->check(CLI::IsMember({"hstab", "tstab", "qstab"}));
    vertices_cmd->add_flag("--full-system", vertices_full, "use the unreduced clique/odd-cycle system");
    vertices_cmd->add_option("--system", vertices_system_path, "halfspace system file (JSON) instead of a graph");
    vertices_cmd->add_flag("--irredundant", vertices_irredundant, "also print the irredundant system");
    vertices_cmd->add_option("--point", vertices_point_path,
                             "point file: report containment, relative interior, hull membership");

    // ehrhart
    auto* ehrhart_cmd = with_json(app.add_subcommand("ehrhart", "lattice point counts and Ehrhart polynomial"));
    ehrhart_src.attach(ehrhart_cmd);
    std::string ehrhart_variant = "hstab", ehrhart_system_path;
    bool ehrhart_full = false;
    int ehrhart_max_k = -1;
    ehrhart_cmd->add_option("--variant", ehrhart_variant, "hstab, tstab or qstab")
        ->check(CLI::IsMember({"hstab", "tstab", "qstab"}));
    ehrhart_cmd->add_flag("--full-system", ehrhart_full, "use the unreduced clique/odd-cycle system");
    ehrhart_cmd->add_option("--system", ehrhart_system_path, "halfspace system file (JSON)");
    ehrhart_cmd->add_option("--max-k", ehrhart_max_k, "list counts up to this dilate");

    // delta
    auto* delta_cmd = with_json(app.add_subcommand("delta", "h^*-vector of the lattice polytope"));
    delta_src.attach(delta_cmd);
    std::string delta_variant = "hstab", delta_system_path;
    bool delta_full = false;
    delta_cmd->add_option("--variant", delta_variant, "hstab, tstab or qstab")
        ->check(CLI::IsMember({"hstab", "tstab", "qstab"}));
    delta_cmd->add_flag("--full-system", delta_full, "use the unreduced clique/odd-cycle system");
    delta_cmd->add_option("--system", delta_system_path, "halfspace system file (JSON)");

    // oracle
    auto* oracle_cmd = with_json(app.add_subcommand("oracle", "Gorenstein test via the h^*-vector"));
    oracle_src.attach(oracle_cmd);
    std::string oracle_variant = "hstab", oracle_system_path, oracle_expect;
    bool oracle_full = false;
    oracle_cmd->add_option("--variant", oracle_variant, "hstab, tstab or qstab")
        ->check(CLI::IsMember({"hstab", "tstab", "qstab"}));
    oracle_cmd->add_flag("--full-system", oracle_full, "use the unreduced clique/odd-cycle system");
    oracle_cmd->add_option("--system", oracle_system_path, "halfspace system file (JSON)");
    oracle_cmd->add_option("--expect", oracle_expect, "fail (exit 1) unless palindromicity matches");

    // replicate-example
    auto* replicate_cmd = with_json(app.add_subcommand("replicate-example",
                                                        "re-derive the 21-vertex counterexample"));
    long long replicate_budget = 100'000'000;
    replicate_cmd->add_option("--budget", replicate_budget, "decomposition search node budget");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream usage;
        const int code = app.exit(e, usage, usage);
        (code == 0 ? out : err) << usage.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cliques_cmd)) {
            const Graph g = cliques_src.resolve();
            std::vector<Clique> list;
            if (cliques_all) list = all_cliques(g);
            else list = maximal_cliques(g);
            const bool tfree = is_triangle_free(g);
            if (json_output) {
                nlohmann::json doc;
                doc["mode"] = cliques_all ? "all" : "maximal";
                auto& arr = doc["cliques"] = nlohmann::json::array();
                for (const auto& k : list) arr.push_back(detail::name_list(g, k.vertices));
                doc["count"] = list.size();
                doc["triangle_free"] = tfree;
                out << doc.dump(2) << "\n";
            } else {
                for (const auto& k : list) {
                    for (std::size_t i = 0; i < k.vertices.size(); ++i)
                        out << (i ? " " : "") << g.name(k.vertices[i]);
                    out << "\n";
                }
                out << (cliques_all ? "all cliques: " : "maximal cliques: ") << list.size()
                    << ", triangle-free: " << (tfree ? "yes" : "no") << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(holes_cmd)) {
            const Graph g = holes_src.resolve();
            std::vector<Cycle> list;
            if (holes_all) list = all_odd_cycles(g);
            else list = chordless_odd_cycles(g, holes_min_len);
            if (json_output) {
                nlohmann::json doc;
                doc["mode"] = holes_all ? "all" : "chordless";
                auto& arr = doc["cycles"] = nlohmann::json::array();
                for (const auto& c : list) arr.push_back(detail::name_list(g, c.vertices));
                doc["count"] = list.size();
                out << doc.dump(2) << "\n";
            } else {
                for (const auto& c : list) {
                    for (std::size_t i = 0; i < c.vertices.size(); ++i)
                        out << (i ? " " : "") << g.name(c.vertices[i]);
                    out << "\n";
                }
                out << (holes_all ? "odd cycles: " : "chordless odd cycles: ") << list.size() << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(stable_cmd)) {
            const Graph g = stable_src.resolve();
            if (!stable_point_path.empty()) {
                if (stable_witness_path.empty())
                    throw InvalidParameter("--certify needs --witnesses");
                const auto p = point_from_json(detail::parse_json_file(stable_point_path), g.names());
                const auto wdoc = detail::parse_json_file(stable_witness_path);
                if (!wdoc.is_array()) throw ParseError("witness file must be a JSON array of arrays");
                std::vector<VertexSet> witnesses;
                for (const auto& warr : wdoc) {
                    if (!warr.is_array()) throw ParseError("each witness must be an array");
                    VertexSet w;
                    for (const auto& entry : warr) {
                        if (entry.is_number_integer()) w.push_back(entry.get<int>());
                        else if (entry.is_string()) w.push_back(g.index_of(entry.get<std::string>()));
                        else throw ParseError("witness entries must be ids or names");
                    }
                    std::sort(w.begin(), w.end());
                    witnesses.push_back(std::move(w));
                }
                const auto cert = certify_not_in_stab(g, p, witnesses);
                const bool outside = cert.kind == StabCertificate::Kind::not_in_stab;
                if (json_output) {
                    nlohmann::json doc;
                    doc["certificate"] = outside ? "not_in_stab" : "inconclusive";
                    doc["witness_maxima"] = cert.witness_maxima;
                    doc["surviving_stable_sets"] = cert.surviving;
                    out << doc.dump(2) << "\n";
                } else {
                    out << (outside ? "certified outside the stable set polytope"
                                    : "inconclusive (some stable sets meet every witness maximum)")
                        << "\n";
                }
                return 0;
            }
            if (stable_count_only) {
                const long long count = count_stable_sets(g);
                if (json_output) out << nlohmann::json{{"count", count}}.dump(2) << "\n";
                else out << count << "\n";
                return 0;
            }
            const auto sets = stable_sets(g);
            if (json_output) {
                nlohmann::json doc;
                auto& arr = doc["stable_sets"] = nlohmann::json::array();
                for (const auto& s : sets) arr.push_back(detail::name_list(g, s));
                doc["count"] = sets.size();
                out << doc.dump(2) << "\n";
            } else {
                for (const auto& s : sets) {
                    if (s.empty()) {
                        out << "(empty)\n";
                        continue;
                    }
                    for (std::size_t i = 0; i < s.size(); ++i)
                        out << (i ? " " : "") << g.name(s[i]);
                    out << "\n";
                }
                out << "stable sets: " << sets.size() << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(gor_cmd)) {
            const Graph g = gor_src.resolve();
            const auto expected = detail::parse_expect(gor_expect);
            const auto verdict = gorenstein_criterion(g, detail::variant_from_string(gor_variant));
            std::optional<bool> trace;
            if (gor_trace) {
                if (gor_variant != "hstab")
                    throw InvalidParameter("--check-trace applies to the hstab variant only");
                trace = trace_test(g);
            }
            if (json_output) {
                nlohmann::json doc;
                doc["variant"] = gor_variant;
                doc["gorenstein"] = verdict.gorenstein;
                if (verdict.common_size) doc["n"] = *verdict.common_size;
                if (verdict.branch)
                    doc["branch"] = std::string(1, 'a' + static_cast<char>(*verdict.branch));
                doc["clique_sizes"] = verdict.clique_sizes;
                if (verdict.unequal_cliques) {
                    doc["witness"]["unequal_cliques"] = {
                        detail::name_list(g, verdict.unequal_cliques->first.vertices),
                        detail::name_list(g, verdict.unequal_cliques->second.vertices)};
                }
                if (verdict.offending_cycle)
                    doc["witness"]["chordless_odd_cycle"] =
                        detail::name_list(g, verdict.offending_cycle->vertices);
                if (trace) doc["trace"] = *trace;
                out << doc.dump(2) << "\n";
            } else {
                out << "gorenstein: " << (verdict.gorenstein ? "true" : "false");
                if (verdict.common_size) out << " (n=" << *verdict.common_size;
                if (verdict.branch)
                    out << ", branch " << std::string(1, 'a' + static_cast<char>(*verdict.branch));
                if (verdict.common_size) out << ")";
                out << "\n";
                if (verdict.offending_cycle) {
                    out << "witness chordless odd cycle:";
                    for (int v : verdict.offending_cycle->vertices) out << " " << g.name(v);
                    out << "\n";
                }
                if (verdict.unequal_cliques) {
                    out << "witness cliques of different size:";
                    for (int v : verdict.unequal_cliques->first.vertices) out << " " << g.name(v);
                    out << " |";
                    for (int v : verdict.unequal_cliques->second.vertices) out << " " << g.name(v);
                    out << "\n";
                }
                if (trace) out << "trace: " << (*trace ? "true" : "false") << "\n";
            }
            if (trace && *trace != verdict.gorenstein) return 1;
            return detail::finish_verdict(verdict.gorenstein, expected);
        }

        if (app.got_subcommand(umember_cmd)) {
            const Graph g = umember_src.resolve();
            const auto expected = detail::parse_expect(umember_expect);
            const auto mu = monomial_from_json(detail::parse_json_file(umember_mu_path), g.names());
            const auto sys = membership_system(g, detail::variant_from_string(umember_variant));
            const bool member = u_membership(sys, mu, umember_n);
            if (json_output) {
                nlohmann::json doc;
                doc["member"] = member;
                doc["n"] = umember_n;
                doc["variant"] = umember_variant;
                out << doc.dump(2) << "\n";
            } else {
                out << (member ? "true" : "false") << "\n";
            }
            return detail::finish_verdict(member, expected);
        }

        if (app.got_subcommand(decompose_cmd)) {
            const Graph g = decompose_src.resolve();
            const auto mu = monomial_from_json(detail::parse_json_file(decompose_mu_path), g.names());
            DecomposeOptions options;
            options.node_budget = decompose_budget;
            const auto parts = decompose_into_u1(g, mu, decompose_k, options);
            if (json_output) {
                nlohmann::json doc;
                doc["k"] = decompose_k;
                if (parts) {
                    auto& arr = doc["decomposition"] = nlohmann::json::array();
                    for (const auto& part : *parts) arr.push_back(monomial_to_json(part, g.names()));
                } else {
                    doc["decomposition"] = nullptr;
                }
                out << doc.dump(2) << "\n";
            } else {
                if (!parts) {
                    out << "no decomposition\n";
                } else {
                    for (const auto& part : *parts) {
                        out << "deg " << part.deg << ":";
                        for (int v = 0; v < g.num_vertices(); ++v)
                            out << " " << g.name(v) << "=" << part.values[v];
                        out << "\n";
                    }
                }
            }
            return 0;
        }

        if (app.got_subcommand(hperfect_cmd)) {
            const Graph g = hperfect_src.resolve();
            const auto expected = detail::parse_expect(hperfect_expect);
            const bool answer = is_h_perfect(g);
            if (json_output) out << nlohmann::json{{"h_perfect", answer}}.dump(2) << "\n";
            else out << (answer ? "true" : "false") << "\n";
            return detail::finish_verdict(answer, expected);
        }

        if (app.got_subcommand(vertices_cmd)) {
            HalfspaceSystem system;
            if (!vertices_system_path.empty()) {
                system = system_from_json(detail::parse_json_file(vertices_system_path));
            } else {
                system = detail::build_variant_system(vertices_src.resolve(), vertices_variant,
                                                      vertices_full);
            }
            const auto vrep = enumerate_vertices(system);
            nlohmann::json doc;
            auto& arr = doc["vertices"] = nlohmann::json::array();
            for (const auto& vertex : vrep.vertices)
                arr.push_back(point_to_json(vertex, system.names)["values"]);
            doc["count"] = vrep.vertices.size();
            std::optional<HalfspaceSystem> irredundant;
            if (vertices_irredundant) {
                irredundant = remove_redundant(system);
                doc["irredundant"] = system_to_json(*irredundant);
            }
            if (!vertices_point_path.empty()) {
                const auto p =
                    point_from_json(detail::parse_json_file(vertices_point_path), system.names);
                doc["contains"] = contains(system, p);
                doc["relint"] = irredundant ? strictly_inside(*irredundant, p)
                                            : relint_contains(system, p);
                doc["in_hull"] = in_convex_hull(vrep.vertices, p);
            }
            if (json_output) {
                out << doc.dump(2) << "\n";
            } else {
                for (const auto& vertex : vrep.vertices) {
                    for (std::size_t j = 0; j < vertex.size(); ++j)
                        out << (j ? " " : "") << format_rational(vertex[j]);
                    out << "\n";
                }
                out << "vertices: " << vrep.vertices.size() << "\n";
                if (irredundant)
                    out << "irredundant rows: " << irredundant->rows.size() << " of "
                        << system.rows.size() << "\n";
                if (doc.contains("contains"))
                    out << "contains: " << (doc["contains"].get<bool>() ? "true" : "false")
                        << ", relint: " << (doc["relint"].get<bool>() ? "true" : "false")
                        << ", in hull of vertices: "
                        << (doc["in_hull"].get<bool>() ? "true" : "false") << "\n";
            }
            return 0;
        }

        auto resolve_system = [&](detail::GraphSource& src, const std::string& system_path,
                                  const std::string& variant, bool full) {
            if (!system_path.empty()) return system_from_json(detail::parse_json_file(system_path));
            return detail::build_variant_system(src.resolve(), variant, full);
        };

        if (app.got_subcommand(ehrhart_cmd)) {
            const auto system =
                resolve_system(ehrhart_src, ehrhart_system_path, ehrhart_variant, ehrhart_full);
            const auto data = gorstab::detail::ehrhart_data(system);
            std::vector<long long> counts = data.counts;
            if (ehrhart_max_k >= 0) {
                counts.clear();
                for (long long k = 0; k <= ehrhart_max_k; ++k)
                    counts.push_back(count_lattice_points(system, k));
            }
            if (json_output) {
                nlohmann::json doc;
                doc["dim"] = data.dim;
                doc["L"] = counts;
                auto& arr = doc["coefficients"] = nlohmann::json::array();
                for (const auto& c : data.coefficients) arr.push_back(format_rational(c));
                out << doc.dump(2) << "\n";
            } else {
                out << "dim: " << data.dim << "\nL:";
                for (const auto c : counts) out << " " << c;
                out << "\ncoefficients (ascending):";
                for (const auto& c : data.coefficients) out << " " << format_rational(c);
                out << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(delta_cmd)) {
            const auto system =
                resolve_system(delta_src, delta_system_path, delta_variant, delta_full);
            const auto delta = delta_vector(system);
            if (json_output) {
                nlohmann::json doc;
                doc["delta"] = delta.coefficients;
                doc["palindromic"] = delta.palindromic();
                out << doc.dump(2) << "\n";
            } else {
                out << "delta:";
                for (const auto d : delta.coefficients) out << " " << d;
                out << "\npalindromic: " << (delta.palindromic() ? "true" : "false") << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(oracle_cmd)) {
            const auto system =
                resolve_system(oracle_src, oracle_system_path, oracle_variant, oracle_full);
            const auto expected = detail::parse_expect(oracle_expect);
            const auto data = gorstab::detail::ehrhart_data(system);
            DeltaVector delta = delta_vector(system);
            const bool palindromic = delta.palindromic();
            if (json_output) {
                nlohmann::json doc;
                doc["L"] = data.counts;
                doc["delta"] = delta.coefficients;
                doc["palindromic"] = palindromic;
                out << doc.dump(2) << "\n";
            } else {
                out << "L:";
                for (const auto c : data.counts) out << " " << c;
                out << "\ndelta:";
                for (const auto d : delta.coefficients) out << " " << d;
                out << "\npalindromic: " << (palindromic ? "true" : "false") << "\n";
            }
            return detail::finish_verdict(palindromic, expected);
        }

        if (app.got_subcommand(replicate_cmd)) {
            DecomposeOptions options;
            options.node_budget = replicate_budget;
            const auto report = replicate_example(options);
            if (json_output) {
                out << report_to_json(report).dump(2) << "\n";
            } else {
                for (const auto& check : report.checks)
                    out << (check.passed ? "[ok]   " : "[FAIL] ") << check.name << "\n";
                out << (report.all_passed ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
            }
            return report.all_passed ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

inline int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace gorstab::cli
