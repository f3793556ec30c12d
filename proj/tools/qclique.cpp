// Command-line front end: exact solvers, extremal constructions, exhaustive
// Q(n,c) tables, and the clique-or-recolor witness engine, with graph6 on
// stdin/stdout for composability and JSON for structured output.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qc/asymptotics.hpp"
#include "qc/constructions.hpp"
#include "qc/qsearch.hpp"
#include "qc/recolor.hpp"
#include "qc/solvers.hpp"

using nlohmann::json;

namespace {

std::vector<qc::Graph> read_graphs(const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw qc::contract_error("cannot open " + path);
        in = &file;
    }
    std::vector<qc::Graph> graphs;
    std::string line;
    while (std::getline(*in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        graphs.push_back(qc::from_graph6(line));
    }
    if (graphs.empty()) throw qc::contract_error("no graph6 input found");
    return graphs;
}

json clique_json(const qc::Graph& g, const qc::CliqueResult& r, bool independent) {
    const qc::Graph check = independent ? qc::complement(g) : g;
    bool ok = qc::vs_size(r.members) == r.size;
    std::vector<int> m = qc::vs_members(r.members);
    for (std::size_t i = 0; i < m.size() && ok; ++i)
        for (std::size_t j = i + 1; j < m.size() && ok; ++j)
            if (!check.has_edge(m[i], m[j])) ok = false;
    return json{{"size", r.size}, {"vertices", m}, {"verified", ok}};
}

int run_solve(const std::string& input, bool chi, bool omega, bool alpha,
              const std::string& format) {
    if (!chi && !omega && !alpha) throw CLI::ValidationError("pick at least one of --chi/--omega/--alpha");
    for (const qc::Graph& g : read_graphs(input)) {
        if (format == "json") {
            json out{{"n", g.order()}, {"graph6", qc::to_graph6(g)}};
            bool verified = true;
            if (chi) {
                auto [value, coloring] = qc::chromatic_number(g);
                out["chi"] = value;
                out["coloring"] = coloring.colors;
                verified &= qc::is_valid_coloring(g, coloring) && coloring.num_colors == value;
            }
            if (omega) {
                out["omega"] = clique_json(g, qc::clique_number(g), false);
                verified &= out["omega"]["verified"].get<bool>();
            }
            if (alpha) {
                out["alpha"] = clique_json(g, qc::independence_number(g), true);
                verified &= out["alpha"]["verified"].get<bool>();
            }
            out["verified"] = verified;
            std::cout << out.dump() << '\n';
        } else {
            std::string sep;
            if (chi) {
                std::cout << qc::chromatic_number(g).first;
                sep = " ";
            }
            if (omega) {
                std::cout << sep << qc::clique_number(g).size;
                sep = " ";
            }
            if (alpha) std::cout << sep << qc::independence_number(g).size;
            std::cout << '\n';
        }
    }
    return 0;
}

qc::ConstructionReport build_family(const std::string& family, int n, int k) {
    if (family == "kn-minus-cycle") return qc::kn_minus_odd_cycle(n, k);
    if (family == "jw") return qc::jw_graph(n, k);
    throw CLI::ValidationError("unknown family " + family);
}

int run_construct(const std::string& family, int n, int k, const std::string& emit) {
    qc::ConstructionReport r = build_family(family, n, k);
    if (emit == "graph6") {
        std::cout << qc::to_graph6(r.graph) << '\n';
        return 0;
    }
    qc::VerifiedConstruction v = qc::verify_construction(r);  // throws on mismatch
    json out{{"family", family},         {"n", r.n},
             {"k", r.k},                 {"graph6", qc::to_graph6(r.graph)},
             {"claimed_chi", r.claimed_chi}, {"claimed_omega", r.claimed_omega},
             {"chi", v.chi},             {"omega", v.omega},
             {"verified", v.chi == r.claimed_chi && v.omega == r.claimed_omega}};
    std::cout << out.dump() << '\n';
    return 0;
}

int run_verify(const std::string& family, int n, int k, const std::string& format) {
    qc::VerifiedConstruction v = qc::verify_construction(build_family(family, n, k));
    if (format == "json") {
        json out{{"family", family}, {"n", n},       {"k", k},
                 {"chi", v.chi},     {"omega", v.omega}, {"verified", true}};
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "verified family=" << family << " n=" << n << " k=" << k
                  << " chi=" << v.chi << " omega=" << v.omega << '\n';
    }
    return 0;
}

int run_qtable(int n_max, int jobs, const std::string& format) {
    qc::QSearchOptions opts;
    opts.jobs = jobs;
    std::vector<qc::QTableEntry> table = qc::q_table(n_max, opts);
    if (format == "json") {
        json rows = json::array();
        for (const qc::QTableEntry& e : table) {
            qc::Graph w = qc::from_graph6(e.witness_graph6);
            bool ok = e.q && qc::chromatic_number(w).first == e.c &&
                      qc::clique_number(w).size == *e.q;
            rows.push_back(json{{"n", e.n},
                                {"c", e.c},
                                {"q", e.q ? json(*e.q) : json(nullptr)},
                                {"witness_graph6", e.witness_graph6},
                                {"verified", ok}});
        }
        std::cout << rows.dump() << '\n';
    } else {
        std::cout << "n,c,q,witness_graph6\n";
        for (const qc::QTableEntry& e : table)
            std::cout << e.n << ',' << e.c << ',' << (e.q ? std::to_string(*e.q) : "")
                      << ',' << e.witness_graph6 << '\n';
    }
    for (const std::string& flag : qc::monotonicity_flags(table))
        std::cerr << "note: " << flag << '\n';
    return 0;
}

// a proper coloring with exactly `target` colors: split the largest class of
// an optimal coloring until enough colors are in use
qc::Coloring coloring_with_exactly(const qc::Graph& g, int target) {
    auto [chi, col] = qc::chromatic_number(g);
    if (chi > target)
        throw qc::contract_error("graph needs " + std::to_string(chi) +
                                 " colors; no proper coloring with " + std::to_string(target));
    while (col.num_colors < target) {
        int best = -1, size = 0;
        for (int c = 1; c <= col.num_colors; ++c) {
            int cnt = 0;
            for (int v : col.colors)
                if (v == c) ++cnt;
            if (cnt > size) {
                size = cnt;
                best = c;
            }
        }
        if (size < 2) throw qc::contract_error("cannot reach the requested color count");
        for (std::size_t v = 0; v < col.colors.size(); ++v)
            if (col.colors[v] == best) {
                col.colors[v] = col.num_colors + 1;
                break;
            }
        col.num_colors += 1;
    }
    return col;
}

int run_witness(const std::string& input, int k, const std::string& coloring_path) {
    std::vector<qc::Graph> graphs = read_graphs(input);
    const qc::Graph& g = graphs.front();
    qc::Coloring col;
    if (!coloring_path.empty()) {
        std::ifstream f(coloring_path);
        if (!f) throw qc::contract_error("cannot open " + coloring_path);
        json j = json::parse(f);
        col = qc::Coloring::of(j.at("colors").get<std::vector<int>>());
    } else {
        col = coloring_with_exactly(g, g.order() - k);
    }
    qc::WitnessOutcome w =
        k >= 5 ? qc::witness_sharp(g, col, k) : qc::witness_basic(g, col, k);
    json out{{"n", g.order()}, {"k", k}, {"input_colors", col.num_colors}};
    if (w.kind == qc::WitnessOutcome::Kind::Clique) {
        out["outcome"] = "clique";
        out["vertices"] = qc::vs_members(w.clique);
        out["size"] = qc::vs_size(w.clique);
    } else {
        out["outcome"] = "recoloring";
        out["colors"] = w.coloring.colors;
        out["num_colors"] = w.coloring.num_colors;
    }
    out["verified"] = qc::validate_outcome(g, col, w,
                                           w.kind == qc::WitnessOutcome::Kind::Clique && k >= 5 && k <= 6
                                               ? g.order() - 2 * k + 3
                                               : 0);
    std::cout << out.dump() << '\n';
    return 0;
}

int run_scaling(int q, const std::string& family, std::vector<int> sizes, std::uint64_t seed) {
    qc::ScalingFamily fam;
    if (family == "bipartite")
        fam = qc::ScalingFamily::RandomBipartite;
    else if (family == "cycle")
        fam = qc::ScalingFamily::OddCycle;
    else if (family == "mycielski-ish")
        fam = qc::ScalingFamily::MycielskiPrefix;
    else
        throw CLI::ValidationError("unknown family " + family);
    qc::ScalingReport rep = qc::scaling_check(q, fam, sizes, seed);
    json samples = json::array();
    for (auto [n, c] : rep.samples) samples.push_back(json{{"n", n}, {"colors", c}});
    json out{{"q", rep.q},
             {"family", family},
             {"samples", samples},
             {"fitted_exponent", rep.fitted_exponent},
             {"reference_exponent", rep.reference_exponent},
             {"verified", true}};
    std::cout << out.dump() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact clique/chromatic toolbox around Q(n,c)"};
    app.require_subcommand(1);
    app.fallthrough();  // let subcommands see the global --seed
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized subcommands");

    auto* solve = app.add_subcommand("solve", "chi/omega/alpha of graph6 input");
    std::string solve_input;
    bool f_chi = false, f_omega = false, f_alpha = false;
    std::string solve_format = "plain";
    solve->add_option("--input", solve_input, "graph6 file (default stdin)");
    solve->add_flag("--chi", f_chi, "chromatic number");
    solve->add_flag("--omega", f_omega, "clique number");
    solve->add_flag("--alpha", f_alpha, "independence number");
    solve->add_option("--format", solve_format)->check(CLI::IsMember({"plain", "json"}));

    auto* construct = app.add_subcommand("construct", "emit an extremal family member");
    std::string c_family;
    int c_n = 0, c_k = 0;
    std::string c_emit = "graph6";
    construct->add_option("--family", c_family)->required()->check(CLI::IsMember({"kn-minus-cycle", "jw"}));
    construct->add_option("--n", c_n)->required();
    construct->add_option("--k", c_k)->required();
    construct->add_option("--emit", c_emit)->check(CLI::IsMember({"graph6", "json"}));

    auto* verify = app.add_subcommand("verify", "solver-check a family's claimed values");
    std::string v_family, v_format = "text";
    int v_n = 0, v_k = 0;
    verify->add_option("--family", v_family)->required()->check(CLI::IsMember({"kn-minus-cycle", "jw"}));
    verify->add_option("--n", v_n)->required();
    verify->add_option("--k", v_k)->required();
    verify->add_option("--format", v_format)->check(CLI::IsMember({"text", "json"}));

    auto* qtable = app.add_subcommand("qtable", "exhaustive Q(n,c) table");
    int t_nmax = 0;
    int t_jobs = 1;
    if (const char* env = std::getenv("QCLIQUE_JOBS")) t_jobs = std::max(1, std::atoi(env));
    std::string t_format = "csv";
    qtable->add_option("--n-max", t_nmax)->required();
    qtable->add_option("--jobs", t_jobs, "worker count (env QCLIQUE_JOBS)");
    qtable->add_option("--format", t_format)->check(CLI::IsMember({"csv", "json"}));

    auto* witness = app.add_subcommand("witness", "clique-or-recoloring for an (n-k)-colored graph");
    std::string w_input, w_coloring;
    int w_k = 0;
    witness->add_option("--input", w_input, "graph6 file (default stdin)");
    witness->add_option("--k", w_k)->required();
    witness->add_option("--coloring", w_coloring, "JSON file {\"colors\": [...]}");

    auto* scaling = app.add_subcommand("scaling", "greedy-coloring growth against n^((q-2)/(q-1))");
    int s_q = 3;
    std::string s_family = "bipartite";
    std::vector<int> s_sizes;
    scaling->add_option("--q", s_q)->required();
    scaling->add_option("--family", s_family)->check(CLI::IsMember({"bipartite", "cycle", "mycielski-ish"}));
    scaling->add_option("--sizes", s_sizes, "sample sizes")->required()->delimiter(',');

    try {
        app.parse(argc, argv);
        if (solve->parsed()) return run_solve(solve_input, f_chi, f_omega, f_alpha, solve_format);
        if (construct->parsed()) return run_construct(c_family, c_n, c_k, c_emit);
        if (verify->parsed()) return run_verify(v_family, v_n, v_k, v_format);
        if (qtable->parsed()) return run_qtable(t_nmax, t_jobs, t_format);
        if (witness->parsed()) {
            if (w_k < 3) throw qc::contract_error("witness requires k >= 3");
            return run_witness(w_input, w_k, w_coloring);
        }
        if (scaling->parsed()) return run_scaling(s_q, s_family, s_sizes, seed);
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const qc::claim_mismatch& e) {
        std::cerr << "claim violation: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "mathematical claim failed: " << e.what() << '\n';
        return 2;
    } catch (const qc::parse_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
