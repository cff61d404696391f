// prismdom: exact domination variants on small graphs and their prisms.
//
// Subcommands: gamma | prism | family | verify | table5 | search-conjecture.
// Exit codes: 0 success/pass, 1 check failed, 2 usage error, 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "prismdom/families.hpp"
#include "prismdom/io.hpp"
#include "prismdom/solver.hpp"
#include "prismdom/table.hpp"
#include "prismdom/verify.hpp"

using namespace prismdom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::optional<long long> env_budget_ms() {
    const char* v = std::getenv("PRISMDOM_BUDGET_MS");
    if (!v || !*v) return std::nullopt;
    return std::atoll(v);
}

struct Input {
    Graph graph;
    std::optional<std::vector<std::string>> labels;
    std::optional<std::string> perm_text;
};

bool looks_like_graph6(const std::string& path, const std::string& format) {
    if (format == "graph6") return true;
    if (format == "edges") return false;
    return path.size() > 3 && path.substr(path.size() - 3) == ".g6";
}

Input load_graph(const std::string& path, const std::string& format) {
    Input in;
    std::string content;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        content = ss.str();
    } else {
        std::ifstream f(path);
        if (!f) throw std::invalid_argument("cannot open graph file \"" + path + "\"");
        std::ostringstream ss;
        ss << f.rdbuf();
        content = ss.str();
    }
    if (looks_like_graph6(path, format)) {
        std::istringstream ss(content);
        std::string line;
        std::getline(ss, line);
        in.graph = from_graph6(line);
        return in;
    }
    std::istringstream ss(content);
    LoadedGraph lg = read_edge_list(ss);
    in.graph = lg.graph;
    in.labels = lg.labels;
    in.perm_text = lg.perm_text;
    return in;
}

std::map<std::string, int> label_map(const std::vector<std::string>& labels) {
    std::map<std::string, int> m;
    for (size_t v = 0; v < labels.size(); ++v) m[perm_detail::normalize_label(labels[v])] = int(v);
    return m;
}

Permutation resolve_perm(const Input& in, const std::string& flag_text) {
    std::string text = flag_text;
    if (text.empty()) {
        if (!in.perm_text)
            throw std::invalid_argument("no permutation: pass --perm or pipe a family emitted with --with-perm");
        text = *in.perm_text;
    }
    if (in.labels) return parse_permutation(in.graph.n, text, label_map(*in.labels));
    return parse_permutation(in.graph.n, text);
}

void write_graph_output(std::ostream& os, const Graph& g, const std::string& format,
                        const std::vector<std::string>* labels, const std::string* perm_text) {
    if (format == "graph6")
        os << to_graph6(g) << '\n';
    else if (format == "dot")
        write_dot(os, g, labels);
    else
        write_edge_list(os, g, labels, perm_text);
}

int run_gamma(const std::string& graph_path, const std::string& format, const std::string& variant_name_arg,
              bool use_prism, const std::string& perm_flag, bool use_oracle, bool show_witness,
              std::optional<long long> budget_ms, int threads) {
    Input in = load_graph(graph_path, format);
    GammaVariant variant = variant_from_name(variant_name_arg);
    Graph target = in.graph;
    std::vector<std::string> labels = in.labels ? *in.labels : default_labels(in.graph.n);
    if (use_prism) {
        Permutation p = resolve_perm(in, perm_flag);
        PrismGraph pg = build_prism(in.graph, p);
        labels = prism_labels(pg, labels);
        target = pg.graph;
    }
    GammaReport rep;
    if (use_oracle) {
        rep = oracle_gamma_variant(target, variant);
    } else {
        SolveOptions opts;
        opts.threads = threads;
        if (!budget_ms) budget_ms = env_budget_ms();
        if (budget_ms) opts.budget = std::chrono::milliseconds(*budget_ms);
        rep = gamma_variant(target, variant, opts);
    }
    std::cout << rep.to_json(&labels).dump(2) << '\n';
    if (show_witness && rep.conclusive) {
        std::ostringstream ws;
        rep.witness.for_each([&](int v) { ws << labels[v] << ' '; });
        std::cerr << "witness: " << ws.str() << '\n';
    }
    return rep.conclusive ? kExitOk : kExitBudget;
}

int run_prism(const std::string& graph_path, const std::string& format, const std::string& perm_flag,
              const std::string& out_path, const std::string& out_format) {
    Input in = load_graph(graph_path, format);
    Permutation p = resolve_perm(in, perm_flag);
    PrismGraph pg = build_prism(in.graph, p);
    std::vector<std::string> base_labels = in.labels ? *in.labels : default_labels(in.graph.n);
    std::vector<std::string> plabels = prism_labels(pg, base_labels);

    if (out_path.empty()) {
        write_graph_output(std::cout, pg.graph, out_format, &plabels, nullptr);
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot open output file \"" + out_path + "\"");
        write_graph_output(f, pg.graph, out_format, &plabels, nullptr);
        std::ofstream side(out_path + ".json");
        side << sidecar_json(pg.base_n, &p.image(), &base_labels).dump(2) << '\n';
    }
    std::cerr << "prism: " << pg.graph.n << " vertices, " << pg.graph.edge_count() << " edges\n";
    return kExitOk;
}

int run_family(const std::string& name, std::optional<int> k, std::optional<int> l, bool with_perm,
               const std::string& out_path) {
    LabeledGraph lg = make_family(name, k, l);
    std::optional<std::string> perm_text;
    if (with_perm) {
        if (!lg.canonical_perm)
            throw std::invalid_argument("family " + name + " has no bundled permutation");
        perm_text = lg.canonical_perm->to_cycle_string(lg.labels);
    }
    auto emit = [&](std::ostream& os) {
        write_edge_list(os, lg.graph, &lg.labels, perm_text ? &*perm_text : nullptr);
    };
    if (out_path.empty()) {
        emit(std::cout);
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot open output file \"" + out_path + "\"");
        emit(f);
        std::ofstream side(out_path + ".json");
        std::vector<int> img;
        if (lg.canonical_perm) img = lg.canonical_perm->image();
        side << sidecar_json(lg.graph.n, lg.canonical_perm ? &img : nullptr, &lg.labels).dump(2) << '\n';
    }
    return kExitOk;
}

int run_verify(const std::string& check_id, int nmax, std::uint64_t seed, int trials) {
    VerifyOptions opts;
    opts.nmax = nmax;
    opts.seed = seed;
    opts.trials = trials;
    std::vector<std::string> ids;
    if (check_id == "all")
        ids = all_check_ids();
    else
        ids.push_back(check_id);
    nlohmann::json reports = nlohmann::json::array();
    bool all_pass = true;
    for (const std::string& id : ids) {
        CheckResult res = run_check(id, opts);
        reports.push_back(res.to_json());
        all_pass = all_pass && res.pass;
        std::cerr << (res.pass ? "[PASS] " : "[FAIL] ") << id << '\n';
    }
    std::cout << reports.dump(2) << '\n';
    return all_pass ? kExitOk : kExitCheckFailed;
}

int run_table5(int max_k, std::optional<long long> budget_ms, bool as_json, int threads) {
    TableOptions opts;
    opts.max_k = max_k;
    opts.threads = threads;
    if (!budget_ms) budget_ms = env_budget_ms();
    if (budget_ms) opts.heavy_budget_ms = *budget_ms;
    auto rows = counterexample_table(opts);
    if (as_json)
        std::cout << table_to_json(rows).dump(2) << '\n';
    else
        print_table(std::cout, rows);
    bool any_fail = false, mandatory_inconclusive = false;
    for (const auto& r : rows) {
        if (r.status == "FAIL") any_fail = true;
        if (r.status == "INCONCLUSIVE" && !r.optional) mandatory_inconclusive = true;
    }
    if (any_fail) return kExitCheckFailed;
    if (mandatory_inconclusive) return kExitBudget;
    return kExitOk;
}

int run_search_conjecture(int n, long long budget_ms, std::uint64_t seed) {
    auto res = search_wcon_fixer_conjecture(n, budget_ms, seed);
    std::cout << res.to_json().dump(2) << '\n';
    return res.budget_exhausted ? kExitBudget : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prismdom: exact domination variants on small graphs and their prisms"};
    app.require_subcommand(1);

    // gamma
    auto* gamma_cmd = app.add_subcommand("gamma", "compute a domination number with witness");
    std::string g_graph = "-", g_format = "auto", g_variant, g_perm;
    bool g_prism = false, g_oracle = false, g_witness = false;
    std::optional<long long> g_budget;
    int g_threads = 1;
    gamma_cmd->add_option("--graph", g_graph, "graph file (edge list or graph6), - for stdin");
    gamma_cmd->add_option("--format", g_format, "input format: auto|edges|graph6")->check(CLI::IsMember({"auto", "edges", "graph6"}));
    gamma_cmd->add_option("--variant", g_variant, "dom|connected|wcon|con")->required();
    gamma_cmd->add_flag("--prism", g_prism, "solve on the prism of the input graph");
    gamma_cmd->add_option("--perm", g_perm, "permutation in cycle notation (labels resolved when present)");
    gamma_cmd->add_flag("--oracle", g_oracle, "use the subset-enumeration oracle (n <= 16)");
    gamma_cmd->add_flag("--witness", g_witness, "echo the witness on stderr");
    gamma_cmd->add_option("--budget-ms", g_budget, "time budget; exceeded -> inconclusive, exit 3");
    gamma_cmd->add_option("--threads", g_threads, "worker threads for the level sweep");

    // prism
    auto* prism_cmd = app.add_subcommand("prism", "build the prism of a graph");
    std::string p_graph = "-", p_format = "auto", p_perm, p_out, p_out_format = "edges";
    prism_cmd->add_option("--graph", p_graph, "graph file, - for stdin");
    prism_cmd->add_option("--format", p_format, "input format: auto|edges|graph6")->check(CLI::IsMember({"auto", "edges", "graph6"}));
    prism_cmd->add_option("--perm", p_perm, "permutation in cycle notation");
    prism_cmd->add_option("--out", p_out, "output file (sidecar .json written next to it)");
    prism_cmd->add_option("--out-format,--format-out", p_out_format, "edges|graph6|dot")->check(CLI::IsMember({"edges", "graph6", "dot"}));

    // family
    auto* family_cmd = app.add_subcommand("family", "emit a paper graph family");
    std::string f_name, f_out;
    std::optional<int> f_k, f_l;
    bool f_with_perm = false;
    family_cmd->add_option("name", f_name, "path|cycle|star|complete|cycle-gadget|path-gadget|spider-tree|sept-path-gadget")->required();
    family_cmd->add_option("--k", f_k, "size parameter");
    family_cmd->add_option("--l", f_l, "second parameter (spider-tree)");
    family_cmd->add_flag("--with-perm", f_with_perm, "include the family's bundled permutation");
    family_cmd->add_option("--out", f_out, "output file (sidecar .json written next to it)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a theorem check");
    std::string v_check = "all";
    int v_nmax = 7, v_trials = 200;
    std::uint64_t v_seed = 20250810;
    verify_cmd->add_option("--check", v_check, "check id or 'all'");
    verify_cmd->add_option("--nmax", v_nmax, "largest graph order in the sweep");
    verify_cmd->add_option("--seed", v_seed, "seed for the random universes");
    verify_cmd->add_option("--trials", v_trials, "permutations per graph / random instances per size");

    // table5
    auto* table_cmd = app.add_subcommand("table5", "compute the counterexample table");
    int t_max_k = 2, t_threads = 1;
    std::optional<long long> t_budget;
    bool t_json = false;
    table_cmd->add_option("--max-k", t_max_k, "largest gadget parameter");
    table_cmd->add_option("--budget-ms", t_budget, "budget for the heavy exact rows");
    table_cmd->add_flag("--json", t_json, "emit JSON instead of the text table");
    table_cmd->add_option("--threads", t_threads, "worker threads for the level sweep");

    // search-conjecture
    auto* conj_cmd = app.add_subcommand("search-conjecture", "search for a weakly convex fixer counterexample");
    int c_n = 5;
    long long c_budget = 60000;
    std::uint64_t c_seed = 20250810;
    conj_cmd->add_option("--n", c_n, "graph order (2..10)")->required();
    conj_cmd->add_option("--budget-ms", c_budget, "time budget");
    conj_cmd->add_option("--seed", c_seed, "seed for sampled universes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (gamma_cmd->parsed())
            return run_gamma(g_graph, g_format, g_variant, g_prism, g_perm, g_oracle, g_witness, g_budget, g_threads);
        if (prism_cmd->parsed()) return run_prism(p_graph, p_format, p_perm, p_out, p_out_format);
        if (family_cmd->parsed()) return run_family(f_name, f_k, f_l, f_with_perm, f_out);
        if (verify_cmd->parsed()) return run_verify(v_check, v_nmax, v_seed, v_trials);
        if (table_cmd->parsed()) return run_table5(t_max_k, t_budget, t_json, t_threads);
        if (conj_cmd->parsed()) return run_search_conjecture(c_n, c_budget, c_seed);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
