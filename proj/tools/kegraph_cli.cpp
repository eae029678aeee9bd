// kegraph: command-line interface for the Konig-Egervary analysis library.
//
// Subcommands:
//   analyze  full report for one graph (human-readable or JSON)
//   check    structural property checks with pass/fail exit codes
//   fuzz     randomized cross-validation with reproducer files
//   gen      emit fixture and generator graphs
//
// Exit codes: 0 = KE / pass, 1 = not KE / fail, 2 = error or undecided.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kegraph/batch.hpp"
#include "kegraph/json_io.hpp"
#include "kegraph/ke_analysis.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

constexpr double kDefaultTimeLimit = 60.0;

std::uint64_t default_max_items() {
    if (const char* env = std::getenv("KEGRAPH_MAX_ITEMS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed KEGRAPH_MAX_ITEMS\n";
    }
    return kegraph::Budget::kDefaultMaxItems;
}

struct BudgetOptions {
    std::uint64_t max_items = default_max_items();
    double time_limit = kDefaultTimeLimit;

    kegraph::Budget make() const {
        kegraph::Budget b(max_items);
        if (time_limit > 0) b.set_time_limit(time_limit);
        return b;
    }
};

void add_budget_options(CLI::App* app, BudgetOptions& opts) {
    app->add_option("--max-items", opts.max_items,
                    "Cap on enumerated objects per bounded search (env KEGRAPH_MAX_ITEMS)")
        ->capture_default_str();
    app->add_option("--time-limit", opts.time_limit,
                    "Wall-clock limit in seconds per bounded search; 0 disables")
        ->capture_default_str();
}

kegraph::GraphFormat parse_format(const std::string& name) {
    if (name == "edge-list") return kegraph::GraphFormat::edge_list;
    if (name == "dimacs") return kegraph::GraphFormat::dimacs;
    throw CLI::ValidationError("--format", "unknown format '" + name + "'");
}

kegraph::Graph read_graph(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return kegraph::parse_graph(buf.str());
    }
    return kegraph::load_graph_file(path);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

std::string verdict_word(kegraph::Verdict v) { return kegraph::to_string(v); }

std::string joined_vertices(const kegraph::Graph& g, const std::vector<int>& vs) {
    std::string out = "(";
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) out += " ";
        out += g.label(vs[i]);
    }
    return out + ")";
}

std::string human_report(const kegraph::Graph& g, const kegraph::KEReport& r) {
    std::ostringstream out;
    out << "graph: n=" << r.n << " m=" << g.edge_count() << "\n";
    out << "alpha=" << r.alpha << " mu=" << r.mu << " deficiency=" << r.deficiency;
    if (r.critical_difference) out << " d=" << *r.critical_difference;
    out << "\n";
    if (r.core) {
        out << "core: " << joined_vertices(g, r.core->members()) << "\n";
    }
    out << "verdicts:";
    for (auto [v, name] :
         {std::pair{r.definition, "definition"}, std::pair{r.theorem1, "theorem1"},
          std::pair{r.sterboul, "sterboul"}, std::pair{r.larson, "larson"}}) {
        if (v != kegraph::Verdict::not_computed) out << ' ' << name << '=' << verdict_word(v);
    }
    out << "\n";
    if (r.witness) {
        const auto& w = *r.witness;
        out << "witness: " << kegraph::witness_kind_name(w.kind);
        if (w.kind == kegraph::WitnessKind::forbidden_config) out << " config=" << w.config;
        for (const auto& c : w.cycles) out << " cycle=" << joined_vertices(g, c);
        out << " path=" << joined_vertices(g, w.path) << "\n";
    }
    if (r.decomposition) {
        out << "decomposition: S=" << joined_vertices(g, r.decomposition->independent_part.members())
            << " matched-rest=" << r.decomposition->matching.size() << " edges\n";
    }
    switch (r.overall()) {
        case kegraph::Verdict::yes:
            out << "overall: Konig-Egervary\n";
            break;
        case kegraph::Verdict::no:
            out << "overall: not Konig-Egervary\n";
            break;
        default:
            out << "overall: undecided (budget)\n";
            break;
    }
    return out.str();
}

int exit_code_for(const kegraph::KEReport& r) {
    switch (r.overall()) {
        case kegraph::Verdict::yes: return kExitPass;
        case kegraph::Verdict::no: return kExitFail;
        default: return kExitError;
    }
}

int run_analyze(const std::string& input, const std::string& output, const std::string& method_name,
                bool as_json, const BudgetOptions& budget_opts) {
    auto method = kegraph::ke_method_from_string(method_name);
    if (!method) {
        std::cerr << "error: unknown method '" << method_name << "'\n";
        return kExitError;
    }
    kegraph::Graph g = read_graph(input);
    kegraph::KEReport report = kegraph::analyze_ke(g, *method, budget_opts.make());
    if (as_json) {
        nlohmann::json j;
        j["ke"] = kegraph::ke_report_json(g, report);
        j["independence"] = kegraph::independence_report_json(
            g, kegraph::independence_report(g, budget_opts.make()));
        j["matching"] = kegraph::mu_report_json(g, kegraph::mu_report(g));
        write_output(output, j.dump(2) + "\n");
    } else {
        write_output(output, human_report(g, report));
    }
    return exit_code_for(report);
}

int outcome_exit(const kegraph::CheckOutcome& o) {
    if (o.budget_exceeded) return kExitError;
    if (o.applicable && !o.passed) return kExitFail;
    return kExitPass;
}

void print_outcome(const std::string& name, const kegraph::CheckOutcome& o, std::ostream& out) {
    out << "[" << name << "] ";
    if (o.budget_exceeded) {
        out << "UNDECIDED";
    } else if (!o.applicable) {
        out << "INAPPLICABLE";
    } else {
        out << (o.passed ? "PASS" : "FAIL");
    }
    out << "\n";
    for (const auto& line : o.notes) out << "  " << line << "\n";
}

kegraph::CheckOutcome theorem1_outcome(const kegraph::Graph& g, const kegraph::Budget& budget) {
    kegraph::CheckOutcome o;
    kegraph::Verdict def = kegraph::is_ke(g, kegraph::KEMethod::definition);
    kegraph::CutContainmentResult cc = kegraph::check_cut_containment(g, budget);
    o.budget_exceeded = cc.budget_exceeded ||
                        cc.some_set_contains_all == kegraph::Verdict::indeterminate ||
                        cc.every_set_contains_all == kegraph::Verdict::indeterminate;
    o.notes.push_back(std::string("definition: ") + kegraph::to_string(def));
    o.notes.push_back(std::string("some-set cut containment: ") +
                      kegraph::to_string(cc.some_set_contains_all));
    o.notes.push_back(std::string("every-set cut containment: ") +
                      kegraph::to_string(cc.every_set_contains_all));
    if (cc.violation) {
        const auto& v = *cc.violation;
        std::string medges = "(";
        for (size_t k = 0; k < v.matching.edges().size(); ++k) {
            if (k) medges += " ";
            medges += g.label(v.matching.edges()[k].first) + g.label(v.matching.edges()[k].second);
        }
        medges += ")";
        o.notes.push_back("violation: S=" + joined_vertices(g, v.independent_set.members()) +
                          " M=" + medges + " edge=" + g.label(v.offending_edge.first) +
                          g.label(v.offending_edge.second));
    }
    if (!o.budget_exceeded) {
        o.passed = (cc.some_set_contains_all == def) && (cc.every_set_contains_all == def);
    }
    return o;
}

int run_check(const std::string& property, const std::string& input,
              const BudgetOptions& budget_opts) {
    kegraph::Graph g = read_graph(input);
    kegraph::Budget budget = budget_opts.make();
    std::vector<std::pair<std::string, kegraph::CheckOutcome>> results;

    auto run_one = [&](const std::string& name) -> bool {
        if (name == "theorem1") {
            results.emplace_back(name, theorem1_outcome(g, budget));
        } else if (name == "theorem2") {
            results.emplace_back(name, kegraph::check_core_structure(g, budget));
        } else if (name == "prop3") {
            results.emplace_back(name, kegraph::check_exposed_and_critical(g, budget));
        } else if (name == "saturation") {
            results.emplace_back(name, kegraph::check_saturation(g, budget));
        } else if (name == "bounds") {
            results.emplace_back(name, kegraph::bounds_check(g));
        } else if (name == "identities") {
            results.emplace_back(name, kegraph::check_identities(g, budget));
        } else {
            return false;
        }
        return true;
    };

    if (property == "all") {
        for (const char* name :
             {"theorem1", "theorem2", "prop3", "saturation", "bounds", "identities"}) {
            run_one(name);
        }
    } else if (!run_one(property)) {
        std::cerr << "error: unknown property '" << property << "'\n";
        return kExitError;
    }

    int worst = kExitPass;
    for (const auto& [name, outcome] : results) {
        print_outcome(name, outcome, std::cout);
        worst = std::max(worst, outcome_exit(outcome));
    }
    return worst;
}

std::optional<std::string> fuzz_probe(const kegraph::Graph& g, const kegraph::Budget& budget) {
    std::optional<std::string> why = kegraph::agreement_failure(g, budget);
    if (!why) why = kegraph::identities_failure(g, budget);
    if (!why) why = kegraph::structure_failure(g, budget);
    return why;
}

void report_fuzz_failure(const kegraph::Graph& g, const std::string& why,
                         const std::string& out_dir, const std::string& tag) {
    std::filesystem::create_directories(out_dir);
    std::string file = out_dir + "/fuzz_" + tag + ".edges";
    kegraph::write_graph_file(g, file);
    std::cout << "FAIL " << tag << " n=" << g.vertex_count() << " m=" << g.edge_count() << ": "
              << why << "\n  reproducer: " << file << "\n";
}

int run_fuzz(std::uint64_t seed, std::uint64_t rounds, int min_n, int max_n, int exhaustive_n,
             const std::string& out_dir, const BudgetOptions& budget_opts) {
    kegraph::Budget budget = budget_opts.make();
    std::uint64_t checked = 0, failures = 0;

    if (exhaustive_n >= 0) {
        std::uint64_t mask = 0;
        kegraph::for_each_labeled_graph(exhaustive_n, [&](const kegraph::Graph& g) {
            if (auto why = fuzz_probe(g, budget)) {
                ++failures;
                report_fuzz_failure(g, *why, out_dir,
                                    "exh_" + std::to_string(exhaustive_n) + "_" +
                                        std::to_string(mask));
            }
            ++checked;
            ++mask;
            return true;
        });
    } else {
        const double densities[] = {0.1, 0.3, 0.5, 0.8};
        std::vector<kegraph::Graph> corpus =
            kegraph::random_corpus(rounds, min_n, max_n, densities, seed);
        for (size_t i = 0; i < corpus.size(); ++i) {
            if (auto why = fuzz_probe(corpus[i], budget)) {
                ++failures;
                report_fuzz_failure(corpus[i], *why, out_dir,
                                    std::to_string(seed) + "_" + std::to_string(i));
            }
        }
        checked = corpus.size();
    }
    std::cout << "fuzz: checked " << checked << " graphs, " << failures << " failures\n";
    return failures == 0 ? kExitPass : kExitFail;
}

kegraph::Graph generator_graph(const std::string& name) {
    auto starts_with = [&](const char* prefix) { return name.rfind(prefix, 0) == 0; };
    auto nums_after = [&](size_t off) {
        std::vector<std::string> parts;
        std::string rest = name.substr(off);
        size_t pos = 0;
        while (true) {
            size_t next = rest.find(':', pos);
            parts.push_back(rest.substr(pos, next - pos));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        return parts;
    };
    if (starts_with("path:")) return kegraph::make_path(std::stoi(name.substr(5)));
    if (starts_with("cycle:")) return kegraph::make_cycle(std::stoi(name.substr(6)));
    if (starts_with("complete:")) return kegraph::make_complete(std::stoi(name.substr(9)));
    if (starts_with("bipartite:")) {
        auto parts = nums_after(10);
        if (parts.size() != 2) throw std::invalid_argument("expected bipartite:<a>:<b>");
        return kegraph::make_complete_bipartite(std::stoi(parts[0]), std::stoi(parts[1]));
    }
    if (starts_with("gnp:")) {
        auto parts = nums_after(4);
        if (parts.size() < 2 || parts.size() > 3) {
            throw std::invalid_argument("expected gnp:<n>:<p>[:<seed>]");
        }
        std::uint64_t seed = parts.size() == 3 ? std::stoull(parts[2]) : 0;
        return kegraph::make_gnp(std::stoi(parts[0]), std::stod(parts[1]), seed);
    }
    return kegraph::make_fixture(name);
}

struct GenOptions {
    std::string name;                  // positional: fixture name or <kind>:<args> spec
    std::string fixture;               // --fixture
    int path = -1, cycle = -1, complete = -1;
    std::vector<int> bipartite;        // --bipartite <a> <b>
    std::vector<std::string> gnp;      // --gnp <n> <p>
    std::uint64_t seed = 0;
};

kegraph::Graph gen_graph(const GenOptions& o) {
    int chosen = (!o.name.empty()) + (!o.fixture.empty()) + (o.path >= 0) + (o.cycle >= 0) +
                 (o.complete >= 0) + (!o.bipartite.empty()) + (!o.gnp.empty());
    if (chosen != 1) {
        throw std::invalid_argument("gen needs exactly one graph source (name, --fixture, "
                                    "--path, --cycle, --complete, --bipartite or --gnp)");
    }
    if (!o.name.empty()) return generator_graph(o.name);
    if (!o.fixture.empty()) return kegraph::make_fixture(o.fixture);
    if (o.path >= 0) return kegraph::make_path(o.path);
    if (o.cycle >= 0) return kegraph::make_cycle(o.cycle);
    if (o.complete >= 0) return kegraph::make_complete(o.complete);
    if (!o.bipartite.empty()) {
        return kegraph::make_complete_bipartite(o.bipartite.at(0), o.bipartite.at(1));
    }
    return kegraph::make_gnp(std::stoi(o.gnp.at(0)), std::stod(o.gnp.at(1)), o.seed);
}

int run_gen(const GenOptions& opts, const std::string& output, const std::string& format_name,
            bool list) {
    if (list) {
        for (const auto& fixture : kegraph::fixture_names()) std::cout << fixture << "\n";
        std::cout << "path:<n> cycle:<n> complete:<n> bipartite:<a>:<b> gnp:<n>:<p>[:<seed>]\n";
        return kExitPass;
    }
    kegraph::Graph g = gen_graph(opts);
    write_output(output, kegraph::serialize_graph(g, parse_format(format_name)));
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Konig-Egervary graph analysis"};
    app.require_subcommand(1);

    // analyze
    std::string an_input = "-", an_output = "-", an_method = "all";
    bool an_json = false;
    BudgetOptions an_budget;
    CLI::App* analyze = app.add_subcommand("analyze", "Analyze a graph and report KE structure");
    analyze->add_option("input", an_input, "Input graph file ('-' for stdin)");
    analyze->add_option("-o,--output", an_output, "Output file ('-' for stdout)");
    analyze->add_option("--method", an_method, "definition|theorem1|sterboul|larson|all")
        ->capture_default_str();
    analyze->add_flag("--json", an_json, "Emit the JSON report");
    add_budget_options(analyze, an_budget);

    // check
    std::string ck_property, ck_input = "-";
    BudgetOptions ck_budget;
    CLI::App* check = app.add_subcommand("check", "Run structural property checks");
    check->add_option("property,--property", ck_property,
                      "theorem1|theorem2|prop3|saturation|bounds|identities|all")
        ->required();
    check->add_option("input", ck_input, "Input graph file ('-' for stdin)");
    add_budget_options(check, ck_budget);

    // fuzz
    std::uint64_t fz_seed = 0, fz_rounds = 200;
    int fz_min_n = 1, fz_max_n = 10, fz_exhaustive = -1;
    std::string fz_out = "fuzz-failures";
    BudgetOptions fz_budget;
    CLI::App* fuzz = app.add_subcommand("fuzz", "Randomized cross-validation of the recognizers");
    fuzz->add_option("--seed", fz_seed, "Random seed")->capture_default_str();
    fuzz->add_option("--rounds,--samples", fz_rounds, "Number of graphs to test")
        ->capture_default_str();
    fuzz->add_option("--min-n", fz_min_n, "Smallest graph size")->capture_default_str();
    fuzz->add_option("--max-n,--n-max", fz_max_n, "Largest graph size")->capture_default_str();
    fuzz->add_option("--exhaustive", fz_exhaustive,
                     "Check every labeled graph on this many vertices instead of sampling");
    fuzz->add_option("--out", fz_out, "Directory for reproducer files")->capture_default_str();
    add_budget_options(fuzz, fz_budget);

    // gen
    GenOptions gn;
    std::string gn_output = "-", gn_format = "edge-list";
    bool gn_list = false;
    CLI::App* gen = app.add_subcommand("gen", "Emit a named fixture or generated graph");
    gen->add_option("name", gn.name, "Fixture name or generator spec");
    gen->add_option("--fixture", gn.fixture, "Fixture name");
    gen->add_option("--path", gn.path, "Path graph on N vertices");
    gen->add_option("--cycle", gn.cycle, "Cycle graph on N vertices");
    gen->add_option("--complete", gn.complete, "Complete graph on N vertices");
    gen->add_option("--bipartite", gn.bipartite, "Complete bipartite graph K_{A,B}")
        ->expected(2);
    gen->add_option("--gnp", gn.gnp, "Erdos-Renyi G(n, p)")->expected(2);
    gen->add_option("--seed", gn.seed, "Seed for --gnp")->capture_default_str();
    gen->add_option("-o,--output", gn_output, "Output file ('-' for stdout)");
    gen->add_option("--format", gn_format, "edge-list|dimacs")->capture_default_str();
    gen->add_flag("--list", gn_list, "List available names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            return run_analyze(an_input, an_output, an_method, an_json, an_budget);
        }
        if (check->parsed()) return run_check(ck_property, ck_input, ck_budget);
        if (fuzz->parsed()) {
            return run_fuzz(fz_seed, fz_rounds, fz_min_n, fz_max_n, fz_exhaustive, fz_out,
                            fz_budget);
        }
        if (gen->parsed()) return run_gen(gn, gn_output, gn_format, gn_list);
    } catch (const kegraph::ParseError& e) {
        std::cerr << "parse error (line " << e.line() << "): " << e.what() << "\n";
        return kExitError;
    } catch (const kegraph::BudgetExceededError& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
