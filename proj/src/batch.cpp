#include "kegraph/batch.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "kegraph/ke_analysis.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kegraph {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

void check_mask_width(int n) {
    if (n < 0 || pair_count(n) > 63) {
        throw std::invalid_argument("vertex count out of range for mask enumeration");
    }
}

double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::uint64_t labeled_graph_count(int n) {
    check_mask_width(n);
    return std::uint64_t{1} << pair_count(n);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    check_mask_width(n);
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
            if ((mask >> bit) & 1) edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

void for_each_labeled_graph(int n, const std::function<bool(const Graph&)>& visit) {
    std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (!visit(graph_from_mask(n, mask))) return;
    }
}

std::vector<Graph> random_corpus(std::uint64_t count, int min_n, int max_n,
                                 std::span<const double> densities, std::uint64_t seed) {
    if (min_n < 0 || max_n < min_n) throw std::invalid_argument("bad size range");
    if (densities.empty()) throw std::invalid_argument("densities must be non-empty");
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        int n = min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - min_n + 1));
        double p = densities[i % densities.size()];
        out.push_back(make_gnp(n, p, rng()));
    }
    return out;
}

std::vector<Graph> random_bipartite_corpus(std::uint64_t count, int max_n,
                                           std::span<const double> densities,
                                           std::uint64_t seed) {
    if (max_n < 2) throw std::invalid_argument("bipartite corpus needs max_n >= 2");
    if (densities.empty()) throw std::invalid_argument("densities must be non-empty");
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
        int left = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
        double p = densities[i % densities.size()];
        std::vector<Edge> edges;
        for (int u = 0; u < left; ++u) {
            for (int v = left; v < n; ++v) {
                if (unit_draw(rng) < p) edges.emplace_back(u, v);
            }
        }
        out.push_back(Graph(n, std::move(edges)));
    }
    return out;
}

std::optional<std::string> agreement_failure(const Graph& g, const Budget& budget) {
    KEReport r;
    try {
        r = analyze_ke(g, KEMethod::all, budget);
    } catch (const std::logic_error& e) {
        return std::string(e.what());
    }
    if (!r.indeterminate.empty()) {
        std::string msg = "budget left methods undecided:";
        for (const auto& name : r.indeterminate) msg += " " + name;
        return msg;
    }
    for (auto [v, name] :
         {std::pair{r.definition, "definition"}, std::pair{r.theorem1, "theorem1"},
          std::pair{r.sterboul, "sterboul"}, std::pair{r.larson, "larson"}}) {
        if (v != r.definition) {
            return std::string("method ") + name + " answered " + to_string(v) +
                   " but definition answered " + to_string(r.definition);
        }
    }
    return std::nullopt;
}

std::optional<std::string> identities_failure(const Graph& g, const Budget& budget) {
    CheckOutcome o = check_identities(g, budget);
    if (o.budget_exceeded) return std::string("identity check ran out of budget");
    if (!o.passed) {
        std::string msg = "identity check failed:";
        for (const auto& line : o.notes) msg += " " + line + ";";
        return msg;
    }
    return std::nullopt;
}

std::optional<std::string> structure_failure(const Graph& g, const Budget& budget) {
    Matching m = maximum_matching(g);
    std::optional<StructureWitness> primary;
    try {
        primary = find_flower(g, m);
        if (!primary) primary = find_posy(g, m, budget);
    } catch (const BudgetExceededError&) {
        return std::string("flower/posy search ran out of budget");
    }
    std::optional<StructureWitness> detector;
    try {
        detector = find_forbidden_configuration(g, m, budget);
    } catch (const BudgetExceededError&) {
        return std::string("configuration detector ran out of budget");
    }
    if (primary.has_value() != detector.has_value()) {
        return std::string("flower/posy search says ") + (primary ? "found" : "none") +
               " but the configuration detector says " + (detector ? "found" : "none");
    }
    if (primary) {
        if (auto err = witness_error(g, m, *primary)) {
            return "flower/posy witness does not validate: " + *err;
        }
    }
    if (detector) {
        if (auto err = witness_error(g, m, *detector)) {
            return "configuration witness does not validate: " + *err;
        }
        if (detector->config < 1 || detector->config > 4) {
            return std::string("configuration number out of range");
        }
    }
    return std::nullopt;
}

namespace {

std::string format_failure(int n, std::uint64_t index, const std::string& msg,
                           const char* index_name) {
    std::ostringstream out;
    out << "n=" << n << ' ' << index_name << '=' << index << ": " << msg;
    return out.str();
}

}  // namespace

SuiteOutcome run_exhaustive_suite(int max_n, const GraphCheck& check) {
    SuiteOutcome out;
    for (int n = 0; n <= max_n; ++n) {
        std::uint64_t total = labeled_graph_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            if (auto f = check(graph_from_mask(n, mask))) {
                out.failures.push_back(format_failure(n, mask, *f, "mask"));
            }
        }
        out.checked += total;
    }
    return out;
}

SuiteOutcome run_exhaustive_suite_parallel(int max_n, const GraphCheck& check) {
#ifdef _OPENMP
    SuiteOutcome out;
    for (int n = 0; n <= max_n; ++n) {
        std::uint64_t total = labeled_graph_count(n);
        std::vector<std::pair<std::uint64_t, std::string>> found;
#pragma omp parallel
        {
            std::vector<std::pair<std::uint64_t, std::string>> local;
#pragma omp for schedule(dynamic, 1024)
            for (long long mask = 0; mask < static_cast<long long>(total); ++mask) {
                if (auto f = check(graph_from_mask(n, static_cast<std::uint64_t>(mask)))) {
                    local.emplace_back(static_cast<std::uint64_t>(mask), *f);
                }
            }
#pragma omp critical
            found.insert(found.end(), local.begin(), local.end());
        }
        std::sort(found.begin(), found.end());
        for (auto& [mask, msg] : found) out.failures.push_back(format_failure(n, mask, msg, "mask"));
        out.checked += total;
    }
    return out;
#else
    return run_exhaustive_suite(max_n, check);
#endif
}

SuiteOutcome run_corpus_suite(std::span<const Graph> graphs, const GraphCheck& check) {
    SuiteOutcome out;
    for (size_t i = 0; i < graphs.size(); ++i) {
        if (auto f = check(graphs[i])) {
            out.failures.push_back(
                format_failure(graphs[i].vertex_count(), i, *f, "index"));
        }
    }
    out.checked = graphs.size();
    return out;
}

SuiteOutcome run_corpus_suite_parallel(std::span<const Graph> graphs, const GraphCheck& check) {
#ifdef _OPENMP
    SuiteOutcome out;
    std::vector<std::pair<std::uint64_t, std::string>> found;
#pragma omp parallel
    {
        std::vector<std::pair<std::uint64_t, std::string>> local;
#pragma omp for schedule(dynamic, 16)
        for (long long i = 0; i < static_cast<long long>(graphs.size()); ++i) {
            if (auto f = check(graphs[static_cast<size_t>(i)])) {
                local.emplace_back(static_cast<std::uint64_t>(i), *f);
            }
        }
#pragma omp critical
        found.insert(found.end(), local.begin(), local.end());
    }
    std::sort(found.begin(), found.end());
    for (auto& [i, msg] : found) {
        out.failures.push_back(
            format_failure(graphs[static_cast<size_t>(i)].vertex_count(), i, msg, "index"));
    }
    out.checked = graphs.size();
    return out;
#else
    return run_corpus_suite(graphs, check);
#endif
}

}  // namespace kegraph
