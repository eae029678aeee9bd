#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kegraph/budget.hpp"
#include "kegraph/graph.hpp"

namespace kegraph {

// Number of labeled graphs on n vertices (2^C(n,2)); n is capped so the edge
// mask fits in 64 bits.
std::uint64_t labeled_graph_count(int n);

// Graph whose edge set is the given bit mask over the vertex pairs
// (0,1),(0,2),...,(0,n-1),(1,2),... in order.
Graph graph_from_mask(int n, std::uint64_t mask);

// All labeled graphs on n vertices, masks ascending; visit returns false to stop.
void for_each_labeled_graph(int n, const std::function<bool(const Graph&)>& visit);

// Deterministic random corpora. Sizes cycle through [min_n, max_n] and edge
// densities cycle through `densities`; the same arguments always produce the
// same graphs.
std::vector<Graph> random_corpus(std::uint64_t count, int min_n, int max_n,
                                 std::span<const double> densities, std::uint64_t seed);
std::vector<Graph> random_bipartite_corpus(std::uint64_t count, int max_n,
                                           std::span<const double> densities, std::uint64_t seed);

// Per-graph cross-validation probes. nullopt means the graph checks out;
// otherwise a human-readable description of the first failure.
// agreement: the four KE recognizers give one definite answer.
std::optional<std::string> agreement_failure(const Graph& g, const Budget& budget = Budget());
// identities: the critical-difference/core identity block holds.
std::optional<std::string> identities_failure(const Graph& g, const Budget& budget = Budget());
// structure: flower/posy search agrees with the independent configuration
// detector and every produced witness re-validates.
std::optional<std::string> structure_failure(const Graph& g, const Budget& budget = Budget());

using GraphCheck = std::function<std::optional<std::string>(const Graph&)>;

struct SuiteOutcome {
    std::uint64_t checked = 0;
    std::vector<std::string> failures;  // deterministic order (graph index ascending)
};

// Runs the check over every labeled graph on 0..max_n vertices. The parallel
// variant splits the mask space across OpenMP threads and reports failures in
// the same order as the serial one.
SuiteOutcome run_exhaustive_suite(int max_n, const GraphCheck& check);
SuiteOutcome run_exhaustive_suite_parallel(int max_n, const GraphCheck& check);

// Runs the check over a prebuilt corpus, failures ordered by corpus index.
SuiteOutcome run_corpus_suite(std::span<const Graph> graphs, const GraphCheck& check);
SuiteOutcome run_corpus_suite_parallel(std::span<const Graph> graphs, const GraphCheck& check);

}  // namespace kegraph
