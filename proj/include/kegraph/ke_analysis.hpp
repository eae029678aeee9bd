#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kegraph/budget.hpp"
#include "kegraph/graph.hpp"
#include "kegraph/independence.hpp"
#include "kegraph/matching.hpp"

namespace kegraph {

// A graph is Konig-Egervary (KE) when alpha + mu = n. The recognizers below
// decide that property along four independent routes; on any graph their
// definite answers must coincide.
enum class Verdict { yes, no, indeterminate, not_computed };
const char* to_string(Verdict v);

enum class KEMethod { definition, theorem1, sterboul, larson, all };
const char* to_string(KEMethod m);
std::optional<KEMethod> ke_method_from_string(std::string_view name);

// First failure of the cut-containment scan, in lexicographic order: the
// least maximum independent set (by member list), then the least maximum
// matching (by edge list) not inside its cut, then the least matching edge
// with both endpoints outside the set.
struct CutViolation {
    VertexSet independent_set;
    Matching matching;
    Edge offending_edge{-1, -1};
};

struct CutContainmentResult {
    // "some maximum independent set has every maximum matching inside its cut"
    Verdict some_set_contains_all = Verdict::indeterminate;
    // "every maximum independent set has every maximum matching inside its cut"
    Verdict every_set_contains_all = Verdict::indeterminate;
    std::optional<CutViolation> violation;  // set when a scan hits a violation
    bool budget_exceeded = false;
};
CutContainmentResult check_cut_containment(const Graph& g, const Budget& budget = Budget());

// Certificate that a graph is KE: an independent set plus a matching that
// together touch every vertex exactly once (|S| + |M| = n). Validity of the
// certificate alone proves alpha + mu >= n, hence equality.
struct KEDecomposition {
    VertexSet independent_part;  // S
    InducedSubgraph rest;        // the induced graph on V - S
    Matching matching;           // matches each vertex of V - S to one of S
};
std::optional<std::string> decomposition_error(const Graph& g, const KEDecomposition& d);
// Builds the certificate from the canonical maximum independent set and
// maximum matching; nullopt exactly when the graph is not KE.
std::optional<KEDecomposition> ke_decomposition(const Graph& g);

Verdict is_ke(const Graph& g, KEMethod method = KEMethod::definition,
              const Budget& budget = Budget());

struct KEReport {
    int n = 0;
    int alpha = 0;
    int mu = 0;
    int deficiency = 0;  // n - 2*mu
    std::optional<int> critical_difference;
    std::optional<VertexSet> core;

    Verdict definition = Verdict::not_computed;
    Verdict theorem1 = Verdict::not_computed;
    Verdict sterboul = Verdict::not_computed;
    Verdict larson = Verdict::not_computed;

    // When the flower/posy route answers "no", the structure it found and the
    // maximum matching it is relative to.
    std::optional<StructureWitness> witness;
    std::optional<Matching> witness_matching;

    std::optional<KEDecomposition> decomposition;  // present iff the graph is KE
    std::vector<std::string> indeterminate;        // methods stopped by the budget

    // Combined verdict; definite answers agree by construction (analyze_ke
    // throws std::logic_error otherwise, which would mean a library bug).
    Verdict overall() const;
};

// Runs the requested recognizer(s) plus the base quantities. alpha, mu and
// the definition verdict are always computed.
KEReport analyze_ke(const Graph& g, KEMethod method = KEMethod::all,
                    const Budget& budget = Budget());

// Outcome of one structural property check. `applicable` is false when the
// property's hypotheses do not hold for this graph (the check is then
// vacuous); `budget_exceeded` marks an undecided outcome.
struct CheckOutcome {
    bool applicable = true;
    bool passed = true;
    bool budget_exceeded = false;
    std::vector<std::string> notes;
};

// For a KE graph: every maximum matching matches N(core) into the core, the
// graph minus N[core] is KE with a perfect matching, and that subgraph's
// maximum matching extends to a maximum matching of the whole graph.
CheckOutcome check_core_structure(const Graph& g, const Budget& budget = Budget());

// For a KE graph: every vertex left exposed by some maximum matching lies in
// the core. Also cross-checks (for any graph) that the exposable vertices are
// exactly the non-mu-critical ones.
CheckOutcome check_exposed_and_critical(const Graph& g, const Budget& budget = Budget());

// Per vertex v with both the graph and g - v KE: v is in the core iff some
// maximum matching misses v. Bipartite graphs satisfy the hypotheses for
// every vertex.
CheckOutcome check_saturation(const Graph& g, const Budget& budget = Budget());

// floor(n/2) + 1 <= alpha + mu <= n; the lower bound is skipped for n = 0.
CheckOutcome bounds_check(const Graph& g);

// KE: critical difference = alpha - mu = deficiency = |core| - |N(core)|,
// and every maximum independent set is critical. Not KE: some maximum
// independent set is not critical.
CheckOutcome check_identities(const Graph& g, const Budget& budget = Budget());

}  // namespace kegraph
