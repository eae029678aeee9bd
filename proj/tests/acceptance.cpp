// Acceptance gate for the Konig-Egervary analysis library.
//
// Runs nine fixed criteria and prints one [PASS]/[FAIL] line per criterion.
// Exit status is 0 only if every criterion passes. All tolerances, corpus
// sizes, and time limits are pinned here.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "kegraph/batch.hpp"
#include "kegraph/graph.hpp"
#include "kegraph/independence.hpp"
#include "kegraph/ke_analysis.hpp"
#include "kegraph/matching.hpp"
#include "oracles.hpp"

namespace {

using namespace kegraph;
using Clock = std::chrono::steady_clock;

constexpr double kFixtureLimitSeconds = 1.0;    // criteria 1-4
constexpr double kAgreementLimitSeconds = 600.0;  // criterion 5 (shared corpus with 6)
constexpr double kScaleLimitSeconds = 10.0;     // criterion 8, matching call only
constexpr double kDensities[] = {0.1, 0.3, 0.5, 0.8};

struct Criterion {
    std::vector<std::string> problems;
    int reported = 0;  // cap detail spam

    void require(bool ok, const std::string& what) {
        if (ok) return;
        if (++reported <= 8) problems.push_back(what);
        if (reported == 9) problems.push_back("... further failures suppressed");
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool finish(int id, const char* title, Criterion& c, double secs, double limit) {
    if (limit > 0 && secs >= limit) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "time %.2f s exceeds the %.0f s limit", secs, limit);
        c.problems.emplace_back(buf);
    }
    bool ok = c.problems.empty();
    std::printf("[%s] %d. %s (%.2f s)\n", ok ? "PASS" : "FAIL", id, title, secs);
    for (const auto& p : c.problems) std::printf("       - %s\n", p.c_str());
    std::fflush(stdout);
    return ok;
}

std::set<std::string> label_set(const Graph& g, const VertexSet& s) {
    std::set<std::string> out;
    for (int v : s) out.insert(g.label(v));
    return out;
}

// --- criterion 1: the seven-vertex labeled fixture ---------------------------

bool criterion1() {
    auto start = Clock::now();
    Criterion c;
    Graph g = make_fixture("fig1");

    c.require(g.vertex_count() == 7, "n != 7");
    c.require(independence_number(g) == 4, "alpha != 4");
    Matching mm = maximum_matching(g);
    c.require(mm.size() == 3, "mu != 3");
    c.require(deficiency(g) == 1, "deficiency != 1");
    c.require(critical_difference(g) == 1, "critical difference != 1");

    for (KEMethod m :
         {KEMethod::definition, KEMethod::theorem1, KEMethod::sterboul, KEMethod::larson}) {
        c.require(is_ke(g, m) == Verdict::yes,
                  std::string("recognizer '") + to_string(m) + "' did not answer yes");
    }

    VertexSet core = core_vertices(g);
    c.require(label_set(g, core) == std::set<std::string>({"a", "b", "c"}),
              "core is not {a, b, c}");
    c.require(core.size() - neighborhood(g, core).size() == 1, "|core| - |N(core)| != 1");

    int u = g.vertex_by_label("u").value_or(-1);
    int v = g.vertex_by_label("v").value_or(-1);
    c.require(u >= 0 && v >= 0, "labels u, v missing");
    int count = 0;
    enumerate_maximum_matchings(g, [&](const Matching& m) {
        ++count;
        for (int x : {u, v}) {
            int mate = m.mate(x);
            bool into_core = mate >= 0 && core.contains(mate);
            c.require(into_core, "a maximum matching fails to match {u, v} into {a, b, c}");
        }
        VertexSet exposed = exposed_vertices(g, m);
        c.require(exposed.size() == 1, "a maximum matching exposes != 1 vertex");
        for (int x : exposed) {
            c.require(core.contains(x), "an exposed vertex falls outside the core");
        }
        return true;
    });
    c.require(count > 0, "no maximum matchings enumerated");

    return finish(1, "fig1 invariants, core, and matching structure", c,
                  seconds_since(start), kFixtureLimitSeconds);
}

// --- criterion 2: the three five/six-vertex companions -----------------------

bool criterion2() {
    auto start = Clock::now();
    Criterion c;

    Graph g1 = make_fixture("fig22_G1");
    Graph g2 = make_fixture("fig22_G2");
    Graph g3 = make_fixture("fig22_G3");

    c.require(is_ke(g1) == Verdict::yes, "G1 should be Konig-Egervary");
    c.require(is_ke(g2) == Verdict::yes, "G2 should be Konig-Egervary");
    c.require(deficiency(g2) == 0, "G2 should have a perfect matching");
    c.require(independence_number(g2) == maximum_matching(g2).size(), "G2 should have alpha == mu");
    c.require(is_ke(g3) == Verdict::no, "G3 should not be Konig-Egervary");

    CutContainmentResult cc = check_cut_containment(g3);
    c.require(cc.violation.has_value(), "no cut-containment violation exhibited for G3");
    if (cc.violation) {
        const CutViolation& w = *cc.violation;
        const VertexSet& s = w.independent_set;
        c.require(is_independent_set(g3, s), "violating set is not independent");
        c.require(s.size() == independence_number(g3), "violating set is not maximum");
        c.require(w.matching.size() == maximum_matching(g3).size(),
                  "violating matching is not maximum");
        c.require(w.matching.contains(w.offending_edge), "offending edge is not in the matching");
        bool crosses = s.contains(w.offending_edge.first) != s.contains(w.offending_edge.second);
        c.require(!crosses, "offending edge actually lies in the cut");
        // Deterministic scan order pins the documented witness: S = {u, v},
        // matching {xu, yz}, offending edge yz.
        c.require(label_set(g3, s) == std::set<std::string>({"u", "v"}), "witness set is not {u, v}");
        std::set<std::string> medges;
        for (Edge e : w.matching.edges()) {
            std::string a = g3.label(e.first), b = g3.label(e.second);
            medges.insert(a < b ? a + b : b + a);
        }
        c.require(medges == std::set<std::string>({"ux", "yz"}),
                  "witness matching is not {xu, yz}");
    }

    return finish(2, "fig22 family: verdicts, perfect matching, cut violation", c,
                  seconds_since(start), kFixtureLimitSeconds);
}

// --- criterion 3: converse-failure regression --------------------------------

bool criterion3() {
    auto start = Clock::now();
    Criterion c;

    for (const char* name : {"fig33_W", "fig33_H"}) {
        Graph g = make_fixture(name);
        c.require(is_ke(g) == Verdict::no, std::string(name) + " should not be Konig-Egervary");
        VertexSet core = core_vertices(g);
        int count = 0;
        enumerate_maximum_matchings(g, [&](const Matching& m) {
            ++count;
            c.require(exposed_vertices(g, m).is_subset_of(core),
                      std::string(name) + ": a maximum matching exposes a non-core vertex");
            return true;
        });
        c.require(count > 0, std::string(name) + ": no maximum matchings enumerated");
    }

    return finish(3, "fig33 W and H: exposed vertices stay in the core", c,
                  seconds_since(start), kFixtureLimitSeconds);
}

// --- criterion 4: mu-critical edge endpoints ---------------------------------

bool criterion4() {
    auto start = Clock::now();
    Criterion c;

    Graph g1 = make_fixture("fig222_G1");
    c.require(is_ke(g1) == Verdict::no, "G1 should not be Konig-Egervary");
    VertexSet crit1 = mu_critical_vertices(g1);
    for (Edge e : g1.edges()) {
        c.require(crit1.contains(e.first) || crit1.contains(e.second),
                  "G1 edge lacks a mu-critical endpoint");
    }

    Graph g2 = make_fixture("fig222_G2");
    int a = g2.vertex_by_label("a").value_or(-1);
    int b = g2.vertex_by_label("b").value_or(-1);
    c.require(a >= 0 && b >= 0, "G2 labels a, b missing");
    c.require(g2.has_edge(a, b), "G2 edge ab missing");
    VertexSet crit2 = mu_critical_vertices(g2);
    c.require(!crit2.contains(a) && !crit2.contains(b),
              "an endpoint of G2's edge ab is mu-critical");

    Graph g3 = make_fixture("fig222_G3");
    VertexSet crit3 = mu_critical_vertices(g3);
    for (Edge e : g3.edges()) {
        c.require(!crit3.contains(e.first) && !crit3.contains(e.second),
                  "a G3 edge has a mu-critical endpoint");
    }

    return finish(4, "fig222 family: mu-critical edge-endpoint patterns", c,
                  seconds_since(start), kFixtureLimitSeconds);
}

// --- criteria 5 and 6: agreement and identities over one big corpus ----------

struct CorpusOutcome {
    std::uint64_t checked = 0;
    std::vector<std::string> agreement_failures;
    std::vector<std::string> identity_failures;
    double seconds = 0;
};

CorpusOutcome sweep_corpus() {
    CorpusOutcome out;
    auto start = Clock::now();
    auto probe = [&](const Graph& g) {
        ++out.checked;
        if (auto why = agreement_failure(g)) {
            out.agreement_failures.push_back(*why + " on " + serialize_graph(g));
        }
        if (auto why = identities_failure(g)) {
            out.identity_failures.push_back(*why + " on " + serialize_graph(g));
        }
    };

    for (int n = 0; n <= 7; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            probe(g);
            return true;
        });
    }

    std::vector<Graph> corpus = random_corpus(2000, 1, 12, kDensities, 20260823);
    for (const Graph& g : corpus) probe(g);

    out.seconds = seconds_since(start);
    return out;
}

bool criterion5(const CorpusOutcome& out) {
    Criterion c;
    c.require(out.checked == 2131020 + 2000, "corpus size off: expected 2133020 graphs");
    for (const auto& f : out.agreement_failures) c.require(false, f);
    return finish(5, "recognizer agreement: exhaustive n <= 7 plus 2000 random n <= 12", c,
                  out.seconds, kAgreementLimitSeconds);
}

bool criterion6(const CorpusOutcome& out) {
    Criterion c;
    for (const auto& f : out.identity_failures) c.require(false, f);
    return finish(6, "identity suite over the same corpus", c, out.seconds, 0);
}

// --- criterion 7: bipartite graphs -------------------------------------------

bool criterion7() {
    auto start = Clock::now();
    Criterion c;

    std::vector<Graph> big = random_bipartite_corpus(500, 40, kDensities, 4242);
    for (const Graph& g : big) {
        c.require(is_ke(g, KEMethod::sterboul) == Verdict::yes,
                  "bipartite graph judged non-Konig-Egervary: " + serialize_graph(g));
    }

    std::vector<Graph> small = random_bipartite_corpus(50, 12, kDensities, 777);
    for (const Graph& g : small) {
        CheckOutcome o = check_saturation(g);
        c.require(o.applicable && o.passed && !o.budget_exceeded,
                  "saturation check failed on " + serialize_graph(g));
        for (const auto& n : o.notes) {
            c.require(n.find("skipped") == std::string::npos,
                      "a vertex was skipped on a bipartite graph: " + n);
        }
    }

    return finish(7, "bipartite suite: 500 verdicts plus 50 saturation sweeps", c,
                  seconds_since(start), 0);
}

// --- criterion 8: matching engine at scale -----------------------------------

bool criterion8() {
    Criterion c;
    const int n = 10000;
    const double p = 30000.0 / (0.5 * n * (n - 1));
    Graph g = make_gnp(n, p, 8);
    c.require(g.edge_count() > 28000 && g.edge_count() < 32000,
              "sparse graph missed the ~30000-edge target: m=" + std::to_string(g.edge_count()));

    auto start = Clock::now();
    Matching m = maximum_matching(g);
    double secs = seconds_since(start);

    c.require(m.size() > 0, "empty matching on a graph with edges");
    c.require(!has_augmenting_path(g, m), "an augmenting path remains: matching not maximum");

    return finish(8, "maximum matching on 10^4 vertices / ~3*10^4 edges, certified", c, secs,
                  kScaleLimitSeconds);
}

// --- criterion 9: brute-force oracle equivalence -----------------------------

bool criterion9() {
    auto start = Clock::now();
    Criterion c;

    std::vector<Graph> corpus = random_corpus(300, 1, 10, kDensities, 909);
    for (const Graph& g : corpus) {
        std::string tag = " on " + serialize_graph(g);
        c.require(independence_number(g) == oracle::alpha(g), "alpha mismatch" + tag);
        c.require(maximum_matching(g).size() == oracle::mu(g), "mu mismatch" + tag);
        c.require(critical_difference(g) == oracle::critical_difference(g), "d mismatch" + tag);
        c.require(critical_independence_number(g) == oracle::alpha_c(g), "alpha_c mismatch" + tag);
        std::vector<int> core = core_vertices(g).members();
        c.require(core == oracle::core(g), "core mismatch" + tag);
    }

    return finish(9, "solver-versus-oracle equality on 300 graphs, n <= 10", c,
                  seconds_since(start), 0);
}

}  // namespace

int main() {
    int failed = 0;

    failed += !criterion1();
    failed += !criterion2();
    failed += !criterion3();
    failed += !criterion4();

    CorpusOutcome corpus = sweep_corpus();
    failed += !criterion5(corpus);
    failed += !criterion6(corpus);

    failed += !criterion7();
    failed += !criterion8();
    failed += !criterion9();

    if (failed == 0) {
        std::printf("acceptance: all 9 criteria passed\n");
    } else {
        std::printf("acceptance: %d of 9 criteria FAILED\n", failed);
    }
    return failed == 0 ? 0 : 1;
}
