#include "kegraph/ke_analysis.hpp"

#include <algorithm>
#include <sstream>

namespace kegraph {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::indeterminate: return "indeterminate";
        case Verdict::not_computed: return "not_computed";
    }
    return "?";
}

const char* to_string(KEMethod m) {
    switch (m) {
        case KEMethod::definition: return "definition";
        case KEMethod::theorem1: return "theorem1";
        case KEMethod::sterboul: return "sterboul";
        case KEMethod::larson: return "larson";
        case KEMethod::all: return "all";
    }
    return "?";
}

std::optional<KEMethod> ke_method_from_string(std::string_view name) {
    if (name == "definition") return KEMethod::definition;
    if (name == "theorem1") return KEMethod::theorem1;
    if (name == "sterboul") return KEMethod::sterboul;
    if (name == "larson") return KEMethod::larson;
    if (name == "all") return KEMethod::all;
    return std::nullopt;
}

namespace {

// Least matching edge with both endpoints outside s, if any.
std::optional<Edge> edge_outside_cut(const VertexSet& s, const Matching& m) {
    for (const auto& e : m.edges()) {
        if (!s.contains(e.first) && !s.contains(e.second)) return e;
    }
    return std::nullopt;
}

std::string describe_vertex(const Graph& g, int v) { return g.label(v); }

std::string describe_set(const Graph& g, const VertexSet& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int v : s) {
        if (!first) out << ", ";
        first = false;
        out << describe_vertex(g, v);
    }
    out << '}';
    return out.str();
}

std::string describe_matching(const Graph& g, const Matching& m) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [u, v] : m.edges()) {
        if (!first) out << ", ";
        first = false;
        out << describe_vertex(g, u) << describe_vertex(g, v);
    }
    out << '}';
    return out.str();
}

}  // namespace

CutContainmentResult check_cut_containment(const Graph& g, const Budget& budget) {
    CutContainmentResult r;
    MatchingList matchings = all_maximum_matchings(g, budget);
    std::sort(matchings.items.begin(), matchings.items.end(),
              [](const Matching& a, const Matching& b) { return a.edges() < b.edges(); });
    IndependentSetList omega = all_maximum_independent_sets(g, budget);
    r.budget_exceeded = !matchings.complete || !omega.complete;

    bool some_set_passes_all = false;   // over the complete matching list
    bool every_visited_set_fails = true;
    for (const auto& s : omega.items) {
        std::optional<CutViolation> first_violation;
        for (const auto& m : matchings.items) {
            if (auto e = edge_outside_cut(s, m)) {
                first_violation = CutViolation{s, m, *e};
                break;
            }
        }
        if (first_violation) {
            if (!r.violation) r.violation = first_violation;  // lexicographic first
        } else {
            every_visited_set_fails = false;
            if (matchings.complete) some_set_passes_all = true;
        }
    }

    if (some_set_passes_all) {
        r.some_set_contains_all = Verdict::yes;
    } else if (every_visited_set_fails && omega.complete) {
        r.some_set_contains_all = Verdict::no;  // each violation is definite
    } else {
        r.some_set_contains_all = Verdict::indeterminate;
    }

    if (r.violation) {
        r.every_set_contains_all = Verdict::no;
    } else if (matchings.complete && omega.complete) {
        r.every_set_contains_all = Verdict::yes;
    } else {
        r.every_set_contains_all = Verdict::indeterminate;
    }
    return r;
}

std::optional<std::string> decomposition_error(const Graph& g, const KEDecomposition& d) {
    check_owner(g, d.independent_part, "independent part");
    check_owner(g, d.matching, "matching");
    if (!is_independent_set(g, d.independent_part)) {
        return std::string("independent part is not independent");
    }
    if (d.independent_part.size() + d.matching.size() != g.vertex_count()) {
        return std::string("independent part and matching do not tile the vertex count");
    }
    // Implied by the size identity, but checked for robustness: the matching
    // pairs each remaining vertex with one of the independent part.
    for (const auto& [u, v] : d.matching.edges()) {
        if (d.independent_part.contains(u) == d.independent_part.contains(v)) {
            return std::string("matching edge does not cross the partition");
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!d.independent_part.contains(v) && !d.matching.saturates(v)) {
            return std::string("vertex outside the independent part is unmatched");
        }
    }
    if (static_cast<int>(d.rest.to_parent.size()) != g.vertex_count() - d.independent_part.size()) {
        return std::string("rest subgraph has the wrong vertex count");
    }
    return std::nullopt;
}

std::optional<KEDecomposition> ke_decomposition(const Graph& g) {
    VertexSet s = maximum_independent_set(g);
    Matching m = maximum_matching(g);
    if (s.size() + m.size() != g.vertex_count()) return std::nullopt;
    KEDecomposition d{s, induced_subgraph(g, s.complement()), m};
    if (auto err = decomposition_error(g, d)) {
        throw std::logic_error("internal error: invalid decomposition built: " + *err);
    }
    return d;
}

namespace {

Verdict definition_verdict(int alpha, int mu, int n) {
    return alpha + mu == n ? Verdict::yes : Verdict::no;
}

struct SterboulOutcome {
    Verdict verdict = Verdict::indeterminate;
    std::optional<StructureWitness> witness;
};

SterboulOutcome sterboul_verdict(const Graph& g, const Matching& m, const Budget& budget) {
    SterboulOutcome out;
    try {
        if (auto flower = find_flower(g, m)) {
            out.verdict = Verdict::no;
            out.witness = std::move(flower);
            return out;
        }
        if (auto posy = find_posy(g, m, budget)) {
            out.verdict = Verdict::no;
            out.witness = std::move(posy);
            return out;
        }
        out.verdict = Verdict::yes;
    } catch (const BudgetExceededError&) {
        out.verdict = Verdict::indeterminate;
    }
    return out;
}

Verdict larson_verdict(const Graph& g, int alpha, const Budget& budget) {
    try {
        return critical_independence_number(g, budget) == alpha ? Verdict::yes : Verdict::no;
    } catch (const BudgetExceededError&) {
        return Verdict::indeterminate;
    }
}

}  // namespace

Verdict is_ke(const Graph& g, KEMethod method, const Budget& budget) {
    switch (method) {
        case KEMethod::definition:
            return definition_verdict(independence_number(g), maximum_matching(g).size(),
                                      g.vertex_count());
        case KEMethod::theorem1:
            return check_cut_containment(g, budget).some_set_contains_all;
        case KEMethod::sterboul:
            return sterboul_verdict(g, maximum_matching(g), budget).verdict;
        case KEMethod::larson:
            return larson_verdict(g, independence_number(g), budget);
        case KEMethod::all:
            return analyze_ke(g, KEMethod::all, budget).overall();
    }
    return Verdict::not_computed;
}

Verdict KEReport::overall() const {
    bool any_yes = false, any_no = false, any_indet = false;
    for (Verdict v : {definition, theorem1, sterboul, larson}) {
        if (v == Verdict::yes) any_yes = true;
        if (v == Verdict::no) any_no = true;
        if (v == Verdict::indeterminate) any_indet = true;
    }
    if (any_yes && any_no) return Verdict::indeterminate;  // guarded by analyze_ke
    if (any_yes) return Verdict::yes;
    if (any_no) return Verdict::no;
    if (any_indet) return Verdict::indeterminate;
    return Verdict::not_computed;
}

KEReport analyze_ke(const Graph& g, KEMethod method, const Budget& budget) {
    KEReport r;
    r.n = g.vertex_count();
    Matching m = maximum_matching(g);
    r.mu = m.size();
    r.deficiency = r.n - 2 * r.mu;
    r.alpha = independence_number(g);
    r.definition = definition_verdict(r.alpha, r.mu, r.n);

    const bool all = (method == KEMethod::all);
    if (all || method == KEMethod::theorem1) {
        r.theorem1 = check_cut_containment(g, budget).some_set_contains_all;
    }
    if (all || method == KEMethod::sterboul) {
        SterboulOutcome so = sterboul_verdict(g, m, budget);
        r.sterboul = so.verdict;
        if (so.witness) {
            r.witness = std::move(so.witness);
            r.witness_matching = m;
        }
    }
    if (all || method == KEMethod::larson) {
        r.larson = larson_verdict(g, r.alpha, budget);
    }

    try {
        r.critical_difference = critical_difference(g, budget);
    } catch (const BudgetExceededError&) {
    }
    try {
        r.core = core_vertices(g, budget);
    } catch (const BudgetExceededError&) {
    }

    if (r.definition == Verdict::yes) r.decomposition = ke_decomposition(g);

    bool any_yes = false, any_no = false;
    for (Verdict v : {r.definition, r.theorem1, r.sterboul, r.larson}) {
        if (v == Verdict::yes) any_yes = true;
        if (v == Verdict::no) any_no = true;
    }
    if (any_yes && any_no) {
        throw std::logic_error("internal error: recognizers disagree on " + serialize_graph(g));
    }
    for (auto [v, name] : {std::pair{r.theorem1, "theorem1"},
                           std::pair{r.sterboul, "sterboul"},
                           std::pair{r.larson, "larson"}}) {
        if (v == Verdict::indeterminate) r.indeterminate.emplace_back(name);
    }
    return r;
}

// ---- structural property checks ----

namespace {

bool ke_by_definition(const Graph& g) {
    return independence_number(g) + maximum_matching(g).size() == g.vertex_count();
}

void note(CheckOutcome& o, const std::string& line) { o.notes.push_back(line); }

void fail(CheckOutcome& o, const std::string& line) {
    o.passed = false;
    o.notes.push_back(line);
}

}  // namespace

CheckOutcome check_core_structure(const Graph& g, const Budget& budget) {
    CheckOutcome o;
    if (!ke_by_definition(g)) {
        o.applicable = false;
        note(o, "graph is not Konig-Egervary; nothing to check");
        return o;
    }
    VertexSet core = VertexSet::empty(g);
    try {
        core = core_vertices(g, budget);
    } catch (const BudgetExceededError&) {
        o.budget_exceeded = true;
        note(o, "core computation exhausted its budget");
        return o;
    }
    VertexSet nb = neighborhood(g, core);
    note(o, "core = " + describe_set(g, core) + ", N(core) = " + describe_set(g, nb));

    // Every maximum matching pairs each neighbor of the core with a core vertex.
    bool scan_complete = true;
    EnumStatus st = enumerate_maximum_matchings(
        g,
        [&](const Matching& m) {
            for (int u : nb) {
                int z = m.mate(u);
                if (z == -1 || !core.contains(z)) {
                    fail(o, "matching " + describe_matching(g, m) + " fails to pair " +
                                describe_vertex(g, u) + " into the core");
                    return false;
                }
            }
            return true;
        },
        budget);
    if (st == EnumStatus::budget_exceeded) {
        scan_complete = false;
        o.budget_exceeded = true;
        note(o, "maximum-matching scan exhausted its budget");
    }
    if (o.passed && scan_complete) {
        note(o, "every maximum matching pairs N(core) into the core");
    }

    // The graph minus the closed neighborhood of the core is KE with a
    // perfect matching.
    InducedSubgraph rest = delete_vertices(g, closed_neighborhood(g, core));
    const Graph& h = rest.graph;
    Matching hm = maximum_matching(h);
    if (2 * hm.size() != h.vertex_count()) {
        fail(o, "graph minus N[core] has no perfect matching");
    }
    if (!ke_by_definition(h)) {
        fail(o, "graph minus N[core] is not Konig-Egervary");
    }

    // That subgraph's maximum matching extends to a maximum matching of g.
    std::vector<Edge> lifted;
    for (const auto& [u, v] : hm.edges()) {
        lifted.push_back(make_edge(rest.parent_index(u), rest.parent_index(v)));
    }
    Matching extended = maximum_matching_with(g, lifted, {});
    if (extended.size() != maximum_matching(g).size()) {
        fail(o, "maximum matching of the remainder does not extend to one of the whole graph");
    } else {
        note(o, "remainder matching extends to a maximum matching of the whole graph");
    }
    return o;
}

CheckOutcome check_exposed_and_critical(const Graph& g, const Budget& budget) {
    CheckOutcome o;
    const bool ke = ke_by_definition(g);
    o.applicable = ke;
    if (!ke) note(o, "graph is not Konig-Egervary; containment is reported but not promised");

    // Exposable vertices two ways: union of exposed sets over all maximum
    // matchings, and the complement of the mu-critical vertices.
    std::vector<char> exposable(g.vertex_count(), 0);
    EnumStatus st = enumerate_maximum_matchings(
        g,
        [&](const Matching& m) {
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (!m.saturates(v)) exposable[v] = 1;
            }
            return true;
        },
        budget);
    if (st == EnumStatus::budget_exceeded) {
        o.budget_exceeded = true;
        note(o, "maximum-matching scan exhausted its budget");
        return o;
    }
    VertexSet mu_crit = mu_critical_vertices(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (exposable[v] == mu_crit.contains(v)) {
            fail(o, "cross-check failed at " + describe_vertex(g, v) +
                        ": exposable must equal non-mu-critical");
        }
    }

    VertexSet core = VertexSet::empty(g);
    try {
        core = core_vertices(g, budget);
    } catch (const BudgetExceededError&) {
        o.budget_exceeded = true;
        note(o, "core computation exhausted its budget");
        return o;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (exposable[v] && !core.contains(v)) {
            fail(o, "vertex " + describe_vertex(g, v) +
                        " is left exposed by some maximum matching but is not in the core");
        }
    }
    if (o.passed) note(o, "every exposable vertex lies in the core");
    return o;
}

CheckOutcome check_saturation(const Graph& g, const Budget& budget) {
    CheckOutcome o;
    if (!ke_by_definition(g)) {
        o.applicable = false;
        note(o, "graph is not Konig-Egervary; nothing to check");
        return o;
    }
    VertexSet core = VertexSet::empty(g);
    try {
        core = core_vertices(g, budget);
    } catch (const BudgetExceededError&) {
        o.budget_exceeded = true;
        note(o, "core computation exhausted its budget");
        return o;
    }
    VertexSet mu_crit = mu_critical_vertices(g);  // missed by some matching == not critical

    int applicable_vertices = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        InducedSubgraph del = delete_vertices(g, VertexSet(g, {v}));
        if (!ke_by_definition(del.graph)) {
            note(o, "vertex " + describe_vertex(g, v) + " skipped: graph minus it is not Konig-Egervary");
            continue;
        }
        ++applicable_vertices;
        bool in_core = core.contains(v);
        bool missable = !mu_crit.contains(v);
        if (in_core != missable) {
            fail(o, "vertex " + describe_vertex(g, v) + ": in core = " +
                        (in_core ? "yes" : "no") + " but missed by some maximum matching = " +
                        (missable ? "yes" : "no"));
        }
    }
    if (o.passed) {
        note(o, "core membership matches exposability on " + std::to_string(applicable_vertices) +
                    " applicable vertices");
    }
    return o;
}

CheckOutcome bounds_check(const Graph& g) {
    CheckOutcome o;
    int n = g.vertex_count();
    int alpha = independence_number(g);
    int mu = maximum_matching(g).size();
    int sum = alpha + mu;
    note(o, "alpha = " + std::to_string(alpha) + ", mu = " + std::to_string(mu) +
                ", alpha + mu = " + std::to_string(sum) + ", n = " + std::to_string(n));
    if (sum > n) fail(o, "alpha + mu exceeds the vertex count");
    if (n == 0) {
        note(o, "lower bound skipped for the empty graph");
    } else if (sum < n / 2 + 1) {
        fail(o, "alpha + mu is below floor(n/2) + 1");
    }
    return o;
}

CheckOutcome check_identities(const Graph& g, const Budget& budget) {
    CheckOutcome o;
    int n = g.vertex_count();
    int alpha = independence_number(g);
    int mu = maximum_matching(g).size();
    const bool ke = alpha + mu == n;

    int d = 0;
    try {
        d = critical_difference(g, budget);
    } catch (const BudgetExceededError&) {
        o.budget_exceeded = true;
        note(o, "critical-difference search exhausted its budget");
        return o;
    }

    // Criticality of each maximum independent set.
    int critical_count = 0, total = 0;
    EnumStatus st = enumerate_maximum_independent_sets(
        g,
        [&](const VertexSet& s) {
            ++total;
            int f = s.size() - neighborhood(g, s).size();
            if (f == d) ++critical_count;
            return true;
        },
        budget);
    if (st == EnumStatus::budget_exceeded) {
        o.budget_exceeded = true;
        note(o, "maximum-independent-set scan exhausted its budget");
        return o;
    }

    if (ke) {
        if (d != alpha - mu) {
            fail(o, "critical difference " + std::to_string(d) + " != alpha - mu = " +
                        std::to_string(alpha - mu));
        }
        if (d != n - 2 * mu) {
            fail(o, "critical difference " + std::to_string(d) + " != deficiency = " +
                        std::to_string(n - 2 * mu));
        }
        VertexSet core = VertexSet::empty(g);
        try {
            core = core_vertices(g, budget);
        } catch (const BudgetExceededError&) {
            o.budget_exceeded = true;
            note(o, "core computation exhausted its budget");
            return o;
        }
        int core_diff = core.size() - neighborhood(g, core).size();
        if (d != core_diff) {
            fail(o, "critical difference " + std::to_string(d) + " != |core| - |N(core)| = " +
                        std::to_string(core_diff));
        }
        if (critical_count != total) {
            fail(o, std::to_string(total - critical_count) +
                        " maximum independent sets are not critical");
        }
        if (o.passed) {
            note(o, "d = alpha - mu = deficiency = |core| - |N(core)| = " + std::to_string(d) +
                        "; all " + std::to_string(total) + " maximum independent sets critical");
        }
    } else {
        if (critical_count == total) {
            fail(o, "graph is not Konig-Egervary but every maximum independent set is critical");
        } else {
            note(o, std::to_string(total - critical_count) + " of " + std::to_string(total) +
                        " maximum independent sets are non-critical, as required");
        }
    }
    return o;
}

}  // namespace kegraph
