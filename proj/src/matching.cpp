#include "kegraph/matching.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kegraph {

Matching::Matching(const Graph& g, std::vector<Edge> edges)
    : graph_id_(g.id()) {
    mate_.assign(g.vertex_count(), -1);
    for (auto& e : edges) {
        e = make_edge(e.first, e.second);
        if (!g.has_edge(e.first, e.second)) {
            throw std::invalid_argument("matching edge is not an edge of the graph");
        }
        if (mate_[e.first] != -1 || mate_[e.second] != -1) {
            throw std::invalid_argument("matching edges share a vertex");
        }
        mate_[e.first] = e.second;
        mate_[e.second] = e.first;
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
}

bool Matching::saturates(int v) const {
    return v >= 0 && v < static_cast<int>(mate_.size()) && mate_[v] != -1;
}

int Matching::mate(int v) const {
    if (v < 0 || v >= static_cast<int>(mate_.size())) {
        throw std::invalid_argument("vertex index out of range");
    }
    return mate_[v];
}

bool Matching::contains(Edge e) const {
    e = make_edge(e.first, e.second);
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

void check_owner(const Graph& g, const Matching& m, const char* what) {
    if (m.graph_id() != g.id()) {
        throw std::invalid_argument(std::string(what) + " references a foreign graph");
    }
}

namespace {

// Alternating-tree maximum matching with blossom contraction, tracked through
// base[] pointers (iterative, no recursion). Vertices can be disabled and
// edges forbidden, which lets callers solve vertex-deleted or edge-constrained
// instances without building new graphs. Buffers are reused across solves.
class Engine {
public:
    explicit Engine(const Graph& g)
        : g_(g),
          n_(g.vertex_count()),
          match_(n_, -1),
          p_(n_, -1),
          base_(n_),
          used_(n_, 0),
          blossom_(n_, 0),
          lca_mark_(n_, 0) {}

    void reset() {
        std::fill(match_.begin(), match_.end(), -1);
        disabled_.assign(n_, 0);
        forbidden_.assign(g_.edge_count(), 0);
    }

    void load(const Matching& m) {
        reset();
        for (const auto& [u, v] : m.edges()) {
            match_[u] = v;
            match_[v] = u;
        }
    }

    void disable_vertex(int v) { disabled_[v] = 1; }
    void forbid_edge(int eidx) { forbidden_[eidx] = 1; }

    // Pins the edge in the matching; its endpoints never enter the search.
    void force_edge(int u, int v) {
        match_[u] = v;
        match_[v] = u;
        disabled_[u] = 1;
        disabled_[v] = 1;
    }

    int solve() {
        greedy();
        for (int v = 0; v < n_; ++v) {
            if (match_[v] == -1 && !disabled_[v]) {
                int finish = find_path(v);
                if (finish != -1) augment(finish);
            }
        }
        int pairs = 0;
        for (int v = 0; v < n_; ++v) {
            if (match_[v] > v) ++pairs;
        }
        return pairs;
    }

    bool any_augmenting_path() {
        for (int v = 0; v < n_; ++v) {
            if (match_[v] == -1 && !disabled_[v] && find_path(v) != -1) return true;
        }
        return false;
    }

    std::vector<Edge> matched_edges() const {
        std::vector<Edge> out;
        for (int v = 0; v < n_; ++v) {
            if (match_[v] > v) out.emplace_back(v, match_[v]);
        }
        return out;
    }

private:
    void greedy() {
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1 || disabled_[v]) continue;
            auto nbs = g_.neighbors(v);
            auto eis = g_.incident_edge_indices(v);
            for (size_t k = 0; k < nbs.size(); ++k) {
                int w = nbs[k];
                if (match_[w] == -1 && !disabled_[w] && !forbidden_[eis[k]]) {
                    match_[v] = w;
                    match_[w] = v;
                    break;
                }
            }
        }
    }

    int lca(int a, int b) {
        ++lca_stamp_;
        int cur = a;
        while (true) {
            cur = base_[cur];
            lca_mark_[cur] = lca_stamp_;
            if (match_[cur] == -1) break;
            cur = p_[match_[cur]];
        }
        cur = b;
        while (true) {
            cur = base_[cur];
            if (lca_mark_[cur] == lca_stamp_) return cur;
            cur = p_[match_[cur]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = 1;
            blossom_[base_[match_[v]]] = 1;
            p_[v] = child;
            child = match_[v];
            v = p_[match_[v]];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(p_.begin(), p_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = 1;
        queue_.assign(1, root);
        for (size_t head = 0; head < queue_.size(); ++head) {
            int v = queue_[head];
            auto nbs = g_.neighbors(v);
            auto eis = g_.incident_edge_indices(v);
            for (size_t k = 0; k < nbs.size(); ++k) {
                int to = nbs[k];
                if (disabled_[to] || forbidden_[eis[k]]) continue;
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
                    int cur_base = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i) {
                        if (blossom_[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used_[i]) {
                                used_[i] = 1;
                                queue_.push_back(i);
                            }
                        }
                    }
                } else if (p_[to] == -1) {
                    p_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = 1;
                    queue_.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    void augment(int finish) {
        int v = finish;
        while (v != -1) {
            int pv = p_[v];
            int next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, p_, base_;
    std::vector<char> used_, blossom_, disabled_, forbidden_;
    std::vector<int> queue_;
    std::vector<int> lca_mark_;
    int lca_stamp_ = 0;
};

}  // namespace

Matching maximum_matching(const Graph& g) {
    Engine eng(g);
    eng.reset();
    eng.solve();
    return Matching(g, eng.matched_edges());
}

Matching maximum_matching_with(const Graph& g, const std::vector<Edge>& forced,
                               const std::vector<Edge>& forbidden) {
    Engine eng(g);
    eng.reset();
    std::vector<char> pinned(g.vertex_count(), 0);
    for (auto e : forced) {
        e = make_edge(e.first, e.second);
        if (!g.has_edge(e.first, e.second)) {
            throw std::invalid_argument("forced edge is not an edge of the graph");
        }
        if (pinned[e.first] || pinned[e.second]) {
            throw std::invalid_argument("forced edges share a vertex");
        }
        pinned[e.first] = pinned[e.second] = 1;
        eng.force_edge(e.first, e.second);
    }
    for (auto e : forbidden) {
        e = make_edge(e.first, e.second);
        auto idx = g.edge_index(e.first, e.second);
        if (!idx) throw std::invalid_argument("forbidden edge is not an edge of the graph");
        if (std::find(forced.begin(), forced.end(), e) != forced.end() ||
            std::find(forced.begin(), forced.end(), Edge{e.second, e.first}) != forced.end()) {
            throw std::invalid_argument("edge is both forced and forbidden");
        }
        eng.forbid_edge(*idx);
    }
    eng.solve();
    return Matching(g, eng.matched_edges());
}

bool has_augmenting_path(const Graph& g, const Matching& m) {
    check_owner(g, m, "matching");
    Engine eng(g);
    eng.load(m);
    return eng.any_augmenting_path();
}

VertexSet exposed_vertices(const Graph& g, const Matching& m) {
    check_owner(g, m, "matching");
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!m.saturates(v)) out.push_back(v);
    }
    return VertexSet(g, std::move(out));
}

int deficiency(const Graph& g) {
    return g.vertex_count() - 2 * maximum_matching(g).size();
}

namespace {

struct EnumContext {
    const Graph& g;
    Engine& eng;
    int target;
    const std::function<bool(const Matching&)>& visit;
    const Budget& budget;
    std::uint64_t used = 0;
    EnumStatus status = EnumStatus::complete;
    std::vector<Edge> forced{};
    std::vector<Edge> forbidden{};
};

// Branch tree: each node re-solves under (forced, forbidden); the first
// non-forced edge of that matching is branched in/out. Leaves where the
// constrained optimum equals the forced set are exactly the maximum
// matchings, each reached once.
bool enum_node(EnumContext& ctx) {
    ctx.eng.reset();
    for (const auto& [u, v] : ctx.forced) ctx.eng.force_edge(u, v);
    for (const auto& e : ctx.forbidden) ctx.eng.forbid_edge(*ctx.g.edge_index(e.first, e.second));
    int size = ctx.eng.solve();
    if (size < ctx.target) return true;

    // matched_edges() is ascending, so the first non-forced edge is the least.
    auto edges = ctx.eng.matched_edges();
    Edge branch{-1, -1};
    for (const auto& e : edges) {
        if (std::find(ctx.forced.begin(), ctx.forced.end(), e) == ctx.forced.end()) {
            branch = e;
            break;
        }
    }
    if (branch.first == -1) {
        if (!ctx.budget.consume(ctx.used)) {
            ctx.status = EnumStatus::budget_exceeded;
            return false;
        }
        if (!ctx.visit(Matching(ctx.g, ctx.forced))) {
            ctx.status = EnumStatus::stopped;
            return false;
        }
        return true;
    }

    ctx.forced.push_back(branch);
    if (!enum_node(ctx)) return false;
    ctx.forced.pop_back();

    ctx.forbidden.push_back(branch);
    bool ok = enum_node(ctx);
    ctx.forbidden.pop_back();
    return ok;
}

}  // namespace

EnumStatus enumerate_maximum_matchings(const Graph& g,
                                       const std::function<bool(const Matching&)>& visit,
                                       const Budget& budget) {
    Engine eng(g);
    eng.reset();
    int target = eng.solve();
    EnumContext ctx{g, eng, target, visit, budget};
    enum_node(ctx);
    return ctx.status;
}

MatchingList all_maximum_matchings(const Graph& g, const Budget& budget) {
    MatchingList out;
    EnumStatus st = enumerate_maximum_matchings(
        g,
        [&](const Matching& m) {
            out.items.push_back(m);
            return true;
        },
        budget);
    out.complete = (st == EnumStatus::complete);
    return out;
}

namespace {

std::vector<char> mu_critical_flags(const Graph& g, bool parallel) {
    const int n = g.vertex_count();
    std::vector<char> critical(n, 0);
    Engine base_eng(g);
    base_eng.reset();
    const int mu = base_eng.solve();

#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel
        {
            Engine eng(g);
#pragma omp for schedule(dynamic)
            for (int v = 0; v < n; ++v) {
                eng.reset();
                eng.disable_vertex(v);
                critical[v] = (eng.solve() < mu) ? 1 : 0;
            }
        }
        return critical;
    }
#else
    (void)parallel;
#endif

    Engine eng(g);
    for (int v = 0; v < n; ++v) {
        eng.reset();
        eng.disable_vertex(v);
        critical[v] = (eng.solve() < mu) ? 1 : 0;
    }
    return critical;
}

VertexSet flags_to_set(const Graph& g, const std::vector<char>& flags) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (flags[v]) out.push_back(v);
    }
    return VertexSet(g, std::move(out));
}

}  // namespace

VertexSet mu_critical_vertices(const Graph& g) {
    return flags_to_set(g, mu_critical_flags(g, false));
}

VertexSet mu_critical_vertices_parallel(const Graph& g) {
    return flags_to_set(g, mu_critical_flags(g, true));
}

MuReport mu_report(const Graph& g) {
    MuReport r;
    Matching m = maximum_matching(g);
    r.mu = m.size();
    r.deficiency = g.vertex_count() - 2 * r.mu;
    r.exposed = exposed_vertices(g, m);
    r.mu_critical = mu_critical_vertices(g);
    return r;
}

ReachableAugmentation augment_via_reachable_set(const Graph& g, const Matching& m,
                                                const VertexSet& s, int x) {
    check_owner(g, m, "matching");
    check_owner(g, s, "vertex set");
    g.check_vertex(x);
    if (!is_independent_set(g, s)) {
        throw std::invalid_argument("s must be an independent set");
    }
    for (const auto& [u, v] : m.edges()) {
        if (s.contains(u) == s.contains(v)) {
            throw std::invalid_argument("matching must lie in the cut between s and its complement");
        }
    }
    if (has_augmenting_path(g, m)) {
        throw std::invalid_argument("matching is not maximum");
    }
    if (s.contains(x)) throw std::invalid_argument("x must lie outside s");
    if (m.saturates(x)) throw std::invalid_argument("x must be unmatched");

    // Alternating closure: from an outside vertex, a non-matching edge into a
    // matched member of s, then the matching edge back outside.
    std::vector<char> seen_inside(g.vertex_count(), 0), seen_outside(g.vertex_count(), 0);
    std::vector<int> queue{x};
    seen_outside[x] = 1;
    std::vector<int> reached;
    for (size_t head = 0; head < queue.size(); ++head) {
        int w = queue[head];
        for (int a : g.neighbors(w)) {
            if (!s.contains(a) || !m.saturates(a) || seen_inside[a]) continue;
            if (m.mate(w) == a) continue;
            seen_inside[a] = 1;
            int b = m.mate(a);
            if (!seen_outside[b]) {
                seen_outside[b] = 1;
                reached.push_back(b);
                queue.push_back(b);
            }
        }
    }
    std::sort(reached.begin(), reached.end());

    std::vector<int> result{x};
    result.insert(result.end(), reached.begin(), reached.end());
    for (int a : s) {
        if (!seen_inside[a]) result.push_back(a);
    }
    ReachableAugmentation out;
    out.result = VertexSet(g, std::move(result));
    out.reached = VertexSet(g, std::move(reached));
    out.independent = is_independent_set(g, out.result);
    return out;
}

}  // namespace kegraph
