#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "kegraph/matching.hpp"

namespace kegraph {

namespace {

bool in_range(const Graph& g, int v) { return v >= 0 && v < g.vertex_count(); }

bool heavy(const Matching& m, int u, int v) { return m.mate(u) == v; }

std::optional<std::string> vertices_error(const Graph& g, const std::vector<int>& vs,
                                          const char* what) {
    for (int v : vs) {
        if (!in_range(g, v)) return std::string(what) + " contains an out-of-range vertex";
    }
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return std::string(what) + " repeats a vertex";
    }
    return std::nullopt;
}

// Odd cycle cyc[0..L-1], cyc[0] the base; edges (cyc[1],cyc[2]), (cyc[3],cyc[4]),
// ... must be matching edges, every other cycle edge must not be.
std::optional<std::string> cycle_error(const Graph& g, const Matching& m,
                                       const std::vector<int>& cyc) {
    const int L = static_cast<int>(cyc.size());
    if (L < 3 || L % 2 == 0) return std::string("cycle length must be odd and at least 3");
    if (auto err = vertices_error(g, cyc, "cycle")) return err;
    for (int i = 0; i < L; ++i) {
        int u = cyc[i], v = cyc[(i + 1) % L];
        if (!g.has_edge(u, v)) return "cycle step is not an edge of the graph";
        bool want_heavy = (i % 2 == 1);
        if (heavy(m, u, v) != want_heavy) {
            return want_heavy ? "cycle edge expected in the matching"
                              : "cycle edge expected outside the matching";
        }
    }
    return std::nullopt;
}

std::optional<std::string> simple_path_error(const Graph& g, const std::vector<int>& path,
                                             const char* what) {
    if (auto err = vertices_error(g, path, what)) return err;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        if (!g.has_edge(path[i], path[i + 1])) {
            return std::string(what) + " step is not an edge of the graph";
        }
    }
    return std::nullopt;
}

bool path_alternates(const Matching& m, const std::vector<int>& path, bool starts_heavy) {
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        bool want = (i % 2 == 0) == starts_heavy;
        if (heavy(m, path[i], path[i + 1]) != want) return false;
    }
    return true;
}

bool disjoint_except(const std::vector<int>& path, const std::vector<int>& cyc, int allowed) {
    for (int v : path) {
        if (v != allowed && std::find(cyc.begin(), cyc.end(), v) != cyc.end()) return false;
    }
    return true;
}

// Even alternating stem from the base: first edge heavy, last edge light,
// endpoint exposed; a one-vertex path is the empty stem (base exposed).
std::optional<std::string> stem_error(const Graph& g, const Matching& m,
                                      const std::vector<int>& path, const std::vector<int>& cyc) {
    if (path.empty()) return std::string("stem must contain at least the base");
    if (path.front() != cyc.front()) return std::string("stem must start at the base");
    if (path.size() % 2 == 0) return std::string("stem must have an even number of edges");
    if (auto err = simple_path_error(g, path, "stem")) return err;
    if (!path_alternates(m, path, /*starts_heavy=*/true)) {
        return std::string("stem must alternate starting with a matching edge");
    }
    if (m.saturates(path.back())) return std::string("stem must end at an exposed vertex");
    std::vector<int> interior(path.begin() + 1, path.end());
    if (!disjoint_except(interior, cyc, -1)) {
        return std::string("stem must leave the cycle after the base");
    }
    return std::nullopt;
}

// Odd alternating join between the two bases: first and last edges heavy,
// interior vertices off both cycles.
std::optional<std::string> join_error(const Graph& g, const Matching& m,
                                      const std::vector<int>& path, const std::vector<int>& cyc1,
                                      const std::vector<int>& cyc2) {
    if (path.size() < 2) return std::string("join must contain at least one edge");
    if (path.size() % 2 != 0) return std::string("join must have an odd number of edges");
    if (path.front() != cyc1.front()) return std::string("join must start at the first base");
    if (path.back() != cyc2.front()) return std::string("join must end at the second base");
    if (auto err = simple_path_error(g, path, "join")) return err;
    if (!path_alternates(m, path, /*starts_heavy=*/true)) {
        return std::string("join must alternate starting and ending with matching edges");
    }
    if (path.size() > 2) {
        std::vector<int> interior(path.begin() + 1, path.end() - 1);
        if (!disjoint_except(interior, cyc1, -1) || !disjoint_except(interior, cyc2, -1)) {
            return std::string("join interior must avoid both cycles");
        }
    }
    return std::nullopt;
}

std::optional<std::string> flower_shape_error(const Graph& g, const Matching& m,
                                              const StructureWitness& w) {
    if (w.cycles.size() != 1) return std::string("flower needs exactly one cycle");
    if (w.bases.size() != 1) return std::string("flower needs exactly one base");
    if (auto err = cycle_error(g, m, w.cycles[0])) return err;
    if (w.bases[0] != w.cycles[0].front()) return std::string("base must open the cycle");
    return stem_error(g, m, w.path, w.cycles[0]);
}

bool cycles_overlap(const std::vector<int>& a, const std::vector<int>& b) {
    for (int v : a) {
        if (std::find(b.begin(), b.end(), v) != b.end()) return true;
    }
    return false;
}

std::optional<std::string> posy_shape_error(const Graph& g, const Matching& m,
                                            const StructureWitness& w) {
    if (w.cycles.size() != 2) return std::string("posy needs exactly two cycles");
    if (w.bases.size() != 2) return std::string("posy needs exactly two bases");
    if (auto err = cycle_error(g, m, w.cycles[0])) return err;
    if (auto err = cycle_error(g, m, w.cycles[1])) return err;
    if (w.bases[0] != w.cycles[0].front() || w.bases[1] != w.cycles[1].front()) {
        return std::string("bases must open their cycles");
    }
    if (w.bases[0] == w.bases[1]) return std::string("bases must be distinct");
    return join_error(g, m, w.path, w.cycles[0], w.cycles[1]);
}

}  // namespace

std::optional<std::string> alternating_path_error(const Graph& g, const Matching& m,
                                                  const AlternatingPath& p) {
    check_owner(g, m, "matching");
    if (p.vertices.empty()) return std::string("path must contain at least one vertex");
    if (auto err = simple_path_error(g, p.vertices, "path")) return err;
    if (!path_alternates(m, p.vertices, p.starts_heavy)) {
        return std::string("path edges must alternate with the matching");
    }
    return std::nullopt;
}

std::optional<std::string> witness_error(const Graph& g, const Matching& m,
                                         const StructureWitness& w) {
    check_owner(g, m, "matching");
    switch (w.kind) {
        case WitnessKind::blossom:
            if (w.cycles.size() != 1) return std::string("blossom needs exactly one cycle");
            if (w.bases.size() != 1) return std::string("blossom needs exactly one base");
            if (!w.path.empty()) return std::string("blossom carries no path");
            if (auto err = cycle_error(g, m, w.cycles[0])) return err;
            if (w.bases[0] != w.cycles[0].front()) return std::string("base must open the cycle");
            return std::nullopt;
        case WitnessKind::flower:
            return flower_shape_error(g, m, w);
        case WitnessKind::posy:
            return posy_shape_error(g, m, w);
        case WitnessKind::forbidden_config:
            switch (w.config) {
                case 1: {
                    if (auto err = flower_shape_error(g, m, w)) return err;
                    if (w.path.size() != 1) return std::string("config 1 needs an empty stem");
                    return std::nullopt;
                }
                case 2: {
                    if (auto err = flower_shape_error(g, m, w)) return err;
                    if (w.path.size() < 3) return std::string("config 2 needs a non-empty stem");
                    return std::nullopt;
                }
                case 3: {
                    if (auto err = posy_shape_error(g, m, w)) return err;
                    if (cycles_overlap(w.cycles[0], w.cycles[1])) {
                        return std::string("config 3 needs vertex-disjoint cycles");
                    }
                    return std::nullopt;
                }
                case 4: {
                    if (auto err = posy_shape_error(g, m, w)) return err;
                    if (!cycles_overlap(w.cycles[0], w.cycles[1])) {
                        return std::string("config 4 needs overlapping cycles");
                    }
                    return std::nullopt;
                }
                default:
                    return std::string("config must be 1..4");
            }
    }
    return std::string("unknown witness kind");
}

bool validate_witness(const Graph& g, const Matching& m, const StructureWitness& w) {
    return !witness_error(g, m, w).has_value();
}

namespace {

[[noreturn]] void internal_witness_bug(const std::string& msg) {
    throw std::logic_error("internal error: constructed witness is invalid: " + msg);
}

void check_built(const Graph& g, const Matching& m, const StructureWitness& w) {
    if (auto err = witness_error(g, m, w)) internal_witness_bug(*err);
}

std::vector<int> chain_to_root(const std::vector<int>& parent, int v) {
    std::vector<int> out{v};
    while (parent[out.back()] != -1) out.push_back(parent[out.back()]);
    return out;
}

// Splices the two tree chains of an even-even closing edge (u, w) into the
// odd cycle [meet, ..., u, w, ..., just-before-meet] plus the residual chain
// [meet, ..., root].
struct SplicedBlossom {
    std::vector<int> cycle;
    std::vector<int> to_root;
};

SplicedBlossom splice(const std::vector<int>& parent, int u, int w) {
    std::vector<int> cu = chain_to_root(parent, u);
    std::vector<int> cw = chain_to_root(parent, w);
    std::vector<char> on_cu;
    int max_v = 0;
    for (int v : cu) max_v = std::max(max_v, v);
    for (int v : cw) max_v = std::max(max_v, v);
    on_cu.assign(max_v + 1, 0);
    for (int v : cu) on_cu[v] = 1;
    size_t iw = 0;
    while (!on_cu[cw[iw]]) ++iw;
    int meet = cw[iw];
    size_t iu = 0;
    while (cu[iu] != meet) ++iu;

    SplicedBlossom out;
    out.cycle.assign(cu.begin(), cu.begin() + iu + 1);   // u ... meet
    std::reverse(out.cycle.begin(), out.cycle.end());    // meet ... u
    out.cycle.insert(out.cycle.end(), cw.begin(), cw.begin() + iw);  // + w ... pre-meet
    out.to_root.assign(cu.begin() + iu, cu.end());       // meet ... root
    return out;
}

struct AlternatingTree {
    std::vector<int> parity;  // -1 unseen, 0 even, 1 odd
    std::vector<int> parent;
    std::vector<int> root_of;
    std::vector<std::pair<int, int>> closing;  // same-tree even-even light edges
};

// Alternating BFS forest from the given roots (treated as exposed even
// vertices). Light edges leave even vertices, each odd vertex extends through
// its matching partner. Records every same-tree even-even light edge; a
// cross-tree one means an augmenting path, which callers rule out up front.
AlternatingTree grow_forest(const Graph& g, const Matching& m, const std::vector<int>& roots,
                            size_t closing_cap) {
    const int n = g.vertex_count();
    AlternatingTree t;
    t.parity.assign(n, -1);
    t.parent.assign(n, -1);
    t.root_of.assign(n, -1);
    std::vector<int> queue;
    for (int r : roots) {
        t.parity[r] = 0;
        t.root_of[r] = r;
        queue.push_back(r);
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u)) {
            if (w == m.mate(u)) continue;
            if (t.parity[w] == -1) {
                int z = m.mate(w);
                if (z == -1 || t.parity[z] == 0) {
                    // w is matched to a root we pretend is exposed (or w is a
                    // stray exposed vertex when growing a partial forest):
                    // leave it as an odd dead end.
                    t.parity[w] = 1;
                    t.parent[w] = u;
                    t.root_of[w] = t.root_of[u];
                    continue;
                }
                t.parity[w] = 1;
                t.parent[w] = u;
                t.root_of[w] = t.root_of[u];
                t.parity[z] = 0;
                t.parent[z] = w;
                t.root_of[z] = t.root_of[u];
                queue.push_back(z);
            } else if (t.parity[w] == 0) {
                if (t.root_of[w] != t.root_of[u]) {
                    throw std::invalid_argument("matching is not maximum");
                }
                if (t.closing.size() < closing_cap) t.closing.emplace_back(u, w);
            }
        }
    }
    return t;
}

void require_maximum(const Graph& g, const Matching& m) {
    if (has_augmenting_path(g, m)) {
        throw std::invalid_argument("matching is not maximum");
    }
}

// ---- exhaustive alternating searches (shared by the independent detector
// ---- and the posy fallback) ----

struct BruteBlossom {
    std::vector<int> cycle;  // starts at the base
};

void blossom_dfs(const Graph& g, const Matching& m, const Budget& budget, std::uint64_t& used,
                 std::vector<int>& path, std::vector<char>& on_path, int parity,
                 std::vector<BruteBlossom>& out) {
    if (!budget.consume(used)) throw BudgetExceededError("blossom search budget exhausted");
    int v = path.back();
    if (parity == 1) {
        int z = m.mate(v);
        if (z == -1 || on_path[z]) return;
        path.push_back(z);
        on_path[z] = 1;
        blossom_dfs(g, m, budget, used, path, on_path, 0, out);
        on_path[z] = 0;
        path.pop_back();
        return;
    }
    int base = path.front();
    for (int w : g.neighbors(v)) {
        if (w == m.mate(v)) continue;
        if (w == base) {
            if (path.size() >= 3 && path[1] < path.back()) out.push_back({path});
            continue;
        }
        if (on_path[w]) continue;
        path.push_back(w);
        on_path[w] = 1;
        blossom_dfs(g, m, budget, used, path, on_path, 1, out);
        on_path[w] = 0;
        path.pop_back();
    }
}

std::vector<BruteBlossom> enumerate_blossoms(const Graph& g, const Matching& m,
                                             const Budget& budget, std::uint64_t& used) {
    std::vector<BruteBlossom> out;
    std::vector<char> on_path(g.vertex_count(), 0);
    for (int base = 0; base < g.vertex_count(); ++base) {
        std::vector<int> path{base};
        on_path[base] = 1;
        blossom_dfs(g, m, budget, used, path, on_path, 0, out);
        on_path[base] = 0;
    }
    return out;
}

// Even alternating stem from the base of `cyc` to an exposed vertex, interior
// off the cycle. First edge heavy, so the continuation from the base is forced.
std::optional<std::vector<int>> stem_dfs(const Graph& g, const Matching& m,
                                         const std::vector<int>& cyc, const Budget& budget,
                                         std::uint64_t& used) {
    std::vector<char> blocked(g.vertex_count(), 0);
    for (int v : cyc) blocked[v] = 1;
    std::vector<int> path{cyc.front()};
    std::optional<std::vector<int>> found;

    // State: 0 = the last edge taken was a matching edge (next step is a free
    // choice of light edges), 1 = the last edge was light (the stem may end
    // here if the vertex is exposed, else the matching edge continues it).
    auto step = [&](auto&& self, int state) -> bool {
        if (!budget.consume(used)) throw BudgetExceededError("stem search budget exhausted");
        int v = path.back();
        if (state == 1) {
            if (!m.saturates(v)) {
                found = path;
                return true;
            }
            int z = m.mate(v);
            if (blocked[z]) return false;
            path.push_back(z);
            blocked[z] = 1;
            bool ok = self(self, 0);
            if (!ok) {
                blocked[z] = 0;
                path.pop_back();
            }
            return ok;
        }
        for (int w : g.neighbors(v)) {
            if (w == m.mate(v) || blocked[w]) continue;
            path.push_back(w);
            blocked[w] = 1;
            bool ok = self(self, 1);
            if (ok) return true;
            blocked[w] = 0;
            path.pop_back();
        }
        return false;
    };

    // From the base the first (heavy) step is forced; an exposed base is the
    // empty stem and is handled by the caller.
    int z = m.mate(cyc.front());
    if (z == -1 || blocked[z]) return std::nullopt;
    path.push_back(z);
    blocked[z] = 1;
    if (step(step, 0)) return found;
    return std::nullopt;
}

// Odd alternating join from the base of cyc1 to the base of cyc2, first and
// last edges heavy, interior off both cycles.
std::optional<std::vector<int>> join_dfs(const Graph& g, const Matching& m,
                                         const std::vector<int>& cyc1,
                                         const std::vector<int>& cyc2, const Budget& budget,
                                         std::uint64_t& used) {
    int b1 = cyc1.front(), b2 = cyc2.front();
    std::vector<char> blocked(g.vertex_count(), 0);
    for (int v : cyc1) blocked[v] = 1;
    for (int v : cyc2) blocked[v] = 1;
    std::vector<int> path{b1};
    std::optional<std::vector<int>> found;

    // Entered v through a matching edge (odd edge count so far).
    auto arrive = [&](auto&& self, int v) -> bool {
        if (!budget.consume(used)) throw BudgetExceededError("join search budget exhausted");
        path.push_back(v);
        if (v == b2) {
            found = path;
            return true;
        }
        if (blocked[v]) {
            path.pop_back();
            return false;
        }
        blocked[v] = 1;
        for (int w : g.neighbors(v)) {
            if (w == m.mate(v) || blocked[w]) continue;
            int z = m.mate(w);
            if (z == -1 || z == v) continue;
            if (z != b2 && blocked[z]) continue;
            path.push_back(w);
            blocked[w] = 1;
            if (self(self, z)) return true;
            blocked[w] = 0;
            path.pop_back();
        }
        blocked[v] = 0;
        path.pop_back();
        return false;
    };

    int z = m.mate(b1);
    if (z == -1) return std::nullopt;
    if (z != b2 && blocked[z]) return std::nullopt;
    if (arrive(arrive, z)) return found;
    return std::nullopt;
}

std::optional<StructureWitness> brute_posy(const Graph& g, const Matching& m,
                                           const Budget& budget, std::uint64_t& used) {
    auto blossoms = enumerate_blossoms(g, m, budget, used);
    for (size_t i = 0; i < blossoms.size(); ++i) {
        if (m.mate(blossoms[i].cycle.front()) == -1) continue;
        for (size_t j = i + 1; j < blossoms.size(); ++j) {
            if (m.mate(blossoms[j].cycle.front()) == -1) continue;
            if (blossoms[i].cycle.front() == blossoms[j].cycle.front()) continue;
            auto join = join_dfs(g, m, blossoms[i].cycle, blossoms[j].cycle, budget, used);
            if (!join) continue;
            StructureWitness w;
            w.kind = WitnessKind::posy;
            w.cycles = {blossoms[i].cycle, blossoms[j].cycle};
            w.path = *join;
            w.bases = {blossoms[i].cycle.front(), blossoms[j].cycle.front()};
            check_built(g, m, w);
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<StructureWitness> find_flower(const Graph& g, const Matching& m) {
    check_owner(g, m, "matching");
    require_maximum(g, m);
    std::vector<int> roots;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (m.mate(v) == -1) roots.push_back(v);
    }
    AlternatingTree t = grow_forest(g, m, roots, 1);
    if (t.closing.empty()) return std::nullopt;
    auto [u, w] = t.closing.front();
    SplicedBlossom sb = splice(t.parent, u, w);
    StructureWitness out;
    out.kind = WitnessKind::flower;
    out.cycles = {sb.cycle};
    out.path = sb.to_root;
    out.bases = {sb.cycle.front()};
    check_built(g, m, out);
    return out;
}

std::optional<StructureWitness> find_posy(const Graph& g, const Matching& m,
                                          const Budget& budget) {
    check_owner(g, m, "matching");
    require_maximum(g, m);

    // Primary search: pick a matching edge (a, b) to act as the join's pivot,
    // pretend its endpoints are exposed, and grow one alternating tree from
    // each. A blossom on each side plus the tree chains to a and b assembles
    // into a candidate posy; invalid overlaps just move on to the next pair.
    constexpr size_t kClosingCap = 64;
    for (const auto& [a, b] : m.edges()) {
        AlternatingTree ta = grow_forest(g, m, {a}, kClosingCap);
        AlternatingTree tb = grow_forest(g, m, {b}, kClosingCap);
        if (ta.closing.empty() || tb.closing.empty()) continue;
        std::vector<SplicedBlossom> sa, sb;
        for (auto [u, w] : ta.closing) sa.push_back(splice(ta.parent, u, w));
        for (auto [u, w] : tb.closing) sb.push_back(splice(tb.parent, u, w));
        for (const auto& ba : sa) {
            for (const auto& bb : sb) {
                StructureWitness cand;
                cand.kind = WitnessKind::posy;
                cand.cycles = {ba.cycle, bb.cycle};
                cand.bases = {ba.cycle.front(), bb.cycle.front()};
                cand.path = ba.to_root;  // base_a .. a
                cand.path.insert(cand.path.end(), bb.to_root.rbegin(), bb.to_root.rend());
                // now base_a .. a, b .. base_b with the pivot edge in between
                if (!witness_error(g, m, cand)) return cand;
            }
        }
    }

    if (is_bipartite(g)) return std::nullopt;  // no odd cycle, no posy
    std::uint64_t used = 0;
    return brute_posy(g, m, budget, used);
}

std::optional<StructureWitness> find_forbidden_configuration(const Graph& g, const Matching& m,
                                                             const Budget& budget) {
    check_owner(g, m, "matching");
    require_maximum(g, m);
    if (is_bipartite(g)) return std::nullopt;

    std::uint64_t used = 0;
    auto blossoms = enumerate_blossoms(g, m, budget, used);

    for (const auto& b : blossoms) {
        if (m.mate(b.cycle.front()) != -1) continue;
        StructureWitness w;
        w.kind = WitnessKind::forbidden_config;
        w.config = 1;
        w.cycles = {b.cycle};
        w.path = {b.cycle.front()};
        w.bases = {b.cycle.front()};
        check_built(g, m, w);
        return w;
    }
    for (const auto& b : blossoms) {
        if (m.mate(b.cycle.front()) == -1) continue;
        auto stem = stem_dfs(g, m, b.cycle, budget, used);
        if (!stem) continue;
        StructureWitness w;
        w.kind = WitnessKind::forbidden_config;
        w.config = 2;
        w.cycles = {b.cycle};
        w.path = *stem;
        w.bases = {b.cycle.front()};
        check_built(g, m, w);
        return w;
    }
    for (size_t i = 0; i < blossoms.size(); ++i) {
        if (m.mate(blossoms[i].cycle.front()) == -1) continue;
        for (size_t j = i + 1; j < blossoms.size(); ++j) {
            if (m.mate(blossoms[j].cycle.front()) == -1) continue;
            if (blossoms[i].cycle.front() == blossoms[j].cycle.front()) continue;
            auto join = join_dfs(g, m, blossoms[i].cycle, blossoms[j].cycle, budget, used);
            if (!join) continue;
            StructureWitness w;
            w.kind = WitnessKind::forbidden_config;
            w.config = cycles_overlap(blossoms[i].cycle, blossoms[j].cycle) ? 4 : 3;
            w.cycles = {blossoms[i].cycle, blossoms[j].cycle};
            w.path = *join;
            w.bases = {blossoms[i].cycle.front(), blossoms[j].cycle.front()};
            check_built(g, m, w);
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace kegraph
