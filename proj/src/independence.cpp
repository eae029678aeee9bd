#include "kegraph/independence.hpp"

#include <algorithm>
#include <bit>

namespace kegraph {

namespace {

using Blocks = std::vector<std::uint64_t>;

// Adjacency as bit rows plus the scratch logic shared by the searches below.
struct BitGraph {
    int n = 0;
    int nb = 0;           // 64-bit blocks per row
    Blocks rows;          // rows[v*nb .. v*nb+nb)

    explicit BitGraph(const Graph& g) : n(g.vertex_count()), nb((g.vertex_count() + 63) / 64) {
        if (nb == 0) nb = 1;
        rows.assign(static_cast<size_t>(n) * nb, 0);
        for (const auto& [u, v] : g.edges()) {
            row(u)[static_cast<size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
            row(v)[static_cast<size_t>(u) / 64] |= std::uint64_t{1} << (u % 64);
        }
    }

    std::uint64_t* row(int v) { return rows.data() + static_cast<size_t>(v) * nb; }
    const std::uint64_t* row(int v) const { return rows.data() + static_cast<size_t>(v) * nb; }

    Blocks full() const {
        Blocks out(nb, 0);
        for (int v = 0; v < n; ++v) out[v / 64] |= std::uint64_t{1} << (v % 64);
        return out;
    }

    static bool any(const Blocks& b) {
        for (auto w : b) {
            if (w) return true;
        }
        return false;
    }

    static int count(const Blocks& b) {
        int c = 0;
        for (auto w : b) c += std::popcount(w);
        return c;
    }

    static int lowest(const Blocks& b) {
        for (size_t i = 0; i < b.size(); ++i) {
            if (b[i]) return static_cast<int>(i * 64 + std::countr_zero(b[i]));
        }
        return -1;
    }

    static bool test(const Blocks& b, int v) {
        return (b[static_cast<size_t>(v) / 64] >> (v % 64)) & 1;
    }

    static void clear(Blocks& b, int v) {
        b[static_cast<size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
    }

    int degree_in(int v, const Blocks& b) const {
        const std::uint64_t* r = row(v);
        int c = 0;
        for (int i = 0; i < nb; ++i) c += std::popcount(r[i] & b[i]);
        return c;
    }

    Blocks minus_closed(const Blocks& b, int v) const {
        Blocks out = b;
        const std::uint64_t* r = row(v);
        for (int i = 0; i < nb; ++i) out[i] &= ~r[i];
        clear(out, v);
        return out;
    }

    // Greedy clique cover of the candidate set: an upper bound on the size of
    // any independent subset.
    int cover_bound(const Blocks& cand) const {
        Blocks q = cand;
        int cliques = 0;
        while (any(q)) {
            int v = lowest(q);
            clear(q, v);
            Blocks grow(nb);
            const std::uint64_t* rv = row(v);
            for (int i = 0; i < nb; ++i) grow[i] = q[i] & rv[i];
            while (any(grow)) {
                int u = lowest(grow);
                clear(q, u);
                const std::uint64_t* ru = row(u);
                for (int i = 0; i < nb; ++i) grow[i] &= ru[i];
                clear(grow, u);
            }
            ++cliques;
        }
        return cliques;
    }
};

struct MisSolver {
    const BitGraph& bg;
    std::vector<int> cur, best;
    int best_size = -1;

    explicit MisSolver(const BitGraph& bg) : bg(bg) {}

    void expand(const Blocks& cand) {
        if (!BitGraph::any(cand)) {
            if (static_cast<int>(cur.size()) > best_size) {
                best_size = static_cast<int>(cur.size());
                best = cur;
            }
            return;
        }
        if (static_cast<int>(cur.size()) + bg.cover_bound(cand) <= best_size) return;
        int pick = -1, pick_deg = -1;
        for (int v = 0; v < bg.n; ++v) {
            if (!BitGraph::test(cand, v)) continue;
            int d = bg.degree_in(v, cand);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        cur.push_back(pick);
        expand(bg.minus_closed(cand, pick));
        cur.pop_back();
        Blocks rest = cand;
        BitGraph::clear(rest, pick);
        expand(rest);
    }
};

int alpha_of(const BitGraph& bg) {
    MisSolver solver(bg);
    solver.expand(bg.full());
    return solver.best_size;
}

struct OmegaScan {
    const Graph& g;
    const BitGraph& bg;
    int alpha;
    const std::function<bool(const VertexSet&)>& visit;
    const Budget& budget;
    std::uint64_t used = 0;
    EnumStatus status = EnumStatus::complete;
    std::vector<int> cur{};

    void rec(const Blocks& cand) {
        if (status != EnumStatus::complete) return;
        if (static_cast<int>(cur.size()) == alpha) {
            if (!budget.consume(used)) {
                status = EnumStatus::budget_exceeded;
                return;
            }
            if (!visit(VertexSet(g, cur))) status = EnumStatus::stopped;
            return;
        }
        if (budget.expired(used)) {
            status = EnumStatus::budget_exceeded;
            return;
        }
        if (!BitGraph::any(cand)) return;
        if (static_cast<int>(cur.size()) + bg.cover_bound(cand) < alpha) return;
        int v = BitGraph::lowest(cand);
        cur.push_back(v);
        rec(bg.minus_closed(cand, v));
        cur.pop_back();
        if (status != EnumStatus::complete) return;
        Blocks rest = cand;
        BitGraph::clear(rest, v);
        rec(rest);
    }
};

}  // namespace

int independence_number(const Graph& g) {
    BitGraph bg(g);
    return alpha_of(bg);
}

EnumStatus enumerate_maximum_independent_sets(const Graph& g,
                                              const std::function<bool(const VertexSet&)>& visit,
                                              const Budget& budget) {
    BitGraph bg(g);
    OmegaScan scan{g, bg, alpha_of(bg), visit, budget};
    scan.rec(bg.full());
    return scan.status;
}

VertexSet maximum_independent_set(const Graph& g) {
    std::optional<VertexSet> first;
    enumerate_maximum_independent_sets(
        g,
        [&](const VertexSet& s) {
            first = s;
            return false;
        },
        Budget::unlimited());
    return *first;  // every graph has at least one maximum independent set
}

IndependentSetList all_maximum_independent_sets(const Graph& g, const Budget& budget) {
    IndependentSetList out;
    EnumStatus st = enumerate_maximum_independent_sets(
        g,
        [&](const VertexSet& s) {
            out.items.push_back(s);
            return true;
        },
        budget);
    out.complete = (st == EnumStatus::complete);
    return out;
}

VertexSet core_vertices(const Graph& g, const Budget& budget) {
    std::optional<std::vector<int>> inter;
    EnumStatus st = enumerate_maximum_independent_sets(
        g,
        [&](const VertexSet& s) {
            if (!inter) {
                inter = s.members();
            } else {
                std::vector<int> next;
                std::set_intersection(inter->begin(), inter->end(), s.begin(), s.end(),
                                      std::back_inserter(next));
                *inter = std::move(next);
            }
            return !inter->empty();  // an empty intersection is already final
        },
        budget);
    if (st == EnumStatus::budget_exceeded) {
        throw BudgetExceededError("maximum-independent-set scan exhausted its budget");
    }
    return VertexSet(g, std::move(*inter));
}

namespace {

struct CriticalScan {
    const BitGraph& bg;
    const Budget& budget;
    std::uint64_t used = 0;
    int best = 0;  // the empty set scores zero

    // cur_size/nbr describe the current independent set; cand holds the still
    // eligible vertices (all above the last chosen one, none adjacent to cur).
    void rec(int cur_size, const Blocks& nbr, const Blocks& cand) {
        if (!budget.consume(used)) {
            throw BudgetExceededError("critical-difference search exhausted its budget");
        }
        int f_cur = cur_size - BitGraph::count(nbr);
        best = std::max(best, f_cur);
        for (int v = BitGraph::lowest(cand); v != -1;) {
            Blocks child_cand = cand;
            // keep only vertices above v that stay non-adjacent
            for (int i = 0; i <= v / 64; ++i) {
                std::uint64_t mask = (i == v / 64) ? ~((std::uint64_t{2} << (v % 64)) - 1) : 0;
                child_cand[i] &= mask;
            }
            const std::uint64_t* rv = bg.row(v);
            Blocks child_nbr = nbr;
            for (int i = 0; i < bg.nb; ++i) {
                child_cand[i] &= ~rv[i];
                child_nbr[i] |= rv[i];
            }
            int f_child = (cur_size + 1) - BitGraph::count(child_nbr);
            if (f_child + BitGraph::count(child_cand) > best) {
                rec(cur_size + 1, child_nbr, child_cand);
            } else if (f_child > best) {
                best = f_child;
            }
            Blocks next = cand;
            for (int i = 0; i <= v / 64; ++i) {
                std::uint64_t mask = (i == v / 64) ? ~((std::uint64_t{2} << (v % 64)) - 1) : 0;
                next[i] &= mask;
            }
            v = BitGraph::lowest(next);
        }
    }
};

struct MaxCriticalScan {
    const BitGraph& bg;
    const Budget& budget;
    int d;
    std::uint64_t used = 0;
    int best_size = -1;
    std::vector<int> best{};
    std::vector<int> cur{};

    void rec(const Blocks& nbr, const Blocks& cand) {
        if (!budget.consume(used)) {
            throw BudgetExceededError("critical-set search exhausted its budget");
        }
        int f_cur = static_cast<int>(cur.size()) - BitGraph::count(nbr);
        if (f_cur == d && static_cast<int>(cur.size()) > best_size) {
            best_size = static_cast<int>(cur.size());
            best = cur;
        }
        for (int v = BitGraph::lowest(cand); v != -1;) {
            Blocks child_cand = cand;
            for (int i = 0; i <= v / 64; ++i) {
                std::uint64_t mask = (i == v / 64) ? ~((std::uint64_t{2} << (v % 64)) - 1) : 0;
                child_cand[i] &= mask;
            }
            const std::uint64_t* rv = bg.row(v);
            Blocks child_nbr = nbr;
            for (int i = 0; i < bg.nb; ++i) {
                child_cand[i] &= ~rv[i];
                child_nbr[i] |= rv[i];
            }
            int f_child = static_cast<int>(cur.size()) + 1 - BitGraph::count(child_nbr);
            int cc = BitGraph::count(child_cand);
            bool can_reach_d = f_child + cc >= d;
            bool can_grow = static_cast<int>(cur.size()) + 1 + cc > best_size;
            if (can_reach_d && can_grow) {
                cur.push_back(v);
                rec(child_nbr, child_cand);
                cur.pop_back();
            }
            Blocks next = cand;
            for (int i = 0; i <= v / 64; ++i) {
                std::uint64_t mask = (i == v / 64) ? ~((std::uint64_t{2} << (v % 64)) - 1) : 0;
                next[i] &= mask;
            }
            v = BitGraph::lowest(next);
        }
    }
};

}  // namespace

int critical_difference(const Graph& g, const Budget& budget) {
    BitGraph bg(g);
    CriticalScan scan{bg, budget};
    scan.rec(0, Blocks(bg.nb, 0), bg.full());
    return scan.best;
}

bool is_critical_set(const Graph& g, const VertexSet& s, const Budget& budget) {
    check_owner(g, s, "vertex set");
    if (!is_independent_set(g, s)) return false;
    int f = s.size() - neighborhood(g, s).size();
    return f == critical_difference(g, budget);
}

VertexSet max_critical_independent_set(const Graph& g, const Budget& budget) {
    BitGraph bg(g);
    MaxCriticalScan scan{bg, budget, critical_difference(g, budget)};
    scan.rec(Blocks(bg.nb, 0), bg.full());
    return VertexSet(g, scan.best);
}

int critical_independence_number(const Graph& g, const Budget& budget) {
    return max_critical_independent_set(g, budget).size();
}

IndependenceReport independence_report(const Graph& g, const Budget& budget) {
    IndependenceReport r;
    r.alpha = independence_number(g);

    std::optional<std::vector<int>> inter;
    EnumStatus st = enumerate_maximum_independent_sets(
        g,
        [&](const VertexSet& s) {
            ++r.omega_count;
            if (!inter) {
                inter = s.members();
            } else if (!inter->empty()) {
                std::vector<int> next;
                std::set_intersection(inter->begin(), inter->end(), s.begin(), s.end(),
                                      std::back_inserter(next));
                *inter = std::move(next);
            }
            return true;
        },
        budget);
    r.omega_complete = (st == EnumStatus::complete);
    if (!r.omega_complete) r.budget_exceeded = true;
    if (r.omega_complete) {
        r.core = VertexSet(g, std::move(*inter));
    } else if (inter && inter->empty()) {
        r.core = VertexSet::empty(g);  // already final despite the partial scan
    }

    try {
        r.critical_difference = critical_difference(g, budget);
        r.alpha_c = critical_independence_number(g, budget);
    } catch (const BudgetExceededError&) {
        r.budget_exceeded = true;
    }
    return r;
}

}  // namespace kegraph
