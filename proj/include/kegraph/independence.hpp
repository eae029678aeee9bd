#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "kegraph/budget.hpp"
#include "kegraph/graph.hpp"

namespace kegraph {

// Exact independence number via branch and bound (greedy clique-cover bound,
// highest-degree branching). Deterministic.
int independence_number(const Graph& g);

// Lexicographically least maximum independent set (by sorted member list).
VertexSet maximum_independent_set(const Graph& g);

// Visits every maximum independent set once, in lexicographic order of the
// sorted member lists. The budget caps the number of visited sets and
// supplies the optional deadline. `visit` returns false to stop early.
EnumStatus enumerate_maximum_independent_sets(const Graph& g,
                                              const std::function<bool(const VertexSet&)>& visit,
                                              const Budget& budget = Budget());

struct IndependentSetList {
    std::vector<VertexSet> items;
    bool complete = true;
};
IndependentSetList all_maximum_independent_sets(const Graph& g, const Budget& budget = Budget());

// Intersection of all maximum independent sets. An empty running
// intersection short-circuits (the answer is already final); otherwise an
// exhausted budget throws BudgetExceededError since the value would be a guess.
VertexSet core_vertices(const Graph& g, const Budget& budget = Budget());

// max over independent sets S of |S| - |N(S)|; the empty set puts 0 in play.
// Throws BudgetExceededError when the bounded search cannot finish.
int critical_difference(const Graph& g, const Budget& budget = Budget());

// s is independent and attains the critical difference.
bool is_critical_set(const Graph& g, const VertexSet& s, const Budget& budget = Budget());

// Largest independent set attaining the critical difference (first such in
// the deterministic search order), and its size.
VertexSet max_critical_independent_set(const Graph& g, const Budget& budget = Budget());
int critical_independence_number(const Graph& g, const Budget& budget = Budget());

struct IndependenceReport {
    int alpha = 0;
    std::uint64_t omega_count = 0;  // partial when omega_complete is false
    bool omega_complete = true;
    std::optional<VertexSet> core;  // present unless the budget got in the way
    std::optional<int> critical_difference;
    std::optional<int> alpha_c;
    bool budget_exceeded = false;
};
IndependenceReport independence_report(const Graph& g, const Budget& budget = Budget());

}  // namespace kegraph
