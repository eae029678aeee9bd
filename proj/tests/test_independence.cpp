#include <doctest.h>

#include <algorithm>

#include "kegraph/batch.hpp"
#include "kegraph/independence.hpp"
#include "oracles.hpp"

using namespace kegraph;

namespace {

std::vector<std::vector<int>> member_lists(const IndependentSetList& list) {
    std::vector<std::vector<int>> out;
    for (const auto& s : list.items) out.push_back(s.members());
    return out;
}

}  // namespace

TEST_CASE("independence number on standard graphs") {
    CHECK(independence_number(Graph(0)) == 0);
    CHECK(independence_number(Graph(6)) == 6);  // no edges
    CHECK(independence_number(make_path(5)) == 3);
    CHECK(independence_number(make_cycle(5)) == 2);
    CHECK(independence_number(make_cycle(6)) == 3);
    CHECK(independence_number(make_complete(7)) == 1);
    CHECK(independence_number(make_complete_bipartite(3, 4)) == 4);
}

TEST_CASE("independence number equals the brute-force oracle") {
    for (int n = 0; n <= 5; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            CHECK(independence_number(g) == oracle::alpha(g));
            return true;
        });
    }
    const double densities[] = {0.1, 0.3, 0.5, 0.8};
    for (const Graph& g : random_corpus(120, 1, 14, densities, 99)) {
        CHECK(independence_number(g) == oracle::alpha(g));
    }
}

TEST_CASE("branch and bound handles graphs beyond one bitset block") {
    CHECK(independence_number(make_cycle(64)) == 32);
    CHECK(independence_number(make_cycle(65)) == 32);
    CHECK(independence_number(make_path(70)) == 35);
    CHECK(independence_number(make_complete_bipartite(40, 41)) == 41);
}

TEST_CASE("maximum_independent_set returns the lexicographically least optimum") {
    CHECK(maximum_independent_set(make_cycle(5)).members() == std::vector<int>{0, 2});
    CHECK(maximum_independent_set(make_path(5)).members() == std::vector<int>{0, 2, 4});

    const double densities[] = {0.3, 0.6};
    for (const Graph& g : random_corpus(40, 1, 11, densities, 17)) {
        VertexSet s = maximum_independent_set(g);
        CHECK(is_independent_set(g, s));
        CHECK(s.size() == independence_number(g));
        CHECK(s.members() == oracle::omega(g).front());
    }
}

TEST_CASE("maximum independent sets enumerate in lexicographic order") {
    SUBCASE("C5 by hand") {
        auto lists = member_lists(all_maximum_independent_sets(make_cycle(5)));
        CHECK(lists == std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
    }

    SUBCASE("fig1 by hand") {
        Graph g = make_fixture("fig1");  // 0=a 1=u 2=c 3=v 4=y 5=b 6=x
        auto lists = member_lists(all_maximum_independent_sets(g));
        CHECK(lists == std::vector<std::vector<int>>{{0, 2, 4, 5}, {0, 2, 5, 6}});
    }

    SUBCASE("oracle agreement on every small graph") {
        for (int n = 0; n <= 5; ++n) {
            for_each_labeled_graph(n, [&](const Graph& g) {
                IndependentSetList list = all_maximum_independent_sets(g);
                REQUIRE(list.complete);
                CHECK(member_lists(list) == oracle::omega(g));
                return true;
            });
        }
    }
}

TEST_CASE("enumeration respects budgets and early stops") {
    Graph c5 = make_cycle(5);

    IndependentSetList partial = all_maximum_independent_sets(c5, Budget(2));
    CHECK(!partial.complete);
    CHECK(member_lists(partial) == std::vector<std::vector<int>>{{0, 2}, {0, 3}});

    int visits = 0;
    EnumStatus status = enumerate_maximum_independent_sets(
        c5, [&](const VertexSet&) { return ++visits < 2; });
    CHECK(status == EnumStatus::stopped);
    CHECK(visits == 2);

    // A budget of exactly |Omega| emits every set but cannot also finish the
    // proof that none remain; one spare item makes the scan conclusive.
    IndependentSetList exact = all_maximum_independent_sets(c5, Budget(5));
    CHECK(exact.items.size() == 5);
    CHECK(!exact.complete);
    CHECK(all_maximum_independent_sets(c5, Budget(6)).complete);
}

TEST_CASE("core vertices") {
    Graph fig1 = make_fixture("fig1");
    CHECK(core_vertices(fig1).members() ==
          std::vector<int>{0, 2, 5});  // a, c, b

    CHECK(core_vertices(make_cycle(5)).is_empty());
    CHECK(core_vertices(make_complete_bipartite(2, 3)).size() == 3);  // the bigger side
    CHECK(core_vertices(Graph(3)).size() == 3);  // unique maximum independent set

    for (int n = 0; n <= 5; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            CHECK(core_vertices(g).members() == oracle::core(g));
            return true;
        });
    }
}

TEST_CASE("core computation under a budget: empty is final, nonempty is not") {
    Graph c5 = make_cycle(5);
    // After three of the five sets the running intersection is already empty,
    // so the scan may stop early and still answer.
    CHECK(core_vertices(c5, Budget(3)).is_empty());
    // Two sets leave {0} in play; stopping there would be a guess.
    CHECK_THROWS_AS(core_vertices(c5, Budget(2)), BudgetExceededError);
}

TEST_CASE("critical difference and critical sets") {
    CHECK(critical_difference(make_cycle(5)) == 0);
    CHECK(critical_difference(make_complete(5)) == 0);
    CHECK(critical_difference(Graph(4)) == 4);         // no edges: take everything
    CHECK(critical_difference(make_fixture("fig1")) == 1);
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(critical_difference(star) == 2);  // the three leaves against the center

    Graph fig1 = make_fixture("fig1");
    CHECK(is_critical_set(fig1, VertexSet(fig1, {0, 2, 5, 6})));  // {a,c,b,x}
    CHECK(!is_critical_set(fig1, VertexSet::empty(fig1)));        // f = 0 < d
    CHECK(!is_critical_set(fig1, VertexSet(fig1, {0, 1})));       // not independent

    for (int n = 0; n <= 5; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            CHECK(critical_difference(g) == oracle::critical_difference(g));
            CHECK(critical_independence_number(g) == oracle::alpha_c(g));
            return true;
        });
    }
    const double densities[] = {0.2, 0.5};
    for (const Graph& g : random_corpus(60, 1, 12, densities, 55)) {
        CHECK(critical_difference(g) == oracle::critical_difference(g));
        CHECK(critical_independence_number(g) == oracle::alpha_c(g));
    }
}

TEST_CASE("max critical independent set attains both d and alpha_c") {
    const double densities[] = {0.2, 0.5, 0.8};
    for (const Graph& g : random_corpus(60, 1, 12, densities, 23)) {
        VertexSet s = max_critical_independent_set(g);
        CHECK(is_independent_set(g, s));
        CHECK(s.size() - neighborhood(g, s).size() == critical_difference(g));
        CHECK(s.size() == critical_independence_number(g));
    }
}

TEST_CASE("tight budgets make the scans throw rather than guess") {
    Graph g = make_gnp(16, 0.3, 3);
    CHECK_THROWS_AS(critical_difference(g, Budget(2)), BudgetExceededError);
    CHECK_THROWS_AS(critical_independence_number(g, Budget(2)), BudgetExceededError);
    CHECK_THROWS_AS(max_critical_independent_set(g, Budget(2)), BudgetExceededError);
}

TEST_CASE("independence report bundles consistent values") {
    Graph fig1 = make_fixture("fig1");
    IndependenceReport r = independence_report(fig1);
    CHECK(r.alpha == 4);
    CHECK(r.omega_count == 2);
    CHECK(r.omega_complete);
    REQUIRE(r.core.has_value());
    CHECK(r.core->members() == std::vector<int>{0, 2, 5});
    CHECK(r.critical_difference == 1);
    CHECK(r.alpha_c == 4);
    CHECK(!r.budget_exceeded);
}

TEST_CASE("independence report degrades gracefully under budget") {
    Graph g = make_gnp(14, 0.2, 4);  // sparse: plenty of maximum independent sets
    IndependenceReport full = independence_report(g);
    REQUIRE(full.omega_count > 4);

    IndependenceReport r = independence_report(g, Budget(2));
    CHECK(r.alpha == full.alpha);  // alpha itself is not budgeted
    CHECK(r.budget_exceeded);
    CHECK(!r.omega_complete);
    CHECK(r.omega_count <= 2);
    CHECK(!r.critical_difference.has_value());
    CHECK(!r.alpha_c.has_value());
}
