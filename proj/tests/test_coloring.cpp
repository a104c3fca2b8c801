#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "lhc/coloring.hpp"
#include "lhc/generators.hpp"
#include "oracles.hpp"

using namespace lhc;

namespace {

Hypergraph triangle() { return Hypergraph(3, {{0, 1}, {0, 2}, {1, 2}}); }

ListAssignment uniform_lists(int m, std::vector<int> palette) {
    ListAssignment lists;
    lists.lists.assign(m, std::move(palette));
    return lists;
}

}  // namespace

TEST_CASE("is_proper") {
    const Hypergraph h = triangle();
    CHECK(is_proper(h, {{1, 2, 3}}));
    CHECK_FALSE(is_proper(h, {{1, 1, 2}}));  // edges 0 and 1 share vertex 0
    CHECK(is_proper(Hypergraph(2, {}), {{}}));
    CHECK_THROWS_AS(is_proper(h, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(is_proper(h, {{1, 2, -1}}), std::invalid_argument);
}

TEST_CASE("greedy_list_color") {
    SUBCASE("hand-simulated smallest-available trace on the triangle") {
        const auto result =
            greedy_list_color(triangle(), uniform_lists(3, {1, 2, 3}), {0, 1, 2});
        REQUIRE(result.success);
        CHECK(result.coloring.colors == std::vector<int>{1, 2, 3});
    }
    SUBCASE("succeeds whenever lists exceed the clique rank") {
        const Hypergraph fano = projective_plane(2);
        for (const auto& order :
             {input_order(7), decreasing_clique_rank_order(fano), shuffled_order(7, 3)}) {
            const auto result = greedy_list_color(fano, uniform_lists(7, {1, 2, 3, 4, 5, 6, 7}),
                                                  order);
            CHECK(result.success);
            CHECK(is_proper(fano, result.coloring));
        }
    }
    SUBCASE("failure reports the stuck edge and its exhausted list") {
        const auto result = greedy_list_color(triangle(), uniform_lists(3, {1, 2}), {0, 1, 2});
        REQUIRE_FALSE(result.success);
        CHECK(result.stuck_edge == 2);
        CHECK(result.stuck_list == std::vector<int>{1, 2});
        CHECK(result.coloring.colors[0] == 1);
        CHECK(result.coloring.colors[1] == 2);
        CHECK(result.coloring.colors[2] == -1);
    }
    SUBCASE("an unsorted list still yields the smallest admissible color") {
        ListAssignment lists;
        lists.lists.assign(3, {3, 1, 2});
        const auto result = greedy_list_color(triangle(), lists, {0, 1, 2});
        REQUIRE(result.success);
        CHECK(result.coloring.colors == std::vector<int>{1, 2, 3});
    }
    SUBCASE("per-edge lists sized by the back-degree of the order suffice") {
        // Refinement of the guarantee: an edge only competes with the
        // already-colored edges it meets.
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const Hypergraph h = random_linear(9, 10, 2, 4, seed).hypergraph;
            const auto order = shuffled_order(h.edge_count(), seed);
            std::vector<int> position(h.edge_count());
            for (int i = 0; i < h.edge_count(); ++i) position[order[i]] = i;
            ListAssignment lists;
            lists.lists.resize(h.edge_count());
            for (int e = 0; e < h.edge_count(); ++e) {
                int back_degree = 0;
                for (int f = 0; f < h.edge_count(); ++f) {
                    if (position[f] < position[e] &&
                        edges_intersect(h.edges()[e], h.edges()[f])) {
                        ++back_degree;
                    }
                }
                for (int c = 1; c <= back_degree + 1; ++c) lists.lists[e].push_back(c);
            }
            const auto result = greedy_list_color(h, lists, order);
            CHECK(result.success);
        }
    }
    SUBCASE("rejects malformed orders and list maps") {
        CHECK_THROWS_AS(greedy_list_color(triangle(), uniform_lists(2, {1}), {0, 1, 2}),
                        std::invalid_argument);
        CHECK_THROWS_AS(greedy_list_color(triangle(), uniform_lists(3, {1}), {0, 0, 2}),
                        std::invalid_argument);
        CHECK_THROWS_AS(greedy_list_color(triangle(), uniform_lists(3, {1}), {0, 1}),
                        std::invalid_argument);
    }
}

TEST_CASE("greedy_color") {
    SUBCASE("a palette of maxR + 1 never fails, in any order") {
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            const Hypergraph h = random_linear(9, 10, 2, 4, seed).hypergraph;
            const int k = max_clique_rank(h) + 1;
            for (const auto& order : {input_order(h.edge_count()),
                                      decreasing_clique_rank_order(h),
                                      shuffled_order(h.edge_count(), seed * 7 + 1)}) {
                const auto result = greedy_color(h, k, order);
                CHECK(result.success);
                CHECK(is_proper(h, result.coloring));
            }
        }
    }
    SUBCASE("the guarantee covers non-linear hypergraphs too") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 4 + static_cast<int>(rng() % 5);
            std::map<Edge, bool> seen;
            std::vector<Edge> edges;
            for (int i = 0; i < 8; ++i) {
                Edge e;
                const int rank = 2 + static_cast<int>(rng() % 3);
                for (int j = 0; j < rank; ++j) e.push_back(static_cast<int>(rng() % n));
                std::sort(e.begin(), e.end());
                e.erase(std::unique(e.begin(), e.end()), e.end());
                if (e.size() >= 2 && !seen[e]) {
                    seen[e] = true;
                    edges.push_back(e);
                }
            }
            const Hypergraph h(n, edges);
            const auto result =
                greedy_color(h, max_clique_rank(h) + 1, shuffled_order(h.edge_count(), rng()));
            CHECK(result.success);
            CHECK(is_proper(h, result.coloring));
        }
    }
    SUBCASE("a frozen order three-colors the complete graph on four vertices") {
        // K4 edges in canonical order: {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}
        const Hypergraph k4 = complete_graph_hypergraph(4);
        const auto result = greedy_color(k4, 3, {0, 5, 1, 4, 2, 3});
        REQUIRE(result.success);
        CHECK(is_proper(k4, result.coloring));
        CHECK(*std::max_element(result.coloring.colors.begin(),
                                result.coloring.colors.end()) == 3);
        CHECK(greedy_color(k4, max_clique_rank(k4) + 1, input_order(6)).success);
    }
    SUBCASE("single edge with one color") {
        const auto result = greedy_color(Hypergraph(2, {{0, 1}}), 1, {0});
        REQUIRE(result.success);
        CHECK(result.coloring.colors == std::vector<int>{1});
    }
    CHECK_THROWS_AS(greedy_color(triangle(), 0, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("chromatic_index_exact") {
    SUBCASE("projective planes need as many colors as vertices") {
        const auto fano = chromatic_index_exact(projective_plane(2));
        REQUIRE(fano.exact);
        CHECK(fano.upper == 7);
        CHECK(fano.clique.size() == 7);  // the line graph is complete

        const auto pg3 = chromatic_index_exact(projective_plane(3));
        REQUIRE(pg3.exact);
        CHECK(pg3.upper == 13);
    }
    SUBCASE("near-pencils") {
        for (int n = 4; n <= 7; ++n) {
            const auto result = chromatic_index_exact(near_pencil(n));
            REQUIRE(result.exact);
            CHECK(result.upper == n);
        }
    }
    SUBCASE("complete graphs re-derive the classical values") {
        for (const auto& [n, expected] :
             std::vector<std::pair<int, int>>{{3, 3}, {4, 3}, {5, 5}, {6, 5}, {7, 7}}) {
            const auto result = chromatic_index_exact(complete_graph_hypergraph(n));
            REQUIRE(result.exact);
            CHECK(result.upper == expected);
            CHECK(is_proper(complete_graph_hypergraph(n), result.coloring));
        }
    }
    SUBCASE("agrees with a plain decision oracle on random instances") {
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            const Hypergraph h = random_linear(8, 8, 2, 4, seed).hypergraph;
            const auto result = chromatic_index_exact(h);
            REQUIRE(result.exact);
            CHECK(result.upper == oracle::chromatic_index(h));
            if (h.edge_count() > 0) CHECK(is_proper(h, result.coloring));
        }
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const Hypergraph h = random_linear(10, 13, 2, 3, seed).hypergraph;
            CHECK(chromatic_index_exact(h).upper == oracle::chromatic_index(h));
        }
    }
    SUBCASE("agrees with the matching-partition route on Steiner systems") {
        const Hypergraph sts9 = steiner_triple(9);
        const auto r9 = chromatic_index_exact(sts9);
        REQUIRE(r9.exact);
        CHECK(r9.upper == 4);
        CHECK(oracle::chromatic_index_by_partition(sts9) == 4);

        const Hypergraph sts15 = steiner_triple(15);
        const auto r15 = chromatic_index_exact(sts15);
        REQUIRE(r15.exact);
        CHECK(r15.upper == 9);
        CHECK(oracle::chromatic_index_by_partition(sts15) == 9);
    }
    SUBCASE("edge cases") {
        const auto none = chromatic_index_exact(Hypergraph(3, {}));
        CHECK(none.exact);
        CHECK(none.upper == 0);
        const auto one = chromatic_index_exact(Hypergraph(3, {{0, 1, 2}}));
        CHECK(one.upper == 1);
    }
    SUBCASE("node budget yields bounds instead of an answer") {
        SearchBudget tight;
        tight.max_nodes = 1;
        const auto result = chromatic_index_exact(complete_graph_hypergraph(7), tight);
        CHECK_FALSE(result.exact);
        CHECK(result.lower >= 6);
        CHECK(result.lower <= 7);
        CHECK(result.upper >= 7);
        CHECK(is_proper(complete_graph_hypergraph(7), result.coloring));
    }
    SUBCASE("the edge-count cap is enforced") {
        SearchBudget budget;
        budget.max_edges_exact = 5;
        CHECK_THROWS_AS(chromatic_index_exact(complete_graph_hypergraph(4), budget),
                        std::invalid_argument);
    }
}

TEST_CASE("extend_coloring") {
    SUBCASE("hub of rank-2 edges around one triple") {
        const Hypergraph h(7, {{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 4}});
        const RankSplit split = split_by_rank(h);
        REQUIRE(split.h2.edge_count() == 4);
        ListAssignment lists;
        lists.lists.assign(4, {1, 2, 3, 4, 5, 6, 7});
        const auto result = extend_coloring(h, {{1}}, lists, 7);
        REQUIRE(result.success);
        CHECK(result.hypothesis_holds);
        CHECK(result.counts_within_bound);
        CHECK(result.min_available >= 5);  // n - 2*Delta(h3) = 7 - 2
        CHECK(is_proper(h, result.coloring));
        CHECK(result.coloring.colors[0] == 1);  // the triple keeps its color
    }
    SUBCASE("empty rank-2 part returns the input coloring") {
        const Hypergraph fano = projective_plane(2);
        EdgeColoring on_h3;
        on_h3.colors = {1, 2, 3, 4, 5, 6, 7};
        const auto result = extend_coloring(fano, on_h3, {{}}, 7);
        REQUIRE(result.success);
        CHECK(result.coloring.colors == on_h3.colors);
    }
    SUBCASE("an impossible extension reports the stuck configuration") {
        const auto result = extend_coloring(triangle(), {{}}, uniform_lists(3, {1, 2}), 2);
        REQUIRE_FALSE(result.success);
        CHECK(result.note.find("no extension exists") != std::string::npos);
    }
    SUBCASE("hypothesis violation warns but still tries") {
        // near-pencil(5): margin is 2 but the apex has degree 4
        const Hypergraph pencil = near_pencil(5);
        ListAssignment lists;
        lists.lists.assign(4, {1, 2, 3, 4, 5});
        const auto result = extend_coloring(pencil, {{1}}, lists, 5);
        CHECK_FALSE(result.hypothesis_holds);
        CHECK(result.note.find("hypothesis violated") != std::string::npos);
        CHECK(result.success);  // five colors still suffice here
        CHECK(is_proper(pencil, result.coloring));
    }
    SUBCASE("precondition violations throw") {
        const Hypergraph h(7, {{0, 1, 2}, {0, 3}});
        CHECK_THROWS_AS(extend_coloring(h, {{1, 2}}, uniform_lists(1, {1, 2}), 2),
                        std::invalid_argument);
        CHECK_THROWS_AS(extend_coloring(h, {{1}}, uniform_lists(1, {1}), 2),
                        std::invalid_argument);
        const Hypergraph shared(5, {{0, 1, 2}, {0, 1, 3}, {0, 4}});
        CHECK_THROWS_AS(extend_coloring(shared, {{1, 1}}, uniform_lists(1, {1, 2, 3, 4, 5}), 5),
                        std::invalid_argument);
    }
}

TEST_CASE("deficit_excess") {
    SUBCASE("one rank-5 edge against Delta = 2") {
        const auto table = deficit_excess(Hypergraph(5, {{0, 1, 2, 3, 4}}), 2);
        CHECK(table[0].deficit == 1);
        CHECK(table[0].excess == 2);
    }
    SUBCASE("regular rank-3 instances have neither deficit nor excess") {
        const Hypergraph sts = steiner_triple(9);
        for (const auto& entry : deficit_excess(sts, 4)) {
            CHECK(entry.deficit == 0);
            CHECK(entry.excess == 0);
        }
    }
    SUBCASE("two rank-4 edges at a vertex, Delta = 2") {
        const auto table = deficit_excess(Hypergraph(7, {{0, 1, 2, 3}, {0, 4, 5, 6}}), 2);
        CHECK(table[0].deficit == 0);
        CHECK(table[0].excess == 2);
    }
    CHECK_THROWS_AS(deficit_excess(Hypergraph(3, {{0, 1}, {0, 2}}), 1), std::invalid_argument);
}
