#include <stdexcept>

#include "doctest.h"
#include "lhc/derived.hpp"
#include "lhc/generators.hpp"
#include "lhc/json_io.hpp"
#include "oracles.hpp"

using namespace lhc;

TEST_CASE("projective_plane") {
    SUBCASE("order 2 is the Fano plane") {
        const Hypergraph fano = projective_plane(2);
        CHECK(fano.vertex_count() == 7);
        CHECK(fano.edge_count() == 7);
        for (int e = 0; e < 7; ++e) CHECK(fano.rank(e) == 3);
        for (int x = 0; x < 7; ++x) CHECK(fano.degree(x) == 3);
        const auto coverage = oracle::pair_coverage(fano);
        CHECK(coverage.size() == 21);
        for (const auto& [pair, count] : coverage) {
            (void)pair;
            CHECK(count == 1);
        }
        CHECK(oracle::all_edges_pairwise_meet(fano));
    }
    SUBCASE("order 3") {
        const Hypergraph pg3 = projective_plane(3);
        CHECK(pg3.vertex_count() == 13);
        CHECK(pg3.edge_count() == 13);
        for (int e = 0; e < 13; ++e) CHECK(pg3.rank(e) == 4);
        for (const auto& [pair, count] : oracle::pair_coverage(pg3)) {
            (void)pair;
            CHECK(count == 1);
        }
        CHECK(oracle::all_edges_pairwise_meet(pg3));
        CHECK(validate(pg3).linear);
    }
    SUBCASE("axioms for every supported order") {
        for (int q : {2, 3, 5, 7, 11, 13}) {
            const Hypergraph plane = projective_plane(q);
            CHECK(plane.vertex_count() == q * q + q + 1);
            CHECK(plane.edge_count() == q * q + q + 1);
            const auto sums = handshake(plane);
            CHECK(sums.sum_ranks == static_cast<long long>(q * q + q + 1) * (q + 1));
            CHECK(plane.min_degree() == q + 1);
            CHECK(plane.max_degree() == q + 1);
            CHECK(plane.min_rank() == q + 1);
            CHECK(plane.max_rank() == q + 1);
            CHECK(is_linear_by_minor(plane));
        }
    }
    SUBCASE("the emitted Fano plane is stable") {
        CHECK(serialize(projective_plane(2)) ==
              R"({"n":7,"edges":[[0,1,6],[0,2,4],[0,3,5],[1,2,5],[1,3,4],[2,3,6],[4,5,6]]})");
    }
    SUBCASE("non-prime and oversized orders are rejected") {
        CHECK_THROWS_AS(projective_plane(4), std::invalid_argument);
        CHECK_THROWS_AS(projective_plane(1), std::invalid_argument);
        CHECK_THROWS_AS(projective_plane(17), std::invalid_argument);
    }
}

TEST_CASE("complete_graph_hypergraph") {
    CHECK(complete_graph_hypergraph(3).edge_count() == 3);
    const Hypergraph k4 = complete_graph_hypergraph(4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4.max_degree() == 3);
    CHECK(validate(k4).linear);
    CHECK_THROWS_AS(complete_graph_hypergraph(1), std::invalid_argument);
}

TEST_CASE("near_pencil") {
    CHECK(near_pencil(5).edges() ==
          std::vector<Edge>{{0, 1, 2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(near_pencil(3).edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    for (int n = 3; n <= 7; ++n) {
        CHECK(oracle::all_edges_pairwise_meet(near_pencil(n)));  // line graph is K_n
        CHECK(validate(near_pencil(n)).linear);
    }
    CHECK_THROWS_AS(near_pencil(2), std::invalid_argument);
}

TEST_CASE("steiner_triple") {
    SUBCASE("n = 9") {
        const Hypergraph sts = steiner_triple(9);
        CHECK(sts.edge_count() == 12);
        for (int x = 0; x < 9; ++x) CHECK(sts.degree(x) == 4);
        const auto coverage = oracle::pair_coverage(sts);
        CHECK(coverage.size() == 36);
        for (const auto& [pair, count] : coverage) {
            (void)pair;
            CHECK(count == 1);
        }
    }
    SUBCASE("n = 15") {
        const Hypergraph sts = steiner_triple(15);
        CHECK(sts.edge_count() == 35);
        for (int x = 0; x < 15; ++x) CHECK(sts.degree(x) == 7);
        for (const auto& [pair, count] : oracle::pair_coverage(sts)) {
            (void)pair;
            CHECK(count == 1);
        }
    }
    SUBCASE("all supported orders satisfy the design axioms") {
        for (int n = 3; n <= 99; n += 6) {
            const Hypergraph sts = steiner_triple(n);
            CHECK(sts.edge_count() == n * (n - 1) / 6);
            CHECK(sts.min_degree() == (n - 1) / 2);
            CHECK(sts.max_degree() == (n - 1) / 2);
            CHECK(is_linear_by_minor(sts));
        }
    }
    SUBCASE("wrong congruence classes are rejected") {
        CHECK_THROWS_AS(steiner_triple(8), std::invalid_argument);
        CHECK_THROWS_AS(steiner_triple(7), std::invalid_argument);
        CHECK_THROWS_AS(steiner_triple(105), std::invalid_argument);
    }
}

TEST_CASE("random_linear") {
    SUBCASE("always linear, no rank-1 edges, no duplicates") {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const auto r = random_linear(6, 4, 2, 3, seed);
            const auto report = validate(r.hypergraph);
            CHECK(report.linear);
            CHECK(report.rank1_edges.empty());
            CHECK(report.duplicate_edges.empty());
            CHECK(r.hypergraph.edge_count() <= 4);
        }
    }
    SUBCASE("deterministic given the seed") {
        const auto a = random_linear(10, 12, 2, 4, 99);
        const auto b = random_linear(10, 12, 2, 4, 99);
        CHECK(a.hypergraph == b.hypergraph);
        CHECK(a.rejections == b.rejections);
        const auto c = random_linear(10, 12, 2, 4, 100);
        CHECK(a.hypergraph.edge_count() > 0);
        CHECK_FALSE(a.hypergraph == c.hypergraph);
    }
    SUBCASE("dense targets truncate instead of hanging") {
        const auto r = random_linear(4, 50, 2, 2, 7);
        CHECK(r.truncated);
        CHECK(r.hypergraph.edge_count() <= 6);  // K4 has only 6 pairs
    }
    SUBCASE("parameter violations") {
        CHECK_THROWS_AS(random_linear(4, 3, 2, 5, 1), std::invalid_argument);
        CHECK_THROWS_AS(random_linear(4, 3, 1, 2, 1), std::invalid_argument);
        CHECK_THROWS_AS(random_linear(4, -1, 2, 2, 1), std::invalid_argument);
    }
}

TEST_CASE("make_instance dispatches on kind") {
    GenSpec spec;
    spec.kind = GenKind::projective_plane;
    spec.q = 2;
    CHECK(make_instance(spec).hypergraph == projective_plane(2));
    spec.kind = GenKind::random_linear;
    spec.n = 6;
    spec.m_target = 4;
    spec.rank_min = 2;
    spec.rank_max = 3;
    spec.seed = 5;
    CHECK(make_instance(spec).hypergraph == random_linear(6, 4, 2, 3, 5).hypergraph);
}
