#include <stdexcept>

#include "doctest.h"
#include "lhc/conjectures.hpp"
#include "lhc/derived.hpp"
#include "oracles.hpp"

using namespace lhc;

TEST_CASE("conjectured_bound") {
    const Hypergraph fano = projective_plane(2);
    CHECK(conjectured_bound(fano, Conjecture::EFL) == 7);
    CHECK(conjectured_bound(fano, Conjecture::C1) == 7);
    CHECK(conjectured_bound(fano, Conjecture::C2) == 7);  // maxD + 1
    CHECK(conjectured_bound(fano, Conjecture::C3) == 7);  // 3*3 - 3 + 1

    const Hypergraph k4 = complete_graph_hypergraph(4);
    CHECK(conjectured_bound(k4, Conjecture::C4) == 4);
    CHECK(conjectured_bound(k4, Conjecture::C3) == 4);  // 3*2 - 3 + 1
    CHECK(conjectured_bound(k4, Conjecture::C2) == 4);

    SUBCASE("hypothesis violations are named") {
        CHECK_THROWS_WITH_AS(conjectured_bound(fano, Conjecture::C4),
                             doctest::Contains("graphs only"), std::invalid_argument);
        CHECK_THROWS_AS(conjectured_bound(Hypergraph(2, {{0}}), Conjecture::C1),
                        std::invalid_argument);
        CHECK_THROWS_AS(conjectured_bound(Hypergraph(4, {{0, 1, 2}, {0, 1, 3}}), Conjecture::C1),
                        std::invalid_argument);
    }

    SUBCASE("the C2 bound never exceeds the C1 bound on linear instances") {
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            const Hypergraph h = random_linear(8, 10, 2, 4, seed).hypergraph;
            if (h.edge_count() == 0) continue;
            CHECK(conjectured_bound(h, Conjecture::C2) <= conjectured_bound(h, Conjecture::C1));
        }
    }
}

TEST_CASE("check_conjecture") {
    SUBCASE("the Fano plane is tight for C2") {
        const ConjectureVerdict verdict = check_conjecture(projective_plane(2), Conjecture::C2);
        CHECK(verdict.bound == 7);
        REQUIRE(verdict.q_exact.has_value());
        CHECK(*verdict.q_exact == 7);
        CHECK(verdict.status == VerdictStatus::consistent);  // q = bound is not a violation
        CHECK_FALSE(verdict.choosability.has_value());       // list size above the search cap
    }
    SUBCASE("near-pencil on six vertices is consistent with C1") {
        const ConjectureVerdict verdict = check_conjecture(near_pencil(6), Conjecture::C1);
        CHECK(verdict.bound == 6);
        REQUIRE(verdict.q_exact.has_value());
        CHECK(*verdict.q_exact == 6);
        CHECK(verdict.status == VerdictStatus::consistent);
    }
    SUBCASE("the triangle satisfies C4 through both evidence channels") {
        const Hypergraph triangle(3, {{0, 1}, {0, 2}, {1, 2}});
        const ConjectureVerdict verdict = check_conjecture(triangle, Conjecture::C4);
        CHECK(verdict.bound == 3);
        REQUIRE(verdict.q_exact.has_value());
        CHECK(*verdict.q_exact == 3);
        REQUIRE(verdict.choosability.has_value());
        CHECK(verdict.choosability->status == Choosability::choosable);
        CHECK(verdict.status == VerdictStatus::consistent);
    }
    SUBCASE("EFL on projective planes is tight but consistent") {
        const ConjectureVerdict verdict = check_conjecture(projective_plane(3), Conjecture::EFL);
        CHECK(verdict.bound == 13);
        REQUIRE(verdict.q_exact.has_value());
        CHECK(*verdict.q_exact == 13);
        CHECK(verdict.status == VerdictStatus::consistent);
    }
}

TEST_CASE("critical_check") {
    SUBCASE("the Fano plane passes both decidable clauses") {
        const CriticalityReport report = critical_check(projective_plane(2));
        CHECK(report.maxD == 6);
        CHECK(report.removal_preserves_maxD);
        CHECK(report.clique_rank_ge_maxD);
        // list-side clauses stay open: the 7-list search is out of reach
        CHECK(report.exceeds_bound == ClauseStatus::undecided);
    }
    SUBCASE("near-pencil decides the removal clause by direct computation") {
        SearchBudget small;
        small.max_assignments = 5000;  // keep the 5-list searches quick
        const CriticalityReport report = critical_check(near_pencil(5), small);
        CHECK(report.maxD == 4);
        CHECK(report.removal_preserves_maxD);  // several vertices attain maxD
        CHECK(report.clique_rank_ge_maxD);     // every R(e) = 4
    }
    SUBCASE("a single edge is certified non-critical") {
        const CriticalityReport report = critical_check(Hypergraph(3, {{0, 1, 2}}));
        CHECK(report.maxD == 2);
        CHECK_FALSE(report.removal_preserves_maxD);
        CHECK(report.removal_violating_edge == 0);
        CHECK_FALSE(report.clique_rank_ge_maxD);
        CHECK(report.exceeds_bound == ClauseStatus::refuted);  // 3-choosable
        CHECK(report.deletion_tight == ClauseStatus::refuted);
        CHECK(report.small_rank_extension_verified);
    }
    SUBCASE("a pendant pair fails the clique-rank clause and extends constructively") {
        const Hypergraph h(5, {{0, 1, 2}, {0, 3}, {3, 4}});
        const CriticalityReport report = critical_check(h);
        CHECK(report.maxD == 3);
        CHECK_FALSE(report.clique_rank_ge_maxD);
        CHECK(report.small_rank_extension_verified);
    }
    CHECK_THROWS_AS(critical_check(Hypergraph(2, {{0}})), std::invalid_argument);
    CHECK_THROWS_AS(critical_check(Hypergraph(4, {{0, 1, 2}, {0, 1, 3}})), std::invalid_argument);
}

TEST_CASE("sweep") {
    SUBCASE("random instances give full rows and consistent verdicts") {
        std::vector<GenSpec> specs;
        for (int i = 0; i < 25; ++i) {
            GenSpec spec;
            spec.kind = GenKind::random_linear;
            spec.n = 7;
            spec.m_target = 8;
            spec.rank_min = 2;
            spec.rank_max = 3;
            spec.seed = 100 + i;
            specs.push_back(spec);
        }
        const SweepResult result = sweep(specs);
        REQUIRE(result.rows.size() == 25);
        CHECK_FALSE(result.violation_found);
        for (const SweepRow& row : result.rows) {
            CHECK(row.error.empty());
            CHECK(row.verdict_c1 == "consistent");
            CHECK(row.verdict_c2 == "consistent");
            CHECK(row.verdict_c3 == "consistent");
            REQUIRE(row.q_exact.has_value());
            CHECK(*row.q_exact <= row.bound_c2);
            CHECK(row.bound_c2 <= row.bound_efl);
        }

        SUBCASE("deterministic given the seeds") {
            const SweepResult again = sweep(specs);
            REQUIRE(again.rows.size() == result.rows.size());
            for (std::size_t i = 0; i < result.rows.size(); ++i) {
                CHECK(sweep_row_to_csv(again.rows[i]) == sweep_row_to_csv(result.rows[i]));
            }
        }
    }
    SUBCASE("projective planes report q = n") {
        std::vector<GenSpec> specs(2);
        specs[0].kind = GenKind::projective_plane;
        specs[0].q = 2;
        specs[1].kind = GenKind::projective_plane;
        specs[1].q = 3;
        const SweepResult result = sweep(specs);
        REQUIRE(result.rows.size() == 2);
        CHECK(result.rows[0].q_exact == 7);
        CHECK(result.rows[1].q_exact == 13);
        CHECK(sweep_row_to_csv(result.rows[0]) ==
              "0,projective_plane,0,7,7,3,3,3,3,6,6,1,1,1,7,7,7,7,7,7,"
              "consistent,consistent,consistent,");
    }
    SUBCASE("an empty plan yields only the header") {
        const SweepResult result = sweep({});
        CHECK(result.rows.empty());
        CHECK(std::string(kSweepCsvHeader).rfind("instance_id,kind,seed,n,m,", 0) == 0);
    }
    SUBCASE("per-instance generation failures are recorded, not fatal") {
        std::vector<GenSpec> specs(2);
        specs[0].kind = GenKind::projective_plane;
        specs[0].q = 4;  // not prime
        specs[1].kind = GenKind::near_pencil;
        specs[1].n = 5;
        const SweepResult result = sweep(specs);
        REQUIRE(result.rows.size() == 2);
        CHECK_FALSE(result.rows[0].error.empty());
        CHECK(result.rows[1].error.empty());
        CHECK(result.rows[1].q_exact == 5);
    }
}
