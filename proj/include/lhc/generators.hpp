#pragma once

#include <cstdint>
#include <string>

#include "lhc/hypergraph.hpp"

namespace lhc {

/// Projective plane of prime order q over the integers mod q:
/// n = m = q^2 + q + 1, uniform rank q + 1, regular degree q + 1,
/// every vertex pair on exactly one line. q must be prime and <= 13
/// (prime-power fields are deliberately out of scope).
Hypergraph projective_plane(int q);

/// K_n as a rank-2 hypergraph: all n-choose-2 pairs.
Hypergraph complete_graph_hypergraph(int n);

/// One edge {0, ..., n-2} plus the n-1 pairs {i, n-1}.
Hypergraph near_pencil(int n);

/// Steiner triple system on n points via the Bose construction;
/// requires n == 3 (mod 6) and n <= 99. Rank-3 uniform, regular of
/// degree (n-1)/2, every pair in exactly one triple.
Hypergraph steiner_triple(int n);

struct RandomLinearResult {
    Hypergraph hypergraph;
    bool truncated = false;      // rejection cap hit before m_target edges
    long long rejections = 0;
};

/// Random linear hypergraph by rejection sampling: draw a rank uniform
/// in [rank_min, rank_max] and a random vertex set of that size; accept
/// iff it meets every accepted edge in at most one vertex. Deterministic
/// given the seed (mt19937_64 with hand-rolled bounded draws). Gives up
/// after 1000 * m_target rejections and returns the partial instance
/// with the truncated flag set.
RandomLinearResult random_linear(int n, int m_target, int rank_min, int rank_max,
                                 std::uint64_t seed);

/// Identifier of the random source, recorded in sweep reports so runs
/// are replayable.
inline constexpr const char* kRandomSourceId = "mt19937_64";

enum class GenKind {
    projective_plane,
    complete_graph,
    near_pencil,
    steiner_triple,
    random_linear,
};

const char* gen_kind_name(GenKind kind);

/// Parameters for one generated instance; kind-specific fields are
/// validated by make_instance.
struct GenSpec {
    GenKind kind = GenKind::random_linear;
    int n = 0;          // complete_graph, near_pencil, steiner_triple, random_linear
    int q = 0;          // projective_plane
    int m_target = 0;   // random_linear
    int rank_min = 2;   // random_linear
    int rank_max = 3;   // random_linear
    std::uint64_t seed = 0;
};

struct GeneratedInstance {
    Hypergraph hypergraph;
    bool truncated = false;
};

GeneratedInstance make_instance(const GenSpec& spec);

}  // namespace lhc
