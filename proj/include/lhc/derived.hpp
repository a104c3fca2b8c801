#pragma once

#include "lhc/graph.hpp"
#include "lhc/hypergraph.hpp"

namespace lhc {

/// Graph on the vertex set of h with x~y iff some edge contains both.
Graph clique_graph(const Hypergraph& h);

/// Graph on the edge set of h with e~f iff the edges intersect.
/// Computed directly by pairwise intersection, so it is defined even
/// when the transpose is not (isolated vertices, duplicate rows).
Graph line_graph(const Hypergraph& h);

/// D(x) = sum over edges e containing x of (rank(e) - 1). Equals the
/// degree of x in the clique graph when h is linear; always the raw sum.
int clique_degree(const Hypergraph& h, int x);

/// R(e) = sum over vertices x in e of (degree(x) - 1). Equals the
/// degree of e in the line graph when h is linear; always the raw sum.
int clique_rank(const Hypergraph& h, int e);

/// max over x of D(x); 0 when there are no vertices.
int max_clique_degree(const Hypergraph& h);

/// max over e of R(e); 0 when there are no edges.
int max_clique_rank(const Hypergraph& h);

/// Partition of the edges by rank: h3 keeps rank >= 3, h2 keeps rank 2,
/// both over the full vertex set of the parent. Index maps point back
/// into the parent's edge list.
struct RankSplit {
    Hypergraph h3;
    Hypergraph h2;
    std::vector<int> h3_to_parent;
    std::vector<int> h2_to_parent;
};

/// Throws if the parent has a rank-1 edge.
RankSplit split_by_rank(const Hypergraph& h);

AnalysisReport analyze(const Hypergraph& h);

}  // namespace lhc
