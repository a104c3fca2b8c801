#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lhc {

/// An edge is a set of vertex ids, stored ascending.
using Edge = std::vector<int>;

enum class EdgeOrder {
    canonical,  // edge list sorted lexicographically
    preserve,   // keep the order the caller supplied
};

/**
 * A hypergraph on vertices {0, ..., n-1} with a list of set-distinct,
 * non-empty edges. Values are immutable after construction and safe to
 * share across threads.
 *
 * Construction canonicalizes: vertex ids inside an edge are sorted and
 * deduplicated, and (by default) the edge list is sorted
 * lexicographically. Out-of-range ids, empty edges and duplicate edge
 * sets are rejected with std::invalid_argument naming the offending
 * position. EdgeOrder::preserve keeps the caller's edge order; the
 * transpose uses it so that edge j of dual(H) is exactly the incidence
 * set of vertex j.
 */
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int n, std::vector<Edge> edges, EdgeOrder order = EdgeOrder::canonical);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const;
    int rank(int e) const;

    int degree(int x) const;
    const std::vector<int>& degrees() const { return degrees_; }
    /// Indices of the edges containing x.
    const std::vector<int>& edges_at(int x) const;
    bool edge_contains(int e, int x) const;

    int max_degree() const;
    int min_degree() const;
    int max_rank() const;
    int min_rank() const;

    /// Copy with the edge list re-sorted into canonical order.
    Hypergraph canonical() const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
    std::vector<std::vector<int>> incidence_;
};

struct ValidationReport {
    std::vector<int> rank1_edges;
    std::vector<std::pair<int, int>> duplicate_edges;
    bool out_of_range = false;
    bool linear = false;
};

/// Scalar statistics of an instance; field names follow the usual
/// hypergraph notation (degree bounds delta/Delta, rank bounds rho/P).
struct AnalysisReport {
    int n = 0;
    int m = 0;
    int delta = 0;
    int Delta = 0;
    int rho = 0;
    int P = 0;
    int maxD = 0;  // max clique degree
    int maxR = 0;  // max clique rank
    bool linear = true;
    bool uniform = true;
    bool regular = true;
};

struct Handshake {
    long long sum_ranks = 0;
    long long sum_degrees = 0;
};

/// Never throws; reports rank-1 edges and linearity. The duplicate and
/// out-of-range fields are always clean for values of Hypergraph (the
/// constructor rejects both) but are part of the report contract.
ValidationReport validate(const Hypergraph& h);

/// Linearity decided through the incidence matrix: false iff some 2x2
/// all-ones submatrix exists, i.e. some vertex pair lies in two edges.
/// Independent of the pairwise edge-intersection route in validate().
bool is_linear_by_minor(const Hypergraph& h);

/// Transpose. Edge j of the result is the set of edges of h containing
/// vertex j; the edge list keeps that vertex order so the transpose is
/// an exact involution on canonically ordered inputs. Throws if some
/// vertex is isolated (its row would transpose to an empty edge) or if
/// two vertices have identical incidence sets (duplicate edges).
Hypergraph dual(const Hypergraph& h);

Handshake handshake(const Hypergraph& h);

Hypergraph remove_edge(const Hypergraph& h, int e);

/// Drops vertices of degree zero and renumbers the rest densely.
Hypergraph strip_isolated_vertices(const Hypergraph& h);

// sorted-set helpers shared across modules
int intersection_size(const Edge& a, const Edge& b);
bool edges_intersect(const Edge& a, const Edge& b);
/// First common vertex, or -1. For linear hypergraphs this is the
/// unique meeting point of two intersecting edges.
int meeting_vertex(const Edge& a, const Edge& b);

}  // namespace lhc
