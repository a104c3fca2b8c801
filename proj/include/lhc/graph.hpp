#pragma once

#include <utility>
#include <vector>

namespace lhc {

/// Simple undirected graph; just enough for clique/line graphs and the
/// coloring solvers (adjacency, degrees, edge list).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    int edge_count() const { return edge_count_; }
    /// Edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edge_list() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

}  // namespace lhc
