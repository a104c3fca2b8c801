#include "lhc/derived.hpp"

#include <stdexcept>
#include <string>

namespace lhc {

Graph clique_graph(const Hypergraph& h) {
    Graph g(h.vertex_count());
    for (const Edge& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                g.add_edge(e[i], e[j]);
            }
        }
    }
    return g;
}

Graph line_graph(const Hypergraph& h) {
    const int m = h.edge_count();
    Graph g(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (edges_intersect(h.edges()[i], h.edges()[j])) g.add_edge(i, j);
        }
    }
    return g;
}

int clique_degree(const Hypergraph& h, int x) {
    int sum = 0;
    for (int e : h.edges_at(x)) sum += h.rank(e) - 1;
    return sum;
}

int clique_rank(const Hypergraph& h, int e) {
    int sum = 0;
    for (int x : h.edge(e)) sum += h.degree(x) - 1;
    return sum;
}

int max_clique_degree(const Hypergraph& h) {
    int best = 0;
    for (int x = 0; x < h.vertex_count(); ++x) best = std::max(best, clique_degree(h, x));
    return best;
}

int max_clique_rank(const Hypergraph& h) {
    int best = 0;
    for (int e = 0; e < h.edge_count(); ++e) best = std::max(best, clique_rank(h, e));
    return best;
}

RankSplit split_by_rank(const Hypergraph& h) {
    std::vector<Edge> big, small;
    RankSplit split;
    for (int e = 0; e < h.edge_count(); ++e) {
        const int r = h.rank(e);
        if (r < 2) {
            throw std::invalid_argument("edge " + std::to_string(e) +
                                        " has rank 1; the rank split requires rank >= 2");
        }
        if (r >= 3) {
            big.push_back(h.edges()[e]);
            split.h3_to_parent.push_back(e);
        } else {
            small.push_back(h.edges()[e]);
            split.h2_to_parent.push_back(e);
        }
    }
    // Subsequences of the parent's edge list, so order is preserved.
    split.h3 = Hypergraph(h.vertex_count(), std::move(big), EdgeOrder::preserve);
    split.h2 = Hypergraph(h.vertex_count(), std::move(small), EdgeOrder::preserve);
    return split;
}

AnalysisReport analyze(const Hypergraph& h) {
    AnalysisReport r;
    r.n = h.vertex_count();
    r.m = h.edge_count();
    r.delta = h.min_degree();
    r.Delta = h.max_degree();
    r.rho = h.min_rank();
    r.P = h.max_rank();
    r.maxD = max_clique_degree(h);
    r.maxR = max_clique_rank(h);
    r.linear = validate(h).linear;
    r.uniform = (r.rho == r.P);
    r.regular = (r.delta == r.Delta);
    return r;
}

}  // namespace lhc
