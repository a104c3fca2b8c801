#include "lhc/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lhc {

Hypergraph::Hypergraph(int n, std::vector<Edge> edges, EdgeOrder order) : n_(n) {
    if (n < 0) {
        throw std::invalid_argument("vertex count must be non-negative");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Edge& e = edges[i];
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.empty()) {
            throw std::invalid_argument("edge " + std::to_string(i) + " is empty");
        }
        if (e.front() < 0 || e.back() >= n) {
            throw std::invalid_argument("edge " + std::to_string(i) +
                                        " has a vertex id outside [0, " + std::to_string(n) + ")");
        }
    }
    {
        std::map<Edge, int> seen;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [it, fresh] = seen.emplace(edges[i], static_cast<int>(i));
            if (!fresh) {
                throw std::invalid_argument("duplicate edge at indices " +
                                            std::to_string(it->second) + " and " +
                                            std::to_string(i));
            }
        }
    }
    if (order == EdgeOrder::canonical) {
        std::sort(edges.begin(), edges.end());
    }
    edges_ = std::move(edges);

    degrees_.assign(n_, 0);
    incidence_.assign(n_, {});
    for (int e = 0; e < edge_count(); ++e) {
        for (int x : edges_[e]) {
            ++degrees_[x];
            incidence_[x].push_back(e);
        }
    }
}

const Edge& Hypergraph::edge(int e) const {
    if (e < 0 || e >= edge_count()) {
        throw std::out_of_range("edge index " + std::to_string(e) + " out of range");
    }
    return edges_[e];
}

int Hypergraph::rank(int e) const { return static_cast<int>(edge(e).size()); }

int Hypergraph::degree(int x) const {
    if (x < 0 || x >= n_) {
        throw std::out_of_range("vertex id " + std::to_string(x) + " out of range");
    }
    return degrees_[x];
}

const std::vector<int>& Hypergraph::edges_at(int x) const {
    if (x < 0 || x >= n_) {
        throw std::out_of_range("vertex id " + std::to_string(x) + " out of range");
    }
    return incidence_[x];
}

bool Hypergraph::edge_contains(int e, int x) const {
    const Edge& ed = edge(e);
    return std::binary_search(ed.begin(), ed.end(), x);
}

int Hypergraph::max_degree() const {
    return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

int Hypergraph::min_degree() const {
    return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

int Hypergraph::max_rank() const {
    int p = 0;
    for (const Edge& e : edges_) p = std::max<int>(p, e.size());
    return p;
}

int Hypergraph::min_rank() const {
    if (edges_.empty()) return 0;
    int rho = static_cast<int>(edges_.front().size());
    for (const Edge& e : edges_) rho = std::min<int>(rho, e.size());
    return rho;
}

Hypergraph Hypergraph::canonical() const { return Hypergraph(n_, edges_); }

int intersection_size(const Edge& a, const Edge& b) {
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++count, ++i, ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return count;
}

bool edges_intersect(const Edge& a, const Edge& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
}

int meeting_vertex(const Edge& a, const Edge& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return a[i];
        if (a[i] < b[j]) ++i; else ++j;
    }
    return -1;
}

ValidationReport validate(const Hypergraph& h) {
    ValidationReport report;
    const auto& edges = h.edges();
    for (int e = 0; e < h.edge_count(); ++e) {
        if (edges[e].size() == 1) report.rank1_edges.push_back(e);
    }
    report.linear = true;
    for (int i = 0; i < h.edge_count() && report.linear; ++i) {
        for (int j = i + 1; j < h.edge_count(); ++j) {
            if (edges[i] == edges[j]) report.duplicate_edges.emplace_back(i, j);
            if (intersection_size(edges[i], edges[j]) > 1) {
                report.linear = false;
                break;
            }
        }
    }
    return report;
}

bool is_linear_by_minor(const Hypergraph& h) {
    // A 2x2 all-ones minor means two vertices jointly covered twice.
    // Walk vertex pairs within each edge and count joint coverage.
    const int n = h.vertex_count();
    if (n < 2) return true;
    if (n <= 4096) {
        std::vector<std::vector<int>> pair_count(n);
        for (int x = 0; x < n; ++x) pair_count[x].assign(n - x, 0);
        for (const Edge& e : h.edges()) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                for (std::size_t j = i + 1; j < e.size(); ++j) {
                    int x = e[i], y = e[j];
                    if (++pair_count[x][y - x] > 1) return false;
                }
            }
        }
        return true;
    }
    // sparse counting for large vertex sets
    std::map<std::pair<int, int>, int> pair_count;
    for (const Edge& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                if (++pair_count[{e[i], e[j]}] > 1) return false;
            }
        }
    }
    return true;
}

Hypergraph dual(const Hypergraph& h) {
    std::vector<Edge> transposed(h.vertex_count());
    for (int x = 0; x < h.vertex_count(); ++x) {
        if (h.degree(x) == 0) {
            throw std::invalid_argument("vertex " + std::to_string(x) +
                                        " is isolated; its transpose row would be an empty edge");
        }
        transposed[x] = h.edges_at(x);
    }
    std::map<Edge, int> seen;
    for (int x = 0; x < h.vertex_count(); ++x) {
        auto [it, fresh] = seen.emplace(transposed[x], x);
        if (!fresh) {
            throw std::invalid_argument("vertices " + std::to_string(it->second) + " and " +
                                        std::to_string(x) +
                                        " have identical incidence sets; the transpose would "
                                        "duplicate an edge");
        }
    }
    return Hypergraph(h.edge_count(), std::move(transposed), EdgeOrder::preserve);
}

Handshake handshake(const Hypergraph& h) {
    Handshake sums;
    for (const Edge& e : h.edges()) sums.sum_ranks += static_cast<long long>(e.size());
    for (int x = 0; x < h.vertex_count(); ++x) sums.sum_degrees += h.degree(x);
    return sums;
}

Hypergraph remove_edge(const Hypergraph& h, int e) {
    if (e < 0 || e >= h.edge_count()) {
        throw std::out_of_range("edge index " + std::to_string(e) + " out of range");
    }
    std::vector<Edge> edges = h.edges();
    edges.erase(edges.begin() + e);
    return Hypergraph(h.vertex_count(), std::move(edges));
}

Hypergraph strip_isolated_vertices(const Hypergraph& h) {
    std::vector<int> remap(h.vertex_count(), -1);
    int next = 0;
    for (int x = 0; x < h.vertex_count(); ++x) {
        if (h.degree(x) > 0) remap[x] = next++;
    }
    std::vector<Edge> edges = h.edges();
    for (Edge& e : edges) {
        for (int& x : e) x = remap[x];
    }
    return Hypergraph(next, std::move(edges));
}

}  // namespace lhc
