#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "lhc/coloring.hpp"

namespace lhc {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end;
    bool enabled = false;
    bool expired() const { return enabled && Clock::now() >= end; }
};

Deadline make_deadline(const SearchBudget& budget) {
    Deadline d;
    if (budget.max_time_ms > 0) {
        d.enabled = true;
        d.end = Clock::now() + std::chrono::milliseconds(budget.max_time_ms);
    }
    return d;
}

// Adjacency as 64-bit masks; the exact solver is capped well below 64
// vertices by the edge-count budget.
struct MaskGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    explicit MaskGraph(const Graph& g) : n(g.vertex_count()), adj(g.vertex_count(), 0) {
        if (n > 64) throw std::invalid_argument("exact solver supports at most 64 vertices");
        for (int v = 0; v < n; ++v) {
            for (int u : g.neighbors(v)) adj[v] |= 1ull << u;
        }
    }
};

int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

// Greedy clique: grow from each seed vertex, always taking the candidate
// with the most remaining candidates as neighbors. Deterministic.
std::vector<int> greedy_clique(const MaskGraph& g) {
    std::vector<int> best;
    for (int seed = 0; seed < g.n; ++seed) {
        std::vector<int> clique{seed};
        std::uint64_t cand = g.adj[seed];
        while (cand != 0) {
            int pick = -1, pick_score = -1;
            for (std::uint64_t rest = cand; rest != 0; rest &= rest - 1) {
                const int v = __builtin_ctzll(rest);
                const int score = popcount(cand & g.adj[v]);
                if (score > pick_score) {
                    pick = v;
                    pick_score = score;
                }
            }
            clique.push_back(pick);
            cand &= g.adj[pick];
        }
        if (clique.size() > best.size()) best = std::move(clique);
    }
    std::sort(best.begin(), best.end());
    return best;
}

// DSATUR greedy coloring; returns 0-based colors.
std::vector<int> dsatur_greedy(const MaskGraph& g, int& colors_used) {
    std::vector<int> color(g.n, -1);
    std::vector<std::uint64_t> neighbor_colors(g.n, 0);  // bitset over color ids
    colors_used = 0;
    for (int step = 0; step < g.n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if (color[v] >= 0) continue;
            const int sat = popcount(neighbor_colors[v]);
            const int deg = popcount(g.adj[v]);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int c = 0;
        while (neighbor_colors[pick] >> c & 1) ++c;
        color[pick] = c;
        colors_used = std::max(colors_used, c + 1);
        for (std::uint64_t rest = g.adj[pick]; rest != 0; rest &= rest - 1) {
            neighbor_colors[__builtin_ctzll(rest)] |= 1ull << c;
        }
    }
    return color;
}

enum class Decision { yes, no, limit };

struct DecisionSearch {
    const MaskGraph& g;
    int k;
    long long node_limit;
    const Deadline& deadline;
    long long nodes = 0;
    std::vector<int> color;
    std::vector<std::uint64_t> neighbor_colors;
    bool out_of_budget = false;

    DecisionSearch(const MaskGraph& graph, int colors, long long limit, const Deadline& dl)
        : g(graph), k(colors), node_limit(limit), deadline(dl),
          color(graph.n, -1), neighbor_colors(graph.n, 0) {}

    bool budget_exceeded() {
        if (nodes >= node_limit) return true;
        if ((nodes & 1023) == 0 && deadline.expired()) return true;
        return false;
    }

    bool dfs(int colored, int max_used) {
        if (colored == g.n) return true;
        if (budget_exceeded()) {
            out_of_budget = true;
            return false;
        }
        // DSATUR pick: max saturation, then max degree, then min index.
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if (color[v] >= 0) continue;
            const int sat = popcount(neighbor_colors[v]);
            const int deg = popcount(g.adj[v]);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        // A vertex may reuse any open color or open exactly one new one.
        const int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (neighbor_colors[pick] >> c & 1) continue;
            ++nodes;
            color[pick] = c;
            std::vector<std::pair<int, std::uint64_t>> undo;
            for (std::uint64_t rest = g.adj[pick]; rest != 0; rest &= rest - 1) {
                const int u = __builtin_ctzll(rest);
                if (!(neighbor_colors[u] >> c & 1)) {
                    undo.emplace_back(u, neighbor_colors[u]);
                    neighbor_colors[u] |= 1ull << c;
                }
            }
            if (dfs(colored + 1, std::max(max_used, c))) return true;
            for (auto& [u, prev] : undo) neighbor_colors[u] = prev;
            color[pick] = -1;
            if (out_of_budget) return false;
        }
        return false;
    }

    Decision run(const std::vector<int>& clique) {
        if (static_cast<int>(clique.size()) > k) return Decision::no;
        int max_used = -1;
        for (std::size_t i = 0; i < clique.size(); ++i) {
            const int v = clique[i];
            color[v] = static_cast<int>(i);
            max_used = static_cast<int>(i);
            for (std::uint64_t rest = g.adj[v]; rest != 0; rest &= rest - 1) {
                neighbor_colors[__builtin_ctzll(rest)] |= 1ull << i;
            }
        }
        if (dfs(static_cast<int>(clique.size()), max_used)) return Decision::yes;
        return out_of_budget ? Decision::limit : Decision::no;
    }
};

}  // namespace

GraphColoringResult chromatic_number(const Graph& g, const SearchBudget& budget) {
    GraphColoringResult result;
    if (g.vertex_count() == 0) {
        result.exact = true;
        return result;
    }
    const Deadline deadline = make_deadline(budget);
    MaskGraph mg(g);
    result.clique = greedy_clique(mg);
    result.lower = static_cast<int>(result.clique.size());

    int greedy_used = 0;
    result.colors = dsatur_greedy(mg, greedy_used);
    result.upper = greedy_used;
    if (result.lower == result.upper) {
        result.exact = true;
        return result;
    }

    for (int k = result.lower; k < result.upper; ++k) {
        DecisionSearch search(mg, k, budget.max_nodes - result.nodes, deadline);
        const Decision outcome = search.run(result.clique);
        result.nodes += search.nodes;
        if (outcome == Decision::yes) {
            result.colors = search.color;
            result.upper = k;
            result.lower = k;
            result.exact = true;
            return result;
        }
        if (outcome == Decision::limit) {
            result.lower = k;  // everything below k is refuted
            return result;
        }
        result.lower = k + 1;
    }
    result.exact = true;  // all values below the greedy bound refuted
    result.lower = result.upper;
    return result;
}

ChromaticIndexResult chromatic_index_exact(const Hypergraph& h, const SearchBudget& budget) {
    if (h.edge_count() > budget.max_edges_exact) {
        throw std::invalid_argument("instance has " + std::to_string(h.edge_count()) +
                                    " edges; exact solver is capped at " +
                                    std::to_string(budget.max_edges_exact));
    }
    const GraphColoringResult graph_result = chromatic_number(line_graph(h), budget);
    ChromaticIndexResult result;
    result.exact = graph_result.exact;
    result.lower = graph_result.lower;
    result.upper = graph_result.upper;
    result.clique = graph_result.clique;
    result.nodes = graph_result.nodes;
    result.coloring.colors.resize(graph_result.colors.size());
    for (std::size_t e = 0; e < graph_result.colors.size(); ++e) {
        result.coloring.colors[e] = graph_result.colors[e] + 1;
    }
    // Sandwich check: the clique certifies the lower bound, the returned
    // coloring certifies the upper one.
    for (std::size_t i = 0; i < result.clique.size(); ++i) {
        for (std::size_t j = i + 1; j < result.clique.size(); ++j) {
            if (!edges_intersect(h.edges()[result.clique[i]], h.edges()[result.clique[j]])) {
                throw std::logic_error("clique witness is not pairwise intersecting");
            }
        }
    }
    if (h.edge_count() > 0 && !is_proper(h, result.coloring)) {
        throw std::logic_error("solver returned an improper coloring");
    }
    return result;
}

}  // namespace lhc
