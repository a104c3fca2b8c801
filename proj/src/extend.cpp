#include <algorithm>
#include <set>
#include <stdexcept>

#include "lhc/coloring.hpp"

namespace lhc {

namespace {

// Exact list coloring of the rank-2 part: most-constrained edge first,
// backtracking with a node budget.
struct H2Search {
    const Hypergraph& h2;
    const std::vector<std::vector<int>>& lists;
    long long node_limit;
    long long nodes = 0;
    bool out_of_budget = false;
    int stuck_edge = -1;
    std::vector<int> colors;

    H2Search(const Hypergraph& graph, const std::vector<std::vector<int>>& available,
             long long limit)
        : h2(graph), lists(available), node_limit(limit), colors(graph.edge_count(), -1) {}

    int admissible_count(int e, std::vector<int>* out) const {
        int count = 0;
        for (int c : lists[e]) {
            bool clash = false;
            for (int f = 0; f < h2.edge_count(); ++f) {
                if (colors[f] == c && edges_intersect(h2.edges()[e], h2.edges()[f])) {
                    clash = true;
                    break;
                }
            }
            if (!clash) {
                ++count;
                if (out) out->push_back(c);
            }
        }
        return count;
    }

    bool dfs(int colored) {
        if (colored == h2.edge_count()) return true;
        if (nodes >= node_limit) {
            out_of_budget = true;
            return false;
        }
        int pick = -1, pick_count = -1;
        for (int e = 0; e < h2.edge_count(); ++e) {
            if (colors[e] >= 0) continue;
            const int count = admissible_count(e, nullptr);
            if (pick < 0 || count < pick_count) {
                pick = e;
                pick_count = count;
            }
        }
        if (pick_count == 0) {
            stuck_edge = pick;
            return false;
        }
        std::vector<int> options;
        admissible_count(pick, &options);
        for (int c : options) {
            ++nodes;
            colors[pick] = c;
            if (dfs(colored + 1)) return true;
            colors[pick] = -1;
            if (out_of_budget) return false;
        }
        if (stuck_edge < 0) stuck_edge = pick;
        return false;
    }
};

}  // namespace

ExtensionResult extend_coloring(const Hypergraph& h, const EdgeColoring& h3_coloring,
                                const ListAssignment& h2_lists, int n_colors,
                                const SearchBudget& budget) {
    const RankSplit split = split_by_rank(h);
    if (static_cast<int>(h3_coloring.colors.size()) != split.h3.edge_count()) {
        throw std::invalid_argument("coloring does not match the rank>=3 part");
    }
    if (split.h3.edge_count() > 0 && !is_proper(split.h3, h3_coloring)) {
        throw std::invalid_argument("coloring of the rank>=3 part is not proper");
    }
    if (static_cast<int>(h2_lists.lists.size()) != split.h2.edge_count()) {
        throw std::invalid_argument("list assignment does not match the rank-2 part");
    }
    if (n_colors < 1) throw std::invalid_argument("n_colors must be at least 1");
    for (const auto& list : h2_lists.lists) {
        if (static_cast<int>(list.size()) < n_colors) {
            throw std::invalid_argument("every rank-2 list needs at least " +
                                        std::to_string(n_colors) + " colors");
        }
    }

    ExtensionResult result;
    const int margin = h.vertex_count() - 2 * split.h3.max_degree() - 1;
    result.hypothesis_holds = split.h2.max_degree() <= margin;
    if (!result.hypothesis_holds) {
        result.note = "extension hypothesis violated: max degree of the rank-2 part is " +
                      std::to_string(split.h2.max_degree()) + " > " + std::to_string(margin) +
                      "; attempting anyway. ";
    }

    // Reduce each rank-2 list by the colors already present at its
    // endpoints in the rank>=3 coloring.
    std::vector<std::vector<int>> available(split.h2.edge_count());
    for (int i = 0; i < split.h2.edge_count(); ++i) {
        std::set<int> used;
        for (int x : split.h2.edges()[i]) {
            for (int f : split.h3.edges_at(x)) used.insert(h3_coloring.colors[f]);
        }
        std::vector<int> keep;
        for (int c : h2_lists.lists[i]) {
            if (!used.count(c)) keep.push_back(c);
        }
        std::sort(keep.begin(), keep.end());
        available[i] = std::move(keep);
        result.available_counts.push_back(static_cast<int>(available[i].size()));
    }
    result.min_available =
        result.available_counts.empty()
            ? 0
            : *std::min_element(result.available_counts.begin(), result.available_counts.end());
    result.counts_within_bound = result.available_counts.empty() ||
                                 result.min_available >= n_colors - 2 * split.h3.max_degree();

    H2Search search(split.h2, available, budget.max_nodes);
    if (!search.dfs(0)) {
        result.success = false;
        if (search.out_of_budget) {
            result.note += "search budget exhausted after " + std::to_string(search.nodes) +
                           " nodes";
        } else {
            result.note += "no extension exists; search stuck at rank-2 edge " +
                           std::to_string(search.stuck_edge) + " (parent edge " +
                           std::to_string(split.h2_to_parent[search.stuck_edge]) + ")";
        }
        return result;
    }

    result.success = true;
    result.coloring.colors.assign(h.edge_count(), -1);
    for (int i = 0; i < split.h3.edge_count(); ++i) {
        result.coloring.colors[split.h3_to_parent[i]] = h3_coloring.colors[i];
    }
    for (int i = 0; i < split.h2.edge_count(); ++i) {
        result.coloring.colors[split.h2_to_parent[i]] = search.colors[i];
    }
    if (!is_proper(h, result.coloring)) {
        throw std::logic_error("extension produced an improper coloring");
    }
    return result;
}

}  // namespace lhc
