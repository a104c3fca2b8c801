#include "lhc/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace lhc {

bool is_proper(const Hypergraph& h, const EdgeColoring& coloring) {
    if (static_cast<int>(coloring.colors.size()) != h.edge_count()) {
        throw std::invalid_argument("coloring does not cover all edges");
    }
    for (int e = 0; e < h.edge_count(); ++e) {
        if (coloring.colors[e] < 0) {
            throw std::invalid_argument("edge " + std::to_string(e) + " is uncolored");
        }
    }
    for (int i = 0; i < h.edge_count(); ++i) {
        for (int j = i + 1; j < h.edge_count(); ++j) {
            if (coloring.colors[i] == coloring.colors[j] &&
                edges_intersect(h.edges()[i], h.edges()[j])) {
                return false;
            }
        }
    }
    return true;
}

GreedyResult greedy_list_color(const Hypergraph& h, const ListAssignment& lists,
                               const std::vector<int>& order) {
    const int m = h.edge_count();
    if (static_cast<int>(lists.lists.size()) != m) {
        throw std::invalid_argument("list assignment does not cover all edges");
    }
    {
        std::vector<char> seen(m, 0);
        if (static_cast<int>(order.size()) != m) {
            throw std::invalid_argument("order is not a permutation of the edges");
        }
        for (int e : order) {
            if (e < 0 || e >= m || seen[e]) {
                throw std::invalid_argument("order is not a permutation of the edges");
            }
            seen[e] = 1;
        }
    }

    GreedyResult result;
    result.coloring.colors.assign(m, -1);
    for (int e : order) {
        std::vector<int> used;
        for (int f = 0; f < m; ++f) {
            if (result.coloring.colors[f] >= 0 &&
                edges_intersect(h.edges()[e], h.edges()[f])) {
                used.push_back(result.coloring.colors[f]);
            }
        }
        std::sort(used.begin(), used.end());
        std::vector<int> list = lists.lists[e];
        std::sort(list.begin(), list.end());  // smallest admissible color wins
        int chosen = -1;
        for (int c : list) {
            if (!std::binary_search(used.begin(), used.end(), c)) {
                chosen = c;
                break;
            }
        }
        if (chosen < 0) {
            result.success = false;
            result.stuck_edge = e;
            result.stuck_list = lists.lists[e];
            return result;
        }
        result.coloring.colors[e] = chosen;
    }
    result.success = true;
    return result;
}

GreedyResult greedy_color(const Hypergraph& h, int k, const std::vector<int>& order) {
    if (k < 1) throw std::invalid_argument("palette size must be at least 1");
    ListAssignment lists;
    std::vector<int> palette(k);
    std::iota(palette.begin(), palette.end(), 1);
    lists.lists.assign(h.edge_count(), palette);
    return greedy_list_color(h, lists, order);
}

std::vector<int> input_order(int m) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

std::vector<int> decreasing_clique_rank_order(const Hypergraph& h) {
    std::vector<int> order = input_order(h.edge_count());
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return clique_rank(h, a) > clique_rank(h, b);
    });
    return order;
}

std::vector<int> shuffled_order(int m, std::uint64_t seed) {
    std::vector<int> order = input_order(m);
    std::mt19937_64 rng(seed);
    for (int i = m - 1; i > 0; --i) {
        const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(order[i], order[j]);
    }
    return order;
}

std::vector<DeficitExcess> deficit_excess(const Hypergraph& h3, int Delta) {
    if (Delta < h3.max_degree()) {
        throw std::invalid_argument("Delta is below the actual maximum degree");
    }
    std::vector<DeficitExcess> result(h3.vertex_count());
    for (int x = 0; x < h3.vertex_count(); ++x) {
        result[x].deficit = Delta - h3.degree(x);
        int excess = 0;
        for (int e : h3.edges_at(x)) {
            const int r = h3.rank(e);
            if (r >= 4) excess += r - 3;
        }
        result[x].excess = excess;
    }
    return result;
}

}  // namespace lhc
