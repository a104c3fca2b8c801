#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "lhc/coloring.hpp"

namespace lhc {

namespace {

// Backtracking list coloring over edges [0, limit) of the line graph.
bool prefix_colorable(const std::vector<std::vector<int>>& lists,
                      const std::vector<std::uint32_t>& adj, int limit,
                      std::vector<int>& colors, int e) {
    if (e == limit) return true;
    for (int c : lists[e]) {
        bool clash = false;
        for (std::uint32_t rest = adj[e] & ((1u << e) - 1); rest != 0; rest &= rest - 1) {
            if (colors[__builtin_ctz(rest)] == c) {
                clash = true;
                break;
            }
        }
        if (clash) continue;
        colors[e] = c;
        if (prefix_colorable(lists, adj, limit, colors, e + 1)) return true;
    }
    colors[e] = -1;
    return false;
}

struct Enumerator {
    const int m;
    const int k;
    const std::vector<std::uint32_t>& adj;
    long long check_limit;
    std::chrono::steady_clock::time_point deadline;
    bool timed = false;

    std::vector<std::vector<int>> lists;
    std::vector<int> scratch_colors;
    long long assignments = 0;
    long long checks = 0;
    bool limit_hit = false;
    std::optional<ListAssignment> witness;

    Enumerator(int edges, int list_size, const std::vector<std::uint32_t>& adjacency,
               const SearchBudget& budget)
        : m(edges), k(list_size), adj(adjacency), check_limit(budget.max_assignments),
          lists(edges), scratch_colors(edges, -1) {
        if (budget.max_time_ms > 0) {
            timed = true;
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::milliseconds(budget.max_time_ms);
        }
    }

    bool out_of_budget() {
        if (checks >= check_limit) return true;
        if (timed && (checks & 255) == 0 &&
            std::chrono::steady_clock::now() >= deadline) {
            return true;
        }
        return false;
    }

    // Lists for edges beyond `upto` are pairwise disjoint fresh colors,
    // which cannot interfere with the uncolorable prefix.
    void freeze_witness(int upto, int used) {
        ListAssignment w;
        w.lists = lists;
        int next = used;
        for (int j = upto; j < m; ++j) {
            std::vector<int> fresh(k);
            for (int c = 0; c < k; ++c) fresh[c] = next++;
            w.lists[j] = std::move(fresh);
        }
        witness = std::move(w);
    }

    // Returns true when the search is finished (witness found or budget
    // exhausted); false means the subtree was fully enumerated clean.
    bool enumerate(int e, int used) {
        if (e == m) {
            ++assignments;
            return false;  // leaf already verified colorable at e-1
        }
        for (int fresh = 0; fresh <= k; ++fresh) {
            const int old_part = k - fresh;
            if (old_part > used) continue;
            // lexicographic old_part-subsets of {0..used-1}
            std::vector<int> pick(old_part);
            for (int i = 0; i < old_part; ++i) pick[i] = i;
            while (true) {
                auto& list = lists[e];
                list.assign(pick.begin(), pick.end());
                for (int c = 0; c < fresh; ++c) list.push_back(used + c);

                if (out_of_budget()) {
                    limit_hit = true;
                    return true;
                }
                ++checks;
                std::fill(scratch_colors.begin(), scratch_colors.end(), -1);
                if (!prefix_colorable(lists, adj, e + 1, scratch_colors, 0)) {
                    freeze_witness(e + 1, used + fresh);
                    return true;
                }
                if (enumerate(e + 1, used + fresh)) return true;

                // next combination
                int i = old_part - 1;
                while (i >= 0 && pick[i] == used - old_part + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < old_part; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        lists[e].clear();
        return false;
    }
};

}  // namespace

ChoosabilityVerdict is_k_choosable(const Hypergraph& h, int k, const SearchBudget& budget) {
    if (k < 1) throw std::invalid_argument("list size must be at least 1");
    if (h.edge_count() > budget.max_edges_choosability) {
        throw std::invalid_argument("instance has " + std::to_string(h.edge_count()) +
                                    " edges; choosability search is capped at " +
                                    std::to_string(budget.max_edges_choosability));
    }
    if (k > budget.max_list_size_choosability) {
        throw std::invalid_argument("list size " + std::to_string(k) +
                                    " exceeds the cap of " +
                                    std::to_string(budget.max_list_size_choosability));
    }

    ChoosabilityVerdict verdict;
    const int m = h.edge_count();
    if (m == 0) {
        verdict.status = Choosability::choosable;
        return verdict;
    }

    std::vector<std::uint32_t> adj(m, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i != j && edges_intersect(h.edges()[i], h.edges()[j])) adj[i] |= 1u << j;
        }
    }

    Enumerator search(m, k, adj, budget);
    search.enumerate(0, 0);
    verdict.assignments_examined = search.assignments;
    verdict.limit_hit = search.limit_hit;
    if (search.witness) {
        // Re-check the witness through the independent path before
        // committing to a negative verdict.
        if (!admits_no_coloring(h, *search.witness)) {
            throw std::logic_error("choosability witness failed re-verification");
        }
        verdict.status = Choosability::not_choosable;
        verdict.witness = std::move(search.witness);
    } else if (search.limit_hit) {
        verdict.status = Choosability::inconclusive;
    } else {
        verdict.status = Choosability::choosable;
    }
    return verdict;
}

bool admits_no_coloring(const Hypergraph& h, const ListAssignment& lists) {
    const int m = h.edge_count();
    if (static_cast<int>(lists.lists.size()) != m) {
        throw std::invalid_argument("list assignment does not cover all edges");
    }
    std::vector<int> colors(m, -1);
    // Direct recursion on the hypergraph, no precomputed adjacency.
    auto search = [&](auto&& self, int e) -> bool {
        if (e == m) return true;
        for (int c : lists.lists[e]) {
            bool clash = false;
            for (int f = 0; f < e; ++f) {
                if (colors[f] == c && edges_intersect(h.edges()[e], h.edges()[f])) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            colors[e] = c;
            if (self(self, e + 1)) return true;
            colors[e] = -1;
        }
        return false;
    };
    return !search(search, 0);
}

}  // namespace lhc
