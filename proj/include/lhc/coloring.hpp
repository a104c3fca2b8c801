#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lhc/derived.hpp"
#include "lhc/hypergraph.hpp"

namespace lhc {

/// Edge-indexed color assignment; -1 marks an uncolored edge in partial
/// results. Proper means intersecting edges receive distinct colors.
struct EdgeColoring {
    std::vector<int> colors;
};

/// Edge-indexed admissible color sets (each sorted ascending).
struct ListAssignment {
    std::vector<std::vector<int>> lists;
};

/// Node/assignment/time limits for the search routines. A zero time
/// limit means unlimited; node limits keep default runs deterministic.
struct SearchBudget {
    long long max_nodes = 10'000'000;
    long long max_assignments = 1'000'000;
    int max_time_ms = 0;
    int max_edges_exact = 40;
    int max_edges_choosability = 8;
    int max_list_size_choosability = 5;
};

bool is_proper(const Hypergraph& h, const EdgeColoring& coloring);

struct GreedyResult {
    bool success = false;
    EdgeColoring coloring;         // partial on failure
    int stuck_edge = -1;
    std::vector<int> stuck_list;   // the exhausted list of the stuck edge
};

/// Processes edges in the given order, assigning each the smallest color
/// in its list unused by already-colored intersecting edges. Succeeds
/// whenever every list has more colors than the edge's back-degree in
/// the order; failure is a value, never an exception.
GreedyResult greedy_list_color(const Hypergraph& h, const ListAssignment& lists,
                               const std::vector<int>& order);

/// greedy_list_color with every list equal to {1, ..., k}.
GreedyResult greedy_color(const Hypergraph& h, int k, const std::vector<int>& order);

std::vector<int> input_order(int m);
std::vector<int> decreasing_clique_rank_order(const Hypergraph& h);
std::vector<int> shuffled_order(int m, std::uint64_t seed);

struct ChromaticIndexResult {
    bool exact = false;
    int lower = 0;                  // best proven lower bound
    int upper = 0;                  // best constructive upper bound
    EdgeColoring coloring;          // proper coloring with `upper` colors (1-based)
    std::vector<int> clique;        // pairwise-intersecting edges witnessing `lower`
    long long nodes = 0;
    int value() const { return upper; }  // equals lower when exact
};

/// Exact chromatic index, computed as the chromatic number of the line
/// graph by branch and bound (saturation ordering, greedy clique lower
/// bound, greedy initial upper bound, new-color symmetry breaking).
/// When the budget runs out the result carries the best bounds found.
/// Throws when edge_count exceeds budget.max_edges_exact.
ChromaticIndexResult chromatic_index_exact(const Hypergraph& h, const SearchBudget& budget = {});

/// Chromatic number of a graph; the engine behind chromatic_index_exact.
struct GraphColoringResult {
    bool exact = false;
    int lower = 0;
    int upper = 0;
    std::vector<int> colors;  // 0-based, size n, proper with `upper` colors
    std::vector<int> clique;
    long long nodes = 0;
};
GraphColoringResult chromatic_number(const Graph& g, const SearchBudget& budget = {});

enum class Choosability { choosable, not_choosable, inconclusive };

struct ChoosabilityVerdict {
    Choosability status = Choosability::inconclusive;
    std::optional<ListAssignment> witness;  // present iff not_choosable
    long long assignments_examined = 0;
    bool limit_hit = false;
};

/// Decides whether every assignment of k-color lists admits a proper
/// coloring. Enumeration covers one representative of every assignment
/// up to color renaming (colors drawn from a universe of k*m ids, new
/// colors introduced as a prefix); each representative is tested by
/// backtracking list coloring of the line graph. Throws when the edge
/// count or k exceed the configured caps.
ChoosabilityVerdict is_k_choosable(const Hypergraph& h, int k, const SearchBudget& budget = {});

/// Re-check a not_choosable witness: true iff no proper coloring exists
/// from the given lists. Plain recursion over edges, independent of the
/// solver's line-graph search.
bool admits_no_coloring(const Hypergraph& h, const ListAssignment& lists);

struct ExtensionResult {
    bool success = false;
    EdgeColoring coloring;               // over the parent's edges when successful
    std::vector<int> available_counts;   // per rank-2 edge, after removing colors
                                         // used by rank>=3 edges at its endpoints
    int min_available = 0;
    bool counts_within_bound = false;    // every count >= n_colors - 2*Delta(h3)
    bool hypothesis_holds = false;       // max degree of h2 <= n - 2*Delta(h3) - 1
    std::string note;                    // warnings / failure details
};

/// Extends a proper coloring of the rank>=3 part to the rank-2 part by
/// exact list coloring: each rank-2 edge's list is reduced by the colors
/// already used at its endpoints, then the rank-2 edges are colored by
/// backtracking. Every rank-2 list must have at least n_colors colors.
ExtensionResult extend_coloring(const Hypergraph& h, const EdgeColoring& h3_coloring,
                                const ListAssignment& h2_lists, int n_colors,
                                const SearchBudget& budget = {});

struct DeficitExcess {
    int deficit = 0;  // Delta - degree(x)
    int excess = 0;   // sum over ranks k >= 4 of (k - 3) * (rank-k edges at x)
};

/// Per-vertex deficit/excess of a rank>=3 hypergraph relative to Delta.
/// Throws when Delta is below the actual maximum degree.
std::vector<DeficitExcess> deficit_excess(const Hypergraph& h3, int Delta);

}  // namespace lhc
