#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lhc/coloring.hpp"
#include "lhc/generators.hpp"
#include "lhc/hypergraph.hpp"

namespace lhc {

/// The bundled conjecture ids this tool checks at desk scale:
///   EFL  chromatic index at most n          (linear, no rank-1 edges)
///   C1   list chromatic index at most n     (list version of EFL)
///   C2   list chromatic index at most maxD + 1
///   C3   list chromatic index at most Delta*P - max(Delta, P) + 1
///   C4   list chromatic index at most Delta + 1 for graphs (list Vizing)
enum class Conjecture { EFL, C1, C2, C3, C4 };

const char* conjecture_name(Conjecture c);
Conjecture conjecture_from_name(const std::string& name);

/// The conjectured upper bound for this instance. Throws when the
/// hypotheses fail (non-linear, rank-1 edges; C4 additionally requires
/// all ranks equal to 2).
int conjectured_bound(const Hypergraph& h, Conjecture which);

enum class VerdictStatus { consistent, violated, undecided };

const char* verdict_status_name(VerdictStatus s);

/// Evidence gathered for one conjecture on one instance. The verdict is
/// `violated` only with a machine-checkable certificate: a clique of
/// pairwise-intersecting edges larger than the bound, or a list
/// assignment of size `bound` admitting no proper coloring.
struct ConjectureVerdict {
    Conjecture which = Conjecture::EFL;
    int bound = 0;
    int q_lower = 0;
    int q_upper = 0;
    std::optional<int> q_exact;
    std::optional<ChoosabilityVerdict> choosability;
    VerdictStatus status = VerdictStatus::undecided;
    std::string witness;                   // human-readable certificate summary
    std::vector<int> witness_clique;       // pairwise-intersecting edges, if any
    std::optional<ListAssignment> witness_lists;
};

ConjectureVerdict check_conjecture(const Hypergraph& h, Conjecture which,
                                   const SearchBudget& budget = {});

enum class ClauseStatus { verified, refuted, undecided };

const char* clause_status_name(ClauseStatus s);

/// Necessary conditions for being a minimal counterexample to C2, each
/// decided as far as desk-scale search allows:
///   - removal of any edge keeps maxD unchanged          (always decided)
///   - every edge has clique rank >= maxD                (always decided)
///   - the list chromatic index exceeds maxD + 1         (best effort)
///   - deleting any edge leaves list index maxD + 1      (best effort)
struct CriticalityReport {
    int maxD = 0;
    bool removal_preserves_maxD = false;
    int removal_violating_edge = -1;
    bool clique_rank_ge_maxD = false;
    int clique_rank_violating_edge = -1;
    ClauseStatus exceeds_bound = ClauseStatus::undecided;       // q_list > maxD + 1
    ClauseStatus deletion_tight = ClauseStatus::undecided;      // q_list(H\e) = maxD + 1
    int deletion_refuting_edge = -1;
    std::string evidence;
    /// When some edge has clique rank < maxD, an exact coloring of H
    /// minus that edge with maxD+1 colors was extended onto the edge and
    /// re-verified proper, confirming the instance is not critical.
    bool small_rank_extension_verified = false;
};

CriticalityReport critical_check(const Hypergraph& h, const SearchBudget& budget = {});

/// One CSV row of a conjecture sweep; columns follow the fixed schema.
struct SweepRow {
    int instance_id = 0;
    std::string kind;
    std::uint64_t seed = 0;
    AnalysisReport stats;
    std::optional<int> q_exact;
    int q_lower = 0;
    int q_upper = 0;
    int bound_efl = 0;
    int bound_c2 = 0;
    int bound_c3 = 0;
    std::string verdict_c1;
    std::string verdict_c2;
    std::string verdict_c3;
    std::string notes;
    std::string error;  // per-instance failures keep the sweep running
};

struct SweepResult {
    std::vector<SweepRow> rows;
    bool violation_found = false;
    int violating_instance = -1;
    std::string violating_conjecture;
    std::optional<Hypergraph> witness_instance;
    std::string witness_detail;
};

/// Runs every spec, gathers evidence for C1/C2/C3 on each instance, and
/// halts at the first violated verdict (rows up to and including the
/// violating instance are kept). Deterministic given the seeds.
SweepResult sweep(const std::vector<GenSpec>& specs, const SearchBudget& budget = {});

extern const char* const kSweepCsvHeader;
std::string sweep_row_to_csv(const SweepRow& row);

}  // namespace lhc
