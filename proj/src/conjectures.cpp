#include "lhc/conjectures.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lhc/derived.hpp"

namespace lhc {

const char* conjecture_name(Conjecture c) {
    switch (c) {
        case Conjecture::EFL: return "EFL";
        case Conjecture::C1: return "C1";
        case Conjecture::C2: return "C2";
        case Conjecture::C3: return "C3";
        case Conjecture::C4: return "C4";
    }
    return "?";
}

Conjecture conjecture_from_name(const std::string& name) {
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == "efl") return Conjecture::EFL;
    if (lower == "c1") return Conjecture::C1;
    if (lower == "c2") return Conjecture::C2;
    if (lower == "c3") return Conjecture::C3;
    if (lower == "c4") return Conjecture::C4;
    throw std::invalid_argument("unknown conjecture: " + name);
}

const char* verdict_status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::consistent: return "consistent";
        case VerdictStatus::violated: return "violated";
        case VerdictStatus::undecided: return "undecided";
    }
    return "?";
}

const char* clause_status_name(ClauseStatus s) {
    switch (s) {
        case ClauseStatus::verified: return "verified";
        case ClauseStatus::refuted: return "refuted";
        case ClauseStatus::undecided: return "undecided";
    }
    return "?";
}

namespace {

void require_conjecture_hypotheses(const Hypergraph& h, Conjecture which) {
    for (int e = 0; e < h.edge_count(); ++e) {
        if (h.rank(e) < 2) {
            throw std::invalid_argument("conjecture hypotheses exclude rank-1 edges (edge " +
                                        std::to_string(e) + ")");
        }
    }
    if (!validate(h).linear) {
        throw std::invalid_argument("conjecture hypotheses require a linear hypergraph");
    }
    if (which == Conjecture::C4) {
        for (int e = 0; e < h.edge_count(); ++e) {
            if (h.rank(e) != 2) {
                throw std::invalid_argument("C4 applies to graphs only (edge " +
                                            std::to_string(e) + " has rank " +
                                            std::to_string(h.rank(e)) + ")");
            }
        }
    }
}

bool is_list_conjecture(Conjecture which) { return which != Conjecture::EFL; }

}  // namespace

int conjectured_bound(const Hypergraph& h, Conjecture which) {
    require_conjecture_hypotheses(h, which);
    switch (which) {
        case Conjecture::EFL:
        case Conjecture::C1:
            return h.vertex_count();
        case Conjecture::C2:
            return max_clique_degree(h) + 1;
        case Conjecture::C3: {
            const int Delta = h.max_degree();
            const int P = h.max_rank();
            return Delta * P - std::max(Delta, P) + 1;
        }
        case Conjecture::C4:
            return h.max_degree() + 1;
    }
    throw std::invalid_argument("unknown conjecture");
}

ConjectureVerdict check_conjecture(const Hypergraph& h, Conjecture which,
                                   const SearchBudget& budget) {
    ConjectureVerdict verdict;
    verdict.which = which;
    verdict.bound = conjectured_bound(h, which);

    // Chromatic-index evidence. q <= q_list, so q above the bound
    // refutes the list conjectures outright.
    ChromaticIndexResult q;
    if (h.edge_count() <= budget.max_edges_exact) {
        q = chromatic_index_exact(h, budget);
    } else {
        const GreedyResult greedy =
            greedy_color(h, max_clique_rank(h) + 1, decreasing_clique_rank_order(h));
        q.exact = false;
        q.lower = 0;
        q.upper = 0;
        for (int c : greedy.coloring.colors) q.upper = std::max(q.upper, c);
    }
    verdict.q_lower = q.lower;
    verdict.q_upper = q.upper;
    if (q.exact) verdict.q_exact = q.upper;

    if (q.lower > verdict.bound) {
        verdict.status = VerdictStatus::violated;
        verdict.witness_clique = q.clique;
        verdict.witness = "chromatic index is at least " + std::to_string(q.lower) +
                          " > bound " + std::to_string(verdict.bound) +
                          (q.exact ? " (exact)" : " (lower bound)");
        if (static_cast<int>(q.clique.size()) > verdict.bound) {
            verdict.witness += "; certificate: " + std::to_string(q.clique.size()) +
                               " pairwise-intersecting edges";
        }
        return verdict;
    }

    // Positive list evidence where the search is feasible.
    if (is_list_conjecture(which) && h.edge_count() <= budget.max_edges_choosability &&
        verdict.bound >= 1 && verdict.bound <= budget.max_list_size_choosability) {
        verdict.choosability = is_k_choosable(h, verdict.bound, budget);
        if (verdict.choosability->status == Choosability::not_choosable) {
            verdict.status = VerdictStatus::violated;
            verdict.witness_lists = verdict.choosability->witness;
            verdict.witness = "a " + std::to_string(verdict.bound) +
                              "-list assignment admits no proper coloring";
            return verdict;
        }
    }

    if (q.exact) {
        verdict.status = VerdictStatus::consistent;
        verdict.witness = is_list_conjecture(which) &&
                                  (!verdict.choosability ||
                                   verdict.choosability->status != Choosability::choosable)
                              ? "chromatic-index evidence only"
                              : "";
        return verdict;
    }
    if (!is_list_conjecture(which) && q.upper > 0 && q.upper <= verdict.bound) {
        verdict.status = VerdictStatus::consistent;
        verdict.witness = "constructive coloring with " + std::to_string(q.upper) + " colors";
        return verdict;
    }
    if (verdict.choosability && verdict.choosability->status == Choosability::choosable) {
        verdict.status = VerdictStatus::consistent;
        return verdict;
    }
    if (is_list_conjecture(which) && q.upper > 0 && q.upper <= verdict.bound) {
        // The bound is respected by everything we could measure.
        verdict.status = VerdictStatus::consistent;
        verdict.witness = "chromatic-index evidence only (upper bound)";
        return verdict;
    }
    verdict.status = VerdictStatus::undecided;
    return verdict;
}

CriticalityReport critical_check(const Hypergraph& h, const SearchBudget& budget) {
    for (int e = 0; e < h.edge_count(); ++e) {
        if (h.rank(e) < 2) {
            throw std::invalid_argument("criticality check excludes rank-1 edges");
        }
    }
    if (!validate(h).linear) {
        throw std::invalid_argument("criticality check requires a linear hypergraph");
    }

    CriticalityReport report;
    report.maxD = max_clique_degree(h);
    std::ostringstream evidence;

    report.removal_preserves_maxD = true;
    report.clique_rank_ge_maxD = true;
    for (int e = 0; e < h.edge_count(); ++e) {
        if (report.removal_preserves_maxD &&
            max_clique_degree(remove_edge(h, e)) != report.maxD) {
            report.removal_preserves_maxD = false;
            report.removal_violating_edge = e;
        }
        if (report.clique_rank_ge_maxD && clique_rank(h, e) < report.maxD) {
            report.clique_rank_ge_maxD = false;
            report.clique_rank_violating_edge = e;
        }
    }

    const int target = report.maxD + 1;

    // q_list(H) > maxD + 1: a chromatic index above the target verifies
    // it; choosability at the target decides it either way.
    if (h.edge_count() <= budget.max_edges_exact) {
        const ChromaticIndexResult q = chromatic_index_exact(h, budget);
        if (q.exact) {
            evidence << "q=" << q.upper << "; ";
            if (q.upper > target) report.exceeds_bound = ClauseStatus::verified;
        } else if (q.lower > target) {
            evidence << "q>=" << q.lower << "; ";
            report.exceeds_bound = ClauseStatus::verified;
        }
    }
    if (report.exceeds_bound == ClauseStatus::undecided &&
        h.edge_count() <= budget.max_edges_choosability && target >= 1 &&
        target <= budget.max_list_size_choosability) {
        const ChoosabilityVerdict c = is_k_choosable(h, target, budget);
        if (c.status == Choosability::choosable) {
            report.exceeds_bound = ClauseStatus::refuted;
            evidence << "choosable at " << target << "; ";
        } else if (c.status == Choosability::not_choosable) {
            report.exceeds_bound = ClauseStatus::verified;
            evidence << "not choosable at " << target << "; ";
        }
    }

    // q_list(H \ e) = maxD + 1 for every e: needs choosable at the
    // target and not choosable below it, per deleted edge.
    if (h.edge_count() > 0 && h.edge_count() - 1 <= budget.max_edges_choosability &&
        target >= 2 && target <= budget.max_list_size_choosability) {
        ClauseStatus overall = ClauseStatus::verified;
        for (int e = 0; e < h.edge_count(); ++e) {
            const Hypergraph rest = remove_edge(h, e);
            const ChoosabilityVerdict at = is_k_choosable(rest, target, budget);
            const ChoosabilityVerdict below = is_k_choosable(rest, target - 1, budget);
            const bool decided = at.status != Choosability::inconclusive &&
                                 below.status != Choosability::inconclusive;
            if (!decided) {
                overall = ClauseStatus::undecided;
                break;
            }
            if (at.status != Choosability::choosable ||
                below.status != Choosability::not_choosable) {
                overall = ClauseStatus::refuted;
                report.deletion_refuting_edge = e;
                break;
            }
        }
        report.deletion_tight = overall;
    }

    // A small-clique-rank edge certifies non-criticality constructively:
    // color the rest with maxD+1 colors and a free color remains for it.
    if (!report.clique_rank_ge_maxD && h.edge_count() - 1 <= budget.max_edges_exact) {
        const int e = report.clique_rank_violating_edge;
        const Hypergraph rest = remove_edge(h, e);
        std::map<Edge, int> parent_index;
        for (int f = 0; f < h.edge_count(); ++f) parent_index[h.edges()[f]] = f;
        const ChromaticIndexResult q = chromatic_index_exact(rest, budget);
        if (q.exact && q.upper <= target) {
            std::vector<bool> used(target + 2, false);
            for (int f = 0; f < rest.edge_count(); ++f) {
                if (edges_intersect(rest.edges()[f], h.edges()[e])) {
                    used[std::min<int>(q.coloring.colors[f], target + 1)] = true;
                }
            }
            int free_color = -1;
            for (int c = 1; c <= target; ++c) {
                if (!used[c]) {
                    free_color = c;
                    break;
                }
            }
            if (free_color > 0) {
                EdgeColoring full;
                full.colors.assign(h.edge_count(), -1);
                for (int f = 0; f < rest.edge_count(); ++f) {
                    full.colors[parent_index.at(rest.edges()[f])] = q.coloring.colors[f];
                }
                full.colors[e] = free_color;
                report.small_rank_extension_verified = is_proper(h, full);
                evidence << "edge " << e << " extended with color " << free_color
                         << " onto a " << q.upper << "-coloring of the rest; ";
            }
        }
    }

    report.evidence = evidence.str();
    return report;
}

const char* const kSweepCsvHeader =
    "instance_id,kind,seed,n,m,delta,Delta,rho,P,maxD,maxR,linear,uniform,regular,"
    "q_exact,q_lower,q_upper,bound_efl,bound_c2,bound_c3,"
    "verdict_c1,verdict_c2,verdict_c3,notes";

namespace {

std::string csv_safe(std::string text) {
    std::replace(text.begin(), text.end(), ',', ';');
    std::replace(text.begin(), text.end(), '\n', ' ');
    return text;
}

// Classifies one conjecture from shared chromatic-index evidence; the
// sweep gathers list evidence through q only (q <= q_list).
VerdictStatus classify_from_q(int bound, const ChromaticIndexResult& q) {
    if (q.lower > bound) return VerdictStatus::violated;
    if (q.exact) return VerdictStatus::consistent;
    if (q.upper > 0 && q.upper <= bound) return VerdictStatus::consistent;
    return VerdictStatus::undecided;
}

}  // namespace

SweepResult sweep(const std::vector<GenSpec>& specs, const SearchBudget& budget) {
    SweepResult result;
    int id = 0;
    for (const GenSpec& spec : specs) {
        SweepRow row;
        row.instance_id = id++;
        row.kind = gen_kind_name(spec.kind);
        row.seed = spec.seed;
        Hypergraph h;
        try {
            GeneratedInstance instance = make_instance(spec);
            h = std::move(instance.hypergraph);
            if (instance.truncated) row.notes += "truncated;";
            if (spec.kind == GenKind::random_linear) row.notes += std::string("rng=") +
                                                                  kRandomSourceId + ";";
        } catch (const std::exception& e) {
            row.error = e.what();
            row.notes += "generation failed: " + std::string(e.what());
            result.rows.push_back(std::move(row));
            continue;
        }

        try {
            row.stats = analyze(h);
            if (row.stats.n >= 1 && row.stats.maxD + 1 > row.stats.n) {
                // Contradicts maxD <= n - 1 for linear no-rank-1 instances.
                throw std::logic_error("maxD + 1 exceeds n on a linear instance");
            }
            row.bound_efl = conjectured_bound(h, Conjecture::C1);
            row.bound_c2 = conjectured_bound(h, Conjecture::C2);
            row.bound_c3 = conjectured_bound(h, Conjecture::C3);

            ChromaticIndexResult q;
            if (h.edge_count() <= budget.max_edges_exact) {
                q = chromatic_index_exact(h, budget);
                if (!q.exact) row.notes += "budget exhausted;";
            } else {
                const GreedyResult greedy =
                    greedy_color(h, max_clique_rank(h) + 1, decreasing_clique_rank_order(h));
                for (int c : greedy.coloring.colors) q.upper = std::max(q.upper, c);
                row.notes += "exact solver skipped (m too large);";
            }
            if (q.exact) row.q_exact = q.upper;
            row.q_lower = q.lower;
            row.q_upper = q.upper;

            const struct {
                Conjecture which;
                int bound;
                std::string* verdict;
            } checks[] = {
                {Conjecture::C1, row.bound_efl, &row.verdict_c1},
                {Conjecture::C2, row.bound_c2, &row.verdict_c2},
                {Conjecture::C3, row.bound_c3, &row.verdict_c3},
            };
            for (const auto& check : checks) {
                const VerdictStatus status = classify_from_q(check.bound, q);
                *check.verdict = verdict_status_name(status);
                if (status == VerdictStatus::violated && !result.violation_found) {
                    result.violation_found = true;
                    result.violating_instance = row.instance_id;
                    result.violating_conjecture = conjecture_name(check.which);
                    result.witness_instance = h;
                    result.witness_detail =
                        "chromatic index at least " + std::to_string(q.lower) + " > bound " +
                        std::to_string(check.bound) + " for " + conjecture_name(check.which);
                }
            }
        } catch (const std::exception& e) {
            row.error = e.what();
            row.notes += "error: " + std::string(e.what());
        }
        result.rows.push_back(std::move(row));
        if (result.violation_found) break;  // halt-and-dump, never bury a violation
    }
    return result;
}

std::string sweep_row_to_csv(const SweepRow& row) {
    std::ostringstream out;
    out << row.instance_id << ',' << row.kind << ',' << row.seed << ',' << row.stats.n << ','
        << row.stats.m << ',' << row.stats.delta << ',' << row.stats.Delta << ','
        << row.stats.rho << ',' << row.stats.P << ',' << row.stats.maxD << ','
        << row.stats.maxR << ',' << (row.stats.linear ? 1 : 0) << ','
        << (row.stats.uniform ? 1 : 0) << ',' << (row.stats.regular ? 1 : 0) << ',';
    if (row.q_exact) out << *row.q_exact;
    out << ',' << row.q_lower << ',' << row.q_upper << ',' << row.bound_efl << ','
        << row.bound_c2 << ',' << row.bound_c3 << ',' << row.verdict_c1 << ','
        << row.verdict_c2 << ',' << row.verdict_c3 << ',' << csv_safe(row.notes);
    return out.str();
}

}  // namespace lhc
