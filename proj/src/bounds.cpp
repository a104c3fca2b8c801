#include "lhc/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "lhc/coloring.hpp"
#include "lhc/derived.hpp"

namespace lhc {

std::string rational_to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(std::stoll(text));
        }
        const long long num = std::stoll(text.substr(0, slash));
        const long long den = std::stoll(text.substr(slash + 1));
        return Rational(num, den);  // throws on zero denominator
    } catch (const boost::bad_rational&) {
        throw std::invalid_argument("invalid rational: " + text);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("invalid rational: " + text);
    }
}

namespace {

void require_linear(const Hypergraph& h, const char* who) {
    if (!validate(h).linear) {
        throw std::invalid_argument(std::string(who) + " requires a linear hypergraph");
    }
}

void require_no_rank1(const Hypergraph& h, const char* who) {
    for (int e = 0; e < h.edge_count(); ++e) {
        if (h.rank(e) < 2) {
            throw std::invalid_argument(std::string(who) + ": edge " + std::to_string(e) +
                                        " has rank 1");
        }
    }
}

const char* status_word(bool b) { return b ? "holds" : "fails"; }

}  // namespace

TriangleCounts triangle_counts(const Hypergraph& h) {
    require_linear(h, "triangle_counts");
    const int m = h.edge_count();
    // meet[i][j] = unique common vertex of edges i and j, or -1.
    std::vector<std::vector<int>> meet(m, std::vector<int>(m, -1));
    std::vector<std::vector<int>> neighbors(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const int x = meeting_vertex(h.edges()[i], h.edges()[j]);
            meet[i][j] = meet[j][i] = x;
            if (x >= 0) {
                neighbors[i].push_back(j);
                neighbors[j].push_back(i);
            }
        }
    }
    TriangleCounts counts;
    counts.t1.assign(m, 0);
    counts.t2.assign(m, 0);
    for (int e = 0; e < m; ++e) {
        const auto& around = neighbors[e];
        for (std::size_t a = 0; a < around.size(); ++a) {
            for (std::size_t b = a + 1; b < around.size(); ++b) {
                const int f = around[a], g = around[b];
                if (meet[f][g] < 0) continue;
                // In a linear hypergraph equal meeting points on e force
                // a single common vertex of all three edges.
                if (meet[e][f] == meet[e][g]) {
                    ++counts.t1[e];
                } else {
                    ++counts.t2[e];
                }
            }
        }
    }
    return counts;
}

bool covers_all_pairs_exactly_once(const Hypergraph& h) {
    const int n = h.vertex_count();
    if (n < 2) return true;
    long long covered = 0;
    for (const Edge& e : h.edges()) {
        const long long r = static_cast<long long>(e.size());
        covered += r * (r - 1) / 2;
    }
    if (covered != static_cast<long long>(n) * (n - 1) / 2) return false;
    std::vector<std::vector<int>> count(n);
    for (int x = 0; x < n; ++x) count[x].assign(n - x, 0);
    for (const Edge& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                if (++count[e[i]][e[j] - e[i]] > 1) return false;
            }
        }
    }
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (count[x][y - x] != 1) return false;
        }
    }
    return true;
}

Hypergraph uniformize(const Hypergraph& h) {
    const int target = h.max_rank();
    bool uniform = true;
    for (int e = 0; e < h.edge_count(); ++e) {
        if (h.rank(e) != target) {
            uniform = false;
            break;
        }
    }
    if (uniform) return h;
    std::vector<Edge> edges = h.edges();
    int fresh = h.vertex_count();
    for (Edge& e : edges) {
        while (static_cast<int>(e.size()) < target) e.push_back(fresh++);
    }
    return Hypergraph(fresh, std::move(edges), EdgeOrder::preserve);
}

UniformSparsityDiagnostics uniform_sparsity_diagnostics(const Hypergraph& h, const Rational& C) {
    require_linear(h, "uniform_sparsity_diagnostics");
    const int P = h.max_rank();
    const int rho = h.min_rank();
    if (h.edge_count() == 0 || rho != P) {
        throw std::invalid_argument("diagnostics require a non-empty uniform hypergraph");
    }
    if (P < 3) {
        throw std::invalid_argument("diagnostics require rank >= 3 (got " + std::to_string(P) +
                                    ")");
    }

    UniformSparsityDiagnostics d;
    const int r = P;
    const int Delta = h.max_degree();
    d.rank = r;
    d.max_degree = Delta;
    d.clique_degree_bound = static_cast<long long>(Delta) * (r - 1);
    const long long k = d.clique_degree_bound;
    d.line_degree_bound = Rational(r) * Rational(k + 1 - r, r - 1);
    d.degree_bound = Rational(k, r - 1);
    d.degree_bound_from_line = d.line_degree_bound / r + 1;
    d.clique_bound_le_line_bound = Rational(k) <= d.line_degree_bound;

    const Rational& R = d.line_degree_bound;
    if (R > 0) {
        const Rational inv_f = Rational(1, 2LL * r) + Rational((r - 1) * (r - 1)) / (2 * R);
        d.sparsity_f = 1 / inv_f;
        d.triangle_bound = R * R / *d.sparsity_f;
    }
    Rational t1 = (R / 2) * (R / r - 1);
    if (t1 < 0) {
        t1 = 0;
        d.t1_bound_clamped = true;
    }
    d.t1_bound = t1;
    d.t2_bound = R * Rational((r - 1) * (r - 1)) / 2;

    d.constant_C = C;
    d.hypothesis_holds = Rational(r) >= C && C >= 3 && Rational(Delta) >= C * (r - 1);

    // Instance verification of the whole chain.
    d.measured_max_line_degree = max_clique_rank(h);
    const TriangleCounts tc = triangle_counts(h);
    for (int e = 0; e < h.edge_count(); ++e) {
        d.measured_max_t1 = std::max(d.measured_max_t1, tc.t1[e]);
        d.measured_max_t2 = std::max(d.measured_max_t2, tc.t2[e]);
        d.measured_max_t = std::max(d.measured_max_t, tc.t(e));
    }
    d.line_degrees_within_bound = Rational(d.measured_max_line_degree) <= R;
    d.degrees_within_bound = Rational(Delta) <= d.degree_bound_from_line;
    d.t1_within_bound = Rational(d.measured_max_t1) <= d.t1_bound;
    d.t2_within_bound = Rational(d.measured_max_t2) <= d.t2_bound;
    d.t_within_bound =
        d.triangle_bound ? Rational(d.measured_max_t) <= *d.triangle_bound
                         : d.measured_max_t == 0;
    return d;
}

ConditionReport dense_case_condition(const Hypergraph& h) {
    require_no_rank1(h, "dense_case_condition");
    require_linear(h, "dense_case_condition");
    const int n = h.vertex_count();
    const int Delta = h.max_degree();
    const int rho = h.min_rank();
    const long long degree_side = static_cast<long long>(Delta - 1) * (Delta - 1);
    const long long rank_side = static_cast<long long>(rho) * rho;
    const bool low_degree = n > degree_side;
    const bool high_rank = h.edge_count() > 0 && n < rank_side;
    ConditionReport report;
    report.id = "dense_case";
    report.status = (low_degree || high_rank) ? ConditionStatus::holds : ConditionStatus::fails;
    report.detail = "n > (Delta-1)^2: " + std::to_string(n) + " > " +
                    std::to_string(degree_side) + " " + status_word(low_degree) +
                    "; n < rho^2: " + std::to_string(n) + " < " + std::to_string(rank_side) +
                    " " + status_word(high_rank);
    if (report.holds()) report.detail += "; concludes a list coloring with n colors";
    return report;
}

ConditionReport high_degree_uniform_condition(const Hypergraph& h, const Rational& C) {
    require_no_rank1(h, "high_degree_uniform_condition");
    const AnalysisReport stats = analyze(h);
    const bool rank_ok = Rational(stats.P) >= C && C >= 3;
    const bool degree_ok = Rational(stats.Delta) >= C * (stats.P - 1);
    const long long product = static_cast<long long>(stats.Delta) * (stats.P - 1);
    const bool size_ok = stats.uniform || stats.n > product;
    ConditionReport report;
    report.id = "high_degree_uniform";
    report.status =
        (rank_ok && degree_ok && size_ok) ? ConditionStatus::holds : ConditionStatus::fails;
    report.detail = "P >= C >= 3 with C = " + rational_to_string(C) + ": " +
                    status_word(rank_ok) + "; Delta >= C(P-1): " +
                    std::to_string(stats.Delta) + " vs " + rational_to_string(C * (stats.P - 1)) +
                    " " + status_word(degree_ok) + "; uniform or n > Delta(P-1): " +
                    (stats.uniform ? "uniform" : std::to_string(stats.n) + " vs " +
                                                     std::to_string(product)) +
                    " " + status_word(size_ok);
    if (report.holds()) {
        report.detail += "; concludes a list coloring with n - 1 colors, conditional on the "
                         "universal constant C";
    }
    return report;
}

ConditionReport extension_margin_condition(const Hypergraph& h) {
    const RankSplit split = split_by_rank(h);
    const int margin = h.vertex_count() - 2 * split.h3.max_degree() - 1;
    const int d2 = split.h2.max_degree();
    ConditionReport report;
    report.id = "extension_margin";
    report.status = d2 <= margin ? ConditionStatus::holds : ConditionStatus::fails;
    report.detail = "max degree of rank-2 part " + std::to_string(d2) +
                    " <= n - 2*Delta(h3) - 1 = " + std::to_string(margin) + ": " +
                    status_word(d2 <= margin);
    return report;
}

ConditionReport clique_degree_extension_condition(const Hypergraph& h) {
    const RankSplit split = split_by_rank(h);
    ConditionReport report;
    report.id = "clique_degree_extension";
    if (!covers_all_pairs_exactly_once(h)) {
        report.status = ConditionStatus::inapplicable;
        report.detail = "requires every vertex pair to lie in exactly one edge";
        return report;
    }
    const int threshold = 2 * split.h3.max_degree();
    int worst_vertex = -1, worst = 0;
    for (int x = 0; x < h.vertex_count(); ++x) {
        const int d = clique_degree(split.h3, x);
        if (worst_vertex < 0 || d < worst) {
            worst_vertex = x;
            worst = d;
        }
    }
    const bool ok = worst_vertex < 0 || worst >= threshold;
    report.status = ok ? ConditionStatus::holds : ConditionStatus::fails;
    report.detail = "min clique degree in rank>=3 part is " + std::to_string(worst) +
                    " (vertex " + std::to_string(worst_vertex) + "), threshold 2*Delta = " +
                    std::to_string(threshold) + ": " + status_word(ok);
    return report;
}

ConditionReport deficit_excess_extension_condition(const Hypergraph& h) {
    const RankSplit split = split_by_rank(h);
    ConditionReport report;
    report.id = "deficit_excess_extension";
    if (!covers_all_pairs_exactly_once(h)) {
        report.status = ConditionStatus::inapplicable;
        report.detail = "requires every vertex pair to lie in exactly one edge";
        return report;
    }
    const auto table = deficit_excess(split.h3, split.h3.max_degree());
    for (int x = 0; x < h.vertex_count(); ++x) {
        if (table[x].excess < 2 * table[x].deficit) {
            report.status = ConditionStatus::fails;
            report.detail = "vertex " + std::to_string(x) + " has excess " +
                            std::to_string(table[x].excess) + " < 2 * deficit " +
                            std::to_string(table[x].deficit);
            return report;
        }
    }
    report.status = ConditionStatus::holds;
    report.detail = "excess >= 2 * deficit at every vertex of the rank>=3 part";
    return report;
}

}  // namespace lhc
