#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "lhc/hypergraph.hpp"

namespace lhc {

/// Exact rational arithmetic for every bound quantity, so no condition
/// can flip on floating-point rounding.
using Rational = boost::rational<long long>;

std::string rational_to_string(const Rational& r);
/// Accepts "p" or "p/q"; throws on anything else.
Rational parse_rational(const std::string& text);

/// Per-edge triangle counts. A triangle with side e is an unordered pair
/// {f, g} of further edges with e, f, g pairwise intersecting; t1 counts
/// the concurrent ones (all three through a common vertex), t2 those
/// meeting pairwise at three distinct vertices. Linearity makes the
/// classification exhaustive.
struct TriangleCounts {
    std::vector<long long> t1;
    std::vector<long long> t2;
    long long t(int e) const { return t1[e] + t2[e]; }
};

/// Throws on non-linear input.
TriangleCounts triangle_counts(const Hypergraph& h);

/// True iff every vertex pair lies in exactly one edge.
bool covers_all_pairs_exactly_once(const Hypergraph& h);

/// Pads every edge with fresh degree-1 vertices up to the maximum rank.
/// Edge order is preserved so edge indices (and hence the line graph)
/// stay aligned with the input; an already-uniform instance is returned
/// unchanged.
Hypergraph uniformize(const Hypergraph& h);

/**
 * Degree and triangle bounds for a uniform linear hypergraph of rank
 * r >= 3, all as exact rationals, together with their verification on
 * the instance. With k = Delta*(r-1):
 *
 *   every degree       <= k/(r-1)
 *   every clique rank  <= R = r*(k+1-r)/(r-1)   (line-graph degree bound)
 *   every degree       <= R/r + 1
 *   t1(e) <= (R/2)(R/r - 1),  t2(e) <= R(r-1)^2/2,  t(e) <= R^2/f
 *
 * where 1/f = 1/(2r) + (r-1)^2/(2R). f (and the triangle bound) are
 * absent when R <= 0, and the t1 bound is clamped at zero and flagged
 * on degenerate instances.
 */
struct UniformSparsityDiagnostics {
    int rank = 0;
    int max_degree = 0;
    long long clique_degree_bound = 0;       // k = Delta*(rank-1)
    Rational line_degree_bound;              // R
    Rational degree_bound;                   // k/(rank-1)
    Rational degree_bound_from_line;         // R/rank + 1
    bool clique_bound_le_line_bound = false; // k <= R
    std::optional<Rational> sparsity_f;
    std::optional<Rational> triangle_bound;  // R^2/f
    Rational t1_bound;
    bool t1_bound_clamped = false;
    Rational t2_bound;

    // hypothesis of the conditional list-coloring bound, for a supplied
    // constant C: rank >= C >= 3 and Delta >= C*(rank-1)
    Rational constant_C;
    bool hypothesis_holds = false;

    // instance verification
    int measured_max_line_degree = 0;
    long long measured_max_t1 = 0;
    long long measured_max_t2 = 0;
    long long measured_max_t = 0;
    bool line_degrees_within_bound = false;
    bool degrees_within_bound = false;
    bool t1_within_bound = false;
    bool t2_within_bound = false;
    bool t_within_bound = false;
};

/// Requires a uniform instance of rank >= 3 (apply uniformize first).
UniformSparsityDiagnostics uniform_sparsity_diagnostics(const Hypergraph& h,
                                                        const Rational& C = Rational(3));

enum class ConditionStatus { holds, fails, inapplicable };

struct ConditionReport {
    std::string id;
    ConditionStatus status = ConditionStatus::inapplicable;
    std::string detail;  // the inequality instantiated with numbers
    bool holds() const { return status == ConditionStatus::holds; }
};

/// n > (Delta-1)^2 or n < rho^2; either extreme guarantees a list
/// coloring with n colors. Requires linear input with no rank-1 edges.
ConditionReport dense_case_condition(const Hypergraph& h);

/// rank >= C >= 3, Delta >= C*(P-1), and uniform or n > Delta*(P-1);
/// concludes (conditionally on the constant C) a list coloring with
/// n - 1 colors. Requires no rank-1 edges.
ConditionReport high_degree_uniform_condition(const Hypergraph& h,
                                              const Rational& C = Rational(3));

/// Max degree of the rank-2 part at most n - 2*Delta(h3) - 1, the margin
/// under which rank-2 edges always have a free color to extend into.
ConditionReport extension_margin_condition(const Hypergraph& h);

/// Every vertex has clique degree at least 2*Delta(h3) in the rank>=3
/// part. Inapplicable unless every vertex pair lies in exactly one edge
/// (the degree identity d(x, h2) = n - 1 - D(x, h3) needs it).
ConditionReport clique_degree_extension_condition(const Hypergraph& h);

/// Excess at least twice the deficit at every vertex of the rank>=3
/// part; same pair-coverage applicability requirement.
ConditionReport deficit_excess_extension_condition(const Hypergraph& h);

}  // namespace lhc
