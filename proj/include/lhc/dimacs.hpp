#pragma once

#include <string>

#include "lhc/hypergraph.hpp"

namespace lhc {

/// Line graph of h in DIMACS .col format: "p edge m E" followed by one
/// 1-based "e i j" line per line-graph edge in lexicographic order.
/// Byte-stable output for external coloring solvers.
std::string export_dimacs(const Hypergraph& h);

}  // namespace lhc
