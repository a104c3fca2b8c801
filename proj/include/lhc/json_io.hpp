#pragma once

#include <string>

#include "json.hpp"
#include "lhc/hypergraph.hpp"

namespace lhc {

using ordered_json = nlohmann::ordered_json;

/// Parses the canonical interchange document {"n": <int>, "edges": [[...], ...]}.
/// Throws std::invalid_argument with position info on malformed input,
/// out-of-range vertex ids or duplicate edges.
Hypergraph parse_hypergraph(const std::string& text);

/// Canonical single-line document; round-trips with parse_hypergraph.
std::string serialize(const Hypergraph& h);

ordered_json hypergraph_to_json(const Hypergraph& h);
ordered_json analysis_to_json(const AnalysisReport& report);

}  // namespace lhc
