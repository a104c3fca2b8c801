#include "lhc/json_io.hpp"

#include <stdexcept>

namespace lhc {

Hypergraph parse_hypergraph(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
        throw std::invalid_argument("document must be an object with \"n\" and \"edges\"");
    }
    if (!doc["n"].is_number_integer()) {
        throw std::invalid_argument("\"n\" must be an integer");
    }
    const int n = doc["n"].get<int>();
    if (n < 0) throw std::invalid_argument("\"n\" must be non-negative");
    if (n > 1000000) {
        throw std::invalid_argument("vertex counts above 1000000 are not supported");
    }
    if (!doc["edges"].is_array()) {
        throw std::invalid_argument("\"edges\" must be an array of arrays");
    }
    std::vector<Edge> edges;
    edges.reserve(doc["edges"].size());
    int index = 0;
    for (const auto& item : doc["edges"]) {
        if (!item.is_array()) {
            throw std::invalid_argument("edge " + std::to_string(index) + " is not an array");
        }
        Edge e;
        for (const auto& v : item) {
            if (!v.is_number_integer()) {
                throw std::invalid_argument("edge " + std::to_string(index) +
                                            " contains a non-integer vertex id");
            }
            e.push_back(v.get<int>());
        }
        edges.push_back(std::move(e));
        ++index;
    }
    return Hypergraph(n, std::move(edges));
}

ordered_json hypergraph_to_json(const Hypergraph& h) {
    ordered_json doc;
    doc["n"] = h.vertex_count();
    doc["edges"] = h.edges();
    return doc;
}

std::string serialize(const Hypergraph& h) { return hypergraph_to_json(h).dump(); }

ordered_json analysis_to_json(const AnalysisReport& r) {
    ordered_json doc;
    doc["n"] = r.n;
    doc["m"] = r.m;
    doc["delta"] = r.delta;
    doc["Delta"] = r.Delta;
    doc["rho"] = r.rho;
    doc["P"] = r.P;
    doc["maxD"] = r.maxD;
    doc["maxR"] = r.maxR;
    doc["linear"] = r.linear;
    doc["uniform"] = r.uniform;
    doc["regular"] = r.regular;
    return doc;
}

}  // namespace lhc
