#include "lhc/dimacs.hpp"

#include <sstream>

#include "lhc/derived.hpp"

namespace lhc {

std::string export_dimacs(const Hypergraph& h) {
    const Graph lg = line_graph(h);
    const auto edges = lg.edge_list();  // already lexicographic
    std::ostringstream out;
    out << "p edge " << lg.vertex_count() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) {
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
    return out.str();
}

}  // namespace lhc
