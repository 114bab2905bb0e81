#include "wsat/pattern.hpp"

#include <stdexcept>
#include <vector>

namespace wsat {

PatternGraph::PatternGraph(LabeledGraph f, bool strip_isolated) {
    if (strip_isolated) {
        std::vector<int> keep;
        for (int u = 0; u < f.vertex_count(); ++u)
            if (f.degree(u) > 0) keep.push_back(u);
        f = induced_subgraph(f, keep);
    }
    if (f.vertex_count() < 2 || f.edge_count() == 0)
        throw std::invalid_argument("pattern must have at least one edge");
    for (int u = 0; u < f.vertex_count(); ++u)
        if (f.degree(u) == 0)
            throw std::invalid_argument("pattern has an isolated vertex (vertex " +
                                        std::to_string(u) + ")");
    graph_ = std::move(f);
    v_ = graph_.vertex_count();
    l_ = graph_.edge_count();
    delta_ = wsat::min_degree(graph_);
    connected_ = wsat::is_connected(graph_);
    edge_connectivity_ = connected_ && v_ >= 2 ? wsat::edge_connectivity(graph_) : 0;
    two_edge_connected_ = edge_connectivity_ >= 2;
}

} // namespace wsat
