#pragma once

#include "wsat/graph.hpp"

namespace wsat {

/// A validated percolation pattern F with its cached structure facts.
/// Patterns with isolated vertices are rejected (or stripped on request);
/// everything downstream assumes delta >= 1.
class PatternGraph {
public:
    explicit PatternGraph(LabeledGraph f, bool strip_isolated = false);

    const LabeledGraph& graph() const { return graph_; }
    int vertex_count() const { return v_; }
    int edge_count() const { return l_; }
    int min_degree() const { return delta_; }
    bool connected() const { return connected_; }
    bool two_edge_connected() const { return two_edge_connected_; }
    int edge_connectivity() const { return edge_connectivity_; }

    /// lambda = I(connected) + I(2-edge-connected).
    int lambda() const { return (connected_ ? 1 : 0) + (two_edge_connected_ ? 1 : 0); }

private:
    LabeledGraph graph_;
    int v_ = 0;
    int l_ = 0;
    int delta_ = 0;
    bool connected_ = false;
    bool two_edge_connected_ = false;
    int edge_connectivity_ = 0;
};

} // namespace wsat
