#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wsat/embedding.hpp"
#include "wsat/graph.hpp"
#include "wsat/pattern.hpp"

namespace wsat {

struct TraceStep {
    std::pair<int, int> edge;
    Embedding embedding;  // F-vertex -> host vertex, copy contains `edge`
};

/// Certificate of an F-bootstrap percolation run: replaying `steps` from
/// `start` must reproduce `final`, each step's copy living inside the graph
/// after that step and covering the new edge.
struct PercolationTrace {
    LabeledGraph start;
    std::vector<TraceStep> steps;
    LabeledGraph final;

    /// Full replay check of the trace invariants.
    bool validate(const PatternGraph& f) const;

    /// One JSON object per step: {"edge":[u,v],"embedding":[...]}.
    std::string to_json_lines() const;
};

/// Non-edges e of h whose addition creates a copy of F through e.
std::vector<std::pair<int, int>> addable_edges(const PatternGraph& f, const LabeledGraph& h);
std::vector<std::pair<int, int>> addable_edges_serial(const PatternGraph& f,
                                                      const LabeledGraph& h);

/// Maximal graph reachable by repeatedly adding addable edges. Addability is
/// monotone in h, so the fixpoint is order-independent.
LabeledGraph closure(const PatternGraph& f, const LabeledGraph& h);

/// closure(f, h) == K_n. h must have exactly n vertices.
bool is_weakly_saturated(const PatternGraph& f, const LabeledGraph& h, int n);

/// Deterministic witness run: lexicographically smallest addable edge each
/// round.
PercolationTrace trace(const PatternGraph& f, const LabeledGraph& h);

/// Fixpoint via uniformly random activation order; property-test hook for
/// order independence.
LabeledGraph closure_random_order(const PatternGraph& f, const LabeledGraph& h,
                                  std::uint64_t seed);

} // namespace wsat
