#pragma once

#include <optional>
#include <vector>

#include "wsat/graph.hpp"
#include "wsat/pattern.hpp"

namespace wsat {

/// Injective edge-preserving map V(F) -> V(H), indexed by F-vertex.
using Embedding = std::vector<int>;

enum class FindStatus { found, refuted, budget_exhausted };

/// Backtracking searcher for copies of F anchored at a host edge. Copies are
/// non-induced: every F-edge must map to an H-edge, extra H-edges are free.
/// Forward-checking over bitset domains with most-constrained-vertex
/// selection; the anchor is tried over every F-edge in both orientations.
/// Deterministic: returns the first embedding in its fixed search order.
class EmbeddingFinder {
public:
    explicit EmbeddingFinder(const PatternGraph& f);

    /// An embedding with some F-edge mapped onto {hu, hv}, which must be an
    /// edge of h. Absence is a value, not an error.
    std::optional<Embedding> find(const LabeledGraph& h, int hu, int hv) const;

    /// Same search under a node budget. Some refutations are genuinely hard;
    /// callers that can defer a candidate use this and retry later on a
    /// denser host. A `found` answer is always trustworthy.
    FindStatus find_budgeted(const LabeledGraph& h, int hu, int hv, long long max_nodes,
                             Embedding& out) const;

private:
    struct AnchorPlan {
        int a, b;  // the anchored F-edge
    };

    // 1 found, 0 refuted, -1 budget exhausted
    int try_plan(const AnchorPlan& plan, const LabeledGraph& h, const std::vector<int>& hdeg,
                 int x, int y, Embedding& out, long long& nodes_left) const;

    LabeledGraph f_;
    int v_;
    std::vector<int> fdeg_;
    std::vector<AnchorPlan> plans_;
};

/// One-shot convenience wrapper around EmbeddingFinder.
std::optional<Embedding> find_embedding_using_edge(const PatternGraph& f, const LabeledGraph& h,
                                                   int hu, int hv);

} // namespace wsat
