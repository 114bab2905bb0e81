#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsat/graph.hpp"
#include "wsat/pattern.hpp"

namespace wsat {

enum class ClaimedProperty { weakly_saturated, pattern_family };
enum class GlueVariant { cross_join, overlap };

/// A generated graph together with its claim: either a pattern-family member
/// or a saturator for `pattern`, whose claimed edge count always matches the
/// graph and whose saturation claim is checkable via the closure hook below.
struct ConstructionResult {
    std::string name;
    LabeledGraph graph;
    std::optional<PatternGraph> pattern;  // engaged for saturators
    long long claimed_edges = 0;
    ClaimedProperty claimed_property = ClaimedProperty::pattern_family;
    std::vector<int> distinguished;       // the P set, when the construction has one
    std::vector<int> s_sequence;          // non-concentration only
    std::map<std::string, long long> params;
};

/// K_v with v-1-delta edges at one vertex removed.
ConstructionResult pattern_F_v_delta(int v, int delta);

/// Disjoint K_a and K_b joined by c disjoint edges.
ConstructionResult pattern_F_abc(int a, int b, int c);

/// The three worst-case-tightness families: (1) m cliques K_{delta+1} plus one
/// joining edge; (2) two (delta+1)-cliques doubly attached to K_m with one
/// clique edge dropped; (3) the odd-delta variant with matchings removed and
/// two apex vertices.
ConstructionResult pattern_optimality_family(int case_id, int delta, int m);

/// Clique K_{delta+1} attached to K_m through the staircase s-sequence;
/// realizes the slope delta/2 + k/(delta+1).
ConstructionResult pattern_nonconcentration(int delta, int k, int m);

/// K_9 minus a perfect matching on its first eight vertices.
ConstructionResult pattern_k9_minus_matching();

/// The valid s-sequence for (delta, k); lexicographically smallest when more
/// than one exists.
std::vector<int> s_sequence(int delta, int k);

/// Iterated gluing of F|_P: per step, a fresh copy of F|_P is attached to a
/// (v-|P|)-set exactly as in F, one edge dropped. Needs flatness and
/// |V(F)\P| >= delta-1; |V(F)\P| = delta-2 is also accepted and handled by
/// the compensating-edge variant (drop an inside edge, add one reaching a
/// vertex beyond the attachment set).
ConstructionResult saturator_sparse_growth(const PatternGraph& f, const std::vector<int>& P,
                                           int steps);

/// Witness for the g*_beta upper bound: optimal composition of n-v into
/// parts of size at most v-beta, each part glued as a slice of F with one
/// edge dropped. Needs flatness.
ConstructionResult saturator_gstar_witness(const PatternGraph& f, int n);

/// Clique on v-2 vertices joined completely to the remaining n-v+2; the
/// classical K_v saturator.
ConstructionResult saturator_clique_witness(int v, int n);

/// Flat base (or K_v minus an edge when not flat) grown by delta-1 edges per
/// extra vertex; the generic upper-bound witness.
ConstructionResult saturator_degree_growth(const PatternGraph& f, int n);

/// Combine two saturators: cross_join draws all (v-2)^2 edges between fixed
/// (v-2)-sets; overlap identifies the first percolation copy of F in b with a
/// v-set of a, saving l-1 edges.
ConstructionResult saturator_union_glue(const LabeledGraph& a, const LabeledGraph& b,
                                        const PatternGraph& f, GlueVariant variant);

/// Closure-based verification hook for weakly-saturated claims.
bool verify_weakly_saturated(const ConstructionResult& c);

/// CLI claim record: name, params, counts, graph6, distinguished set.
std::string claim_json(const ConstructionResult& c);

} // namespace wsat
