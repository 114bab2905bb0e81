#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wsat/pattern.hpp"
#include "wsat/rational.hpp"

namespace wsat {

/// Enumeration cap for the subset scans (e-vector, beta): 2^24 states.
inline constexpr int kSubsetEnumCap = 24;

/// e[i] = (minimum number of F-edges meeting some i-set of vertices) - 1,
/// for i in 0..v, with e[0] = 0. Nondecreasing; e[1] = delta-1; e[v] = l-1.
struct EdgeDeficiencyVector {
    int v = 0;
    std::vector<long long> e;  // size v+1
};

/// Production entry point: picks the OpenMP kernel when the subset space is
/// large enough to pay for it.
EdgeDeficiencyVector edge_deficiency(const PatternGraph& f);
/// Single-threaded Gray-code reference.
EdgeDeficiencyVector edge_deficiency_serial(const PatternGraph& f);
/// Block-partitioned OpenMP kernel (also correct with one thread).
EdgeDeficiencyVector edge_deficiency_parallel(const PatternGraph& f);

/// gamma = min_{1<=i<=v-1} e_i / i, exact.
Rational gamma(const EdgeDeficiencyVector& ed);
/// Smallest i attaining gamma.
int gamma_argmin(const EdgeDeficiencyVector& ed);

/// Min-plus table: a[i] = min sum of e over compositions of i into parts of
/// size at most v-r (unbounded-knapsack DP). Requires 0 <= r <= v-1.
std::vector<long long> gstar_table(const EdgeDeficiencyVector& ed, int r, int i_max);

/// Indecomposable sizes: i in [v] such that every split of i into >= 2
/// positive parts has strictly larger total e-value.
std::vector<int> kset(const EdgeDeficiencyVector& ed);
/// kset restricted to [v-r].
std::vector<int> kset_r(const EdgeDeficiencyVector& ed, int r);

/// Minimum number of vertex deletions after which F contains a cut-edge.
int beta(const PatternGraph& f);
int beta_serial(const PatternGraph& f);
int beta_parallel(const PatternGraph& f);

struct Flatness {
    bool flat = false;
    std::optional<std::pair<int, int>> witness;  // edge of F whose removal percolates
};

/// wsat(v,F) = l-1, decided exactly: true iff some single-edge-deleted copy
/// of F percolates to K_v.
Flatness flatness(const PatternGraph& f);

/// Everything the bound formulas need about one F, computed once.
struct BoundProfile {
    int v = 0;
    int l = 0;
    int delta = 0;
    EdgeDeficiencyVector ed;
    Rational gamma;
    std::map<int, std::vector<long long>> gstar;  // r -> table on 0..i_max
    std::vector<int> kset;
    int beta = 0;
    int edge_connectivity = 0;
    int lambda = 0;
    bool flat = false;
    std::optional<std::pair<int, int>> flat_witness;
    int gstar_imax = 0;

    const std::vector<long long>& gstar_for(int r) const;
};

/// i_max < 0 selects the default window 3v. Tables are built for
/// r in {0, 1, 2, beta}.
BoundProfile build_profile(const PatternGraph& f, int i_max = -1, bool with_flatness = true);

std::string to_json(const BoundProfile& p);

} // namespace wsat
