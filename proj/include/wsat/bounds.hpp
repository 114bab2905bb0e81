#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wsat/invariants.hpp"
#include "wsat/pattern.hpp"
#include "wsat/rational.hpp"

namespace wsat {

struct BoundEntry {
    std::string source;
    long long value = 0;
};

/// All bound values for one (F, n): lower bounds are ceiled, upper bounds are
/// constructed edge counts, `exact` is set when a theorem pins the value.
struct BoundReport {
    int n = 0;
    std::vector<BoundEntry> lower;
    std::vector<BoundEntry> upper;
    std::optional<BoundEntry> exact;
};

/// wsat(v,F) + (n-v)(delta-1), with wsat(v,F) = l-1 when flat, else the
/// crude C(v,2)-1.
long long upper_bound_generic(const BoundProfile& p, int n);

/// ceil((delta/2 - 1/(delta+1)) * n).
long long lower_bound_fgj(const BoundProfile& p, int n);

/// Strongest applicable of the three-case lower bound, dispatched on
/// (connected, 2-edge-connected, parity of delta). Requires delta >= 2.
long long lower_bound_theorem1(const PatternGraph& f, const BoundProfile& p, int n);

/// g*_1(n-v) + l - 1.
long long lower_bound_gstar(const BoundProfile& p, int n);

/// Both admissibility conditions for a lower-bound slope function g given on
/// 0..I: subadditivity for i+j <= I and g(i) <= e_i for i <= min(I, v-1).
bool check_subadditive_g(std::span<const long long> g, const EdgeDeficiencyVector& ed);

/// ceil(cf*(n-v)) + l - 1 for a caller-certified cf.
long long lower_bound_cf(const BoundProfile& p, int n, const Rational& cf);

struct BridgesStatus {
    int r = 0;
    bool flat = false;
    int kmax_r = 0;       // max element of kset_r (always >= 1)
    int v_minus_beta = 0;
    bool kmax_le_v_minus_beta = false;  // the combinatorial half of property 2
    bool gstar_beta_le_r = false;       // g*_beta <= g*_r pointwise on the window
    bool property2 = false;             // flat and kmax_r <= v - beta
    bool property3_window = false;      // flat and gstar_beta_le_r
    int window_imax = 0;
    bool upper_bound_valid = false;  // property 2, i.e. wsat(n,F) <= g*_r(n-v)+l-1 for all n
};

/// The three-way equivalence of the bridge theorem, instantiated at r, with
/// the pointwise check run on a finite window (decisive via property 2).
BridgesStatus bridges_status(const BoundProfile& p, int r);

/// Exact value g*_2(n-v)+l-1 when flat and max kset_2 <= v-beta; nullopt
/// otherwise.
std::optional<long long> predicted_exact(const BoundProfile& p, int n);

/// Exact-value dispatch for the two-cliques-plus-matching family: a < b gives
/// g*_1(n-v)+l-1, (5,5,4) gives g*_2(n-v)+l-1, other parameters decline.
std::optional<long long> predicted_exact_fabc(int a, int b, int c, const BoundProfile& p, int n);

/// Full report with every applicable bound; cf is included when supplied.
BoundReport bound_report(const PatternGraph& f, const BoundProfile& p, int n,
                         const std::optional<Rational>& cf = std::nullopt);

std::string to_json(const BoundReport& r);

} // namespace wsat
