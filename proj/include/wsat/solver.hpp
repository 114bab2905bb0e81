#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsat/graph.hpp"
#include "wsat/pattern.hpp"

namespace wsat {

struct SolveBudget {
    long long max_nodes = 50'000'000;
    long long max_ms = 120'000;
};

struct SolveOptions {
    SolveBudget budget;
    bool use_constructions = true;    // seed the upper bound with verified witnesses
    bool canonical_rejection = false; // symmetry pruning, correctness-neutral
    int workers = 1;
};

/// Exact search outcome. When `exact` is false the budget ran out and only
/// the bracket [lower_bound, upper_bound] is meaningful (upper_bound = -1 if
/// no witness was found at all).
struct SolveResult {
    int n = 0;
    long long value = -1;
    LabeledGraph witness;
    bool exact = false;
    long long lower_bound = 0;
    long long upper_bound = -1;
    long long nodes_expanded = 0;
    std::map<std::string, long long> pruned_by;
    long long time_ms = 0;
};

/// wsat(n, F) by iterative deepening on the edge count, starting at the best
/// theorem lower bound. Each level is an existence question answered by
/// depth-first search over edge slots in lex order with degree-floor and
/// partial-closure pruning; verified constructions close the search from
/// above.
SolveResult wsat_exact(const PatternGraph& f, int n, const SolveOptions& opts = {});

struct FormulaReport {
    std::vector<int> matches;
    std::vector<int> mismatches;
    std::vector<int> timeouts;
    std::map<int, std::pair<long long, long long>> values;  // n -> (solver, formula)
    bool all_match = false;
};

/// Batch harness: runs wsat_exact over [n_lo, n_hi] and compares against a
/// closed-form prediction.
FormulaReport verify_formula_range(const PatternGraph& f,
                                   const std::function<long long(int)>& formula, int n_lo,
                                   int n_hi, const SolveOptions& opts = {});

/// Timing is excluded by default so identical invocations print identical
/// bytes; pass with_timing for diagnostics.
std::string to_json(const SolveResult& r, bool with_timing = false);

} // namespace wsat
