#include "wsat/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "wsat/bounds.hpp"
#include "wsat/constructions.hpp"
#include "wsat/graph6.hpp"
#include "wsat/invariants.hpp"
#include "wsat/percolation.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wsat {

namespace {

using Clock = std::chrono::steady_clock;

struct SearchShared {
    std::atomic<bool> found{false};
    std::atomic<bool> stopped{false};
    std::atomic<long long> nodes{0};
    Clock::time_point deadline;
    long long node_budget = 0;
};

// One iterative-deepening level: is there an m-edge weakly saturated graph?
class LevelSearch {
public:
    LevelSearch(const PatternGraph& f, int n, long long m, const SolveOptions& opts,
                SearchShared& shared, std::map<std::string, long long>& pruned)
        : f_(f), n_(n), m_(m), opts_(opts), shared_(shared), pruned_(pruned), g_(n),
          deg_(n, 0) {
        slots_ = g_.non_edges();  // lex order over the empty graph = all pairs
        const int N = static_cast<int>(slots_.size());
        inc_after_.assign(N + 1, std::vector<int>(n, 0));
        for (int idx = N - 1; idx >= 0; --idx) {
            inc_after_[idx] = inc_after_[idx + 1];
            ++inc_after_[idx][slots_[idx].first];
            ++inc_after_[idx][slots_[idx].second];
        }
        delta_ = f.min_degree();
        deficit_ = static_cast<long long>(n) * std::max(0, delta_ - 1);
        row_start_.assign(n, -1);
        for (int idx = 0; idx < N; ++idx)
            if (row_start_[slots_[idx].first] < 0) row_start_[slots_[idx].first] = idx;
    }

    std::optional<LabeledGraph> run() {
        dfs(0, 0, 0);
        return found_;
    }

    /// Replay a fixed include/exclude decision prefix over the first D slots,
    /// then search the tail. Used by the worker split.
    std::optional<LabeledGraph> run_prefix(std::uint32_t mask, int D) {
        int chosen = 0;
        for (int idx = 0; idx < D; ++idx) {
            auto [u, v] = slots_[idx];
            if ((mask >> idx) & 1) {
                add(u, v);
                if (++chosen > m_) return std::nullopt;
            } else {
                for (int x : {u, v}) {
                    long long cap = std::min<long long>(inc_after_[idx + 1][x], m_ - chosen);
                    if (deg_[x] + cap < delta_ - 1) return std::nullopt;
                }
            }
        }
        dfs(D, chosen, D - chosen);
        return found_;
    }

private:
    bool budget_ok() {
        long long seen = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if ((seen & 1023) == 0) {
            if (seen > shared_.node_budget || Clock::now() > shared_.deadline) {
                shared_.stopped.store(true, std::memory_order_relaxed);
            }
        }
        return !shared_.stopped.load(std::memory_order_relaxed);
    }

    void add(int u, int v) {
        g_.add_edge(u, v);
        if (deg_[u] < delta_ - 1) --deficit_;
        if (deg_[v] < delta_ - 1) --deficit_;
        ++deg_[u];
        ++deg_[v];
    }

    void remove(int u, int v) {
        g_.remove_edge(u, v);
        --deg_[u];
        --deg_[v];
        if (deg_[u] < delta_ - 1) ++deficit_;
        if (deg_[v] < delta_ - 1) ++deficit_;
    }

    bool closure_feasible(int idx) {
        LabeledGraph opt = g_;
        for (std::size_t k = idx; k < slots_.size(); ++k)
            if (!opt.has_edge(slots_[k].first, slots_[k].second))
                opt.add_edge(slots_[k].first, slots_[k].second);
        return is_weakly_saturated(f_, opt, n_);
    }

    // Canonical rejection at row boundaries: two states at the same slot with
    // isomorphic decided parts (under a permutation preserving the decided
    // prefix structure) explore identical completions.
    bool canonical_reject(int idx, int chosen) {
        int r = -1;
        for (int u = 1; u < n_; ++u)
            if (row_start_[u] == idx) r = u;
        if (r < 0 || r > 4) return false;  // only shallow checkpoints pay off
        std::uint64_t key = hash_state(idx, chosen, r);
        auto chosen_mask = mask_of_chosen(idx);
        auto [it, inserted] = memo_.try_emplace(key);
        if (!inserted)
            for (const auto& prior : it->second)
                if (partial_iso(prior, chosen_mask, idx, r)) return true;
        it->second.push_back(chosen_mask);
        return false;
    }

    std::vector<std::uint64_t> mask_of_chosen(int idx) const {
        std::vector<std::uint64_t> mask((slots_.size() + 63) / 64, 0);
        for (int k = 0; k < idx; ++k)
            if (g_.has_edge(slots_[k].first, slots_[k].second))
                mask[k / 64] |= std::uint64_t{1} << (k % 64);
        return mask;
    }

    std::uint64_t hash_state(int idx, int chosen, int r) const {
        // two refinement rounds over (side, degree) colors
        std::vector<std::uint64_t> color(n_);
        for (int u = 0; u < n_; ++u) color[u] = (u < r ? 1 : 2) * 131 + deg_[u];
        for (int round = 0; round < 2; ++round) {
            std::vector<std::uint64_t> next(n_);
            for (int u = 0; u < n_; ++u) {
                std::vector<std::uint64_t> nb;
                g_.for_each_neighbor(u, [&](int w) { nb.push_back(color[w]); });
                std::sort(nb.begin(), nb.end());
                std::uint64_t h = color[u] * 1000003 + 17;
                for (auto x : nb) h = h * 1000003 + x;
                next[u] = h;
            }
            color = next;
        }
        std::sort(color.begin(), color.end());
        std::uint64_t h = 1469598103934665603ull ^ (static_cast<std::uint64_t>(idx) << 32) ^
                          static_cast<std::uint64_t>(chosen);
        for (auto x : color) h = (h ^ x) * 1099511628211ull;
        return h;
    }

    // Exact search for a permutation fixing {0..r-1} setwise that maps the
    // prior chosen-edge set onto the current one. Only a confirmed
    // isomorphism prunes.
    bool partial_iso(const std::vector<std::uint64_t>& prior_mask,
                     const std::vector<std::uint64_t>& cur_mask, int idx, int r) const {
        auto edges_of = [&](const std::vector<std::uint64_t>& mask) {
            std::vector<std::pair<int, int>> es;
            for (int k = 0; k < idx; ++k)
                if ((mask[k / 64] >> (k % 64)) & 1) es.push_back(slots_[k]);
            return es;
        };
        auto ea = edges_of(prior_mask);
        auto eb = edges_of(cur_mask);
        if (ea.size() != eb.size()) return false;

        LabeledGraph ga(n_), gb(n_);
        for (auto [u, v] : ea) ga.add_edge(u, v);
        for (auto [u, v] : eb) gb.add_edge(u, v);
        std::vector<int> da(n_), db(n_);
        for (int u = 0; u < n_; ++u) da[u] = ga.degree(u), db[u] = gb.degree(u);

        std::vector<int> pi(n_, -1);
        std::vector<char> used(n_, 0);
        std::function<bool(int)> assign = [&](int u) -> bool {
            if (u == n_) return true;
            for (int w = (u < r ? 0 : r); w < (u < r ? r : n_); ++w) {
                if (used[w] || da[u] != db[w]) continue;
                bool ok = true;
                for (int p = 0; p < u && ok; ++p)
                    if (ga.has_edge(p, u) != gb.has_edge(pi[p], w)) ok = false;
                if (!ok) continue;
                pi[u] = w;
                used[w] = 1;
                if (assign(u + 1)) return true;
                used[w] = 0;
                pi[u] = -1;
            }
            return false;
        };
        return assign(0);
    }

    bool dfs(int idx, int chosen, int excl_count) {
        if (shared_.found.load(std::memory_order_relaxed)) return false;
        if (!budget_ok()) return false;

        const int N = static_cast<int>(slots_.size());
        if (chosen == m_) {
            if (deficit_ > 0) {
                ++pruned_["degree_floor"];
                return false;
            }
            if (is_weakly_saturated(f_, g_, n_)) {
                found_ = g_;
                shared_.found.store(true, std::memory_order_relaxed);
                return true;
            }
            return false;
        }
        if (N - idx < m_ - chosen) {
            ++pruned_["capacity"];
            return false;
        }
        if (deficit_ > 2 * (m_ - chosen)) {
            ++pruned_["degree_floor"];
            return false;
        }
        if (opts_.canonical_rejection && canonical_reject(idx, chosen)) {
            ++pruned_["canonical"];
            return false;
        }

        auto [u, v] = slots_[idx];
        // include first: lex-dense graphs are the likely witnesses
        add(u, v);
        if (dfs(idx + 1, chosen + 1, excl_count)) {
            remove(u, v);
            return true;
        }
        remove(u, v);

        // exclude: both endpoints must still be able to reach degree delta-1
        bool feasible = true;
        for (int x : {u, v}) {
            long long cap = std::min<long long>(inc_after_[idx + 1][x], m_ - chosen);
            if (deg_[x] + cap < delta_ - 1) {
                feasible = false;
                break;
            }
        }
        if (!feasible) {
            ++pruned_["degree_floor"];
            return false;
        }
        if ((excl_count + 1) % 8 == 0 && !closure_feasible(idx + 1)) {
            ++pruned_["closure_feasibility"];
            return false;
        }
        return dfs(idx + 1, chosen, excl_count + 1);
    }

    const PatternGraph& f_;
    int n_;
    long long m_;
    const SolveOptions& opts_;
    SearchShared& shared_;
    std::map<std::string, long long>& pruned_;
    LabeledGraph g_;
    std::vector<int> deg_;
    std::vector<std::pair<int, int>> slots_;
    std::vector<std::vector<int>> inc_after_;
    std::vector<int> row_start_;
    int delta_ = 0;
    long long deficit_ = 0;
    std::optional<LabeledGraph> found_;
    std::unordered_map<std::uint64_t, std::vector<std::vector<std::uint64_t>>> memo_;
};

std::optional<LabeledGraph> run_level_parallel(const PatternGraph& f, int n, long long m,
                                               const SolveOptions& opts, SearchShared& shared,
                                               std::map<std::string, long long>& pruned) {
#ifdef _OPENMP
    const long long slot_count = static_cast<long long>(n) * (n - 1) / 2;
    const int D = static_cast<int>(std::min<long long>(slot_count, 10));
    std::vector<std::uint32_t> frontier;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << D); ++mask) {
        const int inc = __builtin_popcount(mask);
        if (inc > m || m - inc > slot_count - D) continue;
        frontier.push_back(mask);
    }
    std::optional<LabeledGraph> result;
    std::vector<std::map<std::string, long long>> local(omp_get_max_threads());
#pragma omp parallel for schedule(dynamic) num_threads(opts.workers)
    for (long i = 0; i < static_cast<long>(frontier.size()); ++i) {
        if (shared.found.load(std::memory_order_relaxed) ||
            shared.stopped.load(std::memory_order_relaxed))
            continue;
        LevelSearch level(f, n, m, opts, shared, local[omp_get_thread_num()]);
        auto r = level.run_prefix(frontier[i], D);
        if (r) {
#pragma omp critical
            if (!result) result = r;
        }
    }
    for (const auto& lm : local)
        for (const auto& [k, val] : lm) pruned[k] += val;
    return result;
#else
    LevelSearch level(f, n, m, opts, shared, pruned);
    return level.run();
#endif
}

} // namespace

SolveResult wsat_exact(const PatternGraph& f, int n, const SolveOptions& opts) {
    const int v = f.vertex_count();
    if (n < v) throw std::invalid_argument("wsat_exact requires n >= v");
    const auto t0 = Clock::now();

    SolveResult res;
    res.n = n;

    auto ed = edge_deficiency(f);
    auto table = gstar_table(ed, 1, n - v);
    long long lb = table[n - v] + f.edge_count() - 1;
    if (f.min_degree() >= 2) {
        BoundProfile lite;
        lite.v = v;
        lite.l = f.edge_count();
        lite.delta = f.min_degree();
        lite.ed = ed;
        lb = std::max(lb, lower_bound_theorem1(f, lite, n));
        lb = std::max(lb, lower_bound_fgj(lite, n));
    }
    res.lower_bound = lb;

    std::optional<LabeledGraph> ub_witness;
    long long ub = -1;
    if (opts.use_constructions) {
        auto consider = [&](const ConstructionResult& c) {
            if (c.graph.vertex_count() != n) return;
            if (ub >= 0 && c.claimed_edges >= ub) return;
            if (verify_weakly_saturated(c)) {
                ub = c.claimed_edges;
                ub_witness = c.graph;
            }
        };
        consider(saturator_degree_growth(f, n));
        try {
            consider(saturator_gstar_witness(f, n));
        } catch (const std::invalid_argument&) {
            // not flat: no g*-witness
        }
    }
    res.upper_bound = ub;

    SearchShared shared;
    shared.node_budget = opts.budget.max_nodes;
    shared.deadline = t0 + std::chrono::milliseconds(opts.budget.max_ms);

    const long long slot_count = static_cast<long long>(n) * (n - 1) / 2;
    for (long long m = lb;; ++m) {
        if (ub >= 0 && m >= ub) {
            res.value = ub;
            res.witness = *ub_witness;
            res.exact = true;
            break;
        }
        if (m > slot_count) break;  // unreachable: K_n always percolates

        std::optional<LabeledGraph> found;
        if (opts.workers > 1) {
            found = run_level_parallel(f, n, m, opts, shared, res.pruned_by);
        } else {
            LevelSearch level(f, n, m, opts, shared, res.pruned_by);
            found = level.run();
        }
        if (shared.stopped.load()) {
            res.exact = false;
            res.lower_bound = m;  // all levels below m are exhausted
            res.value = -1;
            break;
        }
        if (found) {
            res.value = m;
            res.witness = *found;
            res.exact = true;
            if (ub < 0 || m < ub) res.upper_bound = m;
            break;
        }
        shared.found.store(false);
    }

    res.nodes_expanded = shared.nodes.load();
    res.time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return res;
}

FormulaReport verify_formula_range(const PatternGraph& f,
                                   const std::function<long long(int)>& formula, int n_lo,
                                   int n_hi, const SolveOptions& opts) {
    FormulaReport rep;
    for (int n = n_lo; n <= n_hi; ++n) {
        SolveResult r = wsat_exact(f, n, opts);
        if (!r.exact) {
            rep.timeouts.push_back(n);
            continue;
        }
        rep.values[n] = {r.value, formula(n)};
        if (r.value == formula(n))
            rep.matches.push_back(n);
        else
            rep.mismatches.push_back(n);
    }
    rep.all_match = rep.mismatches.empty() && rep.timeouts.empty();
    return rep;
}

std::string to_json(const SolveResult& r, bool with_timing) {
    nlohmann::json j;
    j["n"] = r.n;
    j["exact"] = r.exact;
    j["value"] = r.value;
    j["lower_bound"] = r.lower_bound;
    j["upper_bound"] = r.upper_bound;
    j["nodes_expanded"] = r.nodes_expanded;
    if (with_timing) j["time_ms"] = r.time_ms;
    nlohmann::json pb = nlohmann::json::object();
    for (const auto& [k, val] : r.pruned_by) pb[k] = val;
    j["pruned_by"] = std::move(pb);
    if (r.exact) j["witness"] = to_graph6(r.witness);
    return j.dump();
}

} // namespace wsat
