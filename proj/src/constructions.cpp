#include "wsat/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "wsat/graph6.hpp"
#include "wsat/invariants.hpp"
#include "wsat/percolation.hpp"

namespace wsat {

namespace {

void seal(ConstructionResult& c) {
    if (c.graph.edge_count() != c.claimed_edges)
        throw std::logic_error(c.name + ": built " + std::to_string(c.graph.edge_count()) +
                               " edges, claimed " + std::to_string(c.claimed_edges));
}

long long choose2(long long n) { return n * (n - 1) / 2; }

// Can the slice survive with `pre` deleted? Checks percolation of
// F - pre + clique(V(F)\S) to K_v: exactly the state of the glued v-set once
// the previously built part has percolated.
bool deletion_ok(const PatternGraph& f, std::pair<int, int> pre, const std::vector<int>& S) {
    LabeledGraph t = f.graph();
    t.remove_edge(pre.first, pre.second);
    std::vector<char> in_s(t.vertex_count(), 0);
    for (int s : S) in_s[s] = 1;
    for (int u = 0; u < t.vertex_count(); ++u)
        for (int w = u + 1; w < t.vertex_count(); ++w)
            if (!in_s[u] && !in_s[w] && !t.has_edge(u, w)) t.add_edge(u, w);
    return is_weakly_saturated(f, t, f.vertex_count());
}

// Glue one slice of F onto `g`: new vertices `fresh` play sorted(S), the
// attachment set `anchor` plays sorted(V(F)\S), and every F-edge meeting S is
// drawn except one. The dropped edge is chosen deletion_ok-first among cross
// edges then inside edges (or the reverse when `prefer_inside`), lex within
// each class. Returns the number of edges drawn.
int glue_slice(LabeledGraph& g, const PatternGraph& f, const std::vector<int>& s_sorted,
               const std::vector<int>& fresh, const std::vector<int>& anchor,
               bool prefer_inside) {
    const int v = f.vertex_count();
    std::vector<char> in_s(v, 0);
    for (int s : s_sorted) in_s[s] = 1;
    std::vector<int> rest;
    for (int u = 0; u < v; ++u)
        if (!in_s[u]) rest.push_back(u);
    if (fresh.size() != s_sorted.size() || anchor.size() != rest.size())
        throw std::invalid_argument("glue_slice: size mismatch");

    std::vector<int> image(v, -1);
    for (std::size_t i = 0; i < s_sorted.size(); ++i) image[s_sorted[i]] = fresh[i];
    for (std::size_t i = 0; i < rest.size(); ++i) image[rest[i]] = anchor[i];

    std::vector<std::pair<int, int>> inside_pre, cross_pre;
    for (auto [a, b] : f.graph().edges()) {
        if (in_s[a] && in_s[b])
            inside_pre.emplace_back(a, b);
        else if (in_s[a] || in_s[b])
            cross_pre.emplace_back(a, b);
    }

    std::vector<std::pair<int, int>> order;
    const auto& first = prefer_inside ? inside_pre : cross_pre;
    const auto& second = prefer_inside ? cross_pre : inside_pre;
    order.insert(order.end(), first.begin(), first.end());
    order.insert(order.end(), second.begin(), second.end());
    if (order.empty()) throw std::invalid_argument("glue_slice: slice has no edges to draw");

    std::pair<int, int> drop = order.front();
    for (auto pre : order)
        if (deletion_ok(f, pre, s_sorted)) {
            drop = pre;
            break;
        }

    int drawn = 0;
    for (auto pre : inside_pre)
        if (pre != drop) {
            g.add_edge(image[pre.first], image[pre.second]);
            ++drawn;
        }
    for (auto pre : cross_pre)
        if (pre != drop) {
            g.add_edge(image[pre.first], image[pre.second]);
            ++drawn;
        }
    return drawn;
}

LabeledGraph flat_base(const PatternGraph& f) {
    Flatness fl = flatness(f);
    if (!fl.flat) throw std::invalid_argument("construction requires wsat(v,F) = l-1");
    LabeledGraph base = f.graph();
    base.remove_edge(fl.witness->first, fl.witness->second);
    return base;
}

} // namespace

ConstructionResult pattern_F_v_delta(int v, int delta) {
    if (!(v >= 3 && 1 <= delta && delta <= v - 2))
        throw std::invalid_argument("pattern_F_v_delta requires v >= 3, 1 <= delta <= v-2");
    LabeledGraph g = LabeledGraph::clique(v);
    for (int j = 0; j < v - 1 - delta; ++j) g.remove_edge(v - 2 - j, v - 1);
    ConstructionResult c;
    c.name = "fvd";
    c.graph = std::move(g);
    c.claimed_edges = choose2(v) - (v - 1 - delta);
    c.claimed_property = ClaimedProperty::pattern_family;
    c.params = {{"v", v}, {"delta", delta}};
    seal(c);
    return c;
}

ConstructionResult pattern_F_abc(int a, int b, int c_edges) {
    if (!(1 <= c_edges && c_edges <= a && a <= b))
        throw std::invalid_argument("pattern_F_abc requires 1 <= c <= a <= b");
    LabeledGraph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int w = u + 1; w < a; ++w) g.add_edge(u, w);
    for (int u = 0; u < b; ++u)
        for (int w = u + 1; w < b; ++w) g.add_edge(a + u, a + w);
    for (int i = 0; i < c_edges; ++i) g.add_edge(i, a + i);
    ConstructionResult c;
    c.name = "fabc";
    c.graph = std::move(g);
    c.claimed_edges = choose2(a) + choose2(b) + c_edges;
    c.claimed_property = ClaimedProperty::pattern_family;
    c.params = {{"a", a}, {"b", b}, {"c", c_edges}};
    seal(c);
    return c;
}

ConstructionResult pattern_optimality_family(int case_id, int delta, int m) {
    ConstructionResult c;
    c.name = "optfam";
    c.params = {{"case", case_id}, {"delta", delta}, {"m", m}};
    c.claimed_property = ClaimedProperty::pattern_family;
    if (case_id == 1) {
        if (!(delta >= 2 && m >= 3))
            throw std::invalid_argument("optimality family case 1 requires delta >= 2, m >= 3");
        LabeledGraph g(m * (delta + 1));
        for (int blk = 0; blk < m; ++blk)
            for (int u = 0; u <= delta; ++u)
                for (int w = u + 1; w <= delta; ++w)
                    g.add_edge(blk * (delta + 1) + u, blk * (delta + 1) + w);
        g.add_edge(0, delta + 1);  // joining edge between the first two cliques
        for (int u = (m - 1) * (delta + 1); u < m * (delta + 1); ++u) c.distinguished.push_back(u);
        c.graph = std::move(g);
        c.claimed_edges = static_cast<long long>(m) * delta * (delta + 1) / 2 + 1;
    } else if (case_id == 2) {
        if (!(delta >= 2 && m >= delta + 5))
            throw std::invalid_argument("optimality family case 2 requires delta >= 2, m >= delta+5");
        const int b0 = 2 * delta + 2;
        LabeledGraph g(b0 + m);
        for (int u = 0; u <= delta; ++u)
            for (int w = u + 1; w <= delta; ++w)
                if (!(u == 0 && w == 1)) g.add_edge(u, w);  // A1 minus {u1,u2}
        for (int u = 0; u <= delta; ++u)
            for (int w = u + 1; w <= delta; ++w) g.add_edge(delta + 1 + u, delta + 1 + w);
        for (int u = 0; u < m; ++u)
            for (int w = u + 1; w < m; ++w) g.add_edge(b0 + u, b0 + w);
        g.add_edge(0, b0);              // u1 - w1
        g.add_edge(1, b0 + 1);          // u2 - w2
        g.add_edge(delta + 1, b0 + 2);  // A2 attachments avoid w1, w2
        g.add_edge(delta + 2, b0 + 3);
        for (int u = 0; u <= delta; ++u) c.distinguished.push_back(u);
        c.graph = std::move(g);
        c.claimed_edges = choose2(m) + static_cast<long long>(delta) * (delta + 1) + 3;
    } else if (case_id == 3) {
        if (!(delta >= 3 && delta % 2 == 1 && m >= delta + 3))
            throw std::invalid_argument(
                "optimality family case 3 requires odd delta >= 3, m >= delta+3");
        const int b0 = 2 * delta + 2;
        const int x1 = b0 + m, x2 = b0 + m + 1;
        LabeledGraph g(b0 + m + 2);
        auto matched = [](int u, int w) { return u / 2 == w / 2; };  // matching pairs (0,1),(2,3),...
        for (int u = 0; u <= delta; ++u)
            for (int w = u + 1; w <= delta; ++w) {
                if (!matched(u, w)) g.add_edge(u, w);
                if (!matched(u, w)) g.add_edge(delta + 1 + u, delta + 1 + w);
            }
        for (int u = 0; u < m; ++u)
            for (int w = u + 1; w < m; ++w) g.add_edge(b0 + u, b0 + w);
        g.add_edge(0, b0);              // u1 - w1
        g.add_edge(delta + 1, b0 + 1);  // u2 - w2
        for (int u = 1; u <= delta; ++u) g.add_edge(u, x1);
        for (int u = 0; u <= delta; ++u) g.add_edge(delta + 1 + u, x2);
        for (int u = 0; u <= delta; ++u) c.distinguished.push_back(u);
        c.distinguished.push_back(x1);
        c.graph = std::move(g);
        c.claimed_edges = choose2(m) + static_cast<long long>(delta + 1) * (delta + 1) + 1;
    } else {
        throw std::invalid_argument("optimality family case must be 1, 2 or 3");
    }
    seal(c);
    return c;
}

std::vector<int> s_sequence(int delta, int k) {
    if (!(delta >= 2 && k >= 0 && 2 * k <= (delta - 2) * (delta + 1)))
        throw std::invalid_argument("s_sequence requires delta >= 2, 0 <= k <= (delta/2-1)(delta+1)");
    std::vector<int> s;
    int total = 0;
    for (int i = 0; i < delta + 1; ++i) {
        if (i < 2) {
            s.push_back(0);
            continue;
        }
        int pick = -1;
        for (int val = s.back(); val <= s.back() + 1; ++val) {
            const int rem = delta - i;  // positions after i
            long long mx = total + val + static_cast<long long>(rem) * val +
                           static_cast<long long>(rem) * (rem + 1) / 2;
            if (mx >= k + 1) {
                pick = val;
                break;
            }
        }
        if (pick < 0 || total + pick > k + 1)
            throw std::logic_error("s_sequence: no valid continuation");
        s.push_back(pick);
        total += pick;
    }
    if (total != k + 1) throw std::logic_error("s_sequence: wrong total");
    return s;
}

ConstructionResult pattern_nonconcentration(int delta, int k, int m) {
    auto s = s_sequence(delta, k);
    if (m < std::max(2 * (k + 1), 2 * delta + 1))
        throw std::invalid_argument("non-concentration family requires m >= max(2(k+1), 2delta+1)");
    const int b0 = delta + 1;
    LabeledGraph g(b0 + m);
    for (int u = 0; u <= delta; ++u)
        for (int w = u + 1; w <= delta; ++w) g.add_edge(u, w);
    for (int u = 0; u < m; ++u)
        for (int w = u + 1; w < m; ++w) g.add_edge(b0 + u, b0 + w);
    int next = 0;
    for (int i = 0; i <= delta; ++i)
        for (int t = 0; t < s[i]; ++t) g.add_edge(i, b0 + next++);
    ConstructionResult c;
    c.name = "noncon";
    c.graph = std::move(g);
    c.claimed_edges = choose2(m) + choose2(delta + 1) + k + 1;
    c.claimed_property = ClaimedProperty::pattern_family;
    for (int u = 0; u <= delta; ++u) c.distinguished.push_back(u);
    c.s_sequence = s;
    c.params = {{"delta", delta}, {"k", k}, {"m", m}};
    seal(c);
    return c;
}

ConstructionResult pattern_k9_minus_matching() {
    LabeledGraph g = LabeledGraph::clique(9);
    for (int i = 0; i < 4; ++i) g.remove_edge(2 * i, 2 * i + 1);
    ConstructionResult c;
    c.name = "k9mm";
    c.graph = std::move(g);
    c.claimed_edges = 32;
    c.claimed_property = ClaimedProperty::pattern_family;
    c.distinguished = {0, 2, 4, 6};  // single ends of the removed matching
    seal(c);
    return c;
}

ConstructionResult saturator_sparse_growth(const PatternGraph& f, const std::vector<int>& P,
                                           int steps) {
    const int v = f.vertex_count();
    const int k = static_cast<int>(P.size());
    if (k < 1 || k >= v) throw std::invalid_argument("P must be a nonempty proper subset");
    if (steps < 0) throw std::invalid_argument("steps must be >= 0");
    const bool compensating = (v - k == f.min_degree() - 2);
    if (v - k < f.min_degree() - 2)
        throw std::invalid_argument("sparse growth requires |V(F)\\P| >= delta-2");

    LabeledGraph g = flat_base(f);
    std::vector<int> s_sorted(P);
    std::sort(s_sorted.begin(), s_sorted.end());
    std::vector<char> in_p(v, 0);
    for (int p : s_sorted) in_p[p] = 1;

    long long rest_edges = 0;
    for (auto [a, b] : f.graph().edges())
        if (!in_p[a] && !in_p[b]) ++rest_edges;
    const long long per_step = (f.edge_count() - rest_edges - 1) + (compensating ? 1 : 0);

    for (int j = 0; j < steps; ++j) {
        const int base = v + j * k;
        LabeledGraph grown(base + k);
        for (auto [a, b] : g.edges()) grown.add_edge(a, b);
        g = std::move(grown);
        std::vector<int> fresh(k), anchor(v - k);
        for (int i = 0; i < k; ++i) fresh[i] = base + i;
        for (int i = 0; i < v - k; ++i) anchor[i] = i;  // lex-first (v-k)-subset
        glue_slice(g, f, s_sorted, fresh, anchor, /*prefer_inside=*/compensating);
        if (compensating) g.add_edge(fresh.front(), v - k);  // reach one vertex beyond the anchor
    }

    ConstructionResult c;
    c.name = "sparse-growth";
    c.graph = std::move(g);
    c.pattern = f;
    c.claimed_edges = f.edge_count() - 1 + per_step * steps;
    c.claimed_property = ClaimedProperty::weakly_saturated;
    c.distinguished = s_sorted;
    c.params = {{"steps", steps}, {"per_step", per_step}};
    seal(c);
    return c;
}

ConstructionResult saturator_gstar_witness(const PatternGraph& f, int n) {
    const int v = f.vertex_count();
    if (n < v) throw std::invalid_argument("saturator_gstar_witness requires n >= v");
    const int b = beta(f);
    const int cap = v - b;
    auto ed = edge_deficiency(f);
    auto table = gstar_table(ed, b, n - v);

    // optimal composition of n-v: fewest parts, then lexicographically
    // largest first part
    std::vector<int> part_count(n - v + 1, 0);
    for (int i = 1; i <= n - v; ++i) {
        int best = -1;
        for (int j = 1; j <= std::min(i, cap); ++j)
            if (ed.e[j] + table[i - j] == table[i] &&
                (best < 0 || part_count[i - j] + 1 < best))
                best = part_count[i - j] + 1;
        part_count[i] = best;
    }
    std::vector<int> parts;
    for (int i = n - v; i > 0;) {
        int pick = -1;
        for (int j = std::min(i, cap); j >= 1; --j)
            if (ed.e[j] + table[i - j] == table[i] && part_count[i - j] + 1 == part_count[i]) {
                pick = j;
                break;
            }
        parts.push_back(pick);
        i -= pick;
    }

    LabeledGraph g = flat_base(f);
    for (int part : parts) {
        // lexicographically first subset of size `part` attaining e_part
        std::vector<int> best_subset;
        std::vector<int> idx(part);
        for (int i = 0; i < part; ++i) idx[i] = i;
        const long long target = ed.e[part] + 1;
        while (true) {
            long long meet = 0;
            std::vector<char> in_s(v, 0);
            for (int x : idx) in_s[x] = 1;
            for (auto [a, bb] : f.graph().edges())
                if (in_s[a] || in_s[bb]) ++meet;
            if (meet == target) {
                best_subset = idx;
                break;
            }
            int i = part - 1;
            while (i >= 0 && idx[i] == v - part + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < part; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (best_subset.empty()) throw std::logic_error("no subset attains e_i");

        const int base = g.vertex_count();
        LabeledGraph grown(base + part);
        for (auto [a, bb] : g.edges()) grown.add_edge(a, bb);
        g = std::move(grown);
        std::vector<int> fresh(part), anchor(v - part);
        for (int i = 0; i < part; ++i) fresh[i] = base + i;
        for (int i = 0; i < v - part; ++i) anchor[i] = i;
        glue_slice(g, f, best_subset, fresh, anchor, /*prefer_inside=*/false);
    }

    ConstructionResult c;
    c.name = "gstar-witness";
    c.graph = std::move(g);
    c.pattern = f;
    c.claimed_edges = table[n - v] + f.edge_count() - 1;
    c.claimed_property = ClaimedProperty::weakly_saturated;
    c.params = {{"n", n}, {"beta", b}};
    seal(c);
    return c;
}

ConstructionResult saturator_clique_witness(int v, int n) {
    if (!(n >= v && v >= 3)) throw std::invalid_argument("saturator_clique_witness requires n >= v >= 3");
    LabeledGraph g(n);
    for (int u = 0; u < v - 2; ++u)
        for (int w = u + 1; w < n; ++w) g.add_edge(u, w);
    ConstructionResult c;
    c.name = "clique-witness";
    c.graph = std::move(g);
    c.pattern = PatternGraph(LabeledGraph::clique(v));
    c.claimed_edges = choose2(v) - 1 + static_cast<long long>(n - v) * (v - 2);
    c.claimed_property = ClaimedProperty::weakly_saturated;
    c.params = {{"v", v}, {"n", n}};
    seal(c);
    return c;
}

ConstructionResult saturator_degree_growth(const PatternGraph& f, int n) {
    const int v = f.vertex_count();
    if (n < v) throw std::invalid_argument("saturator_degree_growth requires n >= v");
    Flatness fl = flatness(f);
    LabeledGraph base = f.graph();
    long long base_edges;
    if (fl.flat) {
        base.remove_edge(fl.witness->first, fl.witness->second);
        base_edges = f.edge_count() - 1;
    } else {
        base = LabeledGraph::clique(v);
        base.remove_edge(0, 1);
        base_edges = choose2(v) - 1;
    }
    LabeledGraph g(n);
    for (auto [a, b] : base.edges()) g.add_edge(a, b);
    for (int x = v; x < n; ++x)
        for (int t = 0; t < f.min_degree() - 1; ++t) g.add_edge(t, x);
    ConstructionResult c;
    c.name = "degree-growth";
    c.graph = std::move(g);
    c.pattern = f;
    c.claimed_edges = base_edges + static_cast<long long>(n - v) * (f.min_degree() - 1);
    c.claimed_property = ClaimedProperty::weakly_saturated;
    c.params = {{"n", n}, {"flat_base", fl.flat ? 1 : 0}};
    seal(c);
    return c;
}

ConstructionResult saturator_union_glue(const LabeledGraph& a, const LabeledGraph& b,
                                        const PatternGraph& f, GlueVariant variant) {
    const int v = f.vertex_count();
    ConstructionResult c;
    c.pattern = f;
    c.claimed_property = ClaimedProperty::weakly_saturated;
    if (variant == GlueVariant::cross_join) {
        if (a.vertex_count() < v - 2 || b.vertex_count() < v - 2)
            throw std::invalid_argument("cross_join requires both parts to have >= v-2 vertices");
        LabeledGraph g = disjoint_union(a, b);
        for (int u = 0; u < v - 2; ++u)
            for (int w = 0; w < v - 2; ++w) g.add_edge(u, a.vertex_count() + w);
        c.name = "union-glue-cross";
        c.graph = std::move(g);
        c.claimed_edges =
            a.edge_count() + b.edge_count() + static_cast<long long>(v - 2) * (v - 2);
    } else {
        if (a.vertex_count() < v || b.vertex_count() < v)
            throw std::invalid_argument("overlap glue requires both parts to have >= v vertices");
        // first copy of F appearing in b's percolation; b complete means any
        // placement works, take the identity one
        Embedding phi;
        if (b.is_complete()) {
            phi.resize(v);
            for (int i = 0; i < v; ++i) phi[i] = i;
        } else {
            PercolationTrace t = trace(f, b);
            if (t.steps.empty())
                throw std::invalid_argument("overlap glue: second part admits no percolation step");
            phi = t.steps.front().embedding;
        }
        std::vector<int> image(phi.begin(), phi.end());
        std::sort(image.begin(), image.end());
        std::vector<int> w_set;
        std::vector<char> in_img(b.vertex_count(), 0);
        for (int x : image) in_img[x] = 1;
        for (int x = 0; x < b.vertex_count(); ++x)
            if (!in_img[x]) w_set.push_back(x);

        // label-order bijection: sorted image of F~ onto the first v vertices of a
        std::vector<int> to_u(b.vertex_count(), -1);
        for (int i = 0; i < v; ++i) to_u[image[i]] = i;

        const int na = a.vertex_count();
        LabeledGraph g(na + static_cast<int>(w_set.size()));
        for (auto [x, y] : a.edges()) g.add_edge(x, y);
        std::vector<int> new_label(b.vertex_count(), -1);
        for (std::size_t i = 0; i < w_set.size(); ++i) new_label[w_set[i]] = na + static_cast<int>(i);
        long long dropped = 0;
        for (auto [x, y] : b.edges()) {
            const bool xi = in_img[x], yi = in_img[y];
            if (xi && yi) {
                ++dropped;
                continue;
            }
            if (!xi && !yi)
                g.add_edge(new_label[x], new_label[y]);
            else if (xi)
                g.add_edge(to_u[x], new_label[y]);
            else
                g.add_edge(new_label[x], to_u[y]);
        }
        c.name = "union-glue-overlap";
        c.graph = std::move(g);
        c.claimed_edges = a.edge_count() + b.edge_count() - dropped;
        c.params["dropped"] = dropped;
    }
    seal(c);
    return c;
}

bool verify_weakly_saturated(const ConstructionResult& c) {
    if (c.claimed_property != ClaimedProperty::weakly_saturated || !c.pattern) return false;
    if (c.graph.edge_count() != c.claimed_edges) return false;
    return is_weakly_saturated(*c.pattern, c.graph, c.graph.vertex_count());
}

std::string claim_json(const ConstructionResult& c) {
    nlohmann::json j;
    j["name"] = c.name;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, val] : c.params) params[key] = val;
    j["params"] = std::move(params);
    j["n"] = c.graph.vertex_count();
    j["claimed_edges"] = c.claimed_edges;
    j["property"] =
        c.claimed_property == ClaimedProperty::weakly_saturated ? "weakly-saturated" : "pattern-family";
    j["graph6"] = to_graph6(c.graph);
    if (!c.distinguished.empty()) j["distinguished"] = c.distinguished;
    if (!c.s_sequence.empty()) j["s_sequence"] = c.s_sequence;
    return j.dump();
}

} // namespace wsat
