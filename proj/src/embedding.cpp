#include "wsat/embedding.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <stdexcept>

namespace wsat {

namespace {

int popcount_words(const std::uint64_t* w, int n) {
    int c = 0;
    for (int i = 0; i < n; ++i) c += std::popcount(w[i]);
    return c;
}

} // namespace

EmbeddingFinder::EmbeddingFinder(const PatternGraph& f)
    : f_(f.graph()), v_(f.vertex_count()) {
    fdeg_.resize(v_);
    for (int u = 0; u < v_; ++u) fdeg_[u] = f_.degree(u);
    for (auto [a, b] : f_.edges()) plans_.push_back({a, b});
}

// Forward-checking backtracker: each unplaced F-vertex keeps a bitset domain
// of host candidates, intersected on every assignment; the next vertex is
// always one with the smallest domain. A node is one candidate consumption.
int EmbeddingFinder::try_plan(const AnchorPlan& plan, const LabeledGraph& h,
                              const std::vector<int>& hdeg, int x, int y, Embedding& out,
                              long long& nodes_left) const {
    const int W = h.word_count();
    const int hn = h.vertex_count();
    const int a = plan.a, b = plan.b;
    std::fill(out.begin(), out.end(), -1);
    out[a] = x;
    out[b] = y;
    if (v_ == 2) return 1;

    std::uint64_t tail_mask = ~std::uint64_t{0};
    if (hn % 64) tail_mask = (std::uint64_t{1} << (hn % 64)) - 1;

    const int levels = v_ - 2;
    std::vector<std::uint64_t> dom(static_cast<std::size_t>(levels + 1) * v_ * W);
    auto dom_at = [&](int level, int w) {
        return dom.data() + (static_cast<std::size_t>(level) * v_ + w) * W;
    };

    std::vector<char> placed(v_, 0);
    placed[a] = placed[b] = 1;
    for (int w = 0; w < v_; ++w) {
        if (placed[w]) continue;
        std::uint64_t* d = dom_at(0, w);
        if (f_.has_edge(w, a)) {
            const std::uint64_t* r = h.row(x);
            for (int i = 0; i < W; ++i) d[i] = r[i];
        } else {
            for (int i = 0; i < W; ++i) d[i] = ~std::uint64_t{0};
            d[W - 1] &= tail_mask;
        }
        if (f_.has_edge(w, b)) {
            const std::uint64_t* r = h.row(y);
            for (int i = 0; i < W; ++i) d[i] &= r[i];
        }
        d[x / 64] &= ~(std::uint64_t{1} << (x % 64));
        d[y / 64] &= ~(std::uint64_t{1} << (y % 64));
        for (int i = 0; i < W; ++i) {
            std::uint64_t bits = d[i];
            while (bits) {
                int c = i * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (hdeg[c] < fdeg_[w]) d[i] &= ~(std::uint64_t{1} << (c % 64));
            }
        }
        if (popcount_words(d, W) == 0) return 0;
    }

    std::vector<int> chosen_vertex(levels, -1);
    int level = 0;
    while (true) {
        if (level == levels) return 1;
        int w = chosen_vertex[level];
        if (w < 0) {
            int best_count = -1;
            for (int cand = 0; cand < v_; ++cand) {
                if (placed[cand]) continue;
                int c = popcount_words(dom_at(level, cand), W);
                if (w < 0 || c < best_count ||
                    (c == best_count && fdeg_[cand] > fdeg_[w])) {
                    best_count = c;
                    w = cand;
                }
            }
            chosen_vertex[level] = w;
            if (best_count == 0) {
                chosen_vertex[level] = -1;
                if (level == 0) return 0;
                --level;
                placed[chosen_vertex[level]] = 0;
                out[chosen_vertex[level]] = -1;
                continue;
            }
        }

        std::uint64_t* dw = dom_at(level, w);
        int c = -1;
        for (int i = 0; i < W && c < 0; ++i)
            if (dw[i]) {
                c = i * 64 + std::countr_zero(dw[i]);
                dw[i] &= dw[i] - 1;  // consume
            }
        if (c < 0) {
            chosen_vertex[level] = -1;
            if (level == 0) return 0;
            --level;
            placed[chosen_vertex[level]] = 0;
            out[chosen_vertex[level]] = -1;
            continue;
        }
        if (--nodes_left < 0) return -1;

        bool ok = true;
        const std::uint64_t* rc = h.row(c);
        for (int z = 0; z < v_ && ok; ++z) {
            if (placed[z] || z == w) continue;
            const std::uint64_t* src = dom_at(level, z);
            std::uint64_t* dst = dom_at(level + 1, z);
            if (f_.has_edge(z, w)) {
                for (int i = 0; i < W; ++i) dst[i] = src[i] & rc[i];
            } else {
                for (int i = 0; i < W; ++i) dst[i] = src[i];
                dst[c / 64] &= ~(std::uint64_t{1} << (c % 64));
            }
            if (popcount_words(dst, W) == 0) ok = false;
        }
        if (!ok) continue;  // try w's next candidate at this level

        out[w] = c;
        placed[w] = 1;
        ++level;
        if (level < levels) chosen_vertex[level] = -1;
    }
}

FindStatus EmbeddingFinder::find_budgeted(const LabeledGraph& h, int hu, int hv,
                                          long long max_nodes, Embedding& out) const {
    if (!h.has_edge(hu, hv)) throw std::invalid_argument("anchor must be an edge of the host");
    const int hn = h.vertex_count();
    if (v_ > hn) return FindStatus::refuted;
    std::vector<int> hdeg(hn);
    for (int u = 0; u < hn; ++u) hdeg[u] = h.degree(u);
    if (static_cast<int>(out.size()) != v_) out.assign(v_, -1);

    long long nodes_left = max_nodes;
    bool exceeded = false;
    for (const auto& plan : plans_) {
        if (fdeg_[plan.a] <= hdeg[hu] && fdeg_[plan.b] <= hdeg[hv]) {
            int r = try_plan(plan, h, hdeg, hu, hv, out, nodes_left);
            if (r == 1) return FindStatus::found;
            if (r == -1) exceeded = true;
        }
        if (exceeded) break;
        if (fdeg_[plan.a] <= hdeg[hv] && fdeg_[plan.b] <= hdeg[hu]) {
            int r = try_plan(plan, h, hdeg, hv, hu, out, nodes_left);
            if (r == 1) return FindStatus::found;
            if (r == -1) exceeded = true;
        }
        if (exceeded) break;
    }
    return exceeded ? FindStatus::budget_exhausted : FindStatus::refuted;
}

std::optional<Embedding> EmbeddingFinder::find(const LabeledGraph& h, int hu, int hv) const {
    Embedding out;
    if (find_budgeted(h, hu, hv, LLONG_MAX, out) == FindStatus::found) return out;
    return std::nullopt;
}

std::optional<Embedding> find_embedding_using_edge(const PatternGraph& f, const LabeledGraph& h,
                                                   int hu, int hv) {
    return EmbeddingFinder(f).find(h, hu, hv);
}

} // namespace wsat
