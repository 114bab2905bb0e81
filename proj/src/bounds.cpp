#include "wsat/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace wsat {

namespace {

long long gstar_at(const BoundProfile& p, int r, int i) {
    if (auto it = p.gstar.find(r); it != p.gstar.end() && i < static_cast<int>(it->second.size()))
        return it->second[i];
    return gstar_table(p.ed, r, i)[i];  // extend on demand
}

} // namespace

long long upper_bound_generic(const BoundProfile& p, int n) {
    if (n < p.v) throw std::invalid_argument("upper_bound_generic requires n >= v");
    const long long wsat_v =
        p.flat ? p.l - 1 : static_cast<long long>(p.v) * (p.v - 1) / 2 - 1;
    return wsat_v + static_cast<long long>(n - p.v) * (p.delta - 1);
}

long long lower_bound_fgj(const BoundProfile& p, int n) {
    Rational slope = Rational(p.delta, 2) - Rational(1, p.delta + 1);
    return (slope * Rational(n)).ceil();
}

long long lower_bound_theorem1(const PatternGraph& f, const BoundProfile& p, int n) {
    if (p.delta < 2) throw std::invalid_argument("three-case lower bound requires delta >= 2");
    if (n < p.v) throw std::invalid_argument("lower_bound_theorem1 requires n >= v");
    const int d = p.delta;
    Rational slope = Rational(d, 2) - Rational(1, d + 1);
    if (d % 2 == 1 && f.connected())
        slope = std::max(slope, Rational(d, 2) - Rational(1, 2 * (d + 2)));
    if ((d % 2 == 0 && f.connected()) || f.two_edge_connected())
        slope = std::max(slope, Rational(d, 2));
    return (slope * Rational(n - p.v)).ceil() + p.l - 1;
}

long long lower_bound_gstar(const BoundProfile& p, int n) {
    if (n < p.v) throw std::invalid_argument("lower_bound_gstar requires n >= v");
    return gstar_at(p, 1, n - p.v) + p.l - 1;
}

bool check_subadditive_g(std::span<const long long> g, const EdgeDeficiencyVector& ed) {
    const int I = static_cast<int>(g.size()) - 1;
    if (I < 0) return false;
    for (int i = 0; i <= I; ++i)
        for (int j = i; i + j <= I; ++j)
            if (g[i + j] > g[i] + g[j]) return false;
    for (int i = 0; i <= std::min(I, ed.v - 1); ++i)
        if (g[i] > ed.e[i]) return false;
    return true;
}

long long lower_bound_cf(const BoundProfile& p, int n, const Rational& cf) {
    if (n < p.v) throw std::invalid_argument("lower_bound_cf requires n >= v");
    return (cf * Rational(n - p.v)).ceil() + p.l - 1;
}

BridgesStatus bridges_status(const BoundProfile& p, int r) {
    if (r < 0 || r > p.v - 1) throw std::invalid_argument("bridges_status requires 0 <= r <= v-1");
    BridgesStatus s;
    s.r = r;
    s.flat = p.flat;
    auto kr = kset_r(p.ed, r);
    s.kmax_r = kr.empty() ? 0 : kr.back();
    s.v_minus_beta = p.v - p.beta;
    s.kmax_le_v_minus_beta = s.kmax_r <= s.v_minus_beta;
    s.property2 = p.flat && s.kmax_le_v_minus_beta;
    s.window_imax = p.gstar_imax;
    auto gb = gstar_table(p.ed, p.beta, s.window_imax);
    auto gr = gstar_table(p.ed, r, s.window_imax);
    bool pointwise = true;
    for (int i = 0; i <= s.window_imax; ++i)
        if (gb[i] > gr[i]) {
            pointwise = false;
            break;
        }
    s.gstar_beta_le_r = pointwise;
    s.property3_window = p.flat && pointwise;
    s.upper_bound_valid = s.property2;
    return s;
}

std::optional<long long> predicted_exact(const BoundProfile& p, int n) {
    if (n < p.v) throw std::invalid_argument("predicted_exact requires n >= v");
    if (!p.flat) return std::nullopt;
    if (p.v < 3) return std::nullopt;  // r = 2 needs r <= v-1
    auto k2 = kset_r(p.ed, 2);
    const int kmax = k2.empty() ? 0 : k2.back();
    if (kmax > p.v - p.beta) return std::nullopt;
    return gstar_at(p, 2, n - p.v) + p.l - 1;
}

std::optional<long long> predicted_exact_fabc(int a, int b, int c, const BoundProfile& p, int n) {
    if (!(1 <= c && c <= a && a <= b)) throw std::invalid_argument("require 1 <= c <= a <= b");
    if (n < p.v) throw std::invalid_argument("predicted_exact_fabc requires n >= v");
    if (a < b) return gstar_at(p, 1, n - p.v) + p.l - 1;
    if (a == 5 && b == 5 && c == 4) return gstar_at(p, 2, n - p.v) + p.l - 1;
    return std::nullopt;
}

BoundReport bound_report(const PatternGraph& f, const BoundProfile& p, int n,
                         const std::optional<Rational>& cf) {
    BoundReport rep;
    rep.n = n;
    rep.lower.push_back({"fgj", lower_bound_fgj(p, n)});
    if (p.delta >= 2) {
        const char* tag = f.two_edge_connected()                  ? "thm1-2ec"
                          : f.connected() && p.delta % 2 == 0     ? "thm1-even-conn"
                          : f.connected()                         ? "thm1-odd-conn"
                                                                  : "thm1-base";
        rep.lower.push_back({tag, lower_bound_theorem1(f, p, n)});
    }
    rep.lower.push_back({"gstar", lower_bound_gstar(p, n)});
    if (cf) rep.lower.push_back({"cf", lower_bound_cf(p, n, *cf)});

    rep.upper.push_back({"eq1", upper_bound_generic(p, n)});
    if (p.flat) rep.upper.push_back({"cor1-gstar-beta", gstar_at(p, p.beta, n - p.v) + p.l - 1});

    if (auto ex = predicted_exact(p, n)) rep.exact = BoundEntry{"cor2-gstar2", *ex};
    return rep;
}

std::string to_json(const BoundReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    auto entries = [](const std::vector<BoundEntry>& v) {
        auto arr = nlohmann::json::array();
        for (const auto& e : v) arr.push_back({{"src", e.source}, {"val", e.value}});
        return arr;
    };
    j["lower"] = entries(r.lower);
    j["upper"] = entries(r.upper);
    if (r.exact)
        j["exact"] = {{"src", r.exact->source}, {"val", r.exact->value}};
    else
        j["exact"] = nullptr;
    return j.dump();
}

} // namespace wsat
