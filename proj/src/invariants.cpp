#include "treebound/invariants.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace treebound {

namespace {

long long ipow_ll(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

bool is_small_nonneg_integer(double alpha, int& out) {
    double r = std::round(alpha);
    if (r < 0 || r > 15 || std::abs(alpha - r) > 0) return false;
    out = static_cast<int>(r);
    return true;
}

}  // namespace

long long zeroth_order_randic_exact(const Tree& t, int alpha) {
    if (alpha < 0) throw std::invalid_argument("exact path needs alpha >= 0");
    if (t.order() == 1 && alpha == 0)
        throw std::invalid_argument("0^0 undefined for the single-vertex tree");
    long long sum = 0;
    for (int v = 0; v < t.order(); ++v) sum += ipow_ll(t.degree(v), alpha);
    return sum;
}

double zeroth_order_general_randic(const Tree& t, double alpha) {
    if (t.order() == 1 && alpha <= 0)
        throw std::invalid_argument(
            "index undefined for the single-vertex tree with alpha <= 0");
    int ialpha = 0;
    if (is_small_nonneg_integer(alpha, ialpha))
        return static_cast<double>(zeroth_order_randic_exact(t, ialpha));
    double sum = 0;
    for (int v = 0; v < t.order(); ++v)
        sum += std::pow(static_cast<double>(t.degree(v)), alpha);
    return sum;
}

bool is_dominating(const Tree& t, const std::vector<int>& set) {
    const int n = t.order();
    std::vector<char> covered(n, 0);
    for (int v : set) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
        covered[v] = 1;
        for (int u : t.neighbors(v)) covered[u] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

enum State { kChosen = 0, kDominated = 1, kPending = 2 };

struct DomDp {
    const Tree& t;
    std::vector<int> parent, order;
    std::vector<std::array<int, 3>> dp;

    explicit DomDp(const Tree& tree) : t(tree) {
        const int n = t.order();
        parent.assign(n, -1);
        order.reserve(n);
        order.push_back(0);
        for (std::size_t i = 0; i < order.size(); ++i) {
            int v = order[i];
            for (int u : t.neighbors(v))
                if (u != parent[v]) {
                    parent[u] = v;
                    order.push_back(u);
                }
        }
        dp.assign(n, {kInf, kInf, kInf});
        for (int i = n - 1; i >= 0; --i) compute(order[i]);
    }

    void compute(int v) {
        int sum_all = 1;       // chosen: 1 for v, children free
        int sum_nochoice = 0;  // dominated/pending: children chosen-or-dominated
        int flip = kInf;       // cheapest way to force one child chosen
        bool has_chosen_child = false;
        for (int u : t.neighbors(v)) {
            if (u == parent[v]) continue;
            sum_all += std::min({dp[u][kChosen], dp[u][kDominated], dp[u][kPending]});
            int nd = std::min(dp[u][kChosen], dp[u][kDominated]);
            sum_nochoice += nd;
            if (dp[u][kChosen] <= dp[u][kDominated]) has_chosen_child = true;
            flip = std::min(flip, dp[u][kChosen] - nd);
        }
        dp[v][kChosen] = sum_all;
        dp[v][kPending] = sum_nochoice;
        dp[v][kDominated] =
            has_chosen_child ? sum_nochoice
                             : (flip == kInf ? kInf : sum_nochoice + flip);
    }

    // Deterministic backtrace; ties prefer the chosen state, and the forced
    // chosen child in the dominated state is the lowest eligible index.
    void backtrace(int v, State st, std::vector<int>& out) const {
        if (st == kChosen) out.push_back(v);
        int forced = -1;
        if (st == kDominated) {
            bool any = false;
            for (int u : t.neighbors(v)) {
                if (u == parent[v]) continue;
                if (dp[u][kChosen] <= dp[u][kDominated]) { any = true; break; }
            }
            if (!any) {
                int best = kInf;
                for (int u : t.neighbors(v)) {
                    if (u == parent[v]) continue;
                    int cost = dp[u][kChosen] - std::min(dp[u][kChosen], dp[u][kDominated]);
                    if (cost < best) { best = cost; forced = u; }
                }
            }
        }
        for (int u : t.neighbors(v)) {
            if (u == parent[v]) continue;
            State cs;
            if (st == kChosen) {
                int m = std::min({dp[u][kChosen], dp[u][kDominated], dp[u][kPending]});
                cs = dp[u][kChosen] == m ? kChosen
                     : dp[u][kDominated] == m ? kDominated : kPending;
            } else {
                if (u == forced) cs = kChosen;
                else cs = dp[u][kChosen] <= dp[u][kDominated] ? kChosen : kDominated;
            }
            backtrace(u, cs, out);
        }
    }
};

}  // namespace

DominationCertificate domination_number(const Tree& t) {
    DomDp dp(t);
    State root_state =
        dp.dp[0][kChosen] <= dp.dp[0][kDominated] ? kChosen : kDominated;
    DominationCertificate cert;
    dp.backtrace(0, root_state, cert.vertex_set);
    std::sort(cert.vertex_set.begin(), cert.vertex_set.end());
    cert.gamma = static_cast<int>(cert.vertex_set.size());
    return cert;
}

namespace {

std::vector<uint32_t> closed_neighbor_masks(const Tree& t) {
    const int n = t.order();
    std::vector<uint32_t> mask(n);
    for (int v = 0; v < n; ++v) {
        mask[v] = 1u << v;
        for (int u : t.neighbors(v)) mask[v] |= 1u << u;
    }
    return mask;
}

}  // namespace

int domination_number_oracle(const Tree& t) {
    const int n = t.order();
    if (n > 16) throw std::invalid_argument("oracle cost guard: n must be <= 16");
    auto mask = closed_neighbor_masks(t);
    const uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    int best = n;
    for (uint32_t s = 1; s < (1u << n); ++s) {
        int size = std::popcount(s);
        if (size >= best) continue;
        uint32_t cov = 0;
        for (uint32_t rest = s; rest; rest &= rest - 1)
            cov |= mask[std::countr_zero(rest)];
        if (cov == full) best = size;
    }
    return best;
}

std::vector<DominationCertificate> min_dominating_sets(const Tree& t) {
    const int n = t.order();
    if (n > 16) throw std::invalid_argument("cost guard: n must be <= 16");
    auto mask = closed_neighbor_masks(t);
    const uint32_t full = (1u << n) - 1;
    const int gamma = domination_number(t).gamma;
    std::vector<DominationCertificate> out;
    for (uint32_t s = 0; s < (1u << n); ++s) {
        if (std::popcount(s) != gamma) continue;
        uint32_t cov = 0;
        for (uint32_t rest = s; rest; rest &= rest - 1)
            cov |= mask[std::countr_zero(rest)];
        if (cov != full) continue;
        DominationCertificate cert;
        cert.gamma = gamma;
        for (int v = 0; v < n; ++v)
            if (s & (1u << v)) cert.vertex_set.push_back(v);
        out.push_back(std::move(cert));
    }
    return out;
}

EdgePartition edge_partition(const Tree& t, const std::vector<int>& dom_set) {
    const int n = t.order();
    std::vector<char> in(n, 0);
    for (int v : dom_set) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
        in[v] = 1;
    }
    EdgePartition p;
    for (auto [u, v] : t.edges()) {
        if (in[u] && in[v]) ++p.inside_dom;
        else if (!in[u] && !in[v]) ++p.outside_dom;
        else ++p.crossing;
    }
    return p;
}

}  // namespace treebound
