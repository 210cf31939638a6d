#include "treebound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace treebound {

AlphaRegime classify_alpha(double alpha) {
    if (alpha == 0.0 || alpha == 1.0) return AlphaRegime::Degenerate;
    if (alpha > 0.0 && alpha < 1.0) return AlphaRegime::ConcaveUnit;
    return AlphaRegime::ConvexOuter;
}

const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::F1Bound: return "F1_BOUND";
        case TheoremId::F2Bound: return "F2_BOUND";
        case TheoremId::F3Bound: return "F3_BOUND";
    }
    return "?";
}

const char* direction_name(BoundDirection d) {
    return d == BoundDirection::Upper ? "upper" : "lower";
}

const char* regime_name(AlphaRegime r) {
    switch (r) {
        case AlphaRegime::ConcaveUnit: return "concave_unit";
        case AlphaRegime::ConvexOuter: return "convex_outer";
        case AlphaRegime::Degenerate: return "degenerate";
    }
    return "?";
}

bool nearly_equal(double a, double b, double tol) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

namespace {

AlphaRegime require_nondegenerate(double alpha) {
    AlphaRegime r = classify_alpha(alpha);
    if (r == AlphaRegime::Degenerate)
        throw std::invalid_argument("alpha in {0,1} is excluded by the theorems");
    return r;
}

long long ipow_ll(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

void require_exact_alpha(int alpha) {
    if (alpha < 2) throw std::invalid_argument("exact bound path needs alpha >= 2");
}

}  // namespace

int lemma1_compare(const std::vector<long long>& x, std::size_t i, std::size_t j,
                   double alpha) {
    require_nondegenerate(alpha);
    if (i >= x.size() || j >= x.size() || i == j)
        throw std::invalid_argument("bad index pair");
    if (x[i] - x[j] < 2)
        throw std::invalid_argument("smoothing step requires x_i - x_j >= 2");
    double xi = static_cast<double>(x[i]);
    double xj = static_cast<double>(x[j]);
    double a = std::pow(xi, alpha), b = std::pow(xj, alpha);
    double c = std::pow(xi - 1.0, alpha), d = std::pow(xj + 1.0, alpha);
    double diff = a + b - c - d;
    double scale = std::max({1.0, std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    if (std::abs(diff) <= 1e-12 * scale) return 0;
    return diff > 0 ? 1 : -1;
}

double balanced_extremum(long long total, int parts, double alpha) {
    require_nondegenerate(alpha);
    if (parts < 1 || total < parts)
        throw std::invalid_argument("need total >= parts >= 1");
    long long q = total / parts;
    long long t = total - q * parts;
    return static_cast<double>(t) * std::pow(static_cast<double>(q + 1), alpha) +
           static_cast<double>(parts - t) * std::pow(static_cast<double>(q), alpha);
}

double h_value(int n, int gamma, int d, double alpha) {
    require_nondegenerate(alpha);
    if (n < 2 || gamma < 1 || gamma > n / 2)
        throw std::invalid_argument("need 1 <= gamma <= n/2, n >= 2");
    if (std::abs(d) > gamma - 1)
        throw std::invalid_argument("need |l2 - l3| <= gamma - 1");
    return balanced_extremum(n - 1 + d, gamma, alpha) +
           balanced_extremum(n - 1 - d, n - gamma, alpha);
}

BoundResult bound_f1(int n, int gamma, double alpha) {
    AlphaRegime regime = require_nondegenerate(alpha);
    if (n < 3) throw std::invalid_argument("F1 bound needs n >= 3");
    if (gamma < 1 || 3 * gamma > n)
        throw std::invalid_argument("F1 bound needs 1 <= gamma <= n/3");
    double f = static_cast<double>((n - 1) / gamma);
    double value = (std::pow(f, alpha) - std::pow(f - 1, alpha)) *
                       (n - gamma * f) +
                   gamma * std::pow(f - 1, alpha) +
                   2.0 * (std::pow(2.0, alpha) - 1.0) * (gamma - 1) + (n - gamma);
    return {TheoremId::F1Bound,
            regime == AlphaRegime::ConcaveUnit ? BoundDirection::Upper
                                               : BoundDirection::Lower,
            value, "1 <= gamma <= n/3", regime, n, gamma};
}

BoundResult bound_f2(int n, int gamma, double alpha) {
    AlphaRegime regime = require_nondegenerate(alpha);
    int lo = (n + 2) / 3;  // ceil(n/3)
    if (gamma < lo || 2 * gamma > n)
        throw std::invalid_argument("F2 bound needs ceil(n/3) <= gamma <= n/2");
    double p2 = std::pow(2.0, alpha), p3 = std::pow(3.0, alpha);
    double value;
    if (gamma == lo) {
        value = (n - 2) * p2 + 2.0;
    } else {
        value = (-p3 + 3.0 * p2 - 1.0) * n + 3.0 * (p3 - 2.0 * p2 + 1.0) * gamma +
                2.0 * (p2 - p3);
    }
    return {TheoremId::F2Bound,
            regime == AlphaRegime::ConcaveUnit ? BoundDirection::Upper
                                               : BoundDirection::Lower,
            value, "ceil(n/3) <= gamma <= n/2", regime, n, gamma};
}

BoundResult bound_f3(int n, int gamma, double alpha) {
    AlphaRegime regime = require_nondegenerate(alpha);
    if (n < 2 || gamma < 1 || 2 * gamma > n)
        throw std::invalid_argument("F3 bound needs 1 <= gamma <= n/2, n >= 2");
    double value = std::pow(static_cast<double>(n - gamma), alpha) + (n - gamma) +
                   (gamma - 1) * std::pow(2.0, alpha);
    return {TheoremId::F3Bound,
            regime == AlphaRegime::ConcaveUnit ? BoundDirection::Lower
                                               : BoundDirection::Upper,
            value, "1 <= gamma <= floor(n/2)", regime, n, gamma};
}

long long bound_f1_exact(int n, int gamma, int alpha) {
    require_exact_alpha(alpha);
    long long f = (n - 1) / gamma;
    return (ipow_ll(f, alpha) - ipow_ll(f - 1, alpha)) * (n - gamma * f) +
           gamma * ipow_ll(f - 1, alpha) +
           2 * (ipow_ll(2, alpha) - 1) * (gamma - 1) + (n - gamma);
}

long long bound_f2_exact(int n, int gamma, int alpha) {
    require_exact_alpha(alpha);
    long long p2 = ipow_ll(2, alpha), p3 = ipow_ll(3, alpha);
    if (gamma == (n + 2) / 3) return (n - 2) * p2 + 2;
    return (-p3 + 3 * p2 - 1) * n + 3 * (p3 - 2 * p2 + 1) * gamma + 2 * (p2 - p3);
}

long long bound_f3_exact(int n, int gamma, int alpha) {
    require_exact_alpha(alpha);
    return ipow_ll(n - gamma, alpha) + (n - gamma) + (gamma - 1) * ipow_ll(2, alpha);
}

std::vector<BoundResult> bounds_for(int n, int gamma, double alpha) {
    require_nondegenerate(alpha);
    if (n < 2 || gamma < 1 || 2 * gamma > n)
        throw std::invalid_argument("need 1 <= gamma <= n/2, n >= 2");
    std::vector<BoundResult> out;
    if (n >= 3 && 3 * gamma <= n) out.push_back(bound_f1(n, gamma, alpha));
    if (gamma >= (n + 2) / 3) out.push_back(bound_f2(n, gamma, alpha));
    out.push_back(bound_f3(n, gamma, alpha));
    return out;
}

}  // namespace treebound
