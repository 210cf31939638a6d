#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "treebound/bounds.hpp"
#include "treebound/enumeration.hpp"
#include "treebound/invariants.hpp"

using namespace treebound;

TEST_CASE("alpha regime classification") {
    CHECK(classify_alpha(0.5) == AlphaRegime::ConcaveUnit);
    CHECK(classify_alpha(0.001) == AlphaRegime::ConcaveUnit);
    CHECK(classify_alpha(2.0) == AlphaRegime::ConvexOuter);
    CHECK(classify_alpha(-1.0) == AlphaRegime::ConvexOuter);
    CHECK(classify_alpha(-0.5) == AlphaRegime::ConvexOuter);
    CHECK(classify_alpha(0.0) == AlphaRegime::Degenerate);
    CHECK(classify_alpha(1.0) == AlphaRegime::Degenerate);
}

TEST_CASE("nearly_equal") {
    CHECK(nearly_equal(1.0, 1.0 + 1e-12));
    CHECK_FALSE(nearly_equal(1.0, 1.0 + 1e-6));
    CHECK(nearly_equal(1e9, 1e9 + 0.1));  // relative scaling
    CHECK_FALSE(nearly_equal(0.0, 1e-6));
}

TEST_CASE("smoothing step sign follows the regime") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(2, 8), val(1, 30);
    for (int it = 0; it < 200; ++it) {
        std::vector<long long> x(len(rng));
        for (auto& v : x) v = val(rng);
        // force a valid gap at positions 0, 1
        if (x[0] - x[1] < 2) x[0] = x[1] + 2;
        for (double a : {0.25, 0.5, 0.75})
            CHECK(lemma1_compare(x, 0, 1, a) == -1);
        for (double a : {-1.0, -0.5, 2.0, 3.0, 1.5})
            CHECK(lemma1_compare(x, 0, 1, a) == 1);
    }
    CHECK_THROWS(lemma1_compare({3, 2}, 0, 1, 0.5));  // gap < 2
    CHECK_THROWS(lemma1_compare({5, 1}, 0, 1, 1.0));  // degenerate alpha
}

namespace {

// Extremum of sum x_i^alpha over positive integer compositions by brute force.
double composition_extremum(long long total, int parts, double alpha, bool want_max) {
    std::vector<long long> x(parts, 1);
    x[0] = total - (parts - 1);
    double best = 0.0;
    bool first = true;
    // iterate weakly decreasing partitions; the extremum is permutation-invariant
    std::vector<long long> p(parts, 0);
    auto rec = [&](auto&& self, int idx, long long rest, long long cap) -> void {
        if (idx == parts - 1) {
            if (rest < 1 || rest > cap) return;
            p[idx] = rest;
            double s = 0.0;
            for (int i = 0; i < parts; ++i) s += std::pow(static_cast<double>(p[i]), alpha);
            if (first || (want_max ? s > best : s < best)) best = s, first = false;
            return;
        }
        for (long long v = std::min(cap, rest - (parts - 1 - idx)); v >= 1; --v) {
            p[idx] = v;
            self(self, idx + 1, rest - v, v);
        }
    };
    rec(rec, 0, total, total);
    return best;
}

}  // namespace

TEST_CASE("balanced_extremum concrete values") {
    CHECK(balanced_extremum(7, 3, 2.0) == doctest::Approx(17.0));   // 3,2,2
    CHECK(balanced_extremum(6, 4, 2.0) == doctest::Approx(10.0));   // 2,2,1,1
    CHECK(balanced_extremum(5, 1, 3.0) == doctest::Approx(125.0));
    CHECK_THROWS(balanced_extremum(3, 4, 2.0));  // no positive partition
}

TEST_CASE("balanced_extremum is the composition extremum") {
    for (long long total = 1; total <= 16; ++total)
        for (int parts = 1; parts <= std::min<long long>(5, total); ++parts)
            for (double a : {0.25, 0.5, 0.75, -0.5, -1.0, 2.0, 3.0}) {
                bool concave = a > 0 && a < 1;
                CHECK(balanced_extremum(total, parts, a) ==
                      doctest::Approx(composition_extremum(total, parts, a, concave))
                          .epsilon(1e-9));
            }
}

TEST_CASE("h_value concrete and envelope property") {
    CHECK(h_value(6, 2, -1, 2.0) == doctest::Approx(18.0));
    CHECK(h_value(6, 2, 1, 2.0) ==
          doctest::Approx(balanced_extremum(6, 2, 2.0) + balanced_extremum(4, 4, 2.0)));
    CHECK_THROWS(h_value(6, 2, 2, 2.0));  // |d| > gamma-1
    // the index of any tree is enveloped by h at d = l2 - l3 of any minimum set
    for (int n = 4; n <= 9; ++n)
        for (const Tree& t : free_trees(n))
            for (const auto& cert : min_dominating_sets(t)) {
                auto ep = edge_partition(t, cert.vertex_set);
                int d = ep.inside_dom - ep.outside_dom;
                for (double a : {0.25, 0.5, 0.75}) {
                    double r = zeroth_order_general_randic(t, a);
                    CHECK(r <= h_value(n, cert.gamma, d, a) + 1e-9);
                }
                for (double a : {-1.0, -0.5, 2.0, 3.0}) {
                    double r = zeroth_order_general_randic(t, a);
                    CHECK(r >= h_value(n, cert.gamma, d, a) - 1e-9);
                }
            }
}

TEST_CASE("bound formula values at alpha = 2") {
    CHECK(bound_f1(6, 2, 2.0).value == doctest::Approx(18.0));
    CHECK(bound_f2(6, 2, 2.0).value == doctest::Approx(18.0));  // seam, path value
    CHECK(bound_f2(6, 3, 2.0).value == doctest::Approx(20.0));
    CHECK(bound_f3(6, 3, 2.0).value == doctest::Approx(20.0));
    CHECK(bound_f2(8, 4, 2.0).value == doctest::Approx(30.0));
    CHECK(bound_f1_exact(6, 2, 2) == 18);
    CHECK(bound_f2_exact(8, 4, 2) == 30);
    CHECK(bound_f3_exact(6, 3, 2) == 20);
}

TEST_CASE("exact and float bound formulas agree for integral alpha") {
    for (int n = 3; n <= 14; ++n)
        for (int g = 1; 2 * g <= n; ++g)
            for (int a : {2, 3}) {
                if (3 * g <= n)
                    CHECK(bound_f1(n, g, a).value ==
                          doctest::Approx(static_cast<double>(bound_f1_exact(n, g, a))));
                if (g >= (n + 2) / 3)
                    CHECK(bound_f2(n, g, a).value ==
                          doctest::Approx(static_cast<double>(bound_f2_exact(n, g, a))));
                CHECK(bound_f3(n, g, a).value ==
                      doctest::Approx(static_cast<double>(bound_f3_exact(n, g, a))));
            }
}

TEST_CASE("directions follow the regime") {
    auto b = bound_f1(9, 3, 0.5);
    CHECK(b.direction == BoundDirection::Upper);
    CHECK(b.regime == AlphaRegime::ConcaveUnit);
    CHECK(bound_f1(9, 3, 2.0).direction == BoundDirection::Lower);
    CHECK(bound_f3(9, 3, 0.5).direction == BoundDirection::Lower);
    CHECK(bound_f3(9, 3, -1.0).direction == BoundDirection::Upper);
    CHECK(bound_f2(9, 4, 0.5).direction == BoundDirection::Upper);
    CHECK_THROWS(bound_f1(9, 3, 1.0));
    CHECK_THROWS(bound_f3(9, 3, 0.0));
}

TEST_CASE("parameter range validation") {
    CHECK_THROWS(bound_f1(9, 4, 2.0));  // gamma > n/3
    CHECK_THROWS(bound_f2(9, 2, 2.0));  // gamma < ceil(n/3)
    CHECK_THROWS(bound_f2(9, 5, 2.0));  // gamma > n/2
    CHECK_THROWS(bound_f3(9, 5, 2.0));
    CHECK_THROWS(bound_f3(9, 0, 2.0));
}

TEST_CASE("bounds_for applicability") {
    // n = 9: F1 for gamma <= 3, F2 for gamma >= 3, F3 always
    auto at = [](int n, int g, double a) {
        std::vector<TheoremId> ids;
        for (const auto& b : bounds_for(n, g, a)) ids.push_back(b.theorem);
        return ids;
    };
    auto ids2 = at(9, 2, 2.0);
    CHECK(std::count(ids2.begin(), ids2.end(), TheoremId::F1Bound) == 1);
    CHECK(std::count(ids2.begin(), ids2.end(), TheoremId::F2Bound) == 0);
    CHECK(std::count(ids2.begin(), ids2.end(), TheoremId::F3Bound) == 1);
    auto ids3 = at(9, 3, 2.0);  // seam: both F1 and F2
    CHECK(ids3.size() == 3);
    auto ids4 = at(9, 4, 2.0);
    CHECK(std::count(ids4.begin(), ids4.end(), TheoremId::F1Bound) == 0);
    CHECK(std::count(ids4.begin(), ids4.end(), TheoremId::F2Bound) == 1);
}

TEST_CASE("bounds hold on every tree, n <= 10") {
    for (int n = 3; n <= 10; ++n)
        for (const Tree& t : free_trees(n)) {
            int g = domination_number(t).gamma;
            for (double a : {0.25, 0.5, 0.75, -1.0, -0.5, 2.0, 3.0}) {
                double r = zeroth_order_general_randic(t, a);
                for (const auto& b : bounds_for(n, g, a)) {
                    if (b.direction == BoundDirection::Upper)
                        CHECK(r <= b.value + 1e-9 * std::max(1.0, std::abs(b.value)));
                    else
                        CHECK(r >= b.value - 1e-9 * std::max(1.0, std::abs(b.value)));
                }
            }
        }
}

TEST_CASE("F1 and F2 agree at the seam when 3 divides n") {
    for (int n : {6, 9, 12})
        for (double a : {0.25, 0.5, -1.0, 2.0, 3.0})
            CHECK(bound_f1(n, n / 3, a).value == doctest::Approx(bound_f2(n, n / 3, a).value));
}
