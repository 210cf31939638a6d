#pragma once

#include <string>
#include <vector>

#include "treebound/tree.hpp"

namespace treebound {

/// The two hypothesis intervals of the theorems. alpha in {0,1} makes the
/// index degree-free and is rejected by every bound operation.
enum class AlphaRegime {
    ConcaveUnit,  // alpha in (0,1): F1/F2 are upper bounds, F3 lower
    ConvexOuter,  // alpha in (-inf,0) or (1,inf): directions flip
    Degenerate,   // alpha in {0,1}
};

AlphaRegime classify_alpha(double alpha);

enum class BoundDirection { Upper, Lower };

enum class TheoremId { F1Bound, F2Bound, F3Bound };

const char* theorem_name(TheoremId id);      // "F1_BOUND", ...
const char* direction_name(BoundDirection);  // "upper" / "lower"
const char* regime_name(AlphaRegime);        // "concave_unit" / "convex_outer"

struct BoundResult {
    TheoremId theorem = TheoremId::F3Bound;
    BoundDirection direction = BoundDirection::Lower;
    double value = 0.0;
    std::string gamma_range;
    AlphaRegime regime = AlphaRegime::ConcaveUnit;
    int n = 0;
    int gamma = 0;
};

/// Relative comparison tolerance used throughout the bound machinery.
inline constexpr double kBoundTolerance = 1e-9;

/// |a-b| <= tol * max(1, |a|, |b|).
bool nearly_equal(double a, double b, double tol = kBoundTolerance);

/// Sign of f(x) - f(x with x_i -> x_i - 1, x_j -> x_j + 1) where
/// f = sum of x^alpha. Requires x_i - x_j >= 2 and a non-degenerate alpha;
/// the smoothing lemma predicts -1 in the concave-unit regime, +1 outside.
int lemma1_compare(const std::vector<long long>& x, std::size_t i, std::size_t j,
                   double alpha);

/// Value of sum x_i^alpha at the balanced partition of `total` into `parts`
/// positive integers: t parts of size q+1 and parts-t of size q. This is the
/// maximum over all such partitions for alpha in (0,1), the minimum outside.
double balanced_extremum(long long total, int parts, double alpha);

/// Envelope of the index over trees with a minimum dominating set inducing
/// edge-partition difference d = l2 - l3: balanced-partition value for the
/// dominating side (sum n-1+d over gamma parts) plus the complement side
/// (sum n-1-d over n-gamma parts). Requires 1 <= gamma <= n/2, |d| <= gamma-1.
double h_value(int n, int gamma, int d, double alpha);

/// Sharp bound attained exactly by the F1(n, gamma) family; valid for
/// 1 <= gamma <= n/3, n >= 3. Upper bound in the concave-unit regime.
BoundResult bound_f1(int n, int gamma, double alpha);

/// Sharp bound attained by F2(n, gamma); valid for
/// ceil(n/3) <= gamma <= n/2. Piecewise: the path value at gamma = ceil(n/3),
/// a linear form in n and gamma for gamma >= (n+3)/3.
BoundResult bound_f2(int n, int gamma, double alpha);

/// Sharp bound attained by F3(n, gamma); valid for 1 <= gamma <= n/2, n >= 2.
/// Lower bound in the concave-unit regime.
BoundResult bound_f3(int n, int gamma, double alpha);

/// Exact integer values of the bound formulas for integral alpha >= 2.
long long bound_f1_exact(int n, int gamma, int alpha);
long long bound_f2_exact(int n, int gamma, int alpha);
long long bound_f3_exact(int n, int gamma, int alpha);

/// Every bound applicable at (n, gamma): F1 when gamma <= n/3 (n >= 3),
/// F2 when gamma >= ceil(n/3) -- both at the seam -- and always F3.
std::vector<BoundResult> bounds_for(int n, int gamma, double alpha);

}  // namespace treebound
