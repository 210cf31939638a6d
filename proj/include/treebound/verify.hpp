#pragma once

#include <string>
#include <vector>

#include "treebound/bounds.hpp"

namespace treebound {

/// One theorem checked over one (order, gamma, alpha) bucket.
struct BoundCheck {
    TheoremId theorem = TheoremId::F3Bound;
    BoundDirection direction = BoundDirection::Lower;
    double value = 0.0;           // the bound
    double extremal_value = 0.0;  // bucket max for upper bounds, min for lower
    bool satisfied = false;
    std::vector<std::string> equality_codes;  // canonical codes, sorted
    bool family_match = false;  // equality set == family accept set
};

struct ReportRow {
    int gamma = 0;
    int tree_class_count = 0;
    double min_value = 0.0;
    double max_value = 0.0;
    std::vector<BoundCheck> applicable_bounds;
    std::vector<std::string> equality_achiever_codes;  // union, sorted
    bool family_match = false;                         // all bounds matched
    std::vector<std::string> counterexample_codes;

    bool operator==(const ReportRow&) const;
};

struct VerificationReport {
    int order = 0;
    double alpha = 0.0;
    std::vector<ReportRow> rows;  // ascending gamma
    long long runtime_ms = 0;

    bool passed() const;

    /// Equality ignores runtime_ms.
    bool operator==(const VerificationReport& other) const;
};

struct VerifyOptions {
    int jobs = 1;
    /// Hard ceiling on max order; overridden by env TREEBOUND_MAX_ORDER.
    int max_order_ceiling = 14;
};

int effective_max_order_ceiling(const VerifyOptions& opts);

/// Default alpha grid: two points per regime plus the exactly-checkable
/// integer exponents 2 and 3 and the classic -1/2 case.
std::vector<double> default_alpha_grid();

/// Enumerates every free tree for each order in [n_min, n_max], buckets by
/// domination number, checks every applicable bound at every alpha, and
/// couples equality achievers with the family recognizers. Deterministic for
/// fixed inputs regardless of the job count.
std::vector<VerificationReport> verify(int n_min, int n_max,
                                       const std::vector<double>& alphas,
                                       const VerifyOptions& opts = {});

bool all_passed(const std::vector<VerificationReport>& reports);

std::string emit_json(const std::vector<VerificationReport>& reports);
std::string emit_csv(const std::vector<VerificationReport>& reports);
std::vector<VerificationReport> parse_reports_json(const std::string& text);

}  // namespace treebound
