#pragma once

#include <cstdint>
#include <vector>

#include "treebound/tree.hpp"

namespace treebound {

/// A minimum dominating set together with its cardinality.
struct DominationCertificate {
    std::vector<int> vertex_set;  // sorted ascending
    int gamma = 0;
};

/// Sum of d_v^alpha over all vertices. Uses exact integer accumulation when
/// alpha is a small nonnegative integer. Rejects the single-vertex tree for
/// alpha <= 0 (its only degree is 0).
double zeroth_order_general_randic(const Tree& t, double alpha);

/// Exact integer value of the index for integral alpha >= 0 (n = 1 needs
/// alpha >= 1). Used to confirm equality decisions without float tolerance.
long long zeroth_order_randic_exact(const Tree& t, int alpha);

/// True iff every vertex outside `set` has a neighbor inside it.
bool is_dominating(const Tree& t, const std::vector<int>& set);

/// Minimum dominating set via the three-state tree DP (chosen / dominated /
/// pending), rooted at vertex 0, with a deterministic backtrace that prefers
/// "chosen" at the lowest index.
DominationCertificate domination_number(const Tree& t);

/// Brute force over all 2^n subsets; refuses n > 16.
int domination_number_oracle(const Tree& t);

/// All dominating sets of minimum cardinality, ordered by their sorted vertex
/// lists; refuses n > 16.
std::vector<DominationCertificate> min_dominating_sets(const Tree& t);

/// Edge counts induced by a vertex set D: crossing D / complement, inside D,
/// inside the complement. crossing + inside_dom + outside_dom = n - 1.
struct EdgePartition {
    int crossing = 0;     // one endpoint in D, one outside
    int inside_dom = 0;   // both endpoints in D
    int outside_dom = 0;  // both endpoints outside D
};

EdgePartition edge_partition(const Tree& t, const std::vector<int>& dom_set);

}  // namespace treebound
