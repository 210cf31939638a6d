#pragma once

#include <vector>

#include "treebound/tree.hpp"

namespace treebound {

/// Every non-isomorphic free tree on n >= 1 vertices, exactly once, in
/// lexicographic canonical-code order. Successor-based generation over rooted
/// level sequences with centroid-canonical deduplication; practical to n ~ 18.
std::vector<Tree> free_trees(int n);

/// Independent oracle: decodes all n^(n-2) Prufer sequences and deduplicates
/// by canonical form. Refuses n > 10 (cost guard). Same class set as
/// free_trees(n), emitted in the same order.
std::vector<Tree> free_trees_oracle(int n);

}  // namespace treebound
