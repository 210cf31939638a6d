#pragma once

#include <vector>

#include "treebound/tree.hpp"

namespace treebound {

enum class FamilyTag { F1, F2, F3 };

struct FamilyKind {
    FamilyTag tag = FamilyTag::F3;
    int n = 0;
    int gamma = 0;
};

/// Parameter-range feasibility of a family, before any construction.
bool family_feasible(const FamilyKind& kind);

/// The unique F3(n, gamma) tree: star on n-gamma+1 vertices with a pendant
/// edge attached to gamma-1 of its leaves. Requires n-gamma >= gamma-1 >= 0.
Tree build_f3(int n, int gamma);

/// All non-isomorphic F1(n, gamma) members: gamma stars with balanced leaf
/// counts summing to n-gamma, joined into a tree by gamma-1 edges between
/// distinct pendent vertices of different stars, over every macro-tree
/// arrangement. Sorted by canonical code. Requires 1 <= gamma <= n/3, n >= 3.
std::vector<Tree> build_f1_members(int n, int gamma);

/// One concrete F2(n, gamma) member. The path P_n at gamma = ceil(n/3);
/// otherwise a spine of 3*gamma-n-2 degree-3 vertices, one pendant each, with
/// two legs closing the degree profile. Requires ceil(n/3) <= gamma <= n/2.
Tree build_f2_member(int n, int gamma);

/// Membership test per the family definitions. F1/F3 compare against the
/// constructed members; F2 checks the minimum-dominating-set degree profiles
/// (the path at the gamma = ceil(n/3) boundary). Recomputes gamma internally.
bool is_member(const Tree& t, const FamilyKind& kind);

}  // namespace treebound
