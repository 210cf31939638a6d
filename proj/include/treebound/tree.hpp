#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace treebound {

/// Immutable simple tree on n >= 1 vertices with 0-based dense labels.
/// Construction validates the tree axioms (n-1 edges, connected, simple),
/// so every live Tree is a genuine tree. Safe to share across threads.
class Tree {
public:
    /// Builds a tree from an edge list. Throws std::invalid_argument if the
    /// edge count is not n-1, an endpoint is out of range, an edge is a loop
    /// or duplicate, or the graph is disconnected.
    static Tree from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    /// Edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    /// Degree multiset, sorted ascending. Sums to 2(n-1).
    std::vector<int> degree_sequence() const;

    bool operator==(const Tree& other) const { return adj_ == other.adj_; }

private:
    explicit Tree(std::vector<std::vector<int>> adj) : adj_(std::move(adj)) {}
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists

    friend Tree tree_from_adjacency_unchecked(std::vector<std::vector<int>> adj);
};

/// Internal fast path for generators that produce trees by construction.
Tree tree_from_adjacency_unchecked(std::vector<std::vector<int>> adj);

/// Isomorphism-invariant code: preorder depth sequence of the tree rooted at
/// its centroid (lexicographically smaller of the two roots when the centroid
/// is an edge). Equal codes <=> isomorphic trees.
struct CanonicalCode {
    std::vector<int> code;

    auto operator<=>(const CanonicalCode&) const = default;

    /// Comma-separated depths, e.g. "0,1,1,2".
    std::string to_string() const;
    static CanonicalCode parse(const std::string& text);
};

/// The 1 or 2 vertices minimizing the largest component left by their removal.
std::vector<int> centroids(const Tree& t);

CanonicalCode canonical_code(const Tree& t);

/// Rebuilds the (unlabeled) tree a canonical code describes.
Tree tree_from_code(const CanonicalCode& code);

/// Prufer codec: bijection between sequences in [0,n)^(n-2) and labeled trees
/// on n >= 2 vertices. decode rejects out-of-range entries.
Tree prufer_decode(const std::vector<int>& seq);
std::vector<int> prufer_encode(const Tree& t);

}  // namespace treebound
