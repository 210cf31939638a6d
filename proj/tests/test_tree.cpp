#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "treebound/enumeration.hpp"
#include "treebound/io.hpp"
#include "treebound/tree.hpp"

using namespace treebound;

namespace {

Tree path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Tree::from_edges(n, e);
}

Tree star(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Tree::from_edges(n, e);
}

// Adjacency-preserving bijection search over all vertex permutations.
bool brute_force_isomorphic(const Tree& a, const Tree& b) {
    if (a.order() != b.order()) return false;
    const int n = a.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto a_edges = a.edges();
    do {
        bool ok = true;
        for (auto [u, v] : a_edges) {
            int pu = perm[u], pv = perm[v];
            const auto& nb = b.neighbors(pu);
            if (!std::binary_search(nb.begin(), nb.end(), pv)) { ok = false; break; }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("tree_from_edges validates") {
    CHECK(Tree::from_edges(2, {{0, 1}}).order() == 2);
    CHECK(Tree::from_edges(3, {{0, 1}, {1, 2}}).degree(1) == 2);
    CHECK_THROWS(Tree::from_edges(4, {{0, 1}, {0, 2}, {1, 2}}));  // cycle, not spanning
    CHECK_THROWS(Tree::from_edges(3, {{0, 1}}));                  // wrong edge count
    CHECK_THROWS(Tree::from_edges(4, {{0, 1}, {2, 3}, {0, 1}}));  // duplicate
    CHECK_THROWS(Tree::from_edges(2, {{0, 0}}));                  // loop
    CHECK_THROWS(Tree::from_edges(3, {{0, 1}, {1, 3}}));          // out of range
    CHECK_THROWS(Tree::from_edges(4, {{0, 1}, {0, 1}, {2, 3}}));  // disconnected+dup
}

TEST_CASE("degree_sequence") {
    CHECK(path(6).degree_sequence() == std::vector<int>{1, 1, 2, 2, 2, 2});
    CHECK(star(5).degree_sequence() == std::vector<int>{1, 1, 1, 1, 4});
    // spider with legs 2,2,1: center 0, legs 0-1-2, 0-3-4, 0-5
    Tree spider = Tree::from_edges(6, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}});
    CHECK(spider.degree_sequence() == std::vector<int>{1, 1, 1, 2, 2, 3});
}

TEST_CASE("degree sum is 2(n-1) over enumerated trees") {
    for (int n = 1; n <= 9; ++n)
        for (const Tree& t : free_trees(n)) {
            auto d = t.degree_sequence();
            CHECK(std::accumulate(d.begin(), d.end(), 0) == 2 * (n - 1));
        }
}

TEST_CASE("canonical code identifies isomorphic relabelings") {
    Tree p3a = Tree::from_edges(3, {{0, 1}, {1, 2}});
    Tree p3b = Tree::from_edges(3, {{1, 0}, {0, 2}});  // center relabeled
    CHECK(canonical_code(p3a) == canonical_code(p3b));
    CHECK(canonical_code(path(4)) != canonical_code(star(4)));
}

TEST_CASE("all labeled trees on 3 vertices share one code") {
    std::set<std::string> codes;
    for (int c = 0; c < 3; ++c) {
        std::vector<std::pair<int, int>> e;
        for (int v = 0; v < 3; ++v)
            if (v != c) e.emplace_back(c, v);
        codes.insert(canonical_code(Tree::from_edges(3, e)).to_string());
    }
    CHECK(codes.size() == 1);
}

TEST_CASE("code equality iff brute-force isomorphism, n <= 8") {
    for (int n = 2; n <= 8; ++n) {
        auto trees = free_trees(n);
        for (std::size_t i = 0; i < trees.size(); ++i)
            for (std::size_t j = i; j < trees.size(); ++j) {
                bool same_code = canonical_code(trees[i]) == canonical_code(trees[j]);
                CHECK(same_code == brute_force_isomorphic(trees[i], trees[j]));
            }
    }
}

TEST_CASE("code round-trips through text and tree_from_code") {
    for (const Tree& t : free_trees(7)) {
        CanonicalCode c = canonical_code(t);
        CHECK(CanonicalCode::parse(c.to_string()) == c);
        CHECK(canonical_code(tree_from_code(c)) == c);
    }
}

TEST_CASE("prufer basics") {
    Tree p2 = prufer_decode({});
    CHECK(p2.order() == 2);
    CHECK(p2.degree(0) == 1);
    CHECK_THROWS(prufer_decode({5, 0}));  // out of range for n=4
}

TEST_CASE("prufer round trip on all sequences, n <= 6") {
    for (int n = 3; n <= 6; ++n) {
        const int m = n - 2;
        std::vector<int> seq(m, 0);
        for (;;) {
            CHECK(prufer_encode(prufer_decode(seq)) == seq);
            int pos = m - 1;
            while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
            if (pos < 0) break;
            ++seq[pos];
        }
    }
}

TEST_CASE("Cayley count: 16 distinct labeled trees for n=4") {
    std::set<std::string> labeled;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Tree t = prufer_decode({a, b});
            std::string key;
            for (auto [u, v] : t.edges())
                key += std::to_string(u) + "-" + std::to_string(v) + ";";
            labeled.insert(key);
        }
    CHECK(labeled.size() == 16);
}

TEST_CASE("json codec") {
    Tree t = Tree::from_edges(4, {{0, 1}, {1, 2}, {1, 3}});
    Tree back = tree_from_json(tree_to_json(t));
    CHECK(back == t);
    CHECK_THROWS(tree_from_json("{\"n\":3,\"edges\":[[0,1]]}"));
}
