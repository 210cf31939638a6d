#include "treebound/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace treebound {

namespace {

// Beyer-Hedetniemi successor generation over canonical level sequences of
// rooted trees (levels 1-based, root level 1). Emits every rooted tree on n
// vertices exactly once, ending at the star [1,2,2,...,2].
class RootedLevelSequences {
public:
    explicit RootedLevelSequences(int n) : levels_(n) {
        for (int i = 0; i < n; ++i) levels_[i] = i + 1;
    }

    const std::vector<int>& current() const { return levels_; }

    bool advance() {
        const int n = static_cast<int>(levels_.size());
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (levels_[i] > 2) { p = i; break; }
        if (p < 0) return false;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (levels_[i] == levels_[p] - 1) { q = i; break; }
        for (int i = p; i < n; ++i) levels_[i] = levels_[i - (p - q)];
        return true;
    }

private:
    std::vector<int> levels_;
};

Tree tree_from_levels(const std::vector<int>& levels) {
    const int n = static_cast<int>(levels.size());
    std::vector<std::vector<int>> adj(n);
    std::vector<int> path;  // path[l-1] = current vertex at level l
    for (int i = 0; i < n; ++i) {
        int l = levels[i];
        path.resize(l - 1);
        if (i > 0) {
            int parent = path[l - 2];
            adj[parent].push_back(i);
            adj[i].push_back(parent);
        }
        path.push_back(i);
    }
    return tree_from_adjacency_unchecked(std::move(adj));
}

// ---- fast complete-invariant canonical form for n <= 10 (oracle path) ----

constexpr int kOracleMaxN = 10;

struct SmallScratch {
    int8_t adj[kOracleMaxN][kOracleMaxN];
    int8_t deg[kOracleMaxN];
    int8_t parent[kOracleMaxN];
    int8_t order[kOracleMaxN];
    int8_t size[kOracleMaxN];
    uint8_t code[kOracleMaxN];
    uint8_t scratch[kOracleMaxN];
};

// Writes the preorder depth sequence (children in descending lexicographic
// order) of the subtree at v into out+pos; returns new pos.
int small_rooted_code(const SmallScratch& s, int v, int parent, uint8_t depth,
                      uint8_t* out, int pos) {
    out[pos++] = depth;
    int starts[kOracleMaxN], lens[kOracleMaxN], kids = 0;
    for (int i = 0; i < s.deg[v]; ++i) {
        int u = s.adj[v][i];
        if (u == parent) continue;
        starts[kids] = pos;
        pos = small_rooted_code(s, u, v, depth + 1, out, pos);
        lens[kids] = pos - starts[kids];
        ++kids;
    }
    // insertion sort of child segments, larger first
    for (int i = 1; i < kids; ++i) {
        for (int j = i; j > 0; --j) {
            const uint8_t* a = out + starts[j - 1];
            const uint8_t* b = out + starts[j];
            int la = lens[j - 1], lb = lens[j];
            int cmp = std::memcmp(a, b, static_cast<std::size_t>(std::min(la, lb)));
            bool a_less = cmp < 0 || (cmp == 0 && la < lb);
            if (!a_less) break;
            // swap adjacent segments in place
            uint8_t buf[kOracleMaxN];
            std::memcpy(buf, b, lb);
            std::memmove(out + starts[j - 1] + lb, a, la);
            std::memcpy(out + starts[j - 1], buf, lb);
            starts[j] = starts[j - 1] + lb;
            std::swap(lens[j - 1], lens[j]);
        }
    }
    return pos;
}

uint64_t pack_code(const uint8_t* code, int n) {
    uint64_t out = 0;
    for (int i = 0; i < n; ++i) out = (out << 4) | code[i];  // depths < 16
    return out;
}

// Complete isomorphism invariant of a tree given by adjacency in `s`.
uint64_t small_canonical_key(SmallScratch& s, int n) {
    if (n == 1) return 0;
    // preorder from 0, subtree sizes, centroid(s)
    s.parent[0] = -1;
    s.order[0] = 0;
    int cnt = 1;
    for (int i = 0; i < cnt; ++i) {
        int v = s.order[i];
        for (int k = 0; k < s.deg[v]; ++k) {
            int u = s.adj[v][k];
            if (u != s.parent[v]) {
                s.parent[u] = static_cast<int8_t>(v);
                s.order[cnt++] = static_cast<int8_t>(u);
            }
        }
    }
    for (int i = 0; i < n; ++i) s.size[i] = 1;
    for (int i = n - 1; i >= 1; --i) s.size[s.parent[s.order[i]]] += s.size[s.order[i]];
    int c1 = -1, c2 = -1, best = n + 1;
    for (int v = 0; v < n; ++v) {
        int worst = n - s.size[v];
        for (int k = 0; k < s.deg[v]; ++k) {
            int u = s.adj[v][k];
            if (u != s.parent[v] && s.size[u] > worst) worst = s.size[u];
        }
        if (worst < best) { best = worst; c1 = v; c2 = -1; }
        else if (worst == best) c2 = v;
    }
    small_rooted_code(s, c1, -1, 0, s.code, 0);
    uint64_t key = pack_code(s.code, n);
    if (c2 >= 0) {
        small_rooted_code(s, c2, -1, 0, s.scratch, 0);
        key = std::min(key, pack_code(s.scratch, n));
    }
    return key;
}

}  // namespace

std::vector<Tree> free_trees(int n) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    if (n == 1) return {tree_from_code(CanonicalCode{{0}})};
    std::unordered_set<std::string> seen;
    std::vector<CanonicalCode> codes;
    RootedLevelSequences gen(n);
    do {
        CanonicalCode code = canonical_code(tree_from_levels(gen.current()));
        if (seen.insert(code.to_string()).second) codes.push_back(std::move(code));
    } while (gen.advance());
    std::sort(codes.begin(), codes.end());
    std::vector<Tree> out;
    out.reserve(codes.size());
    for (const auto& c : codes) out.push_back(tree_from_code(c));
    return out;
}

std::vector<Tree> free_trees_oracle(int n) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    if (n > kOracleMaxN)
        throw std::invalid_argument("oracle cost guard: n must be <= 10");
    if (n == 1) return {tree_from_code(CanonicalCode{{0}})};
    if (n == 2) return {tree_from_code(CanonicalCode{{0, 1}})};

    const int m = n - 2;
    std::vector<int> seq(m, 0);
    SmallScratch s;
    std::unordered_set<uint64_t> seen;
    std::vector<std::pair<uint64_t, std::vector<std::pair<int, int>>>> reps;
    int8_t deg0[kOracleMaxN];

    for (;;) {
        // decode seq into s.adj / s.deg
        for (int i = 0; i < n; ++i) deg0[i] = 1;
        for (int i = 0; i < m; ++i) ++deg0[seq[i]];
        int8_t degleft[kOracleMaxN];
        std::memcpy(degleft, deg0, sizeof(deg0));
        for (int i = 0; i < n; ++i) s.deg[i] = 0;
        auto add_edge = [&](int a, int b) {
            s.adj[a][s.deg[a]++] = static_cast<int8_t>(b);
            s.adj[b][s.deg[b]++] = static_cast<int8_t>(a);
        };
        int ptr = 0, leaf = -1;
        for (int i = 0; i < m; ++i) {
            int t = seq[i];
            if (leaf < 0) {
                while (degleft[ptr] != 1) ++ptr;
                leaf = ptr++;
            }
            add_edge(leaf, t);
            --degleft[leaf];
            if (--degleft[t] == 1 && t < ptr) leaf = t;
            else leaf = -1;
        }
        int u = -1;
        for (int i = 0; i < n; ++i)
            if (degleft[i] == 1) {
                if (u < 0) u = i;
                else { add_edge(u, i); break; }
            }

        uint64_t key = small_canonical_key(s, n);
        if (seen.insert(key).second) {
            std::vector<std::pair<int, int>> edges;
            for (int v = 0; v < n; ++v)
                for (int k = 0; k < s.deg[v]; ++k)
                    if (v < s.adj[v][k]) edges.emplace_back(v, s.adj[v][k]);
            reps.emplace_back(key, std::move(edges));
        }

        // odometer
        int pos = m - 1;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }

    // deterministic emission: sort by the general canonical code
    std::vector<std::pair<CanonicalCode, Tree>> out;
    out.reserve(reps.size());
    for (auto& [key, edges] : reps) {
        Tree t = Tree::from_edges(n, edges);
        out.emplace_back(canonical_code(t), std::move(t));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Tree> trees;
    trees.reserve(out.size());
    for (auto& [c, t] : out) trees.push_back(std::move(t));
    return trees;
}

}  // namespace treebound
