#include "treebound/tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace treebound {

Tree Tree::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw std::invalid_argument("tree order must be >= 1");
    if (static_cast<int>(edges.size()) != n - 1)
        throw std::invalid_argument("tree on n vertices needs exactly n-1 edges");
    std::vector<std::vector<int>> adj(n);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop not allowed");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw std::invalid_argument("duplicate edge");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    // connectivity: n-1 simple edges + connected => tree
    std::vector<char> visited(n, 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v]) {
            if (!visited[u]) {
                visited[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    if (reached != n) throw std::invalid_argument("edge list is disconnected");
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return Tree(std::move(adj));
}

Tree tree_from_adjacency_unchecked(std::vector<std::vector<int>> adj) {
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return Tree(std::move(adj));
}

std::vector<std::pair<int, int>> Tree::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(order() > 0 ? order() - 1 : 0);
    for (int v = 0; v < order(); ++v)
        for (int u : adj_[v])
            if (v < u) out.emplace_back(v, u);
    return out;
}

std::vector<int> Tree::degree_sequence() const {
    std::vector<int> degs(order());
    for (int v = 0; v < order(); ++v) degs[v] = degree(v);
    std::sort(degs.begin(), degs.end());
    return degs;
}

std::string CanonicalCode::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (i) os << ',';
        os << code[i];
    }
    return os.str();
}

CanonicalCode CanonicalCode::parse(const std::string& text) {
    CanonicalCode out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) out.code.push_back(std::stoi(item));
    return out;
}

std::vector<int> centroids(const Tree& t) {
    const int n = t.order();
    if (n == 1) return {0};
    std::vector<int> parent(n, -1), order;
    order.reserve(n);
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int u : t.neighbors(v))
            if (u != parent[v]) {
                parent[u] = v;
                order.push_back(u);
            }
    }
    std::vector<int> size(n, 1), worst(n, 0);
    for (int i = n - 1; i >= 1; --i) {
        int v = order[i];
        size[parent[v]] += size[v];
    }
    for (int v = 0; v < n; ++v) {
        worst[v] = n - size[v];
        for (int u : t.neighbors(v))
            if (u != parent[v]) worst[v] = std::max(worst[v], size[u]);
    }
    int best = *std::min_element(worst.begin(), worst.end());
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (worst[v] == best) out.push_back(v);
    return out;
}

namespace {

// Preorder depth sequence of the subtree at v, children ordered by
// descending lexicographic subsequence.
std::vector<int> rooted_code(const Tree& t, int v, int parent, int depth) {
    std::vector<std::vector<int>> kids;
    for (int u : t.neighbors(v))
        if (u != parent) kids.push_back(rooted_code(t, u, v, depth + 1));
    std::sort(kids.begin(), kids.end(),
              [](const auto& a, const auto& b) { return b < a; });
    std::vector<int> out{depth};
    for (const auto& k : kids) out.insert(out.end(), k.begin(), k.end());
    return out;
}

}  // namespace

CanonicalCode canonical_code(const Tree& t) {
    auto cs = centroids(t);
    CanonicalCode code{rooted_code(t, cs[0], -1, 0)};
    if (cs.size() == 2) {
        CanonicalCode other{rooted_code(t, cs[1], -1, 0)};
        if (other < code) code = other;
    }
    return code;
}

Tree tree_from_code(const CanonicalCode& code) {
    const int n = static_cast<int>(code.code.size());
    if (n < 1 || code.code[0] != 0)
        throw std::invalid_argument("canonical code must start at depth 0");
    std::vector<std::pair<int, int>> edges;
    std::vector<int> path;  // path[d] = current vertex at depth d
    for (int i = 0; i < n; ++i) {
        int d = code.code[i];
        if (d < 0 || (i > 0 && (d < 1 || d > static_cast<int>(path.size()))))
            throw std::invalid_argument("malformed canonical code");
        path.resize(d);
        if (i > 0) edges.emplace_back(path[d - 1], i);
        path.push_back(i);
    }
    return Tree::from_edges(n, edges);
}

Tree prufer_decode(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    for (int s : seq)
        if (s < 0 || s >= n)
            throw std::invalid_argument("prufer entry out of range");
    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    int ptr = 0, leaf = -1;
    for (int s : seq) {
        if (leaf < 0) {
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr++;
        }
        edges.emplace_back(leaf, s);
        --deg[leaf];  // leaf is used up
        if (--deg[s] == 1 && s < ptr)
            leaf = s;
        else
            leaf = -1;
    }
    // exactly two vertices of degree 1 remain
    int u = -1, v = -1;
    for (int i = 0; i < n; ++i)
        if (deg[i] == 1) {
            if (u < 0) u = i;
            else { v = i; break; }
        }
    edges.emplace_back(u, v);
    return Tree::from_edges(n, edges);
}

std::vector<int> prufer_encode(const Tree& t) {
    const int n = t.order();
    if (n < 2) throw std::invalid_argument("prufer encoding needs n >= 2");
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
    std::vector<int> out;
    out.reserve(n - 2);
    int ptr = 0, leaf = -1;
    for (int step = 0; step < n - 2; ++step) {
        if (leaf < 0) {
            while (deg[ptr] != 1 || removed[ptr]) ++ptr;
            leaf = ptr++;
        }
        int next = -1;
        for (int u : t.neighbors(leaf))
            if (!removed[u]) { next = u; break; }
        out.push_back(next);
        removed[leaf] = 1;
        if (--deg[next] == 1 && next < ptr)
            leaf = next;
        else
            leaf = -1;
    }
    return out;
}

}  // namespace treebound
