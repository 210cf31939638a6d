#include "treebound/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "treebound/bounds.hpp"
#include "treebound/enumeration.hpp"
#include "treebound/invariants.hpp"

namespace treebound {

namespace {

int ceil_div3(int n) { return (n + 2) / 3; }

bool is_path_tree(const Tree& t) {
    if (t.order() <= 2) return true;
    auto degs = t.degree_sequence();
    return degs[0] == 1 && degs[1] == 1 && degs.back() == 2;
}

Tree path_tree(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Tree::from_edges(n, edges);
}

void check_gamma(const Tree& t, int gamma, const char* what) {
    if (domination_number(t).gamma != gamma)
        throw std::logic_error(std::string(what) +
                               ": constructed tree has wrong domination number");
}

}  // namespace

bool family_feasible(const FamilyKind& kind) {
    const int n = kind.n, g = kind.gamma;
    switch (kind.tag) {
        case FamilyTag::F1:
            return n >= 3 && g >= 1 && 3 * g <= n;
        case FamilyTag::F2:
            return n >= 2 && g >= ceil_div3(n) && 2 * g <= n;
        case FamilyTag::F3:
            return n >= 2 && g >= 1 && 2 * g <= n && n - g >= g - 1;
    }
    return false;
}

Tree build_f3(int n, int gamma) {
    if (!family_feasible({FamilyTag::F3, n, gamma}))
        throw std::invalid_argument("infeasible F3 parameters");
    std::vector<std::pair<int, int>> edges;
    // star: center 0, leaves 1..n-gamma
    for (int i = 1; i <= n - gamma; ++i) edges.emplace_back(0, i);
    // pendant edge on gamma-1 of the leaves
    int next = n - gamma + 1;
    for (int i = 1; i <= gamma - 1; ++i) edges.emplace_back(i, next++);
    Tree t = Tree::from_edges(n, edges);
    check_gamma(t, gamma, "build_f3");
    return t;
}

std::vector<Tree> build_f1_members(int n, int gamma) {
    if (!family_feasible({FamilyTag::F1, n, gamma}))
        throw std::invalid_argument("infeasible F1 parameters");
    const int leaves_total = n - gamma;
    const int q = leaves_total / gamma;  // >= 2 in range
    const int r = leaves_total - q * gamma;
    std::vector<int> sizes(gamma - r, q);
    sizes.insert(sizes.end(), r, q + 1);  // ascending

    std::map<CanonicalCode, Tree> members;
    for (const Tree& macro : free_trees(gamma)) {
        std::vector<int> assign = sizes;
        std::sort(assign.begin(), assign.end());
        do {
            // each join consumes a distinct leaf of both stars
            bool feasible = true;
            for (int i = 0; i < gamma; ++i)
                if (macro.degree(i) > assign[i]) { feasible = false; break; }
            if (!feasible) continue;
            std::vector<std::pair<int, int>> edges;
            std::vector<int> center(gamma), first_leaf(gamma), used(gamma, 0);
            int next = 0;
            for (int i = 0; i < gamma; ++i) {
                center[i] = next++;
                first_leaf[i] = next;
                for (int l = 0; l < assign[i]; ++l)
                    edges.emplace_back(center[i], next++);
            }
            for (auto [a, b] : macro.edges()) {
                edges.emplace_back(first_leaf[a] + used[a]++,
                                   first_leaf[b] + used[b]++);
            }
            Tree t = Tree::from_edges(n, edges);
            members.emplace(canonical_code(t), std::move(t));
        } while (std::next_permutation(assign.begin(), assign.end()));
    }
    std::vector<Tree> out;
    out.reserve(members.size());
    for (auto& [code, t] : members) {
        check_gamma(t, gamma, "build_f1_members");
        out.push_back(std::move(t));
    }
    return out;
}

Tree build_f2_member(int n, int gamma) {
    if (!family_feasible({FamilyTag::F2, n, gamma}))
        throw std::invalid_argument("infeasible F2 parameters");
    if (gamma == ceil_div3(n)) return path_tree(n);

    const int pend = 3 * gamma - n;   // >= 3 here
    const int chains = n - 2 * gamma; // degree-2 vertices inside the set
    std::vector<std::pair<int, int>> edges;
    int next = 0;
    auto fresh = [&next]() { return next++; };

    std::vector<int> spine(pend - 2);
    for (auto& v : spine) v = fresh();
    for (int i = 0; i + 1 < pend - 2; ++i) edges.emplace_back(spine[i], spine[i + 1]);
    for (int v : spine) edges.emplace_back(v, fresh());  // one pendant each

    // first leg: `chains` three-vertex units, then a 2-path to a pendant
    int cur = spine.front();
    for (int i = 0; i < chains; ++i) {
        int a = fresh(), b = fresh(), c = fresh();
        edges.emplace_back(cur, a);
        edges.emplace_back(a, b);
        edges.emplace_back(b, c);
        cur = c;
    }
    int x1 = fresh();
    edges.emplace_back(cur, x1);
    edges.emplace_back(x1, fresh());
    // second leg: a 2-path to a pendant
    int x2 = fresh();
    edges.emplace_back(spine.back(), x2);
    edges.emplace_back(x2, fresh());

    Tree t = Tree::from_edges(n, edges);
    check_gamma(t, gamma, "build_f2_member");
    if (zeroth_order_randic_exact(t, 2) != bound_f2_exact(n, gamma, 2))
        throw std::logic_error("build_f2_member: equality check failed");
    return t;
}

namespace {

bool f2_profile_match(const Tree& t, int gamma) {
    const int n = t.order();
    const int pend = 3 * gamma - n;
    const int chains = n - 2 * gamma;
    // degree histogram of a vertex subset
    auto histo = [&t](const std::vector<int>& vs) {
        std::map<int, int> h;
        for (int v : vs) ++h[t.degree(v)];
        return h;
    };
    auto expect = [](std::initializer_list<std::pair<int, int>> items) {
        std::map<int, int> h;
        for (auto [d, c] : items)
            if (c > 0) h[d] = c;
        return h;
    };
    const auto in_profile = expect({{2, chains}, {1, pend}});
    const auto out_profile = expect({{2, 2 * (chains + 1)}, {3, pend - 2}});
    const bool clause1_possible = n == 2 * gamma + 2;
    const auto in1 = expect({{3, pend - 2}, {2, 2 * chains}});
    const auto out1 = expect({{2, chains + 2}, {1, pend}});

    for (const auto& cert : min_dominating_sets(t)) {
        std::vector<char> in(n, 0);
        for (int v : cert.vertex_set) in[v] = 1;
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (!in[v]) rest.push_back(v);

        if (histo(cert.vertex_set) == in_profile && histo(rest) == out_profile) {
            bool one_each = true;
            for (int v : rest) {
                int cnt = 0;
                for (int u : t.neighbors(v)) cnt += in[u];
                if (cnt != 1) { one_each = false; break; }
            }
            if (one_each) return true;
        }
        if (clause1_possible && histo(cert.vertex_set) == in1 && histo(rest) == out1)
            return true;
    }
    return false;
}

}  // namespace

bool is_member(const Tree& t, const FamilyKind& kind) {
    if (t.order() != kind.n) return false;
    if (!family_feasible(kind)) return false;
    if (domination_number(t).gamma != kind.gamma) return false;
    const int n = kind.n, g = kind.gamma;
    switch (kind.tag) {
        case FamilyTag::F3:
            return canonical_code(t) == canonical_code(build_f3(n, g));
        case FamilyTag::F1: {
            CanonicalCode code = canonical_code(t);
            for (const Tree& m : build_f1_members(n, g))
                if (canonical_code(m) == code) return true;
            return false;
        }
        case FamilyTag::F2: {
            if (g == ceil_div3(n)) return is_path_tree(t);
            auto degs = t.degree_sequence();
            if (degs.back() > 3) return false;
            int pendents = static_cast<int>(
                std::count(degs.begin(), degs.end(), 1));
            if (pendents != 3 * g - n) return false;
            for (int v = 0; v < n; ++v) {
                int pn = 0;
                for (int u : t.neighbors(v)) pn += t.degree(u) == 1;
                if (pn > 1) return false;
            }
            return f2_profile_match(t, g);
        }
    }
    return false;
}

}  // namespace treebound
