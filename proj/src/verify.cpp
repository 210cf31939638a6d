#include "treebound/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "treebound/enumeration.hpp"
#include "treebound/families.hpp"
#include "treebound/invariants.hpp"

namespace treebound {

using ordered_json = nlohmann::ordered_json;

bool ReportRow::operator==(const ReportRow& other) const {
    auto key = [](const ReportRow& r) {
        return std::tie(r.gamma, r.tree_class_count, r.min_value, r.max_value,
                        r.equality_achiever_codes, r.family_match,
                        r.counterexample_codes);
    };
    if (key(*this) != key(other)) return false;
    if (applicable_bounds.size() != other.applicable_bounds.size()) return false;
    for (std::size_t i = 0; i < applicable_bounds.size(); ++i) {
        const auto& a = applicable_bounds[i];
        const auto& b = other.applicable_bounds[i];
        if (std::tie(a.theorem, a.direction, a.value, a.extremal_value,
                     a.satisfied, a.equality_codes, a.family_match) !=
            std::tie(b.theorem, b.direction, b.value, b.extremal_value,
                     b.satisfied, b.equality_codes, b.family_match))
            return false;
    }
    return true;
}

bool VerificationReport::passed() const {
    for (const auto& row : rows) {
        if (!row.family_match || !row.counterexample_codes.empty()) return false;
        for (const auto& b : row.applicable_bounds)
            if (!b.satisfied) return false;
    }
    return true;
}

bool VerificationReport::operator==(const VerificationReport& other) const {
    return order == other.order && alpha == other.alpha && rows == other.rows;
}

int effective_max_order_ceiling(const VerifyOptions& opts) {
    if (const char* env = std::getenv("TREEBOUND_MAX_ORDER")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return opts.max_order_ceiling;
}

std::vector<double> default_alpha_grid() {
    return {-1.0, -0.5, 0.25, 0.5, 0.75, 2.0, 3.0};
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const auto& r) { return r.passed(); });
}

namespace {

struct TreeFacts {
    std::string code;
    int gamma = 0;
    std::vector<double> values;      // per alpha
    std::vector<long long> exact;    // per alpha; -1 when no exact path
};

bool alpha_is_int_ge2(double alpha, int& out) {
    double r = std::round(alpha);
    if (r < 2 || r > 15 || alpha != r) return false;
    out = static_cast<int>(r);
    return true;
}

TreeFacts facts_for(const Tree& t, const std::vector<double>& alphas) {
    TreeFacts f;
    f.code = canonical_code(t).to_string();
    f.gamma = domination_number(t).gamma;
    f.values.reserve(alphas.size());
    f.exact.reserve(alphas.size());
    for (double a : alphas) {
        f.values.push_back(zeroth_order_general_randic(t, a));
        int ia = 0;
        f.exact.push_back(alpha_is_int_ge2(a, ia)
                              ? zeroth_order_randic_exact(t, ia)
                              : -1);
    }
    return f;
}

long long exact_bound(TheoremId id, int n, int gamma, int alpha) {
    switch (id) {
        case TheoremId::F1Bound: return bound_f1_exact(n, gamma, alpha);
        case TheoremId::F2Bound: return bound_f2_exact(n, gamma, alpha);
        case TheoremId::F3Bound: return bound_f3_exact(n, gamma, alpha);
    }
    return 0;
}

FamilyTag family_of(TheoremId id) {
    switch (id) {
        case TheoremId::F1Bound: return FamilyTag::F1;
        case TheoremId::F2Bound: return FamilyTag::F2;
        case TheoremId::F3Bound: return FamilyTag::F3;
    }
    return FamilyTag::F3;
}

// Accept set of a family restricted to the enumerated (n, gamma) bucket.
std::set<std::string> accept_codes(FamilyTag tag, int n, int gamma,
                                   const std::vector<const Tree*>& bucket) {
    std::set<std::string> out;
    FamilyKind kind{tag, n, gamma};
    if (!family_feasible(kind)) return out;
    switch (tag) {
        case FamilyTag::F3:
            out.insert(canonical_code(build_f3(n, gamma)).to_string());
            break;
        case FamilyTag::F1:
            for (const Tree& m : build_f1_members(n, gamma))
                out.insert(canonical_code(m).to_string());
            break;
        case FamilyTag::F2:
            for (const Tree* t : bucket)
                if (is_member(*t, kind)) out.insert(canonical_code(*t).to_string());
            break;
    }
    return out;
}

}  // namespace

std::vector<VerificationReport> verify(int n_min, int n_max,
                                       const std::vector<double>& alphas,
                                       const VerifyOptions& opts) {
    const int ceiling = effective_max_order_ceiling(opts);
    if (n_min < 2 || n_max < n_min)
        throw std::invalid_argument("need 2 <= n_min <= n_max");
    if (n_max > ceiling)
        throw std::invalid_argument("max order exceeds the configured ceiling");
    if (alphas.empty()) throw std::invalid_argument("empty alpha grid");
    for (double a : alphas)
        if (classify_alpha(a) == AlphaRegime::Degenerate)
            throw std::invalid_argument("alpha in {0,1} is excluded");
    const int jobs = std::max(1, opts.jobs);

    std::vector<VerificationReport> reports;
    for (int n = n_min; n <= n_max; ++n) {
        auto start = std::chrono::steady_clock::now();
        std::vector<Tree> trees = free_trees(n);
        const std::size_t count = trees.size();

        // per-tree facts; chunked across workers, merged back in tree order
        std::vector<TreeFacts> facts(count);
        if (jobs == 1 || count < 64) {
            for (std::size_t i = 0; i < count; ++i)
                facts[i] = facts_for(trees[i], alphas);
        } else {
            std::vector<std::thread> workers;
            std::size_t chunk = (count + jobs - 1) / jobs;
            for (int w = 0; w < jobs; ++w) {
                std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
                if (lo >= hi) break;
                workers.emplace_back([&, lo, hi] {
                    for (std::size_t i = lo; i < hi; ++i)
                        facts[i] = facts_for(trees[i], alphas);
                });
            }
            for (auto& w : workers) w.join();
        }

        // bucket trees by gamma
        std::map<int, std::vector<std::size_t>> buckets;
        for (std::size_t i = 0; i < count; ++i) buckets[facts[i].gamma].push_back(i);

        // family accept sets are alpha-independent; compute once per gamma
        std::map<int, std::map<TheoremId, std::set<std::string>>> accepts;
        for (const auto& [gamma, idx] : buckets) {
            std::vector<const Tree*> bucket;
            for (std::size_t i : idx) bucket.push_back(&trees[i]);
            for (TheoremId id : {TheoremId::F1Bound, TheoremId::F2Bound,
                                 TheoremId::F3Bound})
                accepts[gamma][id] = accept_codes(family_of(id), n, gamma, bucket);
        }

        for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
            const double alpha = alphas[ai];
            VerificationReport rep;
            rep.order = n;
            rep.alpha = alpha;
            for (const auto& [gamma, idx] : buckets) {
                ReportRow row;
                row.gamma = gamma;
                row.tree_class_count = static_cast<int>(idx.size());
                row.min_value = row.max_value = facts[idx[0]].values[ai];
                for (std::size_t i : idx) {
                    row.min_value = std::min(row.min_value, facts[i].values[ai]);
                    row.max_value = std::max(row.max_value, facts[i].values[ai]);
                }
                std::set<std::string> union_eq, counter;
                bool all_match = true;
                int ialpha = 0;
                const bool exact = alpha_is_int_ge2(alpha, ialpha);
                for (const BoundResult& b : bounds_for(n, gamma, alpha)) {
                    BoundCheck chk;
                    chk.theorem = b.theorem;
                    chk.direction = b.direction;
                    chk.value = b.value;
                    const bool upper = b.direction == BoundDirection::Upper;
                    chk.extremal_value = upper ? row.max_value : row.min_value;
                    chk.satisfied = true;
                    std::set<std::string> eq;
                    for (std::size_t i : idx) {
                        const double v = facts[i].values[ai];
                        bool attains;
                        if (exact) {
                            long long bv = exact_bound(b.theorem, n, gamma, ialpha);
                            attains = facts[i].exact[ai] == bv;
                            if (upper ? facts[i].exact[ai] > bv
                                      : facts[i].exact[ai] < bv) {
                                chk.satisfied = false;
                                counter.insert(facts[i].code);
                            }
                        } else {
                            attains = nearly_equal(v, b.value);
                            bool viol = upper ? v > b.value && !attains
                                              : v < b.value && !attains;
                            if (viol) {
                                chk.satisfied = false;
                                counter.insert(facts[i].code);
                            }
                        }
                        if (attains) eq.insert(facts[i].code);
                    }
                    chk.equality_codes.assign(eq.begin(), eq.end());
                    union_eq.insert(eq.begin(), eq.end());
                    chk.family_match = eq == accepts[gamma][b.theorem];
                    all_match = all_match && chk.family_match;
                    row.applicable_bounds.push_back(std::move(chk));
                }
                row.equality_achiever_codes.assign(union_eq.begin(), union_eq.end());
                row.family_match = all_match;
                row.counterexample_codes.assign(counter.begin(), counter.end());
                rep.rows.push_back(std::move(row));
            }
            rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
            reports.push_back(std::move(rep));
        }
    }
    return reports;
}

namespace {

ordered_json bound_to_json(const BoundCheck& b) {
    return ordered_json{{"theorem", theorem_name(b.theorem)},
                        {"direction", direction_name(b.direction)},
                        {"value", b.value},
                        {"extremal_value", b.extremal_value},
                        {"satisfied", b.satisfied},
                        {"equality_count", b.equality_codes.size()},
                        {"equality_codes", b.equality_codes},
                        {"family_match", b.family_match}};
}

TheoremId theorem_from_name(const std::string& s) {
    if (s == "F1_BOUND") return TheoremId::F1Bound;
    if (s == "F2_BOUND") return TheoremId::F2Bound;
    if (s == "F3_BOUND") return TheoremId::F3Bound;
    throw std::invalid_argument("unknown theorem id: " + s);
}

}  // namespace

std::string emit_json(const std::vector<VerificationReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& rep : reports) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : rep.rows) {
            ordered_json bounds = ordered_json::array();
            for (const auto& b : row.applicable_bounds) bounds.push_back(bound_to_json(b));
            rows.push_back(ordered_json{
                {"gamma", row.gamma},
                {"tree_class_count", row.tree_class_count},
                {"min_value", row.min_value},
                {"max_value", row.max_value},
                {"applicable_bounds", bounds},
                {"equality_achiever_codes", row.equality_achiever_codes},
                {"family_match", row.family_match},
                {"counterexample_codes", row.counterexample_codes}});
        }
        arr.push_back(ordered_json{{"order", rep.order},
                                   {"alpha", rep.alpha},
                                   {"rows", rows},
                                   {"runtime_ms", rep.runtime_ms}});
    }
    return arr.dump(2) + "\n";
}

std::vector<VerificationReport> parse_reports_json(const std::string& text) {
    ordered_json arr = ordered_json::parse(text);
    std::vector<VerificationReport> out;
    for (const auto& jrep : arr) {
        VerificationReport rep;
        rep.order = jrep.at("order").get<int>();
        rep.alpha = jrep.at("alpha").get<double>();
        rep.runtime_ms = jrep.at("runtime_ms").get<long long>();
        for (const auto& jrow : jrep.at("rows")) {
            ReportRow row;
            row.gamma = jrow.at("gamma").get<int>();
            row.tree_class_count = jrow.at("tree_class_count").get<int>();
            row.min_value = jrow.at("min_value").get<double>();
            row.max_value = jrow.at("max_value").get<double>();
            for (const auto& jb : jrow.at("applicable_bounds")) {
                BoundCheck b;
                b.theorem = theorem_from_name(jb.at("theorem").get<std::string>());
                b.direction = jb.at("direction").get<std::string>() == "upper"
                                  ? BoundDirection::Upper
                                  : BoundDirection::Lower;
                b.value = jb.at("value").get<double>();
                b.extremal_value = jb.at("extremal_value").get<double>();
                b.satisfied = jb.at("satisfied").get<bool>();
                b.equality_codes =
                    jb.at("equality_codes").get<std::vector<std::string>>();
                b.family_match = jb.at("family_match").get<bool>();
                row.applicable_bounds.push_back(std::move(b));
            }
            row.equality_achiever_codes =
                jrow.at("equality_achiever_codes").get<std::vector<std::string>>();
            row.family_match = jrow.at("family_match").get<bool>();
            row.counterexample_codes =
                jrow.at("counterexample_codes").get<std::vector<std::string>>();
            rep.rows.push_back(std::move(row));
        }
        out.push_back(std::move(rep));
    }
    return out;
}

std::string emit_csv(const std::vector<VerificationReport>& reports) {
    std::string out =
        "n,gamma,alpha,theorem,direction,bound,extremal_value,satisfied,"
        "equality_count,family_match\n";
    char buf[256];
    for (const auto& rep : reports)
        for (const auto& row : rep.rows)
            for (const auto& b : row.applicable_bounds) {
                std::snprintf(buf, sizeof(buf), "%d,%d,%g,%s,%s,%.12g,%.12g,%d,%zu,%d\n",
                              rep.order, row.gamma, rep.alpha, theorem_name(b.theorem),
                              direction_name(b.direction), b.value, b.extremal_value,
                              b.satisfied ? 1 : 0, b.equality_codes.size(),
                              b.family_match ? 1 : 0);
                out += buf;
            }
    return out;
}

}  // namespace treebound
