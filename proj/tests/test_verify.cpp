#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "treebound/verify.hpp"

using namespace treebound;

TEST_CASE("report shape and bucket counts, n = 6, alpha = 2") {
    auto reports = verify(6, 6, {2.0});
    REQUIRE(reports.size() == 1);
    const auto& r = reports[0];
    CHECK(r.order == 6);
    CHECK(r.alpha == 2.0);
    CHECK(r.passed());
    int total = 0;
    for (const auto& row : r.rows) total += row.tree_class_count;
    CHECK(total == 6);  // free trees on 6 vertices
    REQUIRE(r.rows.size() == 3);  // gamma = 1, 2, 3
    CHECK(r.rows[0].gamma == 1);
    CHECK(r.rows[1].gamma == 2);
    CHECK(r.rows[2].gamma == 3);

    // gamma = 2: F1 and F2 both apply at the seam, value 18 (lower bounds here)
    bool saw_f1 = false, saw_f2 = false;
    for (const auto& b : r.rows[1].applicable_bounds) {
        if (b.theorem == TheoremId::F1Bound) {
            saw_f1 = true;
            CHECK(b.value == doctest::Approx(18.0));
            CHECK(b.direction == BoundDirection::Lower);
            CHECK(b.family_match);
        }
        if (b.theorem == TheoremId::F2Bound) {
            saw_f2 = true;
            CHECK(b.value == doctest::Approx(18.0));
        }
    }
    CHECK(saw_f1);
    CHECK(saw_f2);
    // gamma = 3: F2 = 20, F3 = 20
    for (const auto& b : r.rows[2].applicable_bounds) {
        if (b.theorem == TheoremId::F2Bound) CHECK(b.value == doctest::Approx(20.0));
        if (b.theorem == TheoremId::F3Bound) {
            CHECK(b.value == doctest::Approx(20.0));
            CHECK(b.direction == BoundDirection::Upper);
        }
    }
}

TEST_CASE("all theorems certified, orders 3..9, full grid") {
    auto reports = verify(3, 9, default_alpha_grid());
    CHECK(all_passed(reports));
    for (const auto& r : reports) {
        for (const auto& row : r.rows) {
            CHECK(row.family_match);
            CHECK(row.counterexample_codes.empty());
        }
    }
    CHECK(reports.size() == 7 * default_alpha_grid().size());
}

TEST_CASE("jobs do not change the result") {
    VerifyOptions one, four;
    one.jobs = 1;
    four.jobs = 4;
    auto a = verify(3, 8, {0.5, 2.0}, one);
    auto b = verify(3, 8, {0.5, 2.0}, four);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    CHECK(emit_json(a).size() == emit_json(b).size());
}

TEST_CASE("json round trip") {
    auto reports = verify(5, 7, {0.5, -1.0});
    auto back = parse_reports_json(emit_json(reports));
    REQUIRE(back.size() == reports.size());
    for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i] == reports[i]);
}

TEST_CASE("csv output") {
    auto reports = verify(6, 6, {2.0});
    std::string csv = emit_csv(reports);
    CHECK(csv.rfind("n,gamma,alpha,theorem,direction,bound,extremal_value,satisfied,"
                    "equality_count,family_match\n", 0) == 0);
    CHECK(csv.find("6,2,2,F1_BOUND,lower,18,18,1,") != std::string::npos);
}

TEST_CASE("input validation and ceiling") {
    CHECK_THROWS(verify(5, 4, {2.0}));
    CHECK_THROWS(verify(3, 5, {}));
    CHECK_THROWS(verify(3, 5, {1.0}));  // degenerate alpha
    VerifyOptions opts;
    opts.max_order_ceiling = 6;
    CHECK_THROWS(verify(3, 7, {2.0}, opts));
}

TEST_CASE("reports are deterministic across repeated runs") {
    auto a = verify(4, 8, {0.75, 3.0});
    auto b = verify(4, 8, {0.75, 3.0});
    CHECK(emit_json(a) == emit_json(b));
}
