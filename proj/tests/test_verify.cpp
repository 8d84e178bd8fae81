#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/test_support.hpp"
#include "tracecodes/verify.hpp"

using namespace tracecodes;
using namespace tracecodes::testing;

TEST_CASE("verify_case: published cases pass with full detail") {
    const auto r = verify_case(9, 3, 0);
    CHECK(r.pass());
    CHECK(r.case_tag == CaseTag::Odd);
    CHECK(r.brute.n == 223);
    CHECK(r.brute.k == 9);
    CHECK(r.brute.d == 96);
    CHECK(r.dual_ok);
    CHECK(r.moments.p0_ok);
    CHECK(r.moments.p1_ok);
    CHECK(r.moments.p2_ok);
    CHECK(r.sums_checked == 511 * 512);
    CHECK(r.sums_passed == r.sums_checked);
    CHECK(r.notes.empty());
}

TEST_CASE("verify_case: smallest case has the dimension drop of the remark") {
    const auto r = verify_case(2, 1, 0);
    CHECK(r.pass());
    CHECK(r.brute.k == 1);
    CHECK(r.brute.counts == std::map<std::int64_t, std::int64_t>{{0, 1}, {1, 1}});
}

TEST_CASE("verify_case: (8,2,0) passes and surfaces the published-length note") {
    const auto r = verify_case(8, 2, 0);
    CHECK(r.pass());
    CHECK(r.brute.n == 95);
    REQUIRE_FALSE(r.notes.empty());
    bool mentions96 = false;
    for (const auto& note : r.notes)
        mentions96 = mentions96 || note.find("96") != std::string::npos;
    CHECK(mentions96);
}

TEST_CASE("compare_case pinpoints single quantities") {
    const Field& f = field_of(9);
    const auto brute = weight_distribution(f, defining_set(f, 3, 0));
    auto predicted = predicted_code(9, 3, 0);
    const auto moments = pless_check(brute);

    CHECK(compare_case(brute, predicted, moments, true).empty());

    auto broken = predicted;
    broken.n = 224;
    auto msgs = compare_case(brute, broken, moments, true);
    REQUIRE(msgs.size() == 1);
    CHECK(msgs[0] == "length: predicted 224, computed 223");

    broken = predicted;
    broken.dist[96] = 35;
    msgs = compare_case(brute, broken, moments, true);
    REQUIRE(msgs.size() == 1);
    CHECK(msgs[0] == "multiplicity at weight 96: predicted 35, computed 36");

    broken = predicted;
    broken.dist.erase(112);
    msgs = compare_case(brute, broken, moments, true);
    REQUIRE(msgs.size() == 1);
    CHECK(msgs[0] == "multiplicity at weight 112: predicted 0, computed 448");

    msgs = compare_case(brute, predicted, moments, false);
    REQUIRE(msgs.size() == 1);
    CHECK(msgs[0].find("dual distance") == 0);
}

TEST_CASE("verify_sums: ratio-2-mod-4 zero confirmed, case split exercised") {
    const auto stats62 = verify_sums(field_of(6), 1);
    CHECK(stats62.checked == 63 * 64);
    CHECK(stats62.passed == stats62.checked);
    CHECK(stats62.unpredicted == 0);
    CHECK(stats62.by_lemma.at("9") == 1); // exactly (a,b) = (1,1)
    CHECK(stats62.failures.empty());

    const auto stats41 = verify_sums(field_of(4), 1);
    CHECK(stats41.checked == 15 * 16);
    CHECK(stats41.passed == stats41.checked);
    CHECK(stats41.by_lemma.at("5.1") > 0); // non-cube a
    CHECK(stats41.by_lemma.at("5.2") > 0); // cube a
    CHECK(stats41.by_lemma.at("4") == 15); // every a at b = 0

    const auto stats93 = verify_sums(field_of(9), 3);
    CHECK(stats93.checked == 511 * 512);
    CHECK(stats93.passed == stats93.checked);
}

TEST_CASE("verify_sums is thread-count independent") {
    const auto s1 = verify_sums(field_of(8), 2, SumCheckMode::Full, 1);
    const auto s2 = verify_sums(field_of(8), 2, SumCheckMode::Full, 2);
    CHECK(s1.checked == s2.checked);
    CHECK(s1.passed == s2.passed);
    CHECK(s1.by_lemma == s2.by_lemma);
}

TEST_CASE("sweep: all cases pass, reports sorted, verdict aggregates") {
    VerifyOptions opts;
    opts.threads = 2;
    const auto report = sweep(10, opts);
    CHECK(report.all_pass);
    CHECK(report.m_max == 10);
    REQUIRE_FALSE(report.cases.empty());
    for (std::size_t i = 1; i < report.cases.size(); ++i) {
        const auto& x = report.cases[i - 1];
        const auto& y = report.cases[i];
        CHECK(std::tie(x.m, x.h, x.a) < std::tie(y.m, y.h, y.a));
    }
    // (m, h) counted once per divisor, twice for the two a values
    std::size_t expected = 0;
    for (int m = 2; m <= 10; ++m)
        for (int h = 1; h < m; ++h)
            if (m % h == 0) expected += 2;
    CHECK(report.cases.size() == expected);
}

TEST_CASE("sweep(2) is the two smallest cases") {
    const auto report = sweep(2);
    REQUIRE(report.cases.size() == 2);
    CHECK(report.cases[0].a == 0);
    CHECK(report.cases[1].a == 1);
    CHECK(report.all_pass);
}

TEST_CASE("budget: refusal carries the estimate, raising it unblocks") {
    VerifyOptions opts;
    CHECK(estimate_case_ops(16, 1, 0) > opts.budget);
    CHECK_THROWS_AS(verify_case(16, 1, 0, opts), BudgetExceeded);
    try {
        verify_case(16, 1, 0, opts);
    } catch (const BudgetExceeded& e) {
        CHECK(e.estimated_ops == estimate_case_ops(16, 1, 0));
        CHECK(e.budget == kDefaultOpBudget);
    }
    // the default budget admits exactly the documented sweep range
    for (const auto& [m, h, a] : all_cases(14))
        CHECK(estimate_case_ops(m, h, a) <= opts.budget);
    CHECK(estimate_sum_sweep_ops(12) <= opts.budget);
    CHECK(estimate_sum_sweep_ops(13) > opts.budget);
}

TEST_CASE("sweep output is independent of thread count") {
    VerifyOptions one;
    one.threads = 1;
    VerifyOptions two;
    two.threads = 2;
    CHECK(sweep_to_json(sweep(6, one)) == sweep_to_json(sweep(6, two)));
}

TEST_CASE("reports serialize and re-parse losslessly") {
    VerifyOptions opts;
    opts.threads = 2;
    const auto report = sweep(8, opts);
    for (const auto& c : report.cases) {
        const auto j = report_to_json(c);
        const auto parsed = report_from_json(j);
        CHECK(report_to_json(parsed) == j);
    }
}

TEST_CASE("report JSON carries the exact schema keys") {
    const auto j = report_to_json(verify_case(4, 2, 1));
    CHECK(j.contains("params"));
    CHECK(j["params"].contains("m"));
    CHECK(j["params"].contains("h"));
    CHECK(j["params"].contains("a"));
    CHECK(j.contains("case"));
    CHECK(j.contains("n"));
    CHECK(j.contains("k"));
    CHECK(j.contains("d"));
    CHECK(j.contains("dist"));
    for (const auto& row : j["dist"]) {
        CHECK(row.contains("w"));
        CHECK(row.contains("A"));
    }
    CHECK(j["checks"].contains("moments"));
    CHECK(j["checks"]["moments"].contains("p0"));
    CHECK(j["checks"]["moments"].contains("p1"));
    CHECK(j["checks"]["moments"].contains("p2"));
    CHECK(j["checks"].contains("dual_ge_3"));
    CHECK(j["checks"].contains("sums_checked"));
    CHECK(j["checks"].contains("sums_passed"));
    CHECK(j.contains("notes"));
    CHECK(j.contains("verdict"));
    CHECK(j["verdict"] == "pass");
}

TEST_CASE("modulus override flows through verify_case") {
    VerifyOptions opts;
    opts.modulus = next_irreducible(6, default_modulus(6));
    const auto r = verify_case(6, 2, 0, opts);
    CHECK(r.pass());
    CHECK(r.modulus_binary != Field(6).modulus_binary());
    CHECK(r.brute == verify_case(6, 2, 0).brute);
}
