#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/test_support.hpp"
#include "tracecodes/predict.hpp"

using namespace tracecodes;
using namespace tracecodes::testing;

TEST_CASE("classify_case: tags and the partition property") {
    CHECK(classify_case(9, 3) == CaseTag::Odd);
    CHECK(classify_case(12, 2) == CaseTag::TwoModFour);
    CHECK(classify_case(8, 2) == CaseTag::ZeroModFour);
    CHECK(classify_case(4, 2) == CaseTag::Two);
    CHECK_THROWS_AS(classify_case(7, 3), std::invalid_argument);
    CHECK_THROWS_AS(classify_case(6, 6), std::invalid_argument);
    CHECK_THROWS_AS(classify_case(5, 2), std::invalid_argument);

    for (int m = 2; m <= 24; ++m)
        for (int h = 1; h < m; ++h)
            if (m % h == 0) CHECK_NOTHROW(classify_case(m, h));
}

TEST_CASE("predicted_code: pinned table evaluations") {
    const auto p1 = predicted_code(9, 3, 0);
    CHECK(p1.n == 223);
    CHECK(p1.k == 9);
    CHECK(p1.dist ==
          std::map<std::int64_t, std::int64_t>{{0, 1}, {96, 36}, {112, 448}, {128, 27}});

    const auto p2 = predicted_code(12, 2, 1);
    CHECK(p2.n == 2048);
    CHECK(p2.k == 12);
    CHECK(p2.dist == std::map<std::int64_t, std::int64_t>{
                         {0, 1}, {960, 120}, {1024, 3839}, {1088, 136}});

    const auto p3 = predicted_code(4, 2, 1);
    CHECK(p3.n == 8);
    CHECK(p3.k == 4);
    CHECK(p3.dist == std::map<std::int64_t, std::int64_t>{{0, 1}, {4, 14}, {8, 1}});

    // table rows degenerate at m = 3: one multiplicity hits zero and the
    // weight-0 row collapses the dimension
    const auto p4 = predicted_code(3, 1, 0);
    CHECK(p4.n == 1);
    CHECK(p4.k == 1);
    CHECK(p4.dist == std::map<std::int64_t, std::int64_t>{{0, 1}, {1, 1}});
    CHECK(p4.min_weight() == 1);

    const auto p5 = predicted_code(8, 2, 0);
    CHECK(p5.n == 95); // the published "96" is not what the formula gives
    CHECK(p5.dist == std::map<std::int64_t, std::int64_t>{{0, 1}, {32, 10}, {48, 240}, {64, 5}});

    CHECK_THROWS_AS(predicted_code(9, 3, 2), std::invalid_argument);
}

TEST_CASE("predicted_code equals brute enumeration everywhere up to m = 12") {
    for (const auto& [m, h, a] : all_cases(12)) {
        const Field& f = field_of(m);
        const auto brute = weight_distribution(f, defining_set(f, h, a));
        const auto pred = predicted_code(m, h, a);
        INFO("m=" << m << " h=" << h << " a=" << a);
        CHECK(pred.n == brute.n);
        CHECK(pred.k == brute.k);
        CHECK(pred.min_weight() == brute.d);
        CHECK(pred.dist == brute.counts);
    }
}

TEST_CASE("predicted distributions satisfy the moment identities") {
    for (const auto& [m, h, a] : all_cases(20)) {
        const auto pred = predicted_code(m, h, a);
        WeightDistribution as_dist;
        as_dist.counts = pred.dist;
        as_dist.n = pred.n;
        as_dist.k = pred.k;
        const auto rep = pless_check(as_dist);
        INFO("m=" << m << " h=" << h << " a=" << a);
        CHECK(rep.p0_ok);
        CHECK(rep.p1_ok);
        CHECK(rep.p2_ok);
    }
}

TEST_CASE("pless_check: frozen arithmetic for the (12,2,0) distribution") {
    WeightDistribution dist;
    dist.counts = {{0, 1}, {960, 136}, {1024, 3839}, {1088, 120}};
    dist.n = 2047;
    dist.k = 12;
    const auto rep = pless_check(dist);
    CHECK(rep.p0_ok);
    CHECK(rep.p1_ok);
    CHECK(rep.p2_ok);
    // sum w*A   = 4192256   = 2047 * 2^11
    CHECK(u128_to_string(rep.p1_lhs) == "8384512"); // doubled form
    CHECK(u128_to_string(rep.p1_rhs) == "8384512");
    // sum w^2*A = 4292870144 = 2047 * 2048 * 2^10
    CHECK(u128_to_string(rep.p2_lhs) == "17171480576"); // quadrupled form
    CHECK(u128_to_string(rep.p2_rhs) == "17171480576");
}

TEST_CASE("pless_check: zero code holds vacuously, broken dist is caught") {
    WeightDistribution zero;
    zero.counts = {{0, 1}};
    zero.n = 17;
    zero.k = 0;
    const auto rep = pless_check(zero);
    CHECK(rep.p0_ok);
    CHECK(rep.p1_ok);
    CHECK(rep.p2_ok);

    WeightDistribution broken;
    broken.counts = {{0, 1}, {2, 2}};
    broken.n = 3;
    broken.k = 2;
    const auto rep2 = pless_check(broken);
    CHECK_FALSE(rep2.p0_ok);
}

TEST_CASE("johnson_bound_1: pinned values, family, inapplicable, errors") {
    CHECK(johnson_bound_1(7, 4, 4) == 7);
    CHECK(johnson_bound_1(4, 2, 4) == 1);
    for (int m : {2, 4, 6, 8, 10}) {
        const std::int64_t n = (std::int64_t{1} << (m - 1)) - 1;
        const std::int64_t w = std::int64_t{1} << (m - 2);
        CHECK(johnson_bound_1(n, w, w) == n); // d = 2^(m-2) as well
    }
    CHECK_FALSE(johnson_bound_1(10, 2, 5).has_value()); // denominator <= 0
    CHECK_THROWS_AS(johnson_bound_1(3, 2, 4), std::invalid_argument); // w > n
    CHECK_THROWS_AS(johnson_bound_1(3, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(johnson_bound_1(3, 2, 0), std::invalid_argument);
}

TEST_CASE("constant-weight case meets the Johnson bound with equality") {
    for (int m : {2, 4, 6, 8, 10}) {
        const Field& f = field_of(m);
        const auto dist = weight_distribution(f, defining_set(f, m / 2, 0));
        const std::int64_t w = std::int64_t{1} << (m - 2);
        REQUIRE(dist.counts.count(w) == 1);
        const std::int64_t nonzero_words = dist.counts.at(w);
        CHECK(nonzero_words == (std::int64_t{1} << (m - 1)) - 1);
        CHECK(johnson_bound_1(dist.n, dist.d, w) == nonzero_words);
    }
}
