#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "omega/selftest.hpp"

using namespace omega;

TEST_CASE("each property suite passes every trial") {
    for (const auto& c : run_selftests(20240814)) {
        INFO(c.name << ": expected " << c.expected << ", got " << c.actual);
        CHECK(c.pass);
    }
}

TEST_CASE("suites report their trial tallies") {
    const auto checks = run_selftests(1);
    REQUIRE(checks.size() == 7);
    CHECK(checks[0].actual == "200/200");
    CHECK(checks[1].actual == "100/100");
    CHECK(checks[2].actual == "100/100");
    CHECK(checks[3].actual == "100/100");
    CHECK(checks[5].actual == "35/35");
    CHECK(checks[6].actual == "20/20");
}

TEST_CASE("different seeds still pass") {
    for (std::uint64_t seed : {7ull, 99ull, 123456789ull}) {
        CHECK(all_pass(single_entry_monotonicity(seed, 40)));
        CHECK(all_pass(row_sum_dominance(seed, 25)));
        CHECK(all_pass(exchange_monotonicity(seed, 25)));
        CHECK(all_pass(companion_polynomial_identity(seed, 25)));
    }
}

TEST_CASE("the sign-alternating companion form is reported as a mismatch") {
    const auto checks = companion_polynomial_identity(3, 5);
    REQUIRE(checks.size() == 2);
    CHECK(checks[1].pass);
    CHECK(checks[1].actual != checks[0].actual);
    CHECK(checks[1].expected.find("x^3 - x^2 - x - 1") != std::string::npos);
}
