#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dioph/theorems.hpp"

using namespace dioph;

TEST_CASE("theorem ids round-trip through their names") {
    for (TheoremId id : kAllTheorems) CHECK(theorem_from_name(theorem_name(id)) == id);
    CHECK_THROWS_AS(theorem_from_name("NOT_A_THEOREM"), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem(TheoremId::eq_omega, 1), std::invalid_argument);
}

TEST_CASE("every theorem holds on every order up to 60") {
    for (u64 n = 2; n <= 60; ++n)
        for (TheoremId id : kAllTheorems) {
            const auto verdict = verify_theorem(id, n);
            CAPTURE(n);
            CAPTURE(theorem_name(id));
            REQUIRE(verdict.counterexamples.empty());
        }
}

TEST_CASE("pair sweeps are not vacuous at moderate orders") {
    CHECK(verify_theorem(TheoremId::eq_prime_powers, 20).pairs_checked > 0);
    CHECK(verify_theorem(TheoremId::eq_multiple, 20).pairs_checked > 0);
    CHECK(verify_theorem(TheoremId::eq_omega, 20).pairs_checked > 0);
    CHECK(verify_theorem(TheoremId::nbhd_nesting, 20).pairs_checked > 0);
    CHECK(verify_theorem(TheoremId::deficient_has_critical, 20).pairs_checked > 0);
    CHECK(verify_theorem(TheoremId::eq_omega, 2).pairs_checked == 0);  // vacuous
}

TEST_CASE("the (14,16) pair of order 20 satisfies the omega hypothesis with degree 18") {
    const auto spec = make_maximal_spec(20);
    CHECK(eq_omega_hypothesis(14, 16, spec));
    CHECK(eq_omega_hypothesis(16, 14, spec));
    CHECK(degree_bruteforce(14, spec) == 18);
    CHECK(degree_bruteforce(16, spec) == 18);
    CHECK_FALSE(eq_omega_hypothesis(14, 3, spec));  // floors 2 vs 6 cannot match
    CHECK_THROWS_AS(eq_omega_hypothesis(14, 14, spec), std::invalid_argument);
    CHECK_THROWS_AS(eq_omega_hypothesis(0, 14, spec), std::invalid_argument);
}

TEST_CASE("order 23 carries the converse non-example annotation") {
    const auto verdict = verify_theorem(TheoremId::eq_omega, 23);
    CHECK(verdict.counterexamples.empty());
    REQUIRE_FALSE(verdict.annotations.empty());
    const std::string& note = verdict.annotations.front();
    CHECK(note.find("converse non-example") != std::string::npos);
    CHECK(note.find("deg=10/10") != std::string::npos);

    const auto spec = make_maximal_spec(23);
    CHECK(degree_bruteforce(10, spec) == degree_bruteforce(14, spec));
    CHECK(multiples_count(spec.critical_power_of(5), 23) == 4);
    CHECK(multiples_count(spec.critical_power_of(7), 23) == 3);
    CHECK_FALSE(eq_omega_hypothesis(10, 14, spec));
}

TEST_CASE("prime-power evidence rows") {
    SUBCASE("n=8: counting argument inconclusive, independence argument decisive") {
        const auto verdict = verify_theorem(TheoremId::corollary_nonprime, 8);
        REQUIRE(verdict.pairs_checked == 1);
        REQUIRE_FALSE(verdict.annotations.empty());
        const std::string& row = verdict.annotations.front();
        CHECK(row.find("full_degree=6") != std::string::npos);
        CHECK(row.find("sy_threshold=7") != std::string::npos);
        CHECK(row.find("claimed_min=10") != std::string::npos);
        CHECK(row.find("alpha=2") != std::string::npos);
        auto has = [&](const char* text) {
            return std::any_of(verdict.annotations.begin(), verdict.annotations.end(),
                               [&](const std::string& s) { return s.find(text) != std::string::npos; });
        };
        CHECK(has("inconclusive"));
        CHECK(has("claimed minimum full-degree count is not attained"));
        CHECK(has("even labels outnumber the independence number"));
    }

    SUBCASE("n=9: neither counting nor independence settles it") {
        const auto verdict = verify_theorem(TheoremId::corollary_nonprime, 9);
        REQUIRE(verdict.pairs_checked == 1);
        CHECK(verdict.annotations.front().find("alpha=4") != std::string::npos);
        CHECK(verdict.annotations.front().find("evens=4") != std::string::npos);
        for (const auto& note : verdict.annotations)
            CHECK(note.find("even labels outnumber") == std::string::npos);
    }

    SUBCASE("n=16: independence argument decisive") {
        const auto verdict = verify_theorem(TheoremId::corollary_nonprime, 16);
        CHECK(verdict.annotations.front().find("alpha=5") != std::string::npos);
        const bool decisive = std::any_of(
            verdict.annotations.begin(), verdict.annotations.end(), [](const std::string& s) {
                return s.find("even labels outnumber the independence number") != std::string::npos;
            });
        CHECK(decisive);
    }

    SUBCASE("orders that are not proper prime powers are skipped") {
        CHECK(verify_theorem(TheoremId::corollary_nonprime, 12).pairs_checked == 0);
        CHECK(verify_theorem(TheoremId::corollary_nonprime, 7).pairs_checked == 0);
        CHECK(verify_theorem(TheoremId::corollary_nonprime, 6).pairs_checked == 0);
    }
}
