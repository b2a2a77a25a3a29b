#include <doctest.h>

#include "genus/betti.hpp"
#include "genus/catalog.hpp"
#include "genus/errors.hpp"

using namespace genus;

namespace {

RationalMatrix m2(long a, long b, long c, long d) { return {{a, b}, {c, d}}; }

}  // namespace

TEST_CASE("profile validation") {
    CHECK_NOTHROW(BettiProfile(4, {1, 0, 2, 0, 1}, 0));
    CHECK_THROWS_AS(BettiProfile(3, {1, 0, 0, 1}), InputError);
    CHECK_THROWS_AS(BettiProfile(4, {1, 0, 2, 0}), InputError);
    CHECK_THROWS_AS(BettiProfile(4, {1, 0, 2, 1, 1}), InputError);
    CHECK_THROWS_AS(BettiProfile(4, {1, -1, 2, -1, 1}), InputError);
    CHECK_THROWS_AS(BettiProfile(2, {1, 2, 1}, 1), InputError);
    CHECK(BettiProfile::from_even({1, 1, 1}, 1).betti() == std::vector<long>{1, 0, 1, 0, 1});
    CHECK(BettiProfile::from_even({1, 3, 1}).alternating_even_sum() == -1);
}

TEST_CASE("inertia of small forms") {
    CHECK(inertia(m2(0, 1, 1, 0)) == InertiaTriple{1, 1, 0});
    CHECK(inertia(m2(1, 0, 0, -1)) == InertiaTriple{1, 1, 0});
    CHECK(inertia(m2(0, 0, 0, 0)) == InertiaTriple{0, 0, 2});
    CHECK(inertia(m2(1, 1, 1, 1)) == InertiaTriple{1, 0, 1});
    CHECK(inertia(RationalMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -2}}) == InertiaTriple{1, 2, 0});
    // E8-like: -2 on the diagonal path of A_3 is negative definite.
    CHECK(inertia(RationalMatrix{{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}}) == InertiaTriple{0, 3, 0});
    CHECK(inertia(RationalMatrix{}) == InertiaTriple{0, 0, 0});
    CHECK_THROWS_AS(inertia(m2(0, 1, 2, 0)), InputError);
    CHECK_THROWS_AS(inertia(RationalMatrix{{1, 2}}), InputError);
}

TEST_CASE("signature-alternating examples") {
    CHECK(signature_alternating(*projective_space(2).betti));
    CHECK(signature_alternating(*projective_space(4).betti));
    CHECK(signature_alternating(*make_manifold("product:pn:1,pn:1").betti));
    CHECK_FALSE(signature_alternating(*hypersurface(2, 4).betti));
    CHECK_THROWS_AS(signature_alternating(BettiProfile(4, {1, 0, 1, 0, 1})), InputError);
}

TEST_CASE("Cauchy-Schwarz classification") {
    CHECK(cs_classification({1, 0, 0}).reverse_cs);
    CHECK(cs_classification({1, 0, 0}).cs);
    CHECK_FALSE(cs_classification({2, 0, 0}).reverse_cs);
    CHECK_FALSE(cs_classification({1, 3, 0}).cs);
    CHECK_THROWS_AS(cs_classification({0, 1, 0}), InputError);
}

TEST_CASE("Betti inequalities on four-manifolds") {
    const auto p1p1 = mainapp5_check(*make_manifold("product:pn:1,pn:1").betti);
    CHECK(p1p1.m == 1);
    CHECK(p1p1.b_plus == 1);
    CHECK(p1p1.b_minus == 1);
    CHECK(p1p1.k_upper == 0);
    CHECK(p1p1.upper_equality);
    CHECK(p1p1.k_lower == 1);
    CHECK(p1p1.lower_lhs == 2);
    CHECK(p1p1.lower_rhs == 1);
    CHECK_FALSE(p1p1.lower_equality);
    CHECK(p1p1.consistent);

    const auto p2 = mainapp5_check(*projective_space(2).betti);
    CHECK(p2.lower_equality);
    CHECK(p2.cs.cs);
    CHECK(p2.consistent);

    const auto k3 = mainapp5_check(*hypersurface(2, 4).betti);
    CHECK_FALSE(k3.signature_alternating);
    CHECK(k3.b_plus == 3);
    CHECK(k3.b_minus == 19);
    CHECK(k3.consistent);  // vacuous
}

TEST_CASE("Betti inequalities in dimension 8 and 12") {
    const auto p4 = mainapp5_check(*projective_space(4).betti);
    CHECK(p4.m == 2);
    CHECK(p4.upper_holds);
    CHECK(p4.upper_equality);
    CHECK(p4.lower_equality);
    CHECK(p4.consistent);
    const auto p2p2 = mainapp5_check(*make_manifold("product:pn:2,pn:2").betti);
    CHECK(p2p2.b_plus == 2);
    CHECK(p2p2.b_minus == 1);
    CHECK(p2p2.consistent);
    const auto p6 = mainapp5_check(*projective_space(6).betti);
    CHECK(p6.m == 3);
    CHECK(p6.k_upper == 1);
    CHECK(p6.k_lower == 2);
    CHECK(p6.consistent);
}

TEST_CASE("Betti inequality input errors") {
    CHECK_THROWS_AS(mainapp5_check(*projective_space(3).betti), InputError);
    CHECK_THROWS_AS(mainapp5_check(BettiProfile(4, {1, 0, 1, 0, 1})), InputError);
    CHECK_THROWS_AS(mainapp5_check(BettiProfile(4, {1, 0, 2, 0, 1}, 1)), InputError);
    CHECK_THROWS_AS(mainapp5_check(BettiProfile(4, {1, 0, 2, 0, 1}, 4)), InputError);
}

TEST_CASE("unimodality diagnostic") {
    const auto ok = tolman_unimodality_report(*projective_space(5).betti);
    CHECK(ok.holds);
    CHECK(ok.chain_degrees == std::vector<int>{2, 4});
    CHECK(ok.label == "conjecture diagnostic");
    const auto bad = tolman_unimodality_report(BettiProfile::from_even({1, 3, 2, 2, 3, 1}));
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.first_failure_degree);
    CHECK(*bad.first_failure_degree == 4);
    CHECK(tolman_unimodality_report(*projective_space(4).betti).chain_degrees == std::vector<int>{2, 4});
}
