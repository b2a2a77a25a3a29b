#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "genus/catalog.hpp"
#include "genus/errors.hpp"
#include "genus/genus.hpp"
#include "genus/localization.hpp"

using namespace genus;

namespace {

YPolynomial betti_polynomial(const BettiProfile &p) {
    std::vector<Rational> c;
    for (long b : p.betti()) c.emplace_back(b);
    return YPolynomial(std::move(c));
}

std::vector<long> distinct_exponents(std::mt19937 &rng, int count) {
    std::uniform_int_distribution<long> dist(-30, 30);
    std::set<long> seen;
    while (static_cast<int>(seen.size()) < count) seen.insert(dist(rng));
    std::vector<long> out(seen.begin(), seen.end());
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

}  // namespace

TEST_CASE("point defaults") {
    const auto p = FixedComponent::isolated({1, -2, 3});
    CHECK(p.df() == 1);
    CHECK(p.betti_or_default() == std::vector<long>{1});
    CHECK(p.signature_or_default() == 1);
    CHECK(p.chi_minus_y_or_default() == YPolynomial(1));
    CHECK(negative_weight_count({-1, -1, 2}) == 2);
    CHECK_THROWS_AS(negative_weight_count({1, 0}), InputError);
}

TEST_CASE("structural validation") {
    FixedPointModel m;
    m.n = 2;
    CHECK_THROWS_AS(m.validate(), InputError);  // empty
    m.components = {FixedComponent::isolated({1})};
    CHECK_THROWS_AS(m.validate(), InputError);  // wrong weight count
    m.components = {FixedComponent::isolated({1, 0})};
    CHECK_THROWS_AS(m.validate(), InputError);  // zero weight
    FixedComponent c;
    c.complex_dim = 0;
    c.explicit_df = 3;
    m.components = {c};
    CHECK_THROWS_AS(m.validate(), InputError);  // dF out of range
    c.explicit_df = 1;
    c.weights = std::vector<long>{1, 2};
    m.components = {c};
    CHECK_THROWS_AS(m.validate(), InputError);  // dF disagrees with weights
    c.weights.reset();
    m.components = {c};
    CHECK_NOTHROW(m.validate());
    CHECK_THROWS_AS(standard_pn_action(2, {0, 1, 1}), InputError);
}

TEST_CASE("standard actions on projective space") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<long> exps(static_cast<std::size_t>(n) + 1);
        std::iota(exps.begin(), exps.end(), 0L);
        const auto model = standard_pn_action(n, exps);
        CHECK(model.all_isolated());
        CHECK(localized_chi_minus_y(model) == evaluate_genus(projective_space(n)).negated_variable());
        std::vector<Rational> nov(static_cast<std::size_t>(2 * n) + 1);
        for (int i = 0; i <= n; ++i) nov[static_cast<std::size_t>(2 * i)] = 1;
        CHECK(novikov_polynomial(model) == YPolynomial(nov));
        CHECK(localized_signature(model) == (n % 2 == 0 ? 1 : 0));
        const auto r = consistency_isolated(model);
        CHECK(r.applicable);
        CHECK(r.consistent());
        CHECK(r.chi_positive);
    }
}

TEST_CASE("localized invariants do not depend on the weights") {
    std::mt19937 rng(17);
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            const auto exps = distinct_exponents(rng, n + 1);
            const auto model = standard_pn_action(n, exps);
            CHECK(localized_chi_minus_y(model) == evaluate_genus(projective_space(n)).negated_variable());
            CHECK(novikov_polynomial(model) == betti_polynomial(*projective_space(n).betti));
        }
}

TEST_CASE("catalog actions reproduce the genus and Betti numbers of their manifolds") {
    for (const auto &a : catalog_actions()) {
        if (a.manifold_spec.empty()) continue;
        const ManifoldData m = make_manifold(a.manifold_spec);
        CHECK_MESSAGE(localized_chi_minus_y(a.model) == evaluate_genus(m).negated_variable(), a.name);
        if (m.betti) CHECK_MESSAGE(novikov_polynomial(a.model) == betti_polynomial(*m.betti), a.name);
        CHECK_MESSAGE(Rational(localized_signature(a.model)) == specialize(m, Specialization::Signature), a.name);
    }
}

TEST_CASE("signature formula applicability") {
    for (const auto &a : catalog_actions()) {
        const auto r = theorem_mainapp4_check(a.model);
        if (r.applicable) CHECK_MESSAGE(r.holds(), a.name);
        else CHECK_FALSE(r.unmet.empty());
    }
    const auto actions = catalog_actions();
    const auto k3 = std::find_if(actions.begin(), actions.end(), [](const NamedAction &a) { return a.name == "two K3 components"; });
    REQUIRE(k3 != actions.end());
    const auto r = theorem_mainapp4_check(k3->model);
    CHECK_FALSE(r.applicable);
    CHECK(r.unmet.size() == 2);
}

TEST_CASE("isolated consistency detects a missing extremum") {
    FixedPointModel m;
    m.n = 2;
    m.hamiltonian = true;
    m.components = {FixedComponent::isolated({1, -1}), FixedComponent::isolated({-1, 2})};
    const auto r = consistency_isolated(m);
    CHECK(r.applicable);
    CHECK_FALSE(r.extremal_ok);
    CHECK_FALSE(r.consistent());
    m.hamiltonian = false;
    CHECK(consistency_isolated(m).consistent());
}

TEST_CASE("positive-dimensional components need their invariants") {
    FixedPointModel m;
    m.n = 2;
    FixedComponent line;
    line.complex_dim = 1;
    line.weights = std::vector<long>{1};
    m.components = {line, FixedComponent::isolated({-1, -2})};
    CHECK_THROWS_AS(localized_chi_minus_y(m), InputError);
    CHECK_THROWS_AS(novikov_polynomial(m), InputError);
    CHECK_THROWS_AS(localized_signature(m), InputError);
    CHECK_FALSE(consistency_isolated(m).applicable);
}
