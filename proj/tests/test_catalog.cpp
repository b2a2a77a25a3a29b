#include <doctest.h>

#include "genus/catalog.hpp"
#include "genus/errors.hpp"
#include "genus/genus.hpp"

using namespace genus;

TEST_CASE("projective space Chern numbers") {
    // c_lambda[P^n] = prod_i binom(n+1, lambda_i)
    for (int n = 1; n <= 6; ++n) {
        const auto m = projective_space(n);
        CHECK(m.complete());
        for (const auto &lambda : partitions_of(n)) {
            Rational expected(1);
            for (int part : lambda.parts()) expected *= Rational::binomial(n + 1, part);
            CHECK(m.chern_number(lambda) == expected);
        }
    }
}

TEST_CASE("hypersurface Chern numbers") {
    CHECK(hypersurface(3, 5).chern_number(Partition{3}) == Rational(-200));
    CHECK(hypersurface(3, 5).chern_number(Partition{1, 1, 1}) == Rational(0));
    CHECK(hypersurface(2, 4).chern_number(Partition{2}) == Rational(24));
    CHECK(hypersurface(2, 4).chern_number(Partition{1, 1}) == Rational(0));
    CHECK(hypersurface(2, 3).chern_number(Partition{1, 1}) == Rational(3));
    CHECK(hypersurface(2, 3).chern_number(Partition{2}) == Rational(9));
    CHECK(hypersurface(1, 3).chern_number(Partition{1}) == Rational(0));
    CHECK(hypersurface(2, 2).chern_number(Partition{2}) == Rational(4));
    // A degree-1 hypersurface is a hyperplane.
    for (int n = 1; n <= 5; ++n) CHECK(hypersurface(n, 1).chern_numbers == projective_space(n).chern_numbers);
}

TEST_CASE("catalog Betti data is consistent with the genus") {
    for (const auto &m : catalog_manifolds()) {
        REQUIRE(m.betti);
        long euler = 0;
        for (std::size_t i = 0; i < m.betti->betti().size(); ++i)
            euler += (i % 2 == 0 ? 1 : -1) * m.betti->betti()[i];
        CHECK_MESSAGE(Rational(euler) == specialize(m, Specialization::Euler), m.name);
        REQUIRE(m.betti->sigma());
        CHECK_MESSAGE(Rational(*m.betti->sigma()) == specialize(m, Specialization::Signature), m.name);
        CHECK(m.betti->dim() == 2 * m.dimension);
    }
}

TEST_CASE("products") {
    const auto m = make_manifold("product:pn:1,pn:2");
    CHECK(m.dimension == 3);
    CHECK(m.chern_number(Partition{3}) == Rational(6));
    CHECK(m.betti->betti() == std::vector<long>{1, 0, 2, 0, 2, 0, 1});
    REQUIRE(m.action);
    CHECK(m.action->components.size() == 6);
    CHECK(make_manifold("product:pn:1,pn:1,pn:1").dimension == 3);
    CHECK_THROWS_AS(make_manifold("product:fpp,pn:1"), InputError);
}

TEST_CASE("fake projective plane") {
    const auto m = fake_projective_plane();
    CHECK(m.flags.kahler_hyperbolic);
    CHECK(chi_vector(m).entries == std::vector<Rational>{1, -1, 1});
    CHECK(m.chern_number(Partition{1, 1}) == Rational(9));
    CHECK_FALSE(m.model);
}

TEST_CASE("linear actions with repeated exponents") {
    const auto model = linear_pn_action(3, {0, 0, 1, 1});
    CHECK(model.components.size() == 2);
    CHECK(model.components[0].complex_dim == 1);
    CHECK(model.components[0].df() == 0);
    CHECK(model.components[1].df() == 2);
    CHECK_THROWS_AS(linear_pn_action(2, {4, 4, 4}), InputError);
    CHECK_THROWS_AS(linear_pn_action(2, {0, 1}), InputError);
}

TEST_CASE("spec parsing") {
    CHECK(std::holds_alternative<ManifoldData>(make_from_spec("pn:4")));
    CHECK(std::holds_alternative<ManifoldData>(make_from_spec("hyp:3:5")));
    CHECK(std::holds_alternative<ManifoldData>(make_from_spec("fpp")));
    CHECK(std::holds_alternative<FixedPointModel>(make_from_spec("pnaction:4:0,1,2,3,4")));
    CHECK(std::holds_alternative<FixedPointModel>(make_from_spec("linaction:2:0,0,1")));
    for (const char *bad : {"", "pn", "pn:x", "pn:-1", "hyp:2", "pnaction:2:0,1", "pnaction:2:0,1,1", "grass:2:4", "pn:2:3"})
        CHECK_THROWS_AS(make_from_spec(bad), InputError);
    CHECK_THROWS_AS(make_manifold("pnaction:1:0,1"), InputError);
    CHECK(catalog_specs().size() == catalog_manifolds().size());
}
