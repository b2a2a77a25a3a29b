#include <doctest.h>

#include "genus/errors.hpp"
#include "genus/genus.hpp"
#include "genus/series.hpp"

using namespace genus;

namespace {

// Bernoulli numbers with B_1 = +1/2: sum_{j<=m} binom(m+1, j) B_j = m + 1.
std::vector<Rational> bernoulli_plus(int up_to) {
    std::vector<Rational> b(static_cast<std::size_t>(up_to) + 1);
    b[0] = 1;
    for (int m = 1; m <= up_to; ++m) {
        Rational s;
        for (int j = 0; j < m; ++j) s += Rational::binomial(m + 1, j) * b[static_cast<std::size_t>(j)];
        b[static_cast<std::size_t>(m)] = (Rational(m + 1) - s) / Rational(m + 1);
    }
    return b;
}

TruncatedSeries random_unit_series(int order, long seed) {
    std::vector<YPolynomial> c(static_cast<std::size_t>(order));
    c[0] = 1;
    for (int k = 1; k < order; ++k) c[static_cast<std::size_t>(k)] = YPolynomial{Rational((seed * k) % 7 - 3, k + 1), Rational(k % 3 - 1)};
    return TruncatedSeries(order, c);
}

}  // namespace

TEST_CASE("normalized series matches the Bernoulli closed form") {
    // x(1 + y e^{-xu})/(1 - e^{-xu}) = t/(1 - e^{-t}) - y x with t = (1+y) x,
    // so [x^1] = (1 - y)/2 and [x^k] = B_k (1+y)^k / k! for k >= 2.
    const int order = 14;
    const auto b = bernoulli_plus(order);
    const TruncatedSeries q = normalized_series(order);
    const YPolynomial u{1, 1};
    CHECK(q[0] == YPolynomial(1));
    CHECK(q[1] == YPolynomial{Rational(1, 2), Rational(-1, 2)});
    for (int k = 2; k < order; ++k)
        CHECK(q[k] == u.pow(static_cast<unsigned>(k)) * (b[static_cast<std::size_t>(k)] / Rational::factorial(k)));
}

TEST_CASE("normalized series specializes to the classical genera") {
    const auto q = normalized_series(8);
    // y = -1: 1 + x (Euler class)
    const auto euler = q.at_y(Rational(-1));
    CHECK(euler[1] == YPolynomial(1));
    for (int k = 2; k < 8; ++k) CHECK(euler[k].is_zero());
    // y = 1: x / tanh(x), even
    const auto sig = q.at_y(Rational(1));
    for (int k = 1; k < 8; k += 2) CHECK(sig[k].is_zero());
    CHECK(sig[2] == YPolynomial(Rational(1, 3)));
}

TEST_CASE("log and exp are inverse") {
    for (long seed = 1; seed <= 5; ++seed) {
        const auto f = random_unit_series(9, seed);
        CHECK(series_exp(series_log(f)) == f);
        const auto g = f - TruncatedSeries::one(9);
        CHECK(series_log(series_exp(g)) == g);
    }
}

TEST_CASE("inverse and product") {
    const auto f = random_unit_series(10, 3);
    CHECK(series_mul(f, series_inverse(f)) == TruncatedSeries::one(10));
    const auto e = series_exp_linear(YPolynomial{0, 1}, 6);
    CHECK(e[3] == YPolynomial::monomial(3, Rational(1, 6)));
    CHECK(series_mul(series_exp_linear(YPolynomial(2), 6), series_exp_linear(YPolynomial(-2), 6)) == TruncatedSeries::one(6));
    CHECK(TruncatedSeries::x(4).times_x()[2] == YPolynomial(1));
}

TEST_CASE("precondition failures") {
    CHECK_THROWS_AS(series_log(TruncatedSeries(4)), InputError);
    CHECK_THROWS_AS(series_exp(TruncatedSeries::one(4)), InputError);
    CHECK_THROWS_AS(series_inverse(TruncatedSeries(4)), InputError);
    CHECK_THROWS_AS(series_inverse(TruncatedSeries(3, {YPolynomial{1, 1}, 0, 0})), InputError);
    CHECK_THROWS_AS(series_mul(TruncatedSeries(3), TruncatedSeries(4)), InputError);
}
