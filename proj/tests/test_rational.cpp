#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "genus/errors.hpp"
#include "genus/rational.hpp"

using genus::Rational;

TEST_CASE("rational arithmetic stays in lowest terms") {
    CHECK(Rational(6, 8).str() == "3/4");
    CHECK(Rational(-6, -8).str() == "3/4");
    CHECK(Rational(6, -8).str() == "-3/4");
    CHECK(Rational(10, 5).str() == "2");
    CHECK((Rational(1, 2) + Rational(1, 3)).str() == "5/6");
    CHECK((Rational(1, 2) - Rational(1, 3)).str() == "1/6");
    CHECK((Rational(2, 3) * Rational(9, 4)).str() == "3/2");
    CHECK((Rational(2, 3) / Rational(4, 9)).str() == "3/2");
    CHECK((-Rational(2, 3)).str() == "-2/3");
    CHECK(Rational(0).str() == "0");
}

TEST_CASE("rational parse accepts canonical forms and rejects junk") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(Rational::parse("4/2") == Rational(2));
    for (const char *bad : {"", "x", "1/0", "1/", "/2", "1.5", "1/2/3", " 1"}) CHECK_THROWS_AS(Rational::parse(bad), genus::InputError);
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("comparisons and integer queries") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(5).is_integer());
    CHECK_FALSE(Rational(5, 2).is_integer());
    CHECK(Rational(-12).to_int64() == -12);
    CHECK_THROWS_AS((void)Rational(1, 2).to_int64(), genus::InputError);
    CHECK(Rational(3, 4).numerator() == "3");
    CHECK(Rational(3, 4).denominator() == "4");
}

TEST_CASE("binomial, factorial and powers") {
    CHECK(Rational::binomial(9, 4) == Rational(126));
    CHECK(Rational::binomial(4, 7) == Rational(0));
    CHECK(Rational::binomial(4, -1) == Rational(0));
    CHECK(Rational::factorial(10) == Rational(3628800));
    CHECK(Rational::pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(Rational::pow(Rational(5), 0) == Rational(1));
    CHECK(Rational::lcm_den(Rational(1, 4), Rational(5, 6)) == Rational(12));
    // Pascal's rule
    for (long n = 1; n <= 30; ++n)
        for (long k = 1; k <= n; ++k)
            CHECK(Rational::binomial(n, k) == Rational::binomial(n - 1, k - 1) + Rational::binomial(n - 1, k));
}

TEST_CASE("field axioms on random small fractions") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
    for (int trial = 0; trial < 500; ++trial) {
        const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        const Rational x(a, b), y(c, d);
        // Cross-multiplication oracle for the sum.
        const long sn = a * d + c * b, sd = b * d;
        const long g = std::gcd(sn, sd);
        CHECK((x + y) == Rational(sn / g, sd / g));
        CHECK((x + y) - y == x);
        CHECK(x * y == y * x);
        if (!y.is_zero()) CHECK((x / y) * y == x);
        CHECK(((x < y) == (a * d < c * b)));
    }
}
