#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "genus/rational.hpp"

namespace genus {

/// Univariate polynomial in y with exact rational coefficients.
/// Dense storage, trailing zeros trimmed; the zero polynomial is empty.
class YPolynomial {
public:
    YPolynomial() = default;
    YPolynomial(Rational constant);  // NOLINT: implicit on purpose
    YPolynomial(long constant) : YPolynomial(Rational(constant)) {}  // NOLINT
    YPolynomial(std::initializer_list<Rational> coeffs);
    explicit YPolynomial(std::vector<Rational> coeffs);

    /// y^k
    static YPolynomial monomial(int k, const Rational &c = Rational(1));

    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
    [[nodiscard]] Rational coeff(int k) const;
    [[nodiscard]] const std::vector<Rational> &coeffs() const { return coeffs_; }

    YPolynomial &operator+=(const YPolynomial &o);
    YPolynomial &operator-=(const YPolynomial &o);
    YPolynomial &operator*=(const YPolynomial &o);
    YPolynomial &operator*=(const Rational &c);

    friend YPolynomial operator+(YPolynomial a, const YPolynomial &b) { return a += b; }
    friend YPolynomial operator-(YPolynomial a, const YPolynomial &b) { return a -= b; }
    friend YPolynomial operator*(const YPolynomial &a, const YPolynomial &b);
    friend YPolynomial operator*(YPolynomial a, const Rational &c) { return a *= c; }
    friend YPolynomial operator*(const Rational &c, YPolynomial a) { return a *= c; }
    YPolynomial operator-() const;

    friend bool operator==(const YPolynomial &, const YPolynomial &) = default;

    [[nodiscard]] Rational evaluate(const Rational &y) const;
    [[nodiscard]] YPolynomial pow(unsigned e) const;

    /// p(y) -> p(y + shift); Taylor re-expansion around -shift.
    [[nodiscard]] YPolynomial shifted(const Rational &shift) const;

    /// p(y) -> p(-y)
    [[nodiscard]] YPolynomial negated_variable() const;

    [[nodiscard]] YPolynomial derivative() const;

    /// Human-readable form such as "1 - y + y^2".
    [[nodiscard]] std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace genus
