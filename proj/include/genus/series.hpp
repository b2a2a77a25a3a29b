#pragma once

#include <vector>

#include "genus/ypolynomial.hpp"

namespace genus {

/// Power series in x over Q[y], truncated to x^0 .. x^{order-1}.
class TruncatedSeries {
public:
    /// Zero series; order must be >= 1.
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<YPolynomial> coeffs);

    [[nodiscard]] int order() const { return static_cast<int>(coeffs_.size()); }
    [[nodiscard]] const YPolynomial &operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    [[nodiscard]] YPolynomial &operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
    [[nodiscard]] const std::vector<YPolynomial> &coeffs() const { return coeffs_; }

    /// 1 (constant series).
    static TruncatedSeries one(int order);
    /// x, or 0 when order == 1.
    static TruncatedSeries x(int order);

    TruncatedSeries &operator+=(const TruncatedSeries &o);
    TruncatedSeries &operator-=(const TruncatedSeries &o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
    [[nodiscard]] TruncatedSeries scaled(const YPolynomial &c) const;

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

    /// f(x) -> f(c x) for a polynomial c in y.
    [[nodiscard]] TruncatedSeries substitute_scaled_x(const YPolynomial &c) const;
    /// Every coefficient p(y) -> p(-y).
    [[nodiscard]] TruncatedSeries negated_y() const;
    /// Every coefficient evaluated at a fixed y.
    [[nodiscard]] TruncatedSeries at_y(const Rational &y) const;
    /// f(x) -> x f(x), truncated.
    [[nodiscard]] TruncatedSeries times_x() const;

private:
    void check_order(const TruncatedSeries &o, const char *op) const;
    std::vector<YPolynomial> coeffs_;
};

/// Cauchy product truncated at the common order; mismatched orders throw.
TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b);

/// Formal logarithm; the constant term must be exactly 1.
TruncatedSeries series_log(const TruncatedSeries &a);

/// Formal exponential; the constant term must be 0.
TruncatedSeries series_exp(const TruncatedSeries &a);

/// Multiplicative inverse; the constant term must be a nonzero rational
/// (a unit of Q[y]).
TruncatedSeries series_inverse(const TruncatedSeries &a);

/// sum_{k<order} c^k x^k / k!  i.e. exp(c x) for a polynomial c.
TruncatedSeries series_exp_linear(const YPolynomial &c, int order);

}  // namespace genus
