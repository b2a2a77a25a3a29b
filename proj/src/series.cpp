#include "genus/series.hpp"

#include <string>

#include "genus/errors.hpp"

namespace genus {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 1) throw InputError("series order must be positive");
    coeffs_.resize(static_cast<std::size_t>(order));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<YPolynomial> coeffs) : TruncatedSeries(order) {
    if (coeffs.size() > coeffs_.size()) coeffs.resize(coeffs_.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s[0] = YPolynomial(1);
    return s;
}

TruncatedSeries TruncatedSeries::x(int order) {
    TruncatedSeries s(order);
    if (order > 1) s[1] = YPolynomial(1);
    return s;
}

void TruncatedSeries::check_order(const TruncatedSeries &o, const char *op) const {
    if (o.order() != order())
        throw InputError(std::string(op) + ": order mismatch (" + std::to_string(order()) + " vs " +
                         std::to_string(o.order()) + ")");
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &o) {
    check_order(o, "series add");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &o) {
    check_order(o, "series sub");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TruncatedSeries TruncatedSeries::scaled(const YPolynomial &c) const {
    TruncatedSeries r = *this;
    for (auto &p : r.coeffs_) p = p * c;
    return r;
}

TruncatedSeries TruncatedSeries::substitute_scaled_x(const YPolynomial &c) const {
    TruncatedSeries r = *this;
    YPolynomial power(1);
    for (auto &p : r.coeffs_) {
        p = p * power;
        power *= c;
    }
    return r;
}

TruncatedSeries TruncatedSeries::negated_y() const {
    TruncatedSeries r = *this;
    for (auto &p : r.coeffs_) p = p.negated_variable();
    return r;
}

TruncatedSeries TruncatedSeries::at_y(const Rational &y) const {
    TruncatedSeries r = *this;
    for (auto &p : r.coeffs_) p = YPolynomial(p.evaluate(y));
    return r;
}

TruncatedSeries TruncatedSeries::times_x() const {
    TruncatedSeries r(order());
    for (int k = 1; k < order(); ++k) r[k] = (*this)[k - 1];
    return r;
}

TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b) {
    if (a.order() != b.order()) throw InputError("series_mul: order mismatch");
    const int n = a.order();
    TruncatedSeries r(n);
    for (int i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

TruncatedSeries series_log(const TruncatedSeries &a) {
    if (a[0] != YPolynomial(1)) throw InputError("series_log: constant term must be 1");
    // b = log a  <=>  a b' = a'  =>  k b_k = k a_k - sum_{j=1}^{k-1} j b_j a_{k-j}
    const int n = a.order();
    TruncatedSeries b(n);
    for (int k = 1; k < n; ++k) {
        YPolynomial acc = a[k] * Rational(k);
        for (int j = 1; j < k; ++j) acc -= b[j] * a[k - j] * Rational(j);
        b[k] = acc * Rational(1, k);
    }
    return b;
}

TruncatedSeries series_exp(const TruncatedSeries &a) {
    if (!a[0].is_zero()) throw InputError("series_exp: constant term must be 0");
    // e = exp a  <=>  e' = a' e  =>  k e_k = sum_{j=1}^{k} j a_j e_{k-j}
    const int n = a.order();
    TruncatedSeries e(n);
    e[0] = YPolynomial(1);
    for (int k = 1; k < n; ++k) {
        YPolynomial acc;
        for (int j = 1; j <= k; ++j) acc += a[j] * e[k - j] * Rational(j);
        e[k] = acc * Rational(1, k);
    }
    return e;
}

TruncatedSeries series_inverse(const TruncatedSeries &a) {
    if (!a[0].is_constant() || a[0].is_zero())
        throw InputError("series_inverse: constant term is not a unit of Q[y]");
    const Rational inv0 = Rational(1) / a[0].coeff(0);
    const int n = a.order();
    TruncatedSeries r(n);
    r[0] = YPolynomial(inv0);
    for (int k = 1; k < n; ++k) {
        YPolynomial acc;
        for (int j = 1; j <= k; ++j) acc += a[j] * r[k - j];
        r[k] = -(acc * inv0);
    }
    return r;
}

TruncatedSeries series_exp_linear(const YPolynomial &c, int order) {
    TruncatedSeries r(order);
    YPolynomial power(1);
    for (int k = 0; k < order; ++k) {
        r[k] = power * (Rational(1) / Rational::factorial(k));
        power *= c;
    }
    return r;
}

}  // namespace genus
