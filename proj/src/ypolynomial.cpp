#include "genus/ypolynomial.hpp"

#include <algorithm>

namespace genus {

YPolynomial::YPolynomial(Rational constant) : coeffs_{std::move(constant)} { trim(); }

YPolynomial::YPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

YPolynomial::YPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

YPolynomial YPolynomial::monomial(int k, const Rational &c) {
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return YPolynomial(std::move(v));
}

void YPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational YPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

YPolynomial &YPolynomial::operator+=(const YPolynomial &o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

YPolynomial &YPolynomial::operator-=(const YPolynomial &o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

YPolynomial operator*(const YPolynomial &a, const YPolynomial &b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return YPolynomial(std::move(out));
}

YPolynomial &YPolynomial::operator*=(const YPolynomial &o) { return *this = *this * o; }

YPolynomial &YPolynomial::operator*=(const Rational &c) {
    for (auto &x : coeffs_) x *= c;
    trim();
    return *this;
}

YPolynomial YPolynomial::operator-() const {
    YPolynomial r = *this;
    for (auto &x : r.coeffs_) x = -x;
    return r;
}

Rational YPolynomial::evaluate(const Rational &y) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + *it;
    return acc;
}

YPolynomial YPolynomial::pow(unsigned e) const {
    YPolynomial result(1), base = *this;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

YPolynomial YPolynomial::shifted(const Rational &shift) const {
    // Horner in the ring: ((a_d)(y+s) + a_{d-1})(y+s) + ...
    const YPolynomial lin{shift, Rational(1)};
    YPolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= lin;
        acc += YPolynomial(*it);
    }
    return acc;
}

YPolynomial YPolynomial::negated_variable() const {
    YPolynomial r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

YPolynomial YPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return YPolynomial(std::move(out));
}

std::string YPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational &c = coeffs_[k];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        bool unit = mag == Rational(1);
        if (k == 0 || !unit) out += mag.str();
        if (k > 0) {
            if (!unit) out += "*";
            out += "y";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace genus
