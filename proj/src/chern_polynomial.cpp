#include "genus/chern_polynomial.hpp"

#include <vector>

#include "genus/errors.hpp"

namespace genus {

ChernPolynomial::ChernPolynomial(int grade) : grade_(grade) {
    if (grade < 0) throw InputError("Chern polynomial grade must be non-negative");
}

ChernPolynomial ChernPolynomial::monomial(const Partition &lambda, const YPolynomial &coeff) {
    ChernPolynomial p(lambda.weight());
    p.add_term(lambda, coeff);
    return p;
}

YPolynomial ChernPolynomial::coeff(const Partition &lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? YPolynomial() : it->second;
}

void ChernPolynomial::add_term(const Partition &lambda, const YPolynomial &coeff) {
    if (lambda.weight() != grade_)
        throw InputError("Chern monomial " + lambda.label() + " has weight " + std::to_string(lambda.weight()) +
                         ", expected " + std::to_string(grade_));
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(lambda, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ChernPolynomial &ChernPolynomial::operator+=(const ChernPolynomial &o) {
    if (o.grade_ != grade_ && !o.is_zero()) {
        if (!is_zero()) throw InputError("adding Chern polynomials of different grades");
        grade_ = o.grade_;
    }
    for (const auto &[lambda, c] : o.terms_) add_term(lambda, c);
    return *this;
}

ChernPolynomial &ChernPolynomial::operator-=(const ChernPolynomial &o) { return *this += -o; }

ChernPolynomial ChernPolynomial::scaled(const YPolynomial &c) const {
    return map_coeffs([&](const YPolynomial &p) { return p * c; });
}

ChernPolynomial operator*(const ChernPolynomial &a, const ChernPolynomial &b) {
    ChernPolynomial out(a.grade_ + b.grade_);
    for (const auto &[la, ca] : a.terms_)
        for (const auto &[lb, cb] : b.terms_) out.add_term(la.merged(lb), ca * cb);
    return out;
}

ChernPolynomial ChernPolynomial::at_y(const Rational &y) const {
    return map_coeffs([&](const YPolynomial &p) { return YPolynomial(p.evaluate(y)); });
}

YPolynomial ChernPolynomial::substitute(std::span<const Rational> classes) const {
    YPolynomial out;
    for (const auto &[lambda, c] : terms_) {
        Rational value(1);
        for (int part : lambda.parts()) {
            if (part > static_cast<int>(classes.size())) {
                value = Rational(0);
                break;
            }
            value *= classes[static_cast<std::size_t>(part - 1)];
        }
        out += c * value;
    }
    return out;
}

bool ChernPolynomial::has_constant_coeffs() const {
    for (const auto &[lambda, c] : terms_)
        if (!c.is_constant()) return false;
    return true;
}

std::string ChernPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto &[lambda, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*" + lambda.label();
    }
    return out;
}

ChernPolynomial power_sum_in_chern(int k, int n) {
    if (k < 1) throw InputError("power_sum_in_chern: k must be >= 1");
    if (n < 0) throw InputError("power_sum_in_chern: n must be >= 0");
    auto elementary = [n](int i) {
        return i <= n ? ChernPolynomial::monomial(Partition{i}) : ChernPolynomial(i);
    };
    // p_m = sum_{i=1}^{m-1} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m
    std::vector<ChernPolynomial> p;
    p.reserve(static_cast<std::size_t>(k) + 1);
    p.emplace_back(0);
    for (int m = 1; m <= k; ++m) {
        ChernPolynomial pm = elementary(m).scaled(YPolynomial(Rational((m % 2 == 1) ? m : -m)));
        for (int i = 1; i < m; ++i) {
            ChernPolynomial term = elementary(i) * p[static_cast<std::size_t>(m - i)];
            pm += (i % 2 == 1) ? term : -term;
        }
        p.push_back(std::move(pm));
    }
    return p.back();
}

}  // namespace genus
