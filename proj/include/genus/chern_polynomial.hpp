#pragma once

#include <map>
#include <span>
#include <string>

#include "genus/partition.hpp"
#include "genus/ypolynomial.hpp"

namespace genus {

/// Homogeneous polynomial in the Chern classes c_1, c_2, ... with
/// coefficients in Q[y]. Every key has weight == grade(); zero terms are
/// never stored. Iteration follows the canonical partition order.
class ChernPolynomial {
public:
    using Terms = std::map<Partition, YPolynomial>;

    explicit ChernPolynomial(int grade = 0);

    /// coeff * c_lambda
    static ChernPolynomial monomial(const Partition &lambda, const YPolynomial &coeff = YPolynomial(1));

    [[nodiscard]] int grade() const { return grade_; }
    [[nodiscard]] const Terms &terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] YPolynomial coeff(const Partition &lambda) const;

    /// Adds coeff * c_lambda; lambda must have weight grade().
    void add_term(const Partition &lambda, const YPolynomial &coeff);

    ChernPolynomial &operator+=(const ChernPolynomial &o);
    ChernPolynomial &operator-=(const ChernPolynomial &o);
    friend ChernPolynomial operator+(ChernPolynomial a, const ChernPolynomial &b) { return a += b; }
    friend ChernPolynomial operator-(ChernPolynomial a, const ChernPolynomial &b) { return a -= b; }
    [[nodiscard]] ChernPolynomial scaled(const YPolynomial &c) const;
    ChernPolynomial operator-() const { return scaled(YPolynomial(-1)); }

    /// Product in the graded ring; grade is additive.
    friend ChernPolynomial operator*(const ChernPolynomial &a, const ChernPolynomial &b);

    friend bool operator==(const ChernPolynomial &, const ChernPolynomial &) = default;

    /// Substitutes a value for y in every coefficient.
    [[nodiscard]] ChernPolynomial at_y(const Rational &y) const;

    /// Applies f to each coefficient, dropping terms that become zero.
    template <class F>
    [[nodiscard]] ChernPolynomial map_coeffs(F &&f) const {
        ChernPolynomial out(grade_);
        for (const auto &[lambda, c] : terms_) out.add_term(lambda, f(c));
        return out;
    }

    /// Substitutes c_j -> classes[j-1] (c_j = 0 beyond the span).
    [[nodiscard]] YPolynomial substitute(std::span<const Rational> classes) const;

    /// True if every coefficient is a constant rational.
    [[nodiscard]] bool has_constant_coeffs() const;

    [[nodiscard]] std::string str() const;

private:
    int grade_;
    Terms terms_;
};

/// p_k = sum_i x_i^k written in the elementary symmetric c_1..c_n of the
/// roots (Newton's identities). Classes c_j with j > n are taken to be zero.
ChernPolynomial power_sum_in_chern(int k, int n);

}  // namespace genus
