#pragma once

#include <map>
#include <string>
#include <vector>

#include "genus/partition.hpp"
#include "genus/rational.hpp"

namespace genus {

/// Truncated polynomial ring Q[h_1..h_k]/(h_i^{n_i+1}) with degree-2
/// generators, a fundamental-class integral, and a total Chern class.
/// Chern numbers are read off as the coefficient of h_1^{n_1}...h_k^{n_k}.
class CohomologyModel {
public:
    struct Generator {
        std::string name;
        int top_exponent;  // n_i: h_i^{n_i + 1} = 0
    };
    /// exponent vector -> coefficient
    using Element = std::map<std::vector<int>, Rational>;

    CohomologyModel(std::vector<Generator> generators, Rational top_integral, Element total_chern);

    /// Q[h]/(h^{n+1}) with the given integral of h^n and total Chern class
    /// sum_k coeffs[k] h^k.
    static CohomologyModel single(std::string name, int n, Rational top_integral, const std::vector<Rational> &coeffs);

    /// Tensor product; total Chern classes multiply (Whitney sum formula).
    static CohomologyModel product(const CohomologyModel &a, const CohomologyModel &b);

    [[nodiscard]] int dimension() const { return dimension_; }
    [[nodiscard]] const std::vector<Generator> &generators() const { return generators_; }
    [[nodiscard]] const Rational &top_integral() const { return top_integral_; }
    [[nodiscard]] const Element &total_chern() const { return total_chern_; }

    [[nodiscard]] Element multiply(const Element &a, const Element &b) const;
    /// Homogeneous degree-j part of the total Chern class (c_0 = 1).
    [[nodiscard]] Element chern_class(int j) const;
    /// Integral over the fundamental class: top coefficient * top_integral.
    [[nodiscard]] Rational integrate(const Element &e) const;
    /// c_lambda[M]; lambda must have weight dimension().
    [[nodiscard]] Rational chern_number(const Partition &lambda) const;

private:
    std::vector<Generator> generators_;
    Rational top_integral_;
    Element total_chern_;
    int dimension_ = 0;
};

}  // namespace genus
