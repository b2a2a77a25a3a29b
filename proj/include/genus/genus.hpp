#pragma once

#include <vector>

#include "genus/chern_polynomial.hpp"
#include "genus/manifold.hpp"
#include "genus/series.hpp"

namespace genus {

/// chi_y as a grade-n Chern polynomial with coefficients in Q[y].
struct GenusTable {
    int n = 0;
    ChernPolynomial chi_poly;
};

/// chi^0, ..., chi^n
struct ChiVector {
    std::vector<Rational> entries;
    [[nodiscard]] int n() const { return static_cast<int>(entries.size()) - 1; }
    [[nodiscard]] const Rational &operator[](int p) const { return entries.at(static_cast<std::size_t>(p)); }
    friend bool operator==(const ChiVector &, const ChiVector &) = default;
};

enum class Specialization { Euler, Todd, Signature };

/// x (1 + y e^{-x(1+y)}) / (1 - e^{-x(1+y)}), truncated at the given order.
/// The constant term is 1, so the series has a logarithm over Q[y].
TruncatedSeries normalized_series(int order);

/// Degree-n part of prod_i Q(y; x_i) in c_1..c_n, via
/// exp(sum_k [x^k] log Q * p_k). Memoized per n behind a mutex.
const GenusTable &chi_y_chern_polynomial(int n);

/// Uncached computation; chi_y_chern_polynomial forwards here.
GenusTable compute_chi_y_chern_polynomial(int n);

/// sum_lambda coeff_lambda(y) c_lambda[M]
YPolynomial evaluate_genus(const GenusTable &table, const ManifoldData &m);
YPolynomial evaluate_genus(const ManifoldData &m);

ChiVector chi_vector(const ManifoldData &m);
ChiVector chi_vector_from(const YPolynomial &chi_y, int n);

/// chi_y at y = -1 / 0 / 1. The Euler value is checked against c_n[M].
Rational specialize(const ManifoldData &m, Specialization at);

/// chi^p == (-1)^n chi^{n-p} for every p.
bool check_duality(const ChiVector &chi);
bool check_duality(const ManifoldData &m);

}  // namespace genus
