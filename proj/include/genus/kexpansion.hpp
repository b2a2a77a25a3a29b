#pragma once

#include <string>
#include <vector>

#include "genus/chern_polynomial.hpp"
#include "genus/genus.hpp"

namespace genus {

/// Coefficients of chi_y in powers of (y + 1): chi_y = sum_j K_j (y+1)^j.
struct KTable {
    int n = 0;
    std::vector<ChernPolynomial> k;  // K_0 .. K_n, constant rational coefficients
};

KTable k_coefficients(int n);

/// K_j[M] for every j.
std::vector<Rational> evaluate_k(const KTable &table, const ManifoldData &m);

/// Closed forms for K_0..K_4 at dimension n, with c_0 = 1
/// and c_j = 0 for j < 0. Only j <= min(4, n) are defined.
ChernPolynomial closed_form_k(int j, int n);

struct ClosedFormMismatch {
    int j = 0;
    Partition lambda;
    Rational computed;
    Rational expected;
};

struct ClosedFormReport {
    int n = 0;
    std::vector<int> checked;  // which K_j were compared
    std::vector<ClosedFormMismatch> mismatches;
    [[nodiscard]] bool ok() const { return mismatches.empty(); }
};

ClosedFormReport verify_closed_forms(int n);

/// K_j from the chi vector:
///   eps^n (-1)^j K_j = sum_{p>=j} eps^n (-1)^p chi^p binom(p, j).
/// The sign eps cancels; it is accepted to mirror the inequality setting.
std::vector<Rational> binomial_transform(const ChiVector &chi, int epsilon);

struct OddSpanEntry {
    int odd_index = 0;                 // 2i+1
    bool in_span = false;
    std::vector<Rational> coefficients;  // on K_0, K_2, ..., K_{2i}
};

struct OddSpanReport {
    int n = 0;
    std::vector<OddSpanEntry> entries;
    [[nodiscard]] bool ok() const;
};

/// Exact linear solve over the partition basis for each odd K.
OddSpanReport odd_k_span_check(int n);

/// Eulerian polynomials P_1..P_upTo from the descent recurrence
/// A(i, k) = (k+1) A(i-1, k) + (i-k) A(i-1, k-1).
std::vector<YPolynomial> eulerian_polynomials(int up_to);

/// Expands (e^{x(1-y)} - 1)/(1 - y e^{x(1-y)}) and x / Q(-y; -x) to the
/// given order and checks both against sum_i P_i(y) x^i / i!.
bool eulerian_identity_check(int order);

}  // namespace genus
