#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genus/linear_algebra.hpp"

namespace genus {

/// (b+, b-, b0) of a symmetric bilinear form.
struct InertiaTriple {
    long plus = 0;
    long minus = 0;
    long zero = 0;
    friend bool operator==(const InertiaTriple &, const InertiaTriple &) = default;
};

/// Betti numbers b_0..b_dim of a closed oriented manifold of even real
/// dimension, with an optional signature.
class BettiProfile {
public:
    /// Validates Poincare duality (palindromic list), non-negativity, and
    /// sigma = 0 when dim is not divisible by 4. Throws InputError.
    BettiProfile(int dim, std::vector<long> betti, std::optional<long> sigma = std::nullopt);

    /// Profile with zero odd Betti numbers from b_0, b_2, ..., b_dim.
    static BettiProfile from_even(std::vector<long> even_betti, std::optional<long> sigma = std::nullopt);

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] const std::vector<long> &betti() const { return betti_; }
    [[nodiscard]] long b(int degree) const;
    [[nodiscard]] const std::optional<long> &sigma() const { return sigma_; }
    /// sum_i (-1)^i b_{2i}
    [[nodiscard]] long alternating_even_sum() const;

    friend bool operator==(const BettiProfile &, const BettiProfile &) = default;

private:
    int dim_;
    std::vector<long> betti_;
    std::optional<long> sigma_;
};

/// Congruence diagonalization of a symmetric rational matrix.
InertiaTriple inertia(const RationalMatrix &form);

/// sigma equals the alternating sum of even Betti numbers. Throws if the
/// profile carries no signature.
bool signature_alternating(const BettiProfile &profile);

struct CsClassification {
    bool reverse_cs = false;  // b+ == 1
    bool cs = false;          // b- == 0
};

/// Reverse/plain Cauchy-Schwarz on middle cohomology from the inertia of
/// the intersection form. b+ == 0 is not valid symplectic data and throws.
CsClassification cs_classification(const InertiaTriple &inertia);

/// The two Betti inequalities for a 4m-dimensional profile, with the
/// equality characterizations in terms of b+ and b-.
struct BettiInequalityReport {
    int dim = 0;
    int m = 0;
    long b_plus = 0;
    long b_minus = 0;
    bool signature_alternating = false;  // hypothesis of the inequalities

    // sum_{i<k1} b_{2+4i} <= sum_{i<k1} b_{4+4i}, k1 = floor(m/2)
    int k_upper = 0;
    long upper_lhs = 0;
    long upper_rhs = 0;
    bool upper_holds = false;
    bool upper_equality = false;

    // sum_{i<k2} b_{2+4i} >= sum_{i<k2} b_{4i}, k2 = ceil(m/2)
    int k_lower = 0;
    long lower_lhs = 0;
    long lower_rhs = 0;
    bool lower_holds = false;
    bool lower_equality = false;

    CsClassification cs;
    /// Under the hypothesis both inequalities hold and each equality flag
    /// agrees with the matching Cauchy-Schwarz criterion. Vacuously true
    /// when the hypothesis fails.
    bool consistent = false;
};

/// Throws InputError when dim is not a positive multiple of 4, sigma is
/// missing, or b_{2m} +- sigma is odd.
BettiInequalityReport mainapp5_check(const BettiProfile &profile);

/// Diagnostic for the conjectured chain b_2 <= b_4 <= ... up to the middle
/// degree. Never treated as a theorem.
struct UnimodalityReport {
    std::vector<int> chain_degrees;
    bool holds = true;
    std::optional<int> first_failure_degree;  // degree d with b_d < b_{d-2}
    std::string label = "conjecture diagnostic";
};

UnimodalityReport tolman_unimodality_report(const BettiProfile &profile);

}  // namespace genus
