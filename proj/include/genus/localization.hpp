#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genus/ypolynomial.hpp"

namespace genus {

/// One connected component F of the fixed point set of a circle action.
///
/// An isolated point (complex_dim == 0) defaults to betti = {1},
/// signature = 1 and chi_minus_y = 1. Positive-dimensional components
/// carry whatever invariants the caller supplies; operations that need a
/// missing one throw InputError.
struct FixedComponent {
    int complex_dim = 0;
    /// Normal weights, length n - r, all nonzero. When absent the count of
    /// negative weights must be supplied directly in explicit_df.
    std::optional<std::vector<long>> weights;
    std::optional<int> explicit_df;
    std::optional<std::vector<long>> betti;  // b_0..b_{2r}
    std::optional<long> signature;
    std::optional<YPolynomial> chi_minus_y;

    static FixedComponent isolated(std::vector<long> weights);

    /// Number of negative weights (or the explicit value).
    [[nodiscard]] int df() const;
    [[nodiscard]] std::vector<long> betti_or_default() const;
    [[nodiscard]] long signature_or_default() const;
    [[nodiscard]] YPolynomial chi_minus_y_or_default() const;
};

struct FixedPointModel {
    int n = 0;  // complex dimension of M
    bool hamiltonian = false;
    std::vector<FixedComponent> components;

    /// Structural checks: nonempty, weight counts n - r, nonzero weights,
    /// 0 <= d_F <= n - r, weights/explicit d_F agree. Throws InputError.
    void validate() const;
    [[nodiscard]] bool all_isolated() const;
};

/// Count of strictly negative weights; a zero weight throws InputError.
int negative_weight_count(const std::vector<long> &weights);

/// chi_{-y}(M) = sum_F chi_{-y}(F) y^{d_F}
YPolynomial localized_chi_minus_y(const FixedPointModel &model);

/// sum_i b_i(xi) y^i = sum_F P_y(F) y^{2 d_F}
YPolynomial novikov_polynomial(const FixedPointModel &model);

/// sigma(M) = sum_F sigma(F) (-1)^{d_F}
long localized_signature(const FixedPointModel &model);

struct IsolatedConsistencyReport {
    bool applicable = false;          // every component isolated
    bool odd_novikov_vanish = false;
    bool novikov_matches_chi = false;  // chi_{-y}(y^2) == novikov
    bool chi_positive = false;         // all b_{2i}(xi) > 0
    bool extremal_ok = true;           // hamiltonian: some d_F = 0 and some d_F = n
    YPolynomial chi_minus_y;
    YPolynomial novikov;
    [[nodiscard]] bool consistent() const {
        return !applicable || (odd_novikov_vanish && novikov_matches_chi && extremal_ok);
    }
};

IsolatedConsistencyReport consistency_isolated(const FixedPointModel &model);

struct SignatureFormulaReport {
    bool applicable = false;  // every component signature-alternating
    std::vector<std::string> unmet;  // why not applicable, per component
    long localized_signature = 0;
    long alternating_novikov_sum = 0;  // sum_i (-1)^i b_{2i}(xi)
    [[nodiscard]] bool holds() const { return localized_signature == alternating_novikov_sum; }
};

/// Compares the localized signature with the alternating sum of even
/// Novikov numbers when all components are signature-alternating.
SignatureFormulaReport theorem_mainapp4_check(const FixedPointModel &model);

}  // namespace genus
