#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genus/chern_polynomial.hpp"
#include "genus/genus.hpp"

namespace genus {

/// +1 for chi-positive, -1 for signed chi-positive.
class PositivityKind {
public:
    explicit PositivityKind(int epsilon);
    [[nodiscard]] int epsilon() const { return epsilon_; }
    /// epsilon^n
    [[nodiscard]] int power(int n) const { return (epsilon_ == -1 && n % 2 == 1) ? -1 : 1; }

private:
    int epsilon_;
};

/// A_i = eps^n K_{2i}, 0 <= i <= floor(n/2).
ChernPolynomial a_polynomial(int i, int n, PositivityKind kind);

/// Scale that clears A_i to integer form:
/// 1, 12, 5760 for i = 0, 1, 2; lcm of denominators beyond.
Rational clearing_factor(int i, int n);

struct InequalityReport {
    int index = 0;
    Rational lhs;  // A_i[M]
    Rational rhs;  // eps^n A_i at c_j = binom(n+1, j)
    Rational clearing;
    Rational lhs_cleared;
    Rational rhs_cleared;
    bool holds = false;
    bool equality = false;                // lhs == rhs
    bool witness = false;                 // chi^p == eps^n (-1)^p for 2i <= p <= n
    std::vector<int> equality_witness;    // the p that were checked
    bool hypothesis_met = false;          // (signed) chi-positivity
    /// Under the hypothesis: holds, and equality iff witness.
    [[nodiscard]] bool consistent() const { return !hypothesis_met || (holds && equality == witness); }
};

/// One report per 0 <= i <= floor(n/2). Manifolds failing the positivity
/// hypothesis still get reports, flagged with hypothesis_met = false.
std::vector<InequalityReport> check_inequalities(const ManifoldData &m, PositivityKind kind);

struct Positivity {
    bool chi_positive = false;         // (-1)^p chi^p > 0
    bool signed_chi_positive = false;  // (-1)^{n+p} chi^p > 0
};

Positivity positivity_predicate(const ChiVector &chi);

struct MiyaokaYauReport {
    int n = 0;
    Rational lhs;  // c_2 (-c_1)^{n-2} [M]
    Rational rhs;  // n / (2(n+1)) (-c_1)^n [M]
    bool holds = false;
    bool equality = false;
    struct Surface {
        Rational c1_squared;
        Rational c2;
        bool euler_bound = false;          // c_2 >= 3
        bool bmy_holds = false;            // 3 c_2 >= c_1^2
        bool bmy_equality = false;
        bool todd_bound_holds = false;     // c_2 + c_1^2 >= 12
        bool todd_bound_equality = false;
    };
    std::optional<Surface> surface;  // n == 2 only
};

/// Needs c_2 c_1^{n-2}[M] and c_1^n[M]; throws InputError when missing.
MiyaokaYauReport miyaoka_yau_check(const ManifoldData &m);

}  // namespace genus
