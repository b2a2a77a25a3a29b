#include "genus/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "genus/betti.hpp"
#include "genus/catalog.hpp"
#include "genus/errors.hpp"
#include "genus/genus.hpp"
#include "genus/inequality.hpp"
#include "genus/kexpansion.hpp"
#include "genus/localization.hpp"

namespace genus {

namespace {

constexpr unsigned kSeed = 20240521;

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string &what) {
    if (!ok) throw Failure{what};
}

YPolynomial alternating_ones(int n, int step) {
    std::vector<Rational> c(static_cast<std::size_t>(n * step) + 1);
    for (int p = 0; p <= n; ++p) c[static_cast<std::size_t>(p * step)] = (step == 1 && p % 2 == 1) ? -1 : 1;
    return YPolynomial(std::move(c));
}

std::string check_k_formulas() {
    for (int n = 4; n <= 8; ++n) {
        const ClosedFormReport r = verify_closed_forms(n);
        expect(r.checked == std::vector<int>{0, 1, 2, 3, 4}, "n = " + std::to_string(n) + ": not all five forms compared");
        if (!r.ok()) {
            const auto &m = r.mismatches.front();
            throw Failure{"n = " + std::to_string(n) + ", K_" + std::to_string(m.j) + " at " + m.lambda.label() +
                          ": computed " + m.computed.str() + ", expected " + m.expected.str()};
        }
    }
    return "K_0..K_4 agree on the partition basis for n = 4..8";
}

std::string check_projective_genus() {
    for (int n = 0; n <= 10; ++n) {
        const YPolynomial chi = evaluate_genus(projective_space(n));
        expect(chi == alternating_ones(n, 1), "P^" + std::to_string(n) + ": got " + chi.str());
    }
    return "chi_y(P^n) = sum (-y)^p for n = 0..10";
}

std::string check_duality_catalog() {
    int count = 0;
    for (const auto &m : catalog_manifolds()) {
        if (m.dimension > 8) continue;
        expect(check_duality(m), m.name + " violates chi^p = (-1)^n chi^{n-p}");
        ++count;
    }
    return std::to_string(count) + " catalog manifolds";
}

std::string check_projective_optimality() {
    for (int n = 1; n <= 8; ++n) {
        const auto reports = check_inequalities(projective_space(n), PositivityKind(1));
        const std::string at = "P^" + std::to_string(n);
        expect(reports.size() == static_cast<std::size_t>(n / 2 + 1), at + ": wrong number of inequalities");
        for (const auto &r : reports) {
            expect(r.equality, at + ", i = " + std::to_string(r.index) + ": " + r.lhs.str() + " != " + r.rhs.str());
            expect(r.witness, at + ", i = " + std::to_string(r.index) + ": equality witness fails");
            expect(r.hypothesis_met, at + ": not chi-positive");
        }
        if (n == 2) {
            const auto &r = reports[1];
            expect(r.lhs_cleared == Rational(12) && r.rhs_cleared == Rational(12) &&
                       r.rhs_cleared == Rational(2 * (n - 1) * n * (n + 1)),
                   "P^2 cleared i = 1: " + r.lhs_cleared.str() + " >= " + r.rhs_cleared.str());
        }
    }
    return "equality in all floor(n/2)+1 inequalities for n = 1..8; P^2: 12 >= 12";
}

std::string check_binomial_transform() {
    int count = 0;
    for (const auto &m : catalog_manifolds()) {
        const std::vector<Rational> k = evaluate_k(k_coefficients(m.dimension), m);
        const ChiVector chi = chi_vector(m);
        for (int eps : {1, -1}) expect(binomial_transform(chi, eps) == k, m.name + ": transform differs from K_j[M]");
        ++count;
    }
    return std::to_string(count) + " catalog manifolds, all j";
}

std::string check_localization_pn() {
    for (int n = 1; n <= 6; ++n) {
        std::vector<long> exps(static_cast<std::size_t>(n) + 1);
        std::iota(exps.begin(), exps.end(), 0L);
        const FixedPointModel model = standard_pn_action(n, exps);
        const YPolynomial expected = evaluate_genus(projective_space(n)).negated_variable();
        const std::string at = "P^" + std::to_string(n);
        expect(localized_chi_minus_y(model) == expected, at + ": localized chi_{-y} " + localized_chi_minus_y(model).str());
        expect(novikov_polynomial(model) == alternating_ones(n, 2), at + ": Novikov polynomial " + novikov_polynomial(model).str());
    }
    return "n = 1..6";
}

std::string check_signature_chain() {
    for (int k = 1; k <= 3; ++k) {
        std::vector<long> exps(static_cast<std::size_t>(2 * k) + 1);
        std::iota(exps.begin(), exps.end(), 0L);
        const long sigma = localized_signature(standard_pn_action(2 * k, exps));
        expect(sigma == 1, "P^" + std::to_string(2 * k) + ": localized signature " + std::to_string(sigma));
    }
    int applicable = 0, total = 0;
    for (const auto &a : catalog_actions()) {
        ++total;
        const SignatureFormulaReport r = theorem_mainapp4_check(a.model);
        if (r.applicable) {
            ++applicable;
            expect(r.holds(), a.name + ": localized signature " + std::to_string(r.localized_signature) +
                                  " != alternating Novikov sum " + std::to_string(r.alternating_novikov_sum));
        }
        const Rational at_minus_one = localized_chi_minus_y(a.model).evaluate(Rational(-1));
        expect(at_minus_one == Rational(localized_signature(a.model)), a.name + ": chi_{-y}(-1) != localized signature");
    }
    expect(applicable > 0, "no catalog model is signature-alternating");
    return "identity holds on " + std::to_string(applicable) + " of " + std::to_string(total) + " models";
}

std::string check_k3() {
    const ManifoldData k3 = hypersurface(2, 4);
    const ChiVector chi = chi_vector(k3);
    expect(chi.entries == std::vector<Rational>{2, -20, 2}, "chi vector of K3");
    const YPolynomial chi_minus_y = evaluate_genus(k3).negated_variable();
    expect(chi_minus_y == YPolynomial{2, 20, 2}, "chi_{-y}(K3) = " + chi_minus_y.str());
    expect(specialize(k3, Specialization::Todd) == Rational(2), "Todd genus of K3");
    expect(specialize(k3, Specialization::Signature) == Rational(-16), "signature of K3");
    expect(specialize(k3, Specialization::Euler) == Rational(24), "Euler characteristic of K3");
    expect(k3.betti && k3.betti->betti() == std::vector<long>{1, 0, 22, 0, 1} && k3.betti->sigma() == -16, "K3 Betti profile");
    expect(!signature_alternating(*k3.betti), "K3 reported signature-alternating");
    expect(!mainapp5_check(*k3.betti).signature_alternating, "Betti inequality report marks K3 signature-alternating");
    return "chi_{-y} = 2 + 20y + 2y^2, Todd 2, signature -16, Euler 24, not signature-alternating";
}

YPolynomial descent_polynomial(int i) {
    std::vector<int> perm(static_cast<std::size_t>(i));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Rational> counts(static_cast<std::size_t>(i) + 1);
    do {
        int descents = 0;
        for (std::size_t k = 0; k + 1 < perm.size(); ++k) descents += perm[k] > perm[k + 1];
        counts[static_cast<std::size_t>(descents)] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return YPolynomial(std::move(counts));
}

std::string check_eulerian() {
    expect(eulerian_identity_check(8), "series identity fails at order 8");
    const auto polys = eulerian_polynomials(6);
    for (int i = 1; i <= 6; ++i)
        expect(polys[static_cast<std::size_t>(i - 1)] == descent_polynomial(i),
               "P_" + std::to_string(i) + " differs from descent count");
    return "order 8; P_1..P_6 match descent counts over S_i";
}

RationalMatrix random_matrix(std::mt19937 &rng, int size, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    RationalMatrix a(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
    for (auto &row : a)
        for (auto &x : row) x = dist(rng);
    return a;
}

bool invertible(const RationalMatrix &a) {
    for (std::size_t col = 0; col < a.size(); ++col) {
        std::vector<Rational> e(a.size());
        e[col] = 1;
        if (!solve_exact(a, e)) return false;
    }
    return true;
}

RationalMatrix random_invertible(std::mt19937 &rng, int size) {
    for (;;) {
        RationalMatrix p = random_matrix(rng, size, -2, 2);
        if (invertible(p)) return p;
    }
}

RationalMatrix congruent(const RationalMatrix &a, const RationalMatrix &p) {
    return multiply(transpose(p), multiply(a, p));
}

std::string check_inertia_properties() {
    std::mt19937 rng(kSeed);
    std::uniform_int_distribution<int> size_dist(1, 5);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::bernoulli_distribution zero_diagonal(0.3);

    for (int trial = 0; trial < 100; ++trial) {
        const int size = size_dist(rng);
        // Known inertia: D diagonal, A = Q^T D Q.
        RationalMatrix d(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
        InertiaTriple expected;
        for (int k = 0; k < size; ++k) {
            const int v = entry(rng);
            d[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = v;
            (v > 0 ? expected.plus : v < 0 ? expected.minus : expected.zero) += 1;
        }
        const RationalMatrix a = congruent(d, random_invertible(rng, size));
        expect(inertia(a) == expected, "trial " + std::to_string(trial) + ": inertia of Q^T D Q differs from signs of D");

        // Arbitrary symmetric form, sometimes with zero diagonal.
        RationalMatrix s(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
        const bool hollow = zero_diagonal(rng);
        for (int r = 0; r < size; ++r)
            for (int c = r; c < size; ++c) {
                const Rational v = (r == c && hollow) ? Rational(0) : Rational(entry(rng));
                s[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
                s[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = v;
            }
        const InertiaTriple before = inertia(s);
        expect(before.plus + before.minus + before.zero == size, "trial " + std::to_string(trial) + ": inertia does not sum to size");
        expect(inertia(congruent(s, random_invertible(rng, size))) == before,
               "trial " + std::to_string(trial) + ": inertia changed under congruence");
    }

    for (long plus = 1; plus <= 6; ++plus)
        for (long minus = 0; minus <= 6; ++minus) {
            const CsClassification cs = cs_classification(InertiaTriple{plus, minus, 0});
            expect(cs.reverse_cs == (plus == 1) && cs.cs == (minus == 0), "cs_classification at b+ = " +
                                                                                std::to_string(plus) + ", b- = " + std::to_string(minus));
        }
    bool rejected = false;
    try {
        cs_classification(InertiaTriple{0, 2, 0});
    } catch (const InputError &) {
        rejected = true;
    }
    expect(rejected, "b+ = 0 accepted");

    // Signature-alternating profiles with b+ >= 1: the middle Betti number
    // is b+ + b- and sigma = b+ - b- is pinned by the alternating sum.
    std::uniform_int_distribution<int> m_dist(1, 4);
    std::uniform_int_distribution<long> betti_dist(0, 6);
    int made = 0;
    while (made < 50) {
        const int m = m_dist(rng);
        std::vector<long> half(static_cast<std::size_t>(m));  // b_0, b_2, ..., b_{2m-2}
        half[0] = 1;
        for (int i = 1; i < m; ++i) half[static_cast<std::size_t>(i)] = betti_dist(rng);
        long rest = 0;  // alternating sum over degrees other than the middle
        for (int i = 0; i < m; ++i) rest += 2 * ((i % 2 == 0) ? half[static_cast<std::size_t>(i)] : -half[static_cast<std::size_t>(i)]);
        long plus = 0, minus = 0;
        if (m % 2 == 1) {
            plus = rest / 2;
            minus = betti_dist(rng);
        } else {
            minus = -rest / 2;
            plus = 1 + betti_dist(rng) % 3;
        }
        if (plus < 1 || minus < 0) continue;
        std::vector<long> even = half;
        even.push_back(plus + minus);
        even.insert(even.end(), half.rbegin(), half.rend());
        const BettiProfile profile = BettiProfile::from_even(even, plus - minus);
        const BettiInequalityReport r = mainapp5_check(profile);
        const std::string at = "profile " + std::to_string(made);
        expect(r.signature_alternating, at + ": not signature-alternating");
        expect(r.b_plus == plus && r.b_minus == minus, at + ": wrong b+/b-");
        expect(r.upper_holds && r.lower_holds, at + ": inequality fails");
        expect(r.upper_equality == r.cs.reverse_cs && r.lower_equality == r.cs.cs, at + ": equality flags disagree with cs_classification");
        expect(r.consistent, at + ": report inconsistent");
        ++made;
    }
    return "100 congruence trials, 50 random profiles (seed " + std::to_string(kSeed) + ")";
}

CriterionResult run(int id, std::string title, const std::function<std::string()> &body) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    try {
        r.detail = body();
        r.passed = true;
    } catch (const Failure &f) {
        r.detail = f.what;
    } catch (const std::exception &e) {
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite() {
    return {
        run(1, "K_0..K_4 closed forms", check_k_formulas),
        run(2, "chi_y of projective space", check_projective_genus),
        run(3, "Serre-type duality of the chi vector", check_duality_catalog),
        run(4, "optimality of P^n in the Chern number inequalities", check_projective_optimality),
        run(5, "binomial transform of the chi vector", check_binomial_transform),
        run(6, "localization on projective space", check_localization_pn),
        run(7, "signature via localization and Novikov numbers", check_signature_chain),
        run(8, "K3 surface cross-check", check_k3),
        run(9, "Eulerian polynomial identity", check_eulerian),
        run(10, "inertia and Cauchy-Schwarz properties", check_inertia_properties),
    };
}

std::string format_table(const std::vector<CriterionResult> &results) {
    std::ostringstream out;
    for (const auto &r : results)
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.title << ": " << r.detail << '\n';
    return out.str();
}

}  // namespace genus
