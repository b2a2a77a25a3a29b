#include "genus/kexpansion.hpp"

#include <algorithm>
#include <initializer_list>

#include "genus/errors.hpp"
#include "genus/linear_algebra.hpp"

namespace genus {

KTable k_coefficients(int n) {
    if (n < 0) throw InputError("k_coefficients: n must be >= 0");
    const ChernPolynomial &chi = chi_y_chern_polynomial(n).chi_poly;
    KTable table{n, std::vector<ChernPolynomial>(static_cast<std::size_t>(n) + 1, ChernPolynomial(n))};
    // Writing y = z - 1 turns each coefficient into a polynomial in z = y + 1.
    for (const auto &[lambda, coeff] : chi.terms()) {
        const YPolynomial in_z = coeff.shifted(Rational(-1));
        for (int j = 0; j <= in_z.degree(); ++j) {
            if (j > n) throw ConsistencyError("chi_y coefficient has degree above n");
            table.k[static_cast<std::size_t>(j)].add_term(lambda, YPolynomial(in_z.coeff(j)));
        }
    }
    return table;
}

std::vector<Rational> evaluate_k(const KTable &table, const ManifoldData &m) {
    if (m.dimension != table.n) throw InputError("evaluate_k: dimension mismatch");
    m.require_complete();
    std::vector<Rational> out;
    for (const auto &kj : table.k) {
        Rational v;
        for (const auto &[lambda, c] : kj.terms()) v += c.coeff(0) * m.chern_number(lambda);
        out.push_back(v);
    }
    return out;
}

namespace {

/// c_{i1} c_{i2} ... with c_0 = 1 and c_j = 0 for j < 0 or j > n.
ChernPolynomial chern_monomial(std::initializer_list<int> indices, int n, const Rational &coeff) {
    std::vector<int> parts;
    for (int i : indices) {
        if (i < 0 || i > n) return ChernPolynomial(n);
        if (i > 0) parts.push_back(i);
    }
    Partition lambda(std::move(parts));
    if (lambda.weight() != n) throw ConsistencyError("closed form monomial has the wrong weight");
    return ChernPolynomial::monomial(lambda, YPolynomial(coeff));
}

}  // namespace

ChernPolynomial closed_form_k(int j, int n) {
    if (j < 0 || j > 4 || j > n) throw InputError("closed_form_k: need 0 <= j <= min(4, n)");
    const Rational rn(n);
    auto mono = [n](std::initializer_list<int> idx, const Rational &c) { return chern_monomial(idx, n, c); };
    switch (j) {
    case 0:
        return mono({n}, 1);
    case 1:
        return mono({n}, -rn / 2);
    case 2: {
        ChernPolynomial bracket = mono({n}, rn * (3 * rn - 5) / 2) + mono({1, n - 1}, 1);
        return bracket.scaled(YPolynomial(Rational(1, 12)));
    }
    case 3: {
        ChernPolynomial bracket = mono({n}, rn * (rn - 2) * (rn - 3) / 2) + mono({1, n - 1}, rn - 2);
        return bracket.scaled(YPolynomial(Rational(-1, 24)));
    }
    default: {
        const Rational n2 = rn * rn, n3 = n2 * rn;
        ChernPolynomial bracket = mono({n}, rn * (15 * n3 - 150 * n2 + 485 * rn - 502));
        bracket += mono({1, n - 1}, 4 * (15 * n2 - 85 * rn + 108));
        // 8 (c1^2 + 3 c2) c_{n-2}
        bracket += mono({1, 1, n - 2}, 8) + mono({2, n - 2}, 24);
        // -8 (c1^3 - 3 c1 c2 + 3 c3) c_{n-3}
        bracket += mono({1, 1, 1, n - 3}, -8) + mono({1, 2, n - 3}, 24) + mono({3, n - 3}, -24);
        return bracket.scaled(YPolynomial(Rational(1, 5760)));
    }
    }
}

ClosedFormReport verify_closed_forms(int n) {
    if (n < 1) throw InputError("verify_closed_forms: n must be >= 1");
    ClosedFormReport report{n, {}, {}};
    const KTable table = k_coefficients(n);
    for (int j = 0; j <= std::min(4, n); ++j) {
        report.checked.push_back(j);
        const ChernPolynomial &computed = table.k[static_cast<std::size_t>(j)];
        const ChernPolynomial expected = closed_form_k(j, n);
        for (const auto &lambda : partitions_of(n)) {
            const Rational c = computed.coeff(lambda).coeff(0);
            const Rational e = expected.coeff(lambda).coeff(0);
            if (c != e) report.mismatches.push_back({j, lambda, c, e});
        }
    }
    return report;
}

std::vector<Rational> binomial_transform(const ChiVector &chi, int epsilon) {
    if (epsilon != 1 && epsilon != -1) throw InputError("binomial_transform: epsilon must be +1 or -1");
    const int n = chi.n();
    if (n < 0) throw InputError("binomial_transform: empty chi vector");
    const Rational eps_n = (epsilon == -1 && n % 2 == 1) ? Rational(-1) : Rational(1);
    std::vector<Rational> k(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        Rational rhs;
        for (int p = j; p <= n; ++p) {
            const Rational sign = p % 2 == 0 ? Rational(1) : Rational(-1);
            rhs += eps_n * sign * chi[p] * Rational::binomial(p, j);
        }
        // eps^n (-1)^j K_j = rhs
        const Rational sign_j = j % 2 == 0 ? Rational(1) : Rational(-1);
        k[static_cast<std::size_t>(j)] = rhs / (eps_n * sign_j);
    }
    return k;
}

bool OddSpanReport::ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const OddSpanEntry &e) { return e.in_span; });
}

OddSpanReport odd_k_span_check(int n) {
    if (n < 1) throw InputError("odd_k_span_check: n must be >= 1");
    const KTable table = k_coefficients(n);
    const std::vector<Partition> basis = partitions_of(n);
    auto as_vector = [&](const ChernPolynomial &p) {
        std::vector<Rational> v;
        v.reserve(basis.size());
        for (const auto &lambda : basis) v.push_back(p.coeff(lambda).coeff(0));
        return v;
    };
    OddSpanReport report{n, {}};
    for (int i = 0; 2 * i + 1 <= n; ++i) {
        RationalMatrix a(basis.size(), std::vector<Rational>(static_cast<std::size_t>(i) + 1));
        for (int j = 0; j <= i; ++j) {
            const auto col = as_vector(table.k[static_cast<std::size_t>(2 * j)]);
            for (std::size_t r = 0; r < basis.size(); ++r) a[r][static_cast<std::size_t>(j)] = col[r];
        }
        auto solution = solve_exact(std::move(a), as_vector(table.k[static_cast<std::size_t>(2 * i + 1)]));
        OddSpanEntry entry;
        entry.odd_index = 2 * i + 1;
        entry.in_span = solution.has_value();
        if (solution) entry.coefficients = std::move(*solution);
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::vector<YPolynomial> eulerian_polynomials(int up_to) {
    if (up_to < 1) throw InputError("eulerian_polynomials: need upTo >= 1");
    std::vector<YPolynomial> out;
    std::vector<Rational> row{Rational(1)};  // A(1, 0) = 1
    out.emplace_back(row);
    for (int i = 2; i <= up_to; ++i) {
        std::vector<Rational> next(static_cast<std::size_t>(i));
        for (int k = 0; k < i; ++k) {
            Rational v;
            if (k < i - 1) v += Rational(k + 1) * row[static_cast<std::size_t>(k)];
            if (k >= 1) v += Rational(i - k) * row[static_cast<std::size_t>(k - 1)];
            next[static_cast<std::size_t>(k)] = v;
        }
        row = std::move(next);
        out.emplace_back(row);
    }
    return out;
}

bool eulerian_identity_check(int order) {
    if (order < 1 || order > 12) throw InputError("eulerian_identity_check: order must be in 1..12");
    // v = 1 - y; both numerator and denominator are divisible by v:
    //   (e^{vx} - 1)/(1 - y e^{vx}) = g / (1 - y g),  g = sum_{k>=1} v^{k-1} x^k / k!
    const YPolynomial v{Rational(1), Rational(-1)};
    TruncatedSeries g(order);
    YPolynomial v_pow(1);
    for (int k = 1; k < order; ++k) {
        g[k] = v_pow * (Rational(1) / Rational::factorial(k));
        v_pow *= v;
    }
    const TruncatedSeries lhs =
        series_mul(g, series_inverse(TruncatedSeries::one(order) - g.scaled(YPolynomial::monomial(1))));

    // x / Q(-y; -x)
    const TruncatedSeries q_neg = normalized_series(order).negated_y().substitute_scaled_x(YPolynomial(-1));
    const TruncatedSeries via_genus = series_inverse(q_neg).times_x();

    TruncatedSeries expected(order);
    if (order > 1) {
        const auto p = eulerian_polynomials(order - 1);
        for (int i = 1; i < order; ++i)
            expected[i] = p[static_cast<std::size_t>(i - 1)] * (Rational(1) / Rational::factorial(i));
    }
    return lhs == expected && via_genus == expected;
}

}  // namespace genus
