#include "genus/genus.hpp"

#include <map>
#include <mutex>

#include "genus/errors.hpp"

namespace genus {

TruncatedSeries normalized_series(int order) {
    if (order < 1) throw InputError("normalized_series: order must be >= 1");
    // With u = 1 + y both numerator and denominator carry a factor u x:
    //   Q = [1 + y sum_{k>=1} (-1)^k u^{k-1} x^k / k!] / [sum_{k>=0} (-u)^k x^k / (k+1)!]
    // and the denominator has constant term 1.
    const YPolynomial u{Rational(1), Rational(1)};
    const YPolynomial y = YPolynomial::monomial(1);
    TruncatedSeries num(order), den(order);
    num[0] = YPolynomial(1);
    YPolynomial u_pow(1);
    for (int k = 0; k < order; ++k) {
        const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
        den[k] = u_pow * (sign / Rational::factorial(k + 1));
        if (k + 1 < order) num[k + 1] = y * u_pow * (-sign / Rational::factorial(k + 1));
        u_pow *= u;
    }
    return series_mul(num, series_inverse(den));
}

GenusTable compute_chi_y_chern_polynomial(int n) {
    if (n < 0) throw InputError("chi_y_chern_polynomial: n must be >= 0");
    const TruncatedSeries log_q = series_log(normalized_series(n + 1));
    // sum_i log Q(x_i) = sum_k a_k p_k; exponentiate grade by grade:
    //   k E_k = sum_{j=1}^k j S_j E_{k-j},  S_j = a_j p_j
    std::vector<ChernPolynomial> s(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) s[static_cast<std::size_t>(j)] = power_sum_in_chern(j, n).scaled(log_q[j]);
    std::vector<ChernPolynomial> e;
    e.reserve(static_cast<std::size_t>(n) + 1);
    e.push_back(ChernPolynomial::monomial(Partition{}));
    for (int k = 1; k <= n; ++k) {
        ChernPolynomial acc(k);
        for (int j = 1; j <= k; ++j)
            acc += (s[static_cast<std::size_t>(j)] * e[static_cast<std::size_t>(k - j)]).scaled(YPolynomial(Rational(j)));
        e.push_back(acc.scaled(YPolynomial(Rational(1, k))));
    }
    return {n, e.back()};
}

const GenusTable &chi_y_chern_polynomial(int n) {
    static std::mutex mutex;
    static std::map<int, GenusTable> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_chi_y_chern_polynomial(n)).first;
    return it->second;
}

YPolynomial evaluate_genus(const GenusTable &table, const ManifoldData &m) {
    if (m.dimension != table.n)
        throw InputError("evaluate_genus: manifold '" + m.name + "' has dimension " + std::to_string(m.dimension) +
                         ", table has n = " + std::to_string(table.n));
    m.require_complete();
    YPolynomial out;
    for (const auto &[lambda, coeff] : table.chi_poly.terms()) out += coeff * m.chern_number(lambda);
    return out;
}

YPolynomial evaluate_genus(const ManifoldData &m) { return evaluate_genus(chi_y_chern_polynomial(m.dimension), m); }

ChiVector chi_vector_from(const YPolynomial &chi_y, int n) {
    if (chi_y.degree() > n) throw ConsistencyError("chi_y has degree above n");
    ChiVector v;
    for (int p = 0; p <= n; ++p) v.entries.push_back(chi_y.coeff(p));
    return v;
}

ChiVector chi_vector(const ManifoldData &m) { return chi_vector_from(evaluate_genus(m), m.dimension); }

Rational specialize(const ManifoldData &m, Specialization at) {
    const YPolynomial chi = evaluate_genus(m);
    switch (at) {
    case Specialization::Euler: {
        Rational euler = chi.evaluate(Rational(-1));
        Partition top = m.dimension == 0 ? Partition{} : Partition{m.dimension};
        if (m.dimension > 0 && euler != m.chern_number(top))
            throw ConsistencyError("chi_y(-1) differs from c_n[M] for '" + m.name + "'");
        return euler;
    }
    case Specialization::Todd:
        return chi.evaluate(Rational(0));
    case Specialization::Signature:
        return chi.evaluate(Rational(1));
    }
    throw InputError("unknown specialization");
}

bool check_duality(const ChiVector &chi) {
    const int n = chi.n();
    for (int p = 0; p <= n; ++p) {
        const Rational mirrored = n % 2 == 0 ? chi[n - p] : -chi[n - p];
        if (chi[p] != mirrored) return false;
    }
    return true;
}

bool check_duality(const ManifoldData &m) { return check_duality(chi_vector(m)); }

}  // namespace genus
