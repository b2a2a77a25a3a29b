#include "genus/inequality.hpp"

#include <map>
#include <mutex>

#include "genus/errors.hpp"
#include "genus/kexpansion.hpp"

namespace genus {

namespace {

const KTable &cached_k_table(int n) {
    static std::mutex mutex;
    static std::map<int, KTable> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, k_coefficients(n)).first;
    return it->second;
}

Rational pn_value(const ChernPolynomial &p, int n) {
    std::vector<Rational> classes;
    for (int j = 1; j <= n; ++j) classes.push_back(Rational::binomial(n + 1, j));
    return p.substitute(classes).coeff(0);
}

Rational evaluate_constant(const ChernPolynomial &p, const ManifoldData &m) {
    Rational v;
    for (const auto &[lambda, c] : p.terms()) v += c.coeff(0) * m.chern_number(lambda);
    return v;
}

}  // namespace

PositivityKind::PositivityKind(int epsilon) : epsilon_(epsilon) {
    if (epsilon != 1 && epsilon != -1) throw InputError("epsilon must be 1 or -1");
}

ChernPolynomial a_polynomial(int i, int n, PositivityKind kind) {
    if (n < 0 || i < 0 || 2 * i > n)
        throw InputError("a_polynomial: need 0 <= i <= floor(n/2), got i = " + std::to_string(i) +
                         ", n = " + std::to_string(n));
    return cached_k_table(n).k[static_cast<std::size_t>(2 * i)].scaled(YPolynomial(kind.power(n)));
}

Rational clearing_factor(int i, int n) {
    switch (i) {
    case 0:
        return 1;
    case 1:
        return 12;
    case 2:
        return 5760;
    default: {
        Rational l(1);
        const ChernPolynomial a = a_polynomial(i, n, PositivityKind(1));
        for (const auto &[lambda, c] : a.terms()) l = Rational::lcm_den(Rational(1) / l, c.coeff(0));
        return l;
    }
    }
}

Positivity positivity_predicate(const ChiVector &chi) {
    const int n = chi.n();
    if (n < 0) throw InputError("positivity_predicate: empty chi vector");
    Positivity out{true, true};
    for (int p = 0; p <= n; ++p) {
        const int s = chi[p].sign();
        const int alt = p % 2 == 0 ? s : -s;
        out.chi_positive &= alt > 0;
        out.signed_chi_positive &= (n % 2 == 0 ? alt : -alt) > 0;
    }
    return out;
}

std::vector<InequalityReport> check_inequalities(const ManifoldData &m, PositivityKind kind) {
    const int n = m.dimension;
    const ChiVector chi = chi_vector(m);
    const Positivity pos = positivity_predicate(chi);
    const bool hypothesis = kind.epsilon() == 1 ? pos.chi_positive : pos.signed_chi_positive;
    const Rational eps_n(kind.power(n));

    std::vector<InequalityReport> out;
    for (int i = 0; 2 * i <= n; ++i) {
        const ChernPolynomial a = a_polynomial(i, n, kind);
        InequalityReport r;
        r.index = i;
        r.lhs = evaluate_constant(a, m);
        r.rhs = eps_n * pn_value(a, n);
        r.clearing = clearing_factor(i, n);
        r.lhs_cleared = r.lhs * r.clearing;
        r.rhs_cleared = r.rhs * r.clearing;
        r.holds = r.lhs >= r.rhs;
        r.equality = r.lhs == r.rhs;
        r.witness = true;
        for (int p = 2 * i; p <= n; ++p) {
            r.equality_witness.push_back(p);
            const Rational target = eps_n * (p % 2 == 0 ? Rational(1) : Rational(-1));
            r.witness &= chi[p] == target;
        }
        r.hypothesis_met = hypothesis;

        // Known closed values of the right-hand side for i = 0, 1.
        if (i == 0 && r.rhs_cleared != Rational(n + 1))
            throw ConsistencyError("A_0 on P^n differs from n + 1");
        if (i == 1 && r.rhs_cleared != Rational(2L * (n - 1) * n * (n + 1)))
            throw ConsistencyError("cleared A_1 on P^n differs from 2(n-1)n(n+1)");
        out.push_back(std::move(r));
    }
    return out;
}

MiyaokaYauReport miyaoka_yau_check(const ManifoldData &m) {
    const int n = m.dimension;
    if (n < 2) throw InputError("miyaoka_yau_check: needs n >= 2");
    std::vector<int> mixed(static_cast<std::size_t>(n - 2), 1);
    mixed.push_back(2);
    const Rational c2c1 = m.chern_number(Partition(mixed));
    const Rational c1n = m.chern_number(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    const Rational sign_n2 = (n - 2) % 2 == 0 ? Rational(1) : Rational(-1);
    const Rational sign_n = n % 2 == 0 ? Rational(1) : Rational(-1);

    MiyaokaYauReport r;
    r.n = n;
    r.lhs = sign_n2 * c2c1;
    r.rhs = Rational(n, 2L * (n + 1)) * sign_n * c1n;
    r.holds = r.lhs >= r.rhs;
    r.equality = r.lhs == r.rhs;
    if (n == 2) {
        MiyaokaYauReport::Surface s;
        s.c1_squared = c1n;
        s.c2 = c2c1;
        s.euler_bound = s.c2 >= Rational(3);
        s.bmy_holds = 3 * s.c2 >= s.c1_squared;
        s.bmy_equality = 3 * s.c2 == s.c1_squared;
        s.todd_bound_holds = s.c2 + s.c1_squared >= Rational(12);
        s.todd_bound_equality = s.c2 + s.c1_squared == Rational(12);
        r.surface = s;
    }
    return r;
}

}  // namespace genus
