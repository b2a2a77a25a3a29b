#include "genus/betti.hpp"

#include <algorithm>

#include "genus/errors.hpp"

namespace genus {

BettiProfile::BettiProfile(int dim, std::vector<long> betti, std::optional<long> sigma)
    : dim_(dim), betti_(std::move(betti)), sigma_(sigma) {
    if (dim_ < 0 || dim_ % 2 != 0) throw InputError("betti profile: dim must be a non-negative even integer");
    if (betti_.size() != static_cast<std::size_t>(dim_) + 1)
        throw InputError("betti profile: expected " + std::to_string(dim_ + 1) + " Betti numbers, got " +
                         std::to_string(betti_.size()));
    for (long b : betti_)
        if (b < 0) throw InputError("betti profile: Betti numbers must be non-negative");
    for (int i = 0; i <= dim_; ++i)
        if (betti_[static_cast<std::size_t>(i)] != betti_[static_cast<std::size_t>(dim_ - i)])
            throw InputError("betti profile: b_" + std::to_string(i) + " != b_" + std::to_string(dim_ - i) +
                             " violates Poincare duality");
    if (sigma_ && dim_ % 4 != 0 && *sigma_ != 0)
        throw InputError("betti profile: signature must be 0 when dim is not divisible by 4");
}

BettiProfile BettiProfile::from_even(std::vector<long> even_betti, std::optional<long> sigma) {
    if (even_betti.empty()) throw InputError("betti profile: empty Betti list");
    const int dim = 2 * (static_cast<int>(even_betti.size()) - 1);
    std::vector<long> full(static_cast<std::size_t>(dim) + 1, 0);
    for (std::size_t i = 0; i < even_betti.size(); ++i) full[2 * i] = even_betti[i];
    return BettiProfile(dim, std::move(full), sigma);
}

long BettiProfile::b(int degree) const {
    if (degree < 0 || degree > dim_) return 0;
    return betti_[static_cast<std::size_t>(degree)];
}

long BettiProfile::alternating_even_sum() const {
    long s = 0;
    for (int i = 0; 2 * i <= dim_; ++i) s += (i % 2 == 0 ? 1 : -1) * b(2 * i);
    return s;
}

InertiaTriple inertia(const RationalMatrix &form) {
    const std::size_t n = form.size();
    for (const auto &row : form)
        if (row.size() != n) throw InputError("inertia: matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (form[i][j] != form[j][i]) throw InputError("inertia: matrix is not symmetric");

    RationalMatrix a = form;
    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;
    InertiaTriple out;

    auto drop = [&](std::size_t idx) { active.erase(std::find(active.begin(), active.end(), idx)); };

    while (!active.empty()) {
        auto diag = std::find_if(active.begin(), active.end(), [&](std::size_t i) { return !a[i][i].is_zero(); });
        if (diag != active.end()) {
            const std::size_t p = *diag;
            const Rational d = a[p][p];
            (d.sign() > 0 ? out.plus : out.minus) += 1;
            drop(p);
            for (std::size_t k : active) {
                if (a[k][p].is_zero()) continue;
                const Rational f = a[k][p] / d;
                for (std::size_t l : active) a[k][l] -= f * a[p][l];
            }
            continue;
        }
        // Zero diagonal: look for a hyperbolic pair [[0,b],[b,0]].
        std::optional<std::pair<std::size_t, std::size_t>> pair;
        for (std::size_t x = 0; x < active.size() && !pair; ++x)
            for (std::size_t y = x + 1; y < active.size() && !pair; ++y)
                if (!a[active[x]][active[y]].is_zero()) pair.emplace(active[x], active[y]);
        if (!pair) {
            out.zero += static_cast<long>(active.size());
            break;
        }
        const auto [i, j] = *pair;
        const Rational inv_b = Rational(1) / a[i][j];
        out.plus += 1;
        out.minus += 1;
        drop(i);
        drop(j);
        // Schur complement against the block: A_kl -= (A_ki A_jl + A_kj A_il) / b
        RationalMatrix next = a;
        for (std::size_t k : active)
            for (std::size_t l : active) next[k][l] -= (a[k][i] * a[j][l] + a[k][j] * a[i][l]) * inv_b;
        a = std::move(next);
    }
    return out;
}

bool signature_alternating(const BettiProfile &profile) {
    if (!profile.sigma()) throw InputError("signature_alternating: profile has no signature");
    return *profile.sigma() == profile.alternating_even_sum();
}

CsClassification cs_classification(const InertiaTriple &in) {
    if (in.plus < 1) throw InputError("cs_classification: b+ = 0 is not valid symplectic data");
    return {in.plus == 1, in.minus == 0};
}

BettiInequalityReport mainapp5_check(const BettiProfile &profile) {
    if (profile.dim() == 0 || profile.dim() % 4 != 0)
        throw InputError("mainapp5_check: dimension must be a positive multiple of 4");
    if (!profile.sigma()) throw InputError("mainapp5_check: profile has no signature");
    BettiInequalityReport r;
    r.dim = profile.dim();
    r.m = profile.dim() / 4;
    const long middle = profile.b(2 * r.m);
    const long sigma = *profile.sigma();
    if ((middle + sigma) % 2 != 0)
        throw InputError("mainapp5_check: b_" + std::to_string(2 * r.m) + " and signature have different parity");
    r.b_plus = (middle + sigma) / 2;
    r.b_minus = (middle - sigma) / 2;
    if (r.b_plus < 0 || r.b_minus < 0)
        throw InputError("mainapp5_check: |signature| exceeds the middle Betti number");
    r.signature_alternating = signature_alternating(profile);

    r.k_upper = r.m / 2;
    for (int i = 0; i < r.k_upper; ++i) {
        r.upper_lhs += profile.b(2 + 4 * i);
        r.upper_rhs += profile.b(4 + 4 * i);
    }
    r.upper_holds = r.upper_lhs <= r.upper_rhs;
    r.upper_equality = r.upper_lhs == r.upper_rhs;

    r.k_lower = (r.m + 1) / 2;
    for (int i = 0; i < r.k_lower; ++i) {
        r.lower_lhs += profile.b(2 + 4 * i);
        r.lower_rhs += profile.b(4 * i);
    }
    r.lower_holds = r.lower_lhs >= r.lower_rhs;
    r.lower_equality = r.lower_lhs == r.lower_rhs;

    r.cs = {r.b_plus == 1, r.b_minus == 0};
    r.consistent = !r.signature_alternating ||
                   (r.upper_holds && r.lower_holds && r.upper_equality == r.cs.reverse_cs &&
                    r.lower_equality == r.cs.cs);
    return r;
}

UnimodalityReport tolman_unimodality_report(const BettiProfile &profile) {
    UnimodalityReport r;
    const int n = profile.dim() / 2;
    const int top = n % 2 == 0 ? n : n - 1;
    for (int d = 2; d <= top; d += 2) r.chain_degrees.push_back(d);
    for (std::size_t i = 1; i < r.chain_degrees.size(); ++i) {
        const int d = r.chain_degrees[i];
        if (profile.b(d) < profile.b(d - 2)) {
            r.holds = false;
            r.first_failure_degree = d;
            break;
        }
    }
    return r;
}

}  // namespace genus
