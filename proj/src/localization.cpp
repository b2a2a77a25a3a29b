#include "genus/localization.hpp"

#include <algorithm>

#include "genus/betti.hpp"
#include "genus/errors.hpp"

namespace genus {

FixedComponent FixedComponent::isolated(std::vector<long> weights) {
    FixedComponent c;
    c.weights = std::move(weights);
    return c;
}

int negative_weight_count(const std::vector<long> &weights) {
    int count = 0;
    for (long w : weights) {
        if (w == 0) throw InputError("fixed component has a zero weight");
        if (w < 0) ++count;
    }
    return count;
}

int FixedComponent::df() const {
    if (weights) return negative_weight_count(*weights);
    if (explicit_df) return *explicit_df;
    throw InputError("fixed component has neither weights nor dF");
}

std::vector<long> FixedComponent::betti_or_default() const {
    if (betti) return *betti;
    if (complex_dim == 0) return {1};
    throw InputError("fixed component of dimension " + std::to_string(complex_dim) + " has no Betti numbers");
}

long FixedComponent::signature_or_default() const {
    if (signature) return *signature;
    if (complex_dim == 0) return 1;
    throw InputError("fixed component of dimension " + std::to_string(complex_dim) + " has no signature");
}

YPolynomial FixedComponent::chi_minus_y_or_default() const {
    if (chi_minus_y) return *chi_minus_y;
    if (complex_dim == 0) return YPolynomial(1);
    throw InputError("fixed component of dimension " + std::to_string(complex_dim) + " has no chi_{-y}");
}

void FixedPointModel::validate() const {
    if (n < 0) throw InputError("fixed point model: n must be non-negative");
    if (components.empty()) throw InputError("fixed point model: fixed point set must be nonempty");
    for (std::size_t idx = 0; idx < components.size(); ++idx) {
        const auto &c = components[idx];
        const std::string where = "components[" + std::to_string(idx) + "]";
        if (c.complex_dim < 0 || c.complex_dim > n)
            throw InputError(where + ".complexDim out of range 0.." + std::to_string(n));
        const int codim = n - c.complex_dim;
        if (c.weights) {
            if (static_cast<int>(c.weights->size()) != codim)
                throw InputError(where + ".weights: expected " + std::to_string(codim) + " weights");
            const int d = negative_weight_count(*c.weights);
            if (c.explicit_df && *c.explicit_df != d)
                throw InputError(where + ".dF disagrees with the number of negative weights");
        } else if (!c.explicit_df) {
            throw InputError(where + ": needs weights or dF");
        }
        const int d = c.df();
        if (d < 0 || d > codim) throw InputError(where + ".dF out of range 0.." + std::to_string(codim));
        if (c.betti && c.betti->size() != static_cast<std::size_t>(2 * c.complex_dim + 1))
            throw InputError(where + ".betti: expected " + std::to_string(2 * c.complex_dim + 1) + " entries");
        if (c.chi_minus_y && c.chi_minus_y->degree() > c.complex_dim)
            throw InputError(where + ".chiMinusY has degree above complexDim");
    }
}

bool FixedPointModel::all_isolated() const {
    return std::all_of(components.begin(), components.end(),
                       [](const FixedComponent &c) { return c.complex_dim == 0; });
}

YPolynomial localized_chi_minus_y(const FixedPointModel &model) {
    model.validate();
    YPolynomial sum;
    for (const auto &c : model.components) sum += c.chi_minus_y_or_default() * YPolynomial::monomial(c.df());
    return sum;
}

YPolynomial novikov_polynomial(const FixedPointModel &model) {
    model.validate();
    YPolynomial sum;
    for (const auto &c : model.components) {
        std::vector<Rational> poincare;
        for (long b : c.betti_or_default()) poincare.emplace_back(b);
        sum += YPolynomial(std::move(poincare)) * YPolynomial::monomial(2 * c.df());
    }
    return sum;
}

long localized_signature(const FixedPointModel &model) {
    model.validate();
    long sigma = 0;
    for (const auto &c : model.components) sigma += (c.df() % 2 == 0 ? 1 : -1) * c.signature_or_default();
    return sigma;
}

IsolatedConsistencyReport consistency_isolated(const FixedPointModel &model) {
    model.validate();
    IsolatedConsistencyReport r;
    r.applicable = model.all_isolated();
    if (!r.applicable) return r;
    r.chi_minus_y = localized_chi_minus_y(model);
    r.novikov = novikov_polynomial(model);

    r.odd_novikov_vanish = true;
    for (int i = 1; i <= r.novikov.degree(); i += 2) r.odd_novikov_vanish &= r.novikov.coeff(i).is_zero();

    std::vector<Rational> spread(static_cast<std::size_t>(2 * std::max(r.chi_minus_y.degree(), 0) + 1));
    for (int i = 0; i <= r.chi_minus_y.degree(); ++i) spread[static_cast<std::size_t>(2 * i)] = r.chi_minus_y.coeff(i);
    r.novikov_matches_chi = YPolynomial(std::move(spread)) == r.novikov;

    r.chi_positive = true;
    for (int i = 0; i <= model.n; ++i) r.chi_positive &= r.novikov.coeff(2 * i).sign() > 0;

    if (model.hamiltonian) {
        bool has_min = false, has_max = false;
        for (const auto &c : model.components) {
            has_min |= c.df() == 0;
            has_max |= c.df() == model.n;
        }
        r.extremal_ok = has_min && has_max;
    }
    return r;
}

SignatureFormulaReport theorem_mainapp4_check(const FixedPointModel &model) {
    model.validate();
    SignatureFormulaReport r;
    r.applicable = true;
    for (std::size_t idx = 0; idx < model.components.size(); ++idx) {
        const auto &c = model.components[idx];
        if (c.complex_dim == 0) continue;
        const std::string where = "components[" + std::to_string(idx) + "]";
        if (!c.betti || !c.signature) {
            r.applicable = false;
            r.unmet.push_back(where + ": Betti numbers or signature missing");
            continue;
        }
        const BettiProfile profile(2 * c.complex_dim, *c.betti, *c.signature);
        if (!signature_alternating(profile)) {
            r.applicable = false;
            r.unmet.push_back(where + ": not signature-alternating");
        }
    }
    if (!r.applicable) return r;
    r.localized_signature = localized_signature(model);
    const YPolynomial nov = novikov_polynomial(model);
    Rational alt;
    for (int i = 0; i <= model.n; ++i) alt += (i % 2 == 0 ? nov.coeff(2 * i) : -nov.coeff(2 * i));
    r.alternating_novikov_sum = alt.to_int64();
    return r;
}

}  // namespace genus
