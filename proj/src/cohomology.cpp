#include "genus/cohomology.hpp"

#include <numeric>

#include "genus/errors.hpp"

namespace genus {

namespace {

int degree_of(const std::vector<int> &exps) { return std::accumulate(exps.begin(), exps.end(), 0); }

}  // namespace

CohomologyModel::CohomologyModel(std::vector<Generator> generators, Rational top_integral, Element total_chern)
    : generators_(std::move(generators)), top_integral_(std::move(top_integral)) {
    if (top_integral_.is_zero()) throw InputError("cohomology model: fundamental integral must be nonzero");
    for (const auto &g : generators_) {
        if (g.top_exponent < 0) throw InputError("cohomology model: negative nilpotency bound");
        dimension_ += g.top_exponent;
    }
    for (auto &[exps, c] : total_chern) {
        if (exps.size() != generators_.size()) throw InputError("cohomology model: exponent arity mismatch");
        bool alive = !c.is_zero();
        for (std::size_t i = 0; i < exps.size(); ++i) alive = alive && exps[i] <= generators_[i].top_exponent;
        if (alive) total_chern_.emplace(exps, c);
    }
}

CohomologyModel CohomologyModel::single(std::string name, int n, Rational top_integral,
                                        const std::vector<Rational> &coeffs) {
    Element total;
    for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= n; ++k)
        if (!coeffs[k].is_zero()) total.emplace(std::vector<int>{static_cast<int>(k)}, coeffs[k]);
    return CohomologyModel({{std::move(name), n}}, std::move(top_integral), std::move(total));
}

CohomologyModel CohomologyModel::product(const CohomologyModel &a, const CohomologyModel &b) {
    std::vector<Generator> gens = a.generators_;
    gens.insert(gens.end(), b.generators_.begin(), b.generators_.end());
    Element total;
    for (const auto &[ea, ca] : a.total_chern_)
        for (const auto &[eb, cb] : b.total_chern_) {
            std::vector<int> e = ea;
            e.insert(e.end(), eb.begin(), eb.end());
            total[e] += ca * cb;
        }
    return CohomologyModel(std::move(gens), a.top_integral_ * b.top_integral_, std::move(total));
}

CohomologyModel::Element CohomologyModel::multiply(const Element &a, const Element &b) const {
    Element out;
    for (const auto &[ea, ca] : a)
        for (const auto &[eb, cb] : b) {
            std::vector<int> e(ea.size());
            bool alive = true;
            for (std::size_t i = 0; i < ea.size() && alive; ++i) {
                e[i] = ea[i] + eb[i];
                alive = e[i] <= generators_[i].top_exponent;
            }
            if (!alive) continue;
            Rational &slot = out[e];
            slot += ca * cb;
            if (slot.is_zero()) out.erase(e);
        }
    return out;
}

CohomologyModel::Element CohomologyModel::chern_class(int j) const {
    Element out;
    for (const auto &[e, c] : total_chern_)
        if (degree_of(e) == j) out.emplace(e, c);
    return out;
}

Rational CohomologyModel::integrate(const Element &e) const {
    std::vector<int> top;
    top.reserve(generators_.size());
    for (const auto &g : generators_) top.push_back(g.top_exponent);
    auto it = e.find(top);
    return it == e.end() ? Rational(0) : it->second * top_integral_;
}

Rational CohomologyModel::chern_number(const Partition &lambda) const {
    if (lambda.weight() != dimension_)
        throw InputError("chern_number: partition " + lambda.label() + " does not have weight " +
                         std::to_string(dimension_));
    Element acc{{std::vector<int>(generators_.size(), 0), Rational(1)}};
    for (int part : lambda.parts()) acc = multiply(acc, chern_class(part));
    return integrate(acc);
}

}  // namespace genus
