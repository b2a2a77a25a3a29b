#include "genus/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "genus/errors.hpp"
#include "genus/genus.hpp"

namespace genus {

namespace {

ManifoldData from_model(std::string name, CohomologyModel model) {
    ManifoldData m;
    m.name = std::move(name);
    m.dimension = model.dimension();
    for (const auto &lambda : partitions_of(m.dimension)) m.chern_numbers.emplace(lambda, model.chern_number(lambda));
    m.model = std::make_shared<const CohomologyModel>(std::move(model));
    return m;
}

std::vector<long> pn_betti(int n) {
    std::vector<long> b(static_cast<std::size_t>(2 * n) + 1, 0);
    for (int i = 0; i <= n; ++i) b[static_cast<std::size_t>(2 * i)] = 1;
    return b;
}

long pn_signature(int n) { return n % 2 == 0 ? 1 : 0; }

YPolynomial pn_chi_minus_y(int n) {
    return YPolynomial(std::vector<Rational>(static_cast<std::size_t>(n) + 1, Rational(1)));
}

std::vector<long> convolve(const std::vector<long> &a, const std::vector<long> &b) {
    std::vector<long> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

long parse_long(const std::string &s, const std::string &spec) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception &) {
        throw InputError("catalog spec '" + spec + "': '" + s + "' is not an integer");
    }
}

std::vector<long> parse_list(const std::string &s, const std::string &spec) {
    std::vector<long> out;
    for (const auto &item : split(s, ',')) out.push_back(parse_long(item, spec));
    return out;
}

}  // namespace

ManifoldData projective_space(int n) {
    if (n < 0) throw InputError("projective_space: n must be >= 0");
    std::vector<Rational> total;
    for (int k = 0; k <= n; ++k) total.push_back(Rational::binomial(n + 1, k));
    ManifoldData m = from_model("P^" + std::to_string(n), CohomologyModel::single("h", n, Rational(1), total));
    m.flags.pure_type = true;
    m.flags.hamiltonian_s1 = true;
    m.betti = BettiProfile(2 * n, pn_betti(n), pn_signature(n));
    std::vector<long> exps;
    for (int i = 0; i <= n; ++i) exps.push_back(i);
    m.action = standard_pn_action(n, exps);
    return m;
}

ManifoldData product(const ManifoldData &a, const ManifoldData &b) {
    if (!a.model || !b.model)
        throw InputError("product: '" + (a.model ? b.name : a.name) + "' has no cohomology model");
    ManifoldData m = from_model(a.name + " x " + b.name, CohomologyModel::product(*a.model, *b.model));
    m.flags.pure_type = a.flags.pure_type && b.flags.pure_type;
    m.flags.kahler_hyperbolic = a.flags.kahler_hyperbolic && b.flags.kahler_hyperbolic;
    m.flags.hamiltonian_s1 = a.flags.hamiltonian_s1 && b.flags.hamiltonian_s1;
    if (a.betti && b.betti) {
        std::optional<long> sigma;
        if (a.betti->sigma() && b.betti->sigma()) sigma = *a.betti->sigma() * *b.betti->sigma();
        m.betti = BettiProfile(a.betti->dim() + b.betti->dim(), convolve(a.betti->betti(), b.betti->betti()), sigma);
    }
    if (a.action && b.action) m.action = product_action(*a.action, *b.action);
    return m;
}

ManifoldData hypersurface(int n, int d) {
    if (n < 1 || d < 1) throw InputError("hypersurface: need n >= 1 and d >= 1");
    // (1+h)^{n+2} * sum_k (-d h)^k, truncated at h^n
    std::vector<Rational> total(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        for (int k = 0; i + k <= n; ++k)
            total[static_cast<std::size_t>(i + k)] += Rational::binomial(n + 2, i) * Rational::pow(Rational(-d), k);
    ManifoldData m = from_model("X_" + std::to_string(d) + " in P^" + std::to_string(n + 1),
                                CohomologyModel::single("h", n, Rational(d), total));
    m.flags.pure_type = d <= 2 || (n == 2 && d == 3);

    // Lefschetz: b_i(X) = b_i(P^{n+1}) away from the middle degree n.
    std::vector<long> betti(static_cast<std::size_t>(2 * n) + 1, 0);
    long others = 0;
    for (int i = 0; i <= 2 * n; i += 2)
        if (i != n) {
            betti[static_cast<std::size_t>(i)] = 1;
            ++others;
        }
    const long euler = m.chern_numbers.at(Partition{n}).to_int64();
    const long middle = (n % 2 == 0 ? 1 : -1) * (euler - others);
    betti[static_cast<std::size_t>(n)] = middle;
    const long sigma = specialize(m, Specialization::Signature).to_int64();
    m.betti = BettiProfile(2 * n, std::move(betti), sigma);
    return m;
}

ManifoldData fake_projective_plane() {
    ManifoldData m;
    m.name = "fake projective plane";
    m.dimension = 2;
    m.chern_numbers.emplace(Partition{2}, Rational(3));
    m.chern_numbers.emplace(Partition{1, 1}, Rational(9));
    m.flags.kahler_hyperbolic = true;
    m.betti = BettiProfile(4, {1, 0, 1, 0, 1}, 1);
    return m;
}

FixedPointModel standard_pn_action(int n, const std::vector<long> &exponents) {
    std::vector<long> sorted = exponents;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("standard_pn_action: exponents must be pairwise distinct");
    return linear_pn_action(n, exponents);
}

FixedPointModel linear_pn_action(int n, const std::vector<long> &exponents) {
    if (n < 0) throw InputError("linear_pn_action: n must be >= 0");
    if (exponents.size() != static_cast<std::size_t>(n) + 1)
        throw InputError("linear_pn_action: expected " + std::to_string(n + 1) + " exponents");
    std::map<long, int> multiplicity;
    for (long a : exponents) ++multiplicity[a];
    if (multiplicity.size() < 2 && n > 0) throw InputError("linear_pn_action: action is trivial");

    FixedPointModel model;
    model.n = n;
    model.hamiltonian = true;
    for (const auto &[a, mult] : multiplicity) {
        FixedComponent c;
        c.complex_dim = mult - 1;
        std::vector<long> weights;
        for (long b : exponents)
            if (b != a) weights.push_back(b - a);
        c.weights = std::move(weights);
        if (c.complex_dim > 0) {
            c.betti = pn_betti(c.complex_dim);
            c.signature = pn_signature(c.complex_dim);
            c.chi_minus_y = pn_chi_minus_y(c.complex_dim);
        }
        model.components.push_back(std::move(c));
    }
    model.validate();
    return model;
}

FixedPointModel product_action(const FixedPointModel &a, const FixedPointModel &b) {
    a.validate();
    b.validate();
    FixedPointModel model;
    model.n = a.n + b.n;
    model.hamiltonian = a.hamiltonian && b.hamiltonian;
    for (const auto &f : a.components)
        for (const auto &g : b.components) {
            FixedComponent c;
            c.complex_dim = f.complex_dim + g.complex_dim;
            if (f.weights && g.weights) {
                std::vector<long> w = *f.weights;
                w.insert(w.end(), g.weights->begin(), g.weights->end());
                c.weights = std::move(w);
            } else {
                c.explicit_df = f.df() + g.df();
            }
            if (c.complex_dim > 0) {
                c.betti = convolve(f.betti_or_default(), g.betti_or_default());
                c.signature = f.signature_or_default() * g.signature_or_default();
                c.chi_minus_y = f.chi_minus_y_or_default() * g.chi_minus_y_or_default();
            }
            model.components.push_back(std::move(c));
        }
    model.validate();
    return model;
}

const std::vector<std::string> &catalog_specs() {
    static const std::vector<std::string> specs = {
        "pn:1", "pn:2", "pn:3", "pn:4", "pn:5", "pn:6", "pn:7", "pn:8",
        "product:pn:1,pn:1", "product:pn:1,pn:2", "product:pn:1,pn:1,pn:1", "product:pn:2,pn:2", "product:pn:1,pn:3",
        "hyp:1:3", "hyp:2:2", "hyp:2:3", "hyp:2:4", "hyp:2:5", "hyp:3:2", "hyp:3:4", "hyp:3:5", "hyp:4:3", "hyp:4:6",
        "product:hyp:2:4,pn:1", "product:hyp:2:4,hyp:2:4", "fpp",
    };
    return specs;
}

std::vector<ManifoldData> catalog_manifolds() {
    std::vector<ManifoldData> out;
    for (const auto &spec : catalog_specs()) out.push_back(make_manifold(spec));
    return out;
}

std::vector<NamedAction> catalog_actions() {
    std::vector<NamedAction> out;
    for (int n = 1; n <= 6; ++n) {
        std::vector<long> exps;
        for (int i = 0; i <= n; ++i) exps.push_back(i);
        out.push_back({"standard P^" + std::to_string(n), standard_pn_action(n, exps), "pn:" + std::to_string(n)});
    }
    out.push_back({"P^3, exponents 0,2,3,7", standard_pn_action(3, {0, 2, 3, 7}), "pn:3"});
    out.push_back({"P^2 fixing a line", linear_pn_action(2, {0, 0, 1}), "pn:2"});
    out.push_back({"P^3 fixing two lines", linear_pn_action(3, {0, 0, 1, 1}), "pn:3"});
    out.push_back({"P^4 fixing a plane", linear_pn_action(4, {0, 0, 0, 1, 2}), "pn:4"});
    out.push_back({"P^4 fixing a 3-space", linear_pn_action(4, {5, 5, 5, 5, -1}), "pn:4"});
    const auto p1 = standard_pn_action(1, {0, 1});
    const auto p2 = standard_pn_action(2, {0, 1, 2});
    out.push_back({"P^1 x P^1 diagonal", product_action(p1, p1), "product:pn:1,pn:1"});
    out.push_back({"P^1 x P^2 diagonal", product_action(p1, p2), "product:pn:1,pn:2"});
    out.push_back({"P^2 x P^2 diagonal", product_action(p2, p2), "product:pn:2,pn:2"});
    out.push_back({"P^1 x P^2, P^2 factor fixes a line", product_action(p1, linear_pn_action(2, {0, 0, 1})),
                   "product:pn:1,pn:2"});

    // Synthetic data exercising the formulas beyond catalog manifolds.
    {
        FixedPointModel m;
        m.n = 2;
        m.components = {FixedComponent::isolated({1, 1}), FixedComponent::isolated({2, 3}),
                        FixedComponent::isolated({-1, -1})};
        out.push_back({"isolated points at dF = 0, 0, 2", m, ""});
    }
    {
        FixedPointModel m;
        m.n = 2;
        FixedComponent line;
        line.complex_dim = 1;
        line.weights = std::vector<long>{-1};
        line.betti = std::vector<long>{1, 0, 1};
        line.signature = 0;
        line.chi_minus_y = YPolynomial{Rational(1), Rational(1)};
        m.components = {FixedComponent::isolated({1, 2}), FixedComponent::isolated({1, 1}), line};
        out.push_back({"P^1 at dF = 1 with two points at dF = 0", m, ""});
    }
    {
        // A K3 component: 1 - 22 + 1 != -16, so the signature formula does not apply.
        FixedPointModel m;
        m.n = 3;
        FixedComponent k3;
        k3.complex_dim = 2;
        k3.weights = std::vector<long>{1};
        k3.betti = std::vector<long>{1, 0, 22, 0, 1};
        k3.signature = -16;
        k3.chi_minus_y = YPolynomial{Rational(2), Rational(20), Rational(2)};
        FixedComponent top;
        top.complex_dim = 2;
        top.weights = std::vector<long>{-1};
        top.betti = std::vector<long>{1, 0, 22, 0, 1};
        top.signature = -16;
        top.chi_minus_y = YPolynomial{Rational(2), Rational(20), Rational(2)};
        m.components = {k3, top};
        out.push_back({"two K3 components", m, "product:hyp:2:4,pn:1"});
    }
    return out;
}

std::variant<ManifoldData, FixedPointModel> make_from_spec(const std::string &spec) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto fields = split(rest, ':');

    if (kind == "fpp" && rest.empty()) return fake_projective_plane();
    if (kind == "pn" && fields.size() == 1) return projective_space(static_cast<int>(parse_long(fields[0], spec)));
    if (kind == "hyp" && fields.size() == 2)
        return hypersurface(static_cast<int>(parse_long(fields[0], spec)), static_cast<int>(parse_long(fields[1], spec)));
    if (kind == "product" && !rest.empty()) {
        std::optional<ManifoldData> acc;
        for (const auto &factor : split(rest, ',')) {
            ManifoldData f = make_manifold(factor);
            acc = acc ? product(*acc, f) : std::move(f);
        }
        return *acc;
    }
    if ((kind == "pnaction" || kind == "linaction") && fields.size() == 2) {
        const int n = static_cast<int>(parse_long(fields[0], spec));
        const auto exps = parse_list(fields[1], spec);
        return kind == "pnaction" ? standard_pn_action(n, exps) : linear_pn_action(n, exps);
    }
    throw InputError("unknown catalog spec '" + spec + "'");
}

ManifoldData make_manifold(const std::string &spec) {
    auto made = make_from_spec(spec);
    if (auto *m = std::get_if<ManifoldData>(&made)) return std::move(*m);
    throw InputError("catalog spec '" + spec + "' describes a circle action, not a manifold");
}

}  // namespace genus
