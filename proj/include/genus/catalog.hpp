#pragma once

#include <string>
#include <variant>
#include <vector>

#include "genus/localization.hpp"
#include "genus/manifold.hpp"

namespace genus {

/// P^n: Q[h]/(h^{n+1}), integral of h^n = 1, c(P^n) = (1+h)^{n+1}.
/// Carries Betti numbers, signature and the standard circle action.
ManifoldData projective_space(int n);

/// Cartesian product; both factors need a cohomology model.
ManifoldData product(const ManifoldData &a, const ManifoldData &b);

/// Smooth degree-d hypersurface in P^{n+1}: c = (1+h)^{n+2} (1+dh)^{-1},
/// integral of h^n = d. Betti numbers from the Lefschetz hyperplane theorem.
ManifoldData hypersurface(int n, int d);

/// Chern numbers c_1^2 = 9, c_2 = 3 of a ball quotient with chi^0 = 1;
/// no cohomology model.
ManifoldData fake_projective_plane();

/// Linear circle action t.[z_0:...:z_n] = [t^{a_0} z_0 : ... : t^{a_n} z_n]
/// with pairwise distinct exponents: n+1 isolated fixed points, point j
/// has weights a_i - a_j (i != j). Repeated exponents throw InputError.
FixedPointModel standard_pn_action(int n, const std::vector<long> &exponents);

/// Same action allowing repeated exponents: an exponent of multiplicity m
/// fixes a copy of P^{m-1}.
FixedPointModel linear_pn_action(int n, const std::vector<long> &exponents);

/// Diagonal action on a product: components F x G, weights concatenated.
FixedPointModel product_action(const FixedPointModel &a, const FixedPointModel &b);

/// Specs of the catalog manifolds, in catalog order.
const std::vector<std::string> &catalog_specs();
/// Named entries used by `catalog --list` and the verification suite.
std::vector<ManifoldData> catalog_manifolds();

struct NamedAction {
    std::string name;
    FixedPointModel model;
    /// Catalog spec of the manifold the model acts on, empty for synthetic data.
    std::string manifold_spec;
};

std::vector<NamedAction> catalog_actions();

/// Parses "pn:4", "hyp:3:5", "product:pn:1,pn:2", "fpp",
/// "pnaction:4:0,1,2,3,4", "linaction:2:0,0,1". Throws InputError.
std::variant<ManifoldData, FixedPointModel> make_from_spec(const std::string &spec);
ManifoldData make_manifold(const std::string &spec);

}  // namespace genus
