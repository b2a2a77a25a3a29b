#pragma once

#include <string>

#include <json.hpp>

#include "genus/betti.hpp"
#include "genus/catalog.hpp"
#include "genus/chern_polynomial.hpp"
#include "genus/genus.hpp"
#include "genus/inequality.hpp"
#include "genus/kexpansion.hpp"
#include "genus/localization.hpp"
#include "genus/manifold.hpp"

namespace genus::io {

/// Insertion-ordered so emitted documents have a stable, readable layout.
using Json = nlohmann::ordered_json;

// Readers take the JSON path of the value for error messages and throw
// InputError naming the offending field.

Json to_json(const Rational &r);
Rational rational_from_json(const Json &j, const std::string &path);

/// {"0": "1", "2": "-1/2"}; zero coefficients omitted.
Json to_json(const YPolynomial &p);
/// [["0","1"],["1","-1"], ...] covering degrees 0..n, zeros included.
Json to_json_pairs(const YPolynomial &p, int n);
/// Accepts either of the two forms above.
YPolynomial ypolynomial_from_json(const Json &j, const std::string &path);

Json to_json(const Partition &p);
Partition partition_from_json(const Json &j, const std::string &path);

Json to_json(const ChernPolynomial &p);
ChernPolynomial chern_polynomial_from_json(const Json &j, const std::string &path);

Json to_json(const BettiProfile &p);
BettiProfile betti_profile_from_json(const Json &j, const std::string &path);

Json to_json(const FixedPointModel &m);
FixedPointModel fixed_point_model_from_json(const Json &j, const std::string &path);

/// The cohomology model is not serialized.
Json to_json(const ManifoldData &m);
ManifoldData manifold_from_json(const Json &j, const std::string &path);

RationalMatrix matrix_from_json(const Json &j, const std::string &path);

Json to_json(const InertiaTriple &t);
Json to_json(const InequalityReport &r);
Json to_json(const MiyaokaYauReport &r);
Json to_json(const ClosedFormReport &r);
Json to_json(const OddSpanReport &r);
Json to_json(const IsolatedConsistencyReport &r);
Json to_json(const SignatureFormulaReport &r);
Json to_json(const BettiInequalityReport &r);
Json to_json(const UnimodalityReport &r);

/// Parses text; syntax errors become InputError mentioning the source.
Json parse(const std::string &text, const std::string &source);
Json read_file(const std::string &path);

}  // namespace genus::io
