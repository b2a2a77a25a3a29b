#include "genus/json_io.hpp"

#include <fstream>
#include <sstream>

#include "genus/errors.hpp"

namespace genus::io {

namespace {

[[noreturn]] void fail(const std::string &path, const std::string &what) {
    throw InputError("field '" + path + "': " + what);
}

const Json &require(const Json &j, const char *key, const std::string &path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing");
    return *it;
}

const Json *optional_field(const Json &j, const char *key) {
    auto it = j.find(key);
    return it == j.end() || it->is_null() ? nullptr : &*it;
}

long get_long(const Json &j, const std::string &path) {
    if (j.is_number_integer()) return j.get<long>();
    if (j.is_number_unsigned()) return static_cast<long>(j.get<unsigned long>());
    fail(path, "expected an integer");
}

bool get_bool(const Json &j, const std::string &path) {
    if (!j.is_boolean()) fail(path, "expected true or false");
    return j.get<bool>();
}

std::vector<long> get_long_list(const Json &j, const std::string &path) {
    if (!j.is_array()) fail(path, "expected an array of integers");
    std::vector<long> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_long(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::string at(const std::string &path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Json rational_list(const std::vector<Rational> &v) {
    Json out = Json::array();
    for (const auto &r : v) out.push_back(to_json(r));
    return out;
}

}  // namespace

Json to_json(const Rational &r) { return r.str(); }

Rational rational_from_json(const Json &j, const std::string &path) {
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const InputError &e) {
            fail(path, e.what());
        }
    }
    if (j.is_number_integer() || j.is_number_unsigned()) return Rational(get_long(j, path));
    fail(path, "expected a rational string \"p/q\" or an integer");
}

Json to_json(const YPolynomial &p) {
    Json out = Json::object();
    for (int k = 0; k <= p.degree(); ++k)
        if (!p.coeff(k).is_zero()) out[std::to_string(k)] = to_json(p.coeff(k));
    return out;
}

Json to_json_pairs(const YPolynomial &p, int n) {
    Json out = Json::array();
    for (int k = 0; k <= std::max(n, p.degree()); ++k) out.push_back(Json::array({std::to_string(k), p.coeff(k).str()}));
    return out;
}

YPolynomial ypolynomial_from_json(const Json &j, const std::string &path) {
    std::vector<Rational> coeffs;
    auto put = [&](const std::string &key, const Json &value, const std::string &where) {
        long deg = -1;
        try {
            std::size_t used = 0;
            deg = std::stol(key, &used);
            if (used != key.size()) deg = -1;
        } catch (const std::exception &) {
        }
        if (deg < 0 || deg > 4096) fail(where, "degree key '" + key + "' is not a non-negative integer");
        if (coeffs.size() <= static_cast<std::size_t>(deg)) coeffs.resize(static_cast<std::size_t>(deg) + 1);
        coeffs[static_cast<std::size_t>(deg)] += rational_from_json(value, where);
    };
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) put(it.key(), it.value(), path + "." + it.key());
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            const Json &pair = j[i];
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string())
                fail(at(path, i), "expected [\"degree\", \"coefficient\"]");
            put(pair[0].get<std::string>(), pair[1], at(path, i));
        }
    } else if (j.is_string() || j.is_number()) {
        return YPolynomial(rational_from_json(j, path));
    } else {
        fail(path, "expected a polynomial object {\"degree\": \"coeff\"}");
    }
    return YPolynomial(std::move(coeffs));
}

Json to_json(const Partition &p) { return Json(p.parts()); }

Partition partition_from_json(const Json &j, const std::string &path) {
    if (!j.is_array()) fail(path, "expected an array of positive integers");
    std::vector<int> parts;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const long v = get_long(j[i], at(path, i));
        if (v <= 0) fail(at(path, i), "partition parts must be positive");
        parts.push_back(static_cast<int>(v));
    }
    return Partition(std::move(parts));
}

Json to_json(const ChernPolynomial &p) {
    Json terms = Json::array();
    for (const auto &[lambda, c] : p.terms()) terms.push_back(Json{{"partition", to_json(lambda)}, {"coeff", to_json(c)}});
    return Json{{"grade", p.grade()}, {"terms", terms}};
}

ChernPolynomial chern_polynomial_from_json(const Json &j, const std::string &path) {
    const long grade = get_long(require(j, "grade", path), path + ".grade");
    if (grade < 0) fail(path + ".grade", "must be non-negative");
    ChernPolynomial out(static_cast<int>(grade));
    const Json &terms = require(j, "terms", path);
    if (!terms.is_array()) fail(path + ".terms", "expected an array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string where = at(path + ".terms", i);
        const Partition lambda = partition_from_json(require(terms[i], "partition", where), where + ".partition");
        if (lambda.weight() != grade) fail(where + ".partition", "weight differs from grade");
        out.add_term(lambda, ypolynomial_from_json(require(terms[i], "coeff", where), where + ".coeff"));
    }
    return out;
}

Json to_json(const BettiProfile &p) {
    Json out{{"dim", p.dim()}, {"betti", p.betti()}};
    if (p.sigma()) out["signature"] = *p.sigma();
    return out;
}

BettiProfile betti_profile_from_json(const Json &j, const std::string &path) {
    if (!j.is_object()) fail(path, "expected an object");
    std::optional<long> sigma;
    if (const Json *s = optional_field(j, "signature")) sigma = get_long(*s, path + ".signature");
    try {
        if (const Json *even = optional_field(j, "evenBetti")) {
            auto profile = BettiProfile::from_even(get_long_list(*even, path + ".evenBetti"), sigma);
            if (const Json *d = optional_field(j, "dim"); d && get_long(*d, path + ".dim") != profile.dim())
                fail(path + ".dim", "disagrees with the length of evenBetti");
            return profile;
        }
        const long dim = get_long(require(j, "dim", path), path + ".dim");
        return BettiProfile(static_cast<int>(dim), get_long_list(require(j, "betti", path), path + ".betti"), sigma);
    } catch (const InputError &e) {
        const std::string what = e.what();
        if (what.rfind("field '", 0) == 0) throw;
        fail(path, what);
    }
}

Json to_json(const FixedPointModel &m) {
    Json comps = Json::array();
    for (const auto &c : m.components) {
        Json cj{{"complexDim", c.complex_dim}};
        if (c.weights)
            cj["weights"] = *c.weights;
        else if (c.explicit_df)
            cj["dF"] = *c.explicit_df;
        if (c.betti) cj["betti"] = *c.betti;
        if (c.signature) cj["signature"] = *c.signature;
        if (c.chi_minus_y) cj["chiMinusY"] = to_json(*c.chi_minus_y);
        comps.push_back(std::move(cj));
    }
    return Json{{"n", m.n}, {"hamiltonian", m.hamiltonian}, {"components", comps}};
}

FixedPointModel fixed_point_model_from_json(const Json &j, const std::string &path) {
    FixedPointModel m;
    m.n = static_cast<int>(get_long(require(j, "n", path), path + ".n"));
    if (const Json *h = optional_field(j, "hamiltonian")) m.hamiltonian = get_bool(*h, path + ".hamiltonian");
    const Json &comps = require(j, "components", path);
    if (!comps.is_array()) fail(path + ".components", "expected an array");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string where = at(path + ".components", i);
        const Json &cj = comps[i];
        if (!cj.is_object()) fail(where, "expected an object");
        FixedComponent c;
        if (const Json *r = optional_field(cj, "complexDim")) c.complex_dim = static_cast<int>(get_long(*r, where + ".complexDim"));
        if (const Json *w = optional_field(cj, "weights")) {
            c.weights = get_long_list(*w, where + ".weights");
            for (std::size_t k = 0; k < c.weights->size(); ++k)
                if ((*c.weights)[k] == 0) fail(at(where + ".weights", k), "zero weight (weights must be nonzero)");
        }
        if (const Json *d = optional_field(cj, "dF")) c.explicit_df = static_cast<int>(get_long(*d, where + ".dF"));
        if (const Json *b = optional_field(cj, "betti")) c.betti = get_long_list(*b, where + ".betti");
        if (const Json *s = optional_field(cj, "signature")) c.signature = get_long(*s, where + ".signature");
        if (const Json *p = optional_field(cj, "chiMinusY")) c.chi_minus_y = ypolynomial_from_json(*p, where + ".chiMinusY");
        m.components.push_back(std::move(c));
    }
    try {
        m.validate();
    } catch (const InputError &e) {
        fail(path, e.what());
    }
    return m;
}

Json to_json(const ManifoldData &m) {
    Json numbers = Json::array();
    for (const auto &[lambda, v] : m.chern_numbers) numbers.push_back(Json{{"partition", to_json(lambda)}, {"value", to_json(v)}});
    Json out{{"name", m.name},
             {"n", m.dimension},
             {"chernNumbers", numbers},
             {"flags",
              {{"pureType", m.flags.pure_type},
               {"kahlerHyperbolic", m.flags.kahler_hyperbolic},
               {"hamiltonianS1", m.flags.hamiltonian_s1}}}};
    if (m.betti) out["bettiProfile"] = to_json(*m.betti);
    if (m.action) out["fixedPointModel"] = to_json(*m.action);
    return out;
}

ManifoldData manifold_from_json(const Json &j, const std::string &path) {
    ManifoldData m;
    if (!j.is_object()) fail(path, "expected an object");
    if (const Json *name = optional_field(j, "name")) {
        if (!name->is_string()) fail(path + ".name", "expected a string");
        m.name = name->get<std::string>();
    }
    const long n = get_long(require(j, "n", path), path + ".n");
    if (n < 0) fail(path + ".n", "must be non-negative");
    m.dimension = static_cast<int>(n);
    const Json &numbers = require(j, "chernNumbers", path);
    if (!numbers.is_array()) fail(path + ".chernNumbers", "expected an array");
    for (std::size_t i = 0; i < numbers.size(); ++i) {
        const std::string where = at(path + ".chernNumbers", i);
        const Partition lambda = partition_from_json(require(numbers[i], "partition", where), where + ".partition");
        if (lambda.weight() != m.dimension) fail(where + ".partition", "weight differs from n");
        if (!m.chern_numbers.emplace(lambda, rational_from_json(require(numbers[i], "value", where), where + ".value")).second)
            fail(where + ".partition", "duplicate partition");
    }
    if (const Json *flags = optional_field(j, "flags")) {
        if (const Json *f = optional_field(*flags, "pureType")) m.flags.pure_type = get_bool(*f, path + ".flags.pureType");
        if (const Json *f = optional_field(*flags, "kahlerHyperbolic"))
            m.flags.kahler_hyperbolic = get_bool(*f, path + ".flags.kahlerHyperbolic");
        if (const Json *f = optional_field(*flags, "hamiltonianS1"))
            m.flags.hamiltonian_s1 = get_bool(*f, path + ".flags.hamiltonianS1");
    }
    if (const Json *b = optional_field(j, "bettiProfile")) m.betti = betti_profile_from_json(*b, path + ".bettiProfile");
    if (const Json *a = optional_field(j, "fixedPointModel")) {
        m.action = fixed_point_model_from_json(*a, path + ".fixedPointModel");
        if (m.action->n != m.dimension) fail(path + ".fixedPointModel.n", "differs from the manifold dimension");
    }
    return m;
}

RationalMatrix matrix_from_json(const Json &j, const std::string &path) {
    if (!j.is_array()) fail(path, "expected an array of rows");
    RationalMatrix out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array()) fail(at(path, i), "expected an array");
        std::vector<Rational> row;
        for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(rational_from_json(j[i][k], at(at(path, i), k)));
        if (!out.empty() && row.size() != out.front().size()) fail(at(path, i), "row length differs");
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const InertiaTriple &t) { return Json{{"bPlus", t.plus}, {"bMinus", t.minus}, {"bZero", t.zero}}; }

Json to_json(const InequalityReport &r) {
    return Json{{"index", r.index},
                {"lhs", to_json(r.lhs)},
                {"rhs", to_json(r.rhs)},
                {"clearing", to_json(r.clearing)},
                {"lhsCleared", to_json(r.lhs_cleared)},
                {"rhsCleared", to_json(r.rhs_cleared)},
                {"holds", r.holds},
                {"equality", r.equality},
                {"witness", r.witness},
                {"equalityWitness", r.equality_witness},
                {"hypothesisMet", r.hypothesis_met},
                {"consistent", r.consistent()}};
}

Json to_json(const MiyaokaYauReport &r) {
    Json out{{"n", r.n},
             {"lhs", to_json(r.lhs)},
             {"rhs", to_json(r.rhs)},
             {"holds", r.holds},
             {"equality", r.equality}};
    if (r.surface) {
        const auto &s = *r.surface;
        out["surface"] = Json{{"c1Squared", to_json(s.c1_squared)},
                              {"c2", to_json(s.c2)},
                              {"c2AtLeast3", s.euler_bound},
                              {"threeC2AtLeastC1Squared", s.bmy_holds},
                              {"threeC2EqualsC1Squared", s.bmy_equality},
                              {"c2PlusC1SquaredAtLeast12", s.todd_bound_holds},
                              {"c2PlusC1SquaredEquals12", s.todd_bound_equality}};
    }
    return out;
}

Json to_json(const ClosedFormReport &r) {
    Json mism = Json::array();
    for (const auto &m : r.mismatches)
        mism.push_back(Json{{"j", m.j},
                            {"partition", to_json(m.lambda)},
                            {"computed", to_json(m.computed)},
                            {"expected", to_json(m.expected)}});
    return Json{{"n", r.n}, {"checked", r.checked}, {"ok", r.ok()}, {"mismatches", mism}};
}

Json to_json(const OddSpanReport &r) {
    Json entries = Json::array();
    for (const auto &e : r.entries)
        entries.push_back(Json{{"oddIndex", e.odd_index}, {"inSpan", e.in_span}, {"coefficients", rational_list(e.coefficients)}});
    return Json{{"n", r.n}, {"ok", r.ok()}, {"entries", entries}};
}

Json to_json(const IsolatedConsistencyReport &r) {
    return Json{{"applicable", r.applicable},
                {"oddNovikovVanish", r.odd_novikov_vanish},
                {"novikovMatchesChi", r.novikov_matches_chi},
                {"chiPositive", r.chi_positive},
                {"extremalOk", r.extremal_ok},
                {"consistent", r.consistent()},
                {"chiMinusY", to_json(r.chi_minus_y)},
                {"novikov", to_json(r.novikov)}};
}

Json to_json(const SignatureFormulaReport &r) {
    Json out{{"applicable", r.applicable}};
    if (r.applicable) {
        out["localizedSignature"] = r.localized_signature;
        out["alternatingNovikovSum"] = r.alternating_novikov_sum;
        out["holds"] = r.holds();
    } else {
        out["status"] = "not applicable";
        out["unmet"] = r.unmet;
    }
    return out;
}

Json to_json(const BettiInequalityReport &r) {
    return Json{{"dim", r.dim},
                {"m", r.m},
                {"bPlus", r.b_plus},
                {"bMinus", r.b_minus},
                {"signatureAlternating", r.signature_alternating},
                {"upper", {{"k", r.k_upper}, {"lhs", r.upper_lhs}, {"rhs", r.upper_rhs}, {"holds", r.upper_holds}, {"equality", r.upper_equality}}},
                {"lower", {{"k", r.k_lower}, {"lhs", r.lower_lhs}, {"rhs", r.lower_rhs}, {"holds", r.lower_holds}, {"equality", r.lower_equality}}},
                {"reverseCauchySchwarz", r.cs.reverse_cs},
                {"cauchySchwarz", r.cs.cs},
                {"consistent", r.consistent}};
}

Json to_json(const UnimodalityReport &r) {
    Json out{{"label", r.label}, {"chainDegrees", r.chain_degrees}, {"holds", r.holds}};
    if (r.first_failure_degree) out["firstFailureDegree"] = *r.first_failure_degree;
    return out;
}

Json parse(const std::string &text, const std::string &source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw InputError(source + ": malformed JSON (" + e.what() + ")");
    }
}

Json read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

}  // namespace genus::io
