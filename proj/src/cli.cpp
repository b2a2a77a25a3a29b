#include "genus/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>

#include "genus/betti.hpp"
#include "genus/catalog.hpp"
#include "genus/errors.hpp"
#include "genus/genus.hpp"
#include "genus/inequality.hpp"
#include "genus/json_io.hpp"
#include "genus/kexpansion.hpp"
#include "genus/localization.hpp"
#include "genus/verify.hpp"

namespace genus::cli {

namespace {

using io::Json;

void emit(std::ostream &out, const Json &doc) { out << doc.dump() << '\n'; }

void check_degree(int n) {
    if (n < 0) throw InputError("n must be non-negative");
    if (n > max_degree())
        throw InputError("n = " + std::to_string(n) + " exceeds GENUS_MAX_N = " + std::to_string(max_degree()));
}

ManifoldData load_manifold(const std::string &path) {
    ManifoldData m = io::manifold_from_json(io::read_file(path), "$");
    check_degree(m.dimension);
    return m;
}

struct ChiOptions {
    std::optional<int> n;
    std::string manifold;
    std::string at;
};

int run_chi(const ChiOptions &o, std::ostream &out) {
    std::optional<ManifoldData> m;
    if (!o.manifold.empty()) {
        m = load_manifold(o.manifold);
        if (o.n && *o.n != m->dimension)
            throw InputError("--n " + std::to_string(*o.n) + " disagrees with the manifold dimension " +
                             std::to_string(m->dimension));
    } else if (!o.n) {
        throw InputError("chi needs --n or --manifold");
    }
    const int n = m ? m->dimension : *o.n;
    check_degree(n);

    if (!o.at.empty()) {
        const Specialization at = o.at == "euler" ? Specialization::Euler
                                  : o.at == "todd" ? Specialization::Todd
                                                   : Specialization::Signature;
        if (m) {
            out << specialize(*m, at).str() << '\n';
        } else {
            const long y = at == Specialization::Euler ? -1 : at == Specialization::Todd ? 0 : 1;
            emit(out, io::to_json(chi_y_chern_polynomial(n).chi_poly.at_y(Rational(y))));
        }
        return kOk;
    }
    if (m) {
        emit(out, Json{{"chi", io::to_json_pairs(evaluate_genus(*m), n)}});
    } else {
        emit(out, io::to_json(chi_y_chern_polynomial(n).chi_poly));
    }
    return kOk;
}

int run_kcoeffs(int n, bool verify, std::ostream &out, std::ostream &err) {
    check_degree(n);
    const KTable table = k_coefficients(n);
    Json k = Json::array();
    for (const auto &p : table.k) k.push_back(io::to_json(p));
    Json doc{{"n", n}, {"k", k}};
    if (!verify) {
        emit(out, doc);
        return kOk;
    }
    if (n < 1) throw InputError("--verify needs n >= 1");
    const ClosedFormReport closed = verify_closed_forms(n);
    const OddSpanReport span = odd_k_span_check(n);
    doc["closedForms"] = io::to_json(closed);
    doc["oddSpan"] = io::to_json(span);
    emit(out, doc);
    if (!closed.ok()) err << "closed-form mismatch for n = " << n << '\n';
    if (!span.ok()) err << "odd K outside the span of even K for n = " << n << '\n';
    return closed.ok() && span.ok() ? kOk : kCheckFailed;
}

int run_ineq(const std::string &path, int epsilon, bool miyaoka_yau, std::ostream &out) {
    const ManifoldData m = load_manifold(path);
    Json reports = Json::array();
    for (const auto &r : check_inequalities(m, PositivityKind(epsilon))) reports.push_back(io::to_json(r));
    if (miyaoka_yau)
        emit(out, Json{{"inequalities", reports}, {"miyaokaYau", io::to_json(miyaoka_yau_check(m))}});
    else
        emit(out, reports);
    return kOk;
}

int run_localize(const std::string &path, const std::string &check, std::ostream &out, std::ostream &err) {
    const Json doc = io::read_file(path);
    const bool wrapped = doc.is_object() && doc.contains("fixedPointModel");
    const FixedPointModel model = wrapped ? io::fixed_point_model_from_json(doc["fixedPointModel"], "$.fixedPointModel")
                                          : io::fixed_point_model_from_json(doc, "$");
    check_degree(model.n);
    Json result{{"chiMinusY", io::to_json_pairs(localized_chi_minus_y(model), model.n)},
                {"novikov", io::to_json_pairs(novikov_polynomial(model), 2 * model.n)},
                {"signature", localized_signature(model)}};
    int code = kOk;
    if (check == "mainapp4") {
        const SignatureFormulaReport r = theorem_mainapp4_check(model);
        result["check"] = io::to_json(r);
        if (r.applicable && !r.holds()) {
            err << "localized signature differs from the alternating Novikov sum\n";
            code = kCheckFailed;
        }
    } else if (check == "isolated") {
        const IsolatedConsistencyReport r = consistency_isolated(model);
        result["check"] = io::to_json(r);
        if (!r.consistent()) {
            err << "isolated fixed point data is inconsistent\n";
            code = kCheckFailed;
        }
    }
    emit(out, result);
    return code;
}

int run_betti(const std::string &profile_path, const std::string &form_path, std::ostream &out, std::ostream &err) {
    BettiProfile profile = io::betti_profile_from_json(io::read_file(profile_path), "$");
    Json result = Json::object();
    if (!form_path.empty()) {
        const RationalMatrix form = io::matrix_from_json(io::read_file(form_path), "$");
        const InertiaTriple t = inertia(form);
        result["inertia"] = io::to_json(t);
        if (profile.dim() % 4 == 0) {
            const long middle = profile.b(profile.dim() / 2);
            if (static_cast<long>(form.size()) != middle)
                throw InputError("form has size " + std::to_string(form.size()) + " but b_" +
                                 std::to_string(profile.dim() / 2) + " = " + std::to_string(middle));
            if (t.zero != 0) throw InputError("intersection form is degenerate");
            const long sigma = t.plus - t.minus;
            if (profile.sigma() && *profile.sigma() != sigma)
                throw InputError("profile signature " + std::to_string(*profile.sigma()) +
                                 " differs from the form's b+ - b- = " + std::to_string(sigma));
            profile = BettiProfile(profile.dim(), profile.betti(), sigma);
        }
    }
    result["profile"] = io::to_json(profile);
    if (profile.sigma()) result["signatureAlternating"] = signature_alternating(profile);
    int code = kOk;
    if (profile.dim() % 4 == 0 && profile.dim() > 0 && profile.sigma()) {
        const BettiInequalityReport r = mainapp5_check(profile);
        result["inequalities"] = io::to_json(r);
        if (!r.consistent) {
            err << "Betti inequalities fail for a signature-alternating profile\n";
            code = kCheckFailed;
        }
    }
    result["unimodality"] = io::to_json(tolman_unimodality_report(profile));
    emit(out, result);
    return code;
}

int run_catalog(bool list, const std::string &spec, std::ostream &out) {
    if (list) {
        Json manifolds = Json::array();
        for (const auto &s : catalog_specs()) {
            const ManifoldData m = make_manifold(s);
            manifolds.push_back(Json{{"spec", s}, {"name", m.name}, {"n", m.dimension}});
        }
        Json actions = Json::array();
        for (const auto &a : catalog_actions())
            actions.push_back(Json{{"name", a.name}, {"n", a.model.n}, {"manifold", a.manifold_spec}});
        emit(out, Json{{"manifolds", manifolds}, {"actions", actions}});
        return kOk;
    }
    if (spec.empty()) throw InputError("catalog needs --list or --make SPEC");
    const auto made = make_from_spec(spec);
    if (const auto *m = std::get_if<ManifoldData>(&made))
        emit(out, io::to_json(*m));
    else
        emit(out, io::to_json(std::get<FixedPointModel>(made)));
    return kOk;
}

int run_verify_paper(std::ostream &out) {
    const auto results = run_acceptance_suite();
    out << format_table(results);
    for (const auto &r : results)
        if (!r.passed) return kCheckFailed;
    return kOk;
}

}  // namespace

int max_degree() {
    const char *env = std::getenv("GENUS_MAX_N");
    if (env == nullptr || *env == '\0') return 12;
    try {
        std::size_t used = 0;
        const int v = std::stoi(env, &used);
        if (used == std::string(env).size() && v >= 0) return v;
    } catch (const std::exception &) {
    }
    throw InputError(std::string("GENUS_MAX_N is not a non-negative integer: '") + env + "'");
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact chi_y-genus, Chern number inequalities and fixed point localization", "genus"};
    app.require_subcommand(1);

    ChiOptions chi;
    auto *chi_cmd = app.add_subcommand("chi", "chi_y genus as a Chern polynomial, or evaluated on a manifold");
    chi_cmd->add_option("--n", chi.n, "complex dimension");
    chi_cmd->add_option("--manifold", chi.manifold, "manifold JSON file");
    chi_cmd->add_option("--at", chi.at, "specialize at y = -1, 0, 1")->check(CLI::IsMember({"euler", "todd", "signature"}));

    int k_n = 0;
    bool k_verify = false;
    auto *k_cmd = app.add_subcommand("kcoeffs", "Taylor coefficients K_j of chi_y at y = -1");
    k_cmd->add_option("--n", k_n, "complex dimension")->required();
    k_cmd->add_flag("--verify", k_verify, "compare with the closed forms and check the odd-K span");

    std::string ineq_manifold;
    int epsilon = 1;
    bool miyaoka_yau = false;
    auto *ineq_cmd = app.add_subcommand("ineq", "Chern number inequalities A_i[M] >= A_i[P^n]");
    ineq_cmd->add_option("--manifold", ineq_manifold, "manifold JSON file")->required();
    ineq_cmd->add_option("--epsilon", epsilon, "1 for chi-positive, -1 for signed chi-positive")
        ->check(CLI::IsMember({1, -1}));
    ineq_cmd->add_flag("--miyaoka-yau", miyaoka_yau, "also report the Miyaoka-Yau inequality");

    std::string model_path, loc_check;
    auto *loc_cmd = app.add_subcommand("localize", "fixed point localization of chi_{-y}, Novikov numbers, signature");
    loc_cmd->add_option("--model", model_path, "fixed point model JSON file")->required();
    loc_cmd->add_option("--check", loc_check, "extra consistency check")->check(CLI::IsMember({"mainapp4", "isolated"}));

    std::string profile_path, form_path;
    auto *betti_cmd = app.add_subcommand("betti", "Betti number inequalities and intersection form inertia");
    betti_cmd->add_option("--profile", profile_path, "Betti profile JSON file")->required();
    betti_cmd->add_option("--form", form_path, "middle intersection form JSON file");

    bool list = false;
    std::string make_spec;
    auto *cat_cmd = app.add_subcommand("catalog", "built-in manifolds and circle actions");
    auto *list_opt = cat_cmd->add_flag("--list", list, "list catalog entries");
    cat_cmd->add_option("--make", make_spec, "emit JSON for a spec such as pn:4 or hyp:3:5")->excludes(list_opt);

    auto *verify_cmd = app.add_subcommand("verify-paper", "run the reproduction checks and print a pass/fail table");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << "\n\n" << app.help();
        return kInputError;
    }

    try {
        if (chi_cmd->parsed()) return run_chi(chi, out);
        if (k_cmd->parsed()) return run_kcoeffs(k_n, k_verify, out, err);
        if (ineq_cmd->parsed()) return run_ineq(ineq_manifold, epsilon, miyaoka_yau, out);
        if (loc_cmd->parsed()) return run_localize(model_path, loc_check, out, err);
        if (betti_cmd->parsed()) return run_betti(profile_path, form_path, out, err);
        if (cat_cmd->parsed()) return run_catalog(list, make_spec, out);
        if (verify_cmd->parsed()) return run_verify_paper(out);
    } catch (const InputError &e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kCheckFailed;
    }
    err << app.help();
    return kInputError;
}

}  // namespace genus::cli
