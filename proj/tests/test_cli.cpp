#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <algorithm>
#include <sys/wait.h>

#include "genus/catalog.hpp"
#include "genus/cli.hpp"
#include "genus/genus.hpp"
#include "genus/json_io.hpp"

namespace fs = std::filesystem;
using genus::io::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = genus::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("genus-cli-" + std::to_string(std::rand()))) { fs::create_directories(path_); }
    ~TempDir() { fs::remove_all(path_); }
    std::string write(const std::string &name, const std::string &text) const {
        const fs::path p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    [[nodiscard]] const fs::path &path() const { return path_; }

private:
    fs::path path_;
};

}  // namespace

TEST_CASE("chi on a catalog manifold") {
    TempDir dir;
    const auto made = run({"catalog", "--make", "pn:2"});
    REQUIRE(made.code == 0);
    const std::string p2 = dir.write("p2.json", made.out);
    const auto chi = run({"chi", "--n", "2", "--manifold", p2});
    CHECK(chi.code == 0);
    CHECK(chi.out == "{\"chi\":[[\"0\",\"1\"],[\"1\",\"-1\"],[\"2\",\"1\"]]}\n");
    CHECK(chi.err.empty());
    CHECK(run({"chi", "--manifold", p2, "--at", "euler"}).out == "3\n");
    CHECK(run({"chi", "--manifold", p2, "--at", "todd"}).out == "1\n");
    CHECK(run({"chi", "--manifold", p2, "--at", "signature"}).out == "1\n");
    CHECK(run({"chi", "--n", "3", "--manifold", p2}).code == 2);
}

TEST_CASE("symbolic chi table") {
    const auto r = run({"chi", "--n", "2"});
    CHECK(r.code == 0);
    const Json doc = genus::io::parse(r.out, "stdout");
    CHECK(genus::io::chern_polynomial_from_json(doc, "$") == genus::chi_y_chern_polynomial(2).chi_poly);
    const auto euler = run({"chi", "--n", "3", "--at", "euler"});
    CHECK(euler.out == "{\"grade\":3,\"terms\":[{\"partition\":[3],\"coeff\":{\"0\":\"1\"}}]}\n");
}

TEST_CASE("kcoeffs") {
    const auto r = run({"kcoeffs", "--n", "4", "--verify"});
    CHECK(r.code == 0);
    const Json doc = genus::io::parse(r.out, "stdout");
    CHECK(doc["k"].size() == 5);
    CHECK(doc["closedForms"]["ok"] == true);
    CHECK(doc["oddSpan"]["ok"] == true);
    CHECK(run({"kcoeffs", "--n", "3"}).code == 0);
    CHECK(run({"kcoeffs"}).code == 2);
}

TEST_CASE("ineq, localize and betti") {
    TempDir dir;
    const std::string k3 = dir.write("k3.json", run({"catalog", "--make", "hyp:2:4"}).out);
    const auto ineq = run({"ineq", "--manifold", k3, "--epsilon", "1"});
    CHECK(ineq.code == 0);
    const Json reports = genus::io::parse(ineq.out, "stdout");
    CHECK(reports.size() == 2);
    CHECK(reports[0]["lhs"] == "24");
    CHECK(reports[0]["rhs"] == "3");
    CHECK(run({"ineq", "--manifold", k3, "--epsilon", "2"}).code == 2);
    const auto my = genus::io::parse(run({"ineq", "--manifold", k3, "--miyaoka-yau"}).out, "stdout");
    CHECK(my["miyaokaYau"]["holds"] == true);

    const std::string action = dir.write("a.json", run({"catalog", "--make", "pnaction:4:0,1,2,3,4"}).out);
    const auto loc = run({"localize", "--model", action, "--check", "mainapp4"});
    CHECK(loc.code == 0);
    const Json l = genus::io::parse(loc.out, "stdout");
    CHECK(l["signature"] == 1);
    CHECK(l["check"]["holds"] == true);
    CHECK(run({"localize", "--model", action, "--check", "isolated"}).code == 0);
    const std::string bad_model = dir.write("bad.json", R"({"n":2,"hamiltonian":true,"components":[{"complexDim":0,"weights":[1,-1]}]})");
    CHECK(run({"localize", "--model", bad_model, "--check", "isolated"}).code == 1);
    const std::string zero = dir.write("zero.json", R"({"n":1,"components":[{"complexDim":0,"weights":[0]}]})");
    const auto z = run({"localize", "--model", zero});
    CHECK(z.code == 2);
    CHECK(z.err.find("weights[0]") != std::string::npos);
    CHECK(z.out.empty());

    const std::string profile = dir.write("p.json", R"({"dim":4,"betti":[1,0,22,0,1],"signature":-16})");
    const auto b = run({"betti", "--profile", profile});
    CHECK(b.code == 0);
    CHECK(genus::io::parse(b.out, "stdout")["signatureAlternating"] == false);
    const std::string hyp = dir.write("h.json", R"({"dim":4,"betti":[1,0,2,0,1]})");
    const std::string form = dir.write("f.json", R"([["0","1"],["1","0"]])");
    const auto bf = genus::io::parse(run({"betti", "--profile", hyp, "--form", form}).out, "stdout");
    CHECK(bf["inertia"]["bPlus"] == 1);
    CHECK(bf["profile"]["signature"] == 0);
    CHECK(bf["inequalities"]["reverseCauchySchwarz"] == true);
    const std::string wrong = dir.write("w.json", R"([["1"]])");
    CHECK(run({"betti", "--profile", hyp, "--form", wrong}).code == 2);
}

TEST_CASE("catalog listing") {
    const auto r = run({"catalog", "--list"});
    CHECK(r.code == 0);
    const Json doc = genus::io::parse(r.out, "stdout");
    CHECK(doc["manifolds"].size() == genus::catalog_specs().size());
    CHECK(run({"catalog"}).code == 2);
    CHECK(run({"catalog", "--make", "nonsense"}).code == 2);
}

TEST_CASE("emitted documents round-trip through the readers") {
    for (const auto &spec : genus::catalog_specs()) {
        const std::string text = run({"catalog", "--make", spec}).out;
        const auto m = genus::io::manifold_from_json(genus::io::parse(text, "stdout"), "$");
        CHECK(genus::io::to_json(m).dump() + "\n" == text);
    }
    const std::string model = run({"catalog", "--make", "linaction:4:0,0,0,1,2"}).out;
    CHECK(genus::io::to_json(genus::io::fixed_point_model_from_json(genus::io::parse(model, "stdout"), "$")).dump() + "\n" == model);
    const std::string table = run({"chi", "--n", "4"}).out;
    CHECK(genus::io::to_json(genus::io::chern_polynomial_from_json(genus::io::parse(table, "stdout"), "$")).dump() + "\n" == table);
}

TEST_CASE("usage errors exit with 2") {
    const auto unknown = run({"frobnicate"});
    CHECK(unknown.code == 2);
    CHECK(unknown.out.empty());
    CHECK(unknown.err.find("Usage") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"chi"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    TempDir dir;
    const std::string broken = dir.write("broken.json", "{\"n\": 2, ");
    const auto r = run({"chi", "--manifold", broken});
    CHECK(r.code == 2);
    CHECK(r.err.find("broken.json") != std::string::npos);
}

TEST_CASE("degree cap") {
    setenv("GENUS_MAX_N", "3", 1);
    CHECK(run({"chi", "--n", "4"}).code == 2);
    CHECK(run({"chi", "--n", "3"}).code == 0);
    setenv("GENUS_MAX_N", "junk", 1);
    CHECK(run({"chi", "--n", "1"}).code == 2);
    unsetenv("GENUS_MAX_N");
    CHECK(genus::cli::max_degree() == 12);
    CHECK(run({"kcoeffs", "--n", "13"}).code == 2);
}

TEST_CASE("verify-paper is deterministic and passes") {
    const auto first = run({"verify-paper"});
    const auto second = run({"verify-paper"});
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(std::count(first.out.begin(), first.out.end(), '\n') == 10);
    CHECK(first.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("binary keeps JSON on stdout and diagnostics on stderr") {
    TempDir dir;
    const std::string out = (dir.path() / "out.txt").string();
    const std::string err = (dir.path() / "err.txt").string();
    const std::string cmd = std::string(GENUS_CLI_PATH) + " frobnicate > " + out + " 2> " + err;
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 2);
    CHECK(fs::file_size(out) == 0);
    CHECK(fs::file_size(err) > 0);
    const std::string ok = std::string(GENUS_CLI_PATH) + " catalog --make pn:1 > " + out + " 2> " + err;
    CHECK(WEXITSTATUS(std::system(ok.c_str())) == 0);
    CHECK(fs::file_size(out) > 0);
    CHECK(fs::file_size(err) == 0);
}
