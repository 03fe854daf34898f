#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qsa/cli.hpp"
#include "qsa/error.hpp"
#include "qsa/json_io.hpp"
#include "support.hpp"

using namespace qsa;
using qsa::testing::v;
using qsa::testing::x;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run qsa_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("qsa_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const Json& j) {
    fs::path p = scratch() / name;
    std::ofstream(p) << j.dump();
    return p.string();
}

std::string write_element(const std::string& name, const ShuffleElement& F) { return write_file(name, to_json(F)); }

std::vector<Json> json_lines(const std::string& text) {
    std::vector<Json> out;
    std::stringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(Json::parse(line));
    return out;
}

}  // namespace

TEST_CASE("psi of a repeated generator") {
    auto r = qsa_run({"psi", "--flavor", "trig-a", "--n", "2", "--word", "e(1,0) e(1,0)"});
    REQUIRE(r.code == 0);
    auto F = element_from_json(Json::parse(r.out));
    CHECK(F.flavor() == Flavor::trig_a(2));
    CHECK(F.grading() == std::vector<int>{2});
    CHECK(F.numerator() == XPoly((ParamPoly(1) + v(-2)) * make_rational(1, 2)));
}

TEST_CASE("integrality failure names the witness") {
    Flavor a2 = Flavor::trig_a(2);
    auto path = write_element("sq.json", ShuffleElement(a2, {2}, XPoly(a2.normalizer().pow(2))));
    auto r = qsa_run({"check", "--predicate", "integral", "--in", path});
    CHECK(r.code == 1);
    auto report = Json::parse(r.out);
    CHECK(report["holds"] == false);
    std::string detail = report["detail"];
    CHECK(detail.find("[1;1]->2") != std::string::npos);
    CHECK(detail.find("(2)") != std::string::npos);
    CHECK(detail.find("[2]_v!") != std::string::npos);

    auto ok = write_element("sq2.json", ShuffleElement(a2, {2}, XPoly(a2.normalizer().pow(2) * (v(1) + v(-1)))));
    auto r2 = qsa_run({"check", "--predicate", "integral", "--in", ok});
    CHECK(r2.code == 0);
    CHECK(Json::parse(r2.out)["holds"] == true);
}

TEST_CASE("factorial suite prints one line per k") {
    auto r = qsa_run({"verify", "--suite", "factorial", "--max-k", "4"});
    CHECK(r.code == 0);
    auto lines = json_lines(r.out);
    REQUIRE(lines.size() == 9);
    for (int k = 0; k < 8; ++k) {
        CHECK(lines[k]["pass"] == true);
        CHECK(lines[k]["check"].get<std::string>().find("k=" + std::to_string(k % 4 + 1)) != std::string::npos);
    }
    CHECK(lines[8]["passed"] == true);
    CHECK(lines[8]["checks"] == 8);
}

TEST_CASE("product and bracket agree with the library") {
    Flavor a3 = Flavor::trig_a(3);
    auto F = psi_word(a3, {{1, 0}, {2, 1}});
    auto G = ShuffleElement::generator(a3, 1, -1);
    auto pf = write_element("F.json", F), pg = write_element("G.json", G);
    auto prod = qsa_run({"product", "--in", pf, "--in", pg});
    REQUIRE(prod.code == 0);
    CHECK(element_from_json(Json::parse(prod.out)) == shuffle_product(F, G));
    auto three = qsa_run({"product", "--in", pf, "--in", pg, "--in", pg});
    REQUIRE(three.code == 0);
    CHECK(element_from_json(Json::parse(three.out)) == shuffle_product(shuffle_product(F, G), G));

    auto bra = qsa_run({"bracket", "--in", pf, "--in", pg, "--lambda", "v^-1"});
    REQUIRE(bra.code == 0);
    CHECK(element_from_json(Json::parse(bra.out)) == q_bracket(F, G, v(-1)));

    // Odd elements anticommute under the super bracket.
    Flavor s = Flavor::trig_super(1, 1);
    auto odd = write_element("odd.json", ShuffleElement::generator(s, 1, 0));
    auto odd1 = write_element("odd1.json", ShuffleElement::generator(s, 1, 1));
    auto sb = qsa_run({"bracket", "--in", odd, "--in", odd1});
    REQUIRE(sb.code == 0);
    auto a = ShuffleElement::generator(s, 1, 0), b = ShuffleElement::generator(s, 1, 1);
    CHECK(element_from_json(Json::parse(sb.out)) == shuffle_product(a, b) + shuffle_product(b, a));

    CHECK(qsa_run({"product", "--in", pf}).code == 2);
    auto other = write_element("y.json", ShuffleElement::generator(Flavor::yang_a(3), 1, 0));
    CHECK(qsa_run({"product", "--in", pf, "--in", other}).code == 2);
    CHECK(qsa_run({"product", "--flavor", "trig-a", "--n", "4", "--in", pf, "--in", pg}).code == 2);
}

TEST_CASE("pbwd, decompose and specialize") {
    Flavor a3 = Flavor::trig_a(3);
    PbwdChoice choice(a3);
    auto root = qsa_run({"pbwd", "--flavor", "trig-a", "--n", "3", "--root", "1,2", "--r", "1"});
    REQUIRE(root.code == 0);
    CHECK(element_from_json(Json::parse(root.out)) == pbwd_element(a3, make_root(a3, 1, 2), 1));

    PbwdMonomial h;
    h.add(make_root(a3, 1, 1), 1);
    h.add(make_root(a3, 1, 2), 0);
    auto hp = write_file("h.json", to_json(h));
    auto mono = qsa_run({"pbwd", "--flavor", "trig-a", "--n", "3", "--in", hp});
    REQUIRE(mono.code == 0);
    auto P = element_from_json(Json::parse(mono.out));
    CHECK(P == psi_monomial(a3, h, choice));

    auto pp = write_element("P.json", tilde_scale(P, 2));
    auto dec = qsa_run({"decompose", "--in", pp});
    REQUIRE(dec.code == 0);
    auto d = decomposition_from_json(Json::parse(dec.out));
    REQUIRE(d.entries.size() == 1);
    CHECK(d.entries[0].monomial == h);
    CHECK(d.entries[0].coeff == ParamFrac(a3.normalizer().pow(2)));

    SpecPlan plan;
    plan.d = {1, 1, 0};
    auto plan_path = write_file("plan.json", to_json(plan, a3));
    auto sp = qsa_run({"specialize", "--in", pp, "--plan", plan_path});
    REQUIRE(sp.code == 0);
    auto out = Json::parse(sp.out);
    CHECK(out["mode"] == "phi");
    CHECK(xpoly_from_json(out["value"], ParamSet::V) == phi(tilde_scale(P, 2), plan.d));
    auto red = qsa_run({"specialize", "--in", pp, "--plan", plan_path, "--mode", "reduced"});
    REQUIRE(red.code == 0);
    CHECK(xpoly_from_json(Json::parse(red.out)["value"], ParamSet::V) == reduced_phi(tilde_scale(P, 2), plan.d));
    // Without the normalizing factor the reduced map has nothing to divide.
    auto bare = write_element("bare.json", P);
    CHECK(qsa_run({"specialize", "--in", bare, "--plan", plan_path, "--mode", "reduced"}).code == 1);

    CHECK(qsa_run({"pbwd", "--flavor", "trig-a", "--n", "3"}).code == 2);
    CHECK(qsa_run({"pbwd", "--flavor", "trig-a", "--n", "3", "--root", "2,1"}).code == 2);
}

TEST_CASE("decompose reports wheel violations") {
    Flavor a3 = Flavor::trig_a(3);
    auto bad = write_element("bad.json", ShuffleElement(a3, {2, 1}, XPoly(1)));
    auto r = qsa_run({"decompose", "--in", bad});
    CHECK(r.code == 1);
    CHECK(!r.err.empty());
    auto w = qsa_run({"check", "--predicate", "wheel", "--in", bad});
    CHECK(w.code == 1);
    CHECK(Json::parse(w.out)["holds"] == false);
}

TEST_CASE("certify") {
    auto r = qsa_run({"certify", "--flavor", "trig-a", "--n", "3", "--grading", "2,1", "--window", "0:1"});
    REQUIRE(r.code == 0);
    auto c = Json::parse(r.out);
    CHECK(c["independent"] == true);
    CHECK(c["rank"] == c["monomials"]);
    CHECK(c["kernel"].empty());
    CHECK(qsa_run({"certify", "--flavor", "trig-a", "--n", "3"}).code == 2);
    CHECK(qsa_run({"certify", "--flavor", "trig-a", "--n", "3", "--grading", "2,x"}).code == 2);
    CHECK(qsa_run({"certify", "--flavor", "trig-a", "--n", "3", "--grading", "1,1", "--window", "1:0"}).code == 2);
}

TEST_CASE("guard limits and the environment override") {
    std::vector<std::string> big{"psi", "--flavor", "trig-a", "--n", "2", "--word", "e(1,0) e(1,0) e(1,0)"};
    auto with_flag = big;
    with_flag.insert(with_flag.end(), {"--guard", "5"});
    CHECK(qsa_run(with_flag).code == 3);
    ::setenv("QSA_GUARD", "5", 1);
    CHECK(qsa_run(big).code == 3);
    auto override_env = big;
    override_env.insert(override_env.end(), {"--guard", "1000"});
    CHECK(qsa_run(override_env).code == 0);
    ::setenv("QSA_GUARD", "lots", 1);
    CHECK(qsa_run(big).code == 2);
    ::unsetenv("QSA_GUARD");
    CHECK(qsa_run(big).code == 0);
    // The guard is restored after each run.
    auto before = symmetrization_guard();
    qsa_run(with_flag);
    CHECK(symmetrization_guard() == before);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(qsa_run({}).code == 2);
    CHECK(qsa_run({"frobnicate"}).code == 2);
    CHECK(qsa_run({"psi", "--flavor", "trig-a", "--word", "e(1,0)"}).code == 2);
    CHECK(qsa_run({"psi", "--flavor", "trig-super", "--n", "3", "--word", "e(1,0)"}).code == 2);
    CHECK(qsa_run({"psi", "--flavor", "trig-super", "--m", "1", "--word", "e(1,0)"}).code == 2);
    CHECK(qsa_run({"psi", "--flavor", "trig-q", "--n", "3", "--word", "e(1,0)"}).code == 2);
    CHECK(qsa_run({"psi", "--flavor", "trig-a", "--n", "3", "--word", "e(3,0)"}).code == 2);
    CHECK(qsa_run({"psi", "--flavor", "yang-a", "--n", "3", "--word", "e(1,-1)"}).code == 2);
    CHECK(qsa_run({"psi", "--flavor", "trig-a", "--n", "3", "--word", "f(1,0)"}).code == 2);
    CHECK(qsa_run({"check", "--in", "missing.json"}).code == 2);
    CHECK(qsa_run({"check", "--predicate", "integral", "--in", "missing.json"}).code == 2);
    auto garbage = scratch() / "garbage.json";
    std::ofstream(garbage) << "{not json";
    CHECK(qsa_run({"check", "--predicate", "pole", "--in", garbage.string()}).code == 2);
    auto wrong_shape = write_file("shape.json", Json{{"flavor", {{"kind", "trig-a"}, {"n", 2}}}});
    CHECK(qsa_run({"check", "--predicate", "pole", "--in", wrong_shape}).code == 2);
    auto s = write_element("s.json", ShuffleElement::generator(Flavor::trig_super(1, 1), 1, 0));
    CHECK(qsa_run({"check", "--predicate", "good", "--in", s}).code == 2);
    CHECK(qsa_run({"verify", "--suite", "nonsense"}).code == 2);
    CHECK(qsa_run({"verify", "--suite", "factorial", "--window", "3"}).code == 2);
    auto help = qsa_run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("output is deterministic, re-parses, and honours --pretty and --out") {
    std::vector<std::string> args{"psi", "--flavor", "yang-super", "--m", "1", "--n2", "2", "--word", "e(1,1) e(2,0) e(1,0)"};
    auto a = qsa_run(args), b = qsa_run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto F = element_from_json(Json::parse(a.out));
    CHECK(to_json(F).dump() + "\n" == a.out);

    auto pretty_args = args;
    pretty_args.push_back("--pretty");
    auto p = qsa_run(pretty_args);
    CHECK(p.out.find('\n') < p.out.size() - 1);
    CHECK(Json::parse(p.out) == Json::parse(a.out));

    auto path = (scratch() / "out.json").string();
    auto to_file = args;
    to_file.insert(to_file.end(), {"--out", path});
    auto f = qsa_run(to_file);
    CHECK(f.code == 0);
    CHECK(f.out.empty());
    std::ifstream in(path);
    CHECK(element_from_json(Json::parse(in)) == F);
}

TEST_CASE("parameter expressions") {
    CHECK(parse_param_poly("v^-1", ParamSet::V) == v(-1));
    CHECK(parse_param_poly("-1/2*v^-2 + 3", ParamSet::V) == v(-2) * make_rational(-1, 2) + ParamPoly(3));
    CHECK(parse_param_poly("v - v^-1", ParamSet::V) == v(1) - v(-1));
    CHECK(parse_param_poly("u1*u2^-1", ParamSet::U) == ParamPoly::monomial({1, -1}));
    CHECK(parse_param_poly("2*h", ParamSet::H) == ParamPoly::param(0) * 2);
    CHECK(parse_param_poly("[[[1], 1, 1]]", ParamSet::V) == v(1));
    CHECK_THROWS_AS(parse_param_poly("w", ParamSet::V), InvalidInput);
    CHECK_THROWS_AS(parse_param_poly("v^", ParamSet::V), InvalidInput);
    CHECK_THROWS_AS(parse_param_poly("", ParamSet::V), InvalidInput);
    CHECK_THROWS_AS(parse_param_poly("2**v", ParamSet::V), InvalidInput);
}
