#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wphase/cli.hpp"
#include "wphase/errors.hpp"
#include "wphase/hilbert.hpp"
#include "wphase/state_spec.hpp"

using namespace wphase;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path tmp(const std::string& name) {
  const char* base = std::getenv("WPHASE_TEST_TMP");
  return std::filesystem::path(base ? base : ".") / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

struct Dist {
  std::vector<double> theta, p;
  std::string comment;
};

Dist parse_dist(const std::string& text) {
  const auto ls = lines(text);
  REQUIRE(!ls.empty());
  CHECK(ls.front() == "theta,p");
  Dist d;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    if (ls[i].starts_with("#")) {
      d.comment = ls[i];
      continue;
    }
    const auto comma = ls[i].find(',');
    d.theta.push_back(std::stod(ls[i].substr(0, comma)));
    d.p.push_back(std::stod(ls[i].substr(comma + 1)));
  }
  return d;
}

std::vector<Complex> parse_opmat_csv(const std::string& text) {
  const auto ls = lines(text);
  CHECK(ls.front() == "s,r,re,im");
  std::vector<Complex> out;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    std::istringstream is(ls[i]);
    std::string s, r, re, im;
    std::getline(is, s, ',');
    std::getline(is, r, ',');
    std::getline(is, re, ',');
    std::getline(is, im, ',');
    out.emplace_back(std::stod(re), std::stod(im));
  }
  return out;
}

}  // namespace

TEST_CASE("complex literals and state descriptors") {
  CHECK(parse_complex_literal("1.5+0.5i") == Complex(1.5, 0.5));
  CHECK(parse_complex_literal("-2-1e-3i") == Complex(-2, -1e-3));
  CHECK(parse_complex_literal("0+0i") == Complex(0, 0));
  CHECK(parse_complex_literal("0.7") == Complex(0.7, 0));
  CHECK(parse_complex_literal("2i") == Complex(0, 2));
  CHECK(parse_complex_literal("-i") == Complex(0, -1));
  CHECK(parse_complex_literal("3-i") == Complex(3, -1));
  CHECK_THROWS_AS(parse_complex_literal("1.5+0.5"), SpecError);
  CHECK_THROWS_AS(parse_complex_literal("abc"), SpecError);

  CHECK(parse_state_spec("fock:3").n == 3);
  CHECK(parse_state_spec("coherent:1+2i").alpha == Complex(1, 2));
  const auto ph = parse_state_spec("phase:0.5:7");
  CHECK(ph.theta0 == 0.5);
  CHECK(ph.s == 7);
  CHECK(ph.max_level() == 7);
  const auto sup = parse_state_spec("super:0=1,2=1i");
  CHECK(sup.max_level() == 2);
  const auto v = materialize(sup, 4);
  CHECK(v.norm_squared() == doctest::Approx(1.0));
  CHECK(std::abs(v[2] - Complex(0, 1 / std::sqrt(2.0))) < 1e-15);
  CHECK_THROWS_AS(materialize(sup, 2), DimensionError);
  CHECK_THROWS_AS(parse_state_spec("fock:-1"), SpecError);
  CHECK_THROWS_AS(parse_state_spec("squeezed:1"), SpecError);
  CHECK_THROWS_AS(parse_state_spec("super:1=0"), SpecError);
  CHECK_THROWS_AS(parse_state_spec("phase:1.0"), SpecError);
}

TEST_CASE("opmat") {
  const auto one = run({"opmat", "--dim", "1"});
  CHECK(one.code == 0);
  CHECK(one.out == "s,r,re,im\n0,0,0.15915494309189535,0\n");

  const auto missing = run({"opmat"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("--dim") != std::string::npos);
  CHECK(missing.err.find("Usage") != std::string::npos);

  const auto a = parse_opmat_csv(run({"opmat", "--dim", "8", "--theta", "0", "--form", "double"}).out);
  const auto b = parse_opmat_csv(run({"opmat", "--dim", "8", "--theta", "0", "--form", "hyp"}).out);
  REQUIRE(a.size() == 64);
  REQUIRE(b.size() == 64);
  for (int k = 0; k < 64; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-10);

  const auto js = run({"opmat", "--dim", "3", "--theta", "0.4", "--form", "fock", "--format", "json"});
  CHECK(js.code == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["dim"] == 3);
  CHECK(j["theta"] == 0.4);
  CHECK(j["form"] == "fock");
  REQUIRE(j["entries"].size() == 3);
  CHECK(j["entries"][0][1][0].get<double>() == doctest::Approx(0.199471140200716338970 * std::cos(0.4)));
  CHECK(j["entries"][0][1][1].get<double>() == doctest::Approx(-0.199471140200716338970 * std::sin(0.4)));

  CHECK(run({"opmat", "--dim", "65"}).code == 3);
  CHECK(run({"opmat", "--dim", "0"}).code == 2);
  CHECK(run({"opmat", "--dim", "4", "--form", "bogus"}).code == 2);
  CHECK(run({"opmat", "--dim", "4", "--format", "xml"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("dist") {
  const auto fock = run({"dist", "--state", "fock:3", "--method", "trace"});
  CHECK(fock.code == 0);
  const auto d = parse_dist(fock.out);
  CHECK(d.p.size() == 512);
  CHECK(d.theta.front() == 0.0);
  CHECK(std::is_sorted(d.theta.begin(), d.theta.end()));
  for (double p : d.p) CHECK(std::fabs(p - 0.15915494309189535) < 1e-12);
  CHECK(d.comment.starts_with("# integral="));

  const auto closed = parse_dist(run({"dist", "--state", "coherent:1.5+0i", "--method", "closed", "--grid", "256"}).out);
  const auto trace =
      parse_dist(run({"dist", "--state", "coherent:1.5+0i", "--method", "trace", "--grid", "256", "--dim", "48"}).out);
  REQUIRE(closed.p.size() == trace.p.size());
  for (std::size_t k = 0; k < closed.p.size(); ++k) CHECK(std::fabs(closed.p[k] - trace.p[k]) < 1e-6);

  const auto vac = parse_dist(run({"dist", "--state", "coherent:0+0i", "--method", "closed", "--grid", "64"}).out);
  for (double p : vac.p) CHECK(p == doctest::Approx(0.15915494309189535).epsilon(1e-15));

  const auto oracle = run({"dist", "--state", "super:0=1,1=1", "--method", "oracle", "--grid", "16", "--dim", "8"});
  CHECK(oracle.code == 0);
  const auto od = parse_dist(oracle.out);
  const auto td = parse_dist(run({"dist", "--state", "super:0=1,1=1", "--grid", "17", "--dim", "8"}).out);
  CHECK(od.p[0] == doctest::Approx(td.p[0]).epsilon(1e-10));

  CHECK(run({"dist", "--state", "fock:1", "--method", "closed"}).code == 2);
  CHECK(run({"dist", "--state", "fock:1", "--method", "oracle", "--dim", "41"}).code == 3);
  CHECK(run({"dist", "--state", "fock:1", "--grid", "100"}).code == 2);
  CHECK(run({"dist", "--state", "fock:70", "--dim", "64"}).code == 2);
  CHECK(run({"dist", "--state", "coherent:9+0i", "--dim", "20", "--grid", "64"}).code == 3);
  CHECK(run({"dist", "--state", "coherent:21+0i", "--method", "closed"}).code == 3);
  CHECK(run({"dist", "--state", "nonsense"}).code == 2);
  CHECK(run({"dist"}).code == 2);
}

TEST_CASE("emitted distributions integrate to 1 within their recorded tolerance") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"dist", "--state", "phase:0.3:20", "--dim", "32"},
           {"dist", "--state", "coherent:0.8-1.1i", "--method", "closed"},
           {"dist", "--state", "fock:2", "--method", "oracle", "--grid", "8", "--dim", "10"}}) {
    const auto r = run(args);
    CHECK(r.code == 0);
    const auto d = parse_dist(r.out);
    const auto pos_i = d.comment.find("integral=");
    const auto pos_t = d.comment.find("tolerance=");
    REQUIRE(pos_i != std::string::npos);
    REQUIRE(pos_t != std::string::npos);
    const double integral = std::stod(d.comment.substr(pos_i + 9));
    const double tol = std::stod(d.comment.substr(pos_t + 10));
    CHECK(std::fabs(integral - 1.0) <= tol);
  }
}

TEST_CASE("file outputs are byte-identical across runs") {
  const auto p1 = tmp("opmat_a.csv"), p2 = tmp("opmat_b.csv");
  CHECK(run({"opmat", "--dim", "12", "--theta", "1.1", "--out", p1.string()}).code == 0);
  CHECK(run({"opmat", "--dim", "12", "--theta", "1.1", "--out", p2.string()}).code == 0);
  CHECK(slurp(p1).size() > 100);
  CHECK(slurp(p1) == slurp(p2));

  const auto d1 = tmp("dist_a.csv"), d2 = tmp("dist_b.csv");
  CHECK(run({"dist", "--state", "coherent:1.2+0.3i", "--dim", "40", "--out", d1.string()}).code == 0);
  CHECK(run({"dist", "--state", "coherent:1.2+0.3i", "--dim", "40", "--out", d2.string()}).code == 0);
  CHECK(slurp(d1) == slurp(d2));

  CHECK(run({"opmat", "--dim", "2", "--out", "/nonexistent-dir/x.csv"}).code == 2);
}

TEST_CASE("verify") {
  const auto comp = run({"verify", "--suite", "completeness", "--dim", "16"});
  CHECK(comp.code == 0);
  const auto j = nlohmann::json::parse(comp.out);
  CHECK(j["completeness"]["pass"].get<bool>());
  CHECK(j["completeness"]["max_defect"].get<double>() < 1e-12);
  for (const char* key : {"pass", "max_defect", "tolerance", "seconds"}) CHECK(j["completeness"].contains(key));

  const auto weak = run({"verify", "--suite", "weakequiv"});
  CHECK(weak.code == 0);
  CHECK(nlohmann::json::parse(weak.out)["weak_equivalence"]["max_defect"].get<double>() < 1e-11);

  const auto path = tmp("zm_report.json");
  const auto zm = run({"verify", "--suite", "zm", "--out", path.string()});
  CHECK(zm.code == 0);
  const auto zj = nlohmann::json::parse(slurp(path));
  CHECK(zj["zm_norm"]["report_only"].get<bool>());
  const auto& norms = zj["zm_norm"]["details"]["norms"];
  REQUIRE(!norms.empty());
  CHECK(norms[0].contains("direct"));
  CHECK(norms[0].contains("sqrt_I0"));
  CHECK(zj["unity_constant"]["details"]["weights"][0].contains("constant"));

  const auto strict = run({"verify", "--suite", "completeness", "--dim", "16", "--tol-override", "completeness=0"});
  CHECK(strict.code == 1);
  CHECK(nlohmann::json::parse(strict.out)["completeness"]["tolerance"].get<double>() == 0.0);

  CHECK(run({"verify", "--suite", "completeness", "--tol-override", "completeness"}).code == 2);
  CHECK(run({"verify", "--suite", "completeness", "--tol-override", "nosuch=1"}).code == 2);
  CHECK(run({"verify", "--suite", "completeness", "--tol-override", "completeness=abc"}).code == 2);
  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
  CHECK(run({"verify", "--suite", "completeness", "--dim", "70"}).code == 3);
}
