#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "csym/cli.hpp"
#include "csym/model_io.hpp"
#include "golden.hpp"
#include "support.hpp"

using namespace csym;
using json = nlohmann::json;

namespace {

const std::string kData = CSYM_DATA_DIR;

struct Result {
  int status;
  std::string out;
  std::string err;
  json j() const { return json::parse(out); }
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

Error model_error(const std::string& text) {
  try {
    parse_model_file(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("model file was accepted: " << text);
  return Error(Errc::Usage, "");
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("csym_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("model files") {
  CHECK(parse_model_file("dim 2") == torus_model(2));
  CHECK(parse_model_file("# comment\ndim 4\nd f3 = -1*f12   # trailing\n") == iwasawa_model());
  CHECK(load_model(kData + "/iwasawa4.model") == iwasawa_model());
  CHECK(load_model(kData + "/nakamura4.model") == nakamura_model(Rational(1, 2)));
  CHECK(load_model(kData + "/nakamura4.model", {{{"t", Rational(1, 3)}}, std::nullopt}) == nakamura_model(Rational(1, 3)));
  CHECK(load_model(kData + "/torus2.model") == torus_model(2));
  CHECK(parse_model_file("dim 2\nmu = 3/2").mu() == Rational(3, 2));
}

TEST_CASE("builtin specs") {
  CHECK(load_model("builtin:iwasawa4") == iwasawa_model());
  CHECK(load_model("builtin:nakamura4:t=1/2") == nakamura_model(Rational(1, 2)));
  CHECK(load_model("builtin:torus:m=4") == torus_model(4));
  const Model heavy = load_model("builtin:torus:m=2", {{}, Rational(5)});
  CHECK(heavy.mu() == Rational(5));
  CHECK(heavy.is_builtin());
  CHECK_THROWS_AS(load_model("builtin:nakamura4:t"), Error);
}

TEST_CASE("model file errors are located") {
  Error e = model_error("dim 2\nd f2 = 1*w12");
  CHECK(e.code() == Errc::NotIntegrable);

  e = model_error("dim 2\nd f2 = 1*f1 +");
  CHECK(e.code() == Errc::SyntaxError);
  CHECK(e.where().line == 2);
  CHECK(e.where().column >= 8);

  e = model_error("dim 2\n\nfrobnicate 3");
  CHECK(e.code() == Errc::SyntaxError);
  CHECK(e.where().line == 3);
  CHECK(e.where().column == 1);

  e = model_error("d f1 = 0\ndim 2");
  CHECK(e.code() == Errc::SyntaxError);
  CHECK(e.where().line == 1);

  e = model_error("dim 2\nd f5 = f12");
  CHECK(e.code() == Errc::IndexOutOfRange);
  CHECK(e.where().line == 2);
  CHECK(e.where().column == 3);

  e = model_error("dim 2\nd f2 = f12\nd f2 = 0");
  CHECK(e.code() == Errc::SyntaxError);
  CHECK(e.where().line == 3);

  e = model_error("dim 2\nmu = -1");
  CHECK(e.code() == Errc::InvalidModel);

  e = model_error("dim 4\nparam t = 1\nd f2 = -1/(1 - t*t~)*f12");
  CHECK(e.code() == Errc::SingularParameter);
  CHECK(e.where().line == 3);

  e = model_error("dim 2\nd f2 = 2*q*f12");
  CHECK(e.code() == Errc::UnboundParameter);
}

TEST_CASE("model files round-trip") {
  std::mt19937 rng(support::kSeed);
  std::vector<Model> models{iwasawa_model(), nakamura_model(Rational(1, 2)), nakamura_model(GaussRat(0, Rational(1, 3))),
                            torus_model(3).with_mu(Rational(7, 2))};
  std::uniform_int_distribution<int> dim(2, 5);
  for (int c = 0; c < support::kCases; ++c) models.push_back(support::random_nilpotent_model(rng, dim(rng)));
  for (const auto& model : models) {
    const std::string text = format_model_file(model);
    const Model back = parse_model_file(text);
    CHECK(back == model);
    CHECK(format_model_file(back) == text);
  }
}

TEST_CASE("ddbar subcommand") {
  Result r = cli({"ddbar", "--model", "builtin:nakamura4:t=1/2"});
  CHECK(r.status == 0);
  CHECK(r.out == "holds\n");
  r = cli({"ddbar", "--model", "builtin:iwasawa4", "--format", "json"});
  CHECK(r.status == 0);
  CHECK(r.j()["verdict"] == "fails");
  CHECK(r.j()["witness"] == json::array({1, 0}));
  CHECK(r.j()["caveat"] == false);
  r = cli({"ddbar", "--model", kData + "/torus2.model", "--format", "json"});
  CHECK(r.j()["verdict"] == "holds");
  CHECK(r.j()["caveat"] == true);
}

TEST_CASE("cohomology subcommand") {
  Result r = cli({"cohomology", "--model", "builtin:iwasawa4", "--theory", "bc", "--bidegree", "2,0", "--format", "json"});
  REQUIRE(r.status == 0);
  const json j = r.j();
  CHECK(j["theory"] == "bc");
  CHECK(j["p"] == 2);
  CHECK(j["q"] == 0);
  CHECK(j["dim"] == 5);
  CHECK(j["basis"].size() == 5);
  r = cli({"cohomology", "--model", "builtin:iwasawa4", "--theory", "derham", "--bidegree", "2", "--format", "json"});
  CHECK(r.j()["k"] == 2);
  CHECK(r.j()["dim"] == 17);
  r = cli({"cohomology", "--model", "builtin:nakamura4:t=1/2", "--theory", "dolbeault", "--format", "json"});
  CHECK(r.j()["table"][1] == json::array({2, 6, 8, 6, 2}));
  r = cli({"cohomology", "--model", "builtin:iwasawa4", "--theory", "derham"});
  CHECK(r.out == "b_k: 1 6 17 30 36 30 17 6 1\n");
}

TEST_CASE("symplectic-scan subcommand") {
  Result r = cli({"symplectic-scan", "--model", "builtin:iwasawa4", "--param", "a1=0", "--param", "a2=1", "--param",
                  "a3=0", "--param", "a4=0", "--param", "a5=1", "--format", "json"});
  REQUIRE(r.status == 0);
  const json j = r.j();
  CHECK(j["closed_20"].size() == 5);
  CHECK(j["polynomial"] == parse_poly("-2*a2*a5 + 2*a3*a4").to_string());
  CHECK(j["not_d_closed_dim"] == 1);
  CHECK(j["evaluation"]["value"] == "-2");
  CHECK(j["evaluation"]["symplectic"] == true);
  r = cli({"symplectic-scan", "--model", "builtin:nakamura4:t=1/2", "--sigma", "f14 + f23", "--format", "json"});
  CHECK(r.j()["sigma"]["normalization"] == "4");
  CHECK(r.j()["sigma"]["normalized"] == false);
}

TEST_CASE("bbf subcommand reproduces the golden Gram matrix") {
  const Result r = cli({"bbf", "--model", "builtin:nakamura4:t=1/2", "--sigma", "1/2*f14+1*f23", "--basis",
                        kData + "/nakamura4_basis.txt", "--format", "json"});
  REQUIRE(r.status == 0);
  const json j = r.j();
  const auto g = golden::nakamura_gram();
  REQUIRE(j["gram"].size() == 10);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t k = 0; k < 10; ++k) CHECK(j["gram"][i][k] == g(i, k).to_string());
  CHECK(j["rank"] == 8);
  CHECK(j["kernel"].size() == 2);
  CHECK(j["signature"]["coordinate"] == json::array({4, 4, 2}));
  CHECK(j["signature"]["h11_coordinate"] == json::array({3, 3, 0}));
  CHECK(j["predicates"]["smooth"] == false);
  CHECK(j["predicates"]["irreducible"] == true);
  CHECK(j["ddbar_applicable"] == true);
  CHECK(j["watermark"].is_null());
}

TEST_CASE("bbf subcommand guards") {
  Result r = cli({"bbf", "--model", "builtin:nakamura4:t=1/2", "--sigma", "f14 + f23", "--format", "json"});
  CHECK(r.status == 2);
  CHECK(r.j()["error"]["code"] == "UnnormalizedSigma");
  r = cli({"bbf", "--model", "builtin:nakamura4:t=1/2", "--sigma", "f14 + f23", "--allow-unnormalized", "--format", "json"});
  CHECK(r.status == 0);
  CHECK(r.j()["watermark"].is_string());
  r = cli({"bbf", "--model", "builtin:iwasawa4", "--sigma", "f34"});
  CHECK(r.status == 2);
  CHECK(r.err.find("error [NotSymplectic]") == 0);
  const std::string bad = temp_file("bad_basis.txt", "f14\nf23 +\n");
  r = cli({"bbf", "--model", "builtin:nakamura4:t=1/2", "--sigma", "1/2*f14 + f23", "--basis", bad, "--format", "json"});
  CHECK(r.j()["error"]["code"] == "SyntaxError");
  CHECK(r.j()["error"]["location"]["line"] == 2);
}

TEST_CASE("lefschetz subcommand") {
  Result r = cli({"lefschetz", "--model", "builtin:iwasawa4", "--tau", "f13 + f24", "--power", "1", "--theory", "bc",
                  "--source", "1,1", "--format", "json"});
  REQUIRE(r.status == 0);
  CHECK(r.j()["verdict"] == "injective_only");
  CHECK(r.j()["cokernel_dim"] == 3);
  r = cli({"lefschetz", "--model", "builtin:iwasawa4", "--tau", "w13 + w24", "--source", "1,1", "--format", "json"});
  CHECK(r.j()["verdict"] == "kernel");
  CHECK(r.j()["kernel"].size() == 4);
  r = cli({"lefschetz", "--model", "builtin:iwasawa4", "--tau", "f34", "--source", "1,1"});
  CHECK(r.status == 2);
}

TEST_CASE("errors and usage") {
  Result r = cli({"frobnicate"});
  CHECK(r.status == 1);
  r = cli({"ddbar"});
  CHECK(r.status == 1);
  r = cli({"ddbar", "--model", "builtin:kodaira", "--format", "json"});
  CHECK(r.status == 2);
  CHECK(r.j()["error"]["code"] == "UnknownModel");
  CHECK(r.j()["error"]["location"].is_null());
  const std::string broken = temp_file("broken.model", "dim 2\nd f2 = 1*w12\n");
  r = cli({"validate", "--model", broken, "--format", "json"});
  CHECK(r.status == 2);
  CHECK(r.j()["error"]["code"] == "NotIntegrable");
  CHECK(r.j()["error"]["location"]["line"] == 2);
  r = cli({"validate", "--model", broken});
  CHECK(r.err.find("error [NotIntegrable] at 2:") == 0);
  r = cli({"validate", "--model", "builtin:nakamura4:t=1"});
  CHECK(r.status == 2);
  CHECK(r.err.find("SingularParameter") != std::string::npos);
  r = cli({"validate", "--model", "builtin:torus:m=2", "--mu", "-1"});
  CHECK(r.status == 2);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> args{"report", "--model", "builtin:nakamura4:t=1/2", "--sigma", "1/2*f14 + f23",
                                      "--basis", kData + "/nakamura4_basis.txt", "--format", "json"};
  const Result a = cli(args), b = cli(args);
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  const json j = a.j();
  CHECK(j["ddbar"]["verdict"] == "holds");
  CHECK(j["serre_duality"] == true);
  CHECK(j["cohomology"]["de_rham"][2] == 10);
  CHECK(j["bbf"]["rank"] == 8);
  const Result text = cli({"report", "--model", "builtin:iwasawa4", "--sigma", "1/2*f14 + f23"});
  CHECK(text.status == 0);
  CHECK(text.out.find("ddbar-lemma fails; theorems not applicable") != std::string::npos);
}
