#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "lietriple/families.hpp"
#include "lietriple/serialize.hpp"

using namespace lietriple;
using io::Json;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string schema_path(const Json& j) {
  try {
    io::from_json(j);
  } catch (const io::SchemaError& e) {
    return e.path();
  }
  return "<accepted>";
}

Json a2_json() { return io::to_json(io::Document{lie_to_lya(affine2())}); }

}  // namespace

TEST_SUITE("serialize") {

TEST_CASE("every fixture round-trips byte for byte") {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(LIETRIPLE_FIXTURES)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    std::string text = slurp(entry.path());
    io::Document doc = io::parse(text);
    CHECK(io::render(doc) == text);
    CHECK(io::parse(io::render(doc)) == doc);
    ++seen;
  }
  CHECK(seen >= 28);
}

TEST_CASE("every kind round-trips structurally") {
  Rng rng(19);
  LYAlgebra a = lie_to_lya(affine2());
  Representation r = adjoint_rep(a);
  std::vector<io::Payload> payloads{
      a,
      io::LieDocument{so3(), std::pair{so3_reductive().h, so3_reductive().m}},
      leib2(),
      io::RepDocument{r, LYAlgebra(2)},
      Cochain(CochainSpace(SkewSignature(3, {{0, 1}}), 2, 2), Vector{1, Rational(-3, 2), 0, 4}),
      CochainQuadruple::zero(2, 2),
      strict_from_crossed(identity_crossed(a)),
      io::HomomorphismDocument{strict_from_crossed(identity_crossed(a)), strict_from_crossed(identity_crossed(a)),
                               identity_homomorphism(strict_from_crossed(identity_crossed(a)))},
      identity_crossed(a),
      identity_leibniz_crossed(leib2()),
      identity_reductive_crossed(so3_reductive()),
      random_extension(rng),
  };
  REQUIRE(payloads.size() == std::size(io::kKinds));
  for (std::size_t i = 0; i < payloads.size(); ++i) {
    io::Document doc{payloads[i]};
    CHECK(doc.kind() == io::kKinds[i]);
    CHECK(io::parse(io::render(doc)) == doc);
  }
}

TEST_CASE("keys come out sorted and rationals as strings") {
  std::string text = io::render(io::Document{Cochain(CochainSpace(SkewSignature(2, {{0, 1}}), 2, 1), Vector{Rational(3, 2)})});
  CHECK(text.find("\"3/2\"") != std::string::npos);
  CHECK(text.find("\"kind\"") < text.find("\"payload\""));
  CHECK(text.find("\"payload\"") < text.find("\"version\""));
}

TEST_CASE("integers are accepted as rational shorthand") {
  Json j = a2_json();
  j["payload"]["binary"] = Json::parse(R"([[[0,1,0],1],[[1,0,0],"-1"]])");
  io::Document doc = io::from_json(j);
  CHECK(std::get<LYAlgebra>(doc.payload).binary() == lie_to_lya(affine2()).binary());
}

TEST_CASE("schema errors carry the offending path") {
  Json j = a2_json();
  j.erase("version");
  CHECK(schema_path(j) == "$.version");

  j = a2_json();
  j["version"] = "2";
  CHECK(schema_path(j) == "$.version");

  j = a2_json();
  j["payload"]["extra"] = 1;
  CHECK(schema_path(j) == "$.payload.extra");

  j = a2_json();
  j["colour"] = "red";
  CHECK(schema_path(j) == "$.colour");

  j = a2_json();
  j["kind"] = "monoid";
  CHECK(schema_path(j) == "$.kind");

  j = a2_json();
  j["payload"]["binary"][0][1] = "1/0";
  CHECK(schema_path(j) == "$.payload.binary[0][1]");

  j = a2_json();
  j["payload"]["binary"][0][0][2] = 5;
  CHECK(schema_path(j) == "$.payload.binary[0][0][2]");

  j = a2_json();
  j["payload"]["binary"][0][0] = Json::parse("[0,1]");
  CHECK(schema_path(j) == "$.payload.binary[0][0]");

  j = a2_json();
  j["payload"]["binary"].push_back(j["payload"]["binary"][0]);
  CHECK(schema_path(j).rfind("$.payload.binary[", 0) == 0);

  j = a2_json();
  j["payload"]["dim"] = -1;
  CHECK(schema_path(j) == "$.payload.dim");
}

TEST_CASE("non-skew cochain coefficients are rejected") {
  Json j = io::to_json(io::Document{Cochain(CochainSpace(SkewSignature(2, {{0, 1}}), 2, 1), Vector{1})});
  j["payload"]["coefficients"] = Json::parse(R"([[[1,1,0],"1"]])");
  CHECK(schema_path(j).rfind("$.payload.coefficients[0]", 0) == 0);
  j["payload"]["coefficients"] = Json::parse(R"([[[1,0,0],"1"]])");
  io::Document doc = io::from_json(j);
  CHECK(std::get<Cochain>(doc.payload).coeffs() == Vector{-1});
}

TEST_CASE("malformed text and wrong kinds") {
  CHECK_THROWS_AS(io::parse("{"), InputError);
  CHECK_THROWS_AS(io::parse("[]"), InputError);
  io::Document doc = io::parse(io::render(io::Document{LYAlgebra(2)}));
  CHECK_THROWS_AS(io::expect<io::RepDocument>(doc, "x.json"), io::SchemaError);
  CHECK(io::expect<LYAlgebra>(doc, "x.json").dim() == 2);
  CHECK_THROWS_AS(io::load("/nonexistent/file.json"), InputError);
}

TEST_CASE("structures are validated on load where the schema demands it") {
  Json j = io::to_json(io::Document{io::LieDocument{affine2(), std::nullopt}});
  j["payload"]["bracket"] = Json::parse(R"([[[0,1,0],"1"]])");
  CHECK_THROWS_AS(io::from_json(j), InputError);
}

TEST_CASE("save and load") {
  auto path = std::filesystem::temp_directory_path() / "lietriple_serialize_test.json";
  io::Document doc{omni_lie(1)};
  io::save(path.string(), doc);
  CHECK(io::load(path.string()) == doc);
  std::filesystem::remove(path);
}

}
