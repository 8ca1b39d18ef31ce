#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "liepoisson/algebra_io.hpp"
#include "liepoisson/catalog.hpp"

using namespace liepoisson;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/liepoisson_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("document round-trip is the identity on structure constants") {
  ExFParams small;
  small.n = 1;
  small.A = RatMatrix{{Rational(2)}};
  small.c = Rational(5);
  std::vector<std::pair<std::string, LieAlgebra>> algebras = {
      {"h3", heisenberg(1)},
      {"h9", heisenberg(4)},
      {"aff_real", aff_real()},
      {"aff_complex", aff_complex()},
      {"exf_small", exF_algebra(small)},
      {"exf_paper", exF_paper_instance(ThetaTag::rational(Rational(1, 2)), Rational(1)).first},
  };
  for (const auto& [name, g] : algebras) {
    TempFile f("roundtrip_" + name + ".json");
    save_algebra(g, f.path);
    LieAlgebra loaded = load_algebra(f.path);
    CHECK(loaded == g);
    CHECK(loaded.basis_labels() == g.basis_labels());
  }
}

TEST_CASE("serialization is byte-stable") {
  LieAlgebra g = heisenberg(2);
  CHECK(serialize_document(to_document(g)) == serialize_document(to_document(g)));
}

TEST_CASE("a minimal hand-written document loads as h_3") {
  const char* text = R"({
    "format_version": "1",
    "dim": 3,
    "basis": ["e0", "e1", "e2"],
    "brackets": [ {"i": 1, "j": 2, "coeffs": {"0": "1"}} ]
  })";
  LieAlgebra g = from_document(parse_document(text));
  CHECK(g == heisenberg(1));
}

TEST_CASE("document validation errors carry positions") {
  CHECK_THROWS_WITH_AS(
      from_document(parse_document(
          R"({"format_version":"1","dim":2,"basis":["a","b"],"brackets":[{"i":1,"j":1,"coeffs":{}}]})")),
      doctest::Contains("brackets[0]"), DocumentError);

  CHECK_THROWS_WITH_AS(
      from_document(parse_document(
          R"({"format_version":"1","dim":2,"basis":["a","b"],"brackets":[{"i":0,"j":5,"coeffs":{}}]})")),
      doctest::Contains("out of range"), DocumentError);

  CHECK_THROWS_WITH_AS(
      from_document(parse_document(
          R"({"format_version":"1","dim":2,"basis":["a","b"],"brackets":[{"i":0,"j":1,"coeffs":{"0":"1/0"}}]})")),
      doctest::Contains("coeffs"), DocumentError);

  CHECK_THROWS_AS(parse_document("{ not json"), DocumentError);
  CHECK_THROWS_WITH_AS(
      from_document(parse_document(R"({"format_version":"1","dim":2,"basis":["a"],"brackets":[]})")),
      doctest::Contains("basis"), DocumentError);
}

TEST_CASE("Jacobi-violating documents are rejected with the triple") {
  // perturbed cyclic algebra: [x,y] = z but [y,z] = y, so
  // [[y,z],x] = [y,x] = -z survives in the Jacobi sum
  const char* text = R"({
    "format_version": "1",
    "dim": 3,
    "basis": ["x", "y", "z"],
    "brackets": [
      {"i": 0, "j": 1, "coeffs": {"2": "1"}},
      {"i": 1, "j": 2, "coeffs": {"1": "1"}},
      {"i": 0, "j": 2, "coeffs": {"1": "-1"}}
    ]
  })";
  CHECK_THROWS_WITH_AS(from_document(parse_document(text)),
                       doctest::Contains("Jacobi identity fails at basis triple (0, 1, 2)"),
                       DocumentError);
}

TEST_CASE("duplicate bracket records are rejected") {
  const char* text = R"({
    "format_version": "1",
    "dim": 3,
    "basis": ["e0", "e1", "e2"],
    "brackets": [
      {"i": 1, "j": 2, "coeffs": {"0": "1"}},
      {"i": 1, "j": 2, "coeffs": {"0": "2"}}
    ]
  })";
  CHECK_THROWS_WITH_AS(from_document(parse_document(text)), doctest::Contains("duplicate"),
                       DocumentError);
}

TEST_CASE("save to an unwritable location fails loudly") {
  CHECK_THROWS_AS(save_algebra(heisenberg(1), "/nonexistent_dir/out.json"), DocumentError);
  CHECK_THROWS_AS(load_algebra("/nonexistent_dir/in.json"), DocumentError);
}

TEST_CASE("matrix files") {
  TempFile f("matrix.json");
  {
    std::ofstream out(f.path);
    out << R"([["0","1"],["-1","0"]])";
  }
  RatMatrix m = load_matrix(f.path);
  CHECK(m == rotation_block_j());

  TempFile bad("matrix_bad.json");
  {
    std::ofstream out(bad.path);
    out << R"([["0","1"],["-1"]])";
  }
  CHECK_THROWS_AS(load_matrix(bad.path), DocumentError);
}
