#include "liepoisson/algebra_io.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace liepoisson {

namespace {

using nlohmann::json;

Rational parse_coeff(const json& value, const std::string& where) {
  if (!value.is_string())
    throw DocumentError(where + ": coefficient must be a rational string");
  try {
    return Rational::parse(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw DocumentError(where + ": " + e.what());
  }
}

}  // namespace

AlgebraDocument to_document(const LieAlgebra& g) {
  AlgebraDocument doc;
  doc.dim = g.dim();
  doc.basis = g.basis_labels();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      AlgebraDocument::Bracket b;
      b.i = i;
      b.j = j;
      for (std::size_t k = 0; k < g.dim(); ++k) {
        const Rational c = g.structure_constant(i, j, k);
        if (!c.is_zero()) b.coeffs.emplace(k, c);
      }
      if (!b.coeffs.empty()) doc.brackets.push_back(std::move(b));
    }
  }
  return doc;
}

LieAlgebra from_document(const AlgebraDocument& doc) {
  if (doc.format_version != "1")
    throw DocumentError("unsupported format_version \"" + doc.format_version + "\"");
  if (doc.basis.size() != doc.dim)
    throw DocumentError("basis has " + std::to_string(doc.basis.size()) + " labels but dim = " +
                        std::to_string(doc.dim));
  std::vector<LieAlgebra::BracketEntry> entries;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t r = 0; r < doc.brackets.size(); ++r) {
    const auto& b = doc.brackets[r];
    const std::string where = "brackets[" + std::to_string(r) + "]";
    if (b.i >= b.j)
      throw DocumentError(where + ": requires i < j (antisymmetric storage), got i = " +
                          std::to_string(b.i) + ", j = " + std::to_string(b.j));
    if (b.j >= doc.dim)
      throw DocumentError(where + ": index " + std::to_string(b.j) + " out of range for dim " +
                          std::to_string(doc.dim));
    if (!seen.emplace(b.i, b.j).second)
      throw DocumentError(where + ": duplicate record for pair (" + std::to_string(b.i) + ", " +
                          std::to_string(b.j) + ")");
    std::vector<Rational> coeffs(doc.dim, Rational(0));
    for (const auto& [k, c] : b.coeffs) {
      if (k >= doc.dim)
        throw DocumentError(where + ": coefficient index " + std::to_string(k) +
                            " out of range for dim " + std::to_string(doc.dim));
      coeffs[k] = c;
    }
    entries.push_back({b.i, b.j, std::move(coeffs)});
  }
  LieAlgebra g(doc.dim, doc.basis, entries, LieAlgebra::DeferValidation{});
  auto violations = g.jacobi_violations();
  if (!violations.empty()) {
    auto [i, j, k] = violations.front();
    std::ostringstream os;
    os << "Jacobi identity fails at basis triple (" << i << ", " << j << ", " << k << ") = ("
       << doc.basis[i] << ", " << doc.basis[j] << ", " << doc.basis[k] << ")";
    throw DocumentError(os.str());
  }
  return g;
}

AlgebraDocument parse_document(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw DocumentError("document root must be a JSON object");

  AlgebraDocument doc;
  if (!j.contains("format_version") || !j["format_version"].is_string())
    throw DocumentError("missing string field \"format_version\"");
  doc.format_version = j["format_version"].get<std::string>();
  if (!j.contains("dim") || !j["dim"].is_number_unsigned())
    throw DocumentError("missing non-negative integer field \"dim\"");
  doc.dim = j["dim"].get<std::size_t>();
  if (!j.contains("basis") || !j["basis"].is_array())
    throw DocumentError("missing array field \"basis\"");
  for (const auto& label : j["basis"]) {
    if (!label.is_string()) throw DocumentError("basis labels must be strings");
    doc.basis.push_back(label.get<std::string>());
  }
  if (!j.contains("brackets") || !j["brackets"].is_array())
    throw DocumentError("missing array field \"brackets\"");
  std::size_t r = 0;
  for (const auto& rec : j["brackets"]) {
    const std::string where = "brackets[" + std::to_string(r) + "]";
    if (!rec.is_object() || !rec.contains("i") || !rec.contains("j") || !rec.contains("coeffs"))
      throw DocumentError(where + ": each record needs fields i, j, coeffs");
    if (!rec["i"].is_number_unsigned() || !rec["j"].is_number_unsigned())
      throw DocumentError(where + ": i and j must be non-negative integers");
    AlgebraDocument::Bracket b;
    b.i = rec["i"].get<std::size_t>();
    b.j = rec["j"].get<std::size_t>();
    if (!rec["coeffs"].is_object())
      throw DocumentError(where + ": coeffs must be an object of index -> rational string");
    for (const auto& [key, value] : rec["coeffs"].items()) {
      std::size_t k = 0;
      try {
        std::size_t pos = 0;
        k = std::stoul(key, &pos);
        if (pos != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw DocumentError(where + ": coefficient key \"" + key + "\" is not an index");
      }
      b.coeffs[k] = parse_coeff(value, where + ".coeffs[\"" + key + "\"]");
    }
    doc.brackets.push_back(std::move(b));
    ++r;
  }
  return doc;
}

std::string serialize_document(const AlgebraDocument& doc) {
  json j;
  j["format_version"] = doc.format_version;
  j["dim"] = doc.dim;
  j["basis"] = doc.basis;
  json brackets = json::array();
  // records sorted by (i, j); to_document emits them in that order already
  for (const auto& b : doc.brackets) {
    json rec;
    rec["i"] = b.i;
    rec["j"] = b.j;
    json coeffs = json::object();
    for (const auto& [k, c] : b.coeffs) coeffs[std::to_string(k)] = c.str();
    rec["coeffs"] = std::move(coeffs);
    brackets.push_back(std::move(rec));
  }
  j["brackets"] = std::move(brackets);
  return j.dump(2) + "\n";
}

LieAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open \"" + path + "\" for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_document(parse_document(buffer.str()));
}

void save_algebra(const LieAlgebra& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DocumentError("cannot open \"" + path + "\" for writing");
  out << serialize_document(to_document(g));
  if (!out) throw DocumentError("write to \"" + path + "\" failed");
}

RatMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open \"" + path + "\" for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  json j;
  try {
    j = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw DocumentError("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw DocumentError("matrix rows must be non-empty arrays");
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw DocumentError("matrix row " + std::to_string(i) + " has inconsistent length");
    for (std::size_t c = 0; c < cols; ++c)
      m(i, c) = parse_coeff(j[i][c], "row " + std::to_string(i) + ", column " + std::to_string(c));
  }
  return m;
}

}  // namespace liepoisson
