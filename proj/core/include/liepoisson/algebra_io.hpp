#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "liepoisson/lie_algebra.hpp"
#include "liepoisson/matrix.hpp"

namespace liepoisson {

/// On-disk form of a Lie algebra: JSON with rational-string coefficients so
/// exactness survives serialization. Bracket records require i < j and at
/// most one record per pair.
struct AlgebraDocument {
  struct Bracket {
    std::size_t i = 0;
    std::size_t j = 0;
    std::map<std::size_t, Rational> coeffs;  // basis index -> coefficient
  };

  std::string format_version = "1";
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<Bracket> brackets;
};

/// Validation/parsing failure with a human-readable location.
class DocumentError : public std::runtime_error {
public:
  explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

AlgebraDocument to_document(const LieAlgebra& g);

/// Validates indices and coefficients and verifies the Jacobi identity;
/// errors carry the offending record or basis triple.
LieAlgebra from_document(const AlgebraDocument& doc);

AlgebraDocument parse_document(const std::string& json_text);
std::string serialize_document(const AlgebraDocument& doc);

LieAlgebra load_algebra(const std::string& path);
void save_algebra(const LieAlgebra& g, const std::string& path);

/// Square/rectangular rational matrix as a JSON array of rows of rational
/// strings, e.g. [["0","1"],["-1","0"]].
RatMatrix load_matrix(const std::string& path);

}  // namespace liepoisson
