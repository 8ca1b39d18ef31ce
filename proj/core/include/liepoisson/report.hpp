#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liepoisson/casimir.hpp"
#include "liepoisson/catalog.hpp"
#include "liepoisson/lie_algebra.hpp"
#include "liepoisson/spectral.hpp"

namespace liepoisson {

enum class CheckVerdict { pass, fail, unknown };

struct ChecklistItem {
  std::string condition;
  CheckVerdict verdict = CheckVerdict::unknown;
  std::string detail;
};

enum class OverallVerdict { frobenius_type_I, factor_candidate, not_factor, inconclusive };

struct AnalysisOptions {
  unsigned max_casimir_degree = 4;
  std::uint64_t seed = 0;
  std::optional<ExFParams> spectral_params;
  std::string name;  // catalog identity when known; used for literature notes
};

struct AnalysisReport {
  std::string name;
  std::size_t dim = 0;
  std::string constants_hash;
  bool solvable = false;
  bool nilpotent = false;
  std::size_t center_dim = 0;
  std::size_t generic_rank = 0;
  std::size_t index = 0;
  bool frobenius = false;  // index == 0
  CasimirVerdict casimir;
  std::optional<std::string> parity_note;
  std::vector<ChecklistItem> factor_checklist;
  std::optional<SpectralReport> spectral;
  OverallVerdict overall = OverallVerdict::inconclusive;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;
};

/// FNV-1a hash of the canonical structure-constant serialization, as 16 hex
/// digits; identifies an algebra independently of its labels.
std::string constants_hash(const LieAlgebra& g);

/// Necessary conditions for the regular representation to be a factor, in
/// the fixed order center -> Casimirs -> index, followed by the undecidable
/// open-dense-quasi-orbit hypothesis (always `unknown`). All three computed
/// conditions passing yields only a factor *candidate*.
std::vector<ChecklistItem> factoriality_checklist(const LieAlgebra& g, unsigned d,
                                                  std::uint64_t seed);

AnalysisReport analyze(const LieAlgebra& g, const AnalysisOptions& options);

std::string render_text(const AnalysisReport& report);
/// Machine-readable JSON (schema-stable, byte-deterministic for fixed seed).
std::string render_machine(const AnalysisReport& report);

std::string render_text(const SpectralReport& report);
std::string render_machine(const SpectralReport& report);

std::string to_string(CheckVerdict v);
std::string to_string(OverallVerdict v);

}  // namespace liepoisson
