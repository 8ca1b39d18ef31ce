#include "liepoisson/report.hpp"

#include <json.hpp>

#include <sstream>

#include "liepoisson/poisson.hpp"

namespace liepoisson {

namespace {

using nlohmann::json;

std::string hex16(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace

std::string constants_hash(const LieAlgebra& g) {
  std::ostringstream os;
  os << "dim=" << g.dim() << ";";
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      for (std::size_t k = 0; k < g.dim(); ++k) {
        const Rational c = g.structure_constant(i, j, k);
        if (!c.is_zero()) os << i << "," << j << "," << k << "=" << c << ";";
      }
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a 64
  for (unsigned char byte : os.str()) {
    h ^= byte;
    h *= 1099511628211ULL;
  }
  return hex16(h);
}

namespace {

struct ChecklistInputs {
  std::size_t center_dim;
  CasimirVerdict casimir;
  std::size_t index;
};

std::vector<ChecklistItem> build_checklist(const ChecklistInputs& in) {
  std::vector<ChecklistItem> items;
  {
    ChecklistItem item;
    item.condition = "center trivial [necessary]";
    item.verdict = in.center_dim == 0 ? CheckVerdict::pass : CheckVerdict::fail;
    item.detail = "dim center = " + std::to_string(in.center_dim);
    items.push_back(std::move(item));
  }
  {
    ChecklistItem item;
    item.condition = "no nonconstant polynomial Casimirs up to degree " +
                     std::to_string(in.casimir.degree_bound) + " [necessary]";
    if (in.casimir.all_constant) {
      item.verdict = CheckVerdict::pass;
      item.detail = "Casimir basis empty up to degree " + std::to_string(in.casimir.degree_bound);
    } else {
      item.verdict = CheckVerdict::fail;
      item.detail = "nonconstant Casimir witness: " + in.casimir.witness->str();
    }
    items.push_back(std::move(item));
  }
  {
    ChecklistItem item;
    item.condition = "index >= 1 [necessary]";
    if (in.index >= 1) {
      item.verdict = CheckVerdict::pass;
      item.detail = "index = " + std::to_string(in.index);
    } else {
      item.verdict = CheckVerdict::fail;
      item.detail =
          "index = 0: open coadjoint orbits exist and the regular representation generates a "
          "type I von Neumann algebra; a factor would require a unique simply connected open "
          "dense coadjoint orbit while the count of such orbits is even, so the regular "
          "representation is not a factor";
    }
    items.push_back(std::move(item));
  }
  {
    ChecklistItem item;
    item.condition = "open dense quasi-orbit hypothesis";
    item.verdict = CheckVerdict::unknown;
    item.detail =
        "open dense quasi-orbit hypothesis not decidable by this tool; necessary conditions "
        "passed does not confirm a factor";
    items.push_back(std::move(item));
  }
  return items;
}

}  // namespace

std::vector<ChecklistItem> factoriality_checklist(const LieAlgebra& g, unsigned d,
                                                  std::uint64_t seed) {
  ChecklistInputs in{center(g).dim(), casimirs_constant_verdict(g, d, seed), lie_index(g, seed)};
  return build_checklist(in);
}

AnalysisReport analyze(const LieAlgebra& g, const AnalysisOptions& options) {
  AnalysisReport r;
  r.name = options.name.empty() ? "algebra" : options.name;
  r.dim = g.dim();
  r.constants_hash = constants_hash(g);
  r.seed = options.seed;
  r.solvable = is_solvable(g);
  r.nilpotent = is_nilpotent(g);
  r.center_dim = center(g).dim();
  r.generic_rank = generic_rank(g, options.seed);
  r.index = g.dim() - r.generic_rank;
  r.frobenius = (r.index == 0);
  r.casimir = casimirs_constant_verdict(g, options.max_casimir_degree, options.seed);
  r.factor_checklist = build_checklist(ChecklistInputs{r.center_dim, r.casimir, r.index});
  if (options.spectral_params.has_value()) {
    r.spectral = type_one_obstruction(*options.spectral_params);
  }

  if (r.frobenius) {
    bool is_exf = options.spectral_params.has_value() && !options.spectral_params->c.is_zero();
    if (r.name.rfind("aff_real", 0) == 0) {
      r.parity_note =
          "known result (not computed here): this group has exactly two open coadjoint orbits, "
          "consistent with the evenness of the open-orbit count";
    } else if (is_exf) {
      r.parity_note =
          "known result (not computed here): for c != 0 this family has exactly two open "
          "coadjoint orbits, consistent with the evenness of the open-orbit count";
    } else {
      r.parity_note =
          "known result (not computed here): the number of open coadjoint orbits of a "
          "1-connected solvable Lie group is even";
    }
  }

  if (!r.solvable) {
    r.overall = OverallVerdict::inconclusive;
    r.notes.push_back(
        "the algebra is not solvable; the Frobenius/factor verdict logic applies to solvable "
        "Lie algebras only, so the overall verdict is inconclusive");
  } else if (r.frobenius) {
    r.overall = OverallVerdict::frobenius_type_I;
    r.notes.push_back(
        "index 0: open coadjoint orbits exist and the regular representation generates a type I "
        "von Neumann algebra (known result for 1-connected solvable Lie groups); by the evenness "
        "of the simply-connected-open-orbit count it is not a factor, so the standard hyperfinite "
        "type II_infinity classification of factor regular representations does not apply here");
    if (r.spectral.has_value() && r.spectral->type1_obstruction) {
      r.notes.push_back(
          "spectral obstruction: S_A is not closed, so the group itself is not type I although "
          "its group von Neumann algebra is type I");
    }
  } else if (r.center_dim > 0 || !r.casimir.all_constant) {
    r.overall = OverallVerdict::not_factor;
  } else {
    r.overall = OverallVerdict::factor_candidate;
    r.notes.push_back(
        "all computed necessary conditions hold; open dense quasi-orbit hypothesis not decidable "
        "by this tool, so this is a candidate, never a confirmation");
    r.notes.push_back(
        "known results (not computed here): a factor regular representation of a 1-connected "
        "solvable Lie group is standard hyperfinite type II_infinity and forces the group "
        "C*-algebra to be primitive");
  }
  return r;
}

namespace {

json poly_to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json term;
    term["exps"] = m;
    term["coeff"] = c.str();
    terms.push_back(std::move(term));
  }
  return terms;
}

json imag_square_to_json(const ImagSquare& s) {
  json v;
  if (const auto* r = std::get_if<Rational>(&s.value)) {
    v["type"] = "rational";
    v["value"] = r->str();
  } else if (const auto* iv = std::get_if<RootInterval>(&s.value)) {
    v["type"] = "interval";
    v["lo"] = iv->lo.str();
    v["hi"] = iv->hi.str();
    v["approx"] = decimal_string((iv->lo + iv->hi) / Rational(2), 6);
  } else {
    v["type"] = "symbolic";
    v["name"] = std::get<SymbolicValue>(s.value).name;
  }
  json out;
  out["value"] = std::move(v);
  out["multiplicity"] = s.multiplicity;
  return out;
}

json spectral_to_json(const SpectralReport& rep) {
  json j;
  if (rep.char_poly.has_value()) {
    json coeffs = json::array();
    for (const auto& c : rep.char_poly->coeffs()) coeffs.push_back(c.str());
    j["char_poly"] = std::move(coeffs);
  } else {
    j["char_poly"] = nullptr;
  }
  j["char_poly_display"] = rep.char_poly_display;
  json squares = json::array();
  for (const auto& s : rep.imag_part_squares) squares.push_back(imag_square_to_json(s));
  j["imag_part_squares"] = std::move(squares);
  j["sA_generators"] = rep.sA_generators;
  j["closedness"] = to_string(rep.closedness);
  j["confidence"]["exact"] = rep.confidence.exact;
  j["confidence"]["tolerance"] = rep.confidence.tolerance.str();
  j["type1_obstruction"] = rep.type1_obstruction;
  j["quotient_note"] = rep.quotient_note;
  return j;
}

std::string imag_square_display(const ImagSquare& s) {
  std::ostringstream os;
  if (const auto* r = std::get_if<Rational>(&s.value)) {
    os << r->str();
  } else if (const auto* iv = std::get_if<RootInterval>(&s.value)) {
    os << "~" << decimal_string((iv->lo + iv->hi) / Rational(2), 6) << " in (" << iv->lo << ", "
       << iv->hi << ")";
  } else {
    os << std::get<SymbolicValue>(s.value).name;
  }
  if (s.multiplicity > 1) os << " (multiplicity " << s.multiplicity << ")";
  return os.str();
}

}  // namespace

std::string render_text(const SpectralReport& rep) {
  std::ostringstream os;
  os << "spectral report\n";
  os << "  characteristic polynomial: " << rep.char_poly_display << "\n";
  os << "  squares of imaginary parts of purely imaginary eigenvalues:";
  if (rep.imag_part_squares.empty()) os << " none";
  os << "\n";
  for (const auto& s : rep.imag_part_squares) os << "    " << imag_square_display(s) << "\n";
  os << "  S_A generators:";
  if (rep.sA_generators.empty())
    os << " none (S_A = {0})";
  else
    for (const auto& g : rep.sA_generators) os << " " << g;
  os << "\n";
  os << "  S_A closedness: " << to_string(rep.closedness) << " ("
     << (rep.confidence.exact ? "exact" : "numeric, tolerance " + rep.confidence.tolerance.str())
     << ")\n";
  os << "  type I obstruction: " << (rep.type1_obstruction ? "yes" : "no") << "\n";
  os << "  note: " << rep.quotient_note << "\n";
  return os.str();
}

std::string render_machine(const SpectralReport& rep) {
  return spectral_to_json(rep).dump(2) + "\n";
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "== analysis: " << r.name << " (dim " << r.dim << ", hash " << r.constants_hash
     << ", seed " << r.seed << ") ==\n";
  os << "solvable: " << (r.solvable ? "yes" : "no") << "   nilpotent: "
     << (r.nilpotent ? "yes" : "no") << "   center dim: " << r.center_dim << "\n";
  os << "generic Poisson rank: " << r.generic_rank << "   index: " << r.index
     << "   open coadjoint orbits (Frobenius): " << (r.frobenius ? "yes" : "no") << "\n";
  os << "polynomial Casimirs up to degree " << r.casimir.degree_bound << ": ";
  if (r.casimir.all_constant)
    os << "all constant (empty basis)\n";
  else
    os << "nonconstant found, witness " << r.casimir.witness->str() << "\n";
  if (r.parity_note.has_value()) os << "parity note: " << *r.parity_note << "\n";
  os << "factoriality necessary conditions:\n";
  for (const auto& item : r.factor_checklist) {
    os << "  [" << to_string(item.verdict) << "] " << item.condition << ": " << item.detail
       << "\n";
  }
  if (r.spectral.has_value()) os << render_text(*r.spectral);
  os << "overall: " << to_string(r.overall) << "\n";
  for (const auto& note : r.notes) os << "note: " << note << "\n";
  return os.str();
}

std::string render_machine(const AnalysisReport& r) {
  json j;
  j["format_version"] = "1";
  j["algebra"]["name"] = r.name;
  j["algebra"]["dim"] = r.dim;
  j["algebra"]["constants_hash"] = r.constants_hash;
  j["solvable"] = r.solvable;
  j["nilpotent"] = r.nilpotent;
  j["center_dim"] = r.center_dim;
  j["generic_rank"] = r.generic_rank;
  j["index"] = r.index;
  j["frobenius"] = r.frobenius;
  j["casimir"]["degree_bound"] = r.casimir.degree_bound;
  j["casimir"]["all_constant"] = r.casimir.all_constant;
  j["casimir"]["witness"] =
      r.casimir.witness.has_value() ? poly_to_json(*r.casimir.witness) : json(nullptr);
  j["parity_note"] = r.parity_note.has_value() ? json(*r.parity_note) : json(nullptr);
  json checklist = json::array();
  for (const auto& item : r.factor_checklist) {
    json c;
    c["condition"] = item.condition;
    c["verdict"] = to_string(item.verdict);
    c["detail"] = item.detail;
    checklist.push_back(std::move(c));
  }
  j["factor_checklist"] = std::move(checklist);
  j["spectral"] = r.spectral.has_value() ? spectral_to_json(*r.spectral) : json(nullptr);
  j["overall"] = to_string(r.overall);
  j["seed"] = r.seed;
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

std::string to_string(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::pass:
      return "pass";
    case CheckVerdict::fail:
      return "fail";
    case CheckVerdict::unknown:
      return "unknown";
  }
  return "unknown";
}

std::string to_string(OverallVerdict v) {
  switch (v) {
    case OverallVerdict::frobenius_type_I:
      return "frobenius_type_I";
    case OverallVerdict::factor_candidate:
      return "factor_candidate";
    case OverallVerdict::not_factor:
      return "not_factor";
    case OverallVerdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace liepoisson
