#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "liepoisson/algebra_io.hpp"
#include "liepoisson/casimir.hpp"
#include "liepoisson/catalog.hpp"
#include "liepoisson/report.hpp"

namespace {

using namespace liepoisson;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CatalogRequest {
  std::string name;
  std::optional<std::size_t> n;
  std::optional<std::string> theta;       // rational string
  std::optional<std::string> theta_name;  // symbolic irrational
  std::optional<std::string> c;
};

struct ResolvedAlgebra {
  LieAlgebra algebra;
  std::optional<ExFParams> spectral_params;
  std::string display_name;
};

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + " expects a rational like 3 or -22/7, got \"" + text + "\"");
  }
}

ThetaTag theta_from_request(const CatalogRequest& req, const Rational& fallback) {
  if (req.theta.has_value() && req.theta_name.has_value())
    throw UsageError("--theta and --theta-irrational are mutually exclusive");
  if (req.theta_name.has_value()) return ThetaTag::symbolic_irrational(*req.theta_name);
  if (req.theta.has_value())
    return ThetaTag::rational(parse_rational_flag(*req.theta, "--theta"));
  return ThetaTag::rational(fallback);
}

std::string theta_display(const ThetaTag& tag) {
  return tag.symbolic ? tag.name : tag.value.str();
}

// A(n, theta) for the CLI-addressable abelian extensions: the n = 4 case is
// the diag(J, theta*J) template; n = 1 and n = 2 are its small companions.
RatMatrix abelian_extension_template(std::size_t n, const Rational& theta) {
  if (n == 1) return RatMatrix{{theta}};
  if (n == 2) return theta * rotation_block_j();
  if (n == 4) return paper_template_matrix(theta);
  throw UsageError("catalog abelian_extension supports --n 1, 2 or 4");
}

ResolvedAlgebra build_catalog_algebra(const CatalogRequest& req) {
  auto reject = [&](bool condition, const std::string& message) {
    if (condition) throw UsageError(message);
  };
  if (req.name == "heisenberg") {
    reject(req.theta.has_value() || req.theta_name.has_value() || req.c.has_value(),
           "catalog heisenberg takes only --n");
    std::size_t n = req.n.value_or(1);
    if (n == 0) throw UsageError("heisenberg needs --n >= 1");
    return {heisenberg(n), std::nullopt, "heisenberg(" + std::to_string(n) + ")"};
  }
  if (req.name == "aff_real" || req.name == "aff_complex") {
    reject(req.n.has_value() || req.theta.has_value() || req.theta_name.has_value() ||
               req.c.has_value(),
           "catalog " + req.name + " takes no parameters");
    if (req.name == "aff_real") return {aff_real(), std::nullopt, "aff_real"};
    return {aff_complex(), std::nullopt, "aff_complex"};
  }
  if (req.name == "exF") {
    std::size_t n = req.n.value_or(4);
    if (n != 4)
      throw UsageError("catalog exF is the diag(J, theta*J) template and requires --n 4");
    ThetaTag theta = theta_from_request(req, Rational(1, 2));
    Rational c = req.c.has_value() ? parse_rational_flag(*req.c, "--c") : Rational(1);
    auto [algebra, params] = exF_paper_instance(theta, c);
    std::string display =
        "exF(n=4, theta=" + theta_display(theta) + ", c=" + c.str() + ")";
    return {std::move(algebra), params, std::move(display)};
  }
  if (req.name == "abelian_extension") {
    reject(req.c.has_value(), "catalog abelian_extension takes --n and --theta only");
    std::size_t n = req.n.value_or(4);
    ThetaTag theta = theta_from_request(req, Rational(1, 2));
    RatMatrix a = abelian_extension_template(n, theta.value);
    std::string display =
        "abelian_extension(n=" + std::to_string(n) + ", theta=" + theta_display(theta) + ")";
    return {abelian_extension(a), std::nullopt, std::move(display)};
  }
  throw UsageError("unknown catalog name \"" + req.name +
                   "\" (try: heisenberg, aff_real, aff_complex, exF, abelian_extension)");
}

// Targets are either a file path or an inline catalog reference
// "catalog:<name>" parameterized by the shared flags.
ResolvedAlgebra resolve_target(const std::string& target, const CatalogRequest& flags) {
  if (target.rfind("catalog:", 0) == 0) {
    CatalogRequest req = flags;
    req.name = target.substr(8);
    return build_catalog_algebra(req);
  }
  return {load_algebra(target), std::nullopt, target};
}

void print_catalog_list() {
  std::cout << "heisenberg          --n N        Heisenberg algebra h_{2N+1} (default N=1)\n"
            << "aff_real                         dim 2, [e1,e0] = e0\n"
            << "aff_complex                      dim 4, realified complex affine algebra\n"
            << "exF                 --n 4 --theta p/q | --theta-irrational NAME --c p/q\n"
            << "                                 h_9 x| R*B with A = diag(J, theta*J)\n"
            << "                                 (defaults: theta=1/2, c=1)\n"
            << "abelian_extension   --n 1|2|4 --theta p/q | --theta-irrational NAME\n"
            << "                                 R^N x|_A R with A = [theta], theta*J or\n"
            << "                                 diag(J, theta*J) (defaults: N=4, theta=1/2)\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact analysis of Lie-Poisson structures given by rational structure constants"};
  app.require_subcommand(1);

  // validate
  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "check an algebra file (format and Jacobi)");
  validate->add_option("file", validate_path, "algebra document")->required();

  // catalog
  auto* catalog = app.add_subcommand("catalog", "named algebra families");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "list the catalog names and their flags");
  CatalogRequest build_req;
  std::string build_out;
  auto* build = catalog->add_subcommand("build", "construct a catalog member and save it");
  build->add_option("name", build_req.name, "catalog family name")->required();
  std::size_t build_n = 0;
  auto* build_n_opt = build->add_option("--n", build_n, "family size parameter");
  std::string build_theta, build_theta_name, build_c;
  auto* build_theta_opt = build->add_option("--theta", build_theta, "rational theta");
  auto* build_theta_irr =
      build->add_option("--theta-irrational", build_theta_name, "symbolic irrational theta");
  auto* build_c_opt = build->add_option("--c", build_c, "rational c");
  build->add_option("-o,--output", build_out, "output file")->required();

  // analyze
  std::string analyze_target;
  CatalogRequest analyze_req;
  unsigned analyze_degree = 4;
  std::uint64_t analyze_seed = 0;
  std::string analyze_format = "text";
  auto* analyze_cmd = app.add_subcommand("analyze", "full structural/spectral analysis report");
  analyze_cmd->add_option("target", analyze_target, "algebra file or catalog:<name>")->required();
  std::size_t analyze_n = 0;
  auto* analyze_n_opt = analyze_cmd->add_option("--n", analyze_n, "catalog size parameter");
  std::string analyze_theta, analyze_theta_name, analyze_c;
  auto* analyze_theta_opt = analyze_cmd->add_option("--theta", analyze_theta, "rational theta");
  auto* analyze_theta_irr = analyze_cmd->add_option("--theta-irrational", analyze_theta_name,
                                                    "symbolic irrational theta");
  auto* analyze_c_opt = analyze_cmd->add_option("--c", analyze_c, "rational c");
  analyze_cmd->add_option("--max-casimir-degree", analyze_degree,
                          "Casimir degree bound (default 4)");
  analyze_cmd->add_option("--seed", analyze_seed, "seed for randomized rank certification");
  analyze_cmd->add_option("--format", analyze_format, "text | machine")
      ->check(CLI::IsMember({"text", "machine"}));

  // casimir
  std::string casimir_target;
  unsigned casimir_degree = 4;
  std::string casimir_format = "text";
  auto* casimir_cmd = app.add_subcommand("casimir", "polynomial Casimir basis up to a degree");
  casimir_cmd->add_option("target", casimir_target, "algebra file or catalog:<name>")->required();
  casimir_cmd->add_option("--degree", casimir_degree, "degree bound (default 4)");
  casimir_cmd->add_option("--format", casimir_format, "text | machine")
      ->check(CLI::IsMember({"text", "machine"}));
  std::size_t casimir_n = 0;
  auto* casimir_n_opt = casimir_cmd->add_option("--n", casimir_n, "catalog size parameter");
  std::string casimir_theta, casimir_theta_name, casimir_c;
  auto* casimir_theta_opt = casimir_cmd->add_option("--theta", casimir_theta, "rational theta");
  auto* casimir_theta_irr = casimir_cmd->add_option("--theta-irrational", casimir_theta_name,
                                                    "symbolic irrational theta");
  auto* casimir_c_opt = casimir_cmd->add_option("--c", casimir_c, "rational c");

  // spectral
  std::string spectral_matrix;
  std::string spectral_format = "text";
  auto* spectral_cmd = app.add_subcommand("spectral", "S_A closedness report for a matrix");
  spectral_cmd->add_option("--matrix", spectral_matrix, "JSON matrix of rational strings")
      ->required();
  spectral_cmd->add_option("--format", spectral_format, "text | machine")
      ->check(CLI::IsMember({"text", "machine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) {
      LieAlgebra g = load_algebra(validate_path);
      std::cout << "OK: dim " << g.dim() << ", " << "Jacobi identity holds, hash "
                << constants_hash(g) << "\n";
      return kExitOk;
    }

    if (catalog->parsed()) {
      if (catalog->get_subcommand("list")->parsed()) {
        print_catalog_list();
        return kExitOk;
      }
      if (*build_n_opt) build_req.n = build_n;
      if (*build_theta_opt) build_req.theta = build_theta;
      if (*build_theta_irr) build_req.theta_name = build_theta_name;
      if (*build_c_opt) build_req.c = build_c;
      ResolvedAlgebra resolved = build_catalog_algebra(build_req);
      save_algebra(resolved.algebra, build_out);
      std::cout << "wrote " << resolved.display_name << " (dim " << resolved.algebra.dim()
                << ") to " << build_out << "\n";
      return kExitOk;
    }

    if (analyze_cmd->parsed()) {
      if (*analyze_n_opt) analyze_req.n = analyze_n;
      if (*analyze_theta_opt) analyze_req.theta = analyze_theta;
      if (*analyze_theta_irr) analyze_req.theta_name = analyze_theta_name;
      if (*analyze_c_opt) analyze_req.c = analyze_c;
      ResolvedAlgebra resolved = resolve_target(analyze_target, analyze_req);
      AnalysisOptions options;
      options.max_casimir_degree = analyze_degree;
      options.seed = analyze_seed;
      options.name = resolved.display_name;
      options.spectral_params = resolved.spectral_params;
      AnalysisReport report = analyze(resolved.algebra, options);
      std::cout << (analyze_format == "machine" ? render_machine(report) : render_text(report));
      return kExitOk;
    }

    if (casimir_cmd->parsed()) {
      CatalogRequest req;
      if (*casimir_n_opt) req.n = casimir_n;
      if (*casimir_theta_opt) req.theta = casimir_theta;
      if (*casimir_theta_irr) req.theta_name = casimir_theta_name;
      if (*casimir_c_opt) req.c = casimir_c;
      ResolvedAlgebra resolved = resolve_target(casimir_target, req);
      if (casimir_degree == 0) throw UsageError("--degree must be >= 1");
      CasimirBasis basis = polynomial_casimirs(resolved.algebra, casimir_degree);
      if (casimir_format == "machine") {
        std::cout << "[";
        for (std::size_t i = 0; i < basis.basis.size(); ++i) {
          if (i > 0) std::cout << ",";
          std::cout << "[";
          bool first = true;
          for (const auto& [m, c] : basis.basis[i].terms()) {
            if (!first) std::cout << ",";
            first = false;
            std::cout << "{\"exps\":[";
            for (std::size_t v = 0; v < m.size(); ++v) {
              if (v > 0) std::cout << ",";
              std::cout << m[v];
            }
            std::cout << "],\"coeff\":\"" << c.str() << "\"}";
          }
          std::cout << "]";
        }
        std::cout << "]\n";
      } else {
        std::cout << "polynomial Casimir basis of " << resolved.display_name << " up to degree "
                  << casimir_degree << " (" << basis.basis.size() << " element"
                  << (basis.basis.size() == 1 ? "" : "s") << ")\n";
        for (const auto& c : basis.basis) std::cout << "  " << c.str() << "\n";
      }
      return kExitOk;
    }

    if (spectral_cmd->parsed()) {
      RatMatrix a = load_matrix(spectral_matrix);
      if (!a.is_square()) throw DocumentError("spectral analysis needs a square matrix");
      SpectralReport report = spectral_report_for_matrix(a);
      std::cout << (spectral_format == "machine" ? render_machine(report) : render_text(report));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
