#include "liepoisson/spectral.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace liepoisson {

UniPoly characteristic_polynomial(const RatMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("characteristic_polynomial: matrix not square");
  const std::size_t n = a.rows();
  // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr(M_1)/1,
  // M_{k} = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k
  std::vector<Rational> coeffs(n + 1, Rational(0));
  coeffs[n] = Rational(1);
  RatMatrix m = a;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      RatMatrix shifted = m;
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) += coeffs[n - k + 1];
      m = a * shifted;
    }
    Rational trace(0);
    for (std::size_t i = 0; i < n; ++i) trace += m(i, i);
    coeffs[n - k] = -(trace / Rational(static_cast<long long>(k)));
  }
  return UniPoly(std::move(coeffs));
}

std::vector<ImagSquare> purely_imaginary_part_squares(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("purely_imaginary_part_squares: zero polynomial");
  UniPoly even_part = gcd(p, p.negate_variable());

  // strip t-powers: zero eigenvalues contribute nothing to the generators
  std::vector<Rational> c = even_part.coeffs();
  std::size_t shift = 0;
  while (shift < c.size() && c[shift].is_zero()) ++shift;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(shift));
  even_part = UniPoly(std::move(c));

  // the stripped gcd satisfies e(-t) = +-e(t) and e(0) != 0, hence is even
  for (std::size_t k = 1; k < even_part.coeffs().size(); k += 2) {
    if (!even_part.coeff(k).is_zero())
      throw std::logic_error("purely_imaginary_part_squares: even part has odd terms");
  }

  // substitute t^2 = -s
  std::vector<Rational> h_coeffs;
  for (std::size_t k = 0; 2 * k < even_part.coeffs().size() || k == 0; ++k) {
    Rational v = even_part.coeff(2 * k);
    if (k % 2 == 1) v = -v;
    h_coeffs.push_back(v);
  }
  UniPoly h(std::move(h_coeffs));

  std::vector<ImagSquare> out;
  if (h.degree() <= 0) return out;

  for (const auto& [factor, multiplicity] : squarefree_decomposition(h)) {
    UniPoly remaining = factor;
    for (const auto& root : extract_positive_rational_roots(&remaining)) {
      out.push_back(ImagSquare{root, multiplicity});
    }
    if (remaining.degree() > 0) {
      const Rational width(1, 1 << 24);
      for (const auto& [lo, hi] : isolate_positive_roots(remaining, width)) {
        out.push_back(ImagSquare{RootInterval{lo, hi}, multiplicity});
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const ImagSquare& a, const ImagSquare& b) {
    auto key = [](const ImagSquare& s) -> Rational {
      if (const auto* r = std::get_if<Rational>(&s.value)) return *r;
      if (const auto* iv = std::get_if<RootInterval>(&s.value)) return iv->lo;
      return Rational(0);
    };
    return key(a) < key(b);
  });
  return out;
}

std::pair<Closedness, Confidence> sA_closedness(const std::vector<ImagSquare>& squares,
                                                const std::optional<ThetaTag>& theta) {
  if (theta.has_value() && theta->symbolic) {
    // diag(J, theta*J) template: S_A is generated by {1, theta}, theta
    // irrational, hence dense and not closed
    return {Closedness::not_closed, Confidence{true, Rational(0)}};
  }
  if (squares.size() <= 1) return {Closedness::closed, Confidence{true, Rational(0)}};

  bool all_rational = true;
  Rational max_width(0);
  for (const auto& s : squares) {
    if (const auto* iv = std::get_if<RootInterval>(&s.value)) {
      all_rational = false;
      Rational w = iv->hi - iv->lo;
      if (w > max_width) max_width = w;
    } else if (std::holds_alternative<SymbolicValue>(s.value)) {
      all_rational = false;
    }
  }
  if (!all_rational) return {Closedness::unknown, Confidence{false, max_width}};

  for (std::size_t i = 0; i < squares.size(); ++i) {
    for (std::size_t j = i + 1; j < squares.size(); ++j) {
      const Rational& si = std::get<Rational>(squares[i].value);
      const Rational& sj = std::get<Rational>(squares[j].value);
      if (!rational_square_root(si / sj, nullptr)) {
        return {Closedness::not_closed, Confidence{true, Rational(0)}};
      }
    }
  }
  return {Closedness::closed, Confidence{true, Rational(0)}};
}

namespace {

std::string generator_string(const ImagSquare& s) {
  if (const auto* r = std::get_if<Rational>(&s.value)) {
    Rational root;
    if (rational_square_root(*r, &root)) return root.str();
    return "sqrt(" + r->str() + ")";
  }
  if (const auto* iv = std::get_if<RootInterval>(&s.value)) {
    Rational mid = (iv->lo + iv->hi) / Rational(2);
    return "sqrt(~" + decimal_string(mid, 6) + ")";
  }
  return std::get<SymbolicValue>(s.value).name;
}

std::string family_quotient_note(std::size_t n) {
  std::ostringstream os;
  os << "S_A lives on the quotient by the abelian ideal span{e0, e" << (n + 1) << "..e" << (2 * n)
     << "}: a non-closed S_A obstructs type I for the quotient R^" << n
     << " x|_A R and therefore for the full group.";
  return os.str();
}

std::string bare_matrix_note(std::size_t n) {
  std::ostringstream os;
  os << "a non-closed S_A means R^" << n << " x|_A R is not type I; in the Heisenberg extension "
     << "family this group is the quotient by an abelian ideal, so the obstruction lifts.";
  return os.str();
}

SpectralReport build_report(const RatMatrix& a, const std::optional<ThetaTag>& theta,
                            const std::string& note) {
  SpectralReport rep;
  rep.quotient_note = note;
  if (theta.has_value() && theta->symbolic) {
    // the placeholder matrix is not spectrally meaningful; report the
    // template spectrum symbolically
    rep.char_poly.reset();
    rep.char_poly_display = "(t^2 + 1) * (t^2 + theta^2), theta = " + theta->name;
    rep.imag_part_squares.push_back(ImagSquare{Rational(1), 1});
    rep.imag_part_squares.push_back(ImagSquare{SymbolicValue{theta->name + "^2"}, 1});
    rep.sA_generators = {"1", theta->name};
  } else {
    UniPoly p = characteristic_polynomial(a);
    rep.char_poly = p;
    rep.char_poly_display = p.str("t");
    rep.imag_part_squares = purely_imaginary_part_squares(p);
    for (const auto& s : rep.imag_part_squares) rep.sA_generators.push_back(generator_string(s));
  }
  auto [closedness, confidence] = sA_closedness(rep.imag_part_squares, theta);
  rep.closedness = closedness;
  rep.confidence = confidence;
  rep.type1_obstruction = (closedness == Closedness::not_closed);
  return rep;
}

}  // namespace

SpectralReport type_one_obstruction(const ExFParams& params) {
  return build_report(params.A, params.theta, family_quotient_note(params.n));
}

SpectralReport spectral_report_for_matrix(const RatMatrix& a) {
  return build_report(a, std::nullopt, bare_matrix_note(a.rows()));
}

std::string to_string(Closedness c) {
  switch (c) {
    case Closedness::closed:
      return "closed";
    case Closedness::not_closed:
      return "not_closed";
    case Closedness::unknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace liepoisson
