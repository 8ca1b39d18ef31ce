#include "liepoisson/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace liepoisson {

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    std::vector<Rational> e(ambient_dim, Rational(0));
    e[i] = Rational(1);
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim,
                        const std::vector<std::vector<Rational>>& vectors) {
  std::vector<SparseVec> rows;
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw std::invalid_argument("Subspace: vector length mismatch");
    SparseVec row;
    for (std::size_t j = 0; j < ambient_dim; ++j)
      if (!v[j].is_zero()) row.terms.emplace_back(j, v[j]);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  RrefResult r = rref(std::move(rows), ambient_dim);
  Subspace s(ambient_dim);
  for (std::size_t k = 0; k < r.rows.size(); ++k) {
    std::vector<Rational> v(ambient_dim, Rational(0));
    for (const auto& [col, c] : r.rows[k].terms) v[col] = c;
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(r.pivot_cols[k]);
  }
  return s;
}

std::vector<Rational> Subspace::reduce(std::vector<Rational> v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("Subspace: vector length mismatch");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rational& c = v[pivots_[k]];
    if (c.is_zero()) continue;
    Rational f = c;  // basis rows are monic at their pivot
    for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * basis_[k][j];
  }
  return v;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  for (const auto& x : reduce(v))
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::join(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
  std::vector<std::vector<Rational>> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

std::size_t LieAlgebra::pair_index(std::size_t i, std::size_t j) const {
  // row-major upper triangle, i < j
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> basis_labels,
                       const std::vector<BracketEntry>& brackets, DeferValidation)
    : dim_(dim), labels_(std::move(basis_labels)) {
  if (labels_.size() != dim_) throw std::invalid_argument("LieAlgebra: label count mismatch");
  const std::size_t pairs = dim_ < 2 ? 0 : dim_ * (dim_ - 1) / 2;
  constants_.assign(pairs, std::vector<Rational>(dim_, Rational(0)));
  std::vector<bool> seen(pairs, false);
  for (const auto& b : brackets) {
    if (b.i >= b.j) throw std::invalid_argument("LieAlgebra: bracket entries require i < j");
    if (b.j >= dim_) throw std::invalid_argument("LieAlgebra: bracket index out of range");
    if (b.coeffs.size() != dim_)
      throw std::invalid_argument("LieAlgebra: bracket coefficient vector length mismatch");
    std::size_t idx = pair_index(b.i, b.j);
    if (seen[idx]) throw std::invalid_argument("LieAlgebra: duplicate bracket entry");
    seen[idx] = true;
    constants_[idx] = b.coeffs;
  }
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> basis_labels,
                       const std::vector<BracketEntry>& brackets)
    : LieAlgebra(dim, std::move(basis_labels), brackets, DeferValidation{}) {
  auto violations = jacobi_violations();
  if (!violations.empty()) {
    auto [i, j, k] = violations.front();
    std::ostringstream os;
    os << "LieAlgebra: Jacobi identity fails at basis triple (" << i << ", " << j << ", " << k
       << ")";
    throw std::invalid_argument(os.str());
  }
}

Rational LieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_)
    throw std::out_of_range("LieAlgebra: structure constant index out of range");
  if (i == j) return Rational(0);
  if (i < j) return constants_[pair_index(i, j)][k];
  return -constants_[pair_index(j, i)][k];
}

std::vector<Rational> LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("LieAlgebra: basis index out of range");
  std::vector<Rational> out(dim_, Rational(0));
  if (i == j) return out;
  if (i < j) return constants_[pair_index(i, j)];
  out = constants_[pair_index(j, i)];
  for (auto& c : out) c = -c;
  return out;
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& x,
                                          const std::vector<Rational>& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("LieAlgebra: bracket operand length mismatch");
  std::vector<Rational> out(dim_, Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      Rational coeff = x[i] * y[j] - x[j] * y[i];
      if (coeff.is_zero()) continue;
      const auto& c = constants_[pair_index(i, j)];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!c[k].is_zero()) out[k] += coeff * c[k];
      }
    }
  }
  return out;
}

RatMatrix LieAlgebra::ad_matrix(std::size_t i) const {
  RatMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    auto col = bracket_basis(i, j);
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> LieAlgebra::jacobi_violations()
    const {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    std::vector<Rational> ei(dim_, Rational(0));
    ei[i] = Rational(1);
    for (std::size_t j = i + 1; j < dim_; ++j) {
      std::vector<Rational> ej(dim_, Rational(0));
      ej[j] = Rational(1);
      for (std::size_t k = j + 1; k < dim_; ++k) {
        std::vector<Rational> ek(dim_, Rational(0));
        ek[k] = Rational(1);
        std::vector<Rational> sum = bracket(bracket_basis(i, j), ek);
        std::vector<Rational> t = bracket(bracket_basis(j, k), ei);
        for (std::size_t a = 0; a < dim_; ++a) sum[a] += t[a];
        t = bracket(bracket_basis(k, i), ej);
        for (std::size_t a = 0; a < dim_; ++a) sum[a] += t[a];
        bool zero = true;
        for (const auto& c : sum)
          if (!c.is_zero()) {
            zero = false;
            break;
          }
        if (!zero) out.emplace_back(i, j, k);
      }
    }
  }
  return out;
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> jacobi_violations(
    const LieAlgebra& g) {
  return g.jacobi_violations();
}

Subspace derived_subalgebra(const LieAlgebra& g) {
  std::vector<std::vector<Rational>> gens;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) gens.push_back(g.bracket_basis(i, j));
  return Subspace::span(g.dim(), gens);
}

Subspace subspace_bracket(const LieAlgebra& g, const Subspace& s, const Subspace& t) {
  std::vector<std::vector<Rational>> gens;
  for (const auto& x : s.basis())
    for (const auto& y : t.basis()) gens.push_back(g.bracket(x, y));
  return Subspace::span(g.dim(), gens);
}

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  std::vector<Subspace> series{Subspace::full(g.dim())};
  while (true) {
    Subspace next = subspace_bracket(g, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().is_zero()) break;
  }
  return series;
}

bool is_solvable(const LieAlgebra& g) { return derived_series(g).back().is_zero(); }

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  Subspace full = Subspace::full(g.dim());
  std::vector<Subspace> series{full};
  while (true) {
    Subspace next = subspace_bracket(g, full, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().is_zero()) break;
  }
  return series;
}

bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back().is_zero(); }

Subspace center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  RatMatrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i) stacked.set_block(i * n, 0, g.ad_matrix(i));
  return Subspace::span(n, kernel_basis(stacked));
}

bool is_derivation(const LieAlgebra& g, const LinMap& d) {
  if (d.rows() != g.dim() || d.cols() != g.dim())
    throw std::invalid_argument("is_derivation: map dimension mismatch");
  for (std::size_t i = 0; i < g.dim(); ++i) {
    std::vector<Rational> ei(g.dim(), Rational(0));
    ei[i] = Rational(1);
    std::vector<Rational> dei = d.apply(ei);
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      std::vector<Rational> ej(g.dim(), Rational(0));
      ej[j] = Rational(1);
      std::vector<Rational> lhs = d.apply(g.bracket_basis(i, j));
      std::vector<Rational> rhs = g.bracket(dei, ej);
      std::vector<Rational> t = g.bracket(ei, d.apply(ej));
      for (std::size_t k = 0; k < g.dim(); ++k) {
        if (lhs[k] != rhs[k] + t[k]) return false;
      }
    }
  }
  return true;
}

namespace {

LieAlgebra extend_by_map(const LieAlgebra& g, const LinMap& d, const std::string& label,
                         bool validate) {
  const std::size_t n = g.dim();
  std::vector<std::string> labels = g.basis_labels();
  labels.push_back(label);
  std::vector<LieAlgebra::BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto coeffs = g.bracket_basis(i, j);
      coeffs.push_back(Rational(0));
      entries.push_back({i, j, std::move(coeffs)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    // [e_i, e_new] = -d e_i
    std::vector<Rational> ei(n, Rational(0));
    ei[i] = Rational(1);
    std::vector<Rational> coeffs = d.apply(ei);
    for (auto& c : coeffs) c = -c;
    coeffs.push_back(Rational(0));
    entries.push_back({i, n, std::move(coeffs)});
  }
  if (validate) return LieAlgebra(n + 1, std::move(labels), entries);
  return LieAlgebra(n + 1, std::move(labels), entries, LieAlgebra::DeferValidation{});
}

}  // namespace

LieAlgebra semidirect_sum(const LieAlgebra& g, const LinMap& d, const std::string& label) {
  if (!is_derivation(g, d))
    throw std::invalid_argument("semidirect_sum: map is not a derivation");
  return extend_by_map(g, d, label, /*validate=*/true);
}

LieAlgebra semidirect_sum_unchecked(const LieAlgebra& g, const LinMap& d,
                                    const std::string& label) {
  return extend_by_map(g, d, label, /*validate=*/false);
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient_dim() != g.dim()) throw std::invalid_argument("is_ideal: ambient mismatch");
  for (std::size_t i = 0; i < g.dim(); ++i) {
    std::vector<Rational> ei(g.dim(), Rational(0));
    ei[i] = Rational(1);
    for (const auto& v : s.basis()) {
      if (!s.contains(g.bracket(ei, v))) return false;
    }
  }
  return true;
}

bool is_abelian_subspace(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient_dim() != g.dim())
    throw std::invalid_argument("is_abelian_subspace: ambient mismatch");
  const auto& basis = s.basis();
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      for (const auto& c : g.bracket(basis[a], basis[b]))
        if (!c.is_zero()) return false;
    }
  }
  return true;
}

QuotientResult quotient(const LieAlgebra& g, const Subspace& s) {
  if (!is_ideal(g, s)) throw std::invalid_argument("quotient: subspace is not an ideal");
  const std::size_t n = g.dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : s.pivot_columns()) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) complement.push_back(j);
  const std::size_t m = complement.size();

  // quotient coordinates of v: residual after reduction by s, read off the
  // complement coordinates (reduction zeroes every pivot coordinate)
  auto project = [&](const std::vector<Rational>& v) {
    std::vector<Rational> r = s.reduce(v);
    std::vector<Rational> out(m);
    for (std::size_t a = 0; a < m; ++a) out[a] = r[complement[a]];
    return out;
  };

  RatMatrix proj(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> ej(n, Rational(0));
    ej[j] = Rational(1);
    auto col = project(ej);
    for (std::size_t a = 0; a < m; ++a) proj(a, j) = col[a];
  }

  std::vector<LieAlgebra::BracketEntry> entries;
  std::vector<std::string> labels;
  for (auto idx : complement) labels.push_back(g.label(idx));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      entries.push_back({a, b, project(g.bracket_basis(complement[a], complement[b]))});
    }
  }
  return QuotientResult{LieAlgebra(m, std::move(labels), entries), std::move(proj),
                        std::move(complement)};
}

}  // namespace liepoisson
