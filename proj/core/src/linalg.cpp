#include "liepoisson/linalg.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace liepoisson {

void normalize_primitive(std::vector<Rational>& v) {
  BigInt den_lcm(1);
  for (const auto& x : v) den_lcm = boost::multiprecision::lcm(den_lcm, x.denominator());
  BigInt content(0);
  int lead_sign = 0;
  std::vector<BigInt> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].numerator() * (den_lcm / v[i].denominator());
    content = boost::multiprecision::gcd(content, ints[i]);
    if (lead_sign == 0 && !ints[i].is_zero()) lead_sign = ints[i] < 0 ? -1 : 1;
  }
  if (lead_sign == 0) return;  // zero vector
  if (lead_sign < 0) content = -content;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(ints[i] / content);
}

namespace {

bool simpler(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::abs(a) < boost::multiprecision::abs(b);
}

bool simpler(const MultiPoly& a, const MultiPoly& b) {
  if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
  return a.degree() < b.degree();
}

// Fraction-free Gaussian elimination with full pivoting; shared by the
// rational and polynomial rank routines. Divide must be exact; `one` is the
// multiplicative unit of the entry ring.
template <class T, class IsZero, class Div>
std::size_t bareiss_rank(std::vector<std::vector<T>> a, IsZero is_zero, Div divide, T one) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  T prev = std::move(one);
  std::size_t r = 0;
  while (r < rows && r < cols) {
    // pick any nonzero pivot in the trailing submatrix (prefer the simplest)
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = r; j < cols; ++j)
        if (!is_zero(a[i][j])) {
          if (pi == rows || simpler(a[i][j], a[pi][pj])) {
            pi = i;
            pj = j;
          }
        }
    if (pi == rows) break;
    std::swap(a[r], a[pi]);
    if (pj != r)
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][r], a[i][pj]);
    // trailing entries a[i][r] (i > r) are never read again, so only the
    // submatrix below and to the right of the pivot is updated
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = r + 1; j < cols; ++j) {
        a[i][j] = divide(a[r][r] * a[i][j] - a[i][r] * a[r][j], prev);
      }
    }
    prev = a[r][r];
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt den_lcm(1);
    for (std::size_t j = 0; j < m.cols(); ++j)
      den_lcm = boost::multiprecision::lcm(den_lcm, m(i, j).denominator());
    for (std::size_t j = 0; j < m.cols(); ++j)
      a[i][j] = m(i, j).numerator() * (den_lcm / m(i, j).denominator());
  }
  return bareiss_rank(
      std::move(a), [](const BigInt& x) { return x.is_zero(); },
      [](const BigInt& num, const BigInt& den) { return BigInt(num / den); }, BigInt(1));
}

std::size_t poly_matrix_rank_symbolic(const PolyMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const std::size_t nvars = m(0, 0).nvars();
  std::vector<std::vector<MultiPoly>> a(m.rows(),
                                        std::vector<MultiPoly>(m.cols(), MultiPoly(nvars)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return bareiss_rank(
      std::move(a), [](const MultiPoly& p) { return p.is_zero(); },
      [](const MultiPoly& num, const MultiPoly& den) { return exact_div(num, den); },
      MultiPoly::constant(nvars, Rational(1)));
}

namespace {

void axpy(SparseVec& target, const Rational& factor, const SparseVec& source) {
  if (factor.is_zero()) return;
  SparseVec out;
  out.terms.reserve(target.terms.size() + source.terms.size());
  auto ti = target.terms.begin(), te = target.terms.end();
  auto si = source.terms.begin(), se = source.terms.end();
  while (ti != te || si != se) {
    if (si == se || (ti != te && ti->first < si->first)) {
      out.terms.push_back(*ti++);
    } else if (ti == te || si->first < ti->first) {
      out.terms.emplace_back(si->first, factor * si->second);
      ++si;
    } else {
      Rational c = ti->second + factor * si->second;
      if (!c.is_zero()) out.terms.emplace_back(ti->first, c);
      ++ti;
      ++si;
    }
  }
  target = std::move(out);
}

void scale(SparseVec& row, const Rational& s) {
  for (auto& [col, c] : row.terms) c *= s;
}

}  // namespace

RrefResult rref(std::vector<SparseVec> rows, std::size_t cols) {
  // forward sweep: bucket rows by leading column, eliminate column by column
  std::map<std::size_t, std::vector<SparseVec>> buckets;
  for (auto& r : rows)
    if (!r.empty()) buckets[r.lead()].push_back(std::move(r));

  RrefResult res;
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    const std::size_t col = node.key();
    auto& bucket = node.mapped();
    std::size_t best = 0;
    for (std::size_t i = 1; i < bucket.size(); ++i)
      if (bucket[i].terms.size() < bucket[best].terms.size()) best = i;
    SparseVec pivot = std::move(bucket[best]);
    scale(pivot, pivot.terms.front().second.reciprocal());
    for (std::size_t i = 0; i < bucket.size(); ++i) {
      if (i == best) continue;
      SparseVec& r = bucket[i];
      axpy(r, -r.terms.front().second, pivot);
      if (!r.empty()) buckets[r.lead()].push_back(std::move(r));
    }
    res.rows.push_back(std::move(pivot));
    res.pivot_cols.push_back(col);
  }

  // backward sweep: clear pivot columns from earlier rows
  std::map<std::size_t, std::size_t> pivot_row;
  for (std::size_t k = 0; k < res.pivot_cols.size(); ++k) pivot_row[res.pivot_cols[k]] = k;
  for (std::size_t k = res.rows.size(); k-- > 0;) {
    SparseVec& row = res.rows[k];
    // collect entries sitting on later pivot columns, then eliminate them
    for (std::size_t t = 1; t < row.terms.size();) {
      auto it = pivot_row.find(row.terms[t].first);
      if (it != pivot_row.end() && it->second > k) {
        axpy(row, -row.terms[t].second, res.rows[it->second]);
        // restart scan: positions shifted
        t = 1;
      } else {
        ++t;
      }
    }
  }
  (void)cols;
  return res;
}

std::vector<std::vector<Rational>> kernel_basis_sparse(const std::vector<SparseVec>& rows,
                                                       std::size_t cols) {
  RrefResult r = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> kernel;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = Rational(1);
    for (std::size_t k = 0; k < r.rows.size(); ++k) {
      for (const auto& [col, c] : r.rows[k].terms) {
        if (col == f) {
          v[r.pivot_cols[k]] = -c;
          break;
        }
        if (col > f) break;
      }
    }
    kernel.push_back(std::move(v));
  }
  if (kernel.empty()) return kernel;

  // canonicalize: reduced echelon basis of the null space, coprime integer
  // entries, positive leading entry, ordered by leading index
  std::vector<SparseVec> as_rows;
  for (const auto& v : kernel) {
    SparseVec row;
    for (std::size_t j = 0; j < cols; ++j)
      if (!v[j].is_zero()) row.terms.emplace_back(j, v[j]);
    as_rows.push_back(std::move(row));
  }
  RrefResult reduced = rref(std::move(as_rows), cols);
  std::vector<std::vector<Rational>> out;
  for (const auto& row : reduced.rows) {
    std::vector<Rational> v(cols, Rational(0));
    for (const auto& [col, c] : row.terms) v[col] = c;
    normalize_primitive(v);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
  std::vector<SparseVec> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) rows[i].terms.emplace_back(j, m(i, j));
  return kernel_basis_sparse(rows, m.cols());
}

RatMatrix evaluate_poly_matrix(const PolyMatrix& m, const std::vector<Rational>& point) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(point);
  return out;
}

std::size_t poly_matrix_rank_generic(const PolyMatrix& m, std::uint64_t seed) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const std::size_t nvars = m(0, 0).nvars();
  std::mt19937_64 engine(seed);
  std::size_t best = 0;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Rational> point(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
      // strictly positive coordinate in [1, 2^20]
      point[i] = Rational(static_cast<long long>(engine() % (1u << 20)) + 1);
    }
    best = std::max(best, rank(evaluate_poly_matrix(m, point)));
  }
  if (m.rows() <= 12 && m.cols() <= 12) {
    std::size_t symbolic = poly_matrix_rank_symbolic(m);
    if (best > symbolic) {
      throw std::logic_error("poly_matrix_rank_generic: evaluation rank exceeds symbolic rank");
    }
    return symbolic;
  }
  return best;
}

}  // namespace liepoisson
