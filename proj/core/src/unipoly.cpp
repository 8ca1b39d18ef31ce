#include "liepoisson/unipoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace liepoisson {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(unsigned power, const Rational& c) {
  std::vector<Rational> v(power + 1, Rational(0));
  v[power] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::leading() const {
  if (is_zero()) throw std::logic_error("UniPoly: leading coefficient of zero polynomial");
  return c_.back();
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long long>(k)) * c_[k];
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = leading().reciprocal();
  std::vector<Rational> d = c_;
  for (auto& x : d) x *= inv;
  return UniPoly(std::move(d));
}

UniPoly UniPoly::negate_variable() const {
  std::vector<Rational> d = c_;
  for (std::size_t k = 1; k < d.size(); k += 2) d[k] = -d[k];
  return UniPoly(std::move(d));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

UniPoly operator*(const Rational& s, UniPoly p) {
  for (auto& x : p.c_) x *= s;
  p.trim();
  return p;
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> d = c_;
  for (auto& x : d) x = -x;
  return UniPoly(std::move(d));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("UniPoly: division by zero polynomial");
  UniPoly rem = num;
  if (num.degree() < den.degree()) return {UniPoly(), rem};
  std::vector<Rational> q(num.degree() - den.degree() + 1, Rational(0));
  Rational lead_inv = den.leading().reciprocal();
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    std::size_t shift = rem.degree() - den.degree();
    Rational f = rem.leading() * lead_inv;
    q[shift] = f;
    rem -= UniPoly::monomial(static_cast<unsigned>(shift), f) * den;
  }
  return {UniPoly(std::move(q)), rem};
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    Rational a = c_[k];
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      a = a.abs();
    }
    if (k == 0 || a != Rational(1)) os << a;
    if (k > 0) {
      if (a != Rational(1)) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = UniPoly::divmod(x, y).second;
    x = std::move(y);
    y = r.monic();  // normalization keeps coefficients small; gcd is up to units
  }
  return x.monic();
}

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& p) {
  std::vector<std::pair<UniPoly, unsigned>> result;
  if (p.degree() <= 0) return result;
  UniPoly f = p.monic();
  UniPoly g = gcd(f, f.derivative());
  if (g.degree() == 0) {
    result.emplace_back(f, 1);
    return result;
  }
  UniPoly w = UniPoly::divmod(f, g).first;
  UniPoly y = UniPoly::divmod(f.derivative(), g).first;
  UniPoly z = y - w.derivative();
  unsigned i = 1;
  while (w.degree() > 0) {
    UniPoly gi = gcd(w, z);
    if (gi.degree() > 0) result.emplace_back(gi.monic(), i);
    w = UniPoly::divmod(w, gi).first;
    y = UniPoly::divmod(z, gi).first;
    z = y - w.derivative();
    ++i;
  }
  return result;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  UniPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    UniPoly r = UniPoly::divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace {

unsigned count_variations(const std::vector<int>& signs) {
  unsigned v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

unsigned sign_variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(q.evaluate(x).sign());
  return count_variations(signs);
}

unsigned sign_variations_at_pos_inf(const std::vector<UniPoly>& chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(q.is_zero() ? 0 : q.leading().sign());
  return count_variations(signs);
}

unsigned count_roots_in(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b) {
  if (!(a < b)) return 0;
  unsigned va = sign_variations_at(chain, a);
  unsigned vb = sign_variations_at(chain, b);
  return va >= vb ? va - vb : 0;
}

Rational cauchy_root_bound(const UniPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational lead = p.leading().abs();
  Rational max(0);
  for (int k = 0; k < p.degree(); ++k) {
    Rational a = p.coeff(static_cast<std::size_t>(k)).abs() / lead;
    if (a > max) max = a;
  }
  return Rational(1) + max;
}

namespace {

void isolate_in(const std::vector<UniPoly>& chain, const UniPoly& p, Rational lo, Rational hi,
                unsigned count, const Rational& max_width,
                std::vector<std::pair<Rational, Rational>>& out) {
  if (count == 0) return;
  if (count == 1) {
    while (hi - lo > max_width) {
      Rational mid = (lo + hi) / Rational(2);
      if (p.evaluate(mid).is_zero())
        throw std::logic_error("isolate_positive_roots: rational root not extracted beforehand");
      if (count_roots_in(chain, lo, mid) == 1)
        hi = mid;
      else
        lo = mid;
    }
    out.emplace_back(lo, hi);
    return;
  }
  Rational mid = (lo + hi) / Rational(2);
  if (p.evaluate(mid).is_zero())
    throw std::logic_error("isolate_positive_roots: rational root not extracted beforehand");
  unsigned left = count_roots_in(chain, lo, mid);
  isolate_in(chain, p, lo, mid, left, max_width, out);
  isolate_in(chain, p, mid, hi, count - left, max_width, out);
}

}  // namespace

std::vector<std::pair<Rational, Rational>> isolate_positive_roots(const UniPoly& p,
                                                                  const Rational& max_width) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() <= 0) return out;
  if (p.evaluate(Rational(0)).is_zero())
    throw std::logic_error("isolate_positive_roots: zero root must be stripped first");
  std::vector<UniPoly> chain = sturm_sequence(p);
  Rational bound = cauchy_root_bound(p);
  unsigned count = count_roots_in(chain, Rational(0), bound);
  isolate_in(chain, p, Rational(0), bound, count, max_width, out);
  return out;
}

namespace {

// Trial-division factorization capped at 2^20; any remaining cofactor is
// treated as prime, which can only shrink the candidate divisor set.
std::vector<BigInt> divisors_of(BigInt n) {
  if (n < 0) n = -n;
  std::vector<std::pair<BigInt, unsigned>> factors;
  auto add_factor = [&](const BigInt& f) {
    for (auto& [p, e] : factors)
      if (p == f) {
        ++e;
        return;
      }
    factors.emplace_back(f, 1);
  };
  for (BigInt d = 2; d <= (1 << 20) && d * d <= n; ++d) {
    while (n % d == 0) {
      add_factor(d);
      n /= d;
    }
  }
  if (n > 1) add_factor(n);
  std::vector<BigInt> divs{BigInt(1)};
  for (const auto& [p, e] : factors) {
    std::size_t base = divs.size();
    BigInt pk(1);
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) {
        divs.push_back(divs[i] * pk);
        if (divs.size() > (1u << 16)) return divs;  // cap; superset not required
      }
    }
  }
  return divs;
}

}  // namespace

std::vector<Rational> extract_positive_rational_roots(UniPoly* p) {
  std::vector<Rational> roots;
  if (p == nullptr || p->degree() <= 0) return roots;

  // strip zero roots; only positive roots are of interest to callers
  while (!p->is_zero() && p->coeff(0).is_zero()) {
    std::vector<Rational> shifted(p->coeffs().begin() + 1, p->coeffs().end());
    *p = UniPoly(std::move(shifted));
  }
  if (p->degree() <= 0) return roots;

  // integer primitive form for the divisor candidates
  BigInt den_lcm(1);
  for (const auto& c : p->coeffs()) den_lcm = boost::multiprecision::lcm(den_lcm, c.denominator());
  std::vector<BigInt> ints;
  ints.reserve(p->coeffs().size());
  BigInt content(0);
  for (const auto& c : p->coeffs()) {
    ints.push_back(c.numerator() * (den_lcm / c.denominator()));
    content = boost::multiprecision::gcd(content, ints.back());
  }

  std::set<Rational> candidates;
  for (const auto& num : divisors_of(ints.front() / content))
    for (const auto& den : divisors_of(ints.back() / content)) candidates.insert(Rational(num, den));

  for (const auto& r : candidates) {
    if (p->evaluate(r).is_zero()) {
      roots.push_back(r);
      UniPoly linear(std::vector<Rational>{-r, Rational(1)});
      auto [q, rem] = UniPoly::divmod(*p, linear);
      if (!rem.is_zero()) throw std::logic_error("extract_positive_rational_roots: inexact deflation");
      *p = std::move(q);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace liepoisson
