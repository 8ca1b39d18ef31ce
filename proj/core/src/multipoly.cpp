#include "liepoisson/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace liepoisson {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(Monomial(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("MultiPoly: variable index out of range");
  Monomial m(nvars, 0);
  m[index] = 1;
  MultiPoly p(nvars);
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(std::size_t nvars, Monomial exps, const Rational& coeff) {
  if (exps.size() != nvars) throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
  MultiPoly p(nvars);
  if (!coeff.is_zero()) p.terms_.emplace(std::move(exps), coeff);
  return p;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(total_degree(m)));
  return d;
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& exps, const Rational& coeff) {
  if (exps.size() != nvars_) throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(nvars_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly p(a.nvars_);
  Monomial prod(a.nvars_, 0);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.nvars_; ++i) prod[i] = ma[i] + mb[i];
      p.add_term(prod, ca * cb);
    }
  }
  return p;
}

MultiPoly MultiPoly::partial_derivative(std::size_t var) const {
  if (var >= nvars_) throw std::out_of_range("MultiPoly: derivative variable out of range");
  MultiPoly p(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    Rational factor(static_cast<long long>(d[var]));
    d[var] -= 1;
    p.add_term(d, c * factor);
  }
  return p;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("MultiPoly: evaluation point length mismatch");
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] != 0) t *= pow(point[i], m[i]);
    }
    acc += t;
  }
  return acc;
}

std::pair<Monomial, Rational> MultiPoly::max_term() const {
  if (terms_.empty()) throw std::logic_error("MultiPoly: max_term of zero polynomial");
  auto it = std::prev(terms_.end());
  return {it->first, it->second};
}

std::string MultiPoly::str(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      a = a.abs();
    }
    bool has_vars = total_degree(m) > 0;
    bool coeff_is_one = (a == Rational(1));
    if (!coeff_is_one || !has_vars) os << a;
    bool printed = !coeff_is_one || !has_vars;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (printed) os << "*";
      os << var_prefix << i;
      if (m[i] > 1) os << "^" << m[i];
      printed = true;
    }
    first = false;
  }
  return os.str();
}

MultiPoly exact_div(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw std::logic_error("exact_div: division by zero polynomial");
  MultiPoly quotient(num.nvars());
  MultiPoly rem = num;
  const auto [dm, dc] = den.max_term();
  while (!rem.is_zero()) {
    const auto [rm, rc] = rem.max_term();
    Monomial q(rem.nvars());
    for (std::size_t i = 0; i < rem.nvars(); ++i) {
      if (rm[i] < dm[i]) throw std::logic_error("exact_div: division is not exact");
      q[i] = rm[i] - dm[i];
    }
    MultiPoly t = MultiPoly::monomial(rem.nvars(), q, rc / dc);
    quotient += t;
    rem -= t * den;
  }
  return quotient;
}

MultiPoly poly_partial_derivative(const MultiPoly& p, std::size_t var_index) {
  return p.partial_derivative(var_index);
}

Rational poly_evaluate(const MultiPoly& p, const std::vector<Rational>& point) {
  return p.evaluate(point);
}

namespace {

void enumerate_monomials(std::size_t nvars, std::size_t pos, std::uint32_t remaining,
                         Monomial& current, std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    current[pos] = remaining;
    out.push_back(current);
    return;
  }
  for (std::uint32_t e = remaining; e != 0; --e) {
    current[pos] = e;
    enumerate_monomials(nvars, pos + 1, remaining - e, current, out);
  }
  current[pos] = 0;
  enumerate_monomials(nvars, pos + 1, remaining, current, out);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree) {
  std::vector<Monomial> out;
  if (nvars == 0) return out;
  Monomial current(nvars, 0);
  enumerate_monomials(nvars, 0, degree, current, out);
  return out;
}

}  // namespace liepoisson
