#include "ncsym/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace ncsym {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

QPoly QPoly::constant(const Rational& c) { return QPoly({c}); }

QPoly QPoly::affine(const Rational& a, const Rational& b) { return QPoly({b, a}); }

QPoly QPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

Rational QPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<std::size_t>(k)];
}

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t x = 0; x < a.c_.size(); ++x) {
    if (sgn(a.c_[x]) == 0) continue;
    for (std::size_t y = 0; y < b.c_.size(); ++y) r[x + y] += a.c_[x] * b.c_[y];
  }
  QPoly p;
  p.c_ = std::move(r);
  p.trim();
  return p;
}

QPoly QPoly::scaled(const Rational& s) const {
  if (sgn(s) == 0) return {};
  QPoly r = *this;
  for (auto& q : r.c_) q *= s;
  return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  QPoly rem = *this;
  if (rem.degree() < d.degree()) return {QPoly{}, rem};
  std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - d.degree()) + 1);
  const Rational inv_lead = 1 / d.lead();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    const int shift = rem.degree() - d.degree();
    Rational f = rem.lead() * inv_lead;
    quot[static_cast<std::size_t>(shift)] = f;
    for (std::size_t k = 0; k < d.c_.size(); ++k) rem.c_[k + static_cast<std::size_t>(shift)] -= f * d.c_[k];
    rem.trim();
  }
  QPoly q;
  q.c_ = std::move(quot);
  q.trim();
  return {q, rem};
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  return scaled(1 / lead());
}

QPoly QPoly::compose_affine(const Rational& a, const Rational& b) const {
  // Horner in the substituted variable.
  QPoly r;
  const QPoly lin = affine(a, b);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r = r * lin;
    r += constant(*it);
  }
  return r;
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& q = c_[static_cast<std::size_t>(k)];
    if (sgn(q) == 0) continue;
    Rational mag = abs(q);
    if (first) {
      if (sgn(q) < 0) os << "-";
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      os << mag.get_str();
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace ncsym
