#include "ncsym/rational_function.hpp"

#include <stdexcept>

namespace ncsym {

RationalFunction::RationalFunction(QPoly num) : num_(std::move(num)), den_(QPoly::constant(1)) {}

RationalFunction::RationalFunction(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    QPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  Rational lead = den_.lead();
  if (lead != 1) {
    num_ = num_.scaled(1 / lead);
    den_ = den_.scaled(1 / lead);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Cross-cancel first; keeps the final gcd small.
  QPoly g1 = gcd(a.num_, b.den_);
  QPoly g2 = gcd(b.num_, a.den_);
  QPoly n1 = a.num_, d2 = b.den_, n2 = b.num_, d1 = a.den_;
  if (g1.degree() > 0) {
    n1 = n1.divmod(g1).first;
    d2 = d2.divmod(g1).first;
  }
  if (g2.degree() > 0) {
    n2 = n2.divmod(g2).first;
    d1 = d1.divmod(g2).first;
  }
  RationalFunction r;
  r.num_ = n1 * n2;
  r.den_ = d1 * d2;
  Rational lead = r.den_.lead();
  if (lead != 1) {
    r.num_ = r.num_.scaled(1 / lead);
    r.den_ = r.den_.scaled(1 / lead);
  }
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  RationalFunction r;
  r.num_ = den_;
  r.den_ = num_;
  Rational lead = r.den_.lead();
  r.num_ = r.num_.scaled(1 / lead);
  r.den_ = r.den_.scaled(1 / lead);
  return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::substitute_affine(const Rational& a, const Rational& b) const {
  if (sgn(a) == 0) throw std::domain_error("degenerate affine substitution");
  // An affine substitution is an automorphism, so coprimality is preserved.
  RationalFunction r;
  r.num_ = num_.compose_affine(a, b);
  r.den_ = den_.compose_affine(a, b);
  Rational lead = r.den_.lead();
  if (lead != 1) {
    r.num_ = r.num_.scaled(1 / lead);
    r.den_ = r.den_.scaled(1 / lead);
  }
  return r;
}

std::string RationalFunction::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace ncsym
