#pragma once

#include "ncsym/polynomial.hpp"

#include <string>

namespace ncsym {

/// Element of Q(t) held as num/den with gcd(num, den) = 1 and den monic.
/// Zero is 0/1. The canonical form is unique, so == compares representations.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(QPoly::constant(1)) {}
  explicit RationalFunction(QPoly num);
  /// Reduces; throws std::domain_error if den is zero.
  RationalFunction(QPoly num, QPoly den);

  static RationalFunction variable() { return RationalFunction(QPoly::affine(1, 0)); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction inverse() const;

  /// f(a*t + b); a must be nonzero.
  RationalFunction substitute_affine(const Rational& a, const Rational& b) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void normalize();
  QPoly num_;
  QPoly den_;
};

}  // namespace ncsym
