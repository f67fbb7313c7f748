#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace ncsym {

using Rational = mpq_class;

/// Dense univariate polynomial over the rationals, coefficients stored from the
/// constant term upwards. The zero polynomial has no coefficients; otherwise the
/// leading coefficient is nonzero.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  /// a*t + b
  static QPoly affine(const Rational& a, const Rational& b);
  static QPoly monomial(const Rational& c, int degree);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& lead() const { return c_.back(); }
  Rational coeff(int k) const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly scaled(const Rational& s) const;

  /// Euclidean division; throws std::domain_error on a zero divisor.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
  QPoly monic() const;

  /// p(a*t + b)
  QPoly compose_affine(const Rational& a, const Rational& b) const;

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero if both inputs are zero).
QPoly gcd(QPoly a, QPoly b);

}  // namespace ncsym
