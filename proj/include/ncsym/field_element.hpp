#pragma once

#include "ncsym/number_field.hpp"
#include "ncsym/rational_function.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace ncsym {

/// An exact element of the ground field F. Either a coordinate vector over Q in a
/// NumberField basis or a reduced element of Q(t). Mixing representations in one
/// operation is a logic error.
class FieldElement {
 public:
  FieldElement(std::shared_ptr<const NumberField> field, std::vector<Rational> coords);
  explicit FieldElement(RationalFunction f);

  bool is_zero() const;
  bool is_number_field() const { return std::holds_alternative<Nf>(rep_); }

  const std::vector<Rational>& coords() const;
  const std::shared_ptr<const NumberField>& number_field() const;
  const RationalFunction& rational_function() const;

  /// Element of the same field representing the rational q.
  FieldElement rational(const Rational& q) const;
  FieldElement zero_like() const { return rational(0); }
  FieldElement one_like() const { return rational(1); }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
  FieldElement scaled(const Rational& q) const;
  /// Throws std::domain_error on zero.
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  struct Nf {
    std::shared_ptr<const NumberField> field;
    std::vector<Rational> c;
  };
  std::variant<Nf, RationalFunction> rep_;
};

/// A field automorphism of F. For number fields a matrix over Q acting on
/// coordinates (column k is the image of basis vector k); for Q(t) the
/// substitution t -> a*t + b.
class Automorphism {
 public:
  static Automorphism identity_number_field(std::shared_ptr<const NumberField> field);
  static Automorphism from_matrix(std::shared_ptr<const NumberField> field, std::vector<std::vector<Rational>> m);
  static Automorphism affine(Rational a, Rational b);

  FieldElement operator()(const FieldElement& x) const;
  /// (u * v)(x) = u(v(x))
  friend Automorphism operator*(const Automorphism& u, const Automorphism& v);
  friend bool operator==(const Automorphism& u, const Automorphism& v);

  bool is_affine() const { return !field_; }
  const Rational& affine_scale() const { return a_; }
  const Rational& affine_shift() const { return b_; }
  const std::vector<std::vector<Rational>>& matrix() const { return m_; }

 private:
  std::shared_ptr<const NumberField> field_;
  std::vector<std::vector<Rational>> m_;
  Rational a_ = 1, b_ = 0;
};

}  // namespace ncsym
