#pragma once

#include "ncsym/polynomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ncsym {

/// Q[x, y] / (x^m1 - a, y^m2 - b) with the monomial basis x^p y^q, 0 <= p < m1,
/// 0 <= q < m2, flattened as index p + m1*q. A product of two basis monomials is
/// a rational multiple of a third one, so the multiplication table is one
/// (index, factor) entry per pair. Irreducibility of the presentation is the
/// caller's responsibility.
class NumberField {
 public:
  NumberField(int m1, Rational a, std::string x_name, int m2, Rational b, std::string y_name);

  int degree() const { return deg_; }
  int m1() const { return m1_; }
  int m2() const { return m2_; }

  struct Entry {
    int index;
    Rational factor;
  };
  const Entry& product(int u, int v) const { return table_[static_cast<std::size_t>(u * deg_ + v)]; }

  std::vector<Rational> mul(const std::vector<Rational>& u, const std::vector<Rational>& v) const;
  /// Throws std::domain_error on zero.
  std::vector<Rational> inverse(const std::vector<Rational>& u) const;

  std::vector<Rational> unit() const;
  std::vector<Rational> basis_vector(int k) const;
  /// x and y as coordinate vectors.
  std::vector<Rational> gen_x() const { return basis_vector(m1_ > 1 ? 1 : 0); }
  std::vector<Rational> gen_y() const { return basis_vector(m2_ > 1 ? m1_ : 0); }

  std::string to_string(const std::vector<Rational>& u) const;

 private:
  int m1_, m2_, deg_;
  Rational a_, b_;
  std::string x_name_, y_name_;
  std::vector<Entry> table_;
};

/// Dense matrix over Q; solves M x = rhs, returns false if M is singular.
bool solve_rational_system(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs,
                           std::vector<Rational>& out);

}  // namespace ncsym
