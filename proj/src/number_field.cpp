#include "ncsym/number_field.hpp"

#include <sstream>
#include <stdexcept>

namespace ncsym {

NumberField::NumberField(int m1, Rational a, std::string x_name, int m2, Rational b, std::string y_name)
    : m1_(m1), m2_(m2), deg_(m1 * m2), a_(std::move(a)), b_(std::move(b)),
      x_name_(std::move(x_name)), y_name_(std::move(y_name)) {
  if (m1 < 1 || m2 < 1) throw std::invalid_argument("number field exponents must be positive");
  table_.reserve(static_cast<std::size_t>(deg_ * deg_));
  for (int u = 0; u < deg_; ++u) {
    for (int v = 0; v < deg_; ++v) {
      int p = u % m1_ + v % m1_;
      int q = u / m1_ + v / m1_;
      Rational f = 1;
      if (p >= m1_) {
        p -= m1_;
        f *= a_;
      }
      if (q >= m2_) {
        q -= m2_;
        f *= b_;
      }
      table_.push_back({p + m1_ * q, f});
    }
  }
}

std::vector<Rational> NumberField::mul(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
  std::vector<Rational> r(static_cast<std::size_t>(deg_));
  for (int x = 0; x < deg_; ++x) {
    if (sgn(u[static_cast<std::size_t>(x)]) == 0) continue;
    for (int y = 0; y < deg_; ++y) {
      if (sgn(v[static_cast<std::size_t>(y)]) == 0) continue;
      const Entry& e = product(x, y);
      r[static_cast<std::size_t>(e.index)] += e.factor * u[static_cast<std::size_t>(x)] * v[static_cast<std::size_t>(y)];
    }
  }
  return r;
}

std::vector<Rational> NumberField::inverse(const std::vector<Rational>& u) const {
  // Columns of the multiplication-by-u matrix are u * e_k.
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(deg_), std::vector<Rational>(static_cast<std::size_t>(deg_)));
  for (int k = 0; k < deg_; ++k) {
    for (int x = 0; x < deg_; ++x) {
      if (sgn(u[static_cast<std::size_t>(x)]) == 0) continue;
      const Entry& e = product(x, k);
      m[static_cast<std::size_t>(e.index)][static_cast<std::size_t>(k)] += e.factor * u[static_cast<std::size_t>(x)];
    }
  }
  std::vector<Rational> out;
  if (!solve_rational_system(std::move(m), unit(), out)) throw std::domain_error("inverse of zero number field element");
  return out;
}

std::vector<Rational> NumberField::unit() const { return basis_vector(0); }

std::vector<Rational> NumberField::basis_vector(int k) const {
  std::vector<Rational> r(static_cast<std::size_t>(deg_));
  r[static_cast<std::size_t>(k)] = 1;
  return r;
}

std::string NumberField::to_string(const std::vector<Rational>& u) const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < deg_; ++k) {
    const Rational& q = u[static_cast<std::size_t>(k)];
    if (sgn(q) == 0) continue;
    const int p = k % m1_, e = k / m1_;
    std::string mono;
    if (p > 0) mono += x_name_ + (p > 1 ? "^" + std::to_string(p) : "");
    if (e > 0) mono += (mono.empty() ? "" : "*") + y_name_ + (e > 1 ? "^" + std::to_string(e) : "");
    Rational mag = abs(q);
    os << (first ? (sgn(q) < 0 ? "-" : "") : (sgn(q) < 0 ? " - " : " + "));
    first = false;
    if (mono.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << mono;
    }
  }
  return first ? "0" : os.str();
}

bool solve_rational_system(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs, std::vector<Rational>& out) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) return false;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    const Rational inv = 1 / m[col][col];
    for (std::size_t c = col; c < n; ++c) m[col][c] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  out = std::move(rhs);
  return true;
}

}  // namespace ncsym
