#include "ncsym/field_element.hpp"

#include <stdexcept>

namespace ncsym {

namespace {

[[noreturn]] void mixed() { throw std::logic_error("field elements from different representations"); }

}  // namespace

FieldElement::FieldElement(std::shared_ptr<const NumberField> field, std::vector<Rational> coords)
    : rep_(Nf{std::move(field), std::move(coords)}) {
  auto& nf = std::get<Nf>(rep_);
  if (!nf.field || static_cast<int>(nf.c.size()) != nf.field->degree())
    throw std::invalid_argument("coordinate vector does not match number field degree");
  for (auto& q : nf.c) q.canonicalize();
}

FieldElement::FieldElement(RationalFunction f) : rep_(std::move(f)) {}

bool FieldElement::is_zero() const {
  if (auto* nf = std::get_if<Nf>(&rep_)) {
    for (const auto& q : nf->c)
      if (sgn(q) != 0) return false;
    return true;
  }
  return std::get<RationalFunction>(rep_).is_zero();
}

const std::vector<Rational>& FieldElement::coords() const {
  if (auto* nf = std::get_if<Nf>(&rep_)) return nf->c;
  throw std::logic_error("coords() on a rational function element");
}

const std::shared_ptr<const NumberField>& FieldElement::number_field() const {
  if (auto* nf = std::get_if<Nf>(&rep_)) return nf->field;
  throw std::logic_error("number_field() on a rational function element");
}

const RationalFunction& FieldElement::rational_function() const {
  if (auto* f = std::get_if<RationalFunction>(&rep_)) return *f;
  throw std::logic_error("rational_function() on a number field element");
}

FieldElement FieldElement::rational(const Rational& q) const {
  if (auto* nf = std::get_if<Nf>(&rep_)) {
    std::vector<Rational> c(nf->c.size());
    c[0] = q;
    return FieldElement(nf->field, std::move(c));
  }
  return FieldElement(RationalFunction(QPoly::constant(q)));
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (auto* nf = std::get_if<Nf>(&r.rep_)) {
    for (auto& q : nf->c) q = -q;
  } else {
    auto& f = std::get<RationalFunction>(r.rep_);
    f = -f;
  }
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (auto* nf = std::get_if<Nf>(&rep_)) {
    auto* on = std::get_if<Nf>(&o.rep_);
    if (!on) mixed();
    for (std::size_t k = 0; k < nf->c.size(); ++k) nf->c[k] += on->c[k];
  } else {
    auto* of = std::get_if<RationalFunction>(&o.rep_);
    if (!of) mixed();
    auto& f = std::get<RationalFunction>(rep_);
    f = f + *of;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  if (auto* nf = std::get_if<Nf>(&rep_)) {
    auto* on = std::get_if<Nf>(&o.rep_);
    if (!on) mixed();
    for (std::size_t k = 0; k < nf->c.size(); ++k) nf->c[k] -= on->c[k];
  } else {
    auto* of = std::get_if<RationalFunction>(&o.rep_);
    if (!of) mixed();
    auto& f = std::get<RationalFunction>(rep_);
    f = f - *of;
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (auto* nf = std::get_if<Nf>(&rep_)) {
    auto* on = std::get_if<Nf>(&o.rep_);
    if (!on) mixed();
    nf->c = nf->field->mul(nf->c, on->c);
  } else {
    auto* of = std::get_if<RationalFunction>(&o.rep_);
    if (!of) mixed();
    auto& f = std::get<RationalFunction>(rep_);
    f = f * *of;
  }
  return *this;
}

FieldElement FieldElement::scaled(const Rational& q) const {
  FieldElement r = *this;
  if (auto* nf = std::get_if<Nf>(&r.rep_)) {
    for (auto& c : nf->c) c *= q;
  } else {
    auto& f = std::get<RationalFunction>(r.rep_);
    f = f * RationalFunction(QPoly::constant(q));
  }
  return r;
}

FieldElement FieldElement::inverse() const {
  if (auto* nf = std::get_if<Nf>(&rep_)) return FieldElement(nf->field, nf->field->inverse(nf->c));
  return FieldElement(std::get<RationalFunction>(rep_).inverse());
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (auto* na = std::get_if<FieldElement::Nf>(&a.rep_)) {
    auto* nb = std::get_if<FieldElement::Nf>(&b.rep_);
    if (!nb) mixed();
    return na->c == nb->c;
  }
  auto* fb = std::get_if<RationalFunction>(&b.rep_);
  if (!fb) mixed();
  return std::get<RationalFunction>(a.rep_) == *fb;
}

std::string FieldElement::to_string() const {
  if (auto* nf = std::get_if<Nf>(&rep_)) return nf->field->to_string(nf->c);
  return std::get<RationalFunction>(rep_).to_string();
}

// ---------------------------------------------------------------------------

Automorphism Automorphism::identity_number_field(std::shared_ptr<const NumberField> field) {
  const auto d = static_cast<std::size_t>(field->degree());
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (std::size_t k = 0; k < d; ++k) m[k][k] = 1;
  return from_matrix(std::move(field), std::move(m));
}

Automorphism Automorphism::from_matrix(std::shared_ptr<const NumberField> field, std::vector<std::vector<Rational>> m) {
  Automorphism u;
  u.field_ = std::move(field);
  u.m_ = std::move(m);
  return u;
}

Automorphism Automorphism::affine(Rational a, Rational b) {
  if (sgn(a) == 0) throw std::invalid_argument("affine automorphism needs a nonzero scale");
  Automorphism u;
  u.a_ = std::move(a);
  u.b_ = std::move(b);
  return u;
}

FieldElement Automorphism::operator()(const FieldElement& x) const {
  if (field_) {
    const auto& c = x.coords();
    const std::size_t d = c.size();
    std::vector<Rational> out(d);
    for (std::size_t col = 0; col < d; ++col) {
      if (sgn(c[col]) == 0) continue;
      for (std::size_t row = 0; row < d; ++row) {
        if (sgn(m_[row][col]) == 0) continue;
        out[row] += m_[row][col] * c[col];
      }
    }
    return FieldElement(field_, std::move(out));
  }
  if (a_ == 1 && sgn(b_) == 0) return x;
  return FieldElement(x.rational_function().substitute_affine(a_, b_));
}

Automorphism operator*(const Automorphism& u, const Automorphism& v) {
  if (u.field_) {
    if (!v.field_) mixed();
    const std::size_t d = u.m_.size();
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t k = 0; k < d; ++k) {
        if (sgn(u.m_[r][k]) == 0) continue;
        for (std::size_t c = 0; c < d; ++c) m[r][c] += u.m_[r][k] * v.m_[k][c];
      }
    return Automorphism::from_matrix(u.field_, std::move(m));
  }
  if (v.field_) mixed();
  // u(t) = a_u t + b_u;  (u v)(t) = u(v(t)) = a_v u(t) + b_v.
  return Automorphism::affine(v.a_ * u.a_, v.a_ * u.b_ + v.b_);
}

bool operator==(const Automorphism& u, const Automorphism& v) {
  if (static_cast<bool>(u.field_) != static_cast<bool>(v.field_)) return false;
  if (u.field_) return u.m_ == v.m_;
  return u.a_ == v.a_ && u.b_ == v.b_;
}

}  // namespace ncsym
