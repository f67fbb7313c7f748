#include "ncsym/field_tower.hpp"

#include <sstream>
#include <stdexcept>

namespace ncsym {

namespace {

constexpr int kCachedWordLength = 64;

std::vector<Rational> unit_vector(int degree, int k) {
  std::vector<Rational> v(static_cast<std::size_t>(degree));
  v[static_cast<std::size_t>(k)] = 1;
  return v;
}

Automorphism matrix_from_generator_images(const std::shared_ptr<const NumberField>& nf, const std::vector<Rational>& x_img,
                                          const std::vector<Rational>& y_img) {
  const int d = nf->degree();
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
  // image of x^p y^q is X^p Y^q
  std::vector<Rational> ypow = nf->unit();
  for (int q = 0; q < nf->m2(); ++q) {
    std::vector<Rational> img = ypow;
    for (int p = 0; p < nf->m1(); ++p) {
      const auto col = static_cast<std::size_t>(p + nf->m1() * q);
      for (std::size_t row = 0; row < img.size(); ++row) m[row][col] = img[row];
      img = nf->mul(img, x_img);
    }
    ypow = nf->mul(ypow, y_img);
  }
  return Automorphism::from_matrix(nf, std::move(m));
}

}  // namespace

AutomorphismWord operator*(const AutomorphismWord& u, const AutomorphismWord& v) {
  AutomorphismWord r = u;
  r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
  return r;
}

std::string AutomorphismWord::to_string() const {
  if (letters.empty()) return "id";
  std::string s;
  for (int l : letters) s += "tau" + std::to_string(l);
  return s;
}

std::string to_string(Algebraicity a) {
  switch (a) {
    case Algebraicity::Algebraic: return "Algebraic";
    case Algebraicity::NonAlgebraic: return "NonAlgebraic";
    case Algebraicity::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(SigmaOrder::Kind k) {
  switch (k) {
    case SigmaOrder::Kind::Finite: return "Finite";
    case SigmaOrder::Kind::ExceedsBound: return "ExceedsBound";
    case SigmaOrder::Kind::CertifiedInfinite: return "CertifiedInfinite";
  }
  return "ExceedsBound";
}

std::shared_ptr<const FieldTowerInstance> FieldTowerInstance::from_descriptor(const NumberFieldDescriptor& d) {
  auto nf = std::make_shared<const NumberField>(d.m1, d.a, d.x_name, d.m2, d.b, d.y_name);
  std::shared_ptr<FieldTowerInstance> inst(new FieldTowerInstance());
  inst->key_ = d.key;
  inst->description_ = d.description;
  inst->subfield_names_ = d.subfield_names;
  inst->nf_ = nf;
  inst->one_ = FieldElement(nf, nf->unit());
  if (d.m1 > 1) {
    inst->generators_.emplace_back(nf, nf->gen_x());
    inst->generator_names_.push_back(d.x_name);
  }
  if (d.m2 > 1) {
    inst->generators_.emplace_back(nf, nf->gen_y());
    inst->generator_names_.push_back(d.y_name);
  }
  for (std::size_t i = 0; i < 2; ++i) {
    inst->tau_[i] = matrix_from_generator_images(nf, d.tau_images[i].first, d.tau_images[i].second);
    inst->w_[i] = FieldElement(nf, d.w[i]);
  }
  inst->build_caches();
  return inst;
}

std::shared_ptr<const FieldTowerInstance> FieldTowerInstance::from_descriptor(const RationalFunctionDescriptor& d) {
  std::shared_ptr<FieldTowerInstance> inst(new FieldTowerInstance());
  inst->key_ = d.key;
  inst->description_ = d.description;
  inst->subfield_names_ = d.subfield_names;
  inst->one_ = FieldElement(RationalFunction(QPoly::constant(1)));
  inst->generators_.emplace_back(RationalFunction::variable());
  inst->generator_names_.push_back("t");
  for (std::size_t i = 0; i < 2; ++i) {
    inst->tau_[i] = Automorphism::affine(d.tau_affine[i].first, d.tau_affine[i].second);
    inst->w_[i] = FieldElement(d.w[i]);
  }
  inst->build_caches();
  return inst;
}

void FieldTowerInstance::build_caches() {
  for (int first = 0; first < 2; ++first) {
    auto& cache = alternating_[static_cast<std::size_t>(first)];
    cache.clear();
    cache.push_back(identity());
    // alternating word of length L starting with `first`: tau_first tau_{first+1} ...
    for (int len = 1; len <= kCachedWordLength; ++len) {
      const int last = parity(first + len - 1);
      cache.push_back(cache.back() * tau(last));
    }
  }
}

std::shared_ptr<const FieldTowerInstance> FieldTowerInstance::biquadratic() {
  static const auto inst = [] {
    NumberFieldDescriptor d;
    d.key = "biquadratic";
    d.description = "F = Q(sqrt2, sqrt3), K0 = Q(sqrt2), K1 = Q(sqrt3)";
    d.m1 = 2;
    d.a = 2;
    d.x_name = "sqrt2";
    d.m2 = 2;
    d.b = 3;
    d.y_name = "sqrt3";
    // basis 1, sqrt2, sqrt3, sqrt6
    const auto x = unit_vector(4, 1), y = unit_vector(4, 2);
    auto neg = [](std::vector<Rational> v) {
      for (auto& q : v) q = -q;
      return v;
    };
    d.tau_images[0] = {x, neg(y)};
    d.tau_images[1] = {neg(x), y};
    // w_{i+1} must avoid K_i as well, otherwise g_i collapses into the relations.
    d.w[0] = unit_vector(4, 3);
    d.w[1] = unit_vector(4, 3);
    d.subfield_names = {"Q(sqrt2)", "Q(sqrt3)"};
    return from_descriptor(d);
  }();
  return inst;
}

std::shared_ptr<const FieldTowerInstance> FieldTowerInstance::d4_quartic() {
  static const auto inst = [] {
    NumberFieldDescriptor d;
    d.key = "d4-quartic";
    d.description = "F = Q(i, r) with r^4 = 2, K0 = Q(r), K1 = Q(i*r)";
    d.m1 = 4;
    d.a = 2;
    d.x_name = "r";
    d.m2 = 2;
    d.b = -1;
    d.y_name = "i";
    // basis r^p i^q at index p + 4q
    const auto x = unit_vector(8, 1), y = unit_vector(8, 4);
    auto neg = [](std::vector<Rational> v) {
      for (auto& q : v) q = -q;
      return v;
    };
    d.tau_images[0] = {x, neg(y)};       // i -> -i, r -> r
    d.tau_images[1] = {neg(x), neg(y)};  // i -> -i, r -> -r
    d.w[0] = unit_vector(8, 4);
    d.w[1] = unit_vector(8, 4);
    d.subfield_names = {"Q(r)", "Q(i*r)"};
    return from_descriptor(d);
  }();
  return inst;
}

std::shared_ptr<const FieldTowerInstance> FieldTowerInstance::rational_function() {
  static const auto inst = [] {
    RationalFunctionDescriptor d;
    d.key = "rational-function";
    d.description = "F = Q(t), K0 = Q(t^2), K1 = Q((t-1)^2)";
    d.tau_affine[0] = {-1, 0};
    d.tau_affine[1] = {-1, 2};
    d.w[0] = RationalFunction::variable();
    d.w[1] = RationalFunction(QPoly::affine(1, -1));
    d.subfield_names = {"Q(t^2)", "Q((t-1)^2)"};
    return from_descriptor(d);
  }();
  return inst;
}

std::shared_ptr<const FieldTowerInstance> FieldTowerInstance::by_key(const std::string& key) {
  if (key == "biquadratic") return biquadratic();
  if (key == "d4-quartic") return d4_quartic();
  if (key == "rational-function") return rational_function();
  return nullptr;
}

std::vector<std::string> FieldTowerInstance::builtin_keys() { return {"biquadratic", "d4-quartic", "rational-function"}; }

FieldElement FieldTowerInstance::trace(long long i, const FieldElement& x) const {
  return (x + apply_tau(i, x)).scaled(Rational(1, 2));
}

std::pair<FieldElement, FieldElement> FieldTowerInstance::decompose_over_subfield(long long i, const FieldElement& x) const {
  FieldElement c0 = trace(i, x);
  FieldElement c1 = (x - c0) / w(i);
  return {std::move(c0), std::move(c1)};
}

Automorphism FieldTowerInstance::identity() const {
  if (nf_) return Automorphism::identity_number_field(nf_);
  return Automorphism::affine(1, 0);
}

const Automorphism& FieldTowerInstance::alternating(int first, int length) const {
  const auto& cache = alternating_[static_cast<std::size_t>(parity(first))];
  if (length < 0 || length >= static_cast<int>(cache.size()))
    throw std::out_of_range("alternating word longer than the cached range");
  return cache[static_cast<std::size_t>(length)];
}

Automorphism FieldTowerInstance::automorphism(const AutomorphismWord& u) const {
  // Free reduction: tau_i tau_i = id leaves an alternating word.
  std::vector<int> reduced;
  for (int l : u.letters) {
    const int p = parity(l);
    if (!reduced.empty() && reduced.back() == p) {
      reduced.pop_back();
    } else {
      reduced.push_back(p);
    }
  }
  if (reduced.empty()) return identity();
  if (static_cast<int>(reduced.size()) < static_cast<int>(alternating_[0].size()))
    return alternating(reduced.front(), static_cast<int>(reduced.size()));
  Automorphism r = identity();
  for (int l : reduced) r = r * tau(l);
  return r;
}

FieldElement FieldTowerInstance::eval_word(const AutomorphismWord& u, const FieldElement& x) const {
  FieldElement r = x;
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) r = apply_tau(*it, r);
  return r;
}

SigmaOrder FieldTowerInstance::sigma_order(int bound) const {
  if (bound < 1) throw std::invalid_argument("sigma_order bound must be >= 1");
  const Automorphism sigma = tau(1) * tau(0);
  if (sigma.is_affine() && sigma.affine_scale() == 1 && sgn(sigma.affine_shift()) != 0) {
    const Rational c = sigma.affine_shift();
    const std::string sign = sgn(c) < 0 ? " - " : " + ";
    const std::string mag = Rational(abs(c)).get_str();
    std::ostringstream os;
    os << "sigma(t) = t" << sign << mag << ", so sigma^n(t) = t" << sign << mag << "*n != t for all n >= 1";
    return {SigmaOrder::Kind::CertifiedInfinite, 0, os.str()};
  }
  std::vector<FieldElement> images = generators_;
  for (int n = 1; n <= bound; ++n) {
    bool fixed = true;
    for (std::size_t g = 0; g < images.size(); ++g) {
      images[g] = sigma(images[g]);
      if (images[g] != generators_[g]) fixed = false;
    }
    if (fixed) {
      std::ostringstream os;
      os << "sigma^" << n << " fixes every generator";
      return {SigmaOrder::Kind::Finite, n, os.str()};
    }
  }
  return {SigmaOrder::Kind::ExceedsBound, 0, "no sigma^n = id for n <= " + std::to_string(bound)};
}

Algebraicity FieldTowerInstance::classify_algebraic(int bound) const {
  switch (sigma_order(bound).kind) {
    case SigmaOrder::Kind::Finite: return Algebraicity::Algebraic;
    case SigmaOrder::Kind::CertifiedInfinite: return Algebraicity::NonAlgebraic;
    case SigmaOrder::Kind::ExceedsBound: return Algebraicity::Unknown;
  }
  return Algebraicity::Unknown;
}

std::optional<int> FieldTowerInstance::prime_field_degree() const {
  if (nf_) return nf_->degree();
  return std::nullopt;
}

std::vector<FieldElement> FieldTowerInstance::subfield_rational_basis(long long i) const {
  if (!nf_) throw std::logic_error("subfield_rational_basis needs a number field instance");
  // Traces of the Q-basis span K_i; keep an independent subset by elimination.
  std::vector<FieldElement> basis;
  std::vector<std::vector<Rational>> echelon;
  std::vector<int> pivots;
  for (int k = 0; k < nf_->degree(); ++k) {
    FieldElement tr = trace(i, FieldElement(nf_, nf_->basis_vector(k)));
    std::vector<Rational> v = tr.coords();
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      const auto p = static_cast<std::size_t>(pivots[r]);
      if (sgn(v[p]) == 0) continue;
      const Rational f = v[p] / echelon[r][p];
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * echelon[r][c];
    }
    int piv = -1;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (sgn(v[c]) != 0) {
        piv = static_cast<int>(c);
        break;
      }
    if (piv < 0) continue;
    echelon.push_back(std::move(v));
    pivots.push_back(piv);
    basis.push_back(std::move(tr));
  }
  return basis;
}

}  // namespace ncsym
