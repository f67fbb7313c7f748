#include "ncsym/tensor.hpp"

#include <stdexcept>

namespace ncsym {

namespace {

const Automorphism& alternating_of(const FieldTowerInstance& inst, const std::vector<int>& w) {
  if (w.empty()) return inst.alternating(0, 0);
  return inst.alternating(w.front(), static_cast<int>(w.size()));
}

void push_letter(std::vector<int>& w, int p) {
  if (!w.empty() && w.back() == p) {
    w.pop_back();
  } else {
    w.push_back(p);
  }
}

void check_same_piece(const TensorElement& a, const TensorElement& b) {
  if (a.start() != b.start() || a.end() != b.end()) throw std::invalid_argument("tensor elements live in different pieces");
}

}  // namespace

std::vector<int> reduced_bar_word(long long i, long long n, Pattern s) {
  std::vector<int> w;
  for (int q = 0; q < pattern_bits(n); ++q)
    if ((s >> q) & 1U) push_letter(w, parity(i + q + 1));
  return w;
}

const Automorphism& bar(const FieldTowerInstance& inst, long long i, long long n, Pattern s) {
  return alternating_of(inst, reduced_bar_word(i, n, s));
}

const Automorphism& bar_then_tau(const FieldTowerInstance& inst, long long i, long long n, Pattern s) {
  auto w = reduced_bar_word(i, n, s);
  push_letter(w, parity(i + n));
  return alternating_of(inst, w);
}

std::string pattern_text(long long n, Pattern s) {
  std::string out;
  for (int q = 0; q < pattern_bits(n); ++q) out.push_back(((s >> q) & 1U) ? '1' : '0');
  return out;
}

TensorElement::TensorElement(InstancePtr inst, long long i, long long j) : inst_(std::move(inst)), i_(i), j_(j) {
  if (j < i) throw std::invalid_argument("tensor piece needs j >= i");
}

TensorElement TensorElement::scalar(InstancePtr inst, long long i, const FieldElement& c) {
  TensorElement t(std::move(inst), i, i);
  t.set(0, c);
  return t;
}

TensorElement TensorElement::concentrated(InstancePtr inst, long long i, long long j, Pattern s, const FieldElement& v) {
  TensorElement t(std::move(inst), i, j);
  t.set(s, v);
  return t;
}

FieldElement TensorElement::component(Pattern s) const {
  auto it = comp_.find(s);
  return it == comp_.end() ? inst_->zero() : it->second;
}

void TensorElement::set(Pattern s, FieldElement v) {
  if (s > tau_pattern(degree())) throw std::out_of_range("pattern outside the piece");
  if (v.is_zero()) {
    comp_.erase(s);
  } else {
    comp_.insert_or_assign(s, std::move(v));
  }
}

void TensorElement::add(Pattern s, const FieldElement& v) {
  if (v.is_zero()) return;
  auto it = comp_.find(s);
  if (it == comp_.end()) {
    set(s, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) comp_.erase(it);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  check_same_piece(*this, o);
  for (const auto& [s, v] : o.comp_) add(s, v);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  check_same_piece(*this, o);
  for (const auto& [s, v] : o.comp_) add(s, -v);
  return *this;
}

TensorElement TensorElement::left_scaled(const FieldElement& c) const {
  TensorElement r(inst_, i_, j_);
  if (c.is_zero()) return r;
  for (const auto& [s, v] : comp_) r.comp_.emplace(s, c * v);
  return r;
}

TensorElement TensorElement::shifted_to(long long i) const {
  if (parity(i) != parity(i_)) throw std::invalid_argument("shift must preserve parity");
  TensorElement r(inst_, i, i + degree());
  r.comp_ = comp_;
  return r;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  return a.i_ == b.i_ && a.j_ == b.j_ && a.comp_ == b.comp_;
}

nlohmann::ordered_json TensorElement::to_json() const {
  nlohmann::ordered_json j;
  j["i"] = i_;
  j["j"] = j_;
  auto comps = nlohmann::ordered_json::array();
  for (const auto& [s, v] : comp_) comps.push_back({{"pattern", pattern_text(degree(), s)}, {"value", v.to_string()}});
  j["components"] = std::move(comps);
  return j;
}

TensorElement mu(InstancePtr inst, long long i, const std::vector<FieldElement>& factors) {
  if (factors.empty()) throw std::invalid_argument("mu needs at least one factor");
  const long long n = static_cast<long long>(factors.size());
  TensorElement out(inst, i, i + n);
  for (Pattern s = 0; s <= tau_pattern(n); ++s) {
    FieldElement v = factors[0];
    std::vector<int> w;
    for (long long k = 1; k < n && !v.is_zero(); ++k) {
      if ((s >> (k - 1)) & 1U) push_letter(w, parity(i + k));
      v *= alternating_of(*inst, w)(factors[static_cast<std::size_t>(k)]);
    }
    out.set(s, std::move(v));
  }
  return out;
}

TensorElement star_mul(const TensorElement& a, const TensorElement& b) {
  if (a.end() != b.start()) throw std::invalid_argument("star_mul: index mismatch");
  const auto& inst = *a.instance();
  const long long i = a.start(), j = a.end(), l = b.end();
  const long long n1 = j - i;
  TensorElement out(a.instance(), i, l);
  if (n1 == 0) {
    const FieldElement c = a.component(0);
    for (const auto& [s, v] : b.components()) out.add(s, c * v);
    return out;
  }
  if (l == j) {
    const FieldElement c = b.component(0);
    for (const auto& [s, v] : a.components()) out.add(s, v * bar(inst, i, n1, s)(c));
    return out;
  }
  for (const auto& [s, av] : a.components()) {
    const Automorphism& plain = bar(inst, i, n1, s);
    const Automorphism& twisted = bar_then_tau(inst, i, n1, s);
    for (const auto& [t, bv] : b.components()) {
      const Pattern base = s | (t << n1);
      out.add(base, av * plain(bv));
      out.add(base | (Pattern{1} << (n1 - 1)), av * twisted(bv));
    }
  }
  return out;
}

std::size_t tensor_dim(long long n) { return n == 0 ? 1 : (std::size_t{1} << n); }

Vec coords_over_start_field(const TensorElement& a) {
  const auto& inst = *a.instance();
  const long long n = a.degree();
  Vec c(tensor_dim(n), inst.zero());
  if (n == 0) {
    c[0] = a.component(0);
    return c;
  }
  for (const auto& [s, v] : a.components()) {
    auto [c0, c1] = inst.decompose_over_subfield(a.start(), v);
    c[2 * s] = std::move(c0);
    c[2 * s + 1] = std::move(c1);
  }
  return c;
}

TensorElement from_coords(InstancePtr inst, long long i, long long j, const Vec& coords) {
  const long long n = j - i;
  if (coords.size() != tensor_dim(n)) throw std::invalid_argument("from_coords: wrong length");
  TensorElement t(inst, i, j);
  if (n == 0) {
    t.set(0, coords[0]);
    return t;
  }
  const FieldElement& w = inst->w(i);
  for (Pattern s = 0; s <= tau_pattern(n); ++s) t.set(s, coords[2 * s] + coords[2 * s + 1] * w);
  return t;
}

TensorElement h_prime(InstancePtr inst, long long l) {
  const FieldElement two = inst->rational(2);
  return TensorElement::concentrated(std::move(inst), l, l + 2, 0, two);
}

TensorElement g_prime(InstancePtr inst, long long l) {
  const FieldElement v = inst->w(l + 1).scaled(2);
  return TensorElement::concentrated(std::move(inst), l, l + 2, 0, v);
}

std::vector<std::vector<FieldElement>> h_pure_terms(const FieldTowerInstance& inst, long long l) {
  const FieldElement& w = inst.w(l + 1);
  return {{inst.one(), inst.one()}, {w.inverse(), w}};
}

std::vector<std::vector<FieldElement>> g_pure_terms(const FieldTowerInstance& inst, long long l) {
  const FieldElement& w = inst.w(l + 1);
  return {{w, inst.one()}, {inst.one(), w}};
}

std::vector<TensorElement> tensor_basis(InstancePtr inst, long long i, long long j) {
  std::vector<TensorElement> out;
  const long long n = j - i;
  if (n == 0) {
    out.push_back(TensorElement::scalar(inst, i, inst->one()));
    return out;
  }
  for (Pattern s = 0; s <= tau_pattern(n); ++s) {
    out.push_back(TensorElement::concentrated(inst, i, j, s, inst->one()));
    out.push_back(TensorElement::concentrated(inst, i, j, s, inst->w(i)));
  }
  return out;
}

}  // namespace ncsym
