#include "ncsym/sym_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncsym {

std::size_t slot_count(long long n) { return static_cast<std::size_t>(n / 2 + 1); }

SymElement::SymElement(InstancePtr inst, long long i, long long j, std::vector<FieldElement> slots)
    : inst_(std::move(inst)), i_(i), j_(j), slots_(std::move(slots)) {
  if (j < i) throw std::invalid_argument("SymElement needs j >= i");
  if (slots_.size() != slot_count(j - i)) throw std::invalid_argument("SymElement: wrong slot count");
  if ((j - i) % 2 == 0 && !inst_->is_in_subfield(i, slots_[0]))
    throw std::invalid_argument("SymElement: slot 0 must lie in K_i in even degree");
}

SymElement SymElement::zero(InstancePtr inst, long long i, long long j) {
  std::vector<FieldElement> s(slot_count(j - i), inst->zero());
  return SymElement(std::move(inst), i, j, std::move(s));
}

SymElement SymElement::unit(InstancePtr inst, long long i) {
  std::vector<FieldElement> s{inst->one()};
  return SymElement(std::move(inst), i, i, std::move(s));
}

bool SymElement::is_zero() const {
  for (const auto& x : slots_)
    if (!x.is_zero()) return false;
  return true;
}

SymElement& SymElement::operator+=(const SymElement& o) {
  if (i_ != o.i_ || j_ != o.j_) throw std::invalid_argument("SymElement: piece mismatch");
  for (std::size_t m = 0; m < slots_.size(); ++m) slots_[m] += o.slots_[m];
  return *this;
}

SymElement& SymElement::operator-=(const SymElement& o) {
  if (i_ != o.i_ || j_ != o.j_) throw std::invalid_argument("SymElement: piece mismatch");
  for (std::size_t m = 0; m < slots_.size(); ++m) slots_[m] -= o.slots_[m];
  return *this;
}

SymElement SymElement::operator-() const {
  SymElement r = *this;
  for (auto& x : r.slots_) x = -x;
  return r;
}

SymElement SymElement::left_scaled(const FieldElement& c) const {
  SymElement r = *this;
  for (auto& x : r.slots_) x = c * x;
  return r;
}

SymElement SymElement::shifted_to(long long i) const {
  if (parity(i) != parity(i_)) throw std::invalid_argument("shift must preserve parity");
  return SymElement(inst_, i, i + degree(), slots_);
}

bool operator==(const SymElement& a, const SymElement& b) {
  return a.i_ == b.i_ && a.j_ == b.j_ && a.slots_ == b.slots_;
}

nlohmann::ordered_json SymElement::to_json() const {
  nlohmann::ordered_json j;
  j["i"] = i_;
  j["j"] = j_;
  auto s = nlohmann::ordered_json::array();
  for (const auto& x : slots_) s.push_back(x.to_string());
  j["slots"] = std::move(s);
  return j;
}

std::vector<SparseVec> SymAlgebra::relation_spanning_set(long long i, long long j, bool reverse_order) const {
  std::vector<SparseVec> rows;
  std::vector<long long> ls;
  for (long long l = i; l <= j - 2; ++l) ls.push_back(l);
  if (reverse_order) std::reverse(ls.begin(), ls.end());
  for (long long l : ls) {
    auto piece = relation_piece(i, j, l);
    rows.insert(rows.end(), std::make_move_iterator(piece.begin()), std::make_move_iterator(piece.end()));
  }
  return rows;
}

std::vector<SparseVec> SymAlgebra::relation_piece(long long i, long long j, long long l) const {
  if (l < i || l > j - 2) throw std::invalid_argument("relation_piece: l out of range");
  std::vector<SparseVec> rows;
  const TensorElement h = h_prime(inst_, l);
  const auto right = tensor_basis(inst_, l + 2, j);
  for (const auto& a : tensor_basis(inst_, i, l)) {
    const TensorElement ah = star_mul(a, h);
    for (const auto& b : right) rows.push_back(to_sparse(coords_over_start_field(star_mul(ah, b))));
  }
  return rows;
}

std::shared_ptr<const RelationSpace> SymAlgebra::relation_space(long long i, long long j) const {
  if (j - i < 2) throw std::invalid_argument("relation_space needs j - i >= 2");
  const auto key = std::make_pair(parity(i), j - i);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto rs = std::make_shared<RelationSpace>();
  rs->i = key.first;
  rs->j = key.first + key.second;
  for (auto& row : relation_spanning_set(rs->i, rs->j, false)) rs->echelon.insert(std::move(row));
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return cache_.emplace(key, std::move(rs)).first->second;
}

std::size_t SymAlgebra::intersection_dim(long long i, long long j, long long l, long long lp) const {
  return intersection_dimension(relation_piece(i, j, l), relation_piece(i, j, lp));
}

TensorElement SymAlgebra::section(const SymElement& a) const {
  const long long i = a.start(), n = a.degree();
  const std::size_t k = a.slots().size() - 1;
  TensorElement cur = (n % 2 == 0) ? TensorElement::scalar(inst_, i, a.slot(0))
                                   : TensorElement::concentrated(inst_, i, i + 1, 0, a.slot(0));
  for (std::size_t m = 1; m <= k; ++m) {
    cur = star_mul(cur, g_prime(inst_, cur.end()));
    cur.add(tau_pattern(cur.degree()), a.slot(m));
  }
  return cur;
}

namespace {

/// Highest position p in [1, n-1] whose bit is zero; 0 if the pattern is all ones.
int last_zero(Pattern s, long long n) {
  for (int p = pattern_bits(n); p >= 1; --p)
    if (!((s >> (p - 1)) & 1U)) return p;
  return 0;
}

}  // namespace

// For t at (i, j) with zero tau_ij component, returns u at (i, j-2) with
// t = u * g'_{j-2} modulo relations.
TensorElement SymAlgebra::lower(const TensorElement& t) const {
  const auto& inst = *inst_;
  const long long i = t.start(), j = t.end(), n = t.degree();
  if (n == 2) {
    const FieldElement v = t.component(0);
    const FieldElement& w = inst.w(i + 1);
    const FieldElement c1 = (v - inst.apply_tau(i, v)) / (w - inst.apply_tau(i, w));
    return TensorElement::scalar(inst_, i, c1.scaled(Rational(1, 2)));
  }
  const int bits = pattern_bits(n);
  std::vector<std::map<Pattern, FieldElement>> bucket(static_cast<std::size_t>(bits) + 1);
  auto put = [&](Pattern s, const FieldElement& v) {
    auto& b = bucket[static_cast<std::size_t>(last_zero(s, n))];
    auto it = b.find(s);
    if (it == b.end()) {
      b.emplace(s, v);
    } else {
      it->second += v;
    }
  };
  for (const auto& [s, v] : t.components()) put(s, v);
  if (!bucket[0].empty()) throw std::logic_error("lower: tau_ij component must be removed first");
  for (int p = 1; p <= bits - 1; ++p) {
    for (const auto& [s, v] : bucket[static_cast<std::size_t>(p)]) {
      if (v.is_zero()) continue;
      if (p == 1) {
        put(s ^ Pattern{2}, -inst.apply_tau(i, v));
      } else {
        put(s ^ (Pattern{1} << (p - 2)) ^ (Pattern{1} << p), -v);
      }
    }
  }
  const Pattern low_mask = (Pattern{1} << (bits - 2)) - 1;
  const Pattern x_bit = Pattern{1} << (bits - 2);
  std::map<Pattern, FieldElement> delta;
  for (const auto& [s, v] : bucket[static_cast<std::size_t>(bits)]) {
    const FieldElement d = (s & x_bit) ? -v : v;
    auto it = delta.find(s & low_mask);
    if (it == delta.end()) {
      delta.emplace(s & low_mask, d);
    } else {
      it->second += d;
    }
  }
  const FieldElement& w = inst.w(j - 1);
  const FieldElement diff = (w - inst.apply_tau(j - 2, w)).scaled(2);
  TensorElement u(inst_, i, j - 2);
  for (const auto& [q, d] : delta) {
    if (d.is_zero()) continue;
    u.set(q, d / bar(inst, i, n - 2, q)(diff));
  }
  return u;
}

SymElement SymAlgebra::project(const TensorElement& t) const {
  const long long i = t.start(), j = t.end();
  std::vector<FieldElement> top_down;
  TensorElement cur = t;
  while (cur.degree() >= 2) {
    const Pattern top = tau_pattern(cur.degree());
    top_down.push_back(cur.component(top));
    cur.set(top, inst_->zero());
    cur = lower(cur);
  }
  std::vector<FieldElement> slots{cur.component(0)};
  slots.insert(slots.end(), top_down.rbegin(), top_down.rend());
  return SymElement(inst_, i, j, std::move(slots));
}

SymElement SymAlgebra::project_by_solve(const TensorElement& t, bool reverse_order) const {
  const long long i = t.start(), j = t.end(), n = j - i;
  if (n < 2) return project(t);
  Echelon rel;
  for (auto& row : relation_spanning_set(i, j, reverse_order)) rel.insert(std::move(row));
  std::vector<Vec> columns;
  const std::size_t dim = tensor_dim(n);
  for (const auto& [pivot, row] : rel.rows()) columns.push_back(to_dense(row, dim, inst_->zero()));
  const std::size_t nrel = columns.size();
  const auto sb = basis(i, j);
  for (const auto& b : sb) columns.push_back(coords_over_start_field(section(b)));
  auto sol = solve_combination(columns, coords_over_start_field(t), inst_->zero());
  if (!sol) throw std::logic_error("project_by_solve: splitting basis is singular");
  Vec c(sol->begin() + static_cast<std::ptrdiff_t>(nrel), sol->end());
  return from_coords(i, j, c);
}

SymElement SymAlgebra::sym_mul(const SymElement& a, const SymElement& b) const {
  if (a.end() != b.start()) throw std::invalid_argument("sym_mul: index mismatch");
  return project(star_mul(section(a), section(b)));
}

SymElement SymAlgebra::g_bar(long long i) const { return g_chain(i, 1); }

SymElement SymAlgebra::g_chain(long long i, long long k) const {
  if (k < 0) throw std::invalid_argument("g_chain needs k >= 0");
  SymElement r = SymElement::zero(inst_, i, i + 2 * k);
  std::vector<FieldElement> s = r.slots();
  s[0] = inst_->one();
  return SymElement(inst_, i, i + 2 * k, std::move(s));
}

SymElement SymAlgebra::right_mul_g(const SymElement& a) const {
  std::vector<FieldElement> s = a.slots();
  s.push_back(inst_->zero());
  return SymElement(inst_, a.start(), a.end() + 2, std::move(s));
}

SymElement SymAlgebra::left_mul_g(const SymElement& a) const { return right_mul_g(unconjugate_by_g(a)); }

std::optional<SymElement> SymAlgebra::right_divide_by_g(const SymElement& c) const {
  if (c.degree() < 2) throw std::invalid_argument("right_divide_by_g needs degree >= 2");
  if (!c.top().is_zero()) return std::nullopt;
  std::vector<FieldElement> s(c.slots().begin(), c.slots().end() - 1);
  return SymElement(inst_, c.start(), c.end() - 2, std::move(s));
}

std::optional<SymElement> SymAlgebra::left_divide_by_g(const SymElement& c) const {
  if (c.degree() < 2) throw std::invalid_argument("left_divide_by_g needs degree >= 2");
  auto r = right_divide_by_g(c);
  if (!r) return std::nullopt;
  return conjugate_by_g(*r);
}

std::optional<SymElement> SymAlgebra::left_divide_by_g_solve(const SymElement& c) const {
  if (c.degree() < 2) throw std::invalid_argument("left_divide_by_g_solve needs degree >= 2");
  const long long i = c.start(), m = c.end();
  const SymElement g = g_bar(i);
  const auto b = basis(i + 2, m);
  std::vector<Vec> columns;
  for (const auto& x : b) columns.push_back(coords(sym_mul(g, x)));
  auto sol = solve_combination(columns, coords(c), inst_->zero());
  if (!sol) return std::nullopt;
  return from_coords(i + 2, m, *sol);
}

bool SymAlgebra::check_g_normality(long long i, long long j) const {
  Echelon left, right, both;
  for (const auto& x : basis(i + 2, j + 2)) {
    const Vec v = coords(sym_mul(g_bar(i), x));
    left.insert(v);
    both.insert(v);
  }
  for (const auto& x : basis(i, j)) {
    const Vec v = coords(right_mul_g(x));
    right.insert(v);
    both.insert(v);
  }
  return left.rank() == right.rank() && both.rank() == left.rank();
}

std::size_t SymAlgebra::quotient_B_dim(long long i, long long n) const {
  if (n < 0) throw std::invalid_argument("quotient_B_dim needs n >= 0");
  const std::size_t full = static_cast<std::size_t>(n + 1);
  if (n < 2) return full;
  Echelon image;
  for (const auto& x : basis(i, i + n - 2)) image.insert(coords(right_mul_g(x)));
  return full - image.rank();
}

const SymAlgebra::SlotTwist& SymAlgebra::slot_twist(long long i, long long d) const {
  const auto key = std::make_pair(parity(i), d);
  {
    std::lock_guard<std::mutex> lock(twist_mutex_);
    auto it = twists_.find(key);
    if (it != twists_.end()) return *it->second;
  }
  const long long i0 = key.first;
  const FieldElement& w = inst_->w(i0);
  auto image = [&](const FieldElement& x) {
    std::vector<FieldElement> s(slot_count(d), inst_->zero());
    s.back() = x;
    const SymElement a(inst_, i0, i0 + d, std::move(s));
    auto r = left_divide_by_g_solve(right_mul_g(a));
    if (!r) throw std::logic_error("slot_twist: g is not normal here");
    for (std::size_t m = 0; m + 1 < r->slots().size(); ++m)
      if (!r->slot(m).is_zero()) throw std::logic_error("slot_twist: conjugation mixes slots");
    return r->top();
  };
  auto tw = std::make_shared<SlotTwist>(SlotTwist{inst_->one(), w, inst_->one(), w});
  if (d > 0) {
    tw->one = image(inst_->one());
    tw->w = image(w);
    // Invert the K_i-linear map with matrix columns (coords of phi(1), coords of phi(w)).
    auto [a, c] = inst_->decompose_over_subfield(i0, tw->one);
    auto [b, e] = inst_->decompose_over_subfield(i0, tw->w);
    const FieldElement det = a * e - b * c;
    if (det.is_zero()) throw std::logic_error("slot_twist: conjugation is singular");
    tw->inv_one = (e - c * w) / det;
    tw->inv_w = (a * w - b) / det;
  }
  std::lock_guard<std::mutex> lock(twist_mutex_);
  return *twists_.emplace(key, std::move(tw)).first->second;
}

FieldElement SymAlgebra::apply_twist(long long i, long long d, const FieldElement& x, bool inverse) const {
  const SlotTwist& tw = slot_twist(i, d);
  auto [c0, c1] = inst_->decompose_over_subfield(i, x);
  return inverse ? c0 * tw.inv_one + c1 * tw.inv_w : c0 * tw.one + c1 * tw.w;
}

SymElement SymAlgebra::conjugate_by_g(const SymElement& a) const {
  const long long n = a.degree();
  std::vector<FieldElement> s;
  for (std::size_t m = 0; m < a.slots().size(); ++m)
    s.push_back(apply_twist(a.start(), n % 2 + 2 * static_cast<long long>(m), a.slot(m), false));
  return SymElement(inst_, a.start() + 2, a.end() + 2, std::move(s));
}

SymElement SymAlgebra::unconjugate_by_g(const SymElement& b) const {
  const long long n = b.degree();
  std::vector<FieldElement> s;
  for (std::size_t m = 0; m < b.slots().size(); ++m)
    s.push_back(apply_twist(b.start(), n % 2 + 2 * static_cast<long long>(m), b.slot(m), true));
  return SymElement(inst_, b.start() - 2, b.end() - 2, std::move(s));
}

std::vector<SymElement> SymAlgebra::basis(long long i, long long j) const {
  const std::size_t d = static_cast<std::size_t>(j - i + 1);
  std::vector<SymElement> out;
  for (std::size_t k = 0; k < d; ++k) {
    Vec c(d, inst_->zero());
    c[k] = inst_->one();
    out.push_back(from_coords(i, j, c));
  }
  return out;
}

Vec SymAlgebra::coords(const SymElement& a) const {
  Vec c;
  const bool even = a.degree() % 2 == 0;
  for (std::size_t m = 0; m < a.slots().size(); ++m) {
    if (even && m == 0) {
      c.push_back(a.slot(0));
      continue;
    }
    auto [c0, c1] = inst_->decompose_over_subfield(a.start(), a.slot(m));
    c.push_back(std::move(c0));
    c.push_back(std::move(c1));
  }
  return c;
}

SymElement SymAlgebra::from_coords(long long i, long long j, const Vec& c) const {
  const long long n = j - i;
  if (c.size() != static_cast<std::size_t>(n + 1)) throw std::invalid_argument("SymAlgebra::from_coords: wrong length");
  std::vector<FieldElement> s;
  std::size_t pos = 0;
  if (n % 2 == 0) s.push_back(c[pos++]);
  const FieldElement& w = inst_->w(i);
  while (pos < c.size()) {
    s.push_back(c[pos] + c[pos + 1] * w);
    pos += 2;
  }
  return SymElement(inst_, i, j, std::move(s));
}

std::pair<long long, long long> eulerian_check(int n) {
  if (n < 2) throw std::invalid_argument("eulerian_check needs n >= 2");
  auto binom = [](long long a, long long b) {
    long long r = 1;
    for (long long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
    return r;
  };
  const long long lhs = (1LL << n) - n - 1;
  long long rhs = 0;
  for (int m = 1; m <= n / 2; ++m) {
    const long long term = binom(n - m, m) * (1LL << (n - 2 * m));
    rhs += (m % 2 == 1) ? term : -term;
  }
  return {lhs, rhs};
}

}  // namespace ncsym
