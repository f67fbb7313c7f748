#include "ncsym/localization.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ncsym {

nlohmann::ordered_json LocElement::to_json() const {
  nlohmann::ordered_json j;
  j["level"] = level;
  j["numerator"] = num.to_json();
  return j;
}

std::string NormalTestResult::to_string() const {
  return (kind == Kind::IsScalarTimesGChain ? "IsScalarTimesGChain(" : "Witness(") + value.to_string() + ")";
}

LocElement Localization::make(long long r, const SymElement& a) const {
  if (r < 0 || a.degree() != 2 * r || parity(a.start()) != 0)
    throw std::invalid_argument("Localization::make: numerator must lie in A_{0,2r}");
  return canonicalize(LocElement{r, a.shifted_to(0)});
}

LocElement Localization::scalar(const FieldElement& c) const {
  return LocElement{0, SymElement(instance(), 0, 0, {c})};
}

LocElement Localization::canonicalize(const LocElement& x) const {
  LocElement r = x;
  while (r.level > 0 && r.num.top().is_zero()) {
    r.num = *alg_.right_divide_by_g(r.num);
    --r.level;
  }
  return r;
}

LocElement Localization::raise(const LocElement& x, long long r) const {
  if (r < x.level) throw std::invalid_argument("raise: target level below current level");
  LocElement y = x;
  while (y.level < r) {
    y.num = alg_.right_mul_g(y.num);
    ++y.level;
  }
  return y;
}

LocElement Localization::add(const LocElement& x, const LocElement& y) const {
  const long long r = std::max(x.level, y.level);
  LocElement a = raise(x, r);
  a.num += raise(y, r).num;
  return canonicalize(a);
}

LocElement Localization::sub(const LocElement& x, const LocElement& y) const {
  const long long r = std::max(x.level, y.level);
  LocElement a = raise(x, r);
  a.num -= raise(y, r).num;
  return canonicalize(a);
}

LocElement Localization::mul(const LocElement& x, const LocElement& y) const {
  // a g^{-r} b g^{-s} = a b' g^{-(r+s)} where g^r b' = b g^r (normality).
  SymElement b = y.num;
  for (long long k = 0; k < x.level; ++k) b = alg_.right_mul_g(b);
  for (long long k = 0; k < x.level; ++k) {
    auto d = alg_.left_divide_by_g(b);
    if (!d) throw std::logic_error("Localization::mul: chain does not divide");
    b = std::move(*d);
  }
  return canonicalize(LocElement{x.level + y.level, alg_.sym_mul(x.num, b)});
}

std::vector<std::size_t> Localization::filtration_dims(long long L) const {
  if (L < 0) throw std::invalid_argument("filtration_dims needs L >= 0");
  std::vector<std::size_t> dims{1};
  for (long long n = 1; n <= L; ++n) {
    Echelon full, lower;
    for (const auto& b : alg_.basis(0, 2 * n)) full.insert(alg_.coords(b));
    for (const auto& b : alg_.basis(0, 2 * n - 2)) {
      const Vec v = alg_.coords(raise(LocElement{n - 1, b}, n).num);
      lower.insert(v);
      full.insert(v);
    }
    dims.push_back(full.rank() - lower.rank());
  }
  return dims;
}

bool Localization::filtration_span_equality(long long i) const {
  std::vector<LocElement> bi, b1;
  for (const auto& b : alg_.basis(0, 2 * i)) bi.push_back(LocElement{i, b});
  for (const auto& b : alg_.basis(0, 2)) b1.push_back(LocElement{1, b});
  Echelon left, right;
  for (const auto& x : bi)
    for (const auto& y : b1) {
      left.insert(alg_.coords(raise(mul(x, y), i + 1).num));
      right.insert(alg_.coords(raise(mul(y, x), i + 1).num));
    }
  const auto full = static_cast<std::size_t>(2 * (i + 1) + 1);
  return left.rank() == full && right.rank() == full;
}

LocElement Localization::random_element(Sampler& rng, long long r) const {
  const auto& inst = *instance();
  std::vector<FieldElement> s;
  for (std::size_t m = 0; m < slot_count(2 * r); ++m) s.push_back(m == 0 ? rng.subfield_element(inst, 0) : rng.element(inst));
  return make(r, SymElement(instance(), 0, 2 * r, std::move(s)));
}

namespace {

/// Inverse of tau-bar_{i,i+2m}, the composite of the all-ones pattern.
Automorphism tau_bar_inverse(const FieldTowerInstance& inst, long long i, long long m) {
  auto w = reduced_bar_word(i, 2 * m, tau_pattern(2 * m));
  std::reverse(w.begin(), w.end());
  return inst.automorphism(AutomorphismWord{w});
}

}  // namespace

bool Localization::verify_witness(const SymElement& x, const FieldElement& b) const {
  const auto& inst = *instance();
  const long long i = x.start(), j = x.end();
  if (!inst.is_in_subfield(i, b)) return false;
  std::size_t m0 = 0;
  while (m0 < x.slots().size() && x.slot(m0).is_zero()) ++m0;
  if (m0 == x.slots().size()) return false;
  const FieldElement c = tau_bar_inverse(inst, i, static_cast<long long>(m0))(b);
  if (!inst.is_in_subfield(j, c)) return true;
  const SymElement lhs = x.left_scaled(b);
  const SymElement rhs = alg_.sym_mul(x, SymElement(instance(), j, j, {c}));
  return lhs != rhs;
}

NormalTestResult Localization::normal_element_test(const SymElement& x, Sampler& rng) const {
  const auto& inst = *instance();
  if (inst.classify_algebraic() != Algebraicity::NonAlgebraic)
    throw std::invalid_argument("normal_element_test requires a non-algebraic instance");
  if (x.degree() % 2 != 0) throw std::invalid_argument("normal_element_test: a normal element has even degree");
  if (x.is_zero()) throw std::invalid_argument("normal_element_test: x must be nonzero");
  bool higher = false;
  for (std::size_t m = 1; m < x.slots().size(); ++m) higher = higher || !x.slot(m).is_zero();
  if (!higher) return {NormalTestResult::Kind::IsScalarTimesGChain, x.slot(0)};
  const FieldElement w2 = inst.w(x.start()) * inst.w(x.start());
  std::vector<FieldElement> candidates{w2, w2 + inst.one()};
  for (const auto& b : candidates)
    if (verify_witness(x, b)) return {NormalTestResult::Kind::Witness, b};
  for (int tries = 0; tries < 64; ++tries) {
    const FieldElement b = rng.nonzero_subfield_element(inst, x.start());
    if (verify_witness(x, b)) return {NormalTestResult::Kind::Witness, b};
  }
  throw std::runtime_error("normal_element_test: no witness found among the sampled candidates");
}

namespace {

struct Piece {
  long long s = 0, k = 0;
  Echelon span;
  std::vector<Vec> vectors;
};

}  // namespace

SaturationProbeResult Localization::ideal_saturation_probe(const SymElement& x, int depth, int level_bound) const {
  if (x.is_zero()) throw std::invalid_argument("ideal_saturation_probe: x must be nonzero");
  if (x.degree() != 2 || parity(x.start()) != 0) throw std::invalid_argument("ideal_saturation_probe: x must lie in A_{0,2}");
  if (depth < 0 || level_bound < 1) throw std::invalid_argument("ideal_saturation_probe: bad window");
  const auto& inst = *instance();
  const SymElement x0 = x.shifted_to(0);

  // Conjugate family x_p = phi^{p/2}(x) at even p.
  std::map<long long, SymElement> family;
  family.emplace(0, x0);
  auto member = [&](long long p) -> const SymElement& {
    auto it = family.find(p);
    if (it != family.end()) return it->second;
    SymElement y = x0;
    if (p > 0) {
      for (long long q = 0; q < p; q += 2) y = alg_.conjugate_by_g(y);
    } else {
      for (long long q = 0; q > p; q -= 2) y = alg_.unconjugate_by_g(y);
    }
    return family.emplace(p, std::move(y)).first->second;
  };

  std::map<std::pair<long long, long long>, Piece> pieces;
  auto insert = [&](long long s, long long k, const Vec& v) {
    auto& pc = pieces[{s, k}];
    pc.s = s;
    pc.k = k;
    if (pc.span.insert(v)) {
      pc.vectors.push_back(v);
      return true;
    }
    return false;
  };

  auto build = [&](long long k) {
    for (long long s = -2LL * depth; s <= 0; s += 2) {
      const long long j = s + 2 * k;
      pieces[{s, k}] = Piece{s, k, {}, {}};
      for (long long p = s; p + 2 <= j; p += 2) {
        const SymElement& xp = member(p);
        std::vector<FieldElement> mids;
        if (inst.prime_field_degree()) {
          mids = inst.subfield_rational_basis(p + 2);
        } else {
          const FieldElement w2 = inst.w(p + 2) * inst.w(p + 2);
          mids = {inst.one(), w2, w2 * w2};
        }
        const auto right = alg_.basis(p + 2, j);
        for (const auto& c : mids) {
          const SymElement xc = alg_.sym_mul(xp, SymElement(instance(), p + 2, p + 2, {c}));
          for (const auto& u : alg_.basis(s, p)) {
            const SymElement ux = alg_.sym_mul(u, xc);
            for (const auto& v : right) insert(s, k, alg_.coords(alg_.sym_mul(ux, v)));
          }
        }
      }
    }
  };

  auto check_level = [&](long long k, int round) -> std::optional<SaturationProbeResult> {
    for (long long s = 0; s >= -2LL * depth; s -= 2)
      if (pieces[{s, k}].span.contains(alg_.coords(alg_.g_chain(s, k))))
        return SaturationProbeResult{SaturationProbeResult::Kind::ReachedGPower, k, s, round, {}};
    return std::nullopt;
  };
  auto check = [&](int round) -> std::optional<SaturationProbeResult> {
    for (long long k = 1; k <= level_bound; ++k)
      if (auto r = check_level(k, round)) return r;
    return std::nullopt;
  };
  auto dims = [&] {
    std::vector<std::size_t> d;
    for (const auto& [key, pc] : pieces) d.push_back(pc.span.rank());
    return d;
  };

  // Levels are built in increasing order so that an early certificate stops the work.
  std::optional<SaturationProbeResult> result;
  for (long long k = 1; k <= level_bound && !result; ++k) {
    build(k);
    result = check_level(k, 0);
  }
  int round = 0;
  while (!result && round < level_bound) {
    ++round;
    bool changed = false;
    // g-saturation: divide the divisible part of each piece on both sides.
    for (long long s = -2LL * depth; s <= 0; s += 2) {
      for (long long k = 2; k <= level_bound; ++k) {
        const std::size_t dim = static_cast<std::size_t>(2 * k + 1);
        std::vector<SparseVec> own, top_free;
        for (const auto& v : pieces[{s, k}].vectors) own.push_back(to_sparse(v));
        for (std::size_t c = 0; c + 2 < dim; ++c) top_free.push_back({{c, inst.one()}});
        for (const auto& v : intersect_spans(own, top_free, dim)) {
          const SymElement y = alg_.from_coords(s, s + 2 * k, to_dense(v, dim, inst.zero()));
          const SymElement r = *alg_.right_divide_by_g(y);
          changed = insert(s, k - 1, alg_.coords(r)) || changed;
          if (s + 2 <= 0) changed = insert(s + 2, k - 1, alg_.coords(*alg_.left_divide_by_g(y))) || changed;
        }
      }
    }
    // Ideal closure inside the window under degree-2 multiplication.
    for (long long s = -2LL * depth; s <= 0; s += 2) {
      for (long long k = 1; k < level_bound; ++k) {
        const auto vecs = pieces[{s, k}].vectors;
        for (const auto& v : vecs) {
          const SymElement y = alg_.from_coords(s, s + 2 * k, v);
          for (const auto& b : alg_.basis(s + 2 * k, s + 2 * k + 2))
            changed = insert(s, k + 1, alg_.coords(alg_.sym_mul(y, b))) || changed;
          if (s - 2 >= -2LL * depth)
            for (const auto& b : alg_.basis(s - 2, s))
              changed = insert(s - 2, k + 1, alg_.coords(alg_.sym_mul(b, y))) || changed;
        }
      }
    }
    result = check(round);
    if (!changed) break;
  }
  if (!result) result = SaturationProbeResult{SaturationProbeResult::Kind::Inconclusive, 0, 0, round, {}};
  result->final_dims = dims();
  return *result;
}

std::vector<FieldElement> common_subfield_basis(const FieldTowerInstance& inst) {
  if (!inst.prime_field_degree()) throw std::logic_error("common_subfield_basis needs a number field instance");
  const auto d = static_cast<std::size_t>(*inst.prime_field_degree());
  std::vector<std::vector<Rational>> rows;
  for (int t = 0; t < 2; ++t) {
    const auto& m = inst.tau(t).matrix();
    for (std::size_t r = 0; r < d; ++r) {
      std::vector<Rational> row = m[r];
      row[r] -= 1;
      rows.push_back(std::move(row));
    }
  }
  std::vector<FieldElement> out;
  for (auto& v : rational_null_space(rows, d)) out.emplace_back(inst.one().number_field(), std::move(v));
  return out;
}

namespace {

std::vector<Rational> rational_coords(const Vec& v) {
  std::vector<Rational> out;
  for (const auto& x : v) out.insert(out.end(), x.coords().begin(), x.coords().end());
  return out;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  return cols - rational_null_space(std::move(rows), cols).size();
}

}  // namespace

CenterProbeResult Localization::center_probe(long long L) const {
  const auto& inst = *instance();
  if (!inst.prime_field_degree())
    throw std::invalid_argument("center_probe needs an instance of finite degree over the rationals");
  if (L < 0) throw std::invalid_argument("center_probe needs L >= 0");

  const auto k0 = inst.subfield_rational_basis(0);
  std::vector<LocElement> unknowns;
  for (const auto& b : alg_.basis(0, 2 * L))
    for (const auto& beta : k0) unknowns.push_back(LocElement{L, b.left_scaled(beta)});

  std::vector<LocElement> gens;
  for (const auto& beta : k0) gens.push_back(scalar(beta));
  for (const auto& b : alg_.basis(0, 2)) gens.push_back(make(1, b));

  // Column e holds the Q-coordinates of [e, v] for every generator v.
  std::vector<std::vector<Rational>> columns;
  for (const auto& e : unknowns) {
    std::vector<Rational> col;
    for (const auto& v : gens) {
      const LocElement c = raise(sub(mul(e, v), mul(v, e)), L + 1);
      const auto q = rational_coords(alg_.coords(c.num));
      col.insert(col.end(), q.begin(), q.end());
    }
    columns.push_back(std::move(col));
  }
  const std::size_t neq = columns.front().size();
  std::vector<std::vector<Rational>> m(neq, std::vector<Rational>(unknowns.size()));
  for (std::size_t c = 0; c < unknowns.size(); ++c)
    for (std::size_t r = 0; r < neq; ++r) m[r][c] = columns[c][r];
  const auto ns = rational_null_space(m, unknowns.size());

  CenterProbeResult res;
  res.level = L;
  res.dimension = ns.size();
  for (const auto& v : ns) {
    LocElement z = zero();
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (sgn(v[c]) == 0) continue;
      LocElement term = unknowns[c];
      term.num = term.num.left_scaled(inst.rational(v[c]));
      z = add(z, term);
    }
    res.basis.push_back(z);
  }

  // Containment of K_0 ∩ K_1: coordinates of each scalar in the unknown basis
  // must lie in the row span of the null space.
  const auto common = common_subfield_basis(inst);
  res.common_subfield_degree = common.size();
  std::vector<std::vector<Rational>> unknown_coords;
  for (const auto& e : unknowns) unknown_coords.push_back(rational_coords(alg_.coords(e.num)));
  const std::size_t width = unknown_coords.front().size();
  res.contains_common_subfield = true;
  for (const auto& beta : common) {
    const auto target = rational_coords(alg_.coords(raise(scalar(beta), L).num));
    // Solve sum_e y_e * unknown_coords[e] = target.
    std::vector<std::vector<Rational>> sys(width, std::vector<Rational>(unknowns.size() + 1));
    for (std::size_t r = 0; r < width; ++r) {
      for (std::size_t c = 0; c < unknowns.size(); ++c) sys[r][c] = unknown_coords[c][r];
      sys[r][unknowns.size()] = -target[r];
    }
    std::vector<Rational> y;
    for (auto& v : rational_null_space(sys, unknowns.size() + 1)) {
      if (sgn(v.back()) == 0) continue;
      const Rational scale = 1 / v.back();
      for (std::size_t c = 0; c < unknowns.size(); ++c) y.push_back(v[c] * scale);
      break;
    }
    if (y.empty()) {
      res.contains_common_subfield = false;
      continue;
    }
    std::vector<std::vector<Rational>> rows = ns;
    const std::size_t before = rational_rank(rows, unknowns.size());
    rows.push_back(y);
    if (rational_rank(rows, unknowns.size()) != before) res.contains_common_subfield = false;
  }
  return res;
}

}  // namespace ncsym
