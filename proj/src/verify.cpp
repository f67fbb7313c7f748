#include "ncsym/verify.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace ncsym {

namespace {

constexpr std::size_t kMaxRecordedFailures = 8;

std::uint64_t suite_seed(std::uint64_t seed, std::size_t index) {
  return seed * 0x9E3779B97F4A7C15ULL + index + 1;
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::vector<FieldElement> random_factors(Sampler& rng, const FieldTowerInstance& inst, long long n) {
  std::vector<FieldElement> x;
  for (long long k = 0; k < n; ++k) x.push_back(rng.element(inst));
  return x;
}

TensorElement random_tensor(Sampler& rng, const InstancePtr& inst, long long i, long long j) {
  if (i == j) return TensorElement::scalar(inst, i, rng.subfield_element(*inst, i));
  TensorElement t(inst, i, j);
  for (Pattern s = 0; s <= tau_pattern(j - i); ++s) t.set(s, rng.element(*inst));
  return t;
}

SymElement random_sym(Sampler& rng, const InstancePtr& inst, long long i, long long j) {
  std::vector<FieldElement> s;
  for (std::size_t m = 0; m < slot_count(j - i); ++m)
    s.push_back((m == 0 && (j - i) % 2 == 0) ? rng.subfield_element(*inst, i) : rng.element(*inst));
  return SymElement(inst, i, j, std::move(s));
}

std::string at(const std::string& what, long long i, long long j) {
  return what + " at (" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

void SuiteResult::check(bool cond, const std::string& what) {
  if (cond) {
    ++passed;
    return;
  }
  ++failed;
  if (failures.size() < kMaxRecordedFailures) failures.push_back(what);
}

nlohmann::ordered_json SuiteResult::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["suite"] = name;
  j["seed"] = seed;
  j["passed"] = passed;
  j["failed"] = failed;
  j["status"] = ok() ? "pass" : "fail";
  if (with_timing) j["seconds"] = seconds;
  j["failures"] = failures;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"field_tower", "indexed_tensor", "sym_algebra", "localization"};
  return names;
}

int default_nmax(const FieldTowerInstance& inst) { return inst.prime_field_degree() ? 10 : 6; }

SuiteResult verify_field_tower(const InstancePtr& ip, const VerifyConfig& cfg) {
  const Timer timer;
  const auto& inst = *ip;
  SuiteResult r{"field_tower", suite_seed(cfg.seed, 0), 0, 0, 0, {}};
  Sampler rng(r.seed);
  for (int i = 0; i < 2; ++i) {
    const std::string tag = "tau_" + std::to_string(i);
    r.check(inst.apply_tau(i, inst.w(i)) == -inst.w(i), tag + "(w) = -w");
    r.check(!inst.w(i).is_zero(), "w_" + std::to_string(i) + " nonzero");
    r.check(!inst.is_in_subfield(i, inst.w(1 - i)), "w_" + std::to_string(1 - i) + " outside K_" + std::to_string(i));
    for (int t = 0; t < cfg.samples; ++t) {
      const FieldElement a = rng.element(inst), b = rng.element(inst);
      r.check(inst.apply_tau(i, a * b) == inst.apply_tau(i, a) * inst.apply_tau(i, b), tag + " multiplicative");
      r.check(inst.apply_tau(i, a + b) == inst.apply_tau(i, a) + inst.apply_tau(i, b), tag + " additive");
      r.check(inst.apply_tau(i, inst.apply_tau(i, a)) == a, tag + " involutive");
      const FieldElement c = rng.subfield_element(inst, i);
      const FieldElement ta = inst.trace(i, a);
      r.check(inst.is_in_subfield(i, c), "sampled subfield element in K_" + std::to_string(i));
      r.check(inst.is_in_subfield(i, ta), "trace lands in K_" + std::to_string(i));
      r.check(inst.trace(i, c * a + b) == c * ta + inst.trace(i, b), "trace K-linear");
      r.check(inst.trace(i, ta) == ta, "trace idempotent");
      const auto [c0, c1] = inst.decompose_over_subfield(i, a);
      r.check(c0 + c1 * inst.w(i) == a, "decompose round trip");
      r.check(inst.is_in_subfield(i, c0) && inst.is_in_subfield(i, c1), "decompose coefficients in K_i");
    }
  }
  for (const auto& g : inst.generators()) {
    for (int i = 0; i < 2; ++i) r.check(inst.apply_tau(i, inst.apply_tau(i, g)) == g, "involutive on generators");
  }
  if (inst.prime_field_degree()) {
    const auto common = common_subfield_basis(inst);
    r.check(!common.empty(), "K_0 ∩ K_1 contains Q");
    for (const auto& c : common) r.check(inst.is_in_subfield(0, c) && inst.is_in_subfield(1, c), "common subfield basis");
  }
  if (inst.key() == "d4-quartic") {
    const FieldElement sqrt2 = inst.generators()[0] * inst.generators()[0];
    r.check(inst.is_in_subfield(0, sqrt2) && inst.is_in_subfield(1, sqrt2), "sqrt2 in both subfields");
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult verify_indexed_tensor(const InstancePtr& inst, const VerifyConfig& cfg) {
  const Timer timer;
  SuiteResult r{"indexed_tensor", suite_seed(cfg.seed, 1), 0, 0, 0, {}};
  Sampler rng(r.seed);
  const long long top = std::min(cfg.nmax, 6);

  // mu multiplicative, and both bracketings of three collapses agree.
  for (int t = 0; t < 2 * cfg.samples; ++t) {
    const long long i = rng.uniform_int(-3, 3);
    const long long n1 = rng.uniform_int(1, static_cast<int>(std::max(1LL, top / 2)));
    const long long n2 = rng.uniform_int(1, static_cast<int>(std::max(1LL, top - n1)));
    auto x = random_factors(rng, *inst, n1), y = random_factors(rng, *inst, n2);
    auto xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    r.check(star_mul(mu(inst, i, x), mu(inst, i + n1, y)) == mu(inst, i, xy), at("mu multiplicative", i, i + n1 + n2));
  }
  for (int t = 0; t < cfg.samples / 2; ++t) {
    const long long i = rng.uniform_int(-3, 3);
    const long long n1 = rng.uniform_int(1, 2), n2 = rng.uniform_int(1, 2), n3 = rng.uniform_int(1, 2);
    auto x = random_factors(rng, *inst, n1), y = random_factors(rng, *inst, n2), z = random_factors(rng, *inst, n3);
    const auto mx = mu(inst, i, x), my = mu(inst, i + n1, y), mz = mu(inst, i + n1 + n2, z);
    r.check(star_mul(star_mul(mx, my), mz) == star_mul(mx, star_mul(my, mz)), "mu order invariance");
  }

  // star associativity and bilinearity on general tensors
  for (int t = 0; t < cfg.samples / 4; ++t) {
    const long long i = rng.uniform_int(-2, 2);
    const long long j = i + rng.uniform_int(0, 2), k = j + rng.uniform_int(0, 2), l = k + rng.uniform_int(0, 2);
    const auto a = random_tensor(rng, inst, i, j), b = random_tensor(rng, inst, j, k), b2 = random_tensor(rng, inst, j, k),
               c = random_tensor(rng, inst, k, l);
    r.check(star_mul(star_mul(a, b), c) == star_mul(a, star_mul(b, c)), at("star associative", i, l));
    r.check(star_mul(a, b + b2) == star_mul(a, b) + star_mul(a, b2), "star additive");
    const FieldElement s = rng.subfield_element(*inst, i);
    r.check(star_mul(a.left_scaled(s), b) == star_mul(a, b).left_scaled(s), "star left K_i-linear");
  }

  // mu is bijective on a product basis.
  for (long long i : {0LL, 1LL}) {
    for (long long n = 1; n <= std::min(top, 5LL); ++n) {
      std::vector<Vec> rows;
      for (unsigned mask = 0; mask < (1U << n); ++mask) {
        std::vector<FieldElement> x;
        for (long long k = 0; k < n; ++k) x.push_back(((mask >> k) & 1U) ? inst->w(i + k) : inst->one());
        rows.push_back(coords_over_start_field(mu(inst, i, x)));
      }
      r.check(rank_of(rows) == (std::size_t{1} << n), at("mu bijective", i, i + n));
    }
  }

  // Relations land on (2,0) and (2w,0); the spans of h', g' pieces are 2^{n-1}.
  for (long long l : {0LL, 1LL, -2LL, 3LL}) {
    TensorElement h(inst, l, l + 2), g(inst, l, l + 2);
    for (const auto& p : h_pure_terms(*inst, l)) h += mu(inst, l, p);
    for (const auto& p : g_pure_terms(*inst, l)) g += mu(inst, l, p);
    r.check(h == h_prime(inst, l), at("mu(h) = (2,0)", l, l + 2));
    r.check(g == g_prime(inst, l), at("mu(g) = (2w,0)", l, l + 2));
  }
  for (long long i : {0LL, 1LL}) {
    for (long long n = 2; n <= std::min(top, 5LL); ++n) {
      const long long j = i + n;
      for (long long l = i; l <= j - 2; ++l) {
        Echelon e;
        for (const auto& a : tensor_basis(inst, i, l))
          for (const auto& q : {h_prime(inst, l), g_prime(inst, l)})
            for (const auto& b : tensor_basis(inst, l + 2, j)) e.insert(coords_over_start_field(star_mul(star_mul(a, q), b)));
        r.check(e.rank() == (std::size_t{1} << (n - 1)), at("h', g' piece span", i, j));
      }
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult verify_sym_algebra(const SymAlgebra& alg, const VerifyConfig& cfg) {
  const Timer timer;
  const auto& inst = alg.instance();
  SuiteResult r{"sym_algebra", suite_seed(cfg.seed, 2), 0, 0, 0, {}};
  Sampler rng(r.seed);
  const long long nmax = cfg.nmax;
  const long long mid = std::min(nmax, 8LL);

  for (long long i : {0LL, 1LL}) {
    for (long long n = 0; n <= nmax; ++n) {
      const long long j = i + n;
      const std::size_t rel = n < 2 ? 0 : alg.relation_space(i, j)->dimension();
      r.check(rel == (std::size_t{1} << n) - static_cast<std::size_t>(n) - 1, at("dim R", i, j));
      r.check(alg.basis(i, j).size() == static_cast<std::size_t>(n + 1), at("dim A", i, j));
      r.check(alg.quotient_B_dim(i, n) == (n == 0 ? 1U : 2U), at("dim B", i, j));
    }
    // The relation basis and section images together span T_ij.
    for (long long n = 2; n <= mid; ++n) {
      const long long j = i + n;
      Echelon e = alg.relation_space(i, j)->echelon;
      bool independent = true;
      for (const auto& b : alg.basis(i, j)) {
        const TensorElement s = alg.section(b);
        independent = e.insert(coords_over_start_field(s)) && independent;
        r.check(alg.project(s) == b, at("project after section", i, j));
      }
      r.check(independent && e.rank() == tensor_dim(n), at("splitting R + section", i, j));
    }
  }

  for (int t = 0; t < cfg.samples; ++t) {
    const long long total = rng.uniform_int(0, static_cast<int>(mid));
    const long long d1 = rng.uniform_int(0, static_cast<int>(total));
    const long long d2 = rng.uniform_int(0, static_cast<int>(total - d1));
    const long long i = rng.uniform_int(-3, 3);
    const auto a = random_sym(rng, inst, i, i + d1), b = random_sym(rng, inst, i + d1, i + d1 + d2),
               c = random_sym(rng, inst, i + d1 + d2, i + total);
    r.check(alg.sym_mul(alg.sym_mul(a, b), c) == alg.sym_mul(a, alg.sym_mul(b, c)), at("sym_mul associative", i, i + total));
  }

  for (long long i : {0LL, 1LL})
    for (long long n = 0; n <= std::min(nmax - 2, 8LL); ++n) r.check(alg.check_g_normality(i, i + n), at("g normal", i, i + n));

  // R is a two-sided ideal of T.
  for (int t = 0; t < cfg.samples / 10; ++t) {
    const long long i = rng.uniform_int(0, 1);
    const long long n = rng.uniform_int(2, 3);
    const auto space = alg.relation_space(i, i + n);
    const auto& rows = space->echelon.rows();
    auto it = rows.begin();
    std::advance(it, rng.uniform_int(0, static_cast<int>(rows.size()) - 1));
    const TensorElement rel = from_coords(inst, i, i + n, to_dense(it->second, tensor_dim(n), inst->zero()));
    const long long dl = rng.uniform_int(0, 2), dr = rng.uniform_int(0, 2);
    const TensorElement prod = star_mul(star_mul(random_tensor(rng, inst, i - dl, i), rel), random_tensor(rng, inst, i + n, i + n + dr));
    r.check(alg.relation_space(i - dl, i + n + dr)->echelon.contains(coords_over_start_field(prod)), "R two-sided ideal");
  }

  // phi is additive and multiplicative.
  for (int t = 0; t < cfg.samples / 5; ++t) {
    const long long i = rng.uniform_int(-2, 2);
    const long long d1 = rng.uniform_int(0, 3), d2 = rng.uniform_int(0, 3);
    const auto a = random_sym(rng, inst, i, i + d1), a2 = random_sym(rng, inst, i, i + d1),
               b = random_sym(rng, inst, i + d1, i + d1 + d2);
    r.check(alg.conjugate_by_g(a + a2) == alg.conjugate_by_g(a) + alg.conjugate_by_g(a2), "phi additive");
    r.check(alg.conjugate_by_g(alg.sym_mul(a, b)) == alg.sym_mul(alg.conjugate_by_g(a), alg.conjugate_by_g(b)), "phi multiplicative");
    r.check(alg.right_mul_g(a) == alg.sym_mul(alg.g_bar(i), alg.conjugate_by_g(a)), "a g = g phi(a)");
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult verify_localization(const Localization& loc, const VerifyConfig& cfg) {
  const Timer timer;
  const auto& alg = loc.algebra();
  const auto& inst = *loc.instance();
  SuiteResult r{"localization", suite_seed(cfg.seed, 3), 0, 0, 0, {}};
  Sampler rng(r.seed);
  const long long L = std::min(static_cast<long long>(cfg.nmax) / 2, 5LL);

  const auto dims = loc.filtration_dims(L);
  for (std::size_t n = 0; n < dims.size(); ++n) r.check(dims[n] == (n == 0 ? 1U : 2U), "filtration dim at n = " + std::to_string(n));
  for (long long i = 1; i < L; ++i) r.check(loc.filtration_span_equality(i), "span equality at i = " + std::to_string(i));

  for (int t = 0; t < cfg.samples; ++t) {
    const auto x = loc.random_element(rng, rng.uniform_int(0, 3)), y = loc.random_element(rng, rng.uniform_int(0, 3)),
               z = loc.random_element(rng, rng.uniform_int(0, 3));
    r.check(loc.mul(loc.mul(x, y), z) == loc.mul(x, loc.mul(y, z)), "Lambda associative");
    r.check(loc.mul(x, loc.add(y, z)) == loc.add(loc.mul(x, y), loc.mul(x, z)), "Lambda left distributive");
    r.check(loc.mul(loc.add(x, y), z) == loc.add(loc.mul(x, z), loc.mul(y, z)), "Lambda right distributive");
    r.check(loc.mul(loc.one(), x) == x && loc.mul(x, loc.one()) == x, "Lambda unit");
    const long long s = rng.uniform_int(1, 2);
    const LocElement unit_s{s, alg.g_chain(0, s)};
    r.check(loc.mul(x, unit_s) == x && loc.mul(unit_s, x) == x && loc.canonicalize(loc.raise(x, x.level + s)) == x,
            "canonical form unique");
  }

  if (inst.classify_algebraic() == Algebraicity::NonAlgebraic) {
    for (int t = 0; t < 20; ++t) {
      const long long i = 2 * rng.uniform_int(-2, 2), k = rng.uniform_int(0, 3);
      const FieldElement c = rng.nonzero_subfield_element(inst, i);
      const auto res = loc.normal_element_test(alg.g_chain(i, k).left_scaled(c), rng);
      r.check(res.kind == NormalTestResult::Kind::IsScalarTimesGChain && res.value == c, "scalar times g-chain recognized");
    }
    for (int t = 0; t < 20; ++t) {
      const long long i = rng.uniform_int(-3, 3), k = rng.uniform_int(1, 3);
      std::vector<FieldElement> s;
      for (std::size_t m = 0; m < slot_count(2 * k); ++m)
        s.push_back(m == 0 ? rng.subfield_element(inst, i) : rng.nonzero_element(inst));
      const SymElement x(loc.instance(), i, i + 2 * k, std::move(s));
      const auto res = loc.normal_element_test(x, rng);
      r.check(res.kind == NormalTestResult::Kind::Witness && loc.verify_witness(x, res.value), "witness verified");
    }
  }

  const auto sat = loc.ideal_saturation_probe(alg.g_bar(0), 1, 2);
  r.check(sat.kind == SaturationProbeResult::Kind::ReachedGPower && sat.power == 1, "saturation probe on g_0");

  if (inst.prime_field_degree()) {
    const auto c = loc.center_probe(0);
    r.check(c.contains_common_subfield, "center contains K_0 ∩ K_1");
  }
  r.seconds = timer.seconds();
  return r;
}

std::vector<SuiteResult> run_suites(const InstancePtr& inst, const std::vector<std::string>& names, const VerifyConfig& cfg) {
  for (const auto& n : names)
    if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
      throw std::invalid_argument("unknown suite: " + n);
  auto wanted = [&](const std::string& n) { return std::find(names.begin(), names.end(), n) != names.end(); };
  std::vector<SuiteResult> out;
  // A suite that throws is recorded as failed; later suites still run.
  auto guarded = [&](const std::string& name, std::size_t index, auto&& body) {
    try {
      out.push_back(body());
    } catch (const std::exception& e) {
      SuiteResult r{name, suite_seed(cfg.seed, index), 0, 0, 0, {}};
      r.check(false, std::string("exception: ") + e.what());
      out.push_back(std::move(r));
    }
  };
  if (wanted("field_tower")) guarded("field_tower", 0, [&] { return verify_field_tower(inst, cfg); });
  if (wanted("indexed_tensor")) guarded("indexed_tensor", 1, [&] { return verify_indexed_tensor(inst, cfg); });
  if (wanted("sym_algebra") || wanted("localization")) {
    SymAlgebra alg(inst);
    if (wanted("sym_algebra")) guarded("sym_algebra", 2, [&] { return verify_sym_algebra(alg, cfg); });
    if (wanted("localization")) guarded("localization", 3, [&] { return verify_localization(Localization(alg), cfg); });
  }
  return out;
}

}  // namespace ncsym
