#include "ncsym/sampling.hpp"
#include "ncsym/sym_algebra.hpp"

#include <doctest.h>

using namespace ncsym;

namespace {

TensorElement random_tensor(Sampler& rng, const InstancePtr& inst, long long i, long long j) {
  if (i == j) return TensorElement::scalar(inst, i, rng.subfield_element(*inst, i));
  TensorElement t(inst, i, j);
  for (Pattern s = 0; s <= tau_pattern(j - i); ++s)
    if (rng.uniform_int(0, 2) != 0) t.set(s, rng.element(*inst));
  return t;
}

SymElement random_sym(Sampler& rng, const SymAlgebra& alg, long long i, long long j) {
  std::vector<FieldElement> s;
  for (std::size_t m = 0; m < slot_count(j - i); ++m)
    s.push_back((m == 0 && (j - i) % 2 == 0) ? rng.subfield_element(*alg.instance(), i) : rng.element(*alg.instance()));
  return SymElement(alg.instance(), i, j, std::move(s));
}

}  // namespace

TEST_CASE("relation space dimensions") {
  for (const auto& key : FieldTowerInstance::builtin_keys()) {
    SymAlgebra alg(FieldTowerInstance::by_key(key));
    CAPTURE(key);
    for (long long i : {0LL, 1LL, -3LL}) {
      for (long long n = 2; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(alg.relation_space(i, i + n)->dimension() == (std::size_t{1} << n) - n - 1);
      }
    }
    auto r02 = alg.relation_space(0, 2);
    CHECK(r02->echelon.contains(coords_over_start_field(h_prime(alg.instance(), 0))));
  }
}

TEST_CASE("intersection dimensions") {
  SymAlgebra alg(FieldTowerInstance::biquadratic());
  CHECK(alg.intersection_dim(0, 4, 0, 1) == 0);
  CHECK(alg.intersection_dim(0, 4, 0, 2) == 1);
  CHECK(alg.intersection_dim(0, 6, 0, 3) == 4);
  CHECK(alg.intersection_dim(1, 5, 2, 3) == 0);
}

TEST_CASE("eulerian identity") {
  CHECK(eulerian_check(2) == std::pair<long long, long long>{1, 1});
  CHECK(eulerian_check(4) == std::pair<long long, long long>{11, 11});
  CHECK(eulerian_check(8) == std::pair<long long, long long>{247, 247});
  for (int n = 2; n <= 20; ++n) {
    auto [l, r] = eulerian_check(n);
    CHECK(l == r);
  }
}

TEST_CASE("section examples") {
  auto inst = FieldTowerInstance::rational_function();
  SymAlgebra alg(inst);
  const FieldElement t = inst->generators()[0];
  const FieldElement c = t * t;
  CHECK(alg.section(SymElement(inst, 0, 0, {c})) == TensorElement::scalar(inst, 0, c));
  CHECK(alg.section(SymElement(inst, 0, 2, {inst->one(), inst->zero()})) == g_prime(inst, 0));
  CHECK(alg.section(SymElement(inst, 0, 2, {inst->zero(), t})) == TensorElement::concentrated(inst, 0, 2, 1, t));
  CHECK_THROWS_AS(SymElement(inst, 0, 2, {t, inst->zero()}), std::invalid_argument);
}

TEST_CASE("project inverts section and agrees with the relation oracle") {
  for (const auto& key : FieldTowerInstance::builtin_keys()) {
    SymAlgebra alg(FieldTowerInstance::by_key(key));
    const auto& inst = alg.instance();
    CAPTURE(key);
    Sampler rng(21);
    for (long long i : {0LL, 1LL}) {
      for (long long n = 0; n <= 6; ++n) {
        CAPTURE(n);
        for (const auto& b : alg.basis(i, i + n)) CHECK(alg.project(alg.section(b)) == b);
        for (int trial = 0; trial < 3; ++trial) {
          auto a = random_sym(rng, alg, i, i + n);
          CHECK(alg.project(alg.section(a)) == a);
          auto t = random_tensor(rng, inst, i, i + n);
          auto p = alg.project(t);
          if (n >= 2) {
            CHECK(alg.relation_space(i, i + n)->echelon.contains(coords_over_start_field(t - alg.section(p))));
          }
        }
      }
    }
  }
}

TEST_CASE("project agrees with the solve route on pure tensors") {
  for (const auto& key : FieldTowerInstance::builtin_keys()) {
    SymAlgebra alg(FieldTowerInstance::by_key(key));
    const auto& inst = alg.instance();
    CAPTURE(key);
    Sampler rng(4);
    for (int trial = 0; trial < 4; ++trial) {
      const long long i = rng.uniform_int(0, 1);
      const int n = rng.uniform_int(2, 4);
      std::vector<FieldElement> x;
      for (int k = 0; k < n; ++k) x.push_back(rng.element(*inst));
      auto t = mu(inst, i, x);
      CHECK(alg.project(t) == alg.project_by_solve(t, true));
      CHECK(alg.project(t) == alg.project_by_solve(t, false));
    }
  }
}

TEST_CASE("relations project to zero and form a two-sided ideal") {
  SymAlgebra alg(FieldTowerInstance::d4_quartic());
  const auto& inst = alg.instance();
  Sampler rng(8);
  for (long long l = 0; l <= 2; ++l) {
    auto a = random_tensor(rng, inst, 0, l);
    auto b = random_tensor(rng, inst, l + 2, 5);
    auto r = star_mul(star_mul(a, h_prime(inst, l)), b);
    CHECK(alg.project(r).is_zero());
    auto left = random_tensor(rng, inst, -1, 0);
    auto right = random_tensor(rng, inst, 5, 7);
    auto big = star_mul(star_mul(left, r), right);
    CHECK(alg.relation_space(-1, 7)->echelon.contains(coords_over_start_field(big)));
  }
}

TEST_CASE("sym_mul") {
  for (const auto& key : FieldTowerInstance::builtin_keys()) {
    SymAlgebra alg(FieldTowerInstance::by_key(key));
    const auto& inst = alg.instance();
    CAPTURE(key);
    Sampler rng(13);
    auto a = random_sym(rng, alg, 1, 4);
    CHECK(alg.sym_mul(SymElement::unit(inst, 1), a) == a);
    CHECK(alg.sym_mul(a, SymElement::unit(inst, 4)) == a);
    CHECK(alg.sym_mul(alg.g_bar(0), alg.g_bar(2)) == alg.project(star_mul(g_prime(inst, 0), g_prime(inst, 2))));
    auto g2 = alg.g_chain(0, 2);
    CHECK(g2 == alg.project(star_mul(g_prime(inst, 0), g_prime(inst, 2))));
    CHECK(g2.top().is_zero());
    CHECK(inst->is_in_subfield(0, g2.slot(0)));
    CHECK(alg.g_chain(3, 0) == SymElement::unit(inst, 3));
    CHECK(alg.g_chain(3, 1) == alg.project(g_prime(inst, 3)));
    for (int trial = 0; trial < 6; ++trial) {
      const long long i = rng.uniform_int(-1, 1);
      const long long j = i + rng.uniform_int(0, 2), k = j + rng.uniform_int(0, 2), l = k + rng.uniform_int(0, 2);
      auto x = random_sym(rng, alg, i, j), y = random_sym(rng, alg, j, k), z = random_sym(rng, alg, k, l);
      CHECK(alg.sym_mul(alg.sym_mul(x, y), z) == alg.sym_mul(x, alg.sym_mul(y, z)));
      auto y2 = random_sym(rng, alg, j, k);
      CHECK(alg.sym_mul(x, y + y2) == alg.sym_mul(x, y) + alg.sym_mul(x, y2));
    }
  }
}

TEST_CASE("g normality, division and conjugation") {
  for (const auto& key : FieldTowerInstance::builtin_keys()) {
    SymAlgebra alg(FieldTowerInstance::by_key(key));
    const auto& inst = alg.instance();
    CAPTURE(key);
    CHECK(alg.check_g_normality(0, 0));
    CHECK(alg.check_g_normality(0, 1));
    CHECK(alg.check_g_normality(0, 3));
    CHECK(alg.check_g_normality(1, 4));

    Sampler rng(17);
    auto y = random_sym(rng, alg, 2, 5);
    auto c = alg.sym_mul(alg.g_bar(0), y);
    auto back = alg.left_divide_by_g(c);
    REQUIRE(back);
    CHECK(*back == y);
    CHECK_FALSE(alg.left_divide_by_g(SymElement(inst, 0, 2, {inst->zero(), inst->one()})));
    auto peeled = alg.left_divide_by_g(alg.g_chain(0, 2));
    REQUIRE(peeled);
    CHECK(*peeled == alg.g_chain(2, 1));
    auto rd = alg.right_divide_by_g(alg.right_mul_g(y));
    REQUIRE(rd);
    CHECK(*rd == y);

    CHECK(alg.quotient_B_dim(0, 0) == 1);
    CHECK(alg.quotient_B_dim(0, 1) == 2);
    CHECK(alg.quotient_B_dim(1, 5) == 2);

    CHECK(alg.conjugate_by_g(SymElement::unit(inst, 0)) == SymElement::unit(inst, 2));
    CHECK(alg.conjugate_by_g(alg.g_bar(1)) == alg.g_bar(3));
    for (int trial = 0; trial < 4; ++trial) {
      auto a = random_sym(rng, alg, 0, 1), b = random_sym(rng, alg, 1, 3), a2 = random_sym(rng, alg, 0, 1);
      auto pa = alg.conjugate_by_g(a);
      CHECK(alg.sym_mul(alg.g_bar(0), pa) == alg.right_mul_g(a));
      CHECK(alg.conjugate_by_g(a + a2) == pa + alg.conjugate_by_g(a2));
      CHECK(alg.conjugate_by_g(alg.sym_mul(a, b)) == alg.sym_mul(pa, alg.conjugate_by_g(b)));
      CHECK(alg.unconjugate_by_g(pa) == a);
    }
  }
}

TEST_CASE("fast division and conjugation agree with the solve route") {
  for (const auto& key : FieldTowerInstance::builtin_keys()) {
    SymAlgebra alg(FieldTowerInstance::by_key(key));
    CAPTURE(key);
    Sampler rng(23);
    for (long long i : {0LL, 1LL, -2LL}) {
      for (long long n = 0; n <= 5; ++n) {
        auto a = random_sym(rng, alg, i, i + n);
        auto c = alg.right_mul_g(a);
        auto slow = alg.left_divide_by_g_solve(c);
        REQUIRE(slow);
        CHECK(alg.conjugate_by_g(a) == *slow);
        CHECK(alg.left_divide_by_g(c) == slow);
        CHECK(alg.sym_mul(alg.g_bar(i), *slow) == c);
        auto b = random_sym(rng, alg, i, i + n + 2);
        CHECK(alg.left_divide_by_g(b).has_value() == alg.left_divide_by_g_solve(b).has_value());
        CHECK(alg.left_mul_g(b) == alg.sym_mul(alg.g_bar(i - 2), b));
      }
    }
  }
}
