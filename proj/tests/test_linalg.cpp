#include "ncsym/field_tower.hpp"
#include "ncsym/linalg.hpp"
#include "ncsym/sampling.hpp"

#include <doctest.h>

using namespace ncsym;

namespace {

Vec vec(const FieldTowerInstance& inst, std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.push_back(inst.rational(x));
  return v;
}

}  // namespace

TEST_CASE("echelon rank and membership") {
  auto inst = FieldTowerInstance::biquadratic();
  Echelon e;
  CHECK(e.insert(vec(*inst, {1, 2, 0})));
  CHECK(e.insert(vec(*inst, {0, 1, 1})));
  CHECK_FALSE(e.insert(vec(*inst, {1, 3, 1})));
  CHECK(e.rank() == 2);
  CHECK(e.contains(vec(*inst, {2, 5, 1})));
  CHECK_FALSE(e.contains(vec(*inst, {0, 0, 1})));
  auto rem = e.reduce(to_sparse(vec(*inst, {0, 0, 1})));
  REQUIRE(rem.size() == 1);
  CHECK(rem[0].first == 2);
}

TEST_CASE("echelon over a non-rational field") {
  auto inst = FieldTowerInstance::biquadratic();
  const FieldElement s2 = inst->generators()[0];
  // (1, sqrt2) and (sqrt2, 2) are proportional over F.
  Echelon e;
  CHECK(e.insert(Vec{inst->one(), s2}));
  CHECK_FALSE(e.insert(Vec{s2, inst->rational(2)}));
}

TEST_CASE("solve_combination") {
  auto inst = FieldTowerInstance::rational_function();
  const FieldElement t = inst->generators()[0];
  std::vector<Vec> cols = {Vec{inst->one(), inst->zero()}, Vec{t, inst->one()}};
  const Vec target{t * t + inst->one(), t};
  auto sol = solve_combination(cols, target, inst->zero());
  REQUIRE(sol);
  // x + y t = t^2 + 1, y = t
  CHECK((*sol)[1] == t);
  CHECK((*sol)[0] == inst->one());
  std::vector<Vec> dep = {Vec{inst->one(), inst->one()}};
  CHECK_FALSE(solve_combination(dep, Vec{inst->one(), inst->zero()}, inst->zero()));
}

TEST_CASE("intersection of spans") {
  auto inst = FieldTowerInstance::biquadratic();
  std::vector<SparseVec> u = {to_sparse(vec(*inst, {1, 0, 0, 0})), to_sparse(vec(*inst, {0, 1, 0, 0}))};
  std::vector<SparseVec> v = {to_sparse(vec(*inst, {1, 1, 1, 0})), to_sparse(vec(*inst, {0, 0, 1, 0})),
                              to_sparse(vec(*inst, {0, 0, 0, 1}))};
  CHECK(intersection_dimension(u, v) == 1);
  auto basis = intersect_spans(u, v, 4);
  REQUIRE(basis.size() == 1);
  Echelon eu, ev;
  for (auto& x : u) eu.insert(x);
  for (auto& y : v) ev.insert(y);
  CHECK(eu.contains(basis[0]));
  CHECK(ev.contains(basis[0]));
}

TEST_CASE("random intersections agree with the dimension formula") {
  auto inst = FieldTowerInstance::biquadratic();
  Sampler rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    // Build U and V sharing a planted common subspace of dimension 2 inside F^6.
    std::vector<SparseVec> common, u, v;
    auto random_vec = [&] {
      Vec x(6, inst->zero());
      for (auto& c : x) c = rng.element(*inst);
      return x;
    };
    for (int k = 0; k < 2; ++k) common.push_back(to_sparse(random_vec()));
    u = common;
    v = common;
    u.push_back(to_sparse(random_vec()));
    v.push_back(to_sparse(random_vec()));
    auto basis = intersect_spans(u, v, 6);
    CHECK(basis.size() == intersection_dimension(u, v));
    CHECK(basis.size() == 2);
  }
}

TEST_CASE("rational null space") {
  std::vector<std::vector<Rational>> m = {{1, 2, 3}, {2, 4, 6}};
  auto ns = rational_null_space(m, 3);
  REQUIRE(ns.size() == 2);
  for (const auto& x : ns) CHECK(x[0] + 2 * x[1] + 3 * x[2] == 0);
}
