#include "ncsym/field_tower.hpp"
#include "ncsym/sampling.hpp"

#include <doctest.h>

using namespace ncsym;

namespace {

FieldElement t_of(const FieldTowerInstance& inst) { return inst.generators().at(0); }

}  // namespace

TEST_CASE("trace examples") {
  auto bq = FieldTowerInstance::biquadratic();
  const FieldElement sqrt3 = bq->generators().at(1);
  CHECK(bq->trace(0, sqrt3).is_zero());

  auto rf = FieldTowerInstance::rational_function();
  const FieldElement t = t_of(*rf);
  CHECK(rf->trace(0, t).is_zero());
  CHECK(rf->trace(1, t) == rf->one());
}

TEST_CASE("decompose_over_subfield examples") {
  auto rf = FieldTowerInstance::rational_function();
  const FieldElement t = t_of(*rf);
  auto [a0, a1] = rf->decompose_over_subfield(0, rf->one());
  CHECK(a0 == rf->one());
  CHECK(a1.is_zero());
  auto [b0, b1] = rf->decompose_over_subfield(0, t);
  CHECK(b0.is_zero());
  CHECK(b1 == rf->one());
  auto [c0, c1] = rf->decompose_over_subfield(1, t);
  CHECK(c0 == rf->one());
  CHECK(c1 == rf->one());
}

TEST_CASE("eval_word on Q(t)") {
  auto rf = FieldTowerInstance::rational_function();
  const FieldElement t = t_of(*rf);
  CHECK(rf->eval_word({}, t) == t);
  CHECK(rf->eval_word({{1, 0}}, t) == t - rf->rational(2));
  CHECK(rf->eval_word({{0, 1}}, t) == t + rf->rational(2));
  CHECK(rf->automorphism({{1, 0, 1, 0}})(t) == t - rf->rational(4));
}

TEST_CASE("sigma order and classification") {
  auto bq = FieldTowerInstance::biquadratic();
  auto d4 = FieldTowerInstance::d4_quartic();
  auto rf = FieldTowerInstance::rational_function();
  auto s = bq->sigma_order(8);
  CHECK(s.kind == SigmaOrder::Kind::Finite);
  CHECK(s.order == 2);
  s = d4->sigma_order(8);
  CHECK(s.kind == SigmaOrder::Kind::Finite);
  CHECK(s.order == 2);
  CHECK(rf->sigma_order(100).kind == SigmaOrder::Kind::CertifiedInfinite);
  CHECK(bq->classify_algebraic() == Algebraicity::Algebraic);
  CHECK(d4->classify_algebraic() == Algebraicity::Algebraic);
  CHECK(rf->classify_algebraic() == Algebraicity::NonAlgebraic);
}

TEST_CASE("explicit involution images") {
  auto bq = FieldTowerInstance::biquadratic();
  const auto& g = bq->generators();
  CHECK(bq->apply_tau(0, g[0]) == g[0]);
  CHECK(bq->apply_tau(0, g[1]) == -g[1]);
  CHECK(bq->apply_tau(1, g[0]) == -g[0]);
  CHECK(bq->apply_tau(1, g[1]) == g[1]);

  auto d4 = FieldTowerInstance::d4_quartic();
  const FieldElement r = d4->generators()[0], i = d4->generators()[1];
  CHECK(r * r * r * r == d4->rational(2));
  CHECK(i * i == d4->rational(-1));
  CHECK(d4->is_in_subfield(0, r));
  CHECK(d4->is_in_subfield(1, i * r));
  CHECK_FALSE(d4->is_in_subfield(1, r));
}

TEST_CASE("sqrt2 lies in both subfields of the quartic instance") {
  auto d4 = FieldTowerInstance::d4_quartic();
  const FieldElement r = d4->generators()[0];
  const FieldElement sqrt2 = r * r;
  CHECK(d4->is_in_subfield(0, sqrt2));
  CHECK(d4->is_in_subfield(1, sqrt2));
  CHECK(d4->subfield_rational_basis(0).size() == 4);
  CHECK(d4->subfield_rational_basis(1).size() == 4);
}

TEST_CASE("instance axioms on random samples") {
  for (const auto& key : FieldTowerInstance::builtin_keys()) {
    auto inst = FieldTowerInstance::by_key(key);
    CAPTURE(key);
    Sampler rng(7);
    for (int i = 0; i < 2; ++i) {
      const FieldElement& w = inst->w(i);
      CHECK(inst->apply_tau(i, w) == -w);
      CHECK(inst->is_in_subfield(i, w * w));
      CHECK_FALSE(inst->is_in_subfield(i, w));
      CHECK_FALSE(inst->is_in_subfield(i, inst->w(i + 1)));
    }
    for (int k = 0; k < 25; ++k) {
      const FieldElement a = rng.element(*inst), b = rng.element(*inst);
      for (int i = 0; i < 2; ++i) {
        CHECK(inst->apply_tau(i, a * b) == inst->apply_tau(i, a) * inst->apply_tau(i, b));
        CHECK(inst->apply_tau(i, a + b) == inst->apply_tau(i, a) + inst->apply_tau(i, b));
        CHECK(inst->apply_tau(i, inst->apply_tau(i, a)) == a);
        const FieldElement tr = inst->trace(i, a);
        CHECK(inst->is_in_subfield(i, tr));
        CHECK(inst->trace(i, tr) == tr);
        const FieldElement c = inst->trace(i, b);
        CHECK(inst->trace(i, c * a) == c * tr);
        auto [c0, c1] = inst->decompose_over_subfield(i, a);
        CHECK(c0 + c1 * inst->w(i) == a);
        CHECK(inst->is_in_subfield(i, c1));
      }
      CHECK((a + b) - b == a);
      if (!b.is_zero()) CHECK((a * b) / b == a);
    }
  }
}
