#include "ncsym/sampling.hpp"

namespace ncsym {

int Sampler::uniform_int(int lo, int hi) {
  // Plain modular reduction keeps draws identical across standard libraries.
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng_() % span);
}

Rational Sampler::small_rational() {
  Rational q(uniform_int(-3, 3), uniform_int(1, 2));
  q.canonicalize();
  return q;
}

FieldElement Sampler::element(const FieldTowerInstance& inst) {
  if (auto deg = inst.prime_field_degree()) {
    const auto nf = inst.one().number_field();
    std::vector<Rational> c(static_cast<std::size_t>(*deg));
    for (auto& q : c) q = small_rational();
    return FieldElement(nf, std::move(c));
  }
  std::vector<Rational> num(static_cast<std::size_t>(uniform_int(1, 3)));
  for (auto& q : num) q = Rational(uniform_int(-3, 3));
  QPoly den = QPoly::constant(1);
  if (uniform_int(0, 1) == 1) den = QPoly::affine(1, uniform_int(-3, 3));
  return FieldElement(RationalFunction(QPoly(std::move(num)), std::move(den)));
}

FieldElement Sampler::nonzero_element(const FieldTowerInstance& inst) {
  for (;;) {
    FieldElement x = element(inst);
    if (!x.is_zero()) return x;
  }
}

FieldElement Sampler::subfield_element(const FieldTowerInstance& inst, long long i) {
  return inst.trace(i, element(inst));
}

FieldElement Sampler::nonzero_subfield_element(const FieldTowerInstance& inst, long long i) {
  for (;;) {
    FieldElement x = subfield_element(inst, i);
    if (!x.is_zero()) return x;
  }
}

}  // namespace ncsym
