#pragma once

#include "ncsym/field_tower.hpp"

#include <cstdint>
#include <random>

namespace ncsym {

/// Seeded source of small-height field elements. Heights are kept small so that
/// rational-function coefficients stay manageable in long products.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform_int(int lo, int hi);
  Rational small_rational();

  FieldElement element(const FieldTowerInstance& inst);
  FieldElement nonzero_element(const FieldTowerInstance& inst);
  /// Element of K_i, built as a trace of a random element.
  FieldElement subfield_element(const FieldTowerInstance& inst, long long i);
  FieldElement nonzero_subfield_element(const FieldTowerInstance& inst, long long i);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ncsym
