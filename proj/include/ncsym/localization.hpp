#pragma once

#include "ncsym/sampling.hpp"
#include "ncsym/sym_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ncsym {

/// a * (g_0 g_2 ... g_{2r-2})^{-1} in Lambda_00, with a in A_{0,2r}.
struct LocElement {
  long long level = 0;
  SymElement num;

  friend bool operator==(const LocElement& x, const LocElement& y) { return x.level == y.level && x.num == y.num; }
  friend bool operator!=(const LocElement& x, const LocElement& y) { return !(x == y); }
  nlohmann::ordered_json to_json() const;
};

struct NormalTestResult {
  enum class Kind { IsScalarTimesGChain, Witness };
  Kind kind;
  /// The scalar c with x = c * g_chain, or the witness b.
  FieldElement value;
  std::string to_string() const;
};

struct SaturationProbeResult {
  enum class Kind { ReachedGPower, Inconclusive };
  Kind kind;
  long long power = 0;  // k for ReachedGPower
  long long start = 0;  // start index of the certified chain g_s ... g_{s+2k-2}
  int rounds = 0;       // saturation passes performed before the verdict
  std::vector<std::size_t> final_dims;
};

struct CenterProbeResult {
  long long level = 0;
  std::size_t dimension = 0;  // over Q
  std::vector<LocElement> basis;
  bool contains_common_subfield = false;
  std::size_t common_subfield_degree = 0;
};

class Localization {
 public:
  explicit Localization(const SymAlgebra& alg) : alg_(alg) {}

  const SymAlgebra& algebra() const { return alg_; }
  const InstancePtr& instance() const { return alg_.instance(); }

  /// The fraction a * g^{-r}; a must lie in A_{0,2r}.
  LocElement make(long long r, const SymElement& a) const;
  LocElement scalar(const FieldElement& c) const;
  LocElement one() const { return scalar(instance()->one()); }
  LocElement zero() const { return scalar(instance()->zero()); }

  LocElement canonicalize(const LocElement& x) const;
  /// Same element written at level r >= x.level.
  LocElement raise(const LocElement& x, long long r) const;
  LocElement add(const LocElement& x, const LocElement& y) const;
  LocElement sub(const LocElement& x, const LocElement& y) const;
  LocElement mul(const LocElement& x, const LocElement& y) const;

  /// dim_{K_0} of Lambda^n / Lambda^{n-1}, n = 0..L.
  std::vector<std::size_t> filtration_dims(long long L) const;
  /// Lambda^i Lambda^1 = Lambda^1 Lambda^i = Lambda^{i+1} as K_0-spans.
  bool filtration_span_equality(long long i) const;

  /// Element of Lambda^r with random numerator.
  LocElement random_element(Sampler& rng, long long r) const;

  /// Decides whether x in A_{i,i+delta} is a K_i-multiple of the g-chain, or
  /// produces b in K_i for which no c satisfies b x = x c.
  NormalTestResult normal_element_test(const SymElement& x, Sampler& rng) const;
  /// Re-checks a witness: the forced c' is outside K_{i+delta}, or b x != x c'.
  bool verify_witness(const SymElement& x, const FieldElement& b) const;

  SaturationProbeResult ideal_saturation_probe(const SymElement& x, int depth, int level_bound) const;

  CenterProbeResult center_probe(long long L) const;

 private:
  const SymAlgebra& alg_;
};

/// Q-basis of K_0 ∩ K_1 (number field instances only).
std::vector<FieldElement> common_subfield_basis(const FieldTowerInstance& inst);

}  // namespace ncsym
