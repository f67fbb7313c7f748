#pragma once

#include "ncsym/field_tower.hpp"
#include "ncsym/linalg.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ncsym {

/// Bit string over the intermediate indices i+1, ..., j-1. Bit q set means the
/// involution tau_{i+q+1} was chosen at position q+1.
using Pattern = std::uint64_t;

/// Number of pattern bits for a piece of length n = j - i.
constexpr int pattern_bits(long long n) { return n >= 2 ? static_cast<int>(n - 1) : 0; }
/// The all-ones pattern tau_ij.
constexpr Pattern tau_pattern(long long n) { return (Pattern{1} << pattern_bits(n)) - 1; }

/// Letters of the reduced word for s-bar (leftmost applied last). Adjacent equal
/// letters cancel since each tau is an involution.
std::vector<int> reduced_bar_word(long long i, long long n, Pattern s);
/// s-bar = s_{i+1} o ... o s_{j-1} as an automorphism of F.
const Automorphism& bar(const FieldTowerInstance& inst, long long i, long long n, Pattern s);
/// s-bar followed on the right by tau_j, i.e. s-bar o tau_j.
const Automorphism& bar_then_tau(const FieldTowerInstance& inst, long long i, long long n, Pattern s);

/// Pattern as 0/1 text, bit 0 first.
std::string pattern_text(long long n, Pattern s);

/// Homogeneous element of the decomposed tensor algebra at (i, j): a sparse map
/// from sign patterns to F.
class TensorElement {
 public:
  TensorElement(InstancePtr inst, long long i, long long j);

  static TensorElement scalar(InstancePtr inst, long long i, const FieldElement& c);
  static TensorElement concentrated(InstancePtr inst, long long i, long long j, Pattern s, const FieldElement& v);

  const InstancePtr& instance() const { return inst_; }
  long long start() const { return i_; }
  long long end() const { return j_; }
  long long degree() const { return j_ - i_; }
  const std::map<Pattern, FieldElement>& components() const { return comp_; }
  FieldElement component(Pattern s) const;
  bool is_zero() const { return comp_.empty(); }

  void set(Pattern s, FieldElement v);
  void add(Pattern s, const FieldElement& v);

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  /// Left multiplication by c (in K_i for the K_i-linear structure; any F value is accepted).
  TensorElement left_scaled(const FieldElement& c) const;
  /// Same data relabelled to start index i (must have the same parity).
  TensorElement shifted_to(long long i) const;

  friend bool operator==(const TensorElement& a, const TensorElement& b);
  friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

  nlohmann::ordered_json to_json() const;

 private:
  InstancePtr inst_;
  long long i_, j_;
  std::map<Pattern, FieldElement> comp_;
};

/// Image of the pure tensor x_i (x) ... (x) x_{j-1}.
TensorElement mu(InstancePtr inst, long long i, const std::vector<FieldElement>& factors);

TensorElement star_mul(const TensorElement& a, const TensorElement& b);

/// Left K_i-coordinates: two per pattern in the basis {1, w_i}; a single slot in degree 0.
Vec coords_over_start_field(const TensorElement& a);
TensorElement from_coords(InstancePtr inst, long long i, long long j, const Vec& coords);
std::size_t tensor_dim(long long n);

/// (2, 0) at (l, l+2).
TensorElement h_prime(InstancePtr inst, long long l);
/// (2 w_{l+1}, 0) at (l, l+2).
TensorElement g_prime(InstancePtr inst, long long l);

/// h_l = 1 (x) 1 + w_{l+1}^{-1} (x) w_{l+1} and g_l = w_{l+1} (x) 1 + 1 (x) w_{l+1} as pure-tensor sums.
std::vector<std::vector<FieldElement>> h_pure_terms(const FieldTowerInstance& inst, long long l);
std::vector<std::vector<FieldElement>> g_pure_terms(const FieldTowerInstance& inst, long long l);

/// K_i-basis of T_{ij}: concentrated patterns with values 1 and w_i.
std::vector<TensorElement> tensor_basis(InstancePtr inst, long long i, long long j);

}  // namespace ncsym
