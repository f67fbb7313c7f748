#pragma once

#include "ncsym/field_element.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ncsym {

/// Integer index reduced to {0, 1}.
constexpr int parity(long long i) { return static_cast<int>(((i % 2) + 2) % 2); }

/// Word over {tau_0, tau_1}; letters[0] is applied last (function composition).
struct AutomorphismWord {
  std::vector<int> letters;

  static AutomorphismWord sigma() { return {{1, 0}}; }
  friend AutomorphismWord operator*(const AutomorphismWord& u, const AutomorphismWord& v);
  std::string to_string() const;
};

struct SigmaOrder {
  enum class Kind { Finite, ExceedsBound, CertifiedInfinite };
  Kind kind;
  int order = 0;  // meaningful for Finite
  std::string evidence;
};

enum class Algebraicity { Algebraic, NonAlgebraic, Unknown };
std::string to_string(Algebraicity a);
std::string to_string(SigmaOrder::Kind k);

/// F with index-2 subfields K_0, K_1, their Galois involutions tau_0, tau_1, and
/// elements w_0, w_1 with tau_i(w_i) = -w_i. Immutable after construction.
///
/// Structural validity (involutivity, multiplicativity, w_i conditions) is not
/// enforced here; the field_tower verification suite checks it, so that a
/// misconfigured descriptor can be constructed and detected.
class FieldTowerInstance {
 public:
  struct NumberFieldDescriptor {
    std::string key;
    std::string description;
    int m1;
    Rational a;
    std::string x_name;
    int m2;
    Rational b;
    std::string y_name;
    /// Images of (x, y) under tau_0 and tau_1, as coordinate vectors.
    std::array<std::pair<std::vector<Rational>, std::vector<Rational>>, 2> tau_images;
    std::array<std::vector<Rational>, 2> w;
    std::array<std::string, 2> subfield_names;
  };
  struct RationalFunctionDescriptor {
    std::string key;
    std::string description;
    /// tau_i(t) = scale * t + shift
    std::array<std::pair<Rational, Rational>, 2> tau_affine;
    std::array<RationalFunction, 2> w;
    std::array<std::string, 2> subfield_names;
  };

  static std::shared_ptr<const FieldTowerInstance> from_descriptor(const NumberFieldDescriptor& d);
  static std::shared_ptr<const FieldTowerInstance> from_descriptor(const RationalFunctionDescriptor& d);

  /// Q(sqrt2, sqrt3), K_0 = Q(sqrt2), K_1 = Q(sqrt3).
  static std::shared_ptr<const FieldTowerInstance> biquadratic();
  /// Q(i, 2^(1/4)), K_0 = Q(2^(1/4)), K_1 = Q(i 2^(1/4)).
  static std::shared_ptr<const FieldTowerInstance> d4_quartic();
  /// Q(t), K_0 = Q(t^2), K_1 = Q((t-1)^2).
  static std::shared_ptr<const FieldTowerInstance> rational_function();
  /// Built-in by key; nullptr for an unknown key.
  static std::shared_ptr<const FieldTowerInstance> by_key(const std::string& key);
  static std::vector<std::string> builtin_keys();

  const std::string& key() const { return key_; }
  const std::string& description() const { return description_; }
  const std::string& subfield_name(int i) const { return subfield_names_[static_cast<std::size_t>(parity(i))]; }

  FieldElement zero() const { return one_.zero_like(); }
  FieldElement one() const { return one_; }
  FieldElement rational(const Rational& q) const { return one_.rational(q); }
  /// Field generators over Q (x, y for number fields; t for Q(t)).
  const std::vector<FieldElement>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }

  const Automorphism& tau(long long i) const { return tau_[static_cast<std::size_t>(parity(i))]; }
  FieldElement apply_tau(long long i, const FieldElement& x) const { return tau(i)(x); }
  const FieldElement& w(long long i) const { return w_[static_cast<std::size_t>(parity(i))]; }

  bool is_in_subfield(long long i, const FieldElement& x) const { return apply_tau(i, x) == x; }
  /// (x + tau_i(x)) / 2
  FieldElement trace(long long i, const FieldElement& x) const;
  /// x = c0 + c1 * w_i with c0, c1 in K_i.
  std::pair<FieldElement, FieldElement> decompose_over_subfield(long long i, const FieldElement& x) const;

  /// Composite of the word as a single automorphism.
  Automorphism automorphism(const AutomorphismWord& u) const;
  /// The alternating word of the given length whose leftmost letter is `first`;
  /// length 0 is the identity. Cached for short lengths.
  const Automorphism& alternating(int first, int length) const;
  FieldElement eval_word(const AutomorphismWord& u, const FieldElement& x) const;
  Automorphism identity() const;

  SigmaOrder sigma_order(int bound) const;
  Algebraicity classify_algebraic(int bound = 64) const;

  /// [F : Q] when finite.
  std::optional<int> prime_field_degree() const;
  /// Q-basis of K_i (number fields only); throws std::logic_error otherwise.
  std::vector<FieldElement> subfield_rational_basis(long long i) const;

 private:
  FieldTowerInstance() : one_(RationalFunction(QPoly::constant(1))) {}
  void build_caches();

  std::string key_, description_;
  std::array<std::string, 2> subfield_names_;
  std::shared_ptr<const NumberField> nf_;
  FieldElement one_;
  std::vector<FieldElement> generators_;
  std::vector<std::string> generator_names_;
  std::array<Automorphism, 2> tau_{Automorphism::affine(1, 0), Automorphism::affine(1, 0)};
  std::array<FieldElement, 2> w_{one_, one_};
  std::array<std::vector<Automorphism>, 2> alternating_;
};

using InstancePtr = std::shared_ptr<const FieldTowerInstance>;

}  // namespace ncsym
