#pragma once

#include "ncsym/tensor.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace ncsym {

/// Homogeneous element of A_{ij} in normal form: slot m is the coefficient of the
/// summand F_{tau_{i,i+2m}}, m = 0..floor((j-i)/2). In the even case slot 0 lies in K_i.
class SymElement {
 public:
  SymElement(InstancePtr inst, long long i, long long j, std::vector<FieldElement> slots);
  static SymElement zero(InstancePtr inst, long long i, long long j);
  /// e_i
  static SymElement unit(InstancePtr inst, long long i);

  const InstancePtr& instance() const { return inst_; }
  long long start() const { return i_; }
  long long end() const { return j_; }
  long long degree() const { return j_ - i_; }
  const std::vector<FieldElement>& slots() const { return slots_; }
  const FieldElement& slot(std::size_t m) const { return slots_.at(m); }
  const FieldElement& top() const { return slots_.back(); }
  bool is_zero() const;

  SymElement& operator+=(const SymElement& o);
  SymElement& operator-=(const SymElement& o);
  friend SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
  friend SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }
  SymElement operator-() const;
  /// Left action of c in K_i.
  SymElement left_scaled(const FieldElement& c) const;
  /// Same slots at start index i of equal parity.
  SymElement shifted_to(long long i) const;

  friend bool operator==(const SymElement& a, const SymElement& b);
  friend bool operator!=(const SymElement& a, const SymElement& b) { return !(a == b); }

  nlohmann::ordered_json to_json() const;

 private:
  InstancePtr inst_;
  long long i_, j_;
  std::vector<FieldElement> slots_;
};

std::size_t slot_count(long long n);

struct RelationSpace {
  long long i = 0, j = 0;
  Echelon echelon;  // K_i-coordinates of length 2^{j-i}
  std::size_t dimension() const { return echelon.rank(); }
};

/// Computation context for A = S^nc(F) over one instance. Relation spaces are
/// cached per (i mod 2, j - i); the cache is safe for concurrent use.
class SymAlgebra {
 public:
  explicit SymAlgebra(InstancePtr inst) : inst_(std::move(inst)) {}

  const InstancePtr& instance() const { return inst_; }

  /// Left K_i-span of basis(T_il) * h'_l * basis(T_{l+2,j}) over all l.
  std::shared_ptr<const RelationSpace> relation_space(long long i, long long j) const;
  /// Spanning set of R^{(l)}_{ij} as coordinate vectors.
  std::vector<SparseVec> relation_piece(long long i, long long j, long long l) const;
  /// dim_{K_i} R^{(l)} ∩ R^{(l')}
  std::size_t intersection_dim(long long i, long long j, long long l, long long lp) const;

  TensorElement section(const SymElement& a) const;
  /// Normal form by rewriting modulo the relations.
  SymElement project(const TensorElement& t) const;
  /// Normal form by solving against [relation basis | section images]. With
  /// reverse_order the relation basis is generated from the pieces in the
  /// opposite order, giving an independently reduced basis.
  SymElement project_by_solve(const TensorElement& t, bool reverse_order = false) const;

  SymElement sym_mul(const SymElement& a, const SymElement& b) const;

  /// Image of g'_i.
  SymElement g_bar(long long i) const;
  /// g_i g_{i+2} ... g_{i+2k-2}; k = 0 gives e_i.
  SymElement g_chain(long long i, long long k) const;
  bool check_g_normality(long long i, long long j) const;
  /// y with g_i * y = c, or nullopt.
  std::optional<SymElement> left_divide_by_g(const SymElement& c) const;
  /// Same result by solving against g_i * basis(A_{i+2,m}).
  std::optional<SymElement> left_divide_by_g_solve(const SymElement& c) const;
  /// y with y * g_{j-2} = c, or nullopt.
  std::optional<SymElement> right_divide_by_g(const SymElement& c) const;
  /// a * g_j (appends a zero slot).
  SymElement right_mul_g(const SymElement& a) const;
  SymElement left_mul_g(const SymElement& a) const;
  std::size_t quotient_B_dim(long long i, long long n) const;
  /// phi(a) with a * g_j = g_i * phi(a). Acts slotwise and K_i-linearly.
  SymElement conjugate_by_g(const SymElement& a) const;
  /// Inverse of conjugate_by_g: psi(b) with g_{i-2} * b = psi(b) * g_{j-2}.
  SymElement unconjugate_by_g(const SymElement& b) const;

  /// K_i-basis of A_ij and coordinates against it (length j - i + 1).
  std::vector<SymElement> basis(long long i, long long j) const;
  Vec coords(const SymElement& a) const;
  SymElement from_coords(long long i, long long j, const Vec& c) const;

 private:
  std::vector<SparseVec> relation_spanning_set(long long i, long long j, bool reverse_order) const;
  TensorElement lower(const TensorElement& t) const;

  /// Images of 1 and w_i under phi on the top slot of degree d, and the inverse map.
  struct SlotTwist {
    FieldElement one, w, inv_one, inv_w;
  };
  const SlotTwist& slot_twist(long long i, long long d) const;
  FieldElement apply_twist(long long i, long long d, const FieldElement& x, bool inverse) const;

  InstancePtr inst_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<int, long long>, std::shared_ptr<const RelationSpace>> cache_;
  mutable std::mutex twist_mutex_;
  mutable std::map<std::pair<int, long long>, std::shared_ptr<const SlotTwist>> twists_;
};

/// (2^n - n - 1, sum_{m>=1} (-1)^{m-1} C(n-m, m) 2^{n-2m})
std::pair<long long, long long> eulerian_check(int n);

}  // namespace ncsym
