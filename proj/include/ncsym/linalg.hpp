#pragma once

#include "ncsym/field_element.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace ncsym {

/// Dense vector of field coordinates.
using Vec = std::vector<FieldElement>;
/// Sparse vector: (index, nonzero value) pairs sorted by index.
using SparseVec = std::vector<std::pair<std::size_t, FieldElement>>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, std::size_t size, const FieldElement& zero);

/// Row echelon form of a subspace of F^n with pivots at the lowest column of each
/// row and pivot entries normalized to one. Exact, no pivoting heuristics:
/// the pivot of a row is simply its first nonzero coordinate.
class Echelon {
 public:
  /// Adds v to the span; returns true iff v was independent of the current rows.
  bool insert(SparseVec v);
  bool insert(const Vec& v) { return insert(to_sparse(v)); }

  /// Remainder of v after full reduction against the rows (zero iff v is in the span).
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  bool contains(const Vec& v) const { return contains(to_sparse(v)); }

  std::size_t rank() const { return rows_.size(); }
  /// Rows keyed by pivot column.
  const std::map<std::size_t, SparseVec>& rows() const { return rows_; }

 private:
  std::map<std::size_t, SparseVec> rows_;
};

/// a - f*b for sparse vectors.
SparseVec axpy_sub(const SparseVec& a, const FieldElement& f, const SparseVec& b);

std::size_t rank_of(const std::vector<Vec>& rows);

/// Coefficients c with sum_k c[k] * columns[k] = target, or nullopt if the system
/// is inconsistent. When the columns are dependent one particular solution is
/// returned.
std::optional<Vec> solve_combination(const std::vector<Vec>& columns, const Vec& target, const FieldElement& zero);

/// Basis of span(u) ∩ span(v) by the Zassenhaus construction.
std::vector<SparseVec> intersect_spans(const std::vector<SparseVec>& u, const std::vector<SparseVec>& v, std::size_t dim);

/// Dimension of span(u) ∩ span(v).
std::size_t intersection_dimension(const std::vector<SparseVec>& u, const std::vector<SparseVec>& v);

/// Basis of the right null space {x : M x = 0} of a rational matrix.
std::vector<std::vector<Rational>> rational_null_space(std::vector<std::vector<Rational>> m, std::size_t cols);

}  // namespace ncsym
