#include "ncsym/linalg.hpp"

#include <stdexcept>

namespace ncsym {

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) s.emplace_back(k, v[k]);
  return s;
}

Vec to_dense(const SparseVec& v, std::size_t size, const FieldElement& zero) {
  Vec d(size, zero);
  for (const auto& [k, x] : v) d.at(k) = x;
  return d;
}

SparseVec axpy_sub(const SparseVec& a, const FieldElement& f, const SparseVec& b) {
  SparseVec r;
  r.reserve(a.size() + b.size());
  std::size_t x = 0, y = 0;
  while (x < a.size() || y < b.size()) {
    if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
      r.push_back(a[x++]);
    } else if (x == a.size() || b[y].first < a[x].first) {
      r.emplace_back(b[y].first, -(f * b[y].second));
      ++y;
    } else {
      FieldElement v = a[x].second - f * b[y].second;
      if (!v.is_zero()) r.emplace_back(a[x].first, std::move(v));
      ++x;
      ++y;
    }
  }
  return r;
}

bool Echelon::insert(SparseVec v) {
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) break;
    const FieldElement f = v.front().second;
    v = axpy_sub(v, f, it->second);
  }
  if (v.empty()) return false;
  const FieldElement inv = v.front().second.inverse();
  for (auto& [k, x] : v) x *= inv;
  const std::size_t pivot = v.front().first;
  rows_.emplace(pivot, std::move(v));
  return true;
}

SparseVec Echelon::reduce(const SparseVec& v) const {
  std::map<std::size_t, FieldElement> work;
  for (const auto& [k, x] : v) work.emplace(k, x);
  SparseVec rem;
  while (!work.empty()) {
    auto head = work.begin();
    const std::size_t col = head->first;
    FieldElement f = head->second;
    work.erase(head);
    auto it = rows_.find(col);
    if (it == rows_.end()) {
      rem.emplace_back(col, std::move(f));
      continue;
    }
    for (std::size_t k = 1; k < it->second.size(); ++k) {
      const auto& [c, x] = it->second[k];
      auto w = work.find(c);
      if (w == work.end()) {
        work.emplace(c, -(f * x));
      } else {
        w->second -= f * x;
        if (w->second.is_zero()) work.erase(w);
      }
    }
  }
  return rem;
}

std::size_t rank_of(const std::vector<Vec>& rows) {
  Echelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

std::optional<Vec> solve_combination(const std::vector<Vec>& columns, const Vec& target, const FieldElement& zero) {
  const std::size_t n = target.size();
  const std::size_t m = columns.size();
  // Augmented matrix, rows = coordinates.
  std::vector<Vec> a(n, Vec(m + 1, zero));
  for (std::size_t c = 0; c < m; ++c) {
    if (columns[c].size() != n) throw std::invalid_argument("solve_combination: column size mismatch");
    for (std::size_t r = 0; r < n; ++r) a[r][c] = columns[c][r];
  }
  for (std::size_t r = 0; r < n; ++r) a[r][m] = target[r];
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m && row < n; ++c) {
    std::size_t p = row;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    const FieldElement inv = a[row][c].inverse();
    for (std::size_t k = c; k <= m; ++k) a[row][k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      const FieldElement f = a[r][c];
      for (std::size_t k = c; k <= m; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < n; ++r)
    if (!a[r][m].is_zero()) return std::nullopt;
  Vec sol(m, zero);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) sol[pivot_col[r]] = a[r][m];
  return sol;
}

std::vector<SparseVec> intersect_spans(const std::vector<SparseVec>& u, const std::vector<SparseVec>& v, std::size_t dim) {
  // Rows [x | x] for x in u and [y | 0] for y in v. Rows whose pivot lands in the
  // right block have a zero left block; their right blocks span the intersection.
  Echelon e;
  for (const auto& x : u) {
    SparseVec row = x;
    for (const auto& [k, val] : x) row.emplace_back(k + dim, val);
    e.insert(std::move(row));
  }
  for (const auto& y : v) e.insert(y);
  std::vector<SparseVec> out;
  for (const auto& [pivot, row] : e.rows()) {
    if (pivot < dim) continue;
    SparseVec r;
    for (const auto& [k, val] : row) r.emplace_back(k - dim, val);
    out.push_back(std::move(r));
  }
  return out;
}

std::size_t intersection_dimension(const std::vector<SparseVec>& u, const std::vector<SparseVec>& v) {
  Echelon eu, ev, esum;
  for (const auto& x : u) {
    eu.insert(x);
    esum.insert(x);
  }
  for (const auto& y : v) {
    ev.insert(y);
    esum.insert(y);
  }
  return eu.rank() + ev.rank() - esum.rank();
}

std::vector<std::vector<Rational>> rational_null_space(std::vector<std::vector<Rational>> m, std::size_t cols) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (std::size_t k = c; k < cols; ++k) m[row][k] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols);
    x[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = -m[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace ncsym
