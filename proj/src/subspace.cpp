#include "tanglerep/subspace.hpp"

#include <algorithm>
#include <numeric>

namespace tanglerep {

Subspace::Subspace(long ambient, Field f) : ambient_(ambient), f_(std::move(f)) {}

SVec Subspace::reduce(SVec v) const {
  for (size_t k = 0; k < rows_.size() && !v.empty(); ++k) {
    if (v.front().first > pivots_[k]) continue;
    const Scalar* c = sv_get(v, pivots_[k]);
    if (c) v = sv_axpy(v, -*c, rows_[k]);
  }
  return v;
}

bool Subspace::insert(SVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  long pcol = v.front().first;
  const Scalar& lead = v.front().second;
  if (!lead.is_one()) v = sv_scale(v, lead.inv());
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pcol);
  size_t idx = static_cast<size_t>(pos - pivots_.begin());
  // Rows below the insertion point lead with a later column, so only the
  // earlier rows can hold an entry at the new pivot column.
  for (size_t k = 0; k < idx; ++k) {
    const Scalar* c = sv_get(rows_[k], pcol);
    if (c) rows_[k] = sv_axpy(rows_[k], -*c, v);
  }
  pivots_.insert(pivots_.begin() + idx, pcol);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

void Subspace::insert_rows(const Mat& m) {
  if (m.cols() != ambient_)
    throw usage_error("row length " + std::to_string(m.cols()) +
                      " does not match ambient dimension " + std::to_string(ambient_));
  std::vector<long> order(m.rows());
  std::iota(order.begin(), order.end(), 0L);
  std::vector<std::pair<long, long>> cost(m.rows());
  for (long i = 0; i < m.rows(); ++i)
    cost[i] = {static_cast<long>(m.row(i).size()), sv_complexity(m.row(i))};
  std::stable_sort(order.begin(), order.end(),
                   [&](long a, long b) { return cost[a] < cost[b]; });
  for (long i : order)
    if (!m.row(i).empty()) insert(m.row(i));
}

bool Subspace::contains(const SVec& v) const { return reduce(v).empty(); }

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_)
    throw usage_error("subspace ambient dimensions differ");
  for (const SVec& r : o.rows_)
    if (!contains(r)) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  if (ambient_ != o.ambient_)
    throw usage_error("subspace ambient dimensions differ");
  if (pivots_ != o.pivots_) return false;
  for (size_t k = 0; k < rows_.size(); ++k)
    if (!sv_eq(rows_[k], o.rows_[k])) return false;
  return true;
}

std::vector<Scalar> Subspace::coordinates(const SVec& v) const {
  std::vector<Scalar> coeffs(rows_.size(), sc_zero(f_));
  SVec w = v;
  for (size_t k = 0; k < rows_.size() && !w.empty(); ++k) {
    const Scalar* c = sv_get(w, pivots_[k]);
    if (c) {
      coeffs[k] = *c;
      w = sv_axpy(w, -*c, rows_[k]);
    }
  }
  if (!w.empty()) throw usage_error("vector lies outside the subspace");
  return coeffs;
}

Mat Subspace::basis_mat() const {
  Mat m(dim(), ambient_, f_);
  for (long i = 0; i < dim(); ++i) m.row_mut(i) = rows_[i];
  return m;
}

Subspace rref(const Mat& m) {
  Subspace s(m.cols(), m.field());
  s.insert_rows(m);
  return s;
}

Subspace kernel(const Mat& m) {
  Subspace rowspace = rref(m);
  long n = m.cols();
  Subspace ker(n, m.field());
  const auto& pivots = rowspace.pivots();
  const auto& rows = rowspace.rows();
  Scalar one = sc_one(m.field());
  size_t pi = 0;
  for (long j = 0; j < n; ++j) {
    if (pi < pivots.size() && pivots[pi] == j) {
      ++pi;
      continue;
    }
    // Free column j: x_j = 1, x_{pivot_k} = -R_k[j].
    SVec v;
    for (size_t k = 0; k < rows.size(); ++k) {
      const Scalar* c = sv_get(rows[k], j);
      if (c) v.emplace_back(pivots[k], -*c);
    }
    v.emplace_back(j, one);
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ker.insert(std::move(v));
  }
  if (ker.dim() + rowspace.dim() != n)
    throw std::logic_error("rank-nullity violated in kernel computation");
  return ker;
}

Subspace span_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw usage_error("subspace ambient dimensions differ");
  Subspace s = a;
  for (const SVec& r : b.rows()) s.insert(r);
  return s;
}

Subspace span_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw usage_error("subspace ambient dimensions differ");
  long d = a.ambient();
  // Zassenhaus: reduce rows [u|u] for u in A and [w|0] for w in B; rows whose
  // left half vanished carry the intersection in their right half.
  Subspace big(2 * d, a.field());
  for (const SVec& u : a.rows()) {
    SVec v;
    v.reserve(u.size() * 2);
    for (const auto& [i, x] : u) v.emplace_back(i, x);
    for (const auto& [i, x] : u) v.emplace_back(i + d, x);
    big.insert(std::move(v));
  }
  for (const SVec& w : b.rows()) big.insert(w);
  Subspace inter(d, a.field());
  const auto& pivots = big.pivots();
  for (size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] < d) continue;
    SVec v;
    for (const auto& [i, x] : big.rows()[k]) v.emplace_back(i - d, x);
    inter.insert(std::move(v));
  }
  Subspace sum = span_sum(a, b);
  if (sum.dim() + inter.dim() != a.dim() + b.dim())
    throw std::logic_error("dimension law violated in subspace intersection");
  return inter;
}

} // namespace tanglerep
