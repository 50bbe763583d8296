#include "tanglerep/linalg.hpp"

#include <deque>

namespace tanglerep {

static constexpr long kGenericSizeLimit = 4000;

static void check_generic_size(long d, const Field& f, const char* op) {
  if (d > kGenericSizeLimit && f->kind == FieldKind::GenericQ0)
    throw usage_error(std::string(op) + ": instance of size " + std::to_string(d) +
                      " exceeds " + std::to_string(kGenericSizeLimit) +
                      " over the generic field; run it over a specialized field "
                      "(modp:P or zeta:A/B) instead");
}

AlgebraSpan algebra_closure(const std::vector<Mat>& gens, bool include_identity) {
  if (gens.empty() && !include_identity)
    throw usage_error("algebra closure needs generators or the identity");
  long d = gens.empty() ? 0 : gens[0].rows();
  Field f = gens.empty() ? Field{} : gens[0].field();
  for (const Mat& g : gens)
    if (g.rows() != d || g.cols() != d)
      throw usage_error("algebra generators must be square and equal-sized");
  check_generic_size(d, f, "algebra_closure");

  AlgebraSpan out;
  out.d = d;
  out.span = Subspace(d * d, f);
  std::deque<const Mat*> frontier;
  auto accept = [&](Mat m) -> bool {
    if (!out.span.insert(m.flatten())) return false;
    out.basis.push_back(std::move(m));
    return true;
  };
  if (include_identity) accept(Mat::identity(d, f));
  for (const Mat& g : gens) accept(g);
  // Breadth-first by word length: basis grows at the back, and every accepted
  // element is later multiplied by each generator on both sides.
  for (size_t head = 0; head < out.basis.size(); ++head) {
    for (const Mat& g : gens) {
      accept(out.basis[head] * g);
      accept(g * out.basis[head]);
    }
  }
  return out;
}

AlgebraSpan two_sided_ideal(const AlgebraSpan& algebra, const Mat& g) {
  if (g.rows() != algebra.d || g.cols() != algebra.d)
    throw usage_error("ideal generator shape does not match the algebra");
  if (!algebra.span.contains(g.flatten()))
    throw usage_error("ideal generator lies outside the algebra");
  check_generic_size(algebra.d, g.field(), "two_sided_ideal");

  AlgebraSpan out;
  out.d = algebra.d;
  out.span = Subspace(algebra.d * algebra.d, g.field());
  // span{a g b} = span{l b : l spanning {a g}}, since right multiplication is
  // linear; the algebra is unital and closed, so one pass over each side is
  // exact.
  std::vector<Mat> left;
  Subspace lspan(algebra.d * algebra.d, g.field());
  for (const Mat& a : algebra.basis) {
    Mat ag = a * g;
    if (lspan.insert(ag.flatten())) left.push_back(std::move(ag));
  }
  for (const Mat& l : left)
    for (const Mat& b : algebra.basis) {
      Mat lb = l * b;
      if (out.span.insert(lb.flatten())) out.basis.push_back(std::move(lb));
    }
  return out;
}

Subspace intertwiner_space(const std::vector<Mat>& from_ops,
                           const std::vector<Mat>& to_ops) {
  if (from_ops.size() != to_ops.size())
    throw usage_error("intertwiner operator lists differ in length");
  if (from_ops.empty())
    throw usage_error("intertwiner space needs at least one operator pair");
  long da = from_ops[0].rows(), db = to_ops[0].rows();
  const Field& f = from_ops[0].field();
  check_generic_size(std::max(da, db), f, "intertwiner_space");
  std::vector<Mat> blocks;
  blocks.reserve(from_ops.size());
  for (size_t t = 0; t < from_ops.size(); ++t) {
    const Mat& A = from_ops[t];
    const Mat& B = to_ops[t];
    if (A.rows() != da || A.cols() != da || B.rows() != db || B.cols() != db)
      throw usage_error("intertwiner operators must be square and consistently sized");
    Mat bt = B.transpose();
    // Equation (i,j): sum_k A[i,k] X[k,j] - sum_l B[l,j] X[i,l] = 0, with X
    // flattened row-major to x[k*db + j].
    Mat sys(da * db, da * db, f);
    for (long i = 0; i < da; ++i) {
      for (long j = 0; j < db; ++j) {
        SVec row;
        for (const auto& [k, x] : A.row(i)) row.emplace_back(k * db + j, x);
        for (const auto& [l, y] : bt.row(j)) {
          // bt.row(j) holds B[l,j] indexed by l.
          Scalar neg = -y;
          bool merged = false;
          long col = i * db + l;
          for (auto& [c, v] : row)
            if (c == col) {
              v += neg;
              merged = true;
              break;
            }
          if (!merged) row.emplace_back(col, std::move(neg));
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        SVec clean;
        for (auto& e : row)
          if (!e.second.is_zero()) clean.push_back(std::move(e));
        sys.row_mut(i * db + j) = std::move(clean);
      }
    }
    blocks.push_back(std::move(sys));
  }
  return kernel(vstack(blocks));
}

Subspace commutant(const std::vector<Mat>& gens) {
  if (gens.empty())
    throw usage_error("commutant of an empty generator list is the full matrix "
                      "space; pass the identity to get it explicitly");
  return intertwiner_space(gens, gens);
}

Subspace module_span(const Subspace& vectors, const std::vector<Mat>& operators) {
  Subspace out(vectors.ambient(), vectors.field());
  for (const Mat& m : operators) {
    if (m.rows() != vectors.ambient() || m.cols() != vectors.ambient())
      throw usage_error("module operator shape does not match the ambient space");
    for (const SVec& v : vectors.rows()) out.insert(apply_row(v, m));
  }
  return out;
}

Subspace module_span(const Subspace& vectors, const Subspace& operators) {
  long d = vectors.ambient();
  if (operators.ambient() != d * d)
    throw usage_error("operator subspace is not made of flattened " +
                      std::to_string(d) + "x" + std::to_string(d) + " matrices");
  std::vector<Mat> ops;
  ops.reserve(operators.rows().size());
  for (const SVec& r : operators.rows())
    ops.push_back(Mat::unflatten(r, d, d, vectors.field()));
  return module_span(vectors, ops);
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw usage_error("only square matrices can be inverted");
  long d = m.rows();
  Mat aug(d, 2 * d, m.field());
  Scalar one = sc_one(m.field());
  for (long i = 0; i < d; ++i) {
    SVec r = m.row(i);
    r.emplace_back(d + i, one);
    aug.row_mut(i) = std::move(r);
  }
  Subspace s = rref(aug);
  if (s.dim() != d || s.pivots().back() >= d)
    throw arithmetic_error("matrix is singular");
  Mat inv(d, d, m.field());
  for (long k = 0; k < d; ++k) {
    // Canonical form sorts rows by pivot, so row k has pivot column k and its
    // right half is row k of the inverse.
    SVec r;
    for (const auto& [j, x] : s.rows()[k])
      if (j >= d) r.emplace_back(j - d, x);
    inv.row_mut(k) = std::move(r);
  }
  return inv;
}

} // namespace tanglerep
