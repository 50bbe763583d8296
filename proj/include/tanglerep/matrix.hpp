#pragma once

#include <vector>

#include "tanglerep/scalar.hpp"

namespace tanglerep {

/// Sparse vector: (index, value) pairs sorted by strictly increasing index,
/// no stored zeros.
using SVec = std::vector<std::pair<long, Scalar>>;

SVec sv_scale(const SVec& a, const Scalar& c);
SVec sv_neg(const SVec& a);
/// a + c*b, merged and zero-stripped.
SVec sv_axpy(const SVec& a, const Scalar& c, const SVec& b);
SVec sv_add(const SVec& a, const SVec& b);
bool sv_eq(const SVec& a, const SVec& b);
/// Pointer to the value at the given index, or nullptr when absent.
const Scalar* sv_get(const SVec& a, long idx);
/// Total term count over all entries; elimination cost heuristic.
long sv_complexity(const SVec& a);
/// Tensor product of row vectors: (a ⊗ b)[i*width_b + j] = a[i]*b[j].
SVec sv_kron(const SVec& a, const SVec& b, long width_b);

/// Sparse exact matrix with a fixed shape, stored by rows. Operators act on
/// row vectors from the right (v -> v*M), so composition of operators is
/// plain matrix multiplication in application order.
class Mat {
public:
  Mat() = default;
  Mat(long rows, long cols, Field f);
  static Mat identity(long d, const Field& f);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  const Field& field() const { return f_; }
  const SVec& row(long i) const { return data_[i]; }
  SVec& row_mut(long i) { return data_[i]; }

  void set(long i, long j, const Scalar& v);
  void add_to(long i, long j, const Scalar& v);
  Scalar at(long i, long j) const;
  long nnz() const;
  bool is_zero() const;

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  Mat scaled(const Scalar& c) const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;

  /// Row-major flattening to a single sparse vector of length rows*cols.
  /// This convention is fixed library-wide.
  SVec flatten() const;
  static Mat unflatten(const SVec& v, long rows, long cols, const Field& f);

private:
  long rows_ = 0, cols_ = 0;
  Field f_;
  std::vector<SVec> data_;
};

/// v * M for a row vector v of length M.rows().
SVec apply_row(const SVec& v, const Mat& m);

/// Row-major Kronecker product: (a ⊗ b)(i*rb + k, j*cb + l) = a(i,j)*b(k,l).
Mat kron(const Mat& a, const Mat& b);

/// Stack matrices with equal column counts on top of each other.
Mat vstack(const std::vector<Mat>& parts);

} // namespace tanglerep
