#pragma once

#include <vector>

#include "tanglerep/matrix.hpp"

namespace tanglerep {

/// Canonical subspace of row vectors: the stored basis is the reduced row
/// echelon form with strictly increasing pivot columns, pivot entries 1, and
/// zeros elsewhere in pivot columns. The form is unique per subspace, so
/// equality and membership are structural.
class Subspace {
public:
  Subspace() = default;
  Subspace(long ambient, Field f);

  long ambient() const { return ambient_; }
  long dim() const { return static_cast<long>(rows_.size()); }
  const Field& field() const { return f_; }
  const std::vector<SVec>& rows() const { return rows_; }
  const std::vector<long>& pivots() const { return pivots_; }

  /// Fully reduce v against the basis and return the residue.
  SVec reduce(SVec v) const;
  /// Insert one vector; true when the dimension grew.
  bool insert(SVec v);
  /// Insert all rows of m, cheapest rows first.
  void insert_rows(const Mat& m);

  bool contains(const SVec& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Coefficients of v in the stored basis; usage_error when v is outside.
  std::vector<Scalar> coordinates(const SVec& v) const;

  Mat basis_mat() const;

private:
  long ambient_ = 0;
  Field f_;
  std::vector<SVec> rows_;
  std::vector<long> pivots_;
};

/// Row space of m in canonical form.
Subspace rref(const Mat& m);

/// Right null space {x : m x^T = 0}; checks rank + nullity = cols.
Subspace kernel(const Mat& m);

Subspace span_sum(const Subspace& a, const Subspace& b);
/// Zassenhaus intersection; checks the dimension law against span_sum.
Subspace span_intersect(const Subspace& a, const Subspace& b);

} // namespace tanglerep
