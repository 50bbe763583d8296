#pragma once

#include <vector>

#include "tanglerep/subspace.hpp"

namespace tanglerep {

/// A matrix algebra presented both as a canonical subspace of row-major
/// flattened d*d vectors and as the list of independent matrices that
/// produced it, in discovery order.
struct AlgebraSpan {
  long d = 0;
  Subspace span;
  std::vector<Mat> basis;
};

/// Smallest subspace of d x d matrices containing the generators (and the
/// identity when requested) and closed under two-sided multiplication by the
/// generators. Saturation is breadth-first by word length, so the discovered
/// basis is reproducible.
AlgebraSpan algebra_closure(const std::vector<Mat>& gens, bool include_identity);

/// Span of {a*g*b : a, b in the algebra basis}. The algebra must be unital
/// and multiplicatively closed, so a single pass suffices. The element g must
/// lie in the algebra's span.
AlgebraSpan two_sided_ideal(const AlgebraSpan& algebra, const Mat& g);

/// Solutions X of G*X = X*G for every generator, as flattened d*d vectors.
Subspace commutant(const std::vector<Mat>& gens);

/// Solutions X (shape d_from x d_to, flattened row-major) of
/// from_ops[k]*X = X*to_ops[k] for every k; the two lists run in parallel.
Subspace intertwiner_space(const std::vector<Mat>& from_ops,
                           const std::vector<Mat>& to_ops);

/// Span of {v*M : v basis vector of vectors, M basis element of operators}.
/// The operators argument holds row-major flattened square matrices.
Subspace module_span(const Subspace& vectors, const Subspace& operators);
Subspace module_span(const Subspace& vectors, const std::vector<Mat>& operators);

/// Inverse of a square matrix; arithmetic_error when singular.
Mat inverse(const Mat& m);

} // namespace tanglerep
