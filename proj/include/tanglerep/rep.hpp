#pragma once

#include <utility>
#include <vector>

#include "tanglerep/linalg.hpp"
#include "tanglerep/tangle.hpp"

namespace tanglerep {

/// Operators attached to the rank-m symplectic space V (dimension 2m), all
/// stored in row convention: they act on row vectors from the right, so
/// composing operators is matrix multiplication in application order.
struct CupCapData {
  Mat cup;      // 1 x (2m)^2, the row the cup sends 1 to
  Mat cap;      // (2m)^2 x 1, the evaluation column
  Mat beta;     // crossing operator on the two-fold tensor square
  Mat beta_inv; // inverse crossing
  Mat gamma;    // contraction: cap followed by cup, rank one
};

/// Chevalley generator actions of the quantized enveloping algebra of
/// sp_{2m} on the n-fold tensor power. Entry i-1 holds generator i for
/// 1 <= i <= m. Left operators are stored transposed so that they too act
/// on row vectors from the right; an operator G then commutes with a tensor
/// operator M exactly when the stored matrices commute.
struct UqAction {
  std::vector<Mat> e, f, k, k_inv;
};

/// Evaluation context for one rank, tensor degree and coefficient field:
/// index ladders of the weighted basis, the cup/cap operators, the crossing
/// and contraction generators placed on the n-fold tensor space, and the
/// calibrated quantum-group action. Everything is built by the constructor
/// and read-only afterwards, so a shared context is safe to use from
/// several threads.
class RepContext {
public:
  RepContext(long m, long n, Field field);

  long m() const { return m_; }
  long n() const { return n_; }
  long dim_v() const { return 2 * m_; }
  long dim_tensor() const { return dim_t_; }
  const Field& field() const { return f_; }

  /// Exponent ladder m, m-1, ..., 1, -1, ..., -m over the 0-based basis.
  long rho(long a) const { return a < m_ ? m_ - a : m_ - a - 1; }
  /// +1 on the first half of the basis, -1 on the second.
  int eps(long a) const { return a < m_ ? 1 : -1; }
  /// Pairing partner of a basis position.
  long prime(long a) const { return 2 * m_ - 1 - a; }

  /// Value of a closed loop.
  Scalar loop() const;
  /// Value of a positive curl on one strand.
  Scalar twist() const;

  const CupCapData& cup_cap() const { return cc_; }

  /// Crossing, inverse crossing and contraction acting on strands i, i+1 of
  /// the n-fold tensor space, 1 <= i <= n-1.
  const Mat& beta_at(long i) const;
  const Mat& beta_inv_at(long i) const;
  const Mat& gamma_at(long i) const;
  /// The pairs (crossing_i, contraction_i) for i = 1..n-1; needs n >= 2.
  const std::vector<std::pair<Mat, Mat>>& bmw_generators() const;

  /// Calibrated quantum-group action on the n-fold tensor space. The
  /// convention is fixed at construction: among the standard coproduct and
  /// sign variants, the first one whose two-fold extension commutes with the
  /// crossing and contraction operators and acts trivially on the cup row
  /// (e, f annihilate it, k fixes it) is kept. When none passes, the
  /// constructor reports the violated invariant.
  const UqAction& uq_generators() const { return uq_; }

  /// Basis index of a tensor word (digits 0..2m-1, first factor most
  /// significant) and its inverse.
  long pack(const std::vector<long>& word) const;
  std::vector<long> unpack(long index) const;

  /// Weight of a tensor basis vector as a length-m integer vector.
  std::vector<long> weight_of(long index) const;
  /// Span of the tensor basis vectors of the given weight.
  Subspace weight_space(const std::vector<long>& lambda) const;

private:
  long m_ = 0, n_ = 0, dim_t_ = 1;
  Field f_;
  CupCapData cc_;
  std::vector<Mat> beta_n_, beta_inv_n_, gamma_n_;
  std::vector<std::pair<Mat, Mat>> bmw_pairs_;
  UqAction uq_;
};

/// Evaluate a diagram expression to the matrix of the induced operator from
/// the src-fold to the dst-fold tensor power. Identity strands become
/// identity matrices, crossings the crossing operator, cup and cap their
/// vectors; composition multiplies in application order, tensoring takes
/// Kronecker products, sums and scalar multiples are linear.
Mat rt_eval(const RepContext& ctx, const TanglePtr& d);

enum class ShiftDir {
  TargetToSource, // cap the last t target strands around: V^n -> V^(s+t) becomes V^(n+t) -> V^s
  SourceToTarget, // the inverse bending by cups
};

/// Strand bending between operator spaces: move t tensor factors across the
/// arrow with a cap or cup chain. The two directions are mutually inverse.
Mat hom_shift(const RepContext& ctx, const Mat& M, ShiftDir dir, long t);

} // namespace tanglerep
