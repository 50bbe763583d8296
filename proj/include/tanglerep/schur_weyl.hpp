#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tanglerep/rep.hpp"

namespace tanglerep {

/// Integer partition: strictly positive, weakly decreasing parts.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  /// Number of boxes.
  long size() const;
  long length() const { return static_cast<long>(parts_.size()); }
  /// Part at 0-based index, zero beyond the length.
  long part(long i) const;
  Partition conjugate() const;
  /// The partition as a length-m weight vector; the length must fit.
  std::vector<long> padded(long m) const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }
  std::string str() const;

private:
  std::vector<long> parts_;
};

/// Dominant weights that survive f strand contractions: partitions of
/// n-2f, n-2f-2, ..., down to 0 or 1, with at most m rows. Ordered by
/// descending size, then descending lexicographic order within a size.
std::vector<Partition> pi_f(long n, long f, long m);

/// a <= b in the dominance order on length-m weights: b - a must be a
/// nonnegative integer combination of the differences e_i - e_{i+1} and the
/// doubled last coordinate 2e_m, i.e. all partial sums of b - a are
/// nonnegative and the total is even.
bool dominance_leq(const std::vector<long>& a, const std::vector<long>& b);

/// Image of the diagram algebra on the n-fold tensor space: the closure of
/// the placed crossings and contractions together with the identity.
AlgebraSpan bmw_algebra(const RepContext& ctx);

/// Two-sided ideal of the image algebra generated by the product of
/// contractions on strand pairs (1,2), (3,4), ..., (2f-1, 2f). By
/// convention f = 0 gives the whole algebra and f = floor(n/2) + 1 the zero
/// ideal.
AlgebraSpan bmw_ideal(const RepContext& ctx, const AlgebraSpan& algebra, long f);

/// The span of all tensor basis vectors.
Subspace full_tensor_space(const RepContext& ctx);

/// Subspace swept out of the tensor space by an ideal: the span of v*M over
/// basis vectors v and ideal basis elements M.
Subspace ideal_image(const RepContext& ctx, const AlgebraSpan& ideal);

/// Whether the cup-padded images exhaust the ideal image: the span of
/// (cup^f tensor v)*b over tensor words v of length n-2f and algebra basis
/// elements b must equal the image of the level-f ideal.
bool image_sum_check(const RepContext& ctx, const AlgebraSpan& algebra, long f);

/// Vectors of the given weight killed by every raising generator.
Subspace maximal_vectors(const RepContext& ctx, const std::vector<long>& lambda);

/// Largest submodule of the given quantum-group stable subspace whose
/// simple constituents have highest weights in pi_f: the sum of generator
/// orbits of the maximal vectors with those weights. The coefficient fields
/// this library admits keep the tensor space semisimple, which this
/// computation relies on. usage_error when the subspace is not stable.
Subspace truncation(const RepContext& ctx, long f, const Subspace& space);

/// The distinguished cyclic vector of level f and shape lambda (a partition
/// of n-2f): the f-fold cup row tensored with the image of the leading
/// weight word under a sorting braid word and the signed column
/// symmetrizer. Candidate braid words are tried in a fixed order; the first
/// candidate giving a nonzero maximal vector of weight lambda is returned,
/// and nullopt when none does.
std::optional<SVec> z_vector(const RepContext& ctx, long f, const Partition& lambda);

/// Span of z*M over the algebra basis.
Subspace cyclic_bmw_span(const RepContext& ctx, const AlgebraSpan& algebra,
                         const SVec& z);

/// Vectors in the level-f ideal image killed by the level-(f+1) ideal.
Subspace harmonic_tensors(const RepContext& ctx, const AlgebraSpan& algebra,
                          long f);

/// Dimension of the irreducible symplectic module with the given highest
/// weight, by the product formula over positive roots.
long weyl_dim(const Partition& lambda, long m);

/// Number of n-step walks on partitions with at most m rows from the empty
/// shape to lambda, adding or removing one box per step. An independent
/// combinatorial oracle for tensor multiplicities.
long osc_mult(const Partition& lambda, long n, long m);

/// Everything the level-f duality verdict rests on, over one field.
struct DualityReport {
  long m = 0, n = 0, f = 0;
  std::string field_label;
  long dim_total = 0;      // tensor space
  long dim_algebra = 0;    // image of the diagram algebra
  long dim_ideal = 0;      // level-f ideal inside it
  long dim_w = 0;          // its sweep of the tensor space
  long dim_quotient = 0;   // tensor space modulo the sweep
  long dim_ht = 0;         // harmonic layer at level f
  long dim_image = 0;      // induced algebra image on the quotient
  long dim_commutant = 0;  // commutant of the quantum group on the quotient
  bool surjective = false;       // dim_image == dim_commutant
  bool truncation_match = false; // truncation of the full space equals the sweep
  bool hom_vanishing = false;    // no intertwiners from the sweep to the quotient
};

/// Run the full level-f analysis: ideal image and quotient, induced algebra
/// image, quotient commutant, harmonic layer, truncation comparison and
/// intertwiner vanishing. Requires 1 <= f <= floor(n/2). The second form
/// reuses an already computed closure.
DualityReport duality_report(const RepContext& ctx, long f);
DualityReport duality_report(const RepContext& ctx, long f,
                             const AlgebraSpan& algebra);

/// Dimension ladder of one contraction level.
struct LevelDims {
  long f = 0;
  long dim_ideal = 0;
  long dim_w = 0;
  long dim_ht = 0;
};

/// Ideal, sweep and harmonic dimensions for every level f = 0 ..
/// floor(n/2)+1, computing each ideal once.
std::vector<LevelDims> level_dims(const RepContext& ctx,
                                  const AlgebraSpan& algebra);

} // namespace tanglerep
