#include "tanglerep/schur_weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "tanglerep/errors.hpp"

namespace tanglerep {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw usage_error("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw usage_error("partition parts must be weakly decreasing");
  }
}

long Partition::size() const {
  long s = 0;
  for (long p : parts_) s += p;
  return s;
}

long Partition::part(long i) const {
  return (i >= 0 && i < length()) ? parts_[i] : 0;
}

Partition Partition::conjugate() const {
  std::vector<long> out;
  for (long c = 1; c <= part(0); ++c) {
    long cnt = 0;
    for (long p : parts_)
      if (p >= c) ++cnt;
    out.push_back(cnt);
  }
  return Partition(out);
}

std::vector<long> Partition::padded(long m) const {
  if (length() > m)
    throw usage_error("partition has more rows than the rank allows");
  std::vector<long> w(m, 0);
  std::copy(parts_.begin(), parts_.end(), w.begin());
  return w;
}

std::string Partition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

namespace {

void partitions_rec(long k, long max_part, long rows_left, std::vector<long>& cur,
                    std::vector<Partition>& out) {
  if (k == 0) {
    out.push_back(Partition(cur));
    return;
  }
  if (rows_left == 0) return;
  for (long p = std::min(k, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(k - p, p, rows_left - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(long k, long max_rows) {
  std::vector<Partition> out;
  std::vector<long> cur;
  partitions_rec(k, k, max_rows, cur, out);
  return out;
}

} // namespace

std::vector<Partition> pi_f(long n, long f, long m) {
  if (n < 1 || m < 1)
    throw usage_error("pi_f needs a positive degree and rank");
  if (f < 0 || f > n / 2)
    throw usage_error("contraction level out of range: need 0 <= f <= floor(n/2)");
  std::vector<Partition> out;
  for (long k = n - 2 * f; k >= 0; k -= 2) {
    auto ps = partitions_of(k, m);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

bool dominance_leq(const std::vector<long>& a, const std::vector<long>& b) {
  if (a.size() != b.size())
    throw usage_error("dominance compares weights of equal length");
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += b[i] - a[i];
    if (s < 0) return false;
  }
  return s % 2 == 0;
}

AlgebraSpan bmw_algebra(const RepContext& ctx) {
  if (ctx.n() == 1) {
    // No crossings on a single strand: the image is spanned by the identity.
    Mat id = Mat::identity(ctx.dim_tensor(), ctx.field());
    AlgebraSpan out;
    out.d = ctx.dim_tensor();
    out.span = Subspace(out.d * out.d, ctx.field());
    out.span.insert(id.flatten());
    out.basis = {id};
    return out;
  }
  std::vector<Mat> gens;
  for (const auto& [crossing, contraction] : ctx.bmw_generators()) {
    gens.push_back(crossing);
    gens.push_back(contraction);
  }
  return algebra_closure(gens, true);
}

AlgebraSpan bmw_ideal(const RepContext& ctx, const AlgebraSpan& algebra, long f) {
  if (algebra.d != ctx.dim_tensor())
    throw usage_error("algebra does not act on this context's tensor space");
  long top = ctx.n() / 2 + 1;
  if (f < 0 || f > top)
    throw usage_error("ideal level out of range: need 0 <= f <= floor(n/2)+1");
  if (f == 0) return algebra;
  if (f == top)
    return AlgebraSpan{algebra.d, Subspace(algebra.d * algebra.d, ctx.field()), {}};
  Mat g = ctx.gamma_at(1);
  for (long i = 2; i <= f; ++i) g = g * ctx.gamma_at(2 * i - 1);
  return two_sided_ideal(algebra, g);
}

Subspace full_tensor_space(const RepContext& ctx) {
  Subspace s(ctx.dim_tensor(), ctx.field());
  s.insert_rows(Mat::identity(ctx.dim_tensor(), ctx.field()));
  return s;
}

Subspace ideal_image(const RepContext& ctx, const AlgebraSpan& ideal) {
  if (ideal.d != ctx.dim_tensor())
    throw usage_error("ideal does not act on this context's tensor space");
  // Images of the basis vectors under M are the rows of M.
  Subspace out(ctx.dim_tensor(), ctx.field());
  for (const Mat& M : ideal.basis) out.insert_rows(M);
  return out;
}

bool image_sum_check(const RepContext& ctx, const AlgebraSpan& algebra, long f) {
  if (f < 0 || 2 * f > ctx.n())
    throw usage_error("cup level out of range: need 0 <= 2f <= n");
  Subspace w = ideal_image(ctx, bmw_ideal(ctx, algebra, f));

  const Field& fld = ctx.field();
  SVec cupf{{0, sc_one(fld)}};
  const SVec& cup_row = ctx.cup_cap().cup.row(0);
  long d2 = ctx.dim_v() * ctx.dim_v();
  long width = 1;
  for (long i = 0; i < f; ++i) {
    cupf = sv_kron(cupf, cup_row, d2);
    width *= d2;
  }
  long rest = ctx.dim_tensor() / width;

  Subspace swept(ctx.dim_tensor(), fld);
  for (long v = 0; v < rest; ++v) {
    SVec base = sv_kron(cupf, SVec{{v, sc_one(fld)}}, rest);
    for (const Mat& M : algebra.basis) swept.insert(apply_row(base, M));
  }
  return swept == w;
}

Subspace maximal_vectors(const RepContext& ctx, const std::vector<long>& lambda) {
  Subspace ws = ctx.weight_space(lambda);
  if (ws.dim() == 0) return ws;
  // Solve c * (B * e_i) = 0 within the weight space's coordinates, then map
  // the solutions back through the basis.
  Mat B = ws.basis_mat();
  std::vector<Mat> blocks;
  for (const Mat& e : ctx.uq_generators().e)
    blocks.push_back((B * e).transpose());
  Subspace coeffs = kernel(vstack(blocks));
  Subspace out(ctx.dim_tensor(), ctx.field());
  for (const SVec& c : coeffs.rows()) out.insert(apply_row(c, B));
  return out;
}

namespace {

std::vector<Mat> uq_all(const RepContext& ctx) {
  const UqAction& uq = ctx.uq_generators();
  std::vector<Mat> gens;
  for (const Mat& g : uq.k) gens.push_back(g);
  for (const Mat& g : uq.k_inv) gens.push_back(g);
  for (const Mat& g : uq.e) gens.push_back(g);
  for (const Mat& g : uq.f) gens.push_back(g);
  return gens;
}

/// Grow a seed to the smallest subspace containing it that is stable under
/// every operator.
Subspace orbit_closure(const Subspace& seed, const std::vector<Mat>& ops) {
  Subspace out = seed;
  std::vector<SVec> work(seed.rows().begin(), seed.rows().end());
  while (!work.empty()) {
    SVec v = std::move(work.back());
    work.pop_back();
    for (const Mat& G : ops) {
      SVec w = apply_row(v, G);
      if (out.insert(w)) work.push_back(std::move(w));
    }
  }
  return out;
}

} // namespace

Subspace truncation(const RepContext& ctx, long f, const Subspace& space) {
  if (f < 0 || f > ctx.n() / 2)
    throw usage_error("truncation level out of range: need 0 <= f <= floor(n/2)");
  if (space.ambient() != ctx.dim_tensor())
    throw usage_error("truncation expects a subspace of the tensor space");
  std::vector<Mat> gens = uq_all(ctx);
  for (const SVec& v : space.rows())
    for (const Mat& G : gens)
      if (!space.contains(apply_row(v, G)))
        throw usage_error(
            "truncation expects a subspace stable under the quantum-group action");

  Subspace out(ctx.dim_tensor(), ctx.field());
  for (const Partition& lam : pi_f(ctx.n(), f, ctx.m())) {
    Subspace seed = span_intersect(maximal_vectors(ctx, lam.padded(ctx.m())), space);
    if (seed.dim() == 0) continue;
    Subspace orbit = orbit_closure(seed, gens);
    for (const SVec& r : orbit.rows()) out.insert(r);
  }
  return out;
}

namespace {

/// Sum over the permutations of b consecutive strands starting at 0-based
/// offset off of (-q)^(-length) times the braid word of the permutation.
/// Built breadth-first by word length, extending with one crossing per
/// ascent, so every group element is produced exactly once.
Mat block_sum(const RepContext& sub, long off, long b) {
  const Field& fld = sub.field();
  long d = sub.dim_tensor();
  Scalar step = -sc_q(fld, -1);
  std::vector<long> id(b);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<long>, Mat> level{{id, Mat::identity(d, fld)}};
  Mat total(d, d, fld);
  Scalar coeff = sc_one(fld);
  while (!level.empty()) {
    std::map<std::vector<long>, Mat> next;
    for (const auto& [w, mat] : level) {
      total = total + mat.scaled(coeff);
      for (long i = 1; i < b; ++i) {
        if (w[i - 1] >= w[i]) continue;
        std::vector<long> w2 = w;
        std::swap(w2[i - 1], w2[i]);
        if (!next.count(w2)) next.emplace(std::move(w2), mat * sub.beta_at(off + i));
      }
    }
    level = std::move(next);
    coeff = coeff * step;
  }
  return total;
}

} // namespace

std::optional<SVec> z_vector(const RepContext& ctx, long f, const Partition& lambda) {
  long n = ctx.n(), m = ctx.m();
  if (f < 0 || 2 * f > n)
    throw usage_error("cup level out of range: need 0 <= 2f <= n");
  if (lambda.size() != n - 2 * f)
    throw usage_error("shape must have n - 2f boxes");
  if (lambda.length() > m)
    throw usage_error("shape has more rows than the rank allows");

  const Field& fld = ctx.field();
  long np = n - 2 * f;

  SVec cupf{{0, sc_one(fld)}};
  const SVec& cup_row = ctx.cup_cap().cup.row(0);
  long d2 = ctx.dim_v() * ctx.dim_v();
  for (long i = 0; i < f; ++i) cupf = sv_kron(cupf, cup_row, d2);

  Subspace mv = maximal_vectors(ctx, lambda.padded(m));

  if (np == 0) {
    if (!cupf.empty() && mv.contains(cupf)) return cupf;
    return std::nullopt;
  }

  RepContext sub(m, np, fld);

  // Leading weight word: lambda_1 copies of letter 0, lambda_2 of letter 1...
  std::vector<long> word;
  for (long r = 0; r < lambda.length(); ++r)
    word.insert(word.end(), lambda.part(r), r);
  long v0 = sub.pack(word);

  // Column reading word of the shape (rows listed down each column in turn).
  std::vector<long> colw;
  for (long c = 1; c <= lambda.part(0); ++c)
    for (long r = 0; r < lambda.length(); ++r)
      if (lambda.part(r) >= c) colw.push_back(r);

  // Adjacent swaps rearranging the leading word into the column word,
  // recorded as 1-based crossing positions.
  std::vector<long> swaps;
  {
    std::vector<long> cur = word;
    for (long p = 0; p < np; ++p) {
      if (cur[p] == colw[p]) continue;
      long j = p + 1;
      while (j < np && cur[j] != colw[p]) ++j;
      for (long k = j; k > p; --k) {
        std::swap(cur[k - 1], cur[k]);
        swaps.push_back(k);
      }
    }
  }

  // Signed symmetrizer over the consecutive column blocks.
  Mat Y = Mat::identity(sub.dim_tensor(), fld);
  Partition conj = lambda.conjugate();
  long off = 0;
  for (long j = 0; j < conj.length(); ++j) {
    long b = conj.part(j);
    if (b >= 2) Y = Y * block_sum(sub, off, b);
    off += b;
  }

  std::vector<std::vector<long>> candidates;
  candidates.push_back({});
  if (!swaps.empty()) candidates.push_back(swaps);

  for (const auto& braid : candidates) {
    SVec u{{v0, sc_one(fld)}};
    for (long i : braid) u = apply_row(u, sub.beta_at(i));
    u = apply_row(u, Y);
    if (u.empty()) continue;
    SVec z = sv_kron(cupf, u, sub.dim_tensor());
    if (mv.contains(z)) return z;
  }
  return std::nullopt;
}

Subspace cyclic_bmw_span(const RepContext& ctx, const AlgebraSpan& algebra,
                         const SVec& z) {
  if (algebra.d != ctx.dim_tensor())
    throw usage_error("algebra does not act on this context's tensor space");
  Subspace out(ctx.dim_tensor(), ctx.field());
  for (const Mat& M : algebra.basis) out.insert(apply_row(z, M));
  return out;
}

namespace {

/// Vectors of w killed by every operator: solve c * (B * M) = 0 in the
/// coordinates of w's basis B and map the solutions back.
Subspace killed_by(const Subspace& w, const std::vector<Mat>& ops) {
  if (ops.empty() || w.dim() == 0) return w;
  Mat B = w.basis_mat();
  std::vector<Mat> blocks;
  for (const Mat& M : ops) blocks.push_back((B * M).transpose());
  Subspace coeffs = kernel(vstack(blocks));
  Subspace out(w.ambient(), w.field());
  for (const SVec& c : coeffs.rows()) out.insert(apply_row(c, B));
  return out;
}

} // namespace

Subspace harmonic_tensors(const RepContext& ctx, const AlgebraSpan& algebra,
                          long f) {
  if (f < 0 || f > ctx.n() / 2)
    throw usage_error("harmonic level out of range: need 0 <= f <= floor(n/2)");
  Subspace w = ideal_image(ctx, bmw_ideal(ctx, algebra, f));
  return killed_by(w, bmw_ideal(ctx, algebra, f + 1).basis);
}

long weyl_dim(const Partition& lambda, long m) {
  if (m < 1) throw usage_error("weyl_dim needs a positive rank");
  if (lambda.length() > m)
    throw usage_error("shape has more rows than the rank allows");
  std::vector<long> l(m), r(m);
  for (long i = 0; i < m; ++i) {
    l[i] = lambda.part(i) + m - i;
    r[i] = m - i;
  }
  mpq_class acc = 1;
  for (long i = 0; i < m; ++i) {
    acc *= mpq_class(l[i], r[i]);
    for (long j = i + 1; j < m; ++j)
      acc *= mpq_class(l[i] * l[i] - l[j] * l[j], r[i] * r[i] - r[j] * r[j]);
  }
  acc.canonicalize();
  if (acc.get_den() != 1 || !acc.get_num().fits_slong_p())
    throw construction_error("weyl_dim did not produce a machine integer");
  return acc.get_num().get_si();
}

long osc_mult(const Partition& lambda, long n, long m) {
  if (n < 0 || m < 1)
    throw usage_error("osc_mult needs a nonnegative degree and positive rank");
  if (lambda.length() > m)
    throw usage_error("shape has more rows than the rank allows");
  std::map<std::vector<long>, long> cur{{{}, 1}};
  for (long step = 0; step < n; ++step) {
    std::map<std::vector<long>, long> next;
    for (const auto& [p, c] : cur) {
      long len = static_cast<long>(p.size());
      for (long r = 0; r <= len && r < m; ++r) {
        long val = r < len ? p[r] : 0;
        if (r > 0 && val + 1 > p[r - 1]) continue;
        std::vector<long> p2 = p;
        if (r < len) ++p2[r]; else p2.push_back(1);
        next[p2] += c;
      }
      for (long r = 0; r < len; ++r) {
        long below = r + 1 < len ? p[r + 1] : 0;
        if (p[r] - 1 < below) continue;
        std::vector<long> p2 = p;
        if (--p2[r] == 0) p2.pop_back();
        next[p2] += c;
      }
    }
    cur = std::move(next);
  }
  auto it = cur.find(lambda.parts());
  return it == cur.end() ? 0 : it->second;
}

namespace {

/// Matrix of g on the pivot-complement coordinates of the quotient by w:
/// reduce the image of each free basis vector and read off the free
/// coordinates of the residue.
Mat induced_on_quotient(const Subspace& w, const std::vector<long>& free_cols,
                        const Mat& g) {
  long dq = static_cast<long>(free_cols.size());
  std::vector<long> pos(w.ambient(), -1);
  for (long a = 0; a < dq; ++a) pos[free_cols[a]] = a;
  Mat out(dq, dq, g.field());
  for (long a = 0; a < dq; ++a) {
    SVec res = w.reduce(g.row(free_cols[a]));
    for (const auto& [col, val] : res) {
      if (pos[col] < 0)
        throw construction_error("quotient residue touched a pivot column");
      out.set(a, pos[col], val);
    }
  }
  return out;
}

/// Matrix of g on w's basis coordinates; w must be stable under g.
Mat restricted_to(const Subspace& w, const Mat& g) {
  Mat out(w.dim(), w.dim(), g.field());
  for (long i = 0; i < w.dim(); ++i) {
    std::vector<Scalar> coords = w.coordinates(apply_row(w.rows()[i], g));
    for (long j = 0; j < w.dim(); ++j)
      if (!coords[j].is_zero()) out.set(i, j, coords[j]);
  }
  return out;
}

} // namespace

DualityReport duality_report(const RepContext& ctx, long f) {
  return duality_report(ctx, f, bmw_algebra(ctx));
}

DualityReport duality_report(const RepContext& ctx, long f,
                             const AlgebraSpan& alg) {
  if (f < 1 || f > ctx.n() / 2)
    throw usage_error("duality level out of range: need 1 <= f <= floor(n/2)");
  if (alg.d != ctx.dim_tensor())
    throw usage_error("algebra does not act on this context's tensor space");

  DualityReport rep;
  rep.m = ctx.m();
  rep.n = ctx.n();
  rep.f = f;
  rep.field_label = ctx.field()->label();
  rep.dim_total = ctx.dim_tensor();
  rep.dim_algebra = alg.span.dim();

  AlgebraSpan ideal = bmw_ideal(ctx, alg, f);
  rep.dim_ideal = ideal.span.dim();

  Subspace w = ideal_image(ctx, ideal);
  rep.dim_w = w.dim();
  rep.dim_quotient = rep.dim_total - rep.dim_w;
  rep.dim_ht = killed_by(w, bmw_ideal(ctx, alg, f + 1).basis).dim();

  std::vector<long> free_cols;
  {
    const std::vector<long>& piv = w.pivots();
    std::size_t at = 0;
    for (long j = 0; j < ctx.dim_tensor(); ++j) {
      if (at < piv.size() && piv[at] == j) { ++at; continue; }
      free_cols.push_back(j);
    }
  }

  std::vector<Mat> gens = uq_all(ctx);
  if (rep.dim_quotient == 0) {
    rep.dim_image = 0;
    rep.dim_commutant = 0;
    rep.surjective = true;
    rep.hom_vanishing = true;
  } else {
    Subspace image(rep.dim_quotient * rep.dim_quotient, ctx.field());
    for (const Mat& M : alg.basis)
      image.insert(induced_on_quotient(w, free_cols, M).flatten());
    rep.dim_image = image.dim();

    std::vector<Mat> quotient_gens;
    for (const Mat& G : gens)
      quotient_gens.push_back(induced_on_quotient(w, free_cols, G));
    rep.dim_commutant = commutant(quotient_gens).dim();
    rep.surjective = rep.dim_image == rep.dim_commutant;

    if (rep.dim_w == 0) {
      rep.hom_vanishing = true;
    } else {
      std::vector<Mat> sweep_gens;
      for (const Mat& G : gens) sweep_gens.push_back(restricted_to(w, G));
      rep.hom_vanishing = intertwiner_space(sweep_gens, quotient_gens).dim() == 0;
    }
  }

  rep.truncation_match = truncation(ctx, f, full_tensor_space(ctx)) == w;
  return rep;
}

std::vector<LevelDims> level_dims(const RepContext& ctx,
                                  const AlgebraSpan& algebra) {
  long top = ctx.n() / 2 + 1;
  std::vector<AlgebraSpan> ideals;
  std::vector<Subspace> sweeps;
  for (long f = 0; f <= top; ++f) {
    ideals.push_back(bmw_ideal(ctx, algebra, f));
    sweeps.push_back(ideal_image(ctx, ideals.back()));
  }
  std::vector<LevelDims> out;
  for (long f = 0; f <= top; ++f) {
    static const std::vector<Mat> kNone;
    const std::vector<Mat>& next = f + 1 <= top ? ideals[f + 1].basis : kNone;
    out.push_back({f, ideals[f].span.dim(), sweeps[f].dim(),
                   killed_by(sweeps[f], next).dim()});
  }
  return out;
}

} // namespace tanglerep
