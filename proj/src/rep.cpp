#include "tanglerep/rep.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace tanglerep {

namespace {

constexpr long kMaxTensorDim = 1L << 26;

long pow_checked(long base, long e) {
  long v = 1;
  for (long k = 0; k < e; ++k) {
    if (v > kMaxTensorDim / base)
      throw usage_error("tensor space dimension exceeds the supported size");
    v *= base;
  }
  return v;
}

Mat kron_pow(const Mat& g, long k, const Field& fld) {
  Mat acc = Mat::identity(1, fld);
  for (long j = 0; j < k; ++j) acc = kron(acc, g);
  return acc;
}

/// Sum over the n tensor positions of left^(pos-1) x g x right^(n-pos); the
/// coproduct extension of a one-factor generator.
Mat coproduct_sum(const Mat& g, const Mat& left, const Mat& right, long n,
                  const Field& fld) {
  long total = 1;
  for (long k = 0; k < n; ++k) total *= g.rows();
  Mat acc(total, total, fld);
  Mat lk = Mat::identity(1, fld);
  for (long pos = 1; pos <= n; ++pos) {
    acc = acc + kron(kron(lk, g), kron_pow(right, n - pos, fld));
    if (pos < n) lk = kron(lk, left);
  }
  return acc;
}

struct SingleAction {
  std::vector<Mat> e, f, k, kinv;
};

/// One-factor Chevalley action on the 2m-dimensional space. The raising
/// generator i < m sends basis position i to i-1 and position 2m-i to
/// 2m-i-1 with the given sign; generator m connects the two middle
/// positions. Lowering mirrors raising, and the torus generators are
/// diagonal with exponents read off the basis weights.
SingleAction single_action(long m, const Field& fld, int sign) {
  long D = 2 * m;
  Scalar one = sc_one(fld);
  Scalar sg = sign > 0 ? one : -one;
  auto wt_at = [m](long a, long p) -> long {
    if (a < m) return a == p ? 1 : 0;
    return (2 * m - 1 - a) == p ? -1 : 0;
  };
  SingleAction s;
  for (long i = 1; i <= m; ++i) {
    Mat e(D, D, fld), f(D, D, fld), k(D, D, fld), kinv(D, D, fld);
    if (i < m) {
      e.set(i, i - 1, one);
      e.set(2 * m - i, 2 * m - i - 1, sg);
      f.set(i - 1, i, one);
      f.set(2 * m - i - 1, 2 * m - i, sg);
    } else {
      e.set(m, m - 1, one);
      f.set(m - 1, m, one);
    }
    for (long a = 0; a < D; ++a) {
      long w = (i < m) ? wt_at(a, i - 1) - wt_at(a, i) : 2 * wt_at(a, m - 1);
      k.set(a, a, sc_q(fld, w));
      kinv.set(a, a, sc_q(fld, -w));
    }
    s.e.push_back(std::move(e));
    s.f.push_back(std::move(f));
    s.k.push_back(std::move(k));
    s.kinv.push_back(std::move(kinv));
  }
  return s;
}

/// Check one convention candidate on the two-fold tensor square. Returns an
/// empty string when every invariant holds, otherwise the name of the first
/// violated one.
std::string check_candidate(const SingleAction& s, bool raised_left,
                            const CupCapData& cc, long m, const Field& fld) {
  long D = 2 * m;
  Mat id1 = Mat::identity(D, fld);
  for (long i = 1; i <= m; ++i) {
    Mat e2 = raised_left
                 ? coproduct_sum(s.e[i - 1], s.k[i - 1], id1, 2, fld)
                 : coproduct_sum(s.e[i - 1], id1, s.kinv[i - 1], 2, fld);
    Mat f2 = raised_left
                 ? coproduct_sum(s.f[i - 1], id1, s.kinv[i - 1], 2, fld)
                 : coproduct_sum(s.f[i - 1], s.k[i - 1], id1, 2, fld);
    Mat k2 = kron(s.k[i - 1], s.k[i - 1]);
    const std::array<std::pair<const Mat*, const char*>, 3> gens = {
        {{&e2, "e"}, {&f2, "f"}, {&k2, "k"}}};
    std::string idx = "_" + std::to_string(i);
    for (const auto& [g, name] : gens) {
      if (*g * cc.beta != cc.beta * *g)
        return std::string(name) + idx + " does not commute with the crossing operator";
      if (*g * cc.gamma != cc.gamma * *g)
        return std::string(name) + idx + " does not commute with the contraction operator";
    }
    if (!(cc.cup * e2).is_zero())
      return "the cup row is not annihilated by e" + idx;
    if (!(cc.cup * f2).is_zero())
      return "the cup row is not annihilated by f" + idx;
    if (cc.cup * k2 != cc.cup)
      return "the cup row is not fixed by k" + idx;
  }
  return "";
}

} // namespace

RepContext::RepContext(long m, long n, Field field)
    : m_(m), n_(n), f_(std::move(field)) {
  if (m_ < 1) throw usage_error("rank must be >= 1");
  if (n_ < 1) throw usage_error("tensor degree must be >= 1");
  if (!f_) throw usage_error("field is required");
  long D = 2 * m_;
  dim_t_ = pow_checked(D, n_);

  // Cup row and cap column.
  Scalar one = sc_one(f_);
  cc_.cup = Mat(1, D * D, f_);
  cc_.cap = Mat(D * D, 1, f_);
  for (long a = 0; a < D; ++a) {
    Scalar w = sc_q(f_, -rho(a));
    if (eps(a) < 0) w = -w;
    cc_.cup.set(0, a * D + prime(a), w);
    // The cap pairs with the opposite sign on the second slot.
    cc_.cap.set(a * D + prime(a), 0, -w);
  }

  // Crossing operator, one displayed summand at a time. Input pairs (a, b)
  // index rows, output pairs index columns. Entries accumulate: the row of
  // an (a, a') input receives both the diagonal and the contraction terms.
  Scalar qs = sc_q(f_);
  Scalar qd = qs - sc_q(f_, -1);
  cc_.beta = Mat(D * D, D * D, f_);
  auto at = [D](long a, long b) { return a * D + b; };
  for (long a = 0; a < D; ++a) {
    cc_.beta.add_to(at(a, a), at(a, a), qs);
    cc_.beta.add_to(at(a, prime(a)), at(prime(a), a), sc_q(f_, -1));
    for (long b = 0; b < D; ++b)
      if (b != a && b != prime(a)) cc_.beta.add_to(at(a, b), at(b, a), one);
    for (long b = a + 1; b < D; ++b) {
      cc_.beta.add_to(at(a, b), at(a, b), qd);
      Scalar c = qd * sc_q(f_, rho(b) - rho(a));
      if (eps(a) * eps(b) > 0) c = -c;
      cc_.beta.add_to(at(a, prime(a)), at(prime(b), b), c);
    }
  }
  cc_.beta_inv = inverse(cc_.beta);

  // Contraction operator: rows with paired input, spread over paired
  // outputs with ladder weights. Equals cap * cup, which the tests check.
  cc_.gamma = Mat(D * D, D * D, f_);
  for (long a = 0; a < D; ++a)
    for (long b = 0; b < D; ++b) {
      Scalar c = sc_q(f_, rho(b) - rho(a));
      if (eps(a) * eps(b) < 0) c = -c;
      cc_.gamma.set(at(a, prime(a)), at(prime(b), b), c);
    }

  // Placed generators on the n-fold tensor space.
  auto place = [&](const Mat& g2, long i) {
    Mat out = kron(Mat::identity(pow_checked(D, i - 1), f_), g2);
    return kron(out, Mat::identity(pow_checked(D, n_ - i - 1), f_));
  };
  for (long i = 1; i <= n_ - 1; ++i) {
    beta_n_.push_back(place(cc_.beta, i));
    beta_inv_n_.push_back(place(cc_.beta_inv, i));
    gamma_n_.push_back(place(cc_.gamma, i));
    bmw_pairs_.emplace_back(beta_n_.back(), gamma_n_.back());
  }

  // Calibrate the quantum-group convention on the tensor square, then
  // extend the winner to degree n.
  struct Candidate {
    bool raised_left;
    int sign;
  };
  const std::array<Candidate, 4> candidates = {
      {{true, -1}, {true, +1}, {false, -1}, {false, +1}}};
  SingleAction chosen;
  bool raised_left = true;
  std::string last;
  bool found = false;
  for (const Candidate& cand : candidates) {
    SingleAction s = single_action(m_, f_, cand.sign);
    last = check_candidate(s, cand.raised_left, cc_, m_, f_);
    if (last.empty()) {
      chosen = std::move(s);
      raised_left = cand.raised_left;
      found = true;
      break;
    }
  }
  if (!found)
    throw construction_error(
        "no quantum-group convention passed calibration; last failure: " + last);
  Mat id1 = Mat::identity(D, f_);
  for (long i = 1; i <= m_; ++i) {
    const Mat& e1 = chosen.e[i - 1];
    const Mat& f1 = chosen.f[i - 1];
    const Mat& k1 = chosen.k[i - 1];
    const Mat& ki1 = chosen.kinv[i - 1];
    uq_.e.push_back(raised_left ? coproduct_sum(e1, k1, id1, n_, f_)
                                : coproduct_sum(e1, id1, ki1, n_, f_));
    uq_.f.push_back(raised_left ? coproduct_sum(f1, id1, ki1, n_, f_)
                                : coproduct_sum(f1, k1, id1, n_, f_));
    uq_.k.push_back(kron_pow(k1, n_, f_));
    uq_.k_inv.push_back(kron_pow(ki1, n_, f_));
  }
}

Scalar RepContext::loop() const { return loop_value(f_, m_); }

Scalar RepContext::twist() const { return -sc_q(f_, 2 * m_ + 1); }

static void check_strand_index(long i, long n) {
  if (n < 2) throw usage_error("tensor degree must be >= 2 for placed generators");
  if (i < 1 || i > n - 1)
    throw usage_error("strand index " + std::to_string(i) + " out of range on " +
                      std::to_string(n) + " strands");
}

const Mat& RepContext::beta_at(long i) const {
  check_strand_index(i, n_);
  return beta_n_[i - 1];
}

const Mat& RepContext::beta_inv_at(long i) const {
  check_strand_index(i, n_);
  return beta_inv_n_[i - 1];
}

const Mat& RepContext::gamma_at(long i) const {
  check_strand_index(i, n_);
  return gamma_n_[i - 1];
}

const std::vector<std::pair<Mat, Mat>>& RepContext::bmw_generators() const {
  if (n_ < 2) throw usage_error("tensor degree must be >= 2 for placed generators");
  return bmw_pairs_;
}

long RepContext::pack(const std::vector<long>& word) const {
  if (static_cast<long>(word.size()) != n_)
    throw usage_error("tensor word length must equal the degree");
  long idx = 0;
  for (long a : word) {
    if (a < 0 || a >= dim_v()) throw usage_error("tensor letter out of range");
    idx = idx * dim_v() + a;
  }
  return idx;
}

std::vector<long> RepContext::unpack(long index) const {
  if (index < 0 || index >= dim_t_) throw usage_error("tensor index out of range");
  std::vector<long> word(n_);
  for (long k = n_ - 1; k >= 0; --k) {
    word[k] = index % dim_v();
    index /= dim_v();
  }
  return word;
}

std::vector<long> RepContext::weight_of(long index) const {
  std::vector<long> wt(m_, 0);
  for (long a : unpack(index)) {
    if (a < m_) wt[a] += 1;
    else wt[prime(a)] -= 1;
  }
  return wt;
}

Subspace RepContext::weight_space(const std::vector<long>& lambda) const {
  if (static_cast<long>(lambda.size()) != m_)
    throw usage_error("weight must have one entry per rank");
  Subspace s(dim_t_, f_);
  for (long idx = 0; idx < dim_t_; ++idx)
    if (weight_of(idx) == lambda) s.insert({{idx, sc_one(f_)}});
  return s;
}

Mat rt_eval(const RepContext& ctx, const TanglePtr& d) {
  const Field& f = ctx.field();
  switch (d->kind) {
    case TangleKind::Gen:
      switch (d->gen) {
        case GenKind::Id: return Mat::identity(ctx.dim_v(), f);
        case GenKind::Id0: return Mat::identity(1, f);
        case GenKind::Cross: return ctx.cup_cap().beta;
        case GenKind::CrossInv: return ctx.cup_cap().beta_inv;
        case GenKind::Cup: return ctx.cup_cap().cup;
        case GenKind::Cap: return ctx.cup_cap().cap;
      }
      throw std::logic_error("unhandled generator kind");
    case TangleKind::Compose:
      return rt_eval(ctx, d->a) * rt_eval(ctx, d->b);
    case TangleKind::Tensor:
      return kron(rt_eval(ctx, d->a), rt_eval(ctx, d->b));
    case TangleKind::Scale:
      return rt_eval(ctx, d->sub).scaled(d->coeff);
    case TangleKind::Sum: {
      Mat acc = rt_eval(ctx, d->summands[0]);
      for (size_t k = 1; k < d->summands.size(); ++k)
        acc = acc + rt_eval(ctx, d->summands[k]);
      return acc;
    }
  }
  throw std::logic_error("unhandled expression kind");
}

namespace {

long tensor_log(long size, long base) {
  long k = 0, v = 1;
  while (v < size) {
    v *= base;
    ++k;
  }
  return v == size ? k : -1;
}

} // namespace

Mat hom_shift(const RepContext& ctx, const Mat& M, ShiftDir dir, long t) {
  if (t < 0) throw usage_error("shift count must be >= 0");
  if (t == 0) return M;
  long D = ctx.dim_v();
  const Field& f = ctx.field();
  long lr = tensor_log(M.rows(), D), lc = tensor_log(M.cols(), D);
  if (lr < 0 || lc < 0)
    throw usage_error("operator shape is not a power of the base dimension");
  long dt = pow_checked(D, t);
  if (dir == ShiftDir::TargetToSource) {
    if (lc < t)
      throw usage_error("cannot move " + std::to_string(t) +
                        " strands from a target of arity " + std::to_string(lc));
    long s = lc - t;
    Mat capchain = rt_eval(ctx, cap_cup_chain(t, ChainKind::CapChain));
    return kron(M, Mat::identity(dt, f)) *
           kron(Mat::identity(pow_checked(D, s), f), capchain);
  }
  if (lr < t)
    throw usage_error("cannot move " + std::to_string(t) +
                      " strands from a source of arity " + std::to_string(lr));
  long n = lr - t;
  Mat cupchain = rt_eval(ctx, cap_cup_chain(t, ChainKind::CupChain));
  return kron(Mat::identity(pow_checked(D, n), f), cupchain) *
         kron(M, Mat::identity(dt, f));
}

} // namespace tanglerep
