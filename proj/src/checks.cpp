#include "tanglerep/checks.hpp"

#include <optional>

namespace tanglerep {

namespace {

std::string tag(const char* base, long i) {
  return std::string(base) + "[" + std::to_string(i) + "]";
}

std::string tag2(const char* base, long i, long j) {
  return std::string(base) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

} // namespace

std::vector<CheckResult> check_bmw_relations(const RepContext& ctx) {
  std::vector<CheckResult> out;
  long n = ctx.n();
  const Field& f = ctx.field();
  Scalar qd = sc_q(f) - sc_q(f, -1);
  Scalar x = ctx.loop();
  Scalar r = ctx.twist(), rinv = r.inv();
  Mat id = Mat::identity(ctx.dim_tensor(), f);
  auto add = [&out](std::string name, bool ok) {
    out.push_back({std::move(name), ok});
  };

  for (long i = 1; i <= n - 1; ++i) {
    const Mat& b = ctx.beta_at(i);
    const Mat& bi = ctx.beta_inv_at(i);
    const Mat& g = ctx.gamma_at(i);
    add(tag("skein", i), b - bi == (id - g).scaled(qd));
    add(tag("contraction_square", i), g * g == g.scaled(x));
    add(tag("curl", i), g * b == g.scaled(rinv) && b * g == g.scaled(rinv));
  }
  for (long i = 1; i <= n - 2; ++i) {
    const Mat& b1 = ctx.beta_at(i);
    const Mat& b2 = ctx.beta_at(i + 1);
    const Mat& g1 = ctx.gamma_at(i);
    const Mat& g2 = ctx.gamma_at(i + 1);
    add(tag("braid", i), b1 * b2 * b1 == b2 * b1 * b2);
    add(tag("contraction_sandwich", i),
        g1 * g2 * g1 == g1 && g2 * g1 * g2 == g2);
    add(tag("crossing_pair", i),
        b1 * b2 * g1 == g2 * g1 && b2 * b1 * g2 == g1 * g2);
    add(tag("sandwich_curl", i),
        g1 * b2 * g1 == g1.scaled(r) && g2 * b1 * g2 == g2.scaled(r));
  }
  for (long i = 1; i <= n - 1; ++i)
    for (long j = i + 2; j <= n - 1; ++j) {
      add(tag2("distant_crossings", i, j),
          ctx.beta_at(i) * ctx.beta_at(j) == ctx.beta_at(j) * ctx.beta_at(i));
      add(tag2("distant_mixed", i, j),
          ctx.beta_at(i) * ctx.gamma_at(j) == ctx.gamma_at(j) * ctx.beta_at(i) &&
              ctx.gamma_at(i) * ctx.beta_at(j) == ctx.beta_at(j) * ctx.gamma_at(i));
      add(tag2("distant_contractions", i, j),
          ctx.gamma_at(i) * ctx.gamma_at(j) == ctx.gamma_at(j) * ctx.gamma_at(i));
    }
  return out;
}

std::vector<CheckResult> check_tangle_relations(const RepContext& ctx) {
  std::vector<CheckResult> out;
  const Field& f = ctx.field();
  long D = ctx.dim_v();
  auto ev = [&ctx, &f](const char* text) { return rt_eval(ctx, parse_tangle(f, text)); };
  auto add = [&out](std::string name, bool ok) {
    out.push_back({std::move(name), ok});
  };

  Mat loop_mat(1, 1, f);
  loop_mat.set(0, 0, ctx.loop());
  add("loop_value", ev("A ; U") == loop_mat);

  Mat id1 = Mat::identity(D, f);
  add("straighten", ev("I * A ; U * I") == id1 && ev("A * I ; I * U") == id1);

  Mat id2 = Mat::identity(D * D, f);
  add("second_move", ev("X ; Xi") == id2 && ev("Xi ; X") == id2);
  add("third_move",
      ev("X * I ; I * X ; X * I") == ev("I * X ; X * I ; I * X"));

  Scalar qd = sc_q(f) - sc_q(f, -1);
  add("skein_diagram", ev("X") - ev("Xi") == (id2 - ev("U ; A")).scaled(qd));

  Mat plus = ev("I * A ; X * I ; I * U");
  Mat minus = ev("I * A ; Xi * I ; I * U");
  Mat tw = id1.scaled(ctx.twist());
  Mat tw_inv = id1.scaled(ctx.twist().inv());
  add("curl_pair", (plus == tw && minus == tw_inv) ||
                       (plus == tw_inv && minus == tw));
  return out;
}

std::vector<CheckResult> check_uq_commutation(const RepContext& ctx) {
  std::vector<CheckResult> out;
  auto add = [&out](std::string name, bool ok) {
    out.push_back({std::move(name), ok});
  };
  const UqAction& uq = ctx.uq_generators();
  auto commutes = [](const Mat& a, const Mat& b) { return a * b == b * a; };

  if (ctx.n() >= 2) {
    for (long i = 1; i <= ctx.m(); ++i)
      for (long j = 1; j <= ctx.n() - 1; ++j) {
        const Mat& b = ctx.beta_at(j);
        const Mat& g = ctx.gamma_at(j);
        add(tag2("commute_e_crossing", i, j), commutes(uq.e[i - 1], b));
        add(tag2("commute_e_contraction", i, j), commutes(uq.e[i - 1], g));
        add(tag2("commute_f_crossing", i, j), commutes(uq.f[i - 1], b));
        add(tag2("commute_f_contraction", i, j), commutes(uq.f[i - 1], g));
        add(tag2("commute_k_crossing", i, j),
            commutes(uq.k[i - 1], b) && commutes(uq.k_inv[i - 1], b));
        add(tag2("commute_k_contraction", i, j),
            commutes(uq.k[i - 1], g) && commutes(uq.k_inv[i - 1], g));
      }
  }

  // The cup row lives in the tensor square; rebuild the degree-2 action
  // when the context has another degree.
  std::optional<RepContext> local;
  const RepContext* two = &ctx;
  if (ctx.n() != 2) {
    local.emplace(ctx.m(), 2, ctx.field());
    two = &*local;
  }
  const Mat& cup = two->cup_cap().cup;
  const UqAction& uq2 = two->uq_generators();
  for (long i = 1; i <= ctx.m(); ++i) {
    add(tag("cup_annihilated_by_e", i), (cup * uq2.e[i - 1]).is_zero());
    add(tag("cup_annihilated_by_f", i), (cup * uq2.f[i - 1]).is_zero());
    add(tag("cup_fixed_by_k", i), cup * uq2.k[i - 1] == cup &&
                                      cup * uq2.k_inv[i - 1] == cup);
  }
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

} // namespace tanglerep
