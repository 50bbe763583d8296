#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "tanglerep/checks.hpp"
#include "tanglerep/rep.hpp"

using namespace tanglerep;

namespace {

void check_all(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    CAPTURE(r.name);
    CHECK(r.pass);
  }
}

Mat random_mat(std::mt19937& rng, const Field& f, long rows, long cols) {
  std::uniform_int_distribution<int> val(-2, 2);
  std::uniform_int_distribution<int> expo(-1, 1);
  Mat m(rows, cols, f);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) {
      int v = val(rng);
      if (v != 0) m.set(i, j, sc_int(f, v) * sc_q(f, expo(rng)));
    }
  return m;
}

} // namespace

TEST_CASE("cup cap and crossing match hand values at rank one") {
  Field f = make_generic_field();
  RepContext ctx(1, 2, f);

  // Basis of the tensor square: 0 = (0,0), 1 = (0,1), 2 = (1,0), 3 = (1,1).
  const CupCapData& cc = ctx.cup_cap();
  CHECK(cc.cup.at(0, 1) == parse_scalar(f, "q^-1"));
  CHECK(cc.cup.at(0, 2) == parse_scalar(f, "-q"));
  CHECK(cc.cup.at(0, 0).is_zero());
  CHECK(cc.cup.at(0, 3).is_zero());
  CHECK(cc.cap.at(1, 0) == parse_scalar(f, "-q^-1"));
  CHECK(cc.cap.at(2, 0) == parse_scalar(f, "q"));

  // Crossing rows, derived from the displayed four-term formula by hand.
  CHECK(cc.beta.at(0, 0) == sc_q(f));
  CHECK(cc.beta.at(3, 3) == sc_q(f));
  CHECK(cc.beta.at(1, 1) == parse_scalar(f, "(q - q^-1) * (1 + q^-2)"));
  CHECK(cc.beta.at(1, 2) == sc_q(f, -1));
  CHECK(cc.beta.at(2, 1) == sc_q(f, -1));
  CHECK(cc.beta.at(2, 2).is_zero());

  // Contraction rows on the paired inputs.
  CHECK(cc.gamma.at(1, 1) == parse_scalar(f, "-q^-2"));
  CHECK(cc.gamma.at(1, 2) == sc_one(f));
  CHECK(cc.gamma.at(2, 1) == sc_one(f));
  CHECK(cc.gamma.at(2, 2) == parse_scalar(f, "-q^2"));
  CHECK(cc.gamma.at(0, 0).is_zero());

  CHECK(ctx.loop() == parse_scalar(f, "-q^2 - q^-2"));
  CHECK(ctx.twist() == parse_scalar(f, "-q^3"));
}

TEST_CASE("contraction is the rank-one cap cup composite") {
  for (long m = 1; m <= 3; ++m) {
    Field f = make_generic_field();
    RepContext ctx(m, 2, f);
    const CupCapData& cc = ctx.cup_cap();
    CAPTURE(m);
    CHECK(cc.gamma == cc.cap * cc.cup);
    CHECK(rref(cc.gamma).dim() == 1);
    // Closing the loop evaluates to the loop scalar.
    Mat closed = cc.cup * cc.cap;
    CHECK(closed.at(0, 0) == ctx.loop());
    // The inverse crossing is a genuine inverse.
    long d = ctx.dim_v() * ctx.dim_v();
    CHECK(cc.beta * cc.beta_inv == Mat::identity(d, f));
  }
}

TEST_CASE("bmw relation suite passes on a small grid") {
  const std::pair<long, long> grid[] = {{1, 2}, {1, 4}, {2, 2}, {2, 3}, {3, 2}};
  for (auto [m, n] : grid) {
    CAPTURE(m);
    CAPTURE(n);
    RepContext ctx(m, n, make_generic_field());
    check_all(check_bmw_relations(ctx));
  }
  // The same identities over specialized coefficients.
  RepContext zeta(2, 3, parse_field("zeta:2"));
  check_all(check_bmw_relations(zeta));
  RepContext modp(2, 3, parse_field("modp:7"));
  check_all(check_bmw_relations(modp));
}

TEST_CASE("tangle relations hold under evaluation") {
  for (long m = 1; m <= 3; ++m) {
    CAPTURE(m);
    RepContext ctx(m, 2, make_generic_field());
    check_all(check_tangle_relations(ctx));
  }
  RepContext zeta(1, 2, parse_field("zeta:5/3"));
  check_all(check_tangle_relations(zeta));
}

TEST_CASE("evaluation respects composition and tensoring") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<long> arity(0, 2);
  std::uniform_int_distribution<int> dep(0, 2);
  for (long m : {1L, 2L}) {
    Field f = make_generic_field();
    RepContext ctx(m, 2, f);
    int done = 0;
    while (done < 25) {
      long s = arity(rng), k = arity(rng), t = arity(rng);
      if ((s + k) % 2 != 0 || (k + t) % 2 != 0) continue;
      ++done;
      TanglePtr a = random_tangle(rng, f, s, k, dep(rng));
      TanglePtr b = random_tangle(rng, f, k, t, dep(rng));
      CHECK(rt_eval(ctx, t_compose(a, b)) == rt_eval(ctx, a) * rt_eval(ctx, b));
      CHECK(rt_eval(ctx, t_tensor(a, b)) ==
            kron(rt_eval(ctx, a), rt_eval(ctx, b)));
      Scalar c = sc_int(f, 3) * sc_q(f, -1);
      CHECK(rt_eval(ctx, t_scale(c, a)) == rt_eval(ctx, a).scaled(c));
      CHECK(rt_eval(ctx, t_sum({a, a})) == rt_eval(ctx, a).scaled(sc_int(f, 2)));
    }
  }
  // The empty diagram evaluates to the 1x1 identity.
  RepContext ctx(1, 2, make_generic_field());
  CHECK(rt_eval(ctx, t_id0()) == Mat::identity(1, ctx.field()));
}

TEST_CASE("double dual evaluates to the original operator") {
  std::mt19937 rng(600613);
  Field f = make_generic_field();
  RepContext ctx(1, 2, f);
  std::uniform_int_distribution<long> arity(0, 3);
  std::uniform_int_distribution<int> dep(0, 2);
  int done = 0;
  while (done < 20) {
    long s = arity(rng), t = arity(rng);
    if ((s + t) % 2 != 0 || s + t > 4) continue;
    ++done;
    TanglePtr d = random_tangle(rng, f, s, t, dep(rng));
    TanglePtr dd = dual(dual(d));
    CAPTURE(print_tangle(d));
    CHECK(rt_eval(ctx, dd) == rt_eval(ctx, d));
  }
}

TEST_CASE("quantum group action is calibrated") {
  for (long m = 1; m <= 3; ++m) {
    CAPTURE(m);
    Field f = make_generic_field();
    RepContext ctx(m, 2, f);
    const UqAction& uq = ctx.uq_generators();
    REQUIRE(static_cast<long>(uq.e.size()) == m);

    long d = ctx.dim_tensor();
    for (long i = 0; i < m; ++i) {
      // Torus generators are diagonal and mutually inverse.
      for (long a = 0; a < d; ++a)
        for (const auto& [col, v] : uq.k[i].row(a)) CHECK(col == a);
      CHECK(uq.k[i] * uq.k_inv[i] == Mat::identity(d, f));
    }
    check_all(check_uq_commutation(ctx));
  }
}

TEST_CASE("single factor action satisfies the torus bracket") {
  // On one tensor factor the commutator of raising and lowering generators
  // is diagonal: [e_i, f_j] = delta_ij (k_i - k_i^-1)/(q_i - q_i^-1) with
  // q_i = q for the short nodes and q^2 for the long one. Stored matrices
  // are transposed left operators, so the bracket order flips.
  for (long m = 1; m <= 3; ++m) {
    CAPTURE(m);
    Field f = make_generic_field();
    RepContext ctx(m, 1, f);
    const UqAction& uq = ctx.uq_generators();
    for (long i = 0; i < m; ++i)
      for (long j = 0; j < m; ++j) {
        Mat lhs = uq.f[j] * uq.e[i] - uq.e[i] * uq.f[j];
        if (i != j) {
          CHECK(lhs.is_zero());
          continue;
        }
        long di = (i == m - 1) ? 2 : 1;
        Scalar denom = sc_q(f, di) - sc_q(f, -di);
        CHECK(lhs == (uq.k[i] - uq.k_inv[i]).scaled(denom.inv()));
      }
  }
}

TEST_CASE("weight spaces partition the tensor basis") {
  for (auto [m, n] : {std::pair<long, long>{1, 2}, {2, 2}, {2, 3}}) {
    CAPTURE(m);
    CAPTURE(n);
    RepContext ctx(m, n, make_generic_field());

    std::vector<long> top(m, 0);
    top[0] = n;
    CHECK(ctx.weight_space(top).dim() == 1);

    std::map<std::vector<long>, long> counts;
    for (long idx = 0; idx < ctx.dim_tensor(); ++idx)
      counts[ctx.weight_of(idx)] += 1;
    long total = 0;
    for (const auto& [wt, cnt] : counts) {
      CHECK(ctx.weight_space(wt).dim() == cnt);
      total += cnt;
    }
    CHECK(total == ctx.dim_tensor());
  }
  RepContext ctx(1, 2, make_generic_field());
  CHECK(ctx.weight_space({0}).dim() == 2);
  CHECK_THROWS_AS(ctx.weight_space({0, 0}), usage_error);
}

TEST_CASE("strand bending is invertible") {
  std::mt19937 rng(77);
  for (long m : {1L, 2L}) {
    Field f = make_generic_field();
    RepContext ctx(m, 2, f);
    long D = ctx.dim_v();
    // Operators V -> V^3 and back with one strand moved.
    for (int trial = 0; trial < 5; ++trial) {
      Mat M = random_mat(rng, f, D, D * D * D);
      Mat shifted = hom_shift(ctx, M, ShiftDir::TargetToSource, 1);
      CHECK(shifted.rows() == D * D);
      CHECK(shifted.cols() == D * D);
      CHECK(hom_shift(ctx, shifted, ShiftDir::SourceToTarget, 1) == M);
      Mat N = random_mat(rng, f, D * D, D);
      Mat back = hom_shift(ctx, N, ShiftDir::SourceToTarget, 1);
      CHECK(hom_shift(ctx, back, ShiftDir::TargetToSource, 1) == N);
    }
    // Two strands at once, through the nested chains.
    Mat M = random_mat(rng, f, 1, D * D);
    Mat shifted = hom_shift(ctx, M, ShiftDir::TargetToSource, 2);
    CHECK(shifted.rows() == D * D);
    CHECK(shifted.cols() == 1);
    CHECK(hom_shift(ctx, shifted, ShiftDir::SourceToTarget, 2) == M);
    // Moving zero strands changes nothing.
    CHECK(hom_shift(ctx, M, ShiftDir::TargetToSource, 0) == M);
  }
  RepContext ctx(1, 2, make_generic_field());
  Mat bad(3, 2, ctx.field());
  CHECK_THROWS_AS(hom_shift(ctx, bad, ShiftDir::TargetToSource, 1), usage_error);
  Mat M = random_mat(rng, ctx.field(), 2, 2);
  CHECK_THROWS_AS(hom_shift(ctx, M, ShiftDir::TargetToSource, 2), usage_error);
}

TEST_CASE("context guards reject bad parameters") {
  Field f = make_generic_field();
  CHECK_THROWS_AS(RepContext(0, 2, f), usage_error);
  CHECK_THROWS_AS(RepContext(1, 0, f), usage_error);
  RepContext ctx(1, 1, f);
  CHECK_THROWS_AS(ctx.bmw_generators(), usage_error);
  RepContext ctx3(1, 3, f);
  CHECK_THROWS_AS(ctx3.beta_at(0), usage_error);
  CHECK_THROWS_AS(ctx3.beta_at(3), usage_error);
  CHECK(ctx3.bmw_generators().size() == 2);
  CHECK_THROWS_AS(ctx.pack({0, 1}), usage_error);
  CHECK(ctx3.pack({0, 1, 1}) == 3);
  CHECK(ctx3.unpack(3) == std::vector<long>{0, 1, 1});
}
