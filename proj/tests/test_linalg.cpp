#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tanglerep/linalg.hpp"

using namespace tanglerep;

namespace {

Mat random_mat(long rows, long cols, const Field& f, std::mt19937& rng,
               int fill_percent = 40) {
  std::uniform_int_distribution<int> pct(0, 99);
  std::uniform_int_distribution<int> val(-3, 3);
  std::uniform_int_distribution<int> expo(0, 2);
  Mat m(rows, cols, f);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j)
      if (pct(rng) < fill_percent) {
        Scalar s = sc_int(f, val(rng)) * sc_q(f, expo(rng));
        m.set(i, j, s);
      }
  return m;
}

SVec random_vec(long n, const Field& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> pct(0, 99);
  std::uniform_int_distribution<int> val(-4, 4);
  SVec v;
  for (long i = 0; i < n; ++i)
    if (pct(rng) < 50) {
      Scalar s = sc_int(f, val(rng));
      if (!s.is_zero()) v.emplace_back(i, s);
    }
  return v;
}

} // namespace

TEST_CASE("row space canonical form") {
  Field f = make_generic_field();
  CHECK(rref(Mat::identity(5, f)).dim() == 5);
  CHECK(rref(Mat(4, 4, f)).dim() == 0);

  Mat m(2, 2, f);
  m.set(0, 0, sc_one(f));
  m.set(0, 1, sc_q(f));
  m.set(1, 0, sc_q(f));
  m.set(1, 1, sc_q(f, 2));
  CHECK(rref(m).dim() == 1); // second row is q times the first

  // The canonical form does not depend on insertion order.
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Mat a = random_mat(6, 8, f, rng);
    Subspace fwd(8, f), bwd(8, f);
    for (long i = 0; i < 6; ++i) fwd.insert(a.row(i));
    for (long i = 5; i >= 0; --i) bwd.insert(a.row(i));
    CHECK(fwd == bwd);
  }
}

TEST_CASE("kernel dimensions and membership") {
  Field f = make_generic_field();
  CHECK(kernel(Mat::identity(4, f)).dim() == 0);
  CHECK(kernel(Mat(3, 3, f)).dim() == 3);

  std::mt19937 rng(32);
  for (int trial = 0; trial < 25; ++trial) {
    Mat m = random_mat(5, 7, f, rng);
    Subspace ker = kernel(m);
    CHECK(ker.dim() + rref(m).dim() == 7); // also asserted inside kernel()
    Mat mt = m.transpose();
    for (const SVec& x : ker.rows()) CHECK(apply_row(x, mt).empty());
  }
}

TEST_CASE("subspace lattice operations") {
  Field f = make_modp_field(7);
  std::mt19937 rng(33);
  for (int trial = 0; trial < 25; ++trial) {
    Subspace a(9, f), b(9, f), zero(9, f);
    for (int i = 0; i < 4; ++i) a.insert(random_vec(9, f, rng));
    for (int i = 0; i < 4; ++i) b.insert(random_vec(9, f, rng));
    CHECK(span_sum(a, zero) == a);
    Subspace sum = span_sum(a, b);
    Subspace inter = span_intersect(a, b);
    CHECK(sum.dim() + inter.dim() == a.dim() + b.dim());
    CHECK(sum.contains(a));
    CHECK(sum.contains(b));
    CHECK(a.contains(inter));
    CHECK(b.contains(inter));
  }
  Subspace full(9, f);
  for (long i = 0; i < 9; ++i) full.insert({{i, sc_one(f)}});
  Subspace any(9, f);
  any.insert(random_vec(9, f, rng));
  CHECK(full.contains(any));
  Subspace wrong(8, f);
  CHECK_THROWS_AS(span_sum(full, wrong), usage_error);
}

TEST_CASE("coordinates invert reduction") {
  Field f = make_generic_field();
  std::mt19937 rng(34);
  Subspace s(6, f);
  for (int i = 0; i < 3; ++i) s.insert(random_vec(6, f, rng));
  REQUIRE(s.dim() >= 2);
  SVec v = sv_axpy(s.rows()[0], sc_q(f), s.rows()[1]);
  std::vector<Scalar> c = s.coordinates(v);
  SVec rebuilt;
  for (size_t k = 0; k < c.size(); ++k) rebuilt = sv_axpy(rebuilt, c[k], s.rows()[k]);
  CHECK(sv_eq(rebuilt, v));
  SVec outside{{5, sc_one(f)}, {0, sc_q(f, 2)}};
  std::sort(outside.begin(), outside.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (!s.contains(outside)) CHECK_THROWS_AS(s.coordinates(outside), usage_error);
}

TEST_CASE("matrix algebra identities") {
  Field f = make_generic_field();
  std::mt19937 rng(35);
  for (int trial = 0; trial < 15; ++trial) {
    Mat a = random_mat(3, 4, f, rng);
    Mat b = random_mat(4, 3, f, rng);
    Mat c = random_mat(3, 3, f, rng);
    Mat d = random_mat(3, 3, f, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(kron(c, d) * kron(d, c) == kron(c * d, d * c));
    SVec v = random_vec(3, f, rng);
    CHECK(sv_eq(apply_row(apply_row(v, a), b), apply_row(v, a * b)));
    CHECK(Mat::unflatten(c.flatten(), 3, 3, f) == c);
    CHECK(a.transpose().transpose() == a);
  }
  CHECK_THROWS_AS(random_mat(3, 3, f, rng) + random_mat(3, 3, make_modp_field(5), rng),
                  usage_error);
  CHECK_THROWS_AS(random_mat(3, 4, f, rng) * random_mat(3, 4, f, rng), usage_error);
}

TEST_CASE("matrix inverse") {
  Field f = make_generic_field();
  std::mt19937 rng(36);
  for (int trial = 0; trial < 10; ++trial) {
    // Unitriangular plus a diagonal of units is always invertible.
    Mat m = random_mat(5, 5, f, rng, 30);
    for (long i = 0; i < 5; ++i)
      for (long j = 0; j <= i; ++j) m.set(i, j, i == j ? sc_q(f) : sc_zero(f));
    Mat inv = inverse(m);
    CHECK(m * inv == Mat::identity(5, f));
    CHECK(inv * m == Mat::identity(5, f));
  }
  Mat sing(2, 2, f);
  sing.set(0, 0, sc_one(f));
  sing.set(0, 1, sc_q(f));
  sing.set(1, 0, sc_q(f));
  sing.set(1, 1, sc_q(f, 2));
  CHECK_THROWS_AS(inverse(sing), arithmetic_error);
}

TEST_CASE("algebra closure basics") {
  Field f = make_generic_field();
  AlgebraSpan triv = algebra_closure({Mat::identity(3, f)}, true);
  CHECK(triv.span.dim() == 1);

  // The permutation representation of the symmetric group on 3 letters
  // splits as trivial + standard, so its image algebra has dimension
  // 1^2 + 2^2 = 5 (the six permutation matrices are dependent).
  auto perm = [&](std::vector<long> img) {
    Mat p(3, 3, f);
    for (long i = 0; i < 3; ++i) p.set(i, img[i], sc_one(f));
    return p;
  };
  AlgebraSpan sym = algebra_closure({perm({1, 0, 2}), perm({0, 2, 1})}, true);
  CHECK(sym.span.dim() == 5);
  CHECK(static_cast<long>(sym.basis.size()) == 5);

  // Closing the closure adds nothing.
  AlgebraSpan again = algebra_closure(sym.basis, false);
  CHECK(again.span == sym.span);

  // The closure is stable under multiplication by its generators.
  for (const Mat& b : sym.basis) {
    CHECK(sym.span.contains((b * perm({1, 0, 2})).flatten()));
    CHECK(sym.span.contains((perm({0, 2, 1}) * b).flatten()));
  }
}

TEST_CASE("two sided ideals") {
  Field f = make_modp_field(7);
  auto perm = [&](std::vector<long> img) {
    Mat p(3, 3, f);
    for (long i = 0; i < 3; ++i) p.set(i, img[i], sc_one(f));
    return p;
  };
  AlgebraSpan sym = algebra_closure({perm({1, 0, 2}), perm({0, 2, 1})}, true);

  AlgebraSpan whole = two_sided_ideal(sym, Mat::identity(3, f));
  CHECK(whole.span == sym.span);

  AlgebraSpan zero = two_sided_ideal(sym, Mat(3, 3, f));
  CHECK(zero.span.dim() == 0);

  // All-ones matrix spans the trivial-representation ideal, dimension 1.
  Mat ones(3, 3, f);
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j) ones.set(i, j, sc_one(f));
  Scalar third = sc_int(f, 3).inv();
  AlgebraSpan proj = two_sided_ideal(sym, ones.scaled(third));
  CHECK(proj.span.dim() == 1);

  // Ideal closure under both-sided multiplication by the algebra.
  for (const Mat& x : proj.basis)
    for (const Mat& b : sym.basis) {
      CHECK(proj.span.contains((x * b).flatten()));
      CHECK(proj.span.contains((b * x).flatten()));
    }

  Mat outside(3, 3, f);
  outside.set(0, 2, sc_q(f));
  CHECK_THROWS_AS(two_sided_ideal(sym, outside), usage_error);
}

TEST_CASE("commutants and intertwiners") {
  Field f = make_generic_field();
  CHECK(commutant({Mat::identity(3, f)}).dim() == 9);

  auto perm = [&](std::vector<long> img) {
    Mat p(3, 3, f);
    for (long i = 0; i < 3; ++i) p.set(i, img[i], sc_one(f));
    return p;
  };
  std::vector<Mat> gens = {perm({1, 0, 2}), perm({0, 2, 1})};
  // Permutation representation of the symmetric group on 3 letters splits
  // into trivial + standard, so the commutant is 2-dimensional.
  Subspace com = commutant(gens);
  CHECK(com.dim() == 2);

  // Double commutant contains the generated algebra.
  std::vector<Mat> com_mats;
  for (const SVec& r : com.rows()) com_mats.push_back(Mat::unflatten(r, 3, 3, f));
  Subspace dbl = commutant(com_mats);
  AlgebraSpan alg = algebra_closure(gens, true);
  CHECK(dbl.contains(alg.span));

  CHECK(intertwiner_space(gens, gens) == com);
  CHECK_THROWS_AS(commutant({}), usage_error);
}

TEST_CASE("module span") {
  Field f = make_generic_field();
  std::mt19937 rng(37);
  Subspace vecs(4, f);
  vecs.insert(random_vec(4, f, rng));
  vecs.insert(random_vec(4, f, rng));

  Subspace id_ops(16, f);
  id_ops.insert(Mat::identity(4, f).flatten());
  CHECK(module_span(vecs, id_ops) == vecs);

  Subspace no_ops(16, f);
  CHECK(module_span(vecs, no_ops).dim() == 0);

  Subspace bad(9, f);
  CHECK_THROWS_AS(module_span(vecs, bad), usage_error);
}

TEST_CASE("oversized generic instances are refused") {
  Field f = make_generic_field();
  CHECK_THROWS_WITH_AS(algebra_closure({Mat::identity(4001, f)}, true),
                       doctest::Contains("specialized field"), usage_error);
  CHECK_NOTHROW(algebra_closure({Mat::identity(4001, make_modp_field(5))}, true));
}
