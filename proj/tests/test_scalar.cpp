#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "tanglerep/scalar.hpp"

using namespace tanglerep;

namespace {

// Deterministic random scalar built from small integers and powers of q.
Scalar random_scalar(const Field& f, std::mt19937& rng, int depth = 2) {
  std::uniform_int_distribution<int> small(-6, 6);
  std::uniform_int_distribution<int> expd(-3, 3);
  std::uniform_int_distribution<int> op(0, 4);
  if (depth == 0) {
    if (op(rng) < 2) return sc_int(f, small(rng));
    return sc_q(f, expd(rng));
  }
  Scalar a = random_scalar(f, rng, depth - 1);
  Scalar b = random_scalar(f, rng, depth - 1);
  switch (op(rng)) {
    case 0: return a + b;
    case 1: return a - b;
    case 2: return a * b;
    case 3: return b.is_zero() ? a : a / b;
    default: return -a;
  }
}

std::vector<Field> all_fields() {
  return {make_generic_field(), make_modp_field(5), make_modp_field(7),
          make_zeta_field(mpq_class(2)), make_zeta_field(mpq_class(5, 3))};
}

} // namespace

TEST_CASE("laurent product and inverse basics") {
  Field f = make_generic_field();
  Scalar q = sc_q(f);
  Scalar qi = sc_q(f, -1);
  CHECK((q - qi) * (q + qi) == sc_q(f, 2) - sc_q(f, -2));
  CHECK(q.inv() == qi);
  CHECK(parse_scalar(f, "(q-q^-1)*(q+q^-1)") == parse_scalar(f, "q^2-q^-2"));
}

TEST_CASE("coefficients reduce modulo the prime") {
  Field f = make_modp_field(5);
  Scalar lhs = parse_scalar(f, "(q+4)*(q+1)");
  CHECK(lhs == parse_scalar(f, "q^2+4"));
  CHECK(lhs.str() == "q^2+4");
}

TEST_CASE("fraction reduction is canonical") {
  Field f = make_generic_field();
  CHECK(parse_scalar(f, "(q^2-1)/(q-1)") == parse_scalar(f, "q+1"));
  CHECK(parse_scalar(f, "(q^2-1)/(q^2-2*q+1)").str() == "(q+1)/(q-1)");
  CHECK(parse_scalar(f, "6/4").str() == "3/2");
  // Powers of q live in the numerator; the denominator starts at q^0.
  CHECK(parse_scalar(f, "(2*q+2)/(4*q^3)").str() == "(q^-2+q^-3)/2");
  CHECK(parse_scalar(f, "q^2/q^5") == sc_q(f, -3));
}

TEST_CASE("loop value matches its closed forms") {
  Field f = make_generic_field();
  CHECK(loop_value(f, 1) == parse_scalar(f, "-(q^2+q^-2)"));
  for (const Field& fld : all_fields()) {
    for (long m = 1; m <= 5; ++m) {
      Scalar sum = sc_zero(fld);
      for (long j = 1; j <= m; ++j) sum = sum + sc_q(fld, 2 * j) + sc_q(fld, -2 * j);
      CHECK(loop_value(fld, m) == -sum);
    }
  }
  CHECK(loop_value(make_zeta_field(mpq_class(2)), 1) == parse_scalar(make_zeta_field(mpq_class(2)), "-17/4"));
  CHECK(loop_value(make_zeta_field(mpq_class(3)), 1).str() == "-82/9");
}

TEST_CASE("field axioms hold on random samples") {
  std::mt19937 rng(12345);
  for (const Field& f : all_fields()) {
    Scalar zero = sc_zero(f), one = sc_one(f);
    for (int trial = 0; trial < 60; ++trial) {
      Scalar a = random_scalar(f, rng);
      Scalar b = random_scalar(f, rng);
      Scalar c = random_scalar(f, rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + zero == a);
      CHECK(a * one == a);
      CHECK(a - a == zero);
      if (!a.is_zero()) {
        CHECK(a * a.inv() == one);
        CHECK((one / a) * a == one);
      }
    }
  }
}

TEST_CASE("canonical text form round-trips") {
  std::mt19937 rng(777);
  for (const Field& f : all_fields()) {
    for (int trial = 0; trial < 80; ++trial) {
      Scalar a = random_scalar(f, rng);
      CHECK(parse_scalar(f, a.str()) == a);
    }
  }
}

TEST_CASE("canonical fraction invariants hold after random arithmetic") {
  std::mt19937 rng(999);
  Field f = make_generic_field();
  for (int trial = 0; trial < 100; ++trial) {
    Scalar a = random_scalar(f, rng);
    const RatZ& r = a.rz();
    REQUIRE(!r.den.is_zero());
    CHECK(r.den.min_exp() == 0);
    CHECK(sgn(r.den.lead()) > 0);
    if (a.is_zero()) {
      CHECK(r.den.t.size() == 1);
      CHECK(r.den.t[0].second == 1);
    }
  }
}

TEST_CASE("specialization is a ring homomorphism where defined") {
  std::mt19937 rng(4242);
  Field src = make_generic_field();
  std::vector<Field> targets = {make_modp_field(5), make_modp_field(7),
                                make_zeta_field(mpq_class(2)),
                                make_zeta_field(mpq_class(5, 3))};
  for (const Field& tgt : targets) {
    int done = 0;
    while (done < 100) {
      Scalar a = random_scalar(src, rng);
      Scalar b = random_scalar(src, rng);
      Scalar sa, sb, ssum, sprod;
      try {
        sa = specialize(a, tgt);
        sb = specialize(b, tgt);
        ssum = specialize(a + b, tgt);
        sprod = specialize(a * b, tgt);
      } catch (const specialization_error&) {
        continue; // a pole of one of the four images; pick another pair
      }
      CHECK(ssum == sa + sb);
      CHECK(sprod == sa * sb);
      ++done;
    }
  }
}

TEST_CASE("specialization at a point evaluates q") {
  Field src = make_generic_field();
  Field z2 = make_zeta_field(mpq_class(2));
  CHECK(specialize(parse_scalar(src, "q^2-1"), z2) == sc_int(z2, 3));
  CHECK(specialize(parse_scalar(src, "(q+5)/(q-5)"), make_modp_field(5)) ==
        sc_one(make_modp_field(5)));
  CHECK_THROWS_AS(specialize(parse_scalar(src, "1/(q-2)"), z2), specialization_error);
  CHECK_THROWS_AS(specialize(parse_scalar(src, "1/5"), make_modp_field(5)), specialization_error);
  CHECK_THROWS_AS(specialize(sc_one(z2), src), usage_error);
}

TEST_CASE("division by zero and field mixing are rejected") {
  Field f = make_generic_field();
  Scalar q = sc_q(f);
  CHECK_THROWS_AS(q / sc_zero(f), arithmetic_error);
  CHECK_THROWS_AS(sc_zero(f).inv(), arithmetic_error);
  CHECK_THROWS_AS(parse_scalar(f, "1/(q-q)"), arithmetic_error);
  Scalar other = sc_one(make_modp_field(5));
  CHECK_THROWS_AS(q + other, usage_error);
  CHECK_THROWS_AS(q == other, usage_error);
  // Same field built twice is still one field.
  CHECK(sc_q(make_generic_field()) == sc_q(make_generic_field()));
}

TEST_CASE("field construction guards") {
  CHECK_THROWS_AS(make_modp_field(6), usage_error);
  CHECK_THROWS_AS(make_modp_field(1), usage_error);
  CHECK_THROWS_AS(make_zeta_field(mpq_class(0)), usage_error);
  CHECK_THROWS_AS(make_zeta_field(mpq_class(1)), usage_error);
  CHECK_THROWS_AS(make_zeta_field(mpq_class(-1)), usage_error);
  CHECK_THROWS_AS(make_zeta_field(mpq_class(3, 3)), usage_error);
  CHECK_THROWS_AS(make_zeta_field(mpq_class(-5, 5)), usage_error);
  CHECK_NOTHROW(make_zeta_field(mpq_class(5, 3)));
  CHECK(parse_field("zeta:5/3")->label() == "zeta:5/3");
  CHECK(parse_field("modp:7")->label() == "modp:7");
  CHECK(parse_field("generic")->label() == "generic");
  CHECK_THROWS_AS(parse_field("zeta:1/1"), usage_error);
  CHECK_THROWS_AS(parse_field("real"), usage_error);
  CHECK_THROWS_AS(parse_field("modp:abc"), usage_error);
}

TEST_CASE("parse errors carry positions") {
  Field f = make_generic_field();
  CHECK_THROWS_WITH_AS(parse_scalar(f, "q^"), "expected an integer exponent at position 2", usage_error);
  CHECK_THROWS_WITH_AS(parse_scalar(f, "2+(q"), "unbalanced '(' opened at position 2", usage_error);
  CHECK_THROWS_WITH_AS(parse_scalar(f, "q$"), "unexpected character '$' at position 1", usage_error);
  CHECK_THROWS_WITH_AS(parse_scalar(f, "q)"), "unexpected trailing input at position 1", usage_error);
  CHECK_THROWS_WITH_AS(parse_scalar(f, "*q"), "expected a value at position 0", usage_error);
  CHECK(parse_scalar(f, " - ( q ^ 2 + q ^ -2 ) ") == loop_value(f, 1));
}
