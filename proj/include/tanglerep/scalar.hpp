#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tanglerep/errors.hpp"

namespace tanglerep {

/// Element of the prime field F_p, stored as a representative in [0, p).
struct Fp {
  long long v = 0;
  long long p = 0;
};

bool operator==(const Fp& a, const Fp& b);
Fp fp_add(const Fp& a, const Fp& b);
Fp fp_sub(const Fp& a, const Fp& b);
Fp fp_mul(const Fp& a, const Fp& b);
Fp fp_neg(const Fp& a);
Fp fp_inv(const Fp& a); // a.v != 0 required
Fp fp_make(long long v, long long p);
Fp fp_from_mpz(const mpz_class& z, long long p);

inline bool coeff_is_zero(const mpz_class& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const Fp& c) { return c.v == 0; }

/// Laurent polynomial in q. Terms are (exponent, coefficient) pairs sorted by
/// strictly increasing exponent with no zero coefficients; the zero
/// polynomial is the empty list, so equal values have identical term lists.
template <class C>
struct LPoly {
  std::vector<std::pair<long, C>> t;

  bool is_zero() const { return t.empty(); }
  long min_exp() const { return t.front().first; } // requires nonzero
  long max_exp() const { return t.back().first; }  // requires nonzero
  const C& lead() const { return t.back().second; }
  bool operator==(const LPoly& o) const;
};

template <class C>
bool LPoly<C>::operator==(const LPoly& o) const {
  if (t.size() != o.t.size()) return false;
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i].first != o.t[i].first) return false;
    if (!(t[i].second == o.t[i].second)) return false;
  }
  return true;
}

template <class C> LPoly<C> lp_add(const LPoly<C>& a, const LPoly<C>& b);
template <class C> LPoly<C> lp_sub(const LPoly<C>& a, const LPoly<C>& b);
template <class C> LPoly<C> lp_neg(const LPoly<C>& a);
template <class C> LPoly<C> lp_mul(const LPoly<C>& a, const LPoly<C>& b);
template <class C> LPoly<C> lp_shift(const LPoly<C>& a, long k);
template <class C> LPoly<C> lp_scale(const LPoly<C>& a, const C& c);

/// Greatest common divisor of two ordinary polynomials (min_exp >= 0).
/// Over the integers the result includes the content and has a positive
/// leading coefficient; over F_p it is monic. gcd(0, b) is normalized b.
template <class C> LPoly<C> lp_gcd(LPoly<C> a, LPoly<C> b);

/// Exact division; the divisor must divide without remainder.
template <class C> LPoly<C> lp_divexact(const LPoly<C>& a, const LPoly<C>& b);

/// Fraction num/den of Laurent polynomials in canonical form: den is nonzero
/// with min_exp 0 and unit-normalized leading coefficient (positive over the
/// integers, 1 over F_p), gcd(num, den) is a unit, and any power of q in the
/// fraction is carried by num.
template <class C>
struct RatF {
  LPoly<C> num, den;
  bool operator==(const RatF& o) const { return num == o.num && den == o.den; }
};

using RatZ = RatF<mpz_class>;
using RatP = RatF<Fp>;

enum class FieldKind {
  GenericQ0,           // rational functions in q over the rationals
  GenericModP,         // rational functions in q over F_p
  SpecializedRational, // q evaluated at a fixed rational point
};

class FieldSpecData;
using Field = std::shared_ptr<const FieldSpecData>;

/// Immutable description of the coefficient field. Shared by every scalar
/// created from it; operations on scalars from different fields refuse to mix.
class FieldSpecData {
public:
  FieldKind kind;
  long long p = 0;   // GenericModP
  mpq_class zeta = 0; // SpecializedRational

  std::string label() const;
  bool same(const FieldSpecData& o) const;
};

Field make_generic_field();
Field make_modp_field(long long p);
/// The evaluation point must be nonzero with |numerator| != |denominator|,
/// which certifies it is not a root of unity; enforced here, globally.
Field make_zeta_field(const mpq_class& zeta);
/// Accepts "generic", "modp:P", "zeta:A" or "zeta:A/B".
Field parse_field(std::string_view text);

/// Exact scalar in one of the three field kinds. Arithmetic is total except
/// division by zero (arithmetic_error); mixing fields raises usage_error.
class Scalar {
public:
  Scalar() = default; // invalid until assigned; only for container use

  const Field& field() const { return f_; }
  bool valid() const { return f_ != nullptr; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inv() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text form; parsing it back in the same field reproduces the
  /// scalar exactly.
  std::string str() const;

  /// Size measure used by elimination heuristics: total number of stored
  /// terms in the reduced fraction.
  long complexity() const;

  static Scalar make(Field f, RatZ v);
  static Scalar make(Field f, RatP v);
  static Scalar make(Field f, mpq_class v);

  const RatZ& rz() const { return std::get<RatZ>(v_); }
  const RatP& rp() const { return std::get<RatP>(v_); }
  const mpq_class& rq() const { return std::get<mpq_class>(v_); }

private:
  Field f_;
  std::variant<RatZ, RatP, mpq_class> v_;
};

Scalar sc_zero(const Field& f);
Scalar sc_one(const Field& f);
Scalar sc_int(const Field& f, long long n);
Scalar sc_int(const Field& f, const mpz_class& n);
/// q^e (the evaluation point raised to e in a specialized field).
Scalar sc_q(const Field& f, long e = 1);
Scalar sc_pow(const Scalar& a, long e);

/// Parse the textual scalar syntax: integers, q, ^ with possibly negative
/// exponents, + - * /, parentheses. Errors carry the offending position.
Scalar parse_scalar(const Field& f, std::string_view text);

/// The value of a closed loop for symplectic rank m:
/// 1 + (r - r^-1)/(q - q^-1) with r = -q^(2m+1).
Scalar loop_value(const Field& f, long m);

/// Carry a scalar of the generic rational-function field into another field
/// by mapping coefficients (mod p) or evaluating q at the field's point.
/// Raises specialization_error when the denominator collapses to zero.
Scalar specialize(const Scalar& s, const Field& target);

} // namespace tanglerep
