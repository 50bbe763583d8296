#include "tanglerep/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace tanglerep {

// ---------------------------------------------------------------------------
// F_p coefficients

bool operator==(const Fp& a, const Fp& b) { return a.v == b.v && a.p == b.p; }

static void fp_check(const Fp& a, const Fp& b) {
  if (a.p != b.p) throw std::logic_error("mixed moduli in F_p arithmetic");
}

Fp fp_make(long long v, long long p) {
  long long r = v % p;
  if (r < 0) r += p;
  return Fp{r, p};
}

Fp fp_add(const Fp& a, const Fp& b) { fp_check(a, b); return fp_make(a.v + b.v, a.p); }
Fp fp_sub(const Fp& a, const Fp& b) { fp_check(a, b); return fp_make(a.v - b.v, a.p); }
Fp fp_mul(const Fp& a, const Fp& b) { fp_check(a, b); return fp_make(a.v * b.v, a.p); }
Fp fp_neg(const Fp& a) { return fp_make(-a.v, a.p); }

Fp fp_inv(const Fp& a) {
  if (a.v == 0) throw arithmetic_error("division by zero in F_" + std::to_string(a.p));
  long long r0 = a.p, r1 = a.v, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long t = r0 / r1;
    long long r2 = r0 - t * r1, s2 = s0 - t * s1;
    r0 = r1; r1 = r2; s0 = s1; s1 = s2;
  }
  return fp_make(s0, a.p);
}

Fp fp_from_mpz(const mpz_class& z, long long p) {
  unsigned long r = mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
  return Fp{static_cast<long long>(r), p};
}

// ---------------------------------------------------------------------------
// Coefficient helpers shared by the Laurent polynomial templates

static mpz_class coeff_add(const mpz_class& a, const mpz_class& b) { return a + b; }
static Fp coeff_add(const Fp& a, const Fp& b) { return fp_add(a, b); }
static mpz_class coeff_mul(const mpz_class& a, const mpz_class& b) { return a * b; }
static Fp coeff_mul(const Fp& a, const Fp& b) { return fp_mul(a, b); }
static mpz_class coeff_neg(const mpz_class& a) { return -a; }
static Fp coeff_neg(const Fp& a) { return fp_neg(a); }

template <class C>
static LPoly<C> lp_one_like(const C& sample) {
  if constexpr (std::is_same_v<C, Fp>) {
    return LPoly<Fp>{{{0, Fp{1, sample.p}}}};
  } else {
    (void)sample;
    return LPoly<mpz_class>{{{0, mpz_class(1)}}};
  }
}

template <class C>
static bool lp_is_one(const LPoly<C>& a) {
  if (a.t.size() != 1 || a.t[0].first != 0) return false;
  if constexpr (std::is_same_v<C, Fp>) return a.t[0].second.v == 1;
  else return a.t[0].second == 1;
}

// ---------------------------------------------------------------------------
// Laurent polynomial arithmetic

template <class C>
LPoly<C> lp_add(const LPoly<C>& a, const LPoly<C>& b) {
  LPoly<C> r;
  r.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    if (a.t[i].first < b.t[j].first) {
      r.t.push_back(a.t[i++]);
    } else if (a.t[i].first > b.t[j].first) {
      r.t.push_back(b.t[j++]);
    } else {
      C c = coeff_add(a.t[i].second, b.t[j].second);
      if (!coeff_is_zero(c)) r.t.emplace_back(a.t[i].first, std::move(c));
      ++i; ++j;
    }
  }
  for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j) r.t.push_back(b.t[j]);
  return r;
}

template <class C>
LPoly<C> lp_neg(const LPoly<C>& a) {
  LPoly<C> r = a;
  for (auto& tc : r.t) tc.second = coeff_neg(tc.second);
  return r;
}

template <class C>
LPoly<C> lp_sub(const LPoly<C>& a, const LPoly<C>& b) {
  return lp_add(a, lp_neg(b));
}

template <class C>
LPoly<C> lp_mul(const LPoly<C>& a, const LPoly<C>& b) {
  std::map<long, C> acc;
  for (const auto& [ea, ca] : a.t) {
    for (const auto& [eb, cb] : b.t) {
      C prod = coeff_mul(ca, cb);
      long e = ea + eb;
      auto it = acc.find(e);
      if (it == acc.end()) acc.emplace(e, std::move(prod));
      else it->second = coeff_add(it->second, prod);
    }
  }
  LPoly<C> r;
  for (auto& [e, c] : acc)
    if (!coeff_is_zero(c)) r.t.emplace_back(e, std::move(c));
  return r;
}

template <class C>
LPoly<C> lp_shift(const LPoly<C>& a, long k) {
  LPoly<C> r = a;
  for (auto& tc : r.t) tc.first += k;
  return r;
}

template <class C>
LPoly<C> lp_scale(const LPoly<C>& a, const C& c) {
  LPoly<C> r;
  r.t.reserve(a.t.size());
  for (const auto& [e, x] : a.t) {
    C y = coeff_mul(x, c);
    if (!coeff_is_zero(y)) r.t.emplace_back(e, std::move(y));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Polynomial gcd. Over the integers: primitive pseudo-remainder sequence;
// over F_p: monic Euclid. Inputs are ordinary polynomials (min_exp >= 0).

static mpz_class content_z(const LPoly<mpz_class>& a) {
  mpz_class g = 0;
  for (const auto& [e, c] : a.t)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

static LPoly<mpz_class> lp_divcoeff_z(const LPoly<mpz_class>& a, const mpz_class& c) {
  LPoly<mpz_class> r = a;
  for (auto& tc : r.t)
    mpz_divexact(tc.second.get_mpz_t(), tc.second.get_mpz_t(), c.get_mpz_t());
  return r;
}

// Divide out the content and force a positive leading coefficient.
static LPoly<mpz_class> prim_z(const LPoly<mpz_class>& a) {
  if (a.is_zero()) return a;
  mpz_class c = content_z(a);
  if (sgn(a.lead()) < 0) c = -c;
  return lp_divcoeff_z(a, c);
}

static LPoly<mpz_class> prem_z(const LPoly<mpz_class>& a, const LPoly<mpz_class>& b) {
  LPoly<mpz_class> r = a;
  const mpz_class lc = b.lead();
  const long db = b.max_exp();
  while (!r.is_zero() && r.max_exp() >= db) {
    mpz_class c = r.lead();
    long k = r.max_exp() - db;
    r = lp_sub(lp_scale(r, lc), lp_shift(lp_scale(b, c), k));
  }
  return r;
}

static LPoly<Fp> poly_mod_fp(const LPoly<Fp>& a, const LPoly<Fp>& b) {
  LPoly<Fp> r = a;
  const Fp ilc = fp_inv(b.lead());
  const long db = b.max_exp();
  while (!r.is_zero() && r.max_exp() >= db) {
    Fp c = fp_mul(r.lead(), ilc);
    r = lp_sub(r, lp_shift(lp_scale(b, c), r.max_exp() - db));
  }
  return r;
}

template <class C>
LPoly<C> lp_gcd(LPoly<C> a, LPoly<C> b) {
  if (a.is_zero() && b.is_zero()) return a;
  if constexpr (std::is_same_v<C, mpz_class>) {
    if (a.is_zero()) return lp_scale(prim_z(b), content_z(b));
    if (b.is_zero()) return lp_scale(prim_z(a), content_z(a));
    mpz_class cont;
    mpz_class ca = content_z(a), cb = content_z(b);
    mpz_gcd(cont.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    LPoly<mpz_class> pa = prim_z(a), pb = prim_z(b);
    if (pa.max_exp() < pb.max_exp()) std::swap(pa, pb);
    while (!pb.is_zero()) {
      LPoly<mpz_class> r = prim_z(prem_z(pa, pb));
      pa = std::move(pb);
      pb = std::move(r);
    }
    return lp_scale(pa, cont);
  } else {
    if (a.is_zero()) return lp_scale(b, fp_inv(b.lead()));
    if (b.is_zero()) return lp_scale(a, fp_inv(a.lead()));
    while (!b.is_zero()) {
      LPoly<Fp> r = poly_mod_fp(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return lp_scale(a, fp_inv(a.lead()));
  }
}

template <class C>
LPoly<C> lp_divexact(const LPoly<C>& a, const LPoly<C>& b) {
  if (b.is_zero()) throw std::logic_error("exact division by zero polynomial");
  LPoly<C> r = a;
  std::vector<std::pair<long, C>> q;
  while (!r.is_zero()) {
    long k = r.max_exp() - b.max_exp();
    if (k < 0) throw std::logic_error("exact division left a remainder");
    C c;
    if constexpr (std::is_same_v<C, mpz_class>) {
      if (!mpz_divisible_p(r.lead().get_mpz_t(), b.lead().get_mpz_t()))
        throw std::logic_error("exact division left a remainder");
      mpz_divexact(c.get_mpz_t(), r.lead().get_mpz_t(), b.lead().get_mpz_t());
    } else {
      c = fp_mul(r.lead(), fp_inv(b.lead()));
    }
    q.emplace_back(k, c);
    r = lp_sub(r, lp_shift(lp_scale(b, c), k));
  }
  std::reverse(q.begin(), q.end());
  LPoly<C> out;
  out.t = std::move(q);
  return out;
}

template struct LPoly<mpz_class>;
template struct LPoly<Fp>;
template LPoly<mpz_class> lp_add(const LPoly<mpz_class>&, const LPoly<mpz_class>&);
template LPoly<Fp> lp_add(const LPoly<Fp>&, const LPoly<Fp>&);
template LPoly<mpz_class> lp_sub(const LPoly<mpz_class>&, const LPoly<mpz_class>&);
template LPoly<Fp> lp_sub(const LPoly<Fp>&, const LPoly<Fp>&);
template LPoly<mpz_class> lp_neg(const LPoly<mpz_class>&);
template LPoly<Fp> lp_neg(const LPoly<Fp>&);
template LPoly<mpz_class> lp_mul(const LPoly<mpz_class>&, const LPoly<mpz_class>&);
template LPoly<Fp> lp_mul(const LPoly<Fp>&, const LPoly<Fp>&);
template LPoly<mpz_class> lp_shift(const LPoly<mpz_class>&, long);
template LPoly<Fp> lp_shift(const LPoly<Fp>&, long);
template LPoly<mpz_class> lp_scale(const LPoly<mpz_class>&, const mpz_class&);
template LPoly<Fp> lp_scale(const LPoly<Fp>&, const Fp&);
template LPoly<mpz_class> lp_gcd(LPoly<mpz_class>, LPoly<mpz_class>);
template LPoly<Fp> lp_gcd(LPoly<Fp>, LPoly<Fp>);
template LPoly<mpz_class> lp_divexact(const LPoly<mpz_class>&, const LPoly<mpz_class>&);
template LPoly<Fp> lp_divexact(const LPoly<Fp>&, const LPoly<Fp>&);

// ---------------------------------------------------------------------------
// Rational functions

template <class C>
static void ratf_unit_normalize(RatF<C>& r) {
  if constexpr (std::is_same_v<C, mpz_class>) {
    if (sgn(r.den.lead()) < 0) {
      r.num = lp_neg(r.num);
      r.den = lp_neg(r.den);
    }
  } else {
    Fp lc = r.den.lead();
    if (lc.v != 1) {
      Fp ic = fp_inv(lc);
      r.num = lp_scale(r.num, ic);
      r.den = lp_scale(r.den, ic);
    }
  }
}

template <class C>
static void ratf_normalize(RatF<C>& r) {
  if (r.den.is_zero()) throw arithmetic_error("division by zero");
  if (r.num.is_zero()) {
    r.den = lp_one_like(r.den.lead());
    return;
  }
  long s = r.den.min_exp();
  if (s != 0) {
    r.den = lp_shift(r.den, -s);
    r.num = lp_shift(r.num, -s);
  }
  long a = r.num.min_exp();
  LPoly<C> n = (a == 0) ? r.num : lp_shift(r.num, -a);
  if (!lp_is_one(r.den)) {
    LPoly<C> g = lp_gcd(n, r.den);
    if (!lp_is_one(g)) {
      n = lp_divexact(n, g);
      r.den = lp_divexact(r.den, g);
    }
  }
  r.num = (a == 0) ? std::move(n) : lp_shift(n, a);
  ratf_unit_normalize(r);
}

template <class C>
static RatF<C> ratf_make(LPoly<C> num, LPoly<C> den) {
  RatF<C> r{std::move(num), std::move(den)};
  ratf_normalize(r);
  return r;
}

template <class C>
static RatF<C> ratf_zero_like(const RatF<C>& sample) {
  return RatF<C>{LPoly<C>{}, lp_one_like(sample.den.lead())};
}

template <class C>
static RatF<C> ratf_add(const RatF<C>& x, const RatF<C>& y) {
  if (x.num.is_zero()) return y;
  if (y.num.is_zero()) return x;
  if (lp_is_one(x.den) && lp_is_one(y.den)) {
    return RatF<C>{lp_add(x.num, y.num), x.den};
  }
  LPoly<C> g = lp_gcd(x.den, y.den);
  LPoly<C> xd = lp_is_one(g) ? x.den : lp_divexact(x.den, g);
  LPoly<C> yd = lp_is_one(g) ? y.den : lp_divexact(y.den, g);
  LPoly<C> num = lp_add(lp_mul(x.num, yd), lp_mul(y.num, xd));
  LPoly<C> den = lp_mul(x.den, yd);
  return ratf_make(std::move(num), std::move(den));
}

template <class C>
static RatF<C> ratf_neg(const RatF<C>& x) {
  return RatF<C>{lp_neg(x.num), x.den};
}

// Cross-cancel each numerator against the opposite denominator before
// multiplying; canonical inputs then yield a coprime result, so only unit
// normalization remains.
template <class C>
static RatF<C> ratf_mul(const RatF<C>& x, const RatF<C>& y) {
  if (x.num.is_zero()) return x;
  if (y.num.is_zero()) return y;
  long ax = x.num.min_exp(), ay = y.num.min_exp();
  LPoly<C> nx = (ax == 0) ? x.num : lp_shift(x.num, -ax);
  LPoly<C> ny = (ay == 0) ? y.num : lp_shift(y.num, -ay);
  LPoly<C> xd = x.den, yd = y.den;
  if (!lp_is_one(yd)) {
    LPoly<C> g = lp_gcd(nx, yd);
    if (!lp_is_one(g)) {
      nx = lp_divexact(nx, g);
      yd = lp_divexact(yd, g);
    }
  }
  if (!lp_is_one(xd)) {
    LPoly<C> g = lp_gcd(ny, xd);
    if (!lp_is_one(g)) {
      ny = lp_divexact(ny, g);
      xd = lp_divexact(xd, g);
    }
  }
  RatF<C> r{lp_shift(lp_mul(nx, ny), ax + ay), lp_mul(xd, yd)};
  ratf_unit_normalize(r);
  return r;
}

template <class C>
static RatF<C> ratf_inv(const RatF<C>& x) {
  if (x.num.is_zero()) throw arithmetic_error("division by zero");
  long a = x.num.min_exp();
  RatF<C> r{lp_shift(x.den, -a), (a == 0) ? x.num : lp_shift(x.num, -a)};
  ratf_unit_normalize(r);
  return r;
}

// ---------------------------------------------------------------------------
// Fields

std::string FieldSpecData::label() const {
  switch (kind) {
    case FieldKind::GenericQ0: return "generic";
    case FieldKind::GenericModP: return "modp:" + std::to_string(p);
    case FieldKind::SpecializedRational: return "zeta:" + zeta.get_str();
  }
  return "?";
}

bool FieldSpecData::same(const FieldSpecData& o) const {
  return kind == o.kind && p == o.p && cmp(zeta, o.zeta) == 0;
}

Field make_generic_field() {
  auto f = std::make_shared<FieldSpecData>();
  f->kind = FieldKind::GenericQ0;
  return f;
}

static bool is_prime_ll(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field make_modp_field(long long p) {
  if (p < 2 || p > (1LL << 31) || !is_prime_ll(p))
    throw usage_error("modulus must be a prime below 2^31, got " + std::to_string(p));
  auto f = std::make_shared<FieldSpecData>();
  f->kind = FieldKind::GenericModP;
  f->p = p;
  return f;
}

Field make_zeta_field(const mpq_class& zeta) {
  mpq_class z = zeta;
  z.canonicalize();
  if (sgn(z) == 0)
    throw usage_error("evaluation point must be nonzero");
  if (cmp(abs(z.get_num()), abs(z.get_den())) == 0)
    throw usage_error("evaluation point " + z.get_str() +
                      " has |numerator| = |denominator|, so it is not certified away from roots of unity");
  auto f = std::make_shared<FieldSpecData>();
  f->kind = FieldKind::SpecializedRational;
  f->zeta = z;
  return f;
}

Field parse_field(std::string_view text) {
  std::string s(text);
  if (s == "generic") return make_generic_field();
  if (s.rfind("modp:", 0) == 0) {
    try {
      return make_modp_field(std::stoll(s.substr(5)));
    } catch (const std::invalid_argument&) {
      throw usage_error("bad modulus in field spec '" + s + "'");
    } catch (const std::out_of_range&) {
      throw usage_error("bad modulus in field spec '" + s + "'");
    }
  }
  if (s.rfind("zeta:", 0) == 0) {
    std::string v = s.substr(5);
    if (v.empty() || v.find_first_not_of("-0123456789/") != std::string::npos)
      throw usage_error("bad evaluation point in field spec '" + s + "'");
    mpq_class z;
    if (z.set_str(v, 10) != 0)
      throw usage_error("bad evaluation point in field spec '" + s + "'");
    return make_zeta_field(z);
  }
  throw usage_error("unknown field spec '" + s + "' (expected generic, modp:P or zeta:A/B)");
}

// ---------------------------------------------------------------------------
// Scalars

Scalar Scalar::make(Field f, RatZ v) {
  Scalar s;
  s.f_ = std::move(f);
  s.v_ = std::move(v);
  return s;
}
Scalar Scalar::make(Field f, RatP v) {
  Scalar s;
  s.f_ = std::move(f);
  s.v_ = std::move(v);
  return s;
}
Scalar Scalar::make(Field f, mpq_class v) {
  Scalar s;
  s.f_ = std::move(f);
  s.v_ = std::move(v);
  return s;
}

static void check_fields(const Scalar& a, const Scalar& b) {
  if (!a.valid() || !b.valid())
    throw std::logic_error("operation on default-constructed scalar");
  if (a.field().get() != b.field().get() && !a.field()->same(*b.field()))
    throw usage_error("cannot combine scalars from different fields (" +
                      a.field()->label() + " vs " + b.field()->label() + ")");
}

bool Scalar::is_zero() const {
  switch (f_->kind) {
    case FieldKind::GenericQ0: return rz().num.is_zero();
    case FieldKind::GenericModP: return rp().num.is_zero();
    case FieldKind::SpecializedRational: return sgn(rq()) == 0;
  }
  return false;
}

bool Scalar::is_one() const {
  switch (f_->kind) {
    case FieldKind::GenericQ0: return lp_is_one(rz().num) && lp_is_one(rz().den);
    case FieldKind::GenericModP: return lp_is_one(rp().num) && lp_is_one(rp().den);
    case FieldKind::SpecializedRational: return cmp(rq(), 1) == 0;
  }
  return false;
}

Scalar Scalar::operator-() const {
  switch (f_->kind) {
    case FieldKind::GenericQ0: return make(f_, ratf_neg(rz()));
    case FieldKind::GenericModP: return make(f_, ratf_neg(rp()));
    case FieldKind::SpecializedRational: return make(f_, mpq_class(-rq()));
  }
  return *this;
}

Scalar Scalar::inv() const {
  switch (f_->kind) {
    case FieldKind::GenericQ0: return make(f_, ratf_inv(rz()));
    case FieldKind::GenericModP: return make(f_, ratf_inv(rp()));
    case FieldKind::SpecializedRational: {
      if (sgn(rq()) == 0) throw arithmetic_error("division by zero");
      return make(f_, mpq_class(1 / rq()));
    }
  }
  return *this;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  check_fields(a, b);
  switch (a.field()->kind) {
    case FieldKind::GenericQ0: return Scalar::make(a.field(), ratf_add(a.rz(), b.rz()));
    case FieldKind::GenericModP: return Scalar::make(a.field(), ratf_add(a.rp(), b.rp()));
    case FieldKind::SpecializedRational: return Scalar::make(a.field(), mpq_class(a.rq() + b.rq()));
  }
  return a;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  check_fields(a, b);
  switch (a.field()->kind) {
    case FieldKind::GenericQ0: return Scalar::make(a.field(), ratf_add(a.rz(), ratf_neg(b.rz())));
    case FieldKind::GenericModP: return Scalar::make(a.field(), ratf_add(a.rp(), ratf_neg(b.rp())));
    case FieldKind::SpecializedRational: return Scalar::make(a.field(), mpq_class(a.rq() - b.rq()));
  }
  return a;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  check_fields(a, b);
  switch (a.field()->kind) {
    case FieldKind::GenericQ0: return Scalar::make(a.field(), ratf_mul(a.rz(), b.rz()));
    case FieldKind::GenericModP: return Scalar::make(a.field(), ratf_mul(a.rp(), b.rp()));
    case FieldKind::SpecializedRational: return Scalar::make(a.field(), mpq_class(a.rq() * b.rq()));
  }
  return a;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  check_fields(a, b);
  if (b.is_zero()) throw arithmetic_error("division by zero");
  return a * b.inv();
}

bool Scalar::operator==(const Scalar& o) const {
  check_fields(*this, o);
  switch (f_->kind) {
    case FieldKind::GenericQ0: return rz() == o.rz();
    case FieldKind::GenericModP: return rp() == o.rp();
    case FieldKind::SpecializedRational: return cmp(rq(), o.rq()) == 0;
  }
  return false;
}

long Scalar::complexity() const {
  switch (f_->kind) {
    case FieldKind::GenericQ0:
      return static_cast<long>(rz().num.t.size() + rz().den.t.size());
    case FieldKind::GenericModP:
      return static_cast<long>(rp().num.t.size() + rp().den.t.size());
    case FieldKind::SpecializedRational:
      return static_cast<long>((mpz_sizeinbase(rq().get_num().get_mpz_t(), 2) +
                                mpz_sizeinbase(rq().get_den().get_mpz_t(), 2)) / 64) + 1;
  }
  return 1;
}

Scalar sc_zero(const Field& f) {
  switch (f->kind) {
    case FieldKind::GenericQ0: return Scalar::make(f, RatZ{{}, LPoly<mpz_class>{{{0, mpz_class(1)}}}});
    case FieldKind::GenericModP: return Scalar::make(f, RatP{{}, LPoly<Fp>{{{0, Fp{1, f->p}}}}});
    case FieldKind::SpecializedRational: return Scalar::make(f, mpq_class(0));
  }
  throw std::logic_error("bad field kind");
}

Scalar sc_one(const Field& f) { return sc_int(f, 1); }

Scalar sc_int(const Field& f, const mpz_class& n) {
  switch (f->kind) {
    case FieldKind::GenericQ0: {
      LPoly<mpz_class> num;
      if (sgn(n) != 0) num.t.emplace_back(0, n);
      return Scalar::make(f, RatZ{std::move(num), LPoly<mpz_class>{{{0, mpz_class(1)}}}});
    }
    case FieldKind::GenericModP: {
      Fp c = fp_from_mpz(n, f->p);
      LPoly<Fp> num;
      if (c.v != 0) num.t.emplace_back(0, c);
      return Scalar::make(f, RatP{std::move(num), LPoly<Fp>{{{0, Fp{1, f->p}}}}});
    }
    case FieldKind::SpecializedRational: return Scalar::make(f, mpq_class(n));
  }
  throw std::logic_error("bad field kind");
}

Scalar sc_int(const Field& f, long long n) { return sc_int(f, mpz_class(static_cast<long>(n))); }

static mpq_class mpq_pow(const mpq_class& z, long e) {
  if (e == 0) return mpq_class(1);
  mpz_class n = z.get_num(), d = z.get_den();
  if (e < 0) {
    std::swap(n, d);
    e = -e;
  }
  mpz_class np, dp;
  mpz_pow_ui(np.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(e));
  mpq_class r(np, dp);
  r.canonicalize();
  return r;
}

Scalar sc_q(const Field& f, long e) {
  switch (f->kind) {
    case FieldKind::GenericQ0:
      return Scalar::make(f, RatZ{LPoly<mpz_class>{{{e, mpz_class(1)}}},
                                  LPoly<mpz_class>{{{0, mpz_class(1)}}}});
    case FieldKind::GenericModP:
      return Scalar::make(f, RatP{LPoly<Fp>{{{e, Fp{1, f->p}}}},
                                  LPoly<Fp>{{{0, Fp{1, f->p}}}}});
    case FieldKind::SpecializedRational:
      return Scalar::make(f, mpq_pow(f->zeta, e));
  }
  throw std::logic_error("bad field kind");
}

Scalar sc_pow(const Scalar& a, long e) {
  if (e == 0) return sc_one(a.field());
  Scalar base = (e < 0) ? a.inv() : a;
  unsigned long k = (e < 0) ? static_cast<unsigned long>(-(e + 1)) + 1
                            : static_cast<unsigned long>(e);
  Scalar acc = sc_one(a.field());
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Text form

static std::string poly_str(const LPoly<mpz_class>& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (auto it = a.t.rbegin(); it != a.t.rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = sgn(c) < 0;
    mpz_class m = abs(c);
    if (it == a.t.rbegin()) {
      if (neg) s += '-';
    } else {
      s += neg ? '-' : '+';
    }
    if (e == 0) {
      s += m.get_str();
    } else {
      if (cmp(m, 1) != 0) {
        s += m.get_str();
        s += '*';
      }
      s += 'q';
      if (e != 1) {
        s += '^';
        s += std::to_string(e);
      }
    }
  }
  return s;
}

static std::string poly_str(const LPoly<Fp>& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (auto it = a.t.rbegin(); it != a.t.rend(); ++it) {
    const auto& [e, c] = *it;
    if (it != a.t.rbegin()) s += '+';
    if (e == 0) {
      s += std::to_string(c.v);
    } else {
      if (c.v != 1) {
        s += std::to_string(c.v);
        s += '*';
      }
      s += 'q';
      if (e != 1) {
        s += '^';
        s += std::to_string(e);
      }
    }
  }
  return s;
}

template <class C>
static bool den_needs_parens(const LPoly<C>& den) {
  if (den.t.size() > 1) return true;
  const auto& [e, c] = den.t[0];
  if (e == 0) return false;
  if constexpr (std::is_same_v<C, Fp>) return c.v != 1;
  else return cmp(c, 1) != 0;
}

template <class C>
static std::string ratf_str(const RatF<C>& r) {
  if (lp_is_one(r.den)) return poly_str(r.num);
  std::string n = poly_str(r.num);
  if (r.num.t.size() > 1) n = "(" + n + ")";
  std::string d = poly_str(r.den);
  if (den_needs_parens(r.den)) d = "(" + d + ")";
  return n + "/" + d;
}

std::string Scalar::str() const {
  if (!valid()) return "<invalid>";
  switch (f_->kind) {
    case FieldKind::GenericQ0: return ratf_str(rz());
    case FieldKind::GenericModP: return ratf_str(rp());
    case FieldKind::SpecializedRational: return rq().get_str();
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Scalar expression parser

namespace {

enum TokKind { TINT, TQ, TPOW, TPLUS, TMINUS, TSTAR, TSLASH, TLP, TRP, TEND };

struct STok {
  TokKind k;
  mpz_class val;
  size_t pos;
};

std::vector<STok> lex_scalar(std::string_view s) {
  std::vector<STok> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({TINT, mpz_class(std::string(s.substr(i, j - i))), i});
      i = j;
      continue;
    }
    TokKind k;
    switch (c) {
      case 'q': k = TQ; break;
      case '^': k = TPOW; break;
      case '+': k = TPLUS; break;
      case '-': k = TMINUS; break;
      case '*': k = TSTAR; break;
      case '/': k = TSLASH; break;
      case '(': k = TLP; break;
      case ')': k = TRP; break;
      default:
        throw usage_error("unexpected character '" + std::string(1, c) +
                          "' at position " + std::to_string(i));
    }
    out.push_back({k, 0, i});
    ++i;
  }
  out.push_back({TEND, 0, s.size()});
  return out;
}

constexpr long kMaxExponent = 100000;

struct SParser {
  const Field& f;
  const std::vector<STok>& ts;
  size_t i = 0;

  const STok& peek() const { return ts[i]; }
  STok next() { return ts[i++]; }

  [[noreturn]] void fail(const std::string& what, size_t pos) const {
    throw usage_error(what + " at position " + std::to_string(pos));
  }

  Scalar expr() {
    Scalar v = term();
    while (peek().k == TPLUS || peek().k == TMINUS) {
      bool plus = next().k == TPLUS;
      Scalar w = term();
      v = plus ? v + w : v - w;
    }
    return v;
  }

  Scalar term() {
    Scalar v = factor();
    while (peek().k == TSTAR || peek().k == TSLASH) {
      size_t pos = peek().pos;
      bool star = next().k == TSTAR;
      Scalar w = factor();
      if (star) {
        v = v * w;
      } else {
        if (w.is_zero())
          throw arithmetic_error("division by zero at position " + std::to_string(pos));
        v = v / w;
      }
    }
    return v;
  }

  Scalar factor() {
    if (peek().k == TMINUS) {
      next();
      return -factor();
    }
    if (peek().k == TPLUS) {
      next();
      return factor();
    }
    return power();
  }

  long exponent() {
    bool neg = false;
    if (peek().k == TMINUS) {
      next();
      neg = true;
    } else if (peek().k == TPLUS) {
      next();
    }
    if (peek().k != TINT) fail("expected an integer exponent", peek().pos);
    STok t = next();
    if (!t.val.fits_slong_p() || t.val.get_si() > kMaxExponent)
      fail("exponent out of range", t.pos);
    long e = t.val.get_si();
    return neg ? -e : e;
  }

  Scalar power() {
    Scalar a = atom();
    if (peek().k == TPOW) {
      size_t pos = peek().pos;
      next();
      long e = exponent();
      if (e < 0 && a.is_zero()) fail("zero raised to a negative power", pos);
      return sc_pow(a, e);
    }
    return a;
  }

  Scalar atom() {
    switch (peek().k) {
      case TINT:
        return sc_int(f, next().val);
      case TQ:
        next();
        return sc_q(f);
      case TLP: {
        size_t pos = next().pos;
        Scalar v = expr();
        if (peek().k != TRP) fail("unbalanced '(' opened", pos);
        next();
        return v;
      }
      default:
        fail("expected a value", peek().pos);
    }
  }
};

} // namespace

Scalar parse_scalar(const Field& f, std::string_view text) {
  std::vector<STok> ts = lex_scalar(text);
  SParser p{f, ts};
  Scalar v = p.expr();
  if (p.peek().k != TEND)
    throw usage_error("unexpected trailing input at position " +
                      std::to_string(p.peek().pos));
  return v;
}

// ---------------------------------------------------------------------------
// Derived values

Scalar loop_value(const Field& f, long m) {
  if (m < 1) throw usage_error("symplectic rank must be >= 1");
  Scalar r = -sc_q(f, 2 * m + 1);
  Scalar q = sc_q(f, 1);
  return sc_one(f) + (r - r.inv()) / (q - sc_q(f, -1));
}

static mpq_class eval_poly_at(const LPoly<mpz_class>& a, const mpq_class& z) {
  mpq_class acc(0);
  for (const auto& [e, c] : a.t) acc += mpq_class(c) * mpq_pow(z, e);
  return acc;
}

static LPoly<Fp> map_poly_modp(const LPoly<mpz_class>& a, long long p) {
  LPoly<Fp> r;
  for (const auto& [e, c] : a.t) {
    Fp x = fp_from_mpz(c, p);
    if (x.v != 0) r.t.emplace_back(e, x);
  }
  return r;
}

Scalar specialize(const Scalar& s, const Field& target) {
  if (!s.valid()) throw std::logic_error("specialize of invalid scalar");
  if (s.field()->kind != FieldKind::GenericQ0)
    throw usage_error("only scalars over the generic field can be specialized (got " +
                      s.field()->label() + ")");
  switch (target->kind) {
    case FieldKind::GenericQ0:
      return Scalar::make(target, s.rz());
    case FieldKind::GenericModP: {
      LPoly<Fp> den = map_poly_modp(s.rz().den, target->p);
      if (den.is_zero())
        throw specialization_error("denominator " + poly_str(s.rz().den) +
                                   " vanishes mod " + std::to_string(target->p));
      return Scalar::make(target, ratf_make(map_poly_modp(s.rz().num, target->p), std::move(den)));
    }
    case FieldKind::SpecializedRational: {
      mpq_class den = eval_poly_at(s.rz().den, target->zeta);
      if (sgn(den) == 0)
        throw specialization_error("denominator " + poly_str(s.rz().den) +
                                   " vanishes at q = " + target->zeta.get_str());
      mpq_class r = eval_poly_at(s.rz().num, target->zeta) / den;
      return Scalar::make(target, std::move(r));
    }
  }
  throw std::logic_error("bad field kind");
}

} // namespace tanglerep
