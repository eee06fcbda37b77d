#include "ultra/enclosure.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <vector>

#include "ultra/error.hpp"

namespace ultra {

Enclosure::Enclosure(mpfr_prec_t precision) : precision_(precision) {
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Enclosure::Enclosure(const Enclosure& other) : precision_(other.precision_) {
  mpfr_init2(lo_, precision_);
  mpfr_init2(hi_, precision_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Enclosure::Enclosure(Enclosure&& other) noexcept : Enclosure(other.precision_) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Enclosure& Enclosure::operator=(Enclosure other) noexcept {
  std::swap(precision_, other.precision_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Enclosure::~Enclosure() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Enclosure Enclosure::of(const Rational& q, mpfr_prec_t precision) {
  Enclosure r(precision);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Enclosure Enclosure::euler(mpfr_prec_t precision) {
  Enclosure one = of(Rational(1), precision);
  Enclosure r(precision);
  mpfr_exp(r.lo_, one.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, one.hi_, MPFR_RNDU);
  return r;
}

bool Enclosure::strictly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Enclosure::strictly_negative() const { return mpfr_sgn(hi_) < 0; }

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  Enclosure r(std::max(a.precision_, b.precision_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  Enclosure r(std::max(a.precision_, b.precision_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  const mpfr_prec_t prec = std::max(a.precision_, b.precision_);
  Enclosure r(prec);
  const std::array<std::pair<const __mpfr_struct*, const __mpfr_struct*>, 4> corners{
      {{a.lo_, b.lo_}, {a.lo_, b.hi_}, {a.hi_, b.lo_}, {a.hi_, b.hi_}}};
  mpfr_t t;
  mpfr_init2(t, prec);
  bool first = true;
  for (const auto& [x, y] : corners) {
    mpfr_mul(t, x, y, MPFR_RNDD);
    if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, x, y, MPFR_RNDU);
    if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
    first = false;
  }
  mpfr_clear(t);
  return r;
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (b.contains_zero()) throw Error("interval division by an enclosure containing zero");
  const mpfr_prec_t prec = std::max(a.precision_, b.precision_);
  Enclosure inv(prec);
  // 1/b is decreasing on either sign.
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

Enclosure Enclosure::pow(unsigned long k) const {
  Enclosure r = of(Rational(1), precision_);
  for (unsigned long i = 0; i < k; ++i) r = r * *this;
  return r;
}

Enclosure Enclosure::log() const {
  if (!strictly_positive()) throw Error("logarithm of an enclosure that is not strictly positive");
  Enclosure r(precision_);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

namespace {

Integer to_integer(const __mpfr_struct* x) {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), x, MPFR_RNDZ);
  return z;
}

}  // namespace

std::optional<Integer> Enclosure::certified_floor() const {
  if (width() >= 1.0) return std::nullopt;
  mpfr_t a, b;
  mpfr_init2(a, precision_);
  mpfr_init2(b, precision_);
  mpfr_floor(a, lo_);
  mpfr_floor(b, hi_);
  std::optional<Integer> out;
  if (mpfr_equal_p(a, b)) out = to_integer(a);
  mpfr_clear(a);
  mpfr_clear(b);
  return out;
}

std::optional<Integer> Enclosure::certified_ceil() const {
  if (width() >= 1.0) return std::nullopt;
  mpfr_t a, b;
  mpfr_init2(a, precision_);
  mpfr_init2(b, precision_);
  mpfr_ceil(a, lo_);
  mpfr_ceil(b, hi_);
  std::optional<Integer> out;
  if (mpfr_equal_p(a, b)) out = to_integer(a);
  mpfr_clear(a);
  mpfr_clear(b);
  return out;
}

double Enclosure::width() const {
  mpfr_t w;
  mpfr_init2(w, precision_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  const double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

double Enclosure::midpoint() const {
  mpfr_t m;
  mpfr_init2(m, precision_ + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  const double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

std::string Enclosure::str(int digits) const {
  std::vector<char> a(64 + digits);
  std::vector<char> b(64 + digits);
  mpfr_snprintf(a.data(), a.size(), "%.*RDg", digits, lo_);
  mpfr_snprintf(b.data(), b.size(), "%.*RUg", digits, hi_);
  return std::string("[") + a.data() + ", " + b.data() + "]";
}

Enclosure log_base(const Enclosure& x, const Prime& p) {
  return x.log() / Enclosure::of(Rational(p.integer()), x.precision()).log();
}

}  // namespace ultra
