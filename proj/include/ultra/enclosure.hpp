#pragma once

// Closed real intervals with outward-rounded MPFR endpoints.

#include <mpfr.h>

#include <optional>
#include <string>

#include "ultra/padic.hpp"

namespace ultra {

class Enclosure {
 public:
  explicit Enclosure(mpfr_prec_t precision);
  Enclosure(const Enclosure& other);
  Enclosure(Enclosure&& other) noexcept;
  Enclosure& operator=(Enclosure other) noexcept;
  ~Enclosure();

  static Enclosure of(const Rational& q, mpfr_prec_t precision);
  // e = exp(1).
  static Enclosure euler(mpfr_prec_t precision);

  mpfr_prec_t precision() const { return precision_; }
  const __mpfr_struct* lo() const { return lo_; }
  const __mpfr_struct* hi() const { return hi_; }

  bool strictly_positive() const;
  bool strictly_negative() const;
  bool contains_zero() const { return !strictly_positive() && !strictly_negative(); }

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  // Throws ultra::Error when b contains zero.
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b);
  // Integer power, k >= 0.
  Enclosure pow(unsigned long k) const;

  // Natural log; the caller checks strictly_positive() first (throws otherwise).
  Enclosure log() const;

  // floor/ceil of every point agree and the width is below 1.
  std::optional<Integer> certified_floor() const;
  std::optional<Integer> certified_ceil() const;
  // hi - lo rounded up, as a double (display only).
  double width() const;
  double midpoint() const;
  // "[lo, hi]" with `digits` significant digits.
  std::string str(int digits = 12) const;

 private:
  mpfr_prec_t precision_;
  mpfr_t lo_;
  mpfr_t hi_;
};

// log_p(x) = log(x) / log(p).
Enclosure log_base(const Enclosure& x, const Prime& p);

}  // namespace ultra
