#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ultra {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "a" or "a/b" (decimal, optional sign) into a canonical rational.
Rational parse_rational(std::string_view text);
// Canonical "a" or "a/b" form.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

// A prime number; primality is checked on construction.
class Prime {
 public:
  explicit Prime(unsigned long p);

  unsigned long value() const { return p_; }
  const Integer& integer() const { return z_; }

  friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }

 private:
  unsigned long p_;
  Integer z_;
};

bool is_prime(unsigned long n);

// A p-adic valuation: an exact rational or +infinity.
class Valuation {
 public:
  Valuation(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit from finite values
  Valuation(long value) : value_(Rational(value)) {}        // NOLINT
  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const { return !value_.has_value(); }
  // Throws ultra::Error when infinite.
  const Rational& value() const;

  friend Valuation operator+(const Valuation& a, const Valuation& b);
  friend bool operator==(const Valuation& a, const Valuation& b);
  friend bool operator<(const Valuation& a, const Valuation& b);
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

  std::string str() const;

 private:
  Valuation() = default;
  std::optional<Rational> value_;
};

Valuation min(const Valuation& a, const Valuation& b);

// ord_p(n); +infinity for n = 0.
Valuation ord(const Integer& n, const Prime& p);
// ord_p(num) - ord_p(den); +infinity for q = 0.
Valuation ord(const Rational& q, const Prime& p);
// Finite valuation of a nonzero integer as a machine integer.
long ord_nonzero(const Integer& n, const Prime& p);
long ord_nonzero(const Rational& q, const Prime& p);

// p^(-ord_p q); 0 for q = 0.
Rational padic_norm(const Rational& q, const Prime& p);

// A finite window of a p-adic digit expansion.
struct DigitString {
  bool negative = false;
  // Most significant first.
  std::vector<unsigned long> digits;
  // Number of digits after the radix point.
  std::size_t fractional = 0;
  unsigned long base = 2;

  std::string str() const;
  // Reconstructs the represented rational (sign applied).
  Rational value() const;
};

// The n least significant p-adic digits of |q| (the sign is carried as a flag).
// When q has k > 0 fractional digits and n <= k, n is raised to k + 1 so the
// window always reaches the units digit. Throws ultra::Error for n = 0.
DigitString digits(const Rational& q, const Prime& p, std::size_t n);

}  // namespace ultra
