#include "ultra/padic.hpp"

#include <algorithm>
#include <cctype>

#include "ultra/error.hpp"

namespace ultra {

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) return false;
  }
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return out.set_str(s, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) throw ParseError("invalid rational '" + std::string(text) + "'", 0);
  } else {
    if (!parse_integer(text.substr(0, slash), num)) {
      throw ParseError("invalid numerator in '" + std::string(text) + "'", 0);
    }
    auto den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text[0] == '+' || den_text[0] == '-' || !parse_integer(den_text, den)) {
      throw ParseError("invalid denominator in '" + std::string(text) + "'", slash + 1);
    }
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& n) { return n.get_str(10); }

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (unsigned long d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(unsigned long p) : p_(p), z_(p) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
}

const Rational& Valuation::value() const {
  if (!value_) throw Error("infinite valuation has no finite value");
  return *value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
  return Valuation(Rational(*a.value_ + *b.value_));
}

bool operator==(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return *a.value_ == *b.value_;
}

bool operator<(const Valuation& a, const Valuation& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return *a.value_ < *b.value_;
}

std::string Valuation::str() const { return is_infinite() ? "inf" : to_string(*value_); }

Valuation min(const Valuation& a, const Valuation& b) { return b < a ? b : a; }

long ord_nonzero(const Integer& n, const Prime& p) {
  if (n == 0) throw Error("ord_nonzero called with zero");
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.integer().get_mpz_t()));
}

long ord_nonzero(const Rational& q, const Prime& p) {
  return ord_nonzero(Integer(q.get_num()), p) - ord_nonzero(Integer(q.get_den()), p);
}

Valuation ord(const Integer& n, const Prime& p) {
  if (n == 0) return Valuation::infinity();
  return Valuation(ord_nonzero(n, p));
}

Valuation ord(const Rational& q, const Prime& p) {
  if (q == 0) return Valuation::infinity();
  return Valuation(ord_nonzero(q, p));
}

Rational padic_norm(const Rational& q, const Prime& p) {
  if (q == 0) return Rational(0);
  long v = ord_nonzero(q, p);
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), p.integer().get_mpz_t(), static_cast<unsigned long>(v < 0 ? -v : v));
  Rational result = v < 0 ? Rational(power) : Rational(Integer(1), power);
  result.canonicalize();
  return result;
}

DigitString digits(const Rational& q, const Prime& p, std::size_t n) {
  if (n == 0) throw Error("digits: window length must be positive");
  DigitString out;
  out.base = p.value();
  if (q == 0) {
    out.digits = {0};
    return out;
  }
  Rational magnitude = abs(q);
  out.negative = q < 0;
  long v = ord_nonzero(magnitude, p);
  std::size_t fractional = v < 0 ? static_cast<std::size_t>(-v) : 0;
  if (fractional > 0 && n <= fractional) n = fractional + 1;

  // w = |q| * p^k has a denominator coprime to p; reduce it modulo p^n.
  Integer shift;
  mpz_pow_ui(shift.get_mpz_t(), p.integer().get_mpz_t(), fractional);
  Rational scaled = magnitude * shift;
  scaled.canonicalize();
  Integer modulus;
  mpz_pow_ui(modulus.get_mpz_t(), p.integer().get_mpz_t(), n);
  Integer inverse;
  if (mpz_invert(inverse.get_mpz_t(), scaled.get_den_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw InvariantViolation("digits: denominator not invertible after scaling");
  }
  Integer residue = (Integer(scaled.get_num()) * inverse) % modulus;
  if (residue < 0) residue += modulus;

  std::vector<unsigned long> lsb_first;
  lsb_first.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer digit = residue % p.integer();
    lsb_first.push_back(digit.get_ui());
    residue /= p.integer();
  }
  // Strip leading zeros above the units digit.
  while (lsb_first.size() > fractional + 1 && lsb_first.back() == 0) lsb_first.pop_back();
  out.digits.assign(lsb_first.rbegin(), lsb_first.rend());
  out.fractional = fractional;
  return out;
}

std::string DigitString::str() const {
  auto symbol = [this](unsigned long d) -> std::string {
    if (base <= 10) return std::string(1, static_cast<char>('0' + d));
    if (base <= 36) return std::string(1, static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10)));
    return "(" + std::to_string(d) + ")";
  };
  std::string s = negative ? "-" : "";
  std::size_t integral = digits.size() - fractional;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i == integral) s += '.';
    s += symbol(digits[i]);
  }
  return s;
}

Rational DigitString::value() const {
  Integer acc = 0;
  for (unsigned long d : digits) acc = acc * base + d;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), base, fractional);
  Rational r(acc, scale);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace ultra
