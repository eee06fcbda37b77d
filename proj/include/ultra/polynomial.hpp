#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ultra/padic.hpp"

namespace ultra {

inline constexpr std::uint64_t kDefaultDegreeCap = std::uint64_t{1} << 16;

// Exact univariate polynomial over Q stored as exponent -> nonzero coefficient.
class SparsePoly {
 public:
  using Terms = std::map<std::uint64_t, Rational>;

  SparsePoly() = default;
  explicit SparsePoly(Terms terms);
  // c * x^e
  static SparsePoly monomial(const Rational& c, std::uint64_t e);
  static SparsePoly constant(const Rational& c) { return monomial(c, 0); }
  static SparsePoly x() { return monomial(Rational(1), 1); }
  // Builds a polynomial from dense coefficients (index = exponent).
  static SparsePoly from_dense(const std::vector<Rational>& coefficients);
  static SparsePoly from_dense(const std::vector<Integer>& coefficients);

  bool is_zero() const { return terms_.empty(); }
  // Degree of the zero polynomial is reported as 0; check is_zero() first.
  std::uint64_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  std::uint64_t lowest_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Rational coefficient(std::uint64_t e) const;
  const Rational& leading_coefficient() const;
  bool is_integral() const;
  bool is_monomial() const { return terms_.size() == 1; }

  Rational eval(const Rational& x) const;
  SparsePoly derivative() const;
  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& g);
  SparsePoly& operator-=(const SparsePoly& g);
  SparsePoly& operator*=(const Rational& c);

  friend SparsePoly operator+(SparsePoly f, const SparsePoly& g) { return f += g; }
  friend SparsePoly operator-(SparsePoly f, const SparsePoly& g) { return f -= g; }
  friend SparsePoly operator*(const SparsePoly& f, const SparsePoly& g);
  friend SparsePoly operator*(SparsePoly f, const Rational& c) { return f *= c; }
  friend bool operator==(const SparsePoly& f, const SparsePoly& g) { return f.terms_ == g.terms_; }
  friend bool operator!=(const SparsePoly& f, const SparsePoly& g) { return !(f == g); }
  // Total order (by exponent/coefficient sequence) for use as map keys.
  friend bool operator<(const SparsePoly& f, const SparsePoly& g);

  // Dense coefficient vector, index = exponent. Throws DegreeCapExceeded above `degree_cap`.
  std::vector<Rational> dense(std::uint64_t degree_cap = kDefaultDegreeCap) const;

 private:
  void add_term(std::uint64_t e, const Rational& c);
  Terms terms_;
};

enum class ArithOp { add, sub, mul };

// Exact ring arithmetic; multiplication checks the degree cap.
SparsePoly arith(const SparsePoly& f, const SparsePoly& g, ArithOp op,
                 std::uint64_t degree_cap = kDefaultDegreeCap);
SparsePoly multiply(const SparsePoly& f, const SparsePoly& g, std::uint64_t degree_cap = kDefaultDegreeCap);
SparsePoly power(const SparsePoly& f, std::uint64_t k, std::uint64_t degree_cap = kDefaultDegreeCap);

// Quotient and remainder over Q. Throws for g = 0.
std::pair<SparsePoly, SparsePoly> divide(const SparsePoly& f, const SparsePoly& g);
// Monic-free gcd over Q, normalized to a primitive integer polynomial with positive
// leading coefficient. gcd(0, 0) = 0.
SparsePoly gcd(const SparsePoly& f, const SparsePoly& g);

// Scales f by a positive rational to a primitive integer polynomial with positive
// leading coefficient. Zero stays zero.
SparsePoly primitive_part(const SparsePoly& f);

// f / gcd(f, f'), primitive with positive leading coefficient. Throws for f = 0.
SparsePoly squarefree_part(const SparsePoly& f);

// g(y) = f(c + y).
SparsePoly shift(const SparsePoly& f, const Rational& c);
// g(y) = f(c * y).
SparsePoly scale_argument(const SparsePoly& f, const Rational& c);
// x^deg f * f(1/x).
SparsePoly reverse(const SparsePoly& f);

// Writes f = x^k g with g(0) != 0 and returns (g, k). Throws for f = 0.
std::pair<SparsePoly, std::uint64_t> strip_zero_root(const SparsePoly& f);

Rational resultant(const SparsePoly& f, const SparsePoly& g);
// Throws for constant f.
Rational discriminant(const SparsePoly& f);

// A real interval with independently open or closed ends.
struct Interval {
  Rational lo;
  Rational hi;
  bool lo_open = true;
  bool hi_open = true;

  static Interval open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), true, true}; }
  static Interval closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), false, false}; }
};

// Number of distinct real roots of f in the interval. Throws for f = 0.
std::size_t sturm_count(const SparsePoly& f, const Interval& interval);
// Number of distinct real roots of f over all of R. Throws for f = 0.
std::size_t real_root_count(const SparsePoly& f);
// Strict bound: every complex root has absolute value < cauchy_bound(f).
Rational cauchy_bound(const SparsePoly& f);

// All rational roots, ascending. Throws for f = 0.
std::vector<Rational> rational_roots(const SparsePoly& f);

namespace detail {
// The two routes behind rational_roots, exposed for cross-checking.
std::vector<Rational> rational_roots_by_divisors(const SparsePoly& f);
std::vector<Rational> rational_roots_by_isolation(const SparsePoly& f);
// Disjoint intervals, each holding exactly one real root of squarefree_part(f);
// degenerate intervals (lo == hi) are exact roots.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const SparsePoly& f);
// The rational with the smallest denominator in [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);
}  // namespace detail

// ---- text and JSON forms --------------------------------------------------

// Parses "3*x^5 - 2*x + 7" style text (integer or a/b coefficients, variable x).
SparsePoly parse_poly(std::string_view text);
std::string to_string(const SparsePoly& f);

}  // namespace ultra
