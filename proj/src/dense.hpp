#pragma once

// Dense integer polynomial helpers (index = exponent, no trailing zeros).
// Internal to the library; the public surface is SparsePoly.

#include <cstdint>
#include <vector>

#include "ultra/polynomial.hpp"

namespace ultra::dense {

using ZPoly = std::vector<Integer>;

void trim(ZPoly& a);
inline bool is_zero(const ZPoly& a) { return a.empty(); }
inline long degree(const ZPoly& a) { return static_cast<long>(a.size()) - 1; }
inline const Integer& lead(const ZPoly& a) { return a.back(); }

Integer content(const ZPoly& a);
// Divides by the content and makes the leading coefficient positive.
ZPoly primitive(ZPoly a);
ZPoly derivative(const ZPoly& a);

// Scales f by a positive rational so it is a primitive integer polynomial.
ZPoly from_sparse(const SparsePoly& f, std::uint64_t degree_cap = kDefaultDegreeCap);
SparsePoly to_sparse(const ZPoly& a);

ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
// lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b);
// Exact quotient a / b over Z; throws InvariantViolation if the division is not exact.
ZPoly exact_quotient(const ZPoly& a, const ZPoly& b);
// Primitive gcd with positive leading coefficient.
ZPoly gcd(ZPoly a, ZPoly b);
ZPoly squarefree(const ZPoly& a);

// a(c + y).
ZPoly taylor_shift(const ZPoly& a, const Integer& c);

// Sign of a(num/den), den > 0, computed without fractions.
int sign_at(const ZPoly& a, const Rational& x);
Integer eval(const ZPoly& a, const Integer& x);
// Value mod m in [0, m).
unsigned long eval_mod(const std::vector<unsigned long>& coeffs_mod, unsigned long x, unsigned long m);

}  // namespace ultra::dense
