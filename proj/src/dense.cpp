#include "dense.hpp"

#include <utility>

#include "ultra/error.hpp"

namespace ultra::dense {

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive(ZPoly a) {
  trim(a);
  if (a.empty()) return a;
  Integer g = content(a);
  if (a.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return a;
}

ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(d);
  return d;
}

ZPoly from_sparse(const SparsePoly& f, std::uint64_t degree_cap) {
  if (f.is_zero()) return {};
  if (f.degree() > degree_cap) throw DegreeCapExceeded(f.degree(), degree_cap);
  Integer den = 1;
  for (const auto& [e, c] : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly a(f.degree() + 1);
  for (const auto& [e, c] : f.terms()) {
    Integer scaled = den / Integer(c.get_den());
    a[e] = Integer(c.get_num()) * scaled;
  }
  return primitive(std::move(a));
}

SparsePoly to_sparse(const ZPoly& a) {
  SparsePoly::Terms terms;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) terms.emplace(i, Rational(a[i]));
  }
  return SparsePoly(std::move(terms));
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(r);
  return r;
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw Error("pseudo_remainder: division by zero polynomial");
  ZPoly r = a;
  trim(r);
  const long db = degree(b);
  const Integer& lb = lead(b);
  long dr = degree(r);
  if (dr < db) return r;
  long steps = dr - db + 1;
  while (!r.empty() && degree(r) >= db) {
    dr = degree(r);
    Integer lr = r.back();
    for (auto& c : r) c *= lb;
    const long offset = dr - db;
    for (long j = 0; j <= db; ++j) {
      mpz_submul(r[j + offset].get_mpz_t(), lr.get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    --steps;
  }
  // Complete the lc(b)^(deg a - deg b + 1) scaling when the degree dropped by more than one.
  if (steps > 0 && !r.empty()) {
    Integer factor;
    mpz_pow_ui(factor.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
    for (auto& c : r) c *= factor;
  }
  return r;
}

ZPoly exact_quotient(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw Error("exact_quotient: division by zero polynomial");
  ZPoly r = a;
  trim(r);
  if (r.empty()) return {};
  const long db = degree(b);
  if (degree(r) < db) throw InvariantViolation("exact_quotient: division is not exact");
  ZPoly q(static_cast<std::size_t>(degree(r) - db + 1));
  while (!r.empty() && degree(r) >= db) {
    const long offset = degree(r) - db;
    if (!mpz_divisible_p(r.back().get_mpz_t(), lead(b).get_mpz_t())) {
      throw InvariantViolation("exact_quotient: division is not exact");
    }
    Integer t;
    mpz_divexact(t.get_mpz_t(), r.back().get_mpz_t(), lead(b).get_mpz_t());
    for (long j = 0; j <= db; ++j) mpz_submul(r[j + offset].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
    q[offset] = t;
    trim(r);
  }
  if (!r.empty()) throw InvariantViolation("exact_quotient: division is not exact");
  trim(q);
  return q;
}

ZPoly gcd(ZPoly a, ZPoly b) {
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = primitive(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return primitive(std::move(a));
}

ZPoly squarefree(const ZPoly& a) {
  ZPoly p = primitive(a);
  if (degree(p) <= 0) return p;
  ZPoly g = gcd(p, derivative(p));
  if (degree(g) == 0) return p;
  return primitive(exact_quotient(p, g));
}

ZPoly taylor_shift(const ZPoly& a, const Integer& c) {
  ZPoly r = a;
  if (c == 0 || r.size() <= 1) return r;
  const long n = degree(r);
  // Horner-style synthetic division, O(n^2).
  for (long i = 0; i < n; ++i) {
    for (long j = n - 1; j >= i; --j) mpz_addmul(r[j].get_mpz_t(), c.get_mpz_t(), r[j + 1].get_mpz_t());
  }
  return r;
}

int sign_at(const ZPoly& a, const Rational& x) {
  if (a.empty()) return 0;
  // sum a_i num^i den^(n-i); den > 0 so the sign matches a(x).
  const Integer num(x.get_num());
  const Integer den(x.get_den());
  Integer acc = a.back();
  Integer den_pow = 1;
  for (long i = degree(a) - 1; i >= 0; --i) {
    acc *= num;
    den_pow *= den;
    mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), den_pow.get_mpz_t());
  }
  return sgn(acc);
}

Integer eval(const ZPoly& a, const Integer& x) {
  Integer acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

unsigned long eval_mod(const std::vector<unsigned long>& coeffs_mod, unsigned long x, unsigned long m) {
  unsigned __int128 acc = 0;
  for (auto it = coeffs_mod.rbegin(); it != coeffs_mod.rend(); ++it) {
    acc = (acc * x + *it) % m;
  }
  return static_cast<unsigned long>(acc);
}

}  // namespace ultra::dense
