#pragma once

// Reference implementations used only by the tests. They are written without
// calling the library routine they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "ultra/circuit.hpp"
#include "ultra/newton.hpp"
#include "ultra/padic.hpp"
#include "ultra/polynomial.hpp"

namespace oracle {

using ultra::Integer;
using ultra::Rational;
using ultra::SparsePoly;

// ord_p of a nonzero integer by repeated division.
inline long ord_int(Integer n, unsigned long p) {
  long k = 0;
  n = abs(n);
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

inline long ord_rat(const Rational& q, unsigned long p) { return ord_int(q.get_num(), p) - ord_int(q.get_den(), p); }

struct Pt {
  std::uint64_t a;
  Rational v;
};

// Lower-hull vertices by brute force: a point survives unless it is matched or beaten
// by another point at the same abscissa, or lies on or above a chord between two others.
inline std::vector<Pt> lower_hull_vertices(const std::vector<Pt>& pts) {
  std::vector<Pt> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < pts.size() && keep; ++j) {
      if (j == i) continue;
      if (pts[j].a == pts[i].a && (pts[j].v < pts[i].v || (pts[j].v == pts[i].v && j < i))) keep = false;
      for (std::size_t k = 0; k < pts.size() && keep; ++k) {
        if (!(pts[j].a < pts[i].a && pts[i].a < pts[k].a)) continue;
        const Rational t(Integer(pts[i].a - pts[j].a), Integer(pts[k].a - pts[j].a));
        const Rational chord = pts[j].v + (pts[k].v - pts[j].v) * t;
        if (chord <= pts[i].v) keep = false;
      }
    }
    if (keep) out.push_back(pts[i]);
  }
  std::sort(out.begin(), out.end(), [](const Pt& x, const Pt& y) { return x.a < y.a; });
  return out;
}

inline std::vector<Pt> coefficient_points(const SparsePoly& f, unsigned long p) {
  std::vector<Pt> pts;
  for (const auto& [e, c] : f.terms()) pts.push_back({e, Rational(ord_rat(c, p))});
  return pts;
}

// f(x) for integer x, with f given by integer coefficients.
inline Integer eval_int(const std::vector<Integer>& coeffs, const Integer& x) {
  Integer acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline std::vector<Integer> derivative(const std::vector<Integer>& c) {
  std::vector<Integer> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<unsigned long>(i));
  return d;
}

// Distinct roots in Z_p of a primitive squarefree integer polynomial, by lifting
// residues level by level to depth K and reading off Hensel disks there. A residue x
// mod p^K with e = ord f'(x) and ord f(x) >= 2e + 1 carries exactly one root, in the
// disk x + p^(e+1) Z_p; every root is caught once K >= 2 max ord f'(root) + 1.
inline std::size_t count_zp_by_residues(const std::vector<Integer>& f, unsigned long p, unsigned K) {
  const auto df = derivative(f);
  Integer mod = 1;
  std::vector<Integer> level{Integer(0)};
  for (unsigned k = 1; k <= K; ++k) {
    const Integer next_mod = mod * p;
    std::vector<Integer> next;
    for (const auto& x : level) {
      for (unsigned long t = 0; t < p; ++t) {
        const Integer y = x + mod * t;
        if (eval_int(f, y) % next_mod == 0) next.push_back(y);
      }
    }
    level = std::move(next);
    mod = next_mod;
  }
  std::set<std::pair<long, Integer>> disks;
  for (const auto& x : level) {
    const Integer d = eval_int(df, x);
    if (d == 0) continue;
    const long e = ord_int(d, p);
    const Integer v = eval_int(f, x);
    if (v != 0 && ord_int(v, p) < 2 * e + 1) continue;
    Integer pe = 1;
    for (long i = 0; i <= e; ++i) pe *= p;
    Integer r = x % pe;
    disks.insert({e, r});
  }
  return disks.size();
}

inline std::vector<Integer> integer_coefficients(const SparsePoly& f) {
  const SparsePoly g = ultra::primitive_part(f);
  std::vector<Integer> c(g.degree() + 1, Integer(0));
  for (const auto& [e, q] : g.terms()) c[e] = q.get_num();
  return c;
}

// Expansion of gate j (1-based) of a circuit, or of x for j = 0.
inline SparsePoly gate_poly(const ultra::AdditiveCircuit& c, std::size_t j) {
  ultra::AdditiveCircuit prefix;
  prefix.gates.assign(c.gates.begin(), c.gates.begin() + static_cast<long>(j));
  prefix.final.c = 1;
  prefix.final.m.assign(j + 1, 0);
  prefix.final.m[j] = 1;
  return ultra::circuit_expand(prefix);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin() { return range(0, 1) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(range(0, static_cast<long>(v.size()) - 1))];
  }

  // Random nonzero integer polynomial of degree exactly d with |coefficients| <= bound.
  SparsePoly poly(unsigned d, long bound) {
    std::vector<Integer> c(d + 1);
    for (auto& x : c) x = range(-bound, bound);
    while (c[d] == 0) c[d] = range(-bound, bound);
    return SparsePoly::from_dense(c);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace oracle
