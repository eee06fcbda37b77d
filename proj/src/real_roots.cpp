// Sturm sequences, real root isolation and rational roots.

#include <algorithm>
#include <functional>

#include "dense.hpp"
#include "ultra/error.hpp"
#include "ultra/polynomial.hpp"

namespace ultra {

namespace {

using dense::ZPoly;

// Sturm chain of a squarefree primitive polynomial, built from negated pseudo-remainders
// with positive content stripped.
std::vector<ZPoly> sturm_chain(const ZPoly& g) {
  std::vector<ZPoly> chain;
  chain.push_back(g);
  if (dense::degree(g) <= 0) return chain;
  chain.push_back(dense::primitive(dense::derivative(g)));
  while (dense::degree(chain.back()) > 0) {
    const ZPoly& a = chain[chain.size() - 2];
    const ZPoly& b = chain.back();
    ZPoly r = dense::pseudo_remainder(a, b);
    if (r.empty()) break;
    // prem = lc(b)^(delta+1) * rem, so -rem has the sign of -prem * sign(lc(b))^(delta+1).
    const long delta = dense::degree(a) - dense::degree(b);
    const bool flip = !(sgn(dense::lead(b)) < 0 && (delta + 1) % 2 == 1);
    Integer c = dense::content(r);
    for (auto& v : r) {
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
      if (flip) v = -v;
    }
    chain.push_back(std::move(r));
  }
  return chain;
}

std::size_t variations(const std::vector<int>& signs) {
  std::size_t count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::size_t variations_at(const std::vector<ZPoly>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(dense::sign_at(p, x));
  return variations(signs);
}

std::size_t variations_at_infinity(const std::vector<ZPoly>& chain, bool positive) {
  std::vector<int> signs;
  for (const auto& p : chain) {
    int s = sgn(dense::lead(p));
    if (!positive && dense::degree(p) % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

ZPoly squarefree_dense(const SparsePoly& f) {
  if (f.is_zero()) throw Error("zero polynomial has no finite root count");
  return dense::squarefree(dense::from_sparse(f, UINT64_MAX));
}

Integer ceil_abs_bound(const ZPoly& g) {
  // 1 + max |a_i / a_n|, rounded up.
  Rational best = 0;
  const Integer lead_abs = abs(dense::lead(g));
  for (long i = 0; i < dense::degree(g); ++i) {
    Rational r(abs(g[i]), lead_abs);
    r.canonicalize();
    if (r > best) best = r;
  }
  Rational bound = best + 1;
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  return c + 1;
}

}  // namespace

Rational cauchy_bound(const SparsePoly& f) {
  if (f.is_zero()) throw Error("cauchy_bound: zero polynomial");
  ZPoly g = dense::from_sparse(f, UINT64_MAX);
  if (dense::degree(g) == 0) return Rational(1);
  return Rational(ceil_abs_bound(g));
}

std::size_t sturm_count(const SparsePoly& f, const Interval& interval) {
  ZPoly g = squarefree_dense(f);
  if (interval.hi < interval.lo) throw Error("sturm_count: empty interval (lo > hi)");
  if (dense::degree(g) == 0) return 0;
  const bool lo_root = dense::sign_at(g, interval.lo) == 0;
  const bool hi_root = dense::sign_at(g, interval.hi) == 0;
  if (interval.lo == interval.hi) {
    return (!interval.lo_open && !interval.hi_open && lo_root) ? 1 : 0;
  }
  auto chain = sturm_chain(g);
  // V(a) - V(b) counts the roots in (a, b] for squarefree g.
  std::size_t count = variations_at(chain, interval.lo) - variations_at(chain, interval.hi);
  if (interval.hi_open && hi_root) --count;
  if (!interval.lo_open && lo_root) ++count;
  return count;
}

std::size_t real_root_count(const SparsePoly& f) {
  ZPoly g = squarefree_dense(f);
  if (dense::degree(g) == 0) return 0;
  auto chain = sturm_chain(g);
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

namespace detail {

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const SparsePoly& f) {
  ZPoly g = squarefree_dense(f);
  std::vector<std::pair<Rational, Rational>> out;
  if (dense::degree(g) == 0) return out;
  auto chain = sturm_chain(g);
  const Rational bound(ceil_abs_bound(g));
  // Work list of half-open intervals (a, b] with their root counts.
  std::function<void(const Rational&, const Rational&, std::size_t, std::size_t)> split =
      [&](const Rational& a, const Rational& b, std::size_t va, std::size_t vb) {
        const std::size_t count = va - vb;
        if (count == 0) return;
        if (count == 1) {
          if (dense::sign_at(g, b) == 0) {
            out.emplace_back(b, b);
          } else {
            out.emplace_back(a, b);
          }
          return;
        }
        Rational mid = (a + b) / 2;
        mid.canonicalize();
        const std::size_t vm = variations_at(chain, mid);
        split(a, mid, va, vm);
        split(mid, b, vm, vb);
      };
  const Rational lo = -bound;
  split(lo, bound, variations_at(chain, lo), variations_at(chain, bound));
  return out;
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw Error("simplest_rational_between: empty interval");
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_rational_between(-hi, -lo);
  Integer ceil_lo;
  mpz_cdiv_q(ceil_lo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(ceil_lo) <= hi) return Rational(ceil_lo);
  Integer floor_lo;
  mpz_fdiv_q(floor_lo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  // lo and hi share the integer part n; recurse on the reciprocals of the fractional parts.
  Rational n(floor_lo);
  Rational inner = simplest_rational_between(1 / (hi - n), 1 / (lo - n));
  Rational result = n + 1 / inner;
  result.canonicalize();
  return result;
}

std::vector<Rational> rational_roots_by_isolation(const SparsePoly& f) {
  if (f.is_zero()) throw Error("rational_roots: zero polynomial");
  auto [stripped, k] = strip_zero_root(f);
  std::vector<Rational> roots;
  if (k > 0) roots.emplace_back(0);
  ZPoly g = dense::squarefree(dense::from_sparse(stripped, UINT64_MAX));
  if (dense::degree(g) > 0) {
    // Distinct fractions with denominators <= L differ by at least 1/L^2, so an
    // isolating interval narrower than that holds at most one candidate.
    const Integer lead_abs = abs(dense::lead(g));
    const Rational width_limit(Integer(1), lead_abs * lead_abs);
    for (auto [a, b] : isolate_real_roots(dense::to_sparse(g))) {
      if (a == b) {
        roots.push_back(a);
        continue;
      }
      const int sign_b = dense::sign_at(g, b);
      bool exact = false;
      while (b - a >= width_limit) {
        Rational mid = (a + b) / 2;
        mid.canonicalize();
        const int s = dense::sign_at(g, mid);
        if (s == 0) {
          roots.push_back(mid);
          exact = true;
          break;
        }
        if (s == sign_b) {
          b = mid;
        } else {
          a = mid;
        }
      }
      if (exact) continue;
      Rational candidate = simplest_rational_between(a, b);
      if (dense::sign_at(g, candidate) == 0) roots.push_back(candidate);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// Positive divisors of |n| by trial division; empty when |n| is too large to factor cheaply.
std::vector<Integer> small_divisors(const Integer& n, std::size_t limit) {
  Integer m = abs(n);
  if (m == 0 || !m.fits_ulong_p() || m > Integer("1000000000000")) return {};
  unsigned long v = m.get_ui();
  std::vector<std::pair<unsigned long, unsigned>> factors;
  for (unsigned long d = 2; d <= v / d; ++d) {
    unsigned e = 0;
    while (v % d == 0) {
      v /= d;
      ++e;
    }
    if (e > 0) factors.emplace_back(d, e);
  }
  if (v > 1) factors.emplace_back(v, 1);
  std::vector<Integer> divisors{Integer(1)};
  for (auto [prime, e] : factors) {
    const std::size_t existing = divisors.size();
    Integer power = 1;
    for (unsigned i = 1; i <= e; ++i) {
      power *= prime;
      for (std::size_t j = 0; j < existing; ++j) divisors.push_back(divisors[j] * power);
    }
    if (divisors.size() > limit) return {};
  }
  return divisors;
}

constexpr std::size_t kDivisorLimit = 20000;

std::vector<Rational> rational_roots_by_divisors(const SparsePoly& f) {
  if (f.is_zero()) throw Error("rational_roots: zero polynomial");
  auto [stripped, k] = strip_zero_root(f);
  std::vector<Rational> roots;
  if (k > 0) roots.emplace_back(0);
  ZPoly g = dense::from_sparse(stripped, UINT64_MAX);
  if (dense::degree(g) > 0) {
    auto numerators = small_divisors(g.front(), kDivisorLimit);
    auto denominators = small_divisors(dense::lead(g), kDivisorLimit);
    if (numerators.empty() || denominators.empty()) {
      throw Error("rational_roots_by_divisors: coefficients too large to enumerate divisors");
    }
    for (const auto& a : numerators) {
      for (const auto& b : denominators) {
        if (gcd(a, b) != 1) continue;
        for (int sign : {1, -1}) {
          Rational candidate(a * sign, b);
          candidate.canonicalize();
          if (dense::sign_at(g, candidate) == 0) roots.push_back(candidate);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace detail

std::vector<Rational> rational_roots(const SparsePoly& f) {
  if (f.is_zero()) throw Error("rational_roots: zero polynomial");
  auto [stripped, k] = strip_zero_root(f);
  (void)k;
  ZPoly g = dense::from_sparse(stripped, UINT64_MAX);
  if (dense::degree(g) <= 0) return detail::rational_roots_by_divisors(f);
  auto numerators = detail::small_divisors(g.front(), detail::kDivisorLimit);
  auto denominators = detail::small_divisors(dense::lead(g), detail::kDivisorLimit);
  if (!numerators.empty() && !denominators.empty() &&
      numerators.size() * denominators.size() <= detail::kDivisorLimit) {
    return detail::rational_roots_by_divisors(f);
  }
  return detail::rational_roots_by_isolation(f);
}

}  // namespace ultra
