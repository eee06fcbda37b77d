// Root counting in Z_p and Q_p by residue refinement.

#include <optional>

#include "dense.hpp"
#include "ultra/error.hpp"
#include "ultra/newton.hpp"

namespace ultra {

namespace {

using dense::ZPoly;

std::vector<unsigned long> reduce_mod(const ZPoly& h, unsigned long p) {
  std::vector<unsigned long> out(h.size());
  Integer r;
  for (std::size_t i = 0; i < h.size(); ++i) {
    mpz_fdiv_r_ui(r.get_mpz_t(), h[i].get_mpz_t(), p);
    out[i] = r.get_ui();
  }
  return out;
}

long min_ord(const ZPoly& h, const Prime& p) {
  long m = -1;
  for (const auto& c : h) {
    if (c == 0) continue;
    const long o = ord_nonzero(c, p);
    if (m < 0 || o < m) m = o;
  }
  return m;
}

class ZpCounter {
 public:
  ZpCounter(ZPoly g, const Prime& p) : g_(std::move(g)), p_(p) {}

  std::size_t count(bool units_only) { return count(g_, 0, units_only); }

 private:
  std::size_t count(const ZPoly& h, long depth, bool units_only) {
    if (dense::degree(h) <= 0) return 0;
    if (depth > 1) check_depth(depth);
    const unsigned long p = p_.value();
    const auto hm = reduce_mod(h, p);
    const auto dm = reduce_mod(dense::derivative(h), p);
    std::size_t total = 0;
    for (unsigned long r = units_only ? 1 : 0; r < p; ++r) {
      if (dense::eval_mod(hm, r, p) != 0) continue;
      if (dense::eval_mod(dm, r, p) != 0) {
        ++total;
        continue;
      }
      // h(r + p y) / p^m keeps exactly the roots in r + pZ_p.
      ZPoly next = dense::taylor_shift(h, Integer(r));
      Integer scale = 1;
      for (auto& c : next) {
        c *= scale;
        scale *= p_.integer();
      }
      const long m = min_ord(next, p_);
      if (m < 0) throw InvariantViolation("residue refinement hit the zero polynomial");
      Integer pm;
      mpz_pow_ui(pm.get_mpz_t(), p_.integer().get_mpz_t(), static_cast<unsigned long>(m));
      for (auto& c : next) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pm.get_mpz_t());
      total += count(next, depth + 1, false);
    }
    return total;
  }

  void check_depth(long depth) {
    if (!limit_) {
      const Rational disc = discriminant(dense::to_sparse(g_));
      if (disc == 0) throw InvariantViolation("residue refinement on a polynomial with repeated roots");
      limit_ = 2 * ord_nonzero(disc, p_) + 1;
    }
    if (depth > *limit_) {
      throw InvariantViolation("residue refinement exceeded its discriminant-certified depth " +
                               std::to_string(*limit_));
    }
  }

  ZPoly g_;
  const Prime& p_;
  std::optional<long> limit_;
};

ZPoly squarefree_integral(const SparsePoly& f) {
  return dense::squarefree(dense::from_sparse(f, UINT64_MAX));
}

Rational p_power(const Prime& p, long v) {
  Integer pv;
  mpz_pow_ui(pv.get_mpz_t(), p.integer().get_mpz_t(), static_cast<unsigned long>(v < 0 ? -v : v));
  return v < 0 ? Rational(Integer(1), pv) : Rational(pv);
}

}  // namespace

std::size_t count_roots_zp(const SparsePoly& f, const Prime& p) {
  if (f.is_zero()) throw Error("zero polynomial");
  return ZpCounter(squarefree_integral(f), p).count(false);
}

std::size_t count_roots_qp(const SparsePoly& f, const Prime& p) {
  if (f.is_zero()) throw Error("zero polynomial");
  auto [stripped, k] = strip_zero_root(f);
  std::size_t total = k > 0 ? 1 : 0;
  const SparsePoly g = dense::to_sparse(squarefree_integral(stripped));
  const LowerHull h = newton_polygon(g, p);
  // Roots in Q_p have integral valuation, so only integer slopes matter.
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const Rational v = -h.slope(i);
    if (v.get_den() != 1) continue;
    const long vi = v.get_num().get_si();
    const SparsePoly scaled = scale_argument(g, p_power(p, vi));
    total += ZpCounter(squarefree_integral(scaled), p).count(true);
  }
  return total;
}

namespace detail {

std::size_t count_roots_qp_by_reversal(const SparsePoly& f, const Prime& p) {
  if (f.is_zero()) throw Error("zero polynomial");
  auto [stripped, k] = strip_zero_root(f);
  std::size_t total = k > 0 ? 1 : 0;
  total += count_roots_zp(stripped, p);
  // Roots of negative valuation are reciprocals of roots of rev(f) in pZ_p.
  total += count_roots_zp(scale_argument(reverse(stripped), Rational(p.integer())), p);
  return total;
}

}  // namespace detail

}  // namespace ultra
