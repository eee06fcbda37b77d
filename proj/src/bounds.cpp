#include "ultra/bounds.hpp"

#include "ultra/enclosure.hpp"
#include "ultra/error.hpp"

namespace ultra {

namespace {

// Thrown by an evaluation to leave the formula's domain.
struct OutOfDomain {
  std::string note;
};
// Thrown when the current precision cannot decide a sign.
struct Undecided {};

Integer factorial(std::size_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational pow_q(const Rational& base, std::size_t k) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
  r.canonicalize();
  return r;
}

Integer ceil_q(const Rational& q) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c;
}

void require_positive(const Enclosure& x, const std::string& note) {
  if (x.strictly_positive()) return;
  if (x.strictly_negative() || (mpfr_zero_p(x.lo()) && mpfr_zero_p(x.hi()))) throw OutOfDomain{note};
  throw Undecided{};
}

Enclosure log_p(const Enclosure& x, const Prime& p, const std::string& what) {
  require_positive(x, "log argument " + what + " is not positive");
  return log_base(x, p);
}

Enclosure c_const(mpfr_prec_t prec) {
  const Enclosure e = Enclosure::euler(prec);
  return e / (e - Enclosure::of(Rational(1), prec));
}

template <class Eval>
BoundValue certify(Eval eval, BoundValue::Rounding rounding) {
  for (long prec = kStartPrecision; prec <= kMaxPrecision; prec *= 2) {
    try {
      const Enclosure x = eval(static_cast<mpfr_prec_t>(prec));
      const auto v = rounding == BoundValue::Rounding::floor ? x.certified_floor() : x.certified_ceil();
      if (!v) continue;
      BoundValue b;
      b.value = *v;
      b.rounding = rounding;
      b.enclosure = x.str();
      b.enclosure_width = x.width();
      b.precision_bits = prec;
      return b;
    } catch (const OutOfDomain& d) {
      return BoundValue::domain(d.note);
    } catch (const Undecided&) {
    }
  }
  throw InvariantViolation("interval evaluation not certified at " + std::to_string(kMaxPrecision) + " bits");
}

// The bracketed factor of one pcfew coordinate, divided by r_i.
Enclosure pcfew_factor(const Prime& p, long m, const std::vector<std::size_t>& nset, const std::vector<Rational>& r,
                       std::size_t i, mpfr_prec_t prec) {
  Rational rsum = 0;
  Rational rprod = 1;
  for (std::size_t j : nset) {
    rsum += r[j - 1];
    rprod *= r[j - 1];
  }
  const std::size_t k = nset.size();
  const Enclosure lnp = Enclosure::of(Rational(p.integer()), prec).log();
  const Enclosure arg = Enclosure::of(pow_q(Rational(m - 1), k) / rprod, prec) / lnp.pow(k);
  const Enclosure bracket = Enclosure::of(rsum, prec) + log_p(arg, p, "(m_i-1)^#N_i/((prod r_j) log^#N_i p)");
  return Enclosure::of(Rational(m - 1), prec) * bracket / Enclosure::of(r[i], prec);
}

}  // namespace

BoundValue BoundValue::from_exact(const Rational& q) {
  BoundValue b;
  b.exact = q;
  b.value = ceil_q(q);
  b.rounding = q.get_den() == 1 ? Rounding::none : Rounding::ceil;
  return b;
}

BoundValue BoundValue::domain(std::string note) {
  BoundValue b;
  b.in_domain = false;
  b.domain_note = std::move(note);
  return b;
}

BoundValue bound_Np(std::size_t s) { return BoundValue::from_exact(Rational(Integer(s) * Integer(s + 1) / 2)); }

BoundValue bound_Qp(const Prime& p, std::size_t s) {
  const Rational np(Integer(s) * Integer(s + 1) / 2);
  const Rational v = 1 + Rational(p.integer() - 1) * Rational(Integer(s) * Integer(s)) *
                             pow_q(Rational(15, 2), s) * Rational(factorial(s)) * np;
  return BoundValue::from_exact(v);
}

BoundValue bound_rational(std::size_t s) {
  const Integer si(s);
  const Rational v = 1 + Rational(si * si * si * (si + 1)) * pow_q(Rational(15, 2), s) * Rational(factorial(s));
  return BoundValue::from_exact(v);
}

BoundValue bound_cx(const Prime& p, std::size_t s, const Rational& r) {
  if (r <= 0) throw Error("bound_cx needs r > 0");
  return certify(
      [&](mpfr_prec_t prec) {
        const Enclosure lnp = Enclosure::of(Rational(p.integer()), prec).log();
        const Enclosure inner = Enclosure::of(Rational(2), prec) / (Enclosure::of(r, prec) * lnp);
        const Enclosure base =
            Enclosure::of(Rational(3), prec) + Enclosure::of(3 / r, prec) * log_p(inner, p, "2/(r log p)");
        require_positive(base, "3+(3/r)log_p(2/(r log p)) is not positive");
        const Integer pre = Integer(s) * Integer(s) * factorial(s);
        return Enclosure::of(Rational(pre), prec) * base.pow(s);
      },
      BoundValue::Rounding::ceil);
}

BoundValue bound_pcfew(const Prime& p, const std::vector<long>& m, const std::vector<std::vector<std::size_t>>& nsets,
                       const std::vector<Rational>& r) {
  const std::size_t n = m.size();
  if (nsets.size() != n || r.size() != n) throw Error("bound_pcfew: m, N and r must have the same length");
  for (const auto& rv : r) {
    if (rv <= 0) throw Error("bound_pcfew: every r_i must be positive");
  }
  for (const auto& set : nsets) {
    for (std::size_t j : set) {
      if (j < 1 || j > n) throw Error("bound_pcfew: index sets hold indices 1..n");
    }
  }
  for (long mi : m) {
    if (mi <= 1) return BoundValue::from_exact(Rational(0));
  }
  return certify(
      [&](mpfr_prec_t prec) {
        Enclosure acc = c_const(prec).pow(n);
        for (std::size_t i = 0; i < n; ++i) acc = acc * pcfew_factor(p, m[i], nsets[i], r, i, prec);
        require_positive(acc, "the product of bracketed factors is not positive");
        return acc;
      },
      BoundValue::Rounding::floor);
}

BoundValue bound_amd(const Prime& p, const std::vector<long>& m, const std::vector<long>& nv) {
  if (m.size() != nv.size()) throw Error("bound_amd: m and N must have the same length");
  for (long ni : nv) {
    if (ni < 1) throw Error("bound_amd: every N_i must be >= 1");
  }
  for (long mi : m) {
    if (mi <= 1) return BoundValue::from_exact(Rational(0));
  }
  Integer pre = 1;
  for (long mi : m) pre *= (p.integer() - 1) * Integer(mi) * Integer(mi - 1) / 2;
  BoundValue inner = certify(
      [&](mpfr_prec_t prec) {
        const Enclosure c = c_const(prec);
        const Enclosure lnp = Enclosure::of(Rational(p.integer()), prec).log();
        Enclosure acc = Enclosure::of(Rational(1), prec);
        for (std::size_t i = 0; i < m.size(); ++i) {
          const Enclosure arg = Enclosure::of(Rational(m[i] - 1), prec) / lnp;
          const Enclosure bracket = Enclosure::of(Rational(1), prec) + log_p(arg, p, "(m_i-1)/log p");
          acc = acc * c * Enclosure::of(Rational(Integer(m[i] - 1) * Integer(nv[i])), prec) * bracket;
        }
        require_positive(acc, "the product of bracketed factors is not positive");
        return acc;
      },
      BoundValue::Rounding::floor);
  if (!inner.in_domain) return inner;
  inner.value *= pre;
  return inner;
}

BoundValue bound_cx_chain(const Prime& p, std::size_t s, const Rational& r) {
  if (r <= 0) throw Error("bound_cx_chain needs r > 0");
  if (s == 0) return BoundValue::from_exact(Rational(1));
  std::vector<BoundValue> parts;
  const BoundValue c2 = bound_pcfew(p, {2}, {{1}}, {r});
  parts.push_back(c2);
  Integer total = 1 + c2.value;
  if (s >= 2) {
    const BoundValue c3 = bound_pcfew(p, {3}, {{1}}, {r});
    parts.push_back(c3);
    total += c2.value * c3.value;
  }
  for (std::size_t l = 3; l <= s; ++l) {
    // m = (2,3,...,3); N-sets are initial segments of sizes (2,3,...,l,l).
    std::vector<long> m(l, 3);
    m[0] = 2;
    std::vector<std::vector<std::size_t>> nsets;
    for (std::size_t i = 0; i < l; ++i) {
      const std::size_t size = std::min(i + 2, l);
      std::vector<std::size_t> set;
      for (std::size_t j = 1; j <= size; ++j) set.push_back(j);
      nsets.push_back(std::move(set));
    }
    const BoundValue term = bound_pcfew(p, m, nsets, std::vector<Rational>(l, r));
    parts.push_back(term);
    total += term.value;
  }
  BoundValue out;
  for (const auto& part : parts) {
    if (!part.in_domain) return BoundValue::domain(part.domain_note);
    out.precision_bits = std::max(out.precision_bits, part.precision_bits);
  }
  out.value = total;
  out.rounding = BoundValue::Rounding::floor;
  return out;
}

Json bound_to_json(const BoundValue& b) {
  Json j;
  j["in_domain"] = b.in_domain;
  if (!b.in_domain) {
    j["domain_note"] = b.domain_note;
    return j;
  }
  j["value"] = to_string(b.value);
  if (b.exact) j["exact"] = to_string(*b.exact);
  switch (b.rounding) {
    case BoundValue::Rounding::none:
      j["rounding"] = "none";
      break;
    case BoundValue::Rounding::floor:
      j["rounding"] = "floor";
      break;
    case BoundValue::Rounding::ceil:
      j["rounding"] = "ceil";
      break;
  }
  if (!b.enclosure.empty()) {
    j["enclosure"] = b.enclosure;
    j["width"] = b.enclosure_width;
  }
  if (b.precision_bits > 0) j["precision_bits"] = b.precision_bits;
  return j;
}

}  // namespace ultra
