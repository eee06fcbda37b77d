// Named polynomial families and the random circuit generator.

#include <random>

#include "ultra/error.hpp"
#include "ultra/search.hpp"

namespace ultra {

namespace {

Integer int_pow(unsigned long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

FamilyMember extremal(unsigned long p, unsigned s, std::uint64_t cap) {
  Prime prime(p);
  if (s > cap) throw DegreeCapExceeded(s, cap);
  FamilyMember out;
  AdditiveCircuit c;
  SparsePoly f = SparsePoly::constant(Rational(1));
  for (unsigned i = 1; i <= s; ++i) {
    const Integer root = int_pow(p, i - 1);
    f = multiply(f, SparsePoly::x() - SparsePoly::constant(Rational(root)), cap);
    Gate g{Rational(1), Rational(-root), std::vector<std::uint64_t>(i, 0), std::vector<std::uint64_t>(i, 0)};
    g.m[0] = 1;
    c.gates.push_back(std::move(g));
  }
  c.final = {Rational(1), std::vector<std::uint64_t>(s + 1, 1)};
  c.final.m[0] = 0;
  out.poly = std::move(f);
  out.circuit = std::move(c);
  return out;
}

FamilyMember cyclotomic_shift(unsigned d, std::uint64_t cap) {
  if (d == 0) throw Error("cyclotomic_shift needs d >= 1");
  FamilyMember out;
  out.poly = power(SparsePoly::x() + SparsePoly::constant(Rational(1)), d, cap) - SparsePoly::constant(Rational(1));
  AdditiveCircuit c;
  c.gates.push_back({Rational(1), Rational(1), {1}, {0}});
  c.gates.push_back({Rational(1), Rational(-1), {0, d}, {0, 0}});
  c.final = {Rational(1), {0, 0, 1}};
  out.circuit = std::move(c);
  return out;
}

FamilyMember logistic(unsigned j, std::uint64_t cap) {
  if (j == 0) throw Error("logistic family needs j >= 1");
  if (j >= 64 || (std::uint64_t{1} << j) > cap) throw DegreeCapExceeded(j >= 64 ? UINT64_MAX : std::uint64_t{1} << j, cap);
  const SparsePoly one = SparsePoly::constant(Rational(1));
  SparsePoly g = SparsePoly::x();
  for (unsigned k = 0; k < j; ++k) g = multiply(g, one - g, cap) * Rational(4);
  FamilyMember out;
  out.poly = g - SparsePoly::x();
  out.base = g;
  // 2 = 1+1, 4 = 2+2, then g <- 4 * (g * (1 - g)) three instructions per step, then g - x.
  std::vector<SlpInstruction> ops{{ArithOp::add, 0, 0}, {ArithOp::add, 2, 2}};
  std::uint32_t gnode = 1;
  for (unsigned k = 0; k < j; ++k) {
    const auto n = static_cast<std::uint32_t>(ops.size() + 2);
    ops.push_back({ArithOp::sub, 0, gnode});
    ops.push_back({ArithOp::mul, gnode, n});
    ops.push_back({ArithOp::mul, 3, n + 1});
    gnode = n + 2;
  }
  ops.push_back({ArithOp::sub, gnode, 1});
  out.slp = Slp(std::move(ops));
  return out;
}

FamilyMember shub_smale(unsigned j, std::uint64_t cap) {
  if (j >= 32 || (std::uint64_t{1} << j) > cap) throw DegreeCapExceeded(j >= 32 ? UINT64_MAX : std::uint64_t{1} << j, cap);
  const std::uint64_t n = std::uint64_t{1} << j;
  FamilyMember out;
  SparsePoly f = SparsePoly::constant(Rational(1));
  for (std::uint64_t i = 1; i <= n; ++i) {
    f = multiply(f, SparsePoly::x() - SparsePoly::constant(Rational(int_pow(2, i))), cap);
  }
  out.poly = std::move(f);
  // Powers of two, then the linear factors, then their running product.
  std::vector<SlpInstruction> ops{{ArithOp::add, 0, 0}};
  std::vector<std::uint32_t> powers{2};
  for (std::uint64_t i = 2; i <= n; ++i) {
    ops.push_back({ArithOp::mul, powers.back(), 2});
    powers.push_back(static_cast<std::uint32_t>(ops.size() + 1));
  }
  std::vector<std::uint32_t> factors;
  for (auto node : powers) {
    ops.push_back({ArithOp::sub, 1, node});
    factors.push_back(static_cast<std::uint32_t>(ops.size() + 1));
  }
  std::uint32_t acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    ops.push_back({ArithOp::mul, acc, factors[i]});
    acc = static_cast<std::uint32_t>(ops.size() + 1);
  }
  out.slp = Slp(std::move(ops));
  return out;
}

}  // namespace

FamilyKind family_kind_from_name(const std::string& name) {
  if (name == "extremal") return FamilyKind::extremal;
  if (name == "cyclotomic_shift" || name == "cyclotomic-shift") return FamilyKind::cyclotomic_shift;
  if (name == "logistic") return FamilyKind::logistic;
  if (name == "shub_smale" || name == "shub-smale") return FamilyKind::shub_smale;
  throw Error("unknown family \"" + name + "\" (extremal, cyclotomic_shift, logistic, shub_smale)");
}

std::string family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::extremal:
      return "extremal";
    case FamilyKind::cyclotomic_shift:
      return "cyclotomic_shift";
    case FamilyKind::logistic:
      return "logistic";
    case FamilyKind::shub_smale:
      return "shub_smale";
  }
  return "?";
}

FamilyMember family(const FamilySpec& spec, std::uint64_t degree_cap) {
  switch (spec.kind) {
    case FamilyKind::extremal:
      return extremal(spec.p, spec.s, degree_cap);
    case FamilyKind::cyclotomic_shift:
      return cyclotomic_shift(spec.d, degree_cap);
    case FamilyKind::logistic:
      return logistic(spec.j, degree_cap);
    case FamilyKind::shub_smale:
      return shub_smale(spec.j, degree_cap);
  }
  throw Error("unknown family");
}

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform on [0, n), independent of the standard library's distribution code.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = rng_();
    } while (v >= limit);
    return v % n;
  }

  long nonzero(long bound) {
    const auto v = static_cast<long>(below(2 * static_cast<std::uint64_t>(bound))) - bound;
    return v >= 0 ? v + 1 : v;
  }

  // Zero half the time, otherwise 1..max.
  std::uint64_t sparse_exponent(std::uint64_t max) {
    if (max == 0 || below(2) == 0) return 0;
    return 1 + below(max);
  }

 private:
  std::mt19937_64 rng_;
};

std::uint64_t degree_of(const std::vector<std::uint64_t>& m, const std::vector<std::uint64_t>& degrees) {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * degrees[i];
  return d;
}

}  // namespace

AdditiveCircuit random_circuit(std::size_t s, std::uint64_t seed, const CircuitBounds& bounds) {
  if (bounds.max_constant < 1) throw Error("constant bound must be positive");
  constexpr int kAttempts = 10000;
  Sampler rng(seed);
  AdditiveCircuit c;
  std::vector<std::uint64_t> degrees{1};
  for (std::size_t j = 1; j <= s; ++j) {
    bool placed = false;
    for (int attempt = 0; attempt < kAttempts && !placed; ++attempt) {
      Gate g{Rational(rng.nonzero(bounds.max_constant)), Rational(rng.nonzero(bounds.max_constant)), {}, {}};
      for (std::size_t i = 0; i < j; ++i) g.m.push_back(rng.sparse_exponent(bounds.max_exponent));
      for (std::size_t i = 0; i < j; ++i) g.mp.push_back(rng.sparse_exponent(bounds.max_exponent));
      if (g.m == g.mp) continue;
      const std::uint64_t d = std::max(degree_of(g.m, degrees), degree_of(g.mp, degrees));
      if (d > bounds.degree_budget) continue;
      degrees.push_back(d);
      c.gates.push_back(std::move(g));
      placed = true;
    }
    if (!placed) throw Error("random_circuit: no gate fits the degree budget");
  }
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    FinalMonomial fin{Rational(rng.nonzero(bounds.max_constant)), {}};
    if (s == 0) {
      fin.m.push_back(rng.below(bounds.max_exponent + 1));
    } else {
      for (std::size_t i = 0; i < s; ++i) fin.m.push_back(rng.sparse_exponent(bounds.max_exponent));
      fin.m.push_back(1);
    }
    if (degree_of(fin.m, degrees) > bounds.degree_budget) continue;
    c.final = std::move(fin);
    return c;
  }
  throw Error("random_circuit: no output monomial fits the degree budget");
}

}  // namespace ultra
