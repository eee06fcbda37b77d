#include "ultra/circuit.hpp"

#include <algorithm>

#include "ultra/error.hpp"

namespace ultra {

Slp::Slp(std::vector<SlpInstruction> ops, std::optional<std::uint32_t> out) : ops_(std::move(ops)), out_(out) {
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].left >= i + 2 || ops_[i].right >= i + 2) {
      throw Error("SLP instruction " + std::to_string(i) + " reads an undefined node");
    }
  }
  if (out_ && *out_ >= ops_.size() + 2) throw Error("SLP output names an undefined node");
  if (out_ && *out_ == ops_.size() + 1) out_.reset();
}

ModInteger::ModInteger(Integer value, Integer modulus) : value_(std::move(value)), modulus_(std::move(modulus)) {
  if (modulus_ <= 0) throw Error("modulus must be positive");
  mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), modulus_.get_mpz_t());
}

ModInteger operator+(const ModInteger& a, const ModInteger& b) { return {a.value_ + b.value_, a.modulus_}; }
ModInteger operator-(const ModInteger& a, const ModInteger& b) { return {a.value_ - b.value_, a.modulus_}; }
ModInteger operator*(const ModInteger& a, const ModInteger& b) { return {a.value_ * b.value_, a.modulus_}; }

SparsePoly slp_expand(const Slp& prog, std::uint64_t degree_cap) {
  std::vector<SparsePoly> nodes;
  nodes.reserve(prog.length() + 2);
  nodes.push_back(SparsePoly::constant(Rational(1)));
  nodes.push_back(SparsePoly::x());
  for (const auto& ins : prog.ops()) nodes.push_back(arith(nodes[ins.left], nodes[ins.right], ins.op, degree_cap));
  return nodes[prog.output()];
}

void AdditiveCircuit::check_shape(CoefficientRing ring) const {
  auto in_ring = [ring](const Rational& q) { return ring == CoefficientRing::rationals || q.get_den() == 1; };
  for (std::size_t j = 0; j < gates.size(); ++j) {
    const Gate& g = gates[j];
    if (g.m.size() != j + 1 || g.mp.size() != j + 1) {
      throw Error("gate " + std::to_string(j + 1) + " needs exponent vectors of length " + std::to_string(j + 1));
    }
    if (!in_ring(g.c) || !in_ring(g.d)) {
      throw Error("gate " + std::to_string(j + 1) + " has a constant outside the coefficient ring");
    }
  }
  if (final.m.size() != gates.size() + 1) {
    throw Error("final monomial needs an exponent vector of length " + std::to_string(gates.size() + 1));
  }
  if (!in_ring(final.c)) throw Error("final constant lies outside the coefficient ring");
}

namespace {

SparsePoly monomial_product(const std::vector<SparsePoly>& xs, const Rational& c,
                            const std::vector<std::uint64_t>& m, std::uint64_t cap) {
  SparsePoly acc = SparsePoly::constant(c);
  if (c == 0) return acc;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    acc = multiply(acc, power(xs[i], m[i], cap), cap);
  }
  return acc;
}

}  // namespace

SparsePoly circuit_expand(const AdditiveCircuit& c, std::uint64_t degree_cap) {
  c.check_shape(CoefficientRing::rationals);
  std::vector<SparsePoly> xs{SparsePoly::x()};
  for (const Gate& g : c.gates) {
    xs.push_back(monomial_product(xs, g.c, g.m, degree_cap) + monomial_product(xs, g.d, g.mp, degree_cap));
  }
  return monomial_product(xs, c.final.c, c.final.m, degree_cap);
}

bool circuit_validate(const AdditiveCircuit& c, const SparsePoly& f, std::uint64_t degree_cap, CoefficientRing ring) {
  c.check_shape(CoefficientRing::rationals);
  if (ring == CoefficientRing::integers) {
    // Not a presentation over Z, so it presents nothing.
    auto integral = [](const Rational& q) { return q.get_den() == 1; };
    if (!integral(c.final.c)) return false;
    for (const auto& g : c.gates) {
      if (!integral(g.c) || !integral(g.d)) return false;
    }
  }
  return circuit_expand(c, degree_cap) == f;
}

std::optional<std::size_t> PropagatedHulls::ledger_violation() const {
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (edges[i + 1] > edges[i] + i + 1) return i;
  }
  return std::nullopt;
}

namespace {

LowerHull branch_hull(const std::vector<LowerHull>& hulls, const Rational& c, const std::vector<std::uint64_t>& m,
                      const Prime& p) {
  LowerHull acc = LowerHull::of_points({HullPoint{0, Rational(ord_nonzero(c, p))}});
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    acc = minkowski_sum(acc, hulls[i].scaled(m[i]));
  }
  return acc;
}

}  // namespace

PropagatedHulls propagate_hulls(const AdditiveCircuit& c, const Prime& p) {
  c.check_shape(CoefficientRing::rationals);
  PropagatedHulls out;
  out.hulls.push_back(LowerHull::of_points({HullPoint{1, Rational(0)}}));
  for (std::size_t j = 0; j < c.gates.size(); ++j) {
    const Gate& g = c.gates[j];
    if (g.c == 0 && g.d == 0) throw Error("gate " + std::to_string(j + 1) + " is zero (c = d = 0)");
    if (g.d == 0) {
      out.hulls.push_back(branch_hull(out.hulls, g.c, g.m, p));
    } else if (g.c == 0) {
      out.hulls.push_back(branch_hull(out.hulls, g.d, g.mp, p));
    } else {
      out.hulls.push_back(hull_union(branch_hull(out.hulls, g.c, g.m, p), branch_hull(out.hulls, g.d, g.mp, p)));
    }
  }
  if (c.final.c == 0) throw Error("final constant is zero");
  out.hulls.push_back(branch_hull(out.hulls, c.final.c, c.final.m, p));
  for (std::size_t j = 0; j + 1 < out.hulls.size(); ++j) out.slopes.push_back(slope_set(out.hulls[j]));
  for (const auto& h : out.hulls) out.edges.push_back(h.edge_count());
  return out;
}

long SystemEquation::max_variable() const {
  long best = -1;
  for (const auto& t : terms) {
    for (std::size_t i = t.exponents.size(); i-- > 0;) {
      if (t.exponents[i] != 0) {
        best = std::max(best, static_cast<long>(i));
        break;
      }
    }
  }
  return best;
}

PolySystem to_poly_system(const AdditiveCircuit& c) {
  c.check_shape(CoefficientRing::rationals);
  const std::size_t n = c.s() + 1;
  PolySystem sys;
  sys.variable_count = n;
  auto padded = [n](std::vector<std::uint64_t> e) {
    e.resize(n, 0);
    return e;
  };
  for (std::size_t j = 0; j < c.gates.size(); ++j) {
    const Gate& g = c.gates[j];
    SystemEquation eq;
    std::vector<std::uint64_t> self(n, 0);
    self[j + 1] = 1;
    eq.terms.push_back({Rational(1), self});
    if (g.c != 0) eq.terms.push_back({-g.c, padded(g.m)});
    if (g.d != 0) eq.terms.push_back({-g.d, padded(g.mp)});
    sys.equations.push_back(std::move(eq));
  }
  SystemEquation last;
  if (c.final.c != 0) last.terms.push_back({c.final.c, c.final.m});
  sys.equations.push_back(std::move(last));
  return sys;
}

namespace {

Rational pow_q(const Rational& base, std::uint64_t k) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
  r.canonicalize();
  return r;
}

Rational eval_monomial(const std::vector<Rational>& xs, const Rational& c, const std::vector<std::uint64_t>& m) {
  Rational acc = c;
  for (std::size_t i = 0; i < m.size() && acc != 0; ++i) {
    if (m[i] != 0) acc *= pow_q(xs[i], m[i]);
  }
  return acc;
}

}  // namespace

bool verify_system_root(const PolySystem& sys, const AdditiveCircuit& c, const Rational& x) {
  c.check_shape(CoefficientRing::rationals);
  if (sys.variable_count != c.s() + 1) throw Error("system and circuit disagree on the number of variables");
  std::vector<Rational> xs{x};
  for (const Gate& g : c.gates) xs.push_back(eval_monomial(xs, g.c, g.m) + eval_monomial(xs, g.d, g.mp));
  return std::all_of(sys.equations.begin(), sys.equations.end(), [&](const SystemEquation& eq) {
    Rational total = 0;
    for (const auto& t : eq.terms) total += eval_monomial(xs, t.coefficient, t.exponents);
    return total == 0;
  });
}

}  // namespace ultra
