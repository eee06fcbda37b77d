#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ultra/json_io.hpp"
#include "ultra/newton.hpp"
#include "ultra/polynomial.hpp"

namespace ultra {

// ---- straight-line programs ---------------------------------------------

struct SlpInstruction {
  ArithOp op = ArithOp::add;
  std::uint32_t left = 0;
  std::uint32_t right = 0;

  friend bool operator==(const SlpInstruction&, const SlpInstruction&) = default;
};

// Node 0 is the constant 1, node 1 is x, instruction i defines node i + 2.
// The output is the last node unless `out` names an earlier one (so the constant
// 1 has the empty program with out = 0).
class Slp {
 public:
  Slp() = default;
  // Throws ultra::Error on an operand or output index that is not yet defined.
  explicit Slp(std::vector<SlpInstruction> ops, std::optional<std::uint32_t> out = std::nullopt);

  const std::vector<SlpInstruction>& ops() const { return ops_; }
  std::size_t length() const { return ops_.size(); }
  std::uint32_t output() const { return out_.value_or(static_cast<std::uint32_t>(ops_.size() + 1)); }
  bool has_explicit_output() const { return out_.has_value(); }

  friend bool operator==(const Slp&, const Slp&) = default;

 private:
  std::vector<SlpInstruction> ops_;
  std::optional<std::uint32_t> out_;
};

// Evaluates prog in any commutative ring supplying +, - and *.
template <class Ring>
Ring slp_eval(const Slp& prog, const Ring& x, const Ring& one) {
  std::vector<Ring> nodes;
  nodes.reserve(prog.length() + 2);
  nodes.push_back(one);
  nodes.push_back(x);
  for (const auto& ins : prog.ops()) {
    const Ring& l = nodes[ins.left];
    const Ring& r = nodes[ins.right];
    switch (ins.op) {
      case ArithOp::add:
        nodes.push_back(l + r);
        break;
      case ArithOp::sub:
        nodes.push_back(l - r);
        break;
      case ArithOp::mul:
        nodes.push_back(l * r);
        break;
    }
  }
  return nodes[prog.output()];
}

// Integers modulo a fixed modulus, for evaluating programs mod p^k.
class ModInteger {
 public:
  ModInteger(Integer value, Integer modulus);

  const Integer& value() const { return value_; }
  const Integer& modulus() const { return modulus_; }

  friend ModInteger operator+(const ModInteger& a, const ModInteger& b);
  friend ModInteger operator-(const ModInteger& a, const ModInteger& b);
  friend ModInteger operator*(const ModInteger& a, const ModInteger& b);
  friend bool operator==(const ModInteger& a, const ModInteger& b) { return a.value_ == b.value_ && a.modulus_ == b.modulus_; }

 private:
  Integer value_;
  Integer modulus_;
};

SparsePoly slp_expand(const Slp& prog, std::uint64_t degree_cap = kDefaultDegreeCap);

Json slp_to_json(const Slp& prog);
Slp slp_from_json(const Json& j);

// ---- additive circuits --------------------------------------------------

enum class CoefficientRing { integers, rationals };

// X_j = c * prod_{i<j} X_i^m[i] + d * prod_{i<j} X_i^mp[i]
struct Gate {
  Rational c;
  Rational d;
  std::vector<std::uint64_t> m;
  std::vector<std::uint64_t> mp;

  friend bool operator==(const Gate&, const Gate&) = default;
};

// f = c * prod_{i<=s} X_i^m[i]
struct FinalMonomial {
  Rational c;
  std::vector<std::uint64_t> m;

  friend bool operator==(const FinalMonomial&, const FinalMonomial&) = default;
};

struct AdditiveCircuit {
  std::vector<Gate> gates;
  FinalMonomial final;

  std::size_t s() const { return gates.size(); }
  // Throws ultra::Error when exponent vectors have the wrong lengths or a constant
  // lies outside the coefficient ring.
  void check_shape(CoefficientRing ring = CoefficientRing::integers) const;

  friend bool operator==(const AdditiveCircuit&, const AdditiveCircuit&) = default;
};

SparsePoly circuit_expand(const AdditiveCircuit& c, std::uint64_t degree_cap = kDefaultDegreeCap);
bool circuit_validate(const AdditiveCircuit& c, const SparsePoly& f, std::uint64_t degree_cap = kDefaultDegreeCap,
                      CoefficientRing ring = CoefficientRing::integers);

Json circuit_to_json(const AdditiveCircuit& c);
AdditiveCircuit circuit_from_json(const Json& j);

// Newton polygons pushed through the gates without expanding, assuming no
// cancellation between terms.
struct PropagatedHulls {
  std::vector<LowerHull> hulls;   // P_0 .. P_{s+1}
  std::vector<SlopeSet> slopes;   // F_0 .. F_s
  std::vector<std::size_t> edges;  // L_0 .. L_{s+1}

  // First i with L_{i+1} > L_i + i + 1, if any.
  std::optional<std::size_t> ledger_violation() const;
};

PropagatedHulls propagate_hulls(const AdditiveCircuit& c, const Prime& p);

// ---- the polynomial system of a circuit ---------------------------------

// coefficient * prod_i X_i^exponents[i]
struct SystemTerm {
  Rational coefficient;
  std::vector<std::uint64_t> exponents;
};

// Sum of terms = 0.
struct SystemEquation {
  std::vector<SystemTerm> terms;
  // Highest variable index with a nonzero exponent, or -1 for a constant equation.
  long max_variable() const;
};

// Variables X_0 = x, X_1 .. X_s; equation j < s is gate j+1, the last is the output monomial.
struct PolySystem {
  std::size_t variable_count = 0;
  std::vector<SystemEquation> equations;
};

PolySystem to_poly_system(const AdditiveCircuit& c);
// Evaluates the gate chain at x and checks that every equation vanishes.
bool verify_system_root(const PolySystem& sys, const AdditiveCircuit& c, const Rational& x);

}  // namespace ultra
