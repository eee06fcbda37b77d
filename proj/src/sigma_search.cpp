// Bounded search for additive-complexity presentations.

#include <array>

#include "ultra/error.hpp"
#include "ultra/search.hpp"

namespace ultra {

namespace {

constexpr std::array<long, 4> kSamples{2, 3, 5, 7};

// One candidate term c * prod X_i^m[i] of a gate.
struct Branch {
  long c;
  std::vector<std::uint64_t> m;
};

bool branch_less(const Branch& a, const Branch& b) {
  if (a.m != b.m) return a.m < b.m;
  return a.c < b.c;
}

class SigmaSearch {
 public:
  SigmaSearch(const SparsePoly& f, const SigmaSearchBounds& bounds) : f_(f), bounds_(bounds) {
    for (long t : kSamples) f_at_.push_back(f.eval(Rational(t)).get_num());
  }

  std::optional<AdditiveCircuit> run(std::size_t s) {
    s_ = s;
    gates_.clear();
    values_.assign(1, {});
    for (long t : kSamples) values_[0].push_back(Integer(t));
    if (s == 0) return try_final();
    return extend();
  }

 private:
  std::vector<Branch> branches(std::size_t j) const {
    // Every exponent vector over X_0..X_{j-1} with entries <= E, times every nonzero constant.
    std::vector<Branch> out;
    std::vector<std::uint64_t> m(j, 0);
    while (true) {
      for (long c = -bounds_.max_constant; c <= bounds_.max_constant; ++c) {
        if (c != 0) out.push_back({c, m});
      }
      std::size_t i = 0;
      while (i < j && m[i] == bounds_.max_exponent) m[i++] = 0;
      if (i == j) break;
      ++m[i];
    }
    return out;
  }

  Integer branch_value(const Branch& b, std::size_t sample) const {
    Integer v = b.c;
    for (std::size_t i = 0; i < b.m.size(); ++i) {
      if (b.m[i] == 0) continue;
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), values_[i][sample].get_mpz_t(), b.m[i]);
      v *= pw;
    }
    return v;
  }

  std::optional<AdditiveCircuit> extend() {
    const std::size_t j = gates_.size();
    const auto candidates = branches(j + 1);
    const bool last = j + 1 == s_;
    std::vector<std::vector<Integer>> at(candidates.size());
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      for (std::size_t k = 0; k < kSamples.size(); ++k) at[a].push_back(branch_value(candidates[a], k));
    }
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      for (std::size_t b = 0; b < candidates.size(); ++b) {
        const Branch& x = candidates[a];
        const Branch& y = candidates[b];
        // c*A + d*B = d*B + c*A; equal exponent vectors collapse to a monomial.
        if (x.m == y.m || !branch_less(x, y)) continue;
        std::vector<Integer> vals;
        bool ok = true;
        for (std::size_t k = 0; k < kSamples.size() && ok; ++k) {
          vals.push_back(at[a][k] + at[b][k]);
          // The last gate divides f, hence every sample value of f.
          if (last) {
            ok = vals[k] == 0 ? f_at_[k] == 0 : mpz_divisible_p(f_at_[k].get_mpz_t(), vals[k].get_mpz_t()) != 0;
          }
        }
        if (!ok) continue;
        gates_.push_back({Rational(x.c), Rational(y.c), x.m, y.m});
        values_.push_back(std::move(vals));
        auto found = last ? try_final() : extend();
        if (found) return found;
        gates_.pop_back();
        values_.pop_back();
      }
    }
    return std::nullopt;
  }

  // Looks for f = c * prod X_i^a_i, a_s >= 1 when s > 0.
  std::optional<AdditiveCircuit> try_final() {
    const std::size_t n = s_ + 1;
    if (s_ > 0 && bounds_.max_exponent == 0) return std::nullopt;
    std::vector<SparsePoly> xs{SparsePoly::x()};
    for (const Gate& g : gates_) {
      SparsePoly a = SparsePoly::constant(g.c);
      SparsePoly b = SparsePoly::constant(g.d);
      for (std::size_t i = 0; i < g.m.size(); ++i) {
        a = multiply(a, power(xs[i], g.m[i]));
        b = multiply(b, power(xs[i], g.mp[i]));
      }
      xs.push_back(a + b);
    }
    // Enumerate a_1..a_s; the power of X_0 and the constant are read off the quotient.
    std::vector<std::uint64_t> e(s_, 0);
    if (s_ > 0) e[s_ - 1] = 1;
    while (true) {
      SparsePoly product = SparsePoly::constant(Rational(1));
      for (std::size_t i = 0; i < s_; ++i) product = multiply(product, power(xs[i + 1], e[i]));
      if (!product.is_zero()) {
        auto [q, r] = divide(f_, product);
        if (r.is_zero() && q.is_monomial()) {
          const auto& [x_exp, c] = *q.terms().begin();
          if (c.get_den() == 1 && x_exp <= bounds_.max_exponent) {
            AdditiveCircuit circuit;
            circuit.gates = gates_;
            circuit.final.c = c;
            circuit.final.m.assign(n, 0);
            circuit.final.m[0] = x_exp;
            for (std::size_t i = 0; i < s_; ++i) circuit.final.m[i + 1] = e[i];
            if (circuit_validate(circuit, f_)) return circuit;
          }
        }
      }
      std::size_t i = 0;
      while (i < s_ && e[i] == bounds_.max_exponent) {
        e[i] = i + 1 == s_ ? 1 : 0;
        ++i;
      }
      if (i == s_) break;
      ++e[i];
    }
    return std::nullopt;
  }

  const SparsePoly& f_;
  SigmaSearchBounds bounds_;
  std::size_t s_ = 0;
  std::vector<Integer> f_at_;
  std::vector<Gate> gates_;
  std::vector<std::vector<Integer>> values_;
};

}  // namespace

std::optional<SigmaWitness> sigma_upper_search(const SparsePoly& f, const SigmaSearchBounds& bounds) {
  if (f.is_zero()) throw Error("zero polynomial");
  if (!f.is_integral()) return std::nullopt;
  if (bounds.max_constant < 1) throw Error("constant bound must be positive");
  SigmaSearch search(f, bounds);
  for (std::size_t s = 0; s <= bounds.s_max; ++s) {
    if (auto c = search.run(s)) return SigmaWitness{s, std::move(*c)};
  }
  return std::nullopt;
}

}  // namespace ultra
