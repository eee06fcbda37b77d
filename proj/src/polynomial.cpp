#include "ultra/polynomial.hpp"

#include <algorithm>

#include "dense.hpp"
#include "ultra/error.hpp"

namespace ultra {

SparsePoly::SparsePoly(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  for (auto& [e, c] : terms_) c.canonicalize();
}

SparsePoly SparsePoly::monomial(const Rational& c, std::uint64_t e) {
  SparsePoly f;
  f.add_term(e, c);
  return f;
}

SparsePoly SparsePoly::from_dense(const std::vector<Rational>& coefficients) {
  Terms terms;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] != 0) terms.emplace(i, coefficients[i]);
  }
  return SparsePoly(std::move(terms));
}

SparsePoly SparsePoly::from_dense(const std::vector<Integer>& coefficients) {
  Terms terms;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] != 0) terms.emplace(i, Rational(coefficients[i]));
  }
  return SparsePoly(std::move(terms));
}

void SparsePoly::add_term(std::uint64_t e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SparsePoly::coefficient(std::uint64_t e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Rational& SparsePoly::leading_coefficient() const {
  if (terms_.empty()) throw Error("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

bool SparsePoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.get_den() == 1; });
}

Rational SparsePoly::eval(const Rational& x) const {
  if (terms_.empty()) return Rational(0);
  // Sparse Horner: walk exponents downward, multiplying by x^(gap).
  Rational acc = 0;
  std::uint64_t current = terms_.rbegin()->first;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const std::uint64_t gap = current - it->first;
    if (gap > 0) {
      Rational step;
      mpz_pow_ui(step.get_num_mpz_t(), x.get_num_mpz_t(), gap);
      mpz_pow_ui(step.get_den_mpz_t(), x.get_den_mpz_t(), gap);
      acc *= step;
    }
    acc += it->second;
    current = it->first;
  }
  if (current > 0) {
    Rational step;
    mpz_pow_ui(step.get_num_mpz_t(), x.get_num_mpz_t(), current);
    mpz_pow_ui(step.get_den_mpz_t(), x.get_den_mpz_t(), current);
    acc *= step;
  }
  acc.canonicalize();
  return acc;
}

SparsePoly SparsePoly::derivative() const {
  SparsePoly d;
  for (const auto& [e, c] : terms_) {
    if (e > 0) d.terms_.emplace(e - 1, c * Rational(Integer(static_cast<unsigned long>(e))));
  }
  return d;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& g) {
  for (const auto& [e, c] : g.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& g) {
  for (const auto& [e, c] : g.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& f, const SparsePoly& g) {
  SparsePoly r;
  if (f.is_zero() || g.is_zero()) return r;
  for (const auto& [ef, cf] : f.terms_) {
    for (const auto& [eg, cg] : g.terms_) {
      auto [it, inserted] = r.terms_.try_emplace(ef + eg, cf * cg);
      if (!inserted) it->second += cf * cg;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

bool operator<(const SparsePoly& f, const SparsePoly& g) {
  auto a = f.terms_.begin();
  auto b = g.terms_.begin();
  for (; a != f.terms_.end() && b != g.terms_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first;
    if (a->second != b->second) return a->second < b->second;
  }
  return a == f.terms_.end() && b != g.terms_.end();
}

std::vector<Rational> SparsePoly::dense(std::uint64_t degree_cap) const {
  if (terms_.empty()) return {};
  if (degree() > degree_cap) throw DegreeCapExceeded(degree(), degree_cap);
  std::vector<Rational> out(degree() + 1);
  for (const auto& [e, c] : terms_) out[e] = c;
  return out;
}

SparsePoly multiply(const SparsePoly& f, const SparsePoly& g, std::uint64_t degree_cap) {
  if (f.is_zero() || g.is_zero()) return {};
  const std::uint64_t d = f.degree() + g.degree();
  if (d > degree_cap) throw DegreeCapExceeded(d, degree_cap);
  return f * g;
}

SparsePoly arith(const SparsePoly& f, const SparsePoly& g, ArithOp op, std::uint64_t degree_cap) {
  switch (op) {
    case ArithOp::add:
      return f + g;
    case ArithOp::sub:
      return f - g;
    case ArithOp::mul:
      return multiply(f, g, degree_cap);
  }
  throw Error("arith: unknown operation");
}

SparsePoly power(const SparsePoly& f, std::uint64_t k, std::uint64_t degree_cap) {
  if (k == 0) return SparsePoly::constant(Rational(1));
  if (f.is_zero()) return {};
  if (f.degree() > 0 && f.degree() > degree_cap / k) {
    throw DegreeCapExceeded(f.degree() > UINT64_MAX / k ? UINT64_MAX : f.degree() * k, degree_cap);
  }
  if (f.is_monomial()) {
    const auto& [e, c] = *f.terms().begin();
    Rational ck;
    mpz_pow_ui(ck.get_num_mpz_t(), c.get_num_mpz_t(), k);
    mpz_pow_ui(ck.get_den_mpz_t(), c.get_den_mpz_t(), k);
    return SparsePoly::monomial(ck, e * k);
  }
  SparsePoly result = SparsePoly::constant(Rational(1));
  SparsePoly base = f;
  while (true) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k == 0) break;
    base = base * base;
  }
  return result;
}

std::pair<SparsePoly, SparsePoly> divide(const SparsePoly& f, const SparsePoly& g) {
  if (g.is_zero()) throw Error("divide: division by the zero polynomial");
  SparsePoly q;
  SparsePoly r = f;
  const std::uint64_t dg = g.degree();
  const Rational& lg = g.leading_coefficient();
  while (!r.is_zero() && r.degree() >= dg) {
    const std::uint64_t shift_by = r.degree() - dg;
    Rational t = r.leading_coefficient() / lg;
    SparsePoly term = SparsePoly::monomial(t, shift_by);
    q += term;
    r -= term * g;
  }
  return {q, r};
}

SparsePoly primitive_part(const SparsePoly& f) {
  if (f.is_zero()) return f;
  return dense::to_sparse(dense::from_sparse(f, UINT64_MAX));
}

SparsePoly gcd(const SparsePoly& f, const SparsePoly& g) {
  if (f.is_zero() && g.is_zero()) return {};
  if (f.is_zero()) return primitive_part(g);
  if (g.is_zero()) return primitive_part(f);
  // Pull out common powers of x first so sparse inputs like x^1000 stay cheap.
  const std::uint64_t low = std::min(f.lowest_exponent(), g.lowest_exponent());
  auto [fs, kf] = strip_zero_root(f);
  auto [gs, kg] = strip_zero_root(g);
  (void)kf;
  (void)kg;
  SparsePoly core = dense::to_sparse(dense::gcd(dense::from_sparse(fs, UINT64_MAX), dense::from_sparse(gs, UINT64_MAX)));
  return core * SparsePoly::monomial(Rational(1), low);
}

SparsePoly squarefree_part(const SparsePoly& f) {
  if (f.is_zero()) throw Error("squarefree_part: zero polynomial");
  auto [g, k] = strip_zero_root(f);
  SparsePoly core = dense::to_sparse(dense::squarefree(dense::from_sparse(g, UINT64_MAX)));
  return k > 0 ? core * SparsePoly::x() : core;
}

SparsePoly shift(const SparsePoly& f, const Rational& c) {
  if (f.is_zero() || c == 0) return f;
  // Horner in the shifted variable: acc = acc * (y + c) + a_i, walking exponents downward.
  std::vector<Rational> acc;  // dense in y
  const std::uint64_t n = f.degree();
  acc.reserve(n + 1);
  auto step = [&](const Rational& a) {
    // acc <- acc * (y + c) + a
    acc.emplace_back(0);
    for (std::size_t j = acc.size() - 1; j > 0; --j) {
      acc[j] = acc[j - 1] + acc[j] * c;
    }
    acc[0] = acc[0] * c + a;
  };
  for (std::uint64_t e = n + 1; e-- > 0;) {
    if (acc.empty()) {
      acc.push_back(f.coefficient(e));
      continue;
    }
    step(f.coefficient(e));
  }
  return SparsePoly::from_dense(acc);
}

SparsePoly scale_argument(const SparsePoly& f, const Rational& c) {
  if (c == 0) return SparsePoly::constant(f.coefficient(0));
  SparsePoly::Terms terms;
  for (const auto& [e, a] : f.terms()) {
    Rational ce;
    mpz_pow_ui(ce.get_num_mpz_t(), c.get_num_mpz_t(), e);
    mpz_pow_ui(ce.get_den_mpz_t(), c.get_den_mpz_t(), e);
    terms.emplace(e, a * ce);
  }
  return SparsePoly(std::move(terms));
}

SparsePoly reverse(const SparsePoly& f) {
  if (f.is_zero()) return f;
  SparsePoly::Terms terms;
  const std::uint64_t n = f.degree();
  for (const auto& [e, a] : f.terms()) terms.emplace(n - e, a);
  return SparsePoly(std::move(terms));
}

std::pair<SparsePoly, std::uint64_t> strip_zero_root(const SparsePoly& f) {
  if (f.is_zero()) throw Error("strip_zero_root: zero polynomial");
  const std::uint64_t k = f.lowest_exponent();
  if (k == 0) return {f, 0};
  SparsePoly::Terms terms;
  for (const auto& [e, a] : f.terms()) terms.emplace(e - k, a);
  return {SparsePoly(std::move(terms)), k};
}

namespace {

using QVec = std::vector<Rational>;

void trim_q(QVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QVec rem_q(QVec a, const QVec& b) {
  trim_q(a);
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t offset = a.size() - 1 - db;
    Rational t = a.back() / b.back();
    for (std::size_t j = 0; j <= db; ++j) a[j + offset] -= t * b[j];
    a.back() = 0;
    trim_q(a);
  }
  return a;
}

Rational pow_q(const Rational& base, std::size_t k) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
  r.canonicalize();
  return r;
}

}  // namespace

Rational resultant(const SparsePoly& f, const SparsePoly& g) {
  if (f.is_zero() || g.is_zero()) return Rational(0);
  QVec a = f.dense(UINT64_MAX);
  QVec b = g.dense(UINT64_MAX);
  Rational acc = 1;
  // res(A, B) = (-1)^(deg A deg B) lc(B)^(deg A - deg R) res(B, R) with R = A mod B.
  while (true) {
    const std::size_t da = a.size() - 1;
    const std::size_t db = b.size() - 1;
    if (db == 0) return acc * pow_q(b.back(), da);
    QVec r = rem_q(a, b);
    if (r.empty()) return Rational(0);
    const std::size_t dr = r.size() - 1;
    if ((da * db) % 2 == 1) acc = -acc;
    acc *= pow_q(b.back(), da - dr);
    a = std::move(b);
    b = std::move(r);
  }
}

Rational discriminant(const SparsePoly& f) {
  if (f.is_zero() || f.degree() == 0) throw Error("discriminant: polynomial must have positive degree");
  const std::uint64_t n = f.degree();
  Rational r = resultant(f, f.derivative()) / f.leading_coefficient();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  r.canonicalize();
  return r;
}

}  // namespace ultra
