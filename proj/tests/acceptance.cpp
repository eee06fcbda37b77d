// Acceptance checks, one per criterion. Usage: acceptance [c01 ... c13]; no argument runs all.
#include <chrono>
#include <cmath>
#include <complex>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "ultra/bounds.hpp"
#include "ultra/search.hpp"

#ifndef ULTRA_ACCEPTANCE_CACHE
#define ULTRA_ACCEPTANCE_CACHE "acceptance-cache"
#endif

using namespace ultra;

namespace {

// Pinned tolerances and limits.
constexpr double kClusterTolerance = 1e-9;
constexpr std::size_t kNewtonTrials = 1000;
constexpr unsigned kNewtonMaxDegree = 12;
constexpr unsigned kExtremalMaxS = 12;
constexpr std::size_t kCorpusSize = 1000;
constexpr std::size_t kCorpusMaxS = 4;
constexpr CircuitBounds kCorpusBounds{6, 100, 48};
constexpr std::size_t kPairs = 500;
constexpr unsigned kCyclotomicComplexMaxD = 20;
constexpr unsigned kCyclotomicPadicMaxD = 64;
constexpr unsigned kCatalogLength = 5;
constexpr std::size_t kHenselTrials = 200;
constexpr unsigned kHenselMaxDegree = 6;
constexpr unsigned kLogisticMaxJ = 4;
constexpr unsigned kShubSmaleMaxJ = 3;
constexpr double kMaxWidth = 1.0;

const std::vector<unsigned long> kPrimes{2, 3, 5};

struct Outcome {
  bool pass = true;
  std::string detail;
  double limit_seconds = 0;
};

// Collects failures; keeps the first few for the summary line.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (first.size() < 3) first.push_back(what);
  }
  std::string text() const {
    std::ostringstream out;
    out << checks - failures << "/" << checks << " checks hold";
    for (const auto& f : first) out << "; " << f;
    return out.str();
  }
};

std::string str(const SparsePoly& f) { return to_string(f); }

// The fixed random corpus shared by c03, c08 and c09.
struct CorpusItem {
  std::size_t s;
  std::uint64_t seed;
  AdditiveCircuit circuit;
  SparsePoly poly;
};

const std::vector<CorpusItem>& corpus() {
  static const std::vector<CorpusItem> items = [] {
    std::vector<CorpusItem> out;
    for (std::uint64_t seed = 1; out.size() < kCorpusSize; ++seed) {
      const std::size_t s = seed % (kCorpusMaxS + 1);
      AdditiveCircuit c = random_circuit(s, seed, kCorpusBounds);
      SparsePoly f = circuit_expand(c);
      if (f.is_zero()) continue;
      out.push_back({s, seed, std::move(c), std::move(f)});
    }
    return out;
  }();
  return items;
}

Outcome c01() {
  oracle::Rng rng(101);
  Tally t;
  for (std::size_t trial = 0; trial < kNewtonTrials; ++trial) {
    const unsigned long p = rng.pick(kPrimes);
    const auto deg = static_cast<unsigned>(rng.range(1, kNewtonMaxDegree));
    SparsePoly f = SparsePoly::constant(Rational(1));
    std::map<Rational, std::uint64_t> planted;
    for (unsigned i = 0; i < deg; ++i) {
      const long a = rng.range(0, 5);
      long u = 0;
      while (u == 0 || u % static_cast<long>(p) == 0) u = rng.range(-30, 30);
      Integer root = u;
      for (long k = 0; k < a; ++k) root *= static_cast<long>(p);
      f = multiply(f, SparsePoly::x() - SparsePoly::constant(Rational(root)));
      ++planted[Rational(a)];
    }
    const ValuationProfile got = valuation_profile(f, Prime(p));
    const std::map<Rational, std::uint64_t> have(got.entries.begin(), got.entries.end());
    t.expect(have == planted && have.size() == got.entries.size(), "p=" + std::to_string(p) + " f=" + str(f));
  }
  return {t.failures == 0, t.text(), 10};
}

Outcome c02() {
  Tally t;
  for (unsigned long p : kPrimes) {
    for (unsigned s = 0; s <= kExtremalMaxS; ++s) {
      const FamilyMember m = family({FamilyKind::extremal, p, s, 1, 0});
      const std::size_t got = distinct_valuation_count(m.poly, Prime(p));
      t.expect(got == s, "p=" + std::to_string(p) + " s=" + std::to_string(s) + " got " + std::to_string(got));
      t.expect(circuit_validate(*m.circuit, m.poly), "extremal circuit does not expand to its polynomial");
    }
  }
  return {t.failures == 0, t.text(), 5};
}

Outcome c03() {
  Tally t;
  std::size_t ledger_breaks = 0;
  for (const auto& item : corpus()) {
    for (unsigned long p : kPrimes) {
      const Prime P(p);
      const std::string id = "seed=" + std::to_string(item.seed) + " p=" + std::to_string(p);
      const std::size_t distinct = distinct_valuation_count(item.poly, P);
      t.expect(distinct <= item.s * (item.s + 1) / 2, id + " distinct=" + std::to_string(distinct));
      const PropagatedHulls ph = propagate_hulls(item.circuit, P);
      bool covered = true;
      for (const auto& pt : oracle::coefficient_points(item.poly, p)) covered = covered && on_or_above(ph.hulls.back(), {pt.a, pt.v});
      t.expect(covered, id + " coefficient point below the propagated hull");
      const auto broken = ph.ledger_violation();
      if (broken) ++ledger_breaks;
      t.expect(!broken, id + " ledger L_{i+1} <= L_i+i+1 fails at i=" + std::to_string(broken.value_or(0)));
    }
  }
  Outcome o{t.failures == 0, t.text(), 60};
  o.detail += "; ledger breaks " + std::to_string(ledger_breaks);
  return o;
}

// Coefficients u * p^k with a unit u, so hulls have real structure.
SparsePoly padic_poly(oracle::Rng& rng, unsigned long p) {
  const auto deg = static_cast<unsigned>(rng.range(0, 6));
  std::vector<Integer> c(deg + 1);
  for (unsigned i = 0; i <= deg; ++i) {
    if (i != deg && i != 0 && rng.range(0, 3) == 0) continue;
    long u = 0;
    while (u == 0 || u % static_cast<long>(p) == 0) u = rng.range(-9, 9);
    Integer v = u;
    for (long k = rng.range(0, 4); k > 0; --k) v *= static_cast<long>(p);
    c[i] = v;
  }
  return SparsePoly::from_dense(c);
}

Outcome c04() {
  oracle::Rng rng(104);
  Tally t;
  for (std::size_t trial = 0; trial < kPairs; ++trial) {
    const unsigned long p = rng.pick(kPrimes);
    const Prime P(p);
    const SparsePoly f = padic_poly(rng, p);
    const SparsePoly g = padic_poly(rng, p);
    const LowerHull hf = newton_polygon(f, P);
    const LowerHull hg = newton_polygon(g, P);
    const LowerHull hfg = newton_polygon(multiply(f, g), P);
    t.expect(minkowski_sum(hf, hg) == hfg, "Newt(fg) != Newt f + Newt g for f=" + str(f) + " g=" + str(g));
    SlopeSet u = slope_set(hf);
    const SlopeSet sg = slope_set(hg);
    u.insert(sg.begin(), sg.end());
    t.expect(slope_set(hfg) == u, "slope union law fails for f=" + str(f) + " g=" + str(g));
  }
  return {t.failures == 0, t.text(), 5};
}

std::size_t distinct_abs_values(unsigned d) {
  std::vector<double> mags;
  for (unsigned k = 0; k < d; ++k) {
    const std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi * k / d) - 1.0;
    mags.push_back(std::abs(z));
  }
  std::sort(mags.begin(), mags.end());
  std::size_t count = 0;
  for (std::size_t i = 0; i < mags.size(); ++i) {
    if (i == 0 || mags[i] - mags[i - 1] > kClusterTolerance) ++count;
  }
  return count;
}

Outcome c05() {
  Tally complex_half;
  for (unsigned d = 1; d <= kCyclotomicComplexMaxD; ++d) {
    const std::size_t got = distinct_abs_values(d);
    const std::size_t want = (d + 1) / 2;
    complex_half.expect(got == want, "d=" + std::to_string(d) + ": " + std::to_string(got) + " vs " + std::to_string(want));
  }
  Tally padic_half;
  const std::size_t np2 = static_cast<std::size_t>(bound_Np(2).value.get_ui());
  for (unsigned d = 1; d <= kCyclotomicPadicMaxD; ++d) {
    const FamilyMember m = family({FamilyKind::cyclotomic_shift, 2, 0, d, 0});
    const std::size_t got = distinct_valuation_count(m.poly, Prime(2));
    padic_half.expect(got <= np2, "d=" + std::to_string(d) + ": " + std::to_string(got));
  }
  const bool pass = complex_half.failures == 0 && padic_half.failures == 0;
  return {pass,
          "distinct |z| = ceil(d/2): " + complex_half.text() + " | 2-adic distinct valuations <= " +
              std::to_string(np2) + ": " + padic_half.text(),
          5};
}

Outcome c06() {
  CacheOutcome cache;
  const TauCatalog cat = cached_catalog(ULTRA_ACCEPTANCE_CACHE, {kCatalogLength, 62}, &cache);
  Tally t;
  t.expect(cat.caps().max_len == kCatalogLength || cache.served_from_cache, "catalog shorter than requested");
  for (const auto& [key, packed] : cat.packed()) {
    const SparsePoly f = TauCatalog::poly_of(key);
    t.expect(f.degree() <= (std::uint64_t{1} << packed.tau), "deg > 2^tau for " + str(f));
  }
  const auto tau = [&](const char* s) { return tau_of(cat, parse_poly(s)); };
  t.expect(tau("x") == 0u, "tau(x) != 0");
  t.expect(tau("x^2") == 1u, "tau(x^2) != 1");
  t.expect(tau("x^2+x") == 2u, "tau(x^2+x) != 2");
  Outcome o{t.failures == 0, t.text(), 600};
  o.detail += "; " + std::to_string(cat.size()) + " entries, " + (cache.served_from_cache ? "cached" : "enumerated");
  return o;
}

Outcome c07() {
  oracle::Rng rng(107);
  Tally t;
  std::size_t done = 0;
  while (done < kHenselTrials) {
    const unsigned long p = rng.pick(kPrimes);
    const SparsePoly f = rng.poly(static_cast<unsigned>(rng.range(1, kHenselMaxDegree)), 20);
    if (squarefree_part(f).degree() != f.degree()) continue;
    const long dv = oracle::ord_rat(discriminant(primitive_part(f)), p);
    const std::size_t want =
        oracle::count_zp_by_residues(oracle::integer_coefficients(f), p, static_cast<unsigned>(2 * dv + 1));
    const std::size_t got = count_roots_zp(f, Prime(p));
    t.expect(got == want, "p=" + std::to_string(p) + " f=" + str(f));
    ++done;
  }
  return {t.failures == 0, t.text(), 60};
}

std::size_t integral_root_count(const SparsePoly& f) {
  std::size_t n = 0;
  for (const auto& r : rational_roots(f)) n += r.get_den() == 1 ? 1 : 0;
  return n;
}

Outcome c08() {
  Tally t;
  for (const auto& item : corpus()) {
    const Integer rat_bound = bound_rational(item.s).value;
    const std::size_t integral = integral_root_count(item.poly);
    t.expect(Integer(static_cast<unsigned long>(integral)) <= rat_bound, "seed=" + std::to_string(item.seed) + " integral roots");
    for (unsigned long p : kPrimes) {
      const std::size_t qp = count_roots_qp(item.poly, Prime(p));
      t.expect(Integer(static_cast<unsigned long>(qp)) <= bound_Qp(Prime(p), item.s).value,
               "seed=" + std::to_string(item.seed) + " p=" + std::to_string(p) + " Q_p roots");
    }
  }
  return {t.failures == 0, t.text(), 60};
}

Outcome c09() {
  Tally t;
  std::size_t domain_flags = 0;
  const std::vector<Rational> radii{Rational(1), Rational(2), Rational(1, 2)};
  // Bounds depend only on (p, s, r).
  std::map<std::tuple<unsigned long, std::size_t, std::size_t>, std::pair<BoundValue, BoundValue>> memo;
  for (const auto& item : corpus()) {
    for (unsigned long p : kPrimes) {
      for (std::size_t ri = 0; ri < radii.size(); ++ri) {
        auto key = std::make_tuple(p, item.s, ri);
        auto it = memo.find(key);
        if (it == memo.end()) {
          it = memo.emplace(key, std::pair{bound_cx(Prime(p), item.s, radii[ri]), bound_cx_chain(Prime(p), item.s, radii[ri])})
                   .first;
        }
        const auto& [cx, chain] = it->second;
        const Integer n = static_cast<unsigned long>(count_roots_in_disk(item.poly, Prime(p), radii[ri]));
        const std::string id = "seed=" + std::to_string(item.seed) + " p=" + std::to_string(p) + " r=" + to_string(radii[ri]);
        if (cx.in_domain) {
          t.expect(n <= cx.value, id + " above cx bound");
        } else {
          ++domain_flags;
        }
        if (chain.in_domain) {
          t.expect(n <= chain.value, id + " above chain bound");
        } else {
          ++domain_flags;
        }
      }
    }
  }
  Outcome o{t.failures == 0, t.text(), 60};
  o.detail += "; domain flags " + std::to_string(domain_flags);
  return o;
}

Outcome c10() {
  Tally t;
  std::ostringstream open_counts;
  for (unsigned j = 1; j <= kLogisticMaxJ; ++j) {
    const FamilyMember m = family({FamilyKind::logistic, 2, 0, 1, j});
    const std::size_t closed = sturm_count(m.poly, Interval::closed(0, 1));
    const std::size_t open = sturm_count(m.poly, Interval::open(0, 1));
    const std::size_t full = std::size_t{1} << j;
    t.expect(closed == full, "j=" + std::to_string(j) + " closed count " + std::to_string(closed));
    t.expect(open == full - 1, "j=" + std::to_string(j) + " open count " + std::to_string(open));
    open_counts << (j > 1 ? "," : "") << open;
  }
  Outcome o{t.failures == 0, t.text(), 10};
  o.detail += "; open (0,1) counts " + open_counts.str() + " vs claimed 2^j (x=0 is always a root)";
  return o;
}

Outcome c11() {
  Tally t;
  std::optional<double> previous;
  std::ostringstream exps;
  for (unsigned j = 0; j <= kShubSmaleMaxJ; ++j) {
    const FamilyMember m = family({FamilyKind::shub_smale, 2, 0, 1, j});
    const TauRatio r = tau_ratio(m.poly, static_cast<unsigned>(std::max<std::size_t>(1, m.slp->length())), true);
    t.expect(r.integral_roots == (std::size_t{1} << j), "j=" + std::to_string(j) + " integral roots " +
                                                            std::to_string(r.integral_roots));
    const double e = r.implied_exponent.value_or(0.0);
    if (previous) t.expect(e > *previous, "j=" + std::to_string(j) + " exponent not increasing");
    previous = e;
    exps << (j ? "," : "") << e;
  }
  Outcome o{t.failures == 0, t.text(), 10};
  o.detail += "; exponents " + exps.str();
  return o;
}

Outcome c12() {
  const std::string got = digits(Rational(12345, 49), Prime(7), 5).str();
  return {got == "506.64", "digits(12345/49, 7, 5) = " + got, 1};
}

Outcome c13() {
  Tally t;
  t.expect(bound_Np(3).value == 6, "N_p(3) != 6");
  t.expect(bound_rational(1).value == 16, "rational(1) != 16");
  t.expect(bound_pcfew(Prime(2), {1}, {{1}}, {1}).value == 0, "pcfew with m=(1) != 0");
  std::vector<BoundValue> interval;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    for (std::size_t s = 0; s <= 6; ++s) {
      for (const Rational& r : {Rational(1), Rational(2), Rational(1, 2), Rational(1, 3)}) {
        interval.push_back(bound_cx(Prime(p), s, r));
        interval.push_back(bound_cx_chain(Prime(p), s, r));
      }
    }
    interval.push_back(bound_pcfew(Prime(p), {2}, {{1}}, {1}));
    interval.push_back(bound_pcfew(Prime(p), {2, 2}, {{1}, {1, 2}}, {1, 1}));
    interval.push_back(bound_pcfew(Prime(p), {2, 3, 3}, {{1, 2}, {1, 2, 3}, {1, 2, 3}}, {1, 1, 1}));
    interval.push_back(bound_amd(Prime(p), {2}, {1}));
    interval.push_back(bound_amd(Prime(p), {3, 2}, {1, 2}));
  }
  t.expect(bound_cx(Prime(2), 1, 1).value == 8, "cx(2,1,1) != 8");
  t.expect(bound_amd(Prime(2), {2}, {1}).value == 2, "amd(2,(2),(1)) != 2");
  for (const auto& b : interval) {
    t.expect(b.in_domain, "domain flag");
    if (!b.enclosure.empty()) t.expect(b.enclosure_width < kMaxWidth, "width " + std::to_string(b.enclosure_width));
  }
  return {t.failures == 0, t.text(), 5};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> kCriteria{
    {"c01", c01}, {"c02", c02}, {"c03", c03}, {"c04", c04}, {"c05", c05}, {"c06", c06}, {"c07", c07},
    {"c08", c08}, {"c09", c09}, {"c10", c10}, {"c11", c11}, {"c12", c12}, {"c13", c13}};

const std::map<std::string, std::string> kTitles{
    {"c01", "valuation profile equals planted root valuations"},
    {"c02", "extremal family has s distinct root valuations"},
    {"c03", "corpus: distinct valuations <= s(s+1)/2, hull containment, edge ledger"},
    {"c04", "Newt(fg) = Newt f + Newt g and slope union law"},
    {"c05", "(x+1)^d-1: ceil(d/2) distinct |roots| and 2-adic count <= N_p(2)"},
    {"c06", "tau catalog to length 5, deg <= 2^tau, small tau values"},
    {"c07", "Z_p counts equal residue lifting"},
    {"c08", "corpus: Q_p roots and integral roots under their bounds"},
    {"c09", "corpus: disk roots under the cx and chain bounds"},
    {"c10", "logistic family Sturm counts"},
    {"c11", "Shub-Smale family roots and implied exponents"},
    {"c12", "digits(12345/49, 7, 5) = 506.64"},
    {"c13", "bound evaluator values and certified widths"}};

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> wanted(argv + 1, argv + argc);
  if (wanted.empty()) {
    for (const auto& [id, fn] : kCriteria) wanted.push_back(id);
  }
  int failed = 0;
  for (const auto& id : wanted) {
    auto it = std::find_if(kCriteria.begin(), kCriteria.end(), [&](const auto& c) { return c.first == id; });
    if (it == kCriteria.end()) {
      std::cerr << "unknown criterion " << id << "\n";
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = it->second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), 0};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.limit_seconds > 0 && secs > o.limit_seconds) {
      o.pass = false;
      o.detail += "; over time limit " + std::to_string(o.limit_seconds) + " s";
    }
    std::cout << id << " " << (o.pass ? "PASS" : "FAIL") << "  " << kTitles.at(id) << "  [" << o.detail << "; "
              << std::fixed << std::setprecision(2) << secs << " s]" << std::endl;
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
