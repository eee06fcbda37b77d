#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ultra/circuit.hpp"
#include "ultra/json_io.hpp"
#include "ultra/padic.hpp"

namespace ultra {

// A bound formula's value: an exact rational, or an interval evaluation rounded
// to a certified integer, or a domain flag.
struct BoundValue {
  enum class Rounding { none, floor, ceil };

  bool in_domain = true;
  std::string domain_note;
  // Integer used for comparisons: the exact value's ceiling, or the certified floor/ceiling.
  Integer value;
  std::optional<Rational> exact;
  Rounding rounding = Rounding::none;
  // Interval evaluations only.
  std::string enclosure;
  double enclosure_width = 0.0;
  long precision_bits = 0;

  bool certified() const { return in_domain; }
  static BoundValue from_exact(const Rational& q);
  static BoundValue domain(std::string note);
};

Json bound_to_json(const BoundValue& b);

// Precision schedule for interval evaluations: start, doubling up to the cap.
inline constexpr long kStartPrecision = 64;
inline constexpr long kMaxPrecision = 1 << 16;

BoundValue bound_Np(std::size_t s);
BoundValue bound_Qp(const Prime& p, std::size_t s);
BoundValue bound_rational(std::size_t s);
BoundValue bound_cx(const Prime& p, std::size_t s, const Rational& r);
BoundValue bound_pcfew(const Prime& p, const std::vector<long>& m, const std::vector<std::vector<std::size_t>>& nsets,
                       const std::vector<Rational>& r);
BoundValue bound_cx_chain(const Prime& p, std::size_t s, const Rational& r);
BoundValue bound_amd(const Prime& p, const std::vector<long>& m, const std::vector<long>& n);

// Formula text shown next to each bound.
namespace formula {
inline constexpr const char* kNp = "s(s+1)/2";
inline constexpr const char* kQp = "1+(p-1)s^2(7.5)^s s! N_p(s)";
inline constexpr const char* kRational = "1+s^3(s+1)(7.5)^s s!";
inline constexpr const char* kRationalComposed = "1+(p-1)s^2(7.5)^s s! N_p(s) at p=2";
inline constexpr const char* kCx = "s^2 s! (3+(3/r)log_p(2/(r log p)))^s";
inline constexpr const char* kCxChain = "rho + sum_{l=3..s} C_p((2,3,..,3),(2,3,..,l,l),{r}^l)";
inline constexpr const char* kPcfew =
    "floor(c^n prod (m_i-1)[(sum_{j in N_i} r_j)+log_p((m_i-1)^#N_i/((prod r_j) log^#N_i p))]/r_i)";
inline constexpr const char* kAmd = "(prod (p-1)m_i(m_i-1)/2) floor(prod c(m_i-1)N_i[1+log_p((m_i-1)/log p)])";
}  // namespace formula

struct BoundRow {
  std::string quantity;
  std::string formula;
  Integer empirical;
  BoundValue bound;
  // empirical <= bound; rows whose bound is out of domain pass vacuously and are flagged.
  bool pass = true;
};

struct BoundReport {
  std::string id;
  unsigned long p = 2;
  Rational r;
  std::size_t s = 0;
  std::string poly;
  std::vector<BoundRow> rows;

  std::size_t violations() const;
  std::size_t domain_flags() const;
};

struct ReportOptions {
  std::uint64_t degree_cap = kDefaultDegreeCap;
};

BoundReport verify_report(const AdditiveCircuit& c, const Prime& p, const Rational& r, const std::string& id = "",
                          const ReportOptions& options = {});
Json report_to_json(const BoundReport& report);
std::string report_to_text(const BoundReport& report);

struct TauRatio {
  std::string id;
  unsigned tau = 0;
  bool tau_is_upper_bound = false;
  std::size_t integral_roots = 0;
  // log(#roots)/log(tau+1); absent when there are no integral roots. When tau is only an
  // upper bound this underestimates the true exponent.
  std::optional<double> implied_exponent;
};

TauRatio tau_ratio(const SparsePoly& f, unsigned tau, bool tau_is_upper_bound = false, const std::string& id = "");
Json tau_ratio_to_json(const TauRatio& t);

}  // namespace ultra
