#include <cmath>
#include <iomanip>
#include <sstream>

#include "ultra/bounds.hpp"
#include "ultra/error.hpp"
#include "ultra/newton.hpp"

namespace ultra {

namespace {

std::size_t integral_count(const std::vector<Rational>& roots) {
  std::size_t n = 0;
  for (const auto& q : roots) n += q.get_den() == 1 ? 1 : 0;
  return n;
}

std::string rounding_name(BoundValue::Rounding r) {
  switch (r) {
    case BoundValue::Rounding::none:
      return "exact";
    case BoundValue::Rounding::floor:
      return "floor";
    case BoundValue::Rounding::ceil:
      return "ceil";
  }
  return "?";
}

}  // namespace

std::size_t BoundReport::violations() const {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.pass ? 0 : 1;
  return n;
}

std::size_t BoundReport::domain_flags() const {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.bound.in_domain ? 0 : 1;
  return n;
}

BoundReport verify_report(const AdditiveCircuit& c, const Prime& p, const Rational& r, const std::string& id,
                          const ReportOptions& options) {
  if (r <= 0) throw Error("radius must be positive");
  const SparsePoly f = circuit_expand(c, options.degree_cap);
  if (f.is_zero()) throw Error("circuit expands to the zero polynomial");
  const std::size_t s = c.s();

  BoundReport rep;
  rep.id = id;
  rep.p = p.value();
  rep.r = r;
  rep.s = s;
  rep.poly = to_string(f);

  const auto roots = rational_roots(f);
  const Integer distinct(static_cast<unsigned long>(distinct_valuation_count(f, p)));
  const Integer qp(static_cast<unsigned long>(count_roots_qp(f, p)));
  const Integer rat(static_cast<unsigned long>(roots.size()));
  const Integer integral(static_cast<unsigned long>(integral_count(roots)));
  const Integer disk(static_cast<unsigned long>(count_roots_in_disk(f, p, r)));

  const BoundValue rational_bound = bound_rational(s);
  auto add = [&](std::string quantity, std::string label, const Integer& empirical, BoundValue bound) {
    BoundRow row{std::move(quantity), std::move(label), empirical, std::move(bound), true};
    row.pass = !row.bound.in_domain || row.empirical <= row.bound.value;
    rep.rows.push_back(std::move(row));
  };
  add("distinct root valuations", formula::kNp, distinct, bound_Np(s));
  add("Q_p roots", formula::kQp, qp, bound_Qp(p, s));
  add("rational roots", formula::kRational, rat, rational_bound);
  add("integral roots", formula::kRational, integral, rational_bound);
  add("rational roots", formula::kRationalComposed, rat, bound_Qp(Prime(2), s));
  add("disk roots", formula::kCx, disk, bound_cx(p, s, r));
  add("disk roots", formula::kCxChain, disk, bound_cx_chain(p, s, r));
  return rep;
}

Json report_to_json(const BoundReport& report) {
  Json j;
  j["id"] = report.id;
  j["p"] = report.p;
  j["r"] = to_string(report.r);
  j["s"] = report.s;
  j["poly"] = report.poly;
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json jr;
    jr["quantity"] = row.quantity;
    jr["formula"] = row.formula;
    jr["empirical"] = to_string(row.empirical);
    jr["bound"] = bound_to_json(row.bound);
    jr["pass"] = row.pass;
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  j["violations"] = report.violations();
  j["domain_flags"] = report.domain_flags();
  return j;
}

std::string report_to_text(const BoundReport& report) {
  std::ostringstream out;
  out << "report " << (report.id.empty() ? "-" : report.id) << "  p=" << report.p << "  r=" << to_string(report.r)
      << "  s=" << report.s << "\n";
  out << "  f = " << report.poly << "\n";
  std::size_t wq = 8;
  std::size_t wf = 7;
  std::size_t we = 9;
  for (const auto& row : report.rows) {
    wq = std::max(wq, row.quantity.size());
    wf = std::max(wf, row.formula.size());
    we = std::max(we, to_string(row.empirical).size());
  }
  auto line = [&](const std::string& q, const std::string& f, const std::string& e, const std::string& b,
                  const std::string& how, const std::string& ok) {
    out << "  " << std::left << std::setw(static_cast<int>(wq)) << q << "  " << std::setw(static_cast<int>(wf)) << f
        << "  " << std::right << std::setw(static_cast<int>(we)) << e << "  " << std::left << b;
    if (!how.empty()) out << " (" << how << ")";
    out << "  " << ok << "\n";
  };
  line("quantity", "formula", "empirical", "bound", "", "status");
  for (const auto& row : report.rows) {
    if (!row.bound.in_domain) {
      line(row.quantity, row.formula, to_string(row.empirical), "n/a", row.bound.domain_note, "DOMAIN");
      continue;
    }
    std::string how = rounding_name(row.bound.rounding);
    if (row.bound.exact && row.bound.rounding != BoundValue::Rounding::none) how += " of " + to_string(*row.bound.exact);
    line(row.quantity, row.formula, to_string(row.empirical), to_string(row.bound.value), how,
         row.pass ? "ok" : "VIOLATION");
  }
  return out.str();
}

TauRatio tau_ratio(const SparsePoly& f, unsigned tau, bool tau_is_upper_bound, const std::string& id) {
  if (tau < 1) throw Error("tau_ratio needs tau >= 1");
  if (f.is_zero()) throw Error("zero polynomial");
  TauRatio t;
  t.id = id;
  t.tau = tau;
  t.tau_is_upper_bound = tau_is_upper_bound;
  t.integral_roots = integral_count(rational_roots(f));
  if (t.integral_roots >= 1) {
    t.implied_exponent = std::log(static_cast<double>(t.integral_roots)) / std::log(static_cast<double>(tau) + 1.0);
  }
  return t;
}

Json tau_ratio_to_json(const TauRatio& t) {
  Json j;
  j["id"] = t.id;
  j["tau"] = t.tau;
  j["tau_is_upper_bound"] = t.tau_is_upper_bound;
  j["integral_roots"] = t.integral_roots;
  if (t.implied_exponent) {
    j["implied_exponent"] = *t.implied_exponent;
    // With tau only an upper bound, the exponent is a lower bound on the true one.
    j["exponent_is_lower_bound"] = t.tau_is_upper_bound;
  } else {
    j["implied_exponent"] = nullptr;
  }
  return j;
}

}  // namespace ultra
