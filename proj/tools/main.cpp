// ultra: command-line front end.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ultra/bounds.hpp"
#include "ultra/circuit.hpp"
#include "ultra/error.hpp"
#include "ultra/newton.hpp"
#include "ultra/padic.hpp"
#include "ultra/polynomial.hpp"
#include "ultra/search.hpp"

using namespace ultra;

namespace {

enum class Format { text, json };

struct Globals {
  unsigned long prime = 2;
  std::string radius = "1";
  std::uint64_t degree_cap = kDefaultDegreeCap;
  std::uint64_t seed = 1;
  std::string cache_dir;
  Format format = Format::text;

  Prime p() const { return Prime(prime); }
  Rational r() const {
    Rational q = parse_rational(radius);
    if (q <= 0) throw ParseError("radius must be a positive rational");
    return q;
  }
  bool json() const { return format == Format::json; }
};

// Exit codes.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCap = 2;
constexpr int kInvariant = 3;

std::string default_cache_dir() {
  if (const char* env = std::getenv("ULTRA_CACHE_DIR"); env != nullptr && *env != '\0') return env;
  return ".ultra-cache";
}

SparsePoly read_poly(const std::string& text) {
  SparsePoly f = parse_poly(text);
  if (f.is_zero()) throw ParseError("zero polynomial");
  return f;
}

void emit(const Globals& g, const Json& j, const std::string& text) {
  if (g.json()) {
    std::cout << dump(j) << "\n";
  } else {
    std::cout << text;
  }
}

std::string hull_text(const LowerHull& h) {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : h.vertices()) {
    out << (first ? "" : ",") << "(" << v.a << "," << to_string(v.v) << ")";
    first = false;
  }
  return out.str();
}

std::string profile_text(const ValuationProfile& profile) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [v, m] : profile.entries) {
    out << (first ? "" : ",") << to_string(v) << "->" << m;
    first = false;
  }
  out << "}";
  return out.str();
}

std::string roots_text(const std::vector<Rational>& roots) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < roots.size(); ++i) out << (i ? "," : "") << to_string(roots[i]);
  out << "}";
  return out.str();
}

Json roots_json(const std::vector<Rational>& roots) {
  Json a = Json::array();
  for (const auto& q : roots) a.push_back(to_string(q));
  return a;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

// ---- commands ---------------------------------------------------------------

int cmd_newton(const Globals& g, const std::string& text) {
  const SparsePoly f = read_poly(text);
  const Prime p = g.p();
  const LowerHull h = newton_polygon(f, p);
  const ValuationProfile profile = valuation_profile(f, p);
  Json j;
  j["poly"] = to_string(f);
  j["p"] = p.value();
  j["hull"] = hull_to_json(h);
  Json slopes = Json::array();
  std::ostringstream st;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    slopes.push_back(to_string(h.slope(i)));
    st << (i ? " " : "") << to_string(h.slope(i));
  }
  j["slopes"] = slopes;
  j["profile"] = profile_to_json(profile);
  std::ostringstream out;
  out << "poly     " << to_string(f) << "\n"
      << "p        " << p.value() << "\n"
      << "vertices " << hull_text(h) << "\n"
      << "slopes   " << (h.edge_count() ? st.str() : "(none)") << "\n"
      << "profile  " << profile_text(profile) << "\n";
  emit(g, j, out.str());
  return kOk;
}

int cmd_valuations(const Globals& g, const std::string& text) {
  const SparsePoly f = read_poly(text);
  const Prime p = g.p();
  const ValuationProfile profile = valuation_profile(f, p);
  const std::size_t distinct = distinct_valuation_count(f, p);
  Json j;
  j["poly"] = to_string(f);
  j["p"] = p.value();
  j["profile"] = profile_to_json(profile);
  j["distinct_valuations"] = distinct;
  j["roots"] = profile.total();
  std::ostringstream out;
  out << "profile             " << profile_text(profile) << "\n"
      << "distinct valuations " << distinct << "\n"
      << "roots in C_p        " << profile.total() << "\n";
  emit(g, j, out.str());
  return kOk;
}

int cmd_disk_count(const Globals& g, const std::string& text, bool multiplicity) {
  const SparsePoly f = read_poly(text);
  const Prime p = g.p();
  const Rational r = g.r();
  const auto mode = multiplicity ? RootCounting::with_multiplicity : RootCounting::distinct;
  const std::size_t n = count_roots_in_disk(f, p, r, mode);
  Json j;
  j["poly"] = to_string(f);
  j["p"] = p.value();
  j["r"] = to_string(r);
  j["counting"] = multiplicity ? "with_multiplicity" : "distinct";
  j["disk_roots"] = n;
  std::ostringstream out;
  out << "roots with ord_" << p.value() << "(x-1) >= " << to_string(r) << ": " << n
      << (multiplicity ? " (with multiplicity)" : " (distinct)") << "\n";
  emit(g, j, out.str());
  return kOk;
}

int cmd_zp_qp(const Globals& g, const std::string& text, bool qp) {
  const SparsePoly f = read_poly(text);
  const Prime p = g.p();
  const std::size_t n = qp ? count_roots_qp(f, p) : count_roots_zp(f, p);
  const std::string field = qp ? "Q_" : "Z_";
  Json j;
  j["poly"] = to_string(f);
  j["p"] = p.value();
  j[qp ? "qp_roots" : "zp_roots"] = n;
  emit(g, j, "distinct roots in " + field + std::to_string(p.value()) + ": " + std::to_string(n) + "\n");
  return kOk;
}

std::string slp_text(const Slp& prog) {
  std::ostringstream out;
  for (std::size_t i = 0; i < prog.ops().size(); ++i) {
    const auto& ins = prog.ops()[i];
    const char op = ins.op == ArithOp::add ? '+' : ins.op == ArithOp::sub ? '-' : '*';
    out << (i ? "; " : "") << "v" << i + 2 << "=v" << ins.left << op << "v" << ins.right;
  }
  if (prog.ops().empty() || prog.has_explicit_output()) out << (prog.ops().empty() ? "" : "; ") << "out=v" << prog.output();
  return out.str();
}

int cmd_tau(const Globals& g, const std::string& text, unsigned max_len) {
  const SparsePoly f = parse_poly(text);
  EnumerationCaps caps;
  caps.max_len = max_len;
  const TauCatalog catalog = cached_catalog(g.cache_dir, caps);
  const auto entry = catalog.find(f);
  Json j;
  j["poly"] = to_string(f);
  j["max_len"] = max_len;
  std::ostringstream out;
  if (!entry) {
    j["tau"] = nullptr;
    j["tau_exceeds"] = max_len;
    out << "tau(" << to_string(f) << ") > " << max_len << "\n";
  } else {
    j["tau"] = entry->tau;
    j["witness"] = slp_to_json(entry->witness);
    out << "tau(" << to_string(f) << ") = " << entry->tau << "\n"
        << "witness " << slp_text(entry->witness) << "\n";
    if (entry->tau >= 1 && !f.is_zero()) {
      const TauRatio t = tau_ratio(f, entry->tau);
      j["ratio"] = tau_ratio_to_json(t);
      out << "integral roots " << t.integral_roots;
      if (t.implied_exponent) out << ", implied exponent " << *t.implied_exponent;
      out << "\n";
    }
  }
  emit(g, j, out.str());
  return kOk;
}

int cmd_sigma_upper(const Globals& g, const std::string& text, const SigmaSearchBounds& bounds) {
  const SparsePoly f = read_poly(text);
  const auto found = sigma_upper_search(f, bounds);
  Json j;
  j["poly"] = to_string(f);
  std::ostringstream out;
  if (!found) {
    j["sigma_upper"] = nullptr;
    j["searched_s_max"] = bounds.s_max;
    out << "no presentation with s <= " << bounds.s_max << " inside the search bounds\n";
  } else {
    j["sigma_upper"] = found->s;
    j["circuit"] = circuit_to_json(found->circuit);
    out << "sigma(" << to_string(f) << ") <= " << found->s << "\n"
        << "circuit " << dump(circuit_to_json(found->circuit)) << "\n";
  }
  emit(g, j, out.str());
  return kOk;
}

int cmd_enumerate(const Globals& g, const EnumerationCaps& caps) {
  CacheOutcome outcome;
  const TauCatalog catalog = cached_catalog(g.cache_dir, caps, &outcome);
  const auto counts = catalog.counts_by_length();
  Json j;
  j["cache_dir"] = g.cache_dir;
  j["max_len"] = caps.max_len;
  j["served_from_cache"] = outcome.served_from_cache;
  j["lengths_written"] = outcome.lengths_written;
  j["entries"] = catalog.size();
  j["pruned"] = catalog.pruned();
  j["counts_by_length"] = counts;
  std::ostringstream out;
  out << "catalog  " << g.cache_dir << " (max length " << caps.max_len << ")\n"
      << "source   " << (outcome.served_from_cache ? "cache" : "enumerated") << "\n"
      << "entries  " << catalog.size() << "\n"
      << "pruned   " << catalog.pruned() << "\n";
  for (std::size_t k = 0; k < counts.size(); ++k) out << "  tau=" << k << "  " << counts[k] << "\n";
  if (!outcome.lengths_written.empty()) {
    out << "written ";
    for (auto k : outcome.lengths_written) out << " tau_" << k;
    out << "\n";
  }
  emit(g, j, out.str());
  return kOk;
}

// Empirical counts for a bare polynomial (no circuit, so no bounds).
Json analyze_poly(const SparsePoly& f, const Prime& p, const Rational& r, std::ostringstream& out) {
  const auto roots = rational_roots(f);
  std::size_t integral = 0;
  for (const auto& q : roots) integral += q.get_den() == 1 ? 1 : 0;
  const ValuationProfile profile = valuation_profile(f, p);
  Json j;
  j["profile"] = profile_to_json(profile);
  j["distinct_valuations"] = distinct_valuation_count(f, p);
  j["qp_roots"] = count_roots_qp(f, p);
  j["rational_roots"] = roots_json(roots);
  j["integral_roots"] = integral;
  j["disk_roots"] = count_roots_in_disk(f, p, r);
  out << "profile             " << profile_text(profile) << "\n"
      << "distinct valuations " << j["distinct_valuations"].get<std::size_t>() << "\n"
      << "Q_p roots           " << j["qp_roots"].get<std::size_t>() << "\n"
      << "rational roots      " << roots_text(roots) << "\n"
      << "disk roots (r=" << to_string(r) << ")  " << j["disk_roots"].get<std::size_t>() << "\n";
  return j;
}

int cmd_family(const Globals& g, const std::string& kind, std::optional<unsigned long> fp, unsigned s, unsigned d,
               unsigned jj, bool analyze) {
  FamilySpec spec;
  spec.kind = family_kind_from_name(kind);
  spec.p = fp.value_or(g.prime);
  spec.s = s;
  spec.d = d;
  spec.j = jj;
  const FamilyMember m = family(spec, g.degree_cap);
  Json j;
  j["family"] = family_kind_name(spec.kind);
  j["poly"] = to_string(m.poly);
  std::ostringstream out;
  out << "family " << family_kind_name(spec.kind) << "\n"
      << "poly   " << to_string(m.poly) << "\n";
  if (m.base) {
    j["base"] = to_string(*m.base);
    out << "g_j    " << to_string(*m.base) << "\n";
  }
  if (m.slp) {
    j["slp"] = slp_to_json(*m.slp);
    j["slp_length"] = m.slp->length();
    out << "slp length " << m.slp->length() << "\n";
  }
  if (m.circuit) {
    j["circuit"] = circuit_to_json(*m.circuit);
    out << "circuit s=" << m.circuit->s() << " " << dump(circuit_to_json(*m.circuit)) << "\n";
  }
  int code = kOk;
  if (analyze) {
    const Prime p(spec.kind == FamilyKind::extremal ? spec.p : g.prime);
    const Rational r = g.r();
    Json a = analyze_poly(m.poly, p, r, out);
    if (m.circuit) {
      const BoundReport rep = verify_report(*m.circuit, p, r, family_kind_name(spec.kind), {g.degree_cap});
      a["report"] = report_to_json(rep);
      out << report_to_text(rep);
      if (rep.violations() > 0) code = kInvariant;
    }
    if (spec.kind == FamilyKind::logistic) {
      const std::size_t open = sturm_count(m.poly, Interval::open(Rational(0), Rational(1)));
      const std::size_t closed = sturm_count(m.poly, Interval::closed(Rational(0), Rational(1)));
      const std::size_t expected = std::size_t{1} << spec.j;
      a["sturm_open_0_1"] = open;
      a["sturm_closed_0_1"] = closed;
      a["claimed_open_count"] = expected;
      out << "roots of g_j(x)-x in (0,1): " << open << "   in [0,1]: " << closed << "   (claimed 2^j = " << expected
          << " in the open interval)\n";
    }
    if (m.slp && m.slp->length() >= 1) {
      const TauRatio t = tau_ratio(m.poly, static_cast<unsigned>(m.slp->length()), true, family_kind_name(spec.kind));
      a["tau_ratio"] = tau_ratio_to_json(t);
      out << "tau <= " << t.tau << ", integral roots " << t.integral_roots;
      if (t.implied_exponent) out << ", implied exponent >= " << *t.implied_exponent;
      out << "\n";
    }
    j["analysis"] = a;
  }
  emit(g, j, out.str());
  return code;
}

int cmd_verify(const Globals& g, std::size_t s, std::size_t count, const CircuitBounds& cb) {
  const Prime p = g.p();
  const Rational r = g.r();
  std::size_t reports = 0;
  std::size_t violations = 0;
  std::size_t domain_flags = 0;
  std::size_t cap_skips = 0;
  std::size_t zero_skips = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t seed = g.seed + i;
    const AdditiveCircuit c = random_circuit(s, seed, cb);
    const std::string id = "s" + std::to_string(s) + "-seed" + std::to_string(seed);
    try {
      if (circuit_expand(c, g.degree_cap).is_zero()) {
        ++zero_skips;
        continue;
      }
      const BoundReport rep = verify_report(c, p, r, id, {g.degree_cap});
      ++reports;
      violations += rep.violations();
      domain_flags += rep.domain_flags();
      if (g.json()) {
        Json j = report_to_json(rep);
        j["circuit"] = circuit_to_json(c);
        std::cout << dump(j) << "\n";
      } else {
        std::cout << report_to_text(rep);
      }
    } catch (const DegreeCapExceeded&) {
      ++cap_skips;
    }
  }
  Json summary;
  summary["summary"] = true;
  summary["s"] = s;
  summary["p"] = p.value();
  summary["r"] = to_string(r);
  summary["seed"] = g.seed;
  summary["requested"] = count;
  summary["reports"] = reports;
  summary["violations"] = violations;
  summary["domain_flags"] = domain_flags;
  summary["degree_cap_skips"] = cap_skips;
  summary["zero_expansion_skips"] = zero_skips;
  std::ostringstream out;
  out << "summary: " << reports << " reports, " << violations << " violations, " << domain_flags
      << " domain flags, " << cap_skips << " degree-cap skips, " << zero_skips << " zero expansions skipped\n";
  emit(g, summary, out.str());
  if (violations > 0) {
    std::cerr << "ultra: " << violations << " bound violation(s) found\n";
    return kInvariant;
  }
  return kOk;
}

int cmd_digits(const Globals& g, const std::string& q, std::size_t n) {
  const Rational x = parse_rational(q);
  const DigitString ds = digits(x, g.p(), n);
  Json j;
  j["q"] = to_string(x);
  j["p"] = g.prime;
  j["n"] = n;
  j["digits"] = ds.str();
  emit(g, j, ds.str() + "\n");
  return kOk;
}

void bound_line(std::ostringstream& out, const std::string& name, const std::string& label, const BoundValue& b) {
  out << "  " << name << "  " << label << "\n      = ";
  if (!b.in_domain) {
    out << "out of domain: " << b.domain_note << "\n";
    return;
  }
  out << to_string(b.value);
  if (b.exact && b.rounding != BoundValue::Rounding::none) out << "  (ceiling of " << to_string(*b.exact) << ")";
  if (!b.enclosure.empty()) {
    out << "  (" << (b.rounding == BoundValue::Rounding::floor ? "floor" : "ceiling") << " of " << b.enclosure
        << ", " << b.precision_bits << " bits)";
  }
  out << "\n";
}

int cmd_bounds(const Globals& g, std::size_t s, const std::string& m_text, const std::string& nsets_text,
               const std::string& rs_text, const std::string& n_text) {
  const Prime p = g.p();
  const Rational r = g.r();
  Json j;
  j["p"] = p.value();
  j["s"] = s;
  j["r"] = to_string(r);
  std::ostringstream out;
  out << "bounds at p=" << p.value() << " s=" << s << " r=" << to_string(r) << "\n";
  auto add = [&](const std::string& key, const std::string& label, const BoundValue& b) {
    Json e = bound_to_json(b);
    e["formula"] = label;
    j[key] = e;
    bound_line(out, key, label, b);
  };
  add("N_p", formula::kNp, bound_Np(s));
  add("Q_p", formula::kQp, bound_Qp(p, s));
  add("rational", formula::kRational, bound_rational(s));
  add("rational_composed", formula::kRationalComposed, bound_Qp(Prime(2), s));
  add("cx", formula::kCx, bound_cx(p, s, r));
  add("cx_chain", formula::kCxChain, bound_cx_chain(p, s, r));
  if (!m_text.empty()) {
    std::vector<long> m;
    for (const auto& part : split(m_text, ',')) m.push_back(std::stol(part));
    if (!nsets_text.empty()) {
      std::vector<std::vector<std::size_t>> nsets;
      for (const auto& set : split(nsets_text, ';')) {
        std::vector<std::size_t> idx;
        for (const auto& part : split(set, ',')) idx.push_back(std::stoul(part));
        nsets.push_back(std::move(idx));
      }
      std::vector<Rational> rs;
      if (rs_text.empty()) {
        rs.assign(m.size(), r);
      } else {
        for (const auto& part : split(rs_text, ',')) rs.push_back(parse_rational(part));
      }
      add("pcfew", formula::kPcfew, bound_pcfew(p, m, nsets, rs));
    }
    if (!n_text.empty()) {
      std::vector<long> nv;
      for (const auto& part : split(n_text, ',')) nv.push_back(std::stol(part));
      add("amd", formula::kAmd, bound_amd(p, m, nv));
    }
  }
  emit(g, j, out.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic Newton polygons, root counts and complexity bounds for polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  g.cache_dir = default_cache_dir();
  std::string format = "text";
  app.add_option("-p,--prime", g.prime, "prime p")->check(CLI::PositiveNumber);
  app.add_option("--radius", g.radius, "disk radius r (rational, e.g. 1/2)");
  app.add_option("--degree-cap", g.degree_cap, "largest degree any expansion may reach");
  app.add_option("--seed", g.seed, "base seed for random corpora");
  app.add_option("--cache-dir", g.cache_dir, "catalog cache directory (default $ULTRA_CACHE_DIR or .ultra-cache)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::string poly;
  bool multiplicity = false;

  auto* newton = app.add_subcommand("newton", "lower Newton polygon and valuation profile");
  newton->add_option("poly", poly, "polynomial, e.g. \"x^2-6*x+8\"")->required();
  auto* valuations = app.add_subcommand("valuations", "root valuation profile");
  valuations->add_option("poly", poly)->required();
  auto* disk = app.add_subcommand("disk-count", "roots x in C_p with ord_p(x-1) >= r");
  disk->add_option("poly", poly)->required();
  disk->add_flag("--with-multiplicity", multiplicity, "count roots with multiplicity");
  auto* zp = app.add_subcommand("zp-count", "distinct roots in Z_p");
  zp->add_option("poly", poly)->required();
  auto* qp = app.add_subcommand("qp-count", "distinct roots in Q_p");
  qp->add_option("poly", poly)->required();

  unsigned max_len = 4;
  auto* tau = app.add_subcommand("tau", "shortest straight-line program (from the cached catalog)");
  tau->add_option("poly", poly)->required();
  tau->add_option("--max-len", max_len, "catalog length to consult")->check(CLI::Range(0u, kSlpHardLimit));

  SigmaSearchBounds sb;
  auto* sigma = app.add_subcommand("sigma-upper", "search for a small additive circuit");
  sigma->add_option("poly", poly)->required();
  sigma->add_option("--s-max", sb.s_max, "largest gate count tried");
  sigma->add_option("--max-exponent", sb.max_exponent, "largest exponent in a gate");
  sigma->add_option("--max-constant", sb.max_constant, "largest |constant| in a gate");

  EnumerationCaps caps;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate programs into the catalog cache");
  enumerate->add_option("--max-len", caps.max_len, "longest program")->check(CLI::Range(0u, kSlpHardLimit));
  enumerate->add_option("--coefficient-bits", caps.coefficient_bits, "prune coefficients of this many bits")
      ->check(CLI::Range(2u, 62u));

  std::string kind;
  std::optional<unsigned long> family_p;
  unsigned fs = 1;
  unsigned fd = 1;
  unsigned fj = 1;
  bool analyze = false;
  auto* fam = app.add_subcommand("family", "named polynomial families");
  fam->add_option("kind", kind, "extremal, cyclotomic_shift, logistic, shub_smale")->required();
  fam->add_option("--p", family_p, "prime for the extremal family (defaults to --prime)");
  fam->add_option("--s", fs, "gate count (extremal)");
  fam->add_option("--d", fd, "degree (cyclotomic_shift)");
  fam->add_option("--j", fj, "iteration index (logistic, shub_smale)");
  fam->add_flag("--analyze", analyze, "run counts, bound report and Sturm counts");

  std::size_t vs = 3;
  std::size_t vcount = 100;
  CircuitBounds cb;
  auto* verify = app.add_subcommand("verify", "random circuits checked against every bound");
  verify->add_option("--s", vs, "gates per circuit");
  verify->add_option("--count", vcount, "number of circuits");
  verify->add_option("--max-exponent", cb.max_exponent, "largest gate exponent");
  verify->add_option("--max-constant", cb.max_constant, "largest |constant|");
  verify->add_option("--degree-budget", cb.degree_budget, "degree budget per gate");

  std::string q;
  std::size_t ndigits = 5;
  auto* dig = app.add_subcommand("digits", "p-adic digits of a rational");
  dig->add_option("q", q, "rational a/b")->required();
  dig->add_option("-n,--count", ndigits, "number of digits")->check(CLI::PositiveNumber);

  std::size_t bs = 1;
  std::string bm;
  std::string bnsets;
  std::string brs;
  std::string bn;
  auto* bnd = app.add_subcommand("bounds", "evaluate the bound formulas");
  bnd->add_option("--s", bs, "gate count");
  bnd->add_option("--m", bm, "comma list m_1,..,m_n (pcfew, amd)");
  bnd->add_option("--nsets", bnsets, "index sets for pcfew, e.g. \"1;1,2\"");
  bnd->add_option("--rs", brs, "radii for pcfew, comma list (default: --radius each)");
  bnd->add_option("--N", bn, "comma list N_1,..,N_n (amd)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  g.format = format == "json" ? Format::json : Format::text;

  try {
    if (*newton) return cmd_newton(g, poly);
    if (*valuations) return cmd_valuations(g, poly);
    if (*disk) return cmd_disk_count(g, poly, multiplicity);
    if (*zp) return cmd_zp_qp(g, poly, false);
    if (*qp) return cmd_zp_qp(g, poly, true);
    if (*tau) return cmd_tau(g, poly, max_len);
    if (*sigma) return cmd_sigma_upper(g, poly, sb);
    if (*enumerate) return cmd_enumerate(g, caps);
    if (*fam) return cmd_family(g, kind, family_p, fs, fd, fj, analyze);
    if (*verify) return cmd_verify(g, vs, vcount, cb);
    if (*dig) return cmd_digits(g, q, ndigits);
    if (*bnd) return cmd_bounds(g, bs, bm, bnsets, brs, bn);
  } catch (const DegreeCapExceeded& e) {
    std::cerr << "ultra: " << e.what() << "\n";
    return kCap;
  } catch (const InvariantViolation& e) {
    std::cerr << "ultra: invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const ParseError& e) {
    std::cerr << "ultra: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "ultra: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "ultra: bad number: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
