#include "ultra/newton.hpp"

#include <algorithm>

#include "ultra/error.hpp"

namespace ultra {

namespace {

// Cross product of (b - o) and (c - o); positive for a strict left turn.
int turn(const HullPoint& o, const HullPoint& b, const HullPoint& c) {
  const Rational dx1(Integer(static_cast<unsigned long>(b.a - o.a)));
  const Rational dx2(Integer(static_cast<unsigned long>(c.a - o.a)));
  return sgn(dx1 * (c.v - o.v) - (b.v - o.v) * dx2);
}

}  // namespace

LowerHull LowerHull::of_points(std::vector<HullPoint> points) {
  if (points.empty()) throw Error("lower hull of an empty point set");
  std::sort(points.begin(), points.end(), [](const HullPoint& x, const HullPoint& y) {
    return x.a != y.a ? x.a < y.a : x.v < y.v;
  });
  // Keep the lowest point per abscissa.
  points.erase(std::unique(points.begin(), points.end(),
                           [](const HullPoint& x, const HullPoint& y) { return x.a == y.a; }),
               points.end());
  std::vector<HullPoint> hull;
  for (auto& pt : points) {
    while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(std::move(pt));
  }
  return LowerHull(std::move(hull));
}

Rational LowerHull::slope(std::size_t i) const {
  Rational s = (vertices_[i + 1].v - vertices_[i].v) / Rational(Integer(static_cast<unsigned long>(width(i))));
  s.canonicalize();
  return s;
}

LowerHull LowerHull::scaled(std::uint64_t k) const {
  if (k == 0) return LowerHull({HullPoint{0, Rational(0)}});
  std::vector<HullPoint> out;
  out.reserve(vertices_.size());
  const Rational kq(Integer(static_cast<unsigned long>(k)));
  for (const auto& pt : vertices_) {
    if (pt.a != 0 && pt.a > UINT64_MAX / k) throw Error("hull scaling overflows the exponent range");
    out.push_back({pt.a * k, pt.v * kq});
  }
  return LowerHull(std::move(out));
}

LowerHull LowerHull::translated(std::uint64_t da, const Rational& dv) const {
  std::vector<HullPoint> out = vertices_;
  for (auto& pt : out) {
    pt.a += da;
    pt.v += dv;
  }
  return LowerHull(std::move(out));
}

std::uint64_t ValuationProfile::total() const {
  std::uint64_t t = 0;
  for (const auto& [v, m] : entries) t += m;
  return t;
}

LowerHull newton_polygon(const SparsePoly& f, const Prime& p) {
  if (f.is_zero()) throw Error("zero polynomial");
  std::vector<HullPoint> points;
  points.reserve(f.term_count());
  for (const auto& [e, c] : f.terms()) points.push_back({e, Rational(ord_nonzero(c, p))});
  return LowerHull::of_points(std::move(points));
}

Face face(const LowerHull& h, const Rational& v) {
  const auto& vs = h.vertices();
  auto weight = [&](const HullPoint& pt) -> Rational { return v * Rational(Integer(static_cast<unsigned long>(pt.a))) + pt.v; };
  Rational best = weight(vs.front());
  std::size_t first = 0;
  std::size_t last = 0;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    Rational w = weight(vs[i]);
    if (w < best) {
      best = w;
      first = last = i;
    } else if (w == best) {
      last = i;
    }
  }
  return {vs[first], vs[last]};
}

ValuationProfile valuation_profile(const SparsePoly& f, const Prime& p) {
  LowerHull h = newton_polygon(f, p);
  ValuationProfile profile;
  for (std::size_t i = 0; i < h.edge_count(); ++i) profile.entries.emplace_back(-h.slope(i), h.width(i));
  return profile;
}

std::size_t distinct_valuation_count(const SparsePoly& f, const Prime& p) {
  // The hull of f starts at its lowest exponent, so the zero root never adds an edge.
  return newton_polygon(f, p).edge_count();
}

LowerHull minkowski_sum(const LowerHull& h1, const LowerHull& h2) {
  const auto& a = h1.vertices();
  const auto& b = h2.vertices();
  std::vector<HullPoint> out;
  out.reserve(a.size() + b.size());
  HullPoint current{a.front().a + b.front().a, a.front().v + b.front().v};
  out.push_back(current);
  std::size_t i = 0;
  std::size_t j = 0;
  // Merge the edge sequences by slope.
  while (i < h1.edge_count() || j < h2.edge_count()) {
    bool take_first;
    if (i == h1.edge_count()) {
      take_first = false;
    } else if (j == h2.edge_count()) {
      take_first = true;
    } else {
      take_first = h1.slope(i) <= h2.slope(j);
    }
    const auto& src = take_first ? a : b;
    std::size_t& k = take_first ? i : j;
    current.a += src[k + 1].a - src[k].a;
    current.v += src[k + 1].v - src[k].v;
    out.push_back(current);
    ++k;
  }
  return LowerHull::of_points(std::move(out));
}

LowerHull hull_union(const LowerHull& h1, const LowerHull& h2) {
  std::vector<HullPoint> points = h1.vertices();
  points.insert(points.end(), h2.vertices().begin(), h2.vertices().end());
  return LowerHull::of_points(std::move(points));
}

SlopeSet slope_set(const LowerHull& h) {
  SlopeSet s;
  for (std::size_t i = 0; i < h.edge_count(); ++i) s.insert(h.slope(i));
  return s;
}

bool on_or_above(const LowerHull& h, const HullPoint& point) {
  const auto& vs = h.vertices();
  if (point.a < vs.front().a || point.a > vs.back().a) return false;
  auto it = std::lower_bound(vs.begin(), vs.end(), point.a,
                             [](const HullPoint& pt, std::uint64_t a) { return pt.a < a; });
  if (it->a == point.a) return point.v >= it->v;
  const HullPoint& right = *it;
  const HullPoint& left = *(it - 1);
  return turn(left, right, point) >= 0;
}

std::size_t count_roots_in_disk(const SparsePoly& f, const Prime& p, const Rational& r, RootCounting mode) {
  if (f.is_zero()) throw Error("zero polynomial");
  if (r <= 0) throw Error("disk radius exponent r must be positive");
  const SparsePoly g = mode == RootCounting::distinct ? squarefree_part(f) : f;
  const SparsePoly h = shift(g, Rational(1));
  auto [stripped, zero_mult] = strip_zero_root(h);
  std::size_t count = zero_mult;
  for (const auto& [v, m] : valuation_profile(stripped, p).entries) {
    if (v >= r) count += m;
  }
  return count;
}

Json hull_to_json(const LowerHull& h) {
  Json out = Json::array();
  for (const auto& pt : h.vertices()) out.push_back(Json::array({pt.a, to_string(pt.v)}));
  return out;
}

LowerHull hull_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("hull JSON must be a non-empty vertex array");
  std::vector<HullPoint> points;
  for (const auto& v : j) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_unsigned() || !v[1].is_string()) {
      throw ParseError("hull vertex must be [a, \"v\"]");
    }
    points.push_back({v[0].get<std::uint64_t>(), parse_rational(v[1].get<std::string>())});
  }
  LowerHull h = LowerHull::of_points(points);
  if (h.vertices() != points) throw ParseError("hull JSON vertices are not a canonical lower hull");
  return h;
}

Json profile_to_json(const ValuationProfile& profile) {
  Json out = Json::array();
  for (const auto& [v, m] : profile.entries) out.push_back(Json::array({to_string(v), m}));
  return out;
}

ValuationProfile profile_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("profile JSON must be an array");
  ValuationProfile profile;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_number_unsigned()) {
      throw ParseError("profile entry must be [\"v\", multiplicity]");
    }
    profile.entries.emplace_back(parse_rational(e[0].get<std::string>()), e[1].get<std::uint64_t>());
  }
  return profile;
}

}  // namespace ultra
