#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "ultra/json_io.hpp"
#include "ultra/padic.hpp"
#include "ultra/polynomial.hpp"

namespace ultra {

struct HullPoint {
  std::uint64_t a = 0;
  Rational v;

  friend bool operator==(const HullPoint& x, const HullPoint& y) { return x.a == y.a && x.v == y.v; }
};

// Lower convex hull with vertices sorted by strictly increasing a and strictly
// increasing edge slopes. Never empty.
class LowerHull {
 public:
  // Lower hull of an arbitrary non-empty point set; collinear middle points are dropped.
  static LowerHull of_points(std::vector<HullPoint> points);

  const std::vector<HullPoint>& vertices() const { return vertices_; }
  std::size_t edge_count() const { return vertices_.size() - 1; }
  // Slope of edge i (between vertices i and i+1).
  Rational slope(std::size_t i) const;
  std::uint64_t width(std::size_t i) const { return vertices_[i + 1].a - vertices_[i].a; }

  // k * h (every vertex scaled by k >= 0); k = 0 collapses to the origin.
  LowerHull scaled(std::uint64_t k) const;
  LowerHull translated(std::uint64_t da, const Rational& dv) const;

  friend bool operator==(const LowerHull& x, const LowerHull& y) { return x.vertices_ == y.vertices_; }
  friend bool operator!=(const LowerHull& x, const LowerHull& y) { return !(x == y); }

 private:
  explicit LowerHull(std::vector<HullPoint> vertices) : vertices_(std::move(vertices)) {}
  std::vector<HullPoint> vertices_;
};

// The part of a hull minimizing v*a + w; `from == to` for a single vertex.
struct Face {
  HullPoint from;
  HullPoint to;
  bool is_vertex() const { return from == to; }
};

using SlopeSet = std::set<Rational>;

// Root valuation -> number of roots (with multiplicity), in hull order
// (valuations decreasing).
struct ValuationProfile {
  std::vector<std::pair<Rational, std::uint64_t>> entries;

  std::uint64_t total() const;
  friend bool operator==(const ValuationProfile& x, const ValuationProfile& y) { return x.entries == y.entries; }
};

// Throws for f = 0.
LowerHull newton_polygon(const SparsePoly& f, const Prime& p);
Face face(const LowerHull& h, const Rational& v);
ValuationProfile valuation_profile(const SparsePoly& f, const Prime& p);
std::size_t distinct_valuation_count(const SparsePoly& f, const Prime& p);

LowerHull minkowski_sum(const LowerHull& h1, const LowerHull& h2);
LowerHull hull_union(const LowerHull& h1, const LowerHull& h2);
SlopeSet slope_set(const LowerHull& h);

// True if (a, v) lies on or above the hull over its a-range (points outside the
// range are reported as not covered).
bool on_or_above(const LowerHull& h, const HullPoint& point);

enum class RootCounting { distinct, with_multiplicity };

// Roots x of f in C_p with ord_p(x - 1) >= r.
std::size_t count_roots_in_disk(const SparsePoly& f, const Prime& p, const Rational& r,
                                RootCounting mode = RootCounting::distinct);

// Distinct roots in Z_p and in Q_p.
std::size_t count_roots_zp(const SparsePoly& f, const Prime& p);
std::size_t count_roots_qp(const SparsePoly& f, const Prime& p);

namespace detail {
// The Q_p count taken as zp(f) + zp(rev(f)(p*y)) plus the zero root, for cross-checking.
std::size_t count_roots_qp_by_reversal(const SparsePoly& f, const Prime& p);
}  // namespace detail

// [[a,"v"],...]
Json hull_to_json(const LowerHull& h);
LowerHull hull_from_json(const Json& j);
// [["v",mult],...]
Json profile_to_json(const ValuationProfile& profile);
ValuationProfile profile_from_json(const Json& j);

}  // namespace ultra
