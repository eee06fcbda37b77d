#include <doctest.h>

#include "oracles.hpp"
#include "ultra/error.hpp"
#include "ultra/json_io.hpp"
#include "ultra/polynomial.hpp"

using namespace ultra;

namespace {

SparsePoly P(const char* s) { return parse_poly(s); }

}  // namespace

TEST_CASE("arith") {
  CHECK(arith(P("x+1"), P("x-1"), ArithOp::mul) == P("x^2-1"));
  CHECK(arith(P("x^2"), P("-x^2"), ArithOp::add).is_zero());
  CHECK(arith(P("x-2"), P("x-4"), ArithOp::mul) == P("x^2-6*x+8"));
  CHECK(arith(P("x^3+1"), P("x^3"), ArithOp::sub) == P("1"));
}

TEST_CASE("eval") {
  CHECK(P("x^2-6*x+8").eval(Rational(2)) == 0);
  CHECK(P("3*x^4-x+7").eval(Rational(0)) == 7);
  CHECK(P("x^2-6*x+8").eval(Rational(1)) == 3);
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(P("x^2")) == P("x"));
  CHECK(squarefree_part(P("x^3-4*x^2+5*x-2")) == P("x^2-3*x+2"));
  CHECK(squarefree_part(P("x^2+1")) == P("x^2+1"));
  CHECK(squarefree_part(P("-4*x^2+8*x-4")) == P("x-1"));
  CHECK_THROWS_AS(squarefree_part(SparsePoly()), Error);
}

TEST_CASE("shift and scaling") {
  CHECK(shift(P("x^2"), Rational(1)) == P("x^2+2*x+1"));
  CHECK(shift(P("x-1"), Rational(1)) == P("x"));
  CHECK(shift(P("x^2-6*x+8"), Rational(1)) == P("x^2-4*x+3"));
  CHECK(scale_argument(P("x^2+x"), Rational(2)) == P("4*x^2+2*x"));
  CHECK(reverse(P("x^3+2*x+5")) == P("5*x^3+2*x^2+1"));
}

TEST_CASE("strip zero root") {
  CHECK(strip_zero_root(P("x^3+x^2")) == std::pair{P("x+1"), std::uint64_t{2}});
  CHECK(strip_zero_root(P("x^2+1")) == std::pair{P("x^2+1"), std::uint64_t{0}});
  CHECK(strip_zero_root(P("x^4+4*x^3+6*x^2+4*x")) == std::pair{P("x^3+4*x^2+6*x+4"), std::uint64_t{1}});
  CHECK_THROWS_AS(strip_zero_root(SparsePoly()), Error);
}

TEST_CASE("rational roots") {
  CHECK(rational_roots(P("x^2-6*x+8")) == std::vector<Rational>{2, 4});
  CHECK(rational_roots(P("x^2+1")).empty());
  CHECK(rational_roots(P("x^3-7*x^2+14*x-8")) == std::vector<Rational>{1, 2, 4});
  CHECK(rational_roots(P("6*x^3-x^2-x")) == std::vector<Rational>{Rational(-1, 3), 0, Rational(1, 2)});
  CHECK(rational_roots(P("x^2-1/4")) == std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
  CHECK_THROWS_AS(rational_roots(SparsePoly()), Error);
}

TEST_CASE("rational roots with huge coefficients use isolation") {
  // Roots 2^40 and -3/2^35: too many divisors to enumerate comfortably.
  const Integer big = Integer(1) << 40;
  const Integer den = Integer(1) << 35;
  const SparsePoly f = multiply(SparsePoly::x() - SparsePoly::constant(Rational(big)),
                                SparsePoly::x() * SparsePoly::constant(Rational(den)) + SparsePoly::constant(Rational(3)));
  const std::vector<Rational> expected{Rational(Integer(-3), den), Rational(big)};
  CHECK(rational_roots(f) == expected);
  CHECK(detail::rational_roots_by_isolation(f) == expected);
}

TEST_CASE("sturm counts") {
  CHECK(sturm_count(P("x^2-2"), Interval::open(0, 2)) == 1);
  CHECK(sturm_count(P("4*x^2-3*x"), Interval::open(0, 1)) == 1);
  CHECK(sturm_count(P("4*x^2-3*x"), Interval::closed(0, 1)) == 2);
  CHECK(sturm_count(P("x^3-7*x^2+14*x-8"), Interval::open(0, 5)) == 3);
  CHECK(sturm_count(P("x^3-7*x^2+14*x-8"), Interval::open(1, 4)) == 1);
  CHECK(sturm_count(P("x^3-7*x^2+14*x-8"), Interval::closed(1, 4)) == 3);
  CHECK(sturm_count(P("x^3-7*x^2+14*x-8"), Interval{1, 4, false, true}) == 2);
  CHECK(sturm_count(P("x^2+1"), Interval::open(-10, 10)) == 0);
  CHECK(real_root_count(P("x^5-x")) == 3);
}

TEST_CASE("discriminant") {
  CHECK(discriminant(P("x^2-6*x+8")) == 4);
  CHECK(discriminant(P("x^2+2*x+1")) == 0);
  CHECK(discriminant(P("x^2+1")) == -4);
  CHECK(discriminant(P("x^3+x+1")) == -31);
  CHECK_THROWS_AS(discriminant(P("5")), Error);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_poly("3*x^ + 1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() != ParseError::npos);
  }
  CHECK_THROWS_AS(parse_poly("y^2"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0*x"), ParseError);
}

TEST_CASE("text and JSON round trips") {
  oracle::Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    SparsePoly f = rng.poly(static_cast<unsigned>(rng.range(0, 9)), 50);
    f *= Rational(1, rng.range(1, 7));
    CHECK(parse_poly(to_string(f)) == f);
    const Json j = poly_to_json(f);
    CHECK(poly_from_json(parse_json(dump(j))) == f);
    CHECK(dump(poly_to_json(poly_from_json(j))) == dump(j));
  }
  CHECK(to_string(SparsePoly()) == "0");
  CHECK(to_string(P("3*x^5-2*x+7")) == "3*x^5 - 2*x + 7");
  CHECK(to_string(P("-x^2")) == "-x^2");
  CHECK_THROWS_AS(poly_from_json(parse_json(R"({"terms":[[1,"1"],[2,"1"]]})")), ParseError);
  CHECK_THROWS_AS(poly_from_json(parse_json(R"({"terms":[[1,"0"]]})")), ParseError);
}

TEST_CASE("degree cap") {
  CHECK_THROWS_AS(power(P("x+1"), 100, 64), DegreeCapExceeded);
  CHECK_THROWS_AS(multiply(P("x^40"), P("x^30"), 64), DegreeCapExceeded);
  CHECK(power(P("x+1"), 64, 64).degree() == 64);
}

TEST_CASE("multiplication agrees with evaluation") {
  oracle::Rng rng(22);
  for (int i = 0; i < 10000; ++i) {
    const SparsePoly f = rng.poly(static_cast<unsigned>(rng.range(0, 6)), 20);
    const SparsePoly g = rng.poly(static_cast<unsigned>(rng.range(0, 6)), 20);
    Rational x(rng.range(-30, 30), rng.range(1, 30));
    x.canonicalize();
    CHECK(arith(f, g, ArithOp::mul).eval(x) == f.eval(x) * g.eval(x));
    if (i % 10 == 0) {
      CHECK(arith(f, g, ArithOp::add).eval(x) == f.eval(x) + g.eval(x));
      CHECK(shift(f, x).eval(Rational(1)) == f.eval(x + 1));
    }
  }
}

TEST_CASE("division and gcd properties") {
  oracle::Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const SparsePoly a = rng.poly(static_cast<unsigned>(rng.range(1, 4)), 9);
    const SparsePoly b = rng.poly(static_cast<unsigned>(rng.range(1, 4)), 9);
    const SparsePoly c = rng.poly(static_cast<unsigned>(rng.range(0, 3)), 9);
    const SparsePoly f = multiply(a, c);
    const auto [q, r] = divide(f, a);
    CHECK(r.is_zero());
    CHECK(q == c);
    const SparsePoly g = gcd(multiply(a, b), multiply(a, c));
    CHECK(divide(g, primitive_part(a)).second.is_zero());
    const SparsePoly sq = squarefree_part(multiply(multiply(a, a), b));
    CHECK(gcd(sq, sq.derivative()).degree() == 0);
  }
}

TEST_CASE("sturm count matches products of known linear and quadratic factors") {
  oracle::Rng rng(24);
  for (int i = 0; i < 200; ++i) {
    SparsePoly f = SparsePoly::constant(1);
    std::set<Rational> roots;
    const int linear = static_cast<int>(rng.range(0, 5));
    for (int k = 0; k < linear; ++k) {
      Rational r(rng.range(-20, 20), rng.range(1, 4));
      r.canonicalize();
      roots.insert(r);
      f = multiply(f, SparsePoly::x() - SparsePoly::constant(r));
    }
    const int quadratic = static_cast<int>(rng.range(0, 2));
    for (int k = 0; k < quadratic; ++k) {
      // x^2 + c with c > 0 has no real root.
      f = multiply(f, SparsePoly::x() * SparsePoly::x() + SparsePoly::constant(Rational(rng.range(1, 9))));
    }
    const Rational B = cauchy_bound(f);
    CHECK(sturm_count(f, Interval::open(-B, B)) == roots.size());
    CHECK(real_root_count(f) == roots.size());
    const auto rr = rational_roots(f);
    CHECK(std::set<Rational>(rr.begin(), rr.end()) == roots);
    CHECK(detail::rational_roots_by_isolation(f) == detail::rational_roots_by_divisors(f));
    // Sub-intervals: count by direct membership.
    Rational lo(rng.range(-25, 25), 2);
    lo.canonicalize();
    Rational step(rng.range(1, 30), 3);
    step.canonicalize();
    const Rational hi = lo + step;
    std::size_t inside = 0;
    for (const auto& r : roots) inside += (lo < r && r < hi) ? 1 : 0;
    CHECK(sturm_count(f, Interval::open(lo, hi)) == inside);
    std::size_t closed = 0;
    for (const auto& r : roots) closed += (lo <= r && r <= hi) ? 1 : 0;
    CHECK(sturm_count(f, Interval::closed(lo, hi)) == closed);
  }
}

TEST_CASE("quadratic discriminant oracle") {
  oracle::Rng rng(25);
  for (int i = 0; i < 500; ++i) {
    const long a = rng.range(1, 40) * (rng.coin() ? 1 : -1);
    const long b = rng.range(-40, 40);
    const long c = rng.range(-40, 40);
    const SparsePoly f = SparsePoly::from_dense(std::vector<Integer>{c, b, a});
    CHECK(discriminant(f) == Rational(b * b - 4 * a * c));
  }
}
