#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "specrad/poly.hpp"
#include "specrad/resultant.hpp"
#include "specrad/roots.hpp"

using namespace specrad;

namespace {

IntPoly ip(std::initializer_list<long> cs) {
  IntPoly p;
  for (long v : cs) p.c.push_back(Int(v));
  p.trim();
  return p;
}

Rat rat(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  IntPoly a = ip({1, 2, 3});   // 1 + 2t + 3t^2
  IntPoly b = ip({-1, 0, 1});  // t^2 - 1

  CHECK(a.degree() == 2);
  CHECK((a + b) == ip({0, 2, 4}));
  CHECK((a - a) == IntPoly());
  CHECK((a * b) == ip({-1, -2, -2, 2, 3}));
  CHECK(a.scaled(Int(-2)) == ip({-2, -4, -6}));
  CHECK(a.times_t(2) == ip({0, 0, 1, 2, 3}));
  CHECK(a.alternate() == ip({1, -2, 3}));
  CHECK(a.derivative() == ip({2, 6}));
  CHECK(is_zero(IntPoly()));
  CHECK(IntPoly().degree() == -1);

  SUBCASE("trailing zeros are trimmed") {
    IntPoly z(std::vector<Int>{Int(5), Int(0), Int(0)});
    CHECK(z.degree() == 0);
    CHECK((ip({0, 1}) * ip({0})) == IntPoly());
  }

  SUBCASE("evaluation") {
    CHECK(a.eval<Int>(Int(2)) == 17);
    CHECK(sign_at(b, rat(1, 2)) < 0);
    CHECK(sign_at(b, rat(2)) > 0);
    CHECK(sign_at(b, rat(1)) == 0);
    CHECK(eval_rat(a, rat(1, 2)) == rat(11, 4));
  }
}

TEST_CASE("exact integer division") {
  CHECK(exact_div(Int(12), Int(-4)) == -3);
  CHECK_THROWS_AS(exact_div(Int(7), Int(2)), std::runtime_error);
  CHECK(poly_exact_div(ip({-1, 0, 1}), ip({1, 1})) == ip({-1, 1}));
  CHECK_THROWS_AS(poly_exact_div(ip({1, 1, 1}), ip({1, 1})), std::runtime_error);
}

TEST_CASE("content, primitive and squarefree parts") {
  CHECK(content(ip({6, -9, 12})) == 3);
  CHECK(primitive_part(ip({6, -9, 12})) == ip({2, -3, 4}));
  CHECK(primitive_part(ip({0, 0, -4})) == ip({0, 0, 1}));  // sign fixed positive

  // (t-1)^2 (t+2) -> squarefree part (t-1)(t+2)
  IntPoly p = ip({-1, 1}) * ip({-1, 1}) * ip({2, 1});
  CHECK(squarefree_part(p) == ip({-1, 1}) * ip({2, 1}));
  CHECK(squarefree_part(ip({0, 0, 0, 8})) == ip({0, 1}));
}

TEST_CASE("gcd in Z[x] keeps integer content") {
  IntPoly g = intpoly_gcd(ip({-2, 2}), ip({-4, 0, 4}));  // 2(t-1), 4(t-1)(t+1)
  CHECK(g == ip({-2, 2}));
  CHECK(intpoly_gcd(ip({-1, 1}) * ip({2, 1}), ip({-1, 1}) * ip({-3, 1})) == ip({-1, 1}));
  CHECK(intpoly_gcd(IntPoly(), ip({0, -6})) == ip({0, 6}));
  CHECK(intpoly_gcd(ip({4}), IntPoly()) == ip({4}));
  CHECK(intpoly_gcd(IntPoly(), IntPoly()) == IntPoly());
  // coprime inputs
  CHECK(intpoly_gcd(ip({1, 1}), ip({1, 0, 1})).degree() == 0);
}

TEST_CASE("rational function reduction") {
  // (t^2-1)/(t+1) = t-1, with content and sign normalization
  RatFnQ f = ratfn_reduce(RatFnQ{ip({-2, 0, 2}), ip({2, 2})});
  CHECK(f.num == ip({-1, 1}));
  CHECK(f.den == ip({1}));

  RatFnQ g = ratfn_reduce(RatFnQ{ip({1}), ip({-1, -1})});
  CHECK(g.den.coeff(0) > 0);  // sign moved into the numerator
  CHECK(g.num == ip({-1}));
  CHECK(g.den == ip({1, 1}));

  CHECK_THROWS_AS(ratfn_reduce(RatFnQ{ip({1}), IntPoly()}), std::runtime_error);
  CHECK_THROWS_AS(ratfn_reduce(RatFnQ{ip({1}), ip({0, 1})}), std::runtime_error);

  SUBCASE("bivariate flavour") {
    // ((t+1)(t+m)) / (1 + m t) has no common factor; content 3 cancels
    BivarPoly tp1{IntPoly{Int(1)}, IntPoly{Int(1)}};
    BivarPoly tpm{IntPoly{Int(0), Int(1)}, IntPoly{Int(1)}};
    BivarPoly den{IntPoly{Int(1)}, IntPoly{Int(0), Int(1)}};
    RatFnM h = ratfn_reduce(RatFnM{(tp1 * tpm).scaled(IntPoly{Int(3)}), den.scaled(IntPoly{Int(3)})});
    CHECK(h.num == tp1 * tpm);
    CHECK(h.den == den);

    RatFnM r = ratfn_reduce(RatFnM{tp1 * tpm, tp1 * den});
    CHECK(r.num == tpm);
    CHECK(r.den == den);
  }
}

TEST_CASE("power series of rational functions") {
  // 1/(1-t): all-ones series
  std::vector<Rat> h = series_coeffs(RatFnQ{ip({1}), ip({1, -1})}, 6);
  REQUIRE(h.size() == 7);
  for (const auto &v : h) CHECK(v == 1);

  // (1+t)/(1-t-t^2): shifted Fibonacci/Lucas-like recurrence
  std::vector<Rat> f = series_coeffs(RatFnQ{ip({1, 1}), ip({1, -1, -1})}, 5);
  CHECK(f[0] == 1);
  CHECK(f[1] == 2);
  CHECK(f[2] == 3);
  CHECK(f[3] == 5);
  CHECK(f[4] == 8);
  CHECK(f[5] == 13);

  SUBCASE("bivariate series stay in Z[m]") {
    BivarPoly den{IntPoly{Int(1)}, IntPoly{Int(0), Int(-1)}};  // 1 - m t
    std::vector<IntPoly> s = series_coeffs_m(RatFnM{BivarPoly(IntPoly::one()), den}, 3);
    REQUIRE(s.size() == 4);
    CHECK(s[0] == IntPoly::one());
    CHECK(s[1] == ip({0, 1}));
    CHECK(s[2] == ip({0, 0, 1}));
    CHECK(s[3] == ip({0, 0, 0, 1}));
  }
}

TEST_CASE("Pade reconstruction round-trips and rejects") {
  std::mt19937 rng(20030310);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 25; ++trial) {
    IntPoly num, den;
    den.c.push_back(Int(1));
    int dp = trial % 4, dq = 1 + trial % 3;
    for (int i = 0; i <= dp; ++i) num.c.push_back(Int(coeff(rng)));
    for (int i = 0; i < dq; ++i) den.c.push_back(Int(coeff(rng)));
    num.trim();
    den.trim();
    RatFnQ f = ratfn_reduce(RatFnQ{num, den});
    if (is_zero(f.num)) continue;
    std::vector<Rat> series = series_coeffs(f, f.num.degree() + f.den.degree() + 4);
    RatFnQ back = pade_reconstruct(series, f.num.degree(), f.den.degree());
    CHECK(back.num == f.num);
    CHECK(back.den == f.den);
  }

  // e^t-style data is not rational of low degree
  std::vector<Rat> e{rat(1), rat(1), rat(1, 2), rat(1, 6), rat(1, 24), rat(1, 120), rat(1, 720)};
  CHECK_THROWS_AS(pade_reconstruct(e, 1, 1), std::runtime_error);
}

TEST_CASE("integer interpolation") {
  // p(x) = x^3 - 2x + 7 through 6 points
  IntPoly p = ip({7, -2, 0, 1});
  std::vector<std::pair<Int, Int>> pts;
  for (int x = -2; x <= 3; ++x) pts.push_back({Int(x), p.eval<Int>(Int(x))});
  CHECK(interpolate_integer_polynomial(pts) == p);

  std::vector<std::pair<Int, Int>> bad{{Int(0), Int(0)}, {Int(2), Int(1)}, {Int(4), Int(2)}};
  CHECK_THROWS(interpolate_integer_polynomial(bad));  // slope 1/2 is not integral
  std::vector<std::pair<Int, Int>> dup{{Int(1), Int(1)}, {Int(1), Int(2)}};
  CHECK_THROWS_AS(interpolate_integer_polynomial(dup), std::invalid_argument);
}

TEST_CASE("determinants by fraction-free elimination") {
  std::vector<std::vector<Int>> m{{Int(2), Int(0), Int(1)},
                                  {Int(1), Int(3), Int(2)},
                                  {Int(1), Int(1), Int(2)}};
  CHECK(det_bareiss(m) == 6);  // cofactors: 2(6-2) - 0(2-2) + 1(1-3)
  std::vector<std::vector<Int>> id{{Int(1), Int(0)}, {Int(0), Int(1)}};
  CHECK(det_bareiss(id) == 1);
  std::vector<std::vector<Int>> sing{{Int(1), Int(2)}, {Int(2), Int(4)}};
  CHECK(det_bareiss(sing) == 0);
}

TEST_CASE("resultants in Z[m]") {
  // Res_t(t - m, t + m) = 2m
  BivarPoly a{IntPoly{Int(0), Int(-1)}, IntPoly{Int(1)}};
  BivarPoly b{IntPoly{Int(0), Int(1)}, IntPoly{Int(1)}};
  IntPoly r = resultant(a, b);
  CHECK((r == ip({0, 2}) || r == ip({0, -2})));

  // shared factor (t - m) forces a zero resultant
  BivarPoly c{IntPoly{Int(1)}, IntPoly{Int(1)}};  // t + 1
  CHECK(is_zero(resultant(a * c, a * b)));

  // 1 - (m+1)t versus the loop-seed family denominator 1 - mt - mt^2: unit resultant
  BivarPoly d1{IntPoly{Int(1)}, IntPoly{Int(-1), Int(-1)}};
  BivarPoly d2{IntPoly{Int(1)}, IntPoly{Int(0), Int(-1)}, IntPoly{Int(0), Int(-1)}};
  IntPoly u = resultant(d1, d2);
  CHECK(u.degree() == 0);
  CHECK((u.coeff(0) == 1 || u.coeff(0) == -1));
}

TEST_CASE("Sturm chains count real roots") {
  IntPoly p = ip({-1, 1}) * ip({-2, 1}) * ip({-3, 1});  // roots 1, 2, 3
  SturmChain ch = sturm_chain(p);
  CHECK(ch.count(rat(0), rat(4)) == 3);
  CHECK(ch.count(rat(1), rat(2)) == 1);   // (1, 2] holds only 2
  CHECK(ch.count(rat(1), rat(3)) == 2);
  CHECK(ch.count_above(rat(2)) == 1);
  CHECK(ch.count_above(rat(0)) == 3);
  CHECK(ch.count_above(rat(3)) == 0);

  SturmChain none = sturm_chain(ip({1, 0, 1}));  // t^2 + 1
  CHECK(none.count_above(rat(-100)) == 0);

  SUBCASE("Cauchy bound dominates all roots") {
    Rat bound = cauchy_bound(p);
    CHECK(bound > 3);
    CHECK(ch.count(-bound, bound) == 3);
  }
}

TEST_CASE("smallest positive root isolation") {
  SUBCASE("irrational root") {
    RootBracket rb = isolate_smallest_positive_root(ip({-2, 0, 1}), rat(1, 1000000));
    CHECK(rb.width() <= rat(1, 1000000));
    CHECK(sign_at(rb.poly, rb.lo) * sign_at(rb.poly, rb.hi) < 0);
    CHECK(rb.lo > rat(14142, 10001));
    CHECK(rb.hi < rat(14143, 10000));
    CHECK_FALSE(rb.exact);
  }

  SUBCASE("rational root is detected exactly") {
    // (2t-1)(t-2): smallest positive root 1/2
    RootBracket rb = isolate_smallest_positive_root(ip({-1, 2}) * ip({-2, 1}), rat(1, 1024));
    CHECK(rb.exact);
    CHECK(rb.value == rat(1, 2));
    CHECK(rb.lo < rat(1, 2));
    CHECK(rb.hi > rat(1, 2));
  }

  SUBCASE("smallest root wins among several") {
    RootBracket rb = isolate_smallest_positive_root(ip({-3, 1}) * ip({-1, 3}), rat(1, 4096));
    CHECK(rb.exact);
    CHECK(rb.value == rat(1, 3));
  }

  SUBCASE("no positive root") {
    CHECK_THROWS_WITH_AS(isolate_smallest_positive_root(ip({1, 0, 1}), rat(1, 4)),
                         "no positive root", std::runtime_error);
    CHECK_THROWS_AS(isolate_smallest_positive_root(ip({1, 1}), rat(1, 4)), std::runtime_error);
  }

  SUBCASE("refinement tightens and never loses the root") {
    RootBracket rb = isolate_smallest_positive_root(ip({-2, 0, 1}), rat(1, 4));
    refine_bracket(rb, Rat(Int(1), Int(1) << 40));
    CHECK(rb.width() <= Rat(Int(1), Int(1) << 40));
    CHECK(sign_at(rb.poly, rb.lo) * sign_at(rb.poly, rb.hi) < 0);
  }
}

TEST_CASE("all real roots in order") {
  IntPoly p = ip({-2, 0, 1}) * ip({-5, 1});  // -sqrt2, sqrt2, 5
  std::vector<RootBracket> rs = isolate_real_roots(p, rat(1, 1 << 20));
  REQUIRE(rs.size() == 3);
  CHECK(rs[0].hi < rs[1].lo);
  CHECK(rs[1].hi < rs[2].lo);
  CHECK(rs[0].hi < 0);
  CHECK(rs[1].lo > 0);
  CHECK(rs[2].exact);
  CHECK(rs[2].value == 5);
  CHECK(isolate_real_roots(ip({1, 0, 1}), rat(1, 4)).empty());
}

TEST_CASE("decimal rendering is deterministic and truncated") {
  SUBCASE("bracketed irrational") {
    RootBracket rb = isolate_smallest_positive_root(ip({-2, 0, 1}), rat(1, 4));
    CHECK(bracket_decimal(rb, 12) == "1.41421356237");
    RootBracket phi = isolate_smallest_positive_root(ip({-1, -1, 1}), rat(1, 4));
    CHECK(bracket_decimal(phi, 10) == "1.618033988");
  }

  SUBCASE("exact rationals") {
    CHECK(rational_decimal(rat(3), 5) == "3");
    CHECK(rational_decimal(rat(1, 3), 5) == "0.33333");
    CHECK(rational_decimal(rat(-1, 8), 2) == "-0.125");  // terminating: printed in full
    CHECK(rational_decimal(rat(22, 7), 6) == "3.14285");
    CHECK(rational_decimal(rat(0), 4) == "0");
    CHECK(rational_decimal(rat(1, 400), 3) == "0.0025");
  }
}
