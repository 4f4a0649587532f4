#include <doctest.h>

#include <random>

#include "cox/grading.hpp"
#include "cox/parse.hpp"

using namespace cox;

TEST_CASE("degrees from the rank-3 grading") {
  FpField k(32003);
  std::vector<std::string> names;
  for (int i = 1; i <= 7; ++i) names.push_back("T" + std::to_string(i));
  auto R = make_ring(k, names);
  GradingMatrix g({{1, 1, 1, 1, 1, 0, 0},
                   {-1, -1, -1, -1, 0, 1, 0},
                   {-1, -1, -1, 0, -1, 0, 1}});
  auto f = parse_polynomial<FpField>("T4^2*T5*T6", R);
  CHECK(degree_of(f, g) == DegreeVector({3, -1, -1}));
  // single variables give columns
  for (size_t j = 0; j < 7; ++j)
    CHECK(degree_of(Poly<FpField>::variable(R, j), g) == g.column(j));
}

TEST_CASE("mixed grading sums") {
  QField q;
  auto R = make_ring(q, {"T1", "T2"});
  GradingMatrix g({{1, 0}, {0, 1}});
  auto f = parse_polynomial<QField>("T1*T2", R);
  CHECK(degree_of(f, g) == DegreeVector({1, 1}));
}

TEST_CASE("inhomogeneous inputs name two offending terms") {
  QField q;
  auto R = make_ring(q, {"x", "y"});
  GradingMatrix g({{1, 1}});
  auto f = parse_polynomial<QField>("x^2 + y", R);
  try {
    degree_of(f, g);
    FAIL("expected inhomogeneous error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("x^2") != std::string::npos);
    CHECK(std::string(e.what()).find("y") != std::string::npos);
  }
  CHECK_THROWS_AS(degree_of(Poly<QField>::zero(R), g), Error);
}

TEST_CASE("adjoined degree arithmetic") {
  DegreeVector f({5, -3});
  DegreeVector m({0, 1});
  CHECK(adjoined_degree(f, 2, m) == DegreeVector({5, -5}));
  CHECK(adjoined_degree(f, 1, DegreeVector({0, 0})) == f);
  CHECK_THROWS_AS(adjoined_degree(f, 0, m), Error);
  CHECK_THROWS_AS(adjoined_degree(f, 1, DegreeVector({1, 2, 3})), Error);
}

TEST_CASE("degree is additive on homogeneous products") {
  std::mt19937_64 rng(17);
  FpField k(101);
  auto R = make_ring(k, {"x", "y", "z"});
  GradingMatrix g({{1, 2, 3}});
  for (int it = 0; it < 100; ++it) {
    // random homogeneous of weighted degrees 6 and 4
    auto pick = [&](long target) {
      std::vector<Term<FpField>> ts;
      for (int a = 0; 1 * a <= target; ++a)
        for (int b = 0; a + 2 * b <= target; ++b) {
          long rem = target - a - 2 * b;
          if (rem % 3 == 0 && rng() % 2)
            ts.push_back({Monomial({a, b, static_cast<int>(rem / 3)}),
                          static_cast<uint32_t>(1 + rng() % 100)});
        }
      if (ts.empty()) ts.push_back({Monomial({static_cast<int>(target), 0, 0}), 1});
      return Poly<FpField>::from_terms(R, MonomialOrder::grevlex(), ts);
    };
    auto f = pick(6), h = pick(4);
    CHECK(degree_of(f * h, g) == degree_of(f, g) + degree_of(h, g));
  }
}

TEST_CASE("grading matrix surgery") {
  GradingMatrix g({{1, 0}, {0, 1}});
  auto g2 = g.with_column(DegreeVector({3, -1}));
  CHECK(g2.arity() == 3);
  CHECK(g2.column(2) == DegreeVector({3, -1}));
  auto g3 = g2.restricted({2, 0});
  CHECK(g3.column(0) == DegreeVector({3, -1}));
  CHECK(g3.column(1) == DegreeVector({1, 0}));
  CHECK(g.str() == "[[1,0],[0,1]]");
}
