#include <doctest.h>

#include <random>

#include "cox/idealops.hpp"
#include "cox/parse.hpp"

using namespace cox;

namespace {

template <class F>
Ideal<F> ideal_of(const RingPtr<F>& R, const std::vector<std::string>& srcs) {
  std::vector<Poly<F>> gens;
  for (const auto& s : srcs) gens.push_back(parse_polynomial(s, R));
  return Ideal<F>(R, std::move(gens));
}

// membership in a monomial ideal is termwise divisibility; this is the
// GB-free oracle used against quotient and saturation
template <class F>
bool in_monomial_ideal(const Poly<F>& h, const std::vector<Monomial>& gens) {
  for (const auto& t : h.terms()) {
    bool div = false;
    for (const auto& g : gens)
      if (g.divides(t.m)) { div = true; break; }
    if (!div) return false;
  }
  return !h.is_zero() || true;
}

// all polynomials over F_5 supported on the given monomials (skips 0)
template <class Fn>
void enumerate_f5(const RingPtr<FpField>& R, const std::vector<Monomial>& basis, Fn&& fn) {
  size_t total = 1;
  for (size_t i = 0; i < basis.size(); ++i) total *= 5;
  for (size_t code = 1; code < total; ++code) {
    size_t c = code;
    std::vector<Term<FpField>> ts;
    for (const auto& m : basis) {
      uint32_t coef = c % 5;
      c /= 5;
      if (coef) ts.push_back({m, coef});
    }
    fn(Poly<FpField>::from_terms(R, MonomialOrder::grevlex(), std::move(ts)));
  }
}

std::vector<Monomial> monomials_up_to(size_t arity, int maxdeg) {
  std::vector<Monomial> out;
  std::vector<int> e(arity, 0);
  std::function<void(size_t, int)> rec = [&](size_t i, int left) {
    if (i == arity) {
      out.push_back(Monomial(e));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
    e[i] = 0;
  };
  rec(0, maxdeg);
  return out;
}

}  // namespace

TEST_CASE("colon ideal against the divisibility oracle") {
  FpField k(5);
  auto R = make_ring(k, {"x", "y"});
  auto I = ideal_of<FpField>(R, {"x^2", "x*y"});
  auto x = parse_polynomial<FpField>("x", R);
  Ideal<FpField> Q = ideal_quotient(I, x);
  // expected <x, y>, exhaustively on every polynomial of degree <= 2 over F_5
  std::vector<Monomial> igens = {Monomial({2, 0}), Monomial({1, 1})};
  enumerate_f5(R, monomials_up_to(2, 2), [&](const Poly<FpField>& h) {
    bool oracle = in_monomial_ideal(h * x, igens);
    CHECK(Q.contains(h) == oracle);
  });
}

TEST_CASE("colon ideal basics") {
  QField q;
  auto R = make_ring(q, {"x", "y"});
  auto I = ideal_of<QField>(R, {"x*y"});
  CHECK(ideal_equal(ideal_quotient(I, parse_polynomial<QField>("y", R)),
                    ideal_of<QField>(R, {"x"})));
  CHECK(ideal_equal(ideal_quotient(I, parse_polynomial<QField>("1", R)), I));
  CHECK_THROWS_WITH_AS(ideal_quotient(I, Poly<QField>::zero(R)),
                       doctest::Contains("zero-divisor-input"), Error);
}

TEST_CASE("saturation with stabilization exponent") {
  QField q;
  auto R = make_ring(q, {"x", "y"});
  auto [sat, k1] = saturation(ideal_of<QField>(R, {"x*y"}), parse_polynomial<QField>("y", R));
  CHECK(ideal_equal(sat, ideal_of<QField>(R, {"x"})));
  CHECK(k1 == 1);

  auto R3 = make_ring(q, {"x", "y", "z"});
  auto I = ideal_of<QField>(R3, {"x^3*y", "x*z"});
  auto [sat2, k2] = saturation(I, parse_polynomial<QField>("x", R3));
  CHECK(ideal_equal(sat2, ideal_of<QField>(R3, {"y", "z"})));
  CHECK(k2 == 3);

  // F_5 oracle up to degree 4: m in sat iff m*x^e is divisible for some e
  FpField f5(5);
  auto R5 = make_ring(f5, {"x", "y", "z"});
  auto I5 = ideal_of<FpField>(R5, {"x^3*y", "x*z"});
  auto [sat5, k5] = saturation(I5, parse_polynomial<FpField>("x", R5));
  std::vector<Monomial> igens = {Monomial({3, 1, 0}), Monomial({1, 0, 1})};
  for (const auto& m : monomials_up_to(3, 4)) {
    auto h = Poly<FpField>::monomial(R5, m, 1);
    bool oracle = false;
    auto p = h;
    for (int e = 0; e <= 6 && !oracle; ++e) {
      oracle = in_monomial_ideal(p, igens);
      p = p * parse_polynomial<FpField>("x", R5);
    }
    CHECK(sat5.contains(h) == oracle);
  }
  CHECK(k5 == 3);
}

TEST_CASE("already-saturated adjunction ideal") {
  QField q;
  auto R = make_ring(q, {"x", "y", "u", "v", "S"});
  auto I = ideal_of<QField>(R, {"S*x - u"});
  auto [sat, k] = saturation(I, parse_polynomial<QField>("x", R));
  CHECK(ideal_equal(sat, I));
  CHECK(k == 0);
}

TEST_CASE("saturation methods agree and are idempotent") {
  std::mt19937_64 rng(31);
  FpField k(101);
  auto R = make_ring(k, {"x", "y", "z"});
  for (int it = 0; it < 25; ++it) {
    std::vector<Poly<FpField>> gens;
    for (int i = 0; i < 2; ++i) {
      std::vector<Term<FpField>> ts;
      for (int t = 0; t < 3; ++t) {
        Monomial m(3);
        int b = static_cast<int>(rng() % 4);
        for (int d = 0; d < b; ++d) m.e[rng() % 3]++;
        ts.push_back({m, static_cast<uint32_t>(1 + rng() % 100)});
      }
      gens.push_back(Poly<FpField>::from_terms(R, MonomialOrder::grevlex(), ts));
    }
    Ideal<FpField> I(R, gens);
    Poly<FpField> g = Poly<FpField>::variable(R, rng() % 3);
    auto [s1, e1] = saturation(I, g);
    auto [s2, e2] = saturation_iterated(I, g);
    CHECK(ideal_equal(s1, s2));
    CHECK(e1 == e2);
    auto [s3, e3] = saturation(s1, g);
    CHECK(ideal_equal(s3, s1));
    CHECK(e3 == 0);
  }
}

TEST_CASE("intersection via one auxiliary variable") {
  QField q;
  auto R = make_ring(q, {"x", "y"});
  CHECK(ideal_equal(ideal_intersection(ideal_of<QField>(R, {"x"}), ideal_of<QField>(R, {"y"})),
                    ideal_of<QField>(R, {"x*y"})));
  auto I = ideal_of<QField>(R, {"x^2 - y"});
  CHECK(ideal_equal(ideal_intersection(I, I), I));
  CHECK(ideal_equal(ideal_intersection(ideal_of<QField>(R, {"x+y"}),
                                       ideal_of<QField>(R, {"x-y"})),
                    ideal_of<QField>(R, {"x^2-y^2"})));
}

TEST_CASE("intersection membership matches componentwise membership") {
  std::mt19937_64 rng(37);
  FpField k(101);
  auto R = make_ring(k, {"x", "y"});
  auto I = ideal_of<FpField>(R, {"x^2 + y", "x*y^2"});
  auto J = ideal_of<FpField>(R, {"y^2 - x"});
  Ideal<FpField> M = ideal_intersection(I, J);
  for (int it = 0; it < 300; ++it) {
    std::vector<Term<FpField>> ts;
    for (int t = 0; t < 4; ++t) {
      Monomial m(2);
      int b = static_cast<int>(rng() % 4);
      for (int d = 0; d < b; ++d) m.e[rng() % 2]++;
      ts.push_back({m, static_cast<uint32_t>(rng() % 101)});
    }
    auto h = Poly<FpField>::from_terms(R, MonomialOrder::grevlex(), ts);
    CHECK(M.contains(h) == (I.contains(h) && J.contains(h)));
  }
}

TEST_CASE("elimination") {
  QField q;
  auto R = make_ring(q, {"x", "y"});
  CHECK(eliminate(ideal_of<QField>(R, {"x - y^2"}), 1).has_no_gens());
  auto E = eliminate(ideal_of<QField>(R, {"x - y", "x + y"}), 1);
  CHECK(ideal_equal(E, ideal_of<QField>(R, {"y"})));
  // arbitrary variable subsets via permutation
  auto R3 = make_ring(q, {"x", "y", "z"});
  auto I = ideal_of<QField>(R3, {"y - x^2", "z - x^3"});
  Ideal<QField> J = eliminate_vars(I, {0});
  CHECK(J.contains(parse_polynomial<QField>("y^3 - z^2", R3)));
  CHECK_FALSE(J.gens().empty());
  for (const auto& g : J.gens()) CHECK_FALSE(g.uses_var(0));
}

TEST_CASE("krull dimension") {
  QField q;
  auto R3 = make_ring(q, {"x", "y", "z"});
  auto rep = krull_dimension(ideal_of<QField>(R3, {"x*y"}));
  CHECK(rep.krull_dim == 2);
  CHECK(rep.witness.size() == 2);
  auto R5 = make_ring(q, {"x1", "x2", "x3", "x4", "x5"});
  CHECK(dim_of(Ideal<QField>(R5, {})) == 5);
  CHECK(dim_of(ideal_of<QField>(R5, {"1"})) == -1);
}

TEST_CASE("monomial dimension matches the exhaustive oracle") {
  std::mt19937_64 rng(41);
  FpField k(101);
  for (int it = 0; it < 60; ++it) {
    size_t n = 2 + rng() % 5;  // up to 6 variables
    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    auto R = make_ring(k, names);
    std::vector<Poly<FpField>> gens;
    std::vector<Monomial> mgens;
    int ng = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < ng; ++i) {
      Monomial m(n);
      int b = 1 + static_cast<int>(rng() % 3);
      for (int d = 0; d < b; ++d) m.e[rng() % n]++;
      mgens.push_back(m);
      gens.push_back(Poly<FpField>::monomial(R, m, 1));
    }
    int got = dim_of(Ideal<FpField>(R, gens));
    // exhaustive: S independent iff no generator support lies inside S
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      bool ok = true;
      for (const auto& m : mgens) {
        bool inside = true;
        for (size_t v = 0; v < n; ++v)
          if (m.e[v] > 0 && !(mask & (1u << v))) inside = false;
        if (inside) { ok = false; break; }
      }
      if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    CHECK(got == best);
  }
}

TEST_CASE("minimal homogeneous generators") {
  QField q;
  auto R = make_ring(q, {"x", "y"});
  GradingMatrix std_grading({{1, 1}});
  auto I = ideal_of<QField>(R, {"x^2", "x^2 + y^2", "y^2"});
  auto mins = minimal_homogeneous_generators(I, std_grading);
  REQUIRE(mins.size() == 2);
  CHECK(mins[0].str() == "x^2");
  CHECK(mins[1].str() == "y^2");
  auto single = minimal_homogeneous_generators(ideal_of<QField>(R, {"x"}), std_grading);
  REQUIRE(single.size() == 1);
  CHECK(single[0].str() == "x");
  CHECK_THROWS_WITH_AS(
      minimal_homogeneous_generators(ideal_of<QField>(R, {"x + x^2"}), std_grading),
      doctest::Contains("inhomogeneous-ideal"), Error);
}

TEST_CASE("minimal primes of squarefree monomial ideals") {
  FpField k(101);
  std::vector<std::string> names;
  for (int i = 1; i <= 7; ++i) names.push_back("T" + std::to_string(i));
  auto R = make_ring(k, names);
  auto I = ideal_of<FpField>(R, {"T4*T7", "T5*T6", "T6*T7"});
  auto primes = monomial_minimal_primes(I);
  // brute force: all subsets, keep covers, filter minimal
  std::vector<std::vector<int>> expected;
  std::vector<std::vector<int>> edges = {{3, 6}, {4, 5}, {5, 6}};
  std::vector<uint32_t> covers;
  for (uint32_t mask = 0; mask < (1u << 7); ++mask) {
    bool cover = true;
    for (const auto& e : edges) {
      bool hit = false;
      for (int v : e) hit |= (mask >> v) & 1;
      if (!hit) { cover = false; break; }
    }
    if (cover) covers.push_back(mask);
  }
  for (uint32_t c : covers) {
    bool minimal = true;
    for (uint32_t o : covers)
      if (o != c && (o & c) == o) { minimal = false; break; }
    if (!minimal) continue;
    std::vector<int> vars;
    for (int v = 0; v < 7; ++v)
      if ((c >> v) & 1) vars.push_back(v);
    expected.push_back(vars);
  }
  auto key = [](std::vector<std::vector<int>> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(key(primes) == key(expected));
  // the three 2-element components
  int pairs = 0;
  for (const auto& p : primes) pairs += (p.size() == 2);
  CHECK(pairs == 3);

  auto R2 = make_ring(k, {"x", "y"});
  auto P = monomial_minimal_primes(ideal_of<FpField>(R2, {"x*y"}));
  CHECK(P == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(monomial_minimal_primes(ideal_of<FpField>(R2, {"x"})) ==
        std::vector<std::vector<int>>{{0}});
  CHECK_THROWS_WITH_AS(monomial_minimal_primes(ideal_of<FpField>(R2, {"x^2"})),
                       doctest::Contains("non-squarefree-generator"), Error);
  CHECK_THROWS_WITH_AS(monomial_minimal_primes(ideal_of<FpField>(R2, {"x + y"})),
                       doctest::Contains("non-squarefree-generator"), Error);
}

TEST_CASE("quotient and intersection are dual") {
  FpField k(101);
  auto R = make_ring(k, {"x", "y"});
  auto I = ideal_of<FpField>(R, {"x^2", "x*y"});
  auto g = parse_polynomial<FpField>("x", R);
  Ideal<FpField> Q = ideal_quotient(I, g);
  Ideal<FpField> M = ideal_intersection(I, Ideal<FpField>(R, {g}));
  // membership both ways: h in Q iff h*g in M (= I ∩ <g>)
  for (const auto& h : Q.gens()) CHECK(M.contains(h * g));
  for (const auto& h : M.gens()) {
    auto q = divide_exact(h, g);
    REQUIRE(q.has_value());
    CHECK(Q.contains(*q));
  }
}
