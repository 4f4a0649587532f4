#include <doctest.h>

#include <random>

#include "cox/ideal.hpp"
#include "cox/parse.hpp"

using namespace cox;

namespace {

template <class F>
Ideal<F> ideal_of(const RingPtr<F>& R, const std::vector<std::string>& srcs) {
  std::vector<Poly<F>> gens;
  for (const auto& s : srcs) gens.push_back(parse_polynomial(s, R));
  return Ideal<F>(R, std::move(gens));
}

}  // namespace

TEST_CASE("triangular substitution under lex") {
  QField q;
  auto R = make_ring(q, {"x", "y"});
  auto I = ideal_of<QField>(R, {"x-1", "y-x"});
  const auto& G = I.groebner_basis(MonomialOrder::lex());
  REQUIRE(G.size() == 2);
  CHECK(G[0].str() == "x - 1");
  CHECK(G[1].str() == "y - 1");
}

TEST_CASE("membership after reduction") {
  QField q;
  auto R = make_ring(q, {"x", "y"});
  auto I = ideal_of<QField>(R, {"x^2-y", "y^2-x"});
  // x^4 - x = (x^2+y)(x^2-y) + (y^2-x)
  CHECK(I.contains(parse_polynomial<QField>("x^4 - x", R)));
  CHECK_FALSE(I.contains(parse_polynomial<QField>("x", R)));
}

TEST_CASE("unit ideal reduces to one") {
  QField q;
  auto R = make_ring(q, {"x", "y"});
  auto I = ideal_of<QField>(R, {"1"});
  const auto& G = I.groebner_basis();
  REQUIRE(G.size() == 1);
  CHECK(G[0].str() == "1");
  CHECK(I.is_unit());
}

TEST_CASE("normal form examples") {
  QField q;
  auto R = make_ring(q, {"x", "y"});
  auto ord = MonomialOrder::grevlex();
  std::vector<Poly<QField>> G1 = {parse_polynomial<QField>("x", R)};
  CHECK(normal_form(parse_polynomial<QField>("x^2", R), G1, ord).is_zero());
  std::vector<Poly<QField>> G2 = {parse_polynomial<QField>("x-y", R)};
  CHECK(normal_form(parse_polynomial<QField>("x+y", R), G2, ord).str() == "2*y");
}

TEST_CASE("s-polynomial criterion certifies bases") {
  FpField k(101);
  auto R = make_ring(k, {"x", "y", "z"});
  auto I = ideal_of<FpField>(R, {"x^2 - y*z", "y^2 - x*z", "z^2 - x*y"});
  const auto& G = I.groebner_basis();
  CHECK(spoly_criterion_holds(G, MonomialOrder::grevlex()));
  // the raw generators are not a basis
  CHECK_FALSE(spoly_criterion_holds(I.gens(), MonomialOrder::grevlex()));
}

TEST_CASE("reduced bases are canonical and deterministic") {
  FpField k(32003);
  auto R = make_ring(k, {"x", "y", "z"});
  auto mk = [&] { return ideal_of<FpField>(R, {"x^2*y - z^2", "x*z - y^2", "y^5 - 3*z^2"}); };
  auto I = mk();
  auto J = mk();
  const auto& GI = I.groebner_basis();
  const auto& GJ = J.groebner_basis();
  REQUIRE(GI.size() == GJ.size());
  for (size_t i = 0; i < GI.size(); ++i) {
    CHECK(GI[i].str() == GJ[i].str());
    CHECK(k.is_one(GI[i].leading_coeff()));
    // no term of any element divisible by another leading monomial
    for (size_t j = 0; j < GI.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : GI[i].terms())
        CHECK_FALSE(GJ[j].leading_monomial().divides(t.m));
    }
  }
}

TEST_CASE("basis certifies ideal equality with the input") {
  std::mt19937_64 rng(23);
  FpField k(101);
  auto R = make_ring(k, {"x", "y", "z"});
  for (int it = 0; it < 30; ++it) {
    std::vector<Poly<FpField>> gens;
    int ng = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < ng; ++i) {
      std::vector<Term<FpField>> ts;
      int nt = 1 + static_cast<int>(rng() % 4);
      for (int t = 0; t < nt; ++t) {
        Monomial m(3);
        int budget = static_cast<int>(rng() % 4);
        for (int d = 0; d < budget; ++d) m.e[rng() % 3]++;
        ts.push_back({m, static_cast<uint32_t>(1 + rng() % 100)});
      }
      gens.push_back(Poly<FpField>::from_terms(R, MonomialOrder::grevlex(), ts));
    }
    Ideal<FpField> I(R, gens);
    const auto& G = I.groebner_basis();
    CHECK(spoly_criterion_holds(G, MonomialOrder::grevlex()));
    for (const auto& g : I.gens()) CHECK(normal_form(g, G, MonomialOrder::grevlex()).is_zero());
    Ideal<FpField> fromG(R, G);
    for (const auto& g : G) CHECK(I.contains(g));
    for (const auto& g : I.gens()) CHECK(fromG.contains(g));
  }
}

TEST_CASE("groebner bases over Q avoid coefficient surprises") {
  QField q;
  auto R = make_ring(q, {"x", "y"});
  auto I = ideal_of<QField>(R, {"2*x^2 - y", "3*y^2 - x"});
  const auto& G = I.groebner_basis();
  CHECK(spoly_criterion_holds(G, MonomialOrder::grevlex()));
  CHECK(I.contains(parse_polynomial<QField>("(2*x^2 - y)*x + (3*y^2 - x)*y", R)));
}
