#pragma once

#include "cox/localize.hpp"

namespace cox {

// Blow-up of P^4 in two invariant points: Cox ring K[T1..T7], class group
// Z^3 with basis (H, E1, E2); T1..T3 -> H-E1-E2, T4 -> H-E1, T5 -> H-E2,
// T6 -> E1, T7 -> E2. Irrelevant generators are the minimal generators of
// the intersection of the three codim-2 components <T4,T7>, <T5,T6>,
// <T6,T7>.
template <class F>
ToricAmbient<F> blowup_p4_two_points(const F& field) {
  std::vector<std::string> names;
  for (int i = 1; i <= 7; ++i) names.push_back("T" + std::to_string(i));
  RingPtr<F> ring = make_ring(field, names);
  GradingMatrix g({{1, 1, 1, 1, 1, 0, 0},
                   {-1, -1, -1, -1, 0, 1, 0},
                   {-1, -1, -1, 0, -1, 0, 1}});
  auto pair = [&](int i, int j) {
    Monomial m(7);
    m.e[static_cast<size_t>(i - 1)] = 1;
    m.e[static_cast<size_t>(j - 1)] = 1;
    return m;
  };
  return ToricAmbient<F>(ring, g, {pair(4, 6), pair(5, 7), pair(6, 7)});
}

// The flip across the line through the two points: same ring and grading,
// codim-2 components <T4,T7> and <T5,T6> only.
template <class F>
ToricAmbient<F> blowup_p4_two_points_flip(const F& field) {
  std::vector<std::string> names;
  for (int i = 1; i <= 7; ++i) names.push_back("T" + std::to_string(i));
  RingPtr<F> ring = make_ring(field, names);
  GradingMatrix g({{1, 1, 1, 1, 1, 0, 0},
                   {-1, -1, -1, -1, 0, 1, 0},
                   {-1, -1, -1, 0, -1, 0, 1}});
  auto pair = [&](int i, int j) {
    Monomial m(7);
    m.e[static_cast<size_t>(i - 1)] = 1;
    m.e[static_cast<size_t>(j - 1)] = 1;
    return m;
  };
  return ToricAmbient<F>(ring, g,
                         {pair(4, 5), pair(4, 6), pair(5, 7), pair(6, 7)});
}

// Blow-up of P^4 in one point in the (H, E) basis: T1..T4 -> H-E, T5 -> H,
// T6 -> E; irrelevant ideal <T1..T4> ∩ <T5,T6>.
template <class F>
ToricAmbient<F> blowup_p4_one_point(const F& field) {
  std::vector<std::string> names;
  for (int i = 1; i <= 6; ++i) names.push_back("T" + std::to_string(i));
  RingPtr<F> ring = make_ring(field, names);
  GradingMatrix g({{1, 1, 1, 1, 1, 0}, {-1, -1, -1, -1, 0, 1}});
  std::vector<Monomial> irr;
  for (int i = 1; i <= 4; ++i)
    for (int j = 5; j <= 6; ++j) {
      Monomial m(6);
      m.e[static_cast<size_t>(i - 1)] = 1;
      m.e[static_cast<size_t>(j - 1)] = 1;
      irr.push_back(std::move(m));
    }
  return ToricAmbient<F>(ring, g, std::move(irr));
}

// The quadric-cone presented ring K[x,y,u,v]/<xv-yu> with markers (x,y):
// the smallest instance where one adjunction certifies the intersection.
template <class F>
PresentedRing<F> cone_presented(const F& field) {
  RingPtr<F> ring = make_ring(field, {"x", "y", "u", "v"});
  Poly<F> rel = Poly<F>::variable(ring, 0) * Poly<F>::variable(ring, 3) -
                Poly<F>::variable(ring, 1) * Poly<F>::variable(ring, 2);
  return PresentedRing<F>(ring, Ideal<F>(ring, {rel}), GradingMatrix({{1, 1, 1, 1}}),
                          {Poly<F>::variable(ring, 0), Poly<F>::variable(ring, 1)});
}

}  // namespace cox
