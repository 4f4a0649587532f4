// Serial vs OpenMP kernel comparison: sparse multiply, batched reduction,
// and the per-marker saturations inside I_n. Not a test; prints a table.
#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cox/examples.hpp"

using namespace cox;
using F = FpField;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Poly<F> dense_poly(const RingPtr<F>& R, std::mt19937_64& rng, int terms, int deg) {
  std::vector<Term<F>> ts;
  for (int t = 0; t < terms; ++t) {
    Monomial m(R->arity());
    for (int d = 0; d < deg; ++d) m.e[rng() % R->arity()]++;
    ts.push_back({m, static_cast<uint32_t>(1 + rng() % 32002)});
  }
  return Poly<F>::from_terms(R, MonomialOrder::grevlex(), ts);
}

}  // namespace

int main() {
  F field(32003);
  std::mt19937_64 rng(12345);

#ifdef _OPENMP
  std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
  std::printf("OpenMP: disabled (serial build)\n");
#endif

  {
    auto R = make_ring(field, std::vector<std::string>{"x", "y", "z", "w"});
    Poly<F> f = dense_poly(R, rng, 1200, 10);
    Poly<F> g = dense_poly(R, rng, 1200, 10);
    auto t0 = std::chrono::steady_clock::now();
    Poly<F> a = Poly<F>::multiply_serial(f, g);
    double ts = seconds(t0);
    t0 = std::chrono::steady_clock::now();
    Poly<F> b = Poly<F>::multiply_parallel(f, g);
    double tp = seconds(t0);
    std::printf("multiply   %4zu x %4zu terms -> %6zu   serial %.3fs   parallel %.3fs   %s\n",
                f.size(), g.size(), a.size(), ts, tp, a == b ? "match" : "MISMATCH");
  }

  {
    // batch normal forms: all S-polynomials of a basis
    auto R = make_ring(field, std::vector<std::string>{"x", "y", "z"});
    std::vector<Poly<F>> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(dense_poly(R, rng, 12, 5));
    Ideal<F> I(R, gens);
    const auto& G = I.groebner_basis();
    std::vector<Poly<F>> spolys;
    for (size_t i = 0; i < G.size(); ++i)
      for (size_t j = i + 1; j < G.size(); ++j)
        spolys.push_back(spoly(G[i], G[j], MonomialOrder::grevlex()));
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Poly<F>> serial;
    for (const auto& s : spolys) serial.push_back(normal_form(s, G, MonomialOrder::grevlex()));
    double ts = seconds(t0);
    t0 = std::chrono::steady_clock::now();
    auto parallel = normal_form_batch(spolys, G, MonomialOrder::grevlex());
    double tp = seconds(t0);
    bool match = serial.size() == parallel.size();
    for (size_t i = 0; match && i < serial.size(); ++i) match = serial[i] == parallel[i];
    std::printf("reduce     %4zu s-polys vs |G|=%zu     serial %.3fs   parallel %.3fs   %s\n",
                spolys.size(), G.size(), ts, tp, match ? "match" : "MISMATCH");
  }

  {
    // I_1 of the rank-3 example: two independent saturations
    auto Z = blowup_p4_two_points(field);
    auto f = random_general_polynomial(Z, DegreeVector({3, -1, -1}), 20250810);
    auto markers = hypersurface_markers(Z, f);
    PresentedRing<F> R(Z.ring, Ideal<F>(Z.ring, {f}), Z.grading, markers);
    int pivot = 0;
    for (size_t i = 0; i < markers.size(); ++i)
      if (markers[i].str() == "T6*T7") pivot = static_cast<int>(i);
#ifdef _OPENMP
    int maxt = omp_get_max_threads();
    omp_set_num_threads(1);
    auto t0 = std::chrono::steady_clock::now();
    Ideal<F> a = saturation_intersection(R, pivot, 1);
    double ts = seconds(t0);
    omp_set_num_threads(maxt);
    t0 = std::chrono::steady_clock::now();
    Ideal<F> b = saturation_intersection(R, pivot, 1);
    double tp = seconds(t0);
    std::printf("I_n        %zu saturations + intersection   1-thread %.3fs   %d-thread %.3fs   %s\n",
                markers.size() - 1, ts, maxt, tp, ideal_equal(a, b) ? "match" : "MISMATCH");
#else
    auto t0 = std::chrono::steady_clock::now();
    Ideal<F> a = saturation_intersection(R, pivot, 1);
    std::printf("I_n        computed in %.3fs (serial build)\n", seconds(t0));
#endif
  }
  return 0;
}
