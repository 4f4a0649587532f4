#pragma once

#include <random>
#include <string>
#include <vector>

#include "cox/idealops.hpp"
#include "cox/parse.hpp"

namespace cox {

// Ambient toric data in Cox coordinates: ring, grading, irrelevant-ideal
// monomial generators. dim = arity - grading rank.
template <class F>
struct ToricAmbient {
  RingPtr<F> ring;
  GradingMatrix grading;
  std::vector<Monomial> irrelevant;
  int dim = 0;
  // set when the grading is the rank-2 normal form, where the nef cone is
  // the positive quadrant; ample checks only run in that basis
  bool quadrant_nef = false;

  ToricAmbient() = default;
  ToricAmbient(RingPtr<F> r, GradingMatrix g, std::vector<Monomial> irr)
      : ring(std::move(r)), grading(std::move(g)), irrelevant(std::move(irr)) {
    if (grading.arity() != ring->arity())
      fail("invalid-params", "grading arity != ring arity");
    for (const auto& m : irrelevant)
      if (!m.squarefree()) fail("invalid-params", "irrelevant generator not squarefree");
    dim = static_cast<int>(ring->arity() - grading.rank());
  }
};

// Proposition-normal form of a smooth projective rank-2 toric variety:
// dimension n, split index k, twists 0 <= a_1 <= ... <= a_k.
struct Rank2Params {
  int n = 2;
  int k = 1;
  std::vector<int> a;

  void validate() const {
    if (n < 2) fail("invalid-params", "rank-2 params need n >= 2");
    if (k < 1 || k > n - 1) fail("invalid-params", "rank-2 params need 1 <= k <= n-1");
    if (static_cast<int>(a.size()) != k)
      fail("invalid-params", "rank-2 params need exactly k twists");
    int prev = 0;
    for (int ai : a) {
      if (ai < prev || ai < 0) fail("invalid-params", "twists must satisfy 0 <= a_1 <= ... <= a_k");
      prev = ai;
    }
  }
  int twist_sum() const {
    int s = 0;
    for (int ai : a) s += ai;
    return s;
  }
};

template <class F>
ToricAmbient<F> rank2_smooth(const F& field, const Rank2Params& p) {
  p.validate();
  int r = p.n + 2;
  std::vector<std::string> names;
  for (int i = 1; i <= r; ++i) names.push_back("T" + std::to_string(i));
  RingPtr<F> ring = make_ring(field, names);
  std::vector<long> row1, row2;
  for (int i = 0; i < p.n - p.k + 1; ++i) { row1.push_back(1); row2.push_back(0); }
  row1.push_back(0); row2.push_back(1);
  for (int i = 0; i < p.k; ++i) { row1.push_back(-p.a[i]); row2.push_back(1); }
  GradingMatrix grading({row1, row2});
  std::vector<Monomial> irr;
  for (int i = 0; i < p.n - p.k + 1; ++i)
    for (int j = p.n - p.k + 1; j < r; ++j) {
      Monomial m(static_cast<size_t>(r));
      m.e[static_cast<size_t>(i)] = 1;
      m.e[static_cast<size_t>(j)] = 1;
      irr.push_back(std::move(m));
    }
  ToricAmbient<F> Z(std::move(ring), std::move(grading), std::move(irr));
  Z.quadrant_nef = true;
  return Z;
}

inline bool is_fano(const Rank2Params& p) {
  p.validate();
  return p.twist_sum() < p.n - p.k + 1;
}

// -K = sum of the variable degrees.
inline DegreeVector anticanonical_degree_rank2(const Rank2Params& p) {
  p.validate();
  return DegreeVector({static_cast<long>(p.n - p.k + 1 - p.twist_sum()),
                       static_cast<long>(p.k + 1)});
}

// rank-2 ample test: the nef cone is the positive quadrant
inline bool is_ample_rank2(const DegreeVector& d) {
  return d.rank() == 2 && d.v[0] > 0 && d.v[1] > 0;
}

// 2-element minimal primes of the irrelevant ideal.
template <class F>
std::vector<std::pair<int, int>> codim2_components(const ToricAmbient<F>& Z) {
  std::vector<Poly<F>> gens;
  for (const auto& m : Z.irrelevant)
    gens.push_back(Poly<F>::monomial(Z.ring, m, Z.ring->field().one()));
  auto primes = monomial_minimal_primes(Ideal<F>(Z.ring, std::move(gens)));
  std::vector<std::pair<int, int>> out;
  for (const auto& pr : primes)
    if (pr.size() == 2) out.push_back({pr[0], pr[1]});
  return out;
}

namespace detail {

// strictly positive functional on all variable degrees, by grid search
inline std::optional<std::vector<long>> positive_functional(const GradingMatrix& g) {
  size_t k = g.rank();
  if (k > 4) return std::nullopt;
  long L = 12;
  for (size_t j = 0; j < g.arity(); ++j)
    for (size_t i = 0; i < k; ++i) L = std::max(L, std::abs(g.rows()[i][j]) + 1);
  std::vector<long> lam(k, -L);
  for (;;) {
    bool ok = true;
    for (size_t j = 0; j < g.arity() && ok; ++j) {
      long s = 0;
      for (size_t i = 0; i < k; ++i) s += lam[i] * g.rows()[i][j];
      if (s <= 0) ok = false;
    }
    if (ok) return lam;
    size_t i = 0;
    while (i < k && lam[i] == L) lam[i++] = -L;
    if (i == k) return std::nullopt;
    ++lam[i];
  }
}

inline void basis_rec(const GradingMatrix& g, const std::vector<long>& lam,
                      const std::vector<long>& lamcol, size_t j, long budget, int cap,
                      std::vector<long>& remaining, Monomial& cur,
                      std::vector<Monomial>& out) {
  if (j == g.arity()) {
    for (long rv : remaining)
      if (rv != 0) return;
    out.push_back(cur);
    return;
  }
  int maxe = cap;
  if (lamcol[j] > 0) maxe = std::min<long>(maxe, budget / lamcol[j]);
  for (int e = 0; e <= maxe; ++e) {
    cur.e[j] = e;
    basis_rec(g, lam, lamcol, j + 1, budget - e * lamcol[j], cap, remaining, cur, out);
    for (size_t i = 0; i < g.rank(); ++i) remaining[i] -= g.rows()[i][j];
  }
  for (size_t i = 0; i < g.rank(); ++i) remaining[i] += (maxe + 1) * g.rows()[i][j];
  cur.e[j] = 0;
}

}  // namespace detail

// All monomials of the given degree, descending under grevlex. Requires the
// variable degrees to span a pointed cone (a positive functional exists);
// per-exponent cap 30.
template <class F>
std::vector<Monomial> monomial_basis(const ToricAmbient<F>& Z, const DegreeVector& deg,
                                     int cap = 30) {
  if (deg.rank() != Z.grading.rank()) fail("rank-mismatch", "degree rank != grading rank");
  auto lam = detail::positive_functional(Z.grading);
  if (!lam)
    fail("invalid-params",
         "no positive functional on variable degrees; cannot bound the monomial basis");
  long budget = 0;
  for (size_t i = 0; i < lam->size(); ++i) budget += (*lam)[i] * deg.v[i];
  std::vector<Monomial> out;
  if (budget < 0) return out;
  std::vector<long> lamcol(Z.grading.arity(), 0);
  for (size_t j = 0; j < Z.grading.arity(); ++j)
    for (size_t i = 0; i < lam->size(); ++i)
      lamcol[j] += (*lam)[i] * Z.grading.rows()[i][j];
  std::vector<long> remaining = deg.v;
  Monomial cur(Z.ring->arity());
  detail::basis_rec(Z.grading, *lam, lamcol, 0, budget, cap, remaining, cur, out);
  MonomialOrder ord = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(),
            [&ord](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  return out;
}

namespace detail {
inline FpField::Elem random_nonzero(const FpField& k, std::mt19937_64& rng) {
  return 1 + static_cast<uint32_t>(rng() % (k.characteristic() - 1));
}
inline QField::Elem random_nonzero(const QField&, std::mt19937_64& rng) {
  long mag = 1 + static_cast<long>(rng() % 9);
  return mpq_class((rng() & 1) ? -mag : mag);
}
}  // namespace detail

// Seeded stand-in for "general in its linear system": every monomial of the
// degree present, nonzero coefficients drawn deterministically from seed.
template <class F>
Poly<F> random_general_polynomial(const ToricAmbient<F>& Z, const DegreeVector& deg,
                                  uint64_t seed) {
  auto basis = monomial_basis(Z, deg);
  if (basis.empty()) fail("empty-linear-system", "no monomials of degree " + deg.str());
  std::mt19937_64 rng(seed);
  std::vector<Term<F>> ts;
  ts.reserve(basis.size());
  for (const auto& m : basis)
    ts.push_back({m, detail::random_nonzero(Z.ring->field(), rng)});
  return Poly<F>::from_terms(Z.ring, MonomialOrder::grevlex(), std::move(ts));
}

// Markers for Algorithm 1 on a hypersurface: minimal monomial generators of
// the intersection of the codim-2 irrelevant components containing f.
template <class F>
std::vector<Poly<F>> hypersurface_markers(const ToricAmbient<F>& Z, const Poly<F>& f) {
  auto pairs = codim2_components(Z);
  std::vector<std::pair<int, int>> active;
  for (auto [i, j] : pairs) {
    bool inside = true;
    for (const auto& t : f.terms())
      if (t.m.e[static_cast<size_t>(i)] == 0 && t.m.e[static_cast<size_t>(j)] == 0) {
        inside = false;
        break;
      }
    if (inside) active.push_back({i, j});
  }
  if (active.empty()) return {};
  std::vector<Monomial> gens = {Monomial::one(Z.ring->arity())};
  for (auto [i, j] : active) {
    std::vector<Monomial> next;
    for (const auto& g : gens) {
      next.push_back(g.lcm(Monomial::var(Z.ring->arity(), static_cast<size_t>(i))));
      next.push_back(g.lcm(Monomial::var(Z.ring->arity(), static_cast<size_t>(j))));
    }
    std::vector<Monomial> minimal;
    MonomialOrder ord = MonomialOrder::grevlex();
    std::sort(next.begin(), next.end(),
              [&ord](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
    for (const auto& m : next) {
      bool dominated = false;
      for (const auto& h : minimal)
        if (h.divides(m)) { dominated = true; break; }
      if (!dominated) minimal.push_back(m);
    }
    gens = std::move(minimal);
  }
  std::vector<Poly<F>> out;
  for (const auto& m : gens)
    out.push_back(Poly<F>::monomial(Z.ring, m, Z.ring->field().one()));
  return out;
}

}  // namespace cox
