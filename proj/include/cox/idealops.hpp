#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cox/ideal.hpp"

namespace cox {

template <class F>
std::string fresh_var_name(const RingPtr<F>& ring, const std::string& base) {
  if (ring->var_index(base) < 0) return base;
  for (int i = 0;; ++i) {
    std::string name = base + "@" + std::to_string(i);
    if (ring->var_index(name) < 0) return name;
  }
}

// exact quotient f / g, or nullopt if g does not divide f
template <class F>
std::optional<Poly<F>> divide_exact(const Poly<F>& f, const Poly<F>& g) {
  if (g.is_zero()) fail("zero-divisor-input", "division by the zero polynomial");
  const F& k = f.ring()->field();
  const MonomialOrder& ord = f.order();
  Poly<F> p = f;
  Poly<F> q = Poly<F>::zero(f.ring(), ord);
  Poly<F> gs = g.resorted(ord);
  while (!p.is_zero()) {
    const Term<F>& lt = p.leading_term();
    if (!gs.leading_monomial().divides(lt.m)) return std::nullopt;
    Monomial m = lt.m.div(gs.leading_monomial());
    typename F::Elem c = k.div(lt.c, gs.leading_coeff());
    q = q + Poly<F>::monomial(f.ring(), m, c, ord);
    p = p - gs.scaled_term(m, c);
  }
  return q;
}

// Map generators into a ring with more variables (ours must be a subset).
template <class F>
Ideal<F> embed_ideal(const Ideal<F>& I, const RingPtr<F>& bigger) {
  std::vector<int> var_map(I.ring()->arity());
  for (size_t i = 0; i < I.ring()->arity(); ++i) {
    int j = bigger->var_index(I.ring()->var_name(i));
    if (j < 0) fail("ring-mismatch", "variable " + I.ring()->var_name(i) + " missing");
    var_map[i] = j;
  }
  std::vector<Poly<F>> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) gens.push_back(g.embedded(bigger, var_map));
  return Ideal<F>(bigger, std::move(gens));
}

// Restrict to the subring on keep_indices; every generator must already be
// free of the dropped variables.
template <class F>
Ideal<F> restrict_ideal(const Ideal<F>& I, const std::vector<int>& keep_indices) {
  std::vector<std::string> names;
  names.reserve(keep_indices.size());
  for (int i : keep_indices) names.push_back(I.ring()->var_name(static_cast<size_t>(i)));
  RingPtr<F> sub = make_ring(I.ring()->field(), names);
  std::vector<Poly<F>> gens;
  for (const auto& g : I.gens()) {
    std::vector<Term<F>> ts;
    for (const auto& t : g.terms()) {
      Monomial m(sub->arity());
      for (size_t a = 0; a < keep_indices.size(); ++a)
        m.e[a] = t.m.e[static_cast<size_t>(keep_indices[a])];
      int kept = m.deg();
      int full = t.m.deg();
      if (kept != full)
        fail("invalid-params", "generator " + g.str() + " uses a dropped variable");
      ts.push_back({std::move(m), t.c});
    }
    gens.push_back(Poly<F>::from_terms(sub, g.order(), std::move(ts)));
  }
  return Ideal<F>(sub, std::move(gens));
}

// I intersected with the subring omitting the first k variables, via a
// block-order basis. Result lives in the same ring, generators free of the
// eliminated variables.
template <class F>
Ideal<F> eliminate(const Ideal<F>& I, int first_k_vars) {
  if (first_k_vars < 0 || static_cast<size_t>(first_k_vars) >= I.ring()->arity())
    fail("invalid-params", "eliminate: 0 <= k < arity required");
  if (first_k_vars == 0) return I;
  const auto& G = I.groebner_basis(MonomialOrder::block(first_k_vars));
  std::vector<Poly<F>> kept;
  for (const auto& g : G) {
    bool free = true;
    for (int v = 0; v < first_k_vars && free; ++v)
      if (g.uses_var(static_cast<size_t>(v))) free = false;
    if (free) kept.push_back(g.resorted(MonomialOrder::grevlex()));
  }
  return Ideal<F>(I.ring(), std::move(kept));
}

// Eliminate an arbitrary variable subset: permute them to the front, run a
// block basis, permute back.
template <class F>
Ideal<F> eliminate_vars(const Ideal<F>& I, const std::vector<int>& drop) {
  if (drop.empty()) return I;
  size_t n = I.ring()->arity();
  std::vector<bool> is_drop(n, false);
  for (int d : drop) is_drop[static_cast<size_t>(d)] = true;
  std::vector<int> perm;  // permuted position -> original index
  for (size_t i = 0; i < n; ++i) if (is_drop[i]) perm.push_back(static_cast<int>(i));
  for (size_t i = 0; i < n; ++i) if (!is_drop[i]) perm.push_back(static_cast<int>(i));
  std::vector<std::string> names(n);
  std::vector<int> fwd(n);  // original -> permuted
  for (size_t p = 0; p < n; ++p) {
    names[p] = I.ring()->var_name(static_cast<size_t>(perm[p]));
    fwd[static_cast<size_t>(perm[p])] = static_cast<int>(p);
  }
  RingPtr<F> permuted = make_ring(I.ring()->field(), names);
  std::vector<Poly<F>> gens;
  for (const auto& g : I.gens()) gens.push_back(g.embedded(permuted, fwd));
  Ideal<F> J = eliminate(Ideal<F>(permuted, std::move(gens)),
                         static_cast<int>(drop.size()));
  std::vector<int> back(n);
  for (size_t p = 0; p < n; ++p) back[p] = perm[p];
  std::vector<Poly<F>> out;
  for (const auto& g : J.gens()) out.push_back(g.embedded(I.ring(), back));
  return Ideal<F>(I.ring(), std::move(out));
}

// I ∩ J by eliminating one auxiliary variable t from t*I + (1-t)*J.
template <class F>
Ideal<F> ideal_intersection(const Ideal<F>& I, const Ideal<F>& J) {
  check_same_ring(I.ring(), J.ring());
  if (I.has_no_gens() || J.has_no_gens()) return Ideal<F>(I.ring(), {});
  std::string tname = fresh_var_name(I.ring(), "t");
  RingPtr<F> ext = make_ring(I.ring()->field(), [&] {
    std::vector<std::string> v;
    v.push_back(tname);
    for (const auto& s : I.ring()->vars()) v.push_back(s);
    return v;
  }());
  std::vector<int> var_map(I.ring()->arity());
  for (size_t i = 0; i < var_map.size(); ++i) var_map[i] = static_cast<int>(i + 1);
  Poly<F> t = Poly<F>::variable(ext, 0);
  Poly<F> one = Poly<F>::constant(ext, ext->field().one());
  std::vector<Poly<F>> gens;
  for (const auto& f : I.gens()) gens.push_back(t * f.embedded(ext, var_map));
  for (const auto& g : J.gens()) gens.push_back((one - t) * g.embedded(ext, var_map));
  Ideal<F> big(ext, std::move(gens));
  Ideal<F> elim = eliminate(big, 1);
  std::vector<int> keep;
  for (size_t i = 1; i <= I.ring()->arity(); ++i) keep.push_back(static_cast<int>(i));
  Ideal<F> plain = restrict_ideal(elim, keep);
  // ring contexts are structural, so re-house in the caller's ring
  std::vector<int> id(I.ring()->arity());
  for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  std::vector<Poly<F>> out;
  for (const auto& g : plain.gens()) out.push_back(g.embedded(I.ring(), id));
  return Ideal<F>(I.ring(), std::move(out));
}

// colon ideal I : <g>, computed as (I ∩ <g>) / g
template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& I, const Poly<F>& g) {
  if (g.is_zero()) fail("zero-divisor-input", "quotient by the zero polynomial");
  check_same_ring(I.ring(), g.ring());
  if (g.is_constant()) return I;
  Ideal<F> inter = ideal_intersection(I, Ideal<F>(I.ring(), {g}));
  std::vector<Poly<F>> out;
  for (const auto& h : inter.gens()) {
    auto q = divide_exact(h, g);
    if (!q) fail("internal-error", "intersection member not divisible by g");
    out.push_back(*q);
  }
  return Ideal<F>(I.ring(), std::move(out));
}

// Saturation I : <g>^inf by the extra-variable method (the default), plus
// the smallest k with I : g^k equal to the saturation.
template <class F>
std::pair<Ideal<F>, int> saturation(const Ideal<F>& I, const Poly<F>& g) {
  if (g.is_zero()) fail("zero-divisor-input", "saturation by the zero polynomial");
  check_same_ring(I.ring(), g.ring());
  std::string tname = fresh_var_name(I.ring(), "t");
  RingPtr<F> ext = make_ring(I.ring()->field(), [&] {
    std::vector<std::string> v;
    v.push_back(tname);
    for (const auto& s : I.ring()->vars()) v.push_back(s);
    return v;
  }());
  std::vector<int> var_map(I.ring()->arity());
  for (size_t i = 0; i < var_map.size(); ++i) var_map[i] = static_cast<int>(i + 1);
  Poly<F> t = Poly<F>::variable(ext, 0);
  Poly<F> one = Poly<F>::constant(ext, ext->field().one());
  std::vector<Poly<F>> gens;
  for (const auto& f : I.gens()) gens.push_back(f.embedded(ext, var_map));
  gens.push_back(one - t * g.embedded(ext, var_map));
  Ideal<F> big(ext, std::move(gens));
  Ideal<F> elim = eliminate(big, 1);
  std::vector<int> keep;
  for (size_t i = 1; i <= I.ring()->arity(); ++i) keep.push_back(static_cast<int>(i));
  Ideal<F> plain = restrict_ideal(elim, keep);
  std::vector<int> id(I.ring()->arity());
  for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  std::vector<Poly<F>> out;
  for (const auto& h : plain.gens()) out.push_back(h.embedded(I.ring(), id));
  Ideal<F> sat(I.ring(), std::move(out));

  // exponent: h*g^e ∈ I climbs monotonically, so k = max over basis of min e
  int k = 0;
  for (const auto& h : sat.groebner_basis()) {
    Poly<F> hg = h;
    int e = 0;
    while (!I.contains(hg)) {
      hg = hg * g;
      ++e;
      if (e > 512) fail("internal-error", "saturation exponent out of range");
    }
    k = std::max(k, e);
  }
  return {std::move(sat), k};
}

// Iterated-quotient saturation; the independent cross-check oracle.
template <class F>
std::pair<Ideal<F>, int> saturation_iterated(const Ideal<F>& I, const Poly<F>& g) {
  if (g.is_zero()) fail("zero-divisor-input", "saturation by the zero polynomial");
  Ideal<F> cur = I;
  int k = 0;
  for (;;) {
    Ideal<F> next = ideal_quotient(cur, g);
    if (ideal_equal(cur, next)) return {cur, k};
    cur = std::move(next);
    ++k;
    if (k > 512) fail("internal-error", "saturation did not stabilize");
  }
}

// --- Krull dimension --------------------------------------------------------

struct DimensionReport {
  int krull_dim = -1;                // -1 encodes the unit ideal
  std::vector<std::string> witness;  // maximal independent variable set
};

namespace detail {

// minimum vertex cover of the support hypergraph, exhaustive branch & bound
inline void min_cover_rec(const std::vector<uint32_t>& supports, size_t at, uint32_t mask,
                          int count, int& best, uint32_t& best_mask) {
  if (count >= best) return;
  size_t next = supports.size();
  for (size_t i = at; i < supports.size(); ++i)
    if ((supports[i] & mask) == 0) { next = i; break; }
  if (next == supports.size()) {
    best = count;
    best_mask = mask;
    return;
  }
  uint32_t s = supports[next];
  while (s) {
    uint32_t bit = s & (~s + 1);
    s ^= bit;
    min_cover_rec(supports, next + 1, mask | bit, count + 1, best, best_mask);
  }
}

}  // namespace detail

// Dimension of the leading-term ideal (= dimension of I) via maximal
// independent variable sets.
template <class F>
DimensionReport krull_dimension(const Ideal<F>& I) {
  size_t n = I.ring()->arity();
  if (n > 31) fail("invalid-params", "dimension supports up to 31 variables");
  const auto& G = I.groebner_basis();
  DimensionReport rep;
  if (!G.empty() && G[0].is_constant()) {
    rep.krull_dim = -1;
    return rep;
  }
  std::vector<uint32_t> supports;
  for (const auto& g : G) {
    uint32_t s = 0;
    for (int v : g.leading_monomial().support()) s |= (1u << v);
    supports.push_back(s);
  }
  // drop dominated supports: a superset is covered whenever its subset is
  std::sort(supports.begin(), supports.end(), [](uint32_t a, uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<uint32_t> minimal;
  for (uint32_t s : supports) {
    bool dominated = false;
    for (uint32_t m : minimal)
      if ((m & s) == m) { dominated = true; break; }
    if (!dominated) minimal.push_back(s);
  }
  int best = static_cast<int>(n) + 1;
  uint32_t best_mask = 0;
  detail::min_cover_rec(minimal, 0, 0, 0, best, best_mask);
  if (best > static_cast<int>(n)) { best = 0; best_mask = 0; }  // no generators
  rep.krull_dim = static_cast<int>(n) - best;
  for (size_t v = 0; v < n; ++v)
    if (!(best_mask & (1u << v))) rep.witness.push_back(I.ring()->var_name(v));
  return rep;
}

template <class F>
int dim_of(const Ideal<F>& I) { return krull_dimension(I).krull_dim; }

// --- minimal homogeneous generators ----------------------------------------

// Inclusion-minimal homogeneous generating set by greedy removal in
// ascending (degree, leading monomial) order.
template <class F>
std::vector<Poly<F>> minimal_homogeneous_generators(const Ideal<F>& I,
                                                    const GradingMatrix& grading) {
  std::vector<Poly<F>> cand;
  for (const auto& g : I.gens()) {
    if (g.is_zero()) continue;
    if (!is_homogeneous(g, grading))
      fail("inhomogeneous-ideal", "generator " + g.str() + " is not homogeneous");
    cand.push_back(g);
  }
  auto key_less = [&grading](const Poly<F>& a, const Poly<F>& b) {
    DegreeVector da = degree_of(a, grading), db = degree_of(b, grading);
    if (da != db) return da < db;
    int c = MonomialOrder::grevlex().compare(a.leading_monomial(), b.leading_monomial());
    if (c != 0) return c < 0;
    return a.str() < b.str();
  };
  std::sort(cand.begin(), cand.end(), key_less);
  // dedupe
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<bool> kept(cand.size(), true);
  for (size_t i = 0; i < cand.size(); ++i) {
    std::vector<Poly<F>> others;
    for (size_t j = 0; j < cand.size(); ++j)
      if (j != i && kept[j]) others.push_back(cand[j]);
    Ideal<F> rest(I.ring(), std::move(others));
    if (rest.contains(cand[i])) kept[i] = false;
  }
  std::vector<Poly<F>> out;
  for (size_t i = 0; i < cand.size(); ++i)
    if (kept[i]) out.push_back(cand[i]);
  return out;
}

// --- minimal primes of squarefree monomial ideals ---------------------------

namespace detail {

inline void covers_rec(const std::vector<uint32_t>& supports, uint32_t mask,
                       std::vector<uint32_t>& out) {
  size_t next = supports.size();
  for (size_t i = 0; i < supports.size(); ++i)
    if ((supports[i] & mask) == 0) { next = i; break; }
  if (next == supports.size()) {
    out.push_back(mask);
    return;
  }
  uint32_t s = supports[next];
  while (s) {
    uint32_t bit = s & (~s + 1);
    s ^= bit;
    covers_rec(supports, mask | bit, out);
  }
}

}  // namespace detail

// Minimal primes = minimal vertex covers of the generator hypergraph.
// Returns sorted variable-index sets, smallest first.
template <class F>
std::vector<std::vector<int>> monomial_minimal_primes(const Ideal<F>& I) {
  size_t n = I.ring()->arity();
  if (n > 31) fail("invalid-params", "minimal primes support up to 31 variables");
  std::vector<uint32_t> supports;
  for (const auto& g : I.gens()) {
    if (g.size() != 1)
      fail("non-squarefree-generator", g.str() + " is not a monomial");
    const Monomial& m = g.leading_monomial();
    if (!m.squarefree())
      fail("non-squarefree-generator", g.str() + " is not squarefree");
    if (m.is_one()) return {};  // unit ideal: empty variety, no primes
    uint32_t s = 0;
    for (int v : m.support()) s |= (1u << v);
    supports.push_back(s);
  }
  std::vector<uint32_t> raw;
  detail::covers_rec(supports, 0, raw);
  std::sort(raw.begin(), raw.end(), [](uint32_t a, uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<uint32_t> minimal;
  for (uint32_t c : raw) {
    bool dominated = false;
    for (uint32_t m : minimal)
      if ((m & c) == m) { dominated = true; break; }
    if (!dominated) minimal.push_back(c);
  }
  std::vector<std::vector<int>> out;
  for (uint32_t c : minimal) {
    std::vector<int> vars;
    for (size_t v = 0; v < n; ++v)
      if (c & (1u << v)) vars.push_back(static_cast<int>(v));
    out.push_back(std::move(vars));
  }
  return out;
}

}  // namespace cox
