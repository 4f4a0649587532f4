#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cox/toric.hpp"

namespace cox {

// One step of Lemma-2.3 adjunction: S with S*m^n = numerator.
template <class F>
struct Adjunction {
  std::string var;
  Poly<F> numerator;  // element of the ring *before* this adjunction
  int pivot = 0;      // marker index
  int level = 1;      // n
  DegreeVector degree;
};

// A graded quotient presentation carrying the distinguished elements
// m_1..m_s: the object Algorithm 1 transforms. Immutable; every operation
// returns a fresh snapshot.
template <class F>
struct PresentedRing {
  RingPtr<F> ring;
  Ideal<F> ideal;
  GradingMatrix grading;
  std::vector<Poly<F>> markers;
  std::vector<Adjunction<F>> history;
  size_t base_arity = 0;

  PresentedRing() = default;
  PresentedRing(RingPtr<F> r, Ideal<F> I, GradingMatrix g, std::vector<Poly<F>> m)
      : ring(std::move(r)), ideal(std::move(I)), grading(std::move(g)),
        markers(std::move(m)), base_arity(ring->arity()) {
    validate();
  }

  void validate() const {
    if (grading.arity() != ring->arity())
      fail("invalid-params", "grading arity != ring arity");
    for (const auto& g : ideal.gens())
      if (!is_homogeneous(g, grading))
        fail("inhomogeneous-ideal", "defining ideal generator " + g.str());
    if (markers.empty()) fail("invalid-params", "need at least one marker");
    for (const auto& m : markers) {
      if (m.is_zero()) fail("invalid-params", "zero marker");
      degree_of(m, grading);  // throws if inhomogeneous
      if (ideal.contains(m))
        fail("invalid-params", "marker " + m.str() + " vanishes on the presented ring");
    }
  }

  int dim() const { return dim_of(ideal); }
};

struct Certificate {
  enum class Kind { Codim2Stop, Cr2 };
  Kind kind = Kind::Codim2Stop;
  bool pass = false;
  std::string detail;  // names the failed condition when !pass
  int dim_base = 0;
  int dim_presentation = 0;
  int dim_with_markers = 0;
  int codim_markers = 0;
  std::string field;
  uint64_t seed = 0;
  int rounds = 0;
  std::vector<DegreeVector> new_degrees;
};

// codim of V(m_1..m_s) in Spec(R): dim(I) - dim(I + <m_1..m_s>).
// Markers generating the unit ideal mod I have empty locus; reported as
// arity + 1.
template <class F>
int codim_of_markers(const PresentedRing<F>& R) {
  int d = dim_of(R.ideal);
  if (d < 0) fail("invalid-params", "defining ideal is the unit ideal");
  Ideal<F> with = R.ideal.plus(R.markers);
  int dm = dim_of(with);
  if (dm < 0) return static_cast<int>(R.ring->arity()) + 1;
  return d - dm;
}

template <class F>
void check_pivot(const PresentedRing<F>& R, int pivot) {
  if (pivot < 0 || static_cast<size_t>(pivot) >= R.markers.size())
    fail("pivot-out-of-range", "pivot index " + std::to_string(pivot));
}

// I_n(R): numerators of fractions f/m_pivot^n lying in every other
// localization. The per-marker saturations are independent and run in
// parallel; the intersection is folded in index order afterwards.
template <class F>
Ideal<F> saturation_intersection(const PresentedRing<F>& R, int pivot, int n) {
  check_pivot(R, pivot);
  if (R.markers.size() < 2)
    fail("single-marker", "I_n(R) needs at least two markers");
  if (n < 1) fail("invalid-params", "level n must be >= 1");
  Ideal<F> A = R.ideal.plus({R.markers[static_cast<size_t>(pivot)].pow(n)});
  std::vector<int> others;
  for (size_t i = 0; i < R.markers.size(); ++i)
    if (static_cast<int>(i) != pivot) others.push_back(static_cast<int>(i));
  std::vector<Ideal<F>> sats(others.size());
#pragma omp parallel for schedule(dynamic)
  for (size_t a = 0; a < others.size(); ++a)
    sats[a] = saturation(A, R.markers[static_cast<size_t>(others[a])]).first;
  Ideal<F> acc = sats[0];
  for (size_t a = 1; a < sats.size(); ++a) acc = ideal_intersection(acc, sats[a]);
  return acc;
}

// B_n: minimal homogeneous generators of I_n(R) that do not already lie in
// <m_pivot^n>_R. Ascending (degree, leading monomial).
template <class F>
std::vector<Poly<F>> new_fraction_numerators(const PresentedRing<F>& R, int pivot, int n) {
  Ideal<F> In = saturation_intersection(R, pivot, n);
  Ideal<F> mod = R.ideal.plus({R.markers[static_cast<size_t>(pivot)].pow(n)});
  std::vector<Poly<F>> out;
  for (const auto& g : minimal_homogeneous_generators(In, R.grading))
    if (!mod.contains(g)) out.push_back(g);
  return out;
}

namespace detail {

template <class F>
std::string next_adjoined_name(const PresentedRing<F>& R) {
  for (int idx = static_cast<int>(R.history.size()) + 1;; ++idx) {
    std::string name = "S" + std::to_string(idx);
    if (R.ring->var_index(name) < 0) return name;
  }
}

// membership climb: f * m^k ∈ A for some k <= cap
template <class F>
bool in_saturation(const Ideal<F>& A, const Poly<F>& f, const Poly<F>& m, int cap = 64) {
  Poly<F> p = f;
  for (int k = 0; k <= cap; ++k) {
    if (A.contains(p)) return true;
    p = p * m;
  }
  return false;
}

}  // namespace detail

// Lemma-2.3 adjunction: R[S]/(<old ideal, S*m^n - f> : m^inf), grading
// extended by deg f - n*deg m, markers re-embedded verbatim.
template <class F>
PresentedRing<F> adjoin_fraction(const PresentedRing<F>& R, const Poly<F>& f, int pivot,
                                 int n) {
  check_pivot(R, pivot);
  if (n < 1) fail("invalid-params", "level n must be >= 1");
  const Poly<F>& m = R.markers[static_cast<size_t>(pivot)];
  DegreeVector deg_f = degree_of(f, R.grading);  // also enforces homogeneity
  Ideal<F> mod = R.ideal.plus({m.pow(n)});
  if (mod.contains(f))
    fail("precondition-violation", "numerator already lies in <m^" + std::to_string(n) + ">");
  for (size_t i = 0; i < R.markers.size(); ++i) {
    if (static_cast<int>(i) == pivot) continue;
    if (!detail::in_saturation(mod, f, R.markers[i]))
      fail("precondition-violation",
           "numerator not in I_n: fails saturation w.r.t. " + R.markers[i].str());
  }

  std::string sname = detail::next_adjoined_name(R);
  RingPtr<F> ext = extend_ring(R.ring, {sname});
  std::vector<int> var_map(R.ring->arity());
  for (size_t i = 0; i < var_map.size(); ++i) var_map[i] = static_cast<int>(i);
  Poly<F> S = Poly<F>::variable(ext, ext->arity() - 1);
  Poly<F> relation = S * m.embedded(ext, var_map).pow(n) - f.embedded(ext, var_map);

  Ideal<F> raw = embed_ideal(R.ideal, ext).plus({relation});
  Ideal<F> saturated = saturation(raw, m.embedded(ext, var_map)).first;

  DegreeVector deg_m = degree_of(m, R.grading);
  DegreeVector deg_S = adjoined_degree(deg_f, n, deg_m);

  PresentedRing<F> out;
  out.ring = ext;
  out.ideal = std::move(saturated);
  out.grading = R.grading.with_column(deg_S);
  for (const auto& mk : R.markers) out.markers.push_back(mk.embedded(ext, var_map));
  out.history = R.history;
  out.history.push_back({sname, f, pivot, n, deg_S});
  out.base_arity = R.base_arity;
  out.validate();
  return out;
}

struct LocalizeOptions {
  int max_rounds = 16;
  int max_level = 64;
  uint64_t seed = 0;
  std::function<void(const std::string&)> log;  // optional verbose sink
};

template <class F>
struct LocalizeResult {
  enum class Status { Certified, BudgetExhausted };
  PresentedRing<F> ring;
  Certificate certificate;
  Status status = Status::Certified;
  int rounds = 0;
};

// Algorithm 1: enlarge R by fractions f/m_pivot^n until V(m_1..m_s) has
// codimension >= 2. Each round takes the smallest productive level n and
// adjoins its numerators one at a time, re-filtering against the grown
// presentation so subring-redundant basis elements are skipped.
template <class F>
LocalizeResult<F> intersect_localizations(const PresentedRing<F>& R0, int pivot,
                                          const LocalizeOptions& opts = {}) {
  check_pivot(R0, pivot);
  if (R0.markers.size() < 2)
    fail("single-marker",
         "s = 1: the intersection is R_{m_1} itself, which is not presented here "
         "(inverting m_1 changes Spec)");
  if (opts.max_rounds < 1) fail("invalid-params", "max_rounds must be >= 1");

  auto log = [&](const std::string& s) { if (opts.log) opts.log(s); };

  LocalizeResult<F> res;
  res.ring = R0;
  int dim0 = dim_of(R0.ideal);

  for (;;) {
    int codim = codim_of_markers(res.ring);
    log("round " + std::to_string(res.rounds) + ": codim(V(markers)) = " +
        std::to_string(codim));
    if (codim >= 2) {
      Certificate c;
      c.kind = Certificate::Kind::Codim2Stop;
      c.pass = true;
      c.dim_base = dim0;
      c.dim_presentation = dim_of(res.ring.ideal);
      c.dim_with_markers = dim_of(res.ring.ideal.plus(res.ring.markers));
      c.codim_markers = codim;
      c.field = res.ring.ring->field().name();
      c.seed = opts.seed;
      c.rounds = res.rounds;
      for (const auto& h : res.ring.history) c.new_degrees.push_back(h.degree);
      res.certificate = std::move(c);
      res.status = LocalizeResult<F>::Status::Certified;
      return res;
    }
    if (codim <= 0)
      fail("invalid-params", "V(markers) contains a component of Spec(R)");
    if (res.rounds >= opts.max_rounds) {
      Certificate c;
      c.kind = Certificate::Kind::Codim2Stop;
      c.pass = false;
      c.detail = "round-budget-exhausted";
      c.dim_base = dim0;
      c.dim_presentation = dim_of(res.ring.ideal);
      c.codim_markers = codim;
      c.field = res.ring.ring->field().name();
      c.seed = opts.seed;
      c.rounds = res.rounds;
      for (const auto& h : res.ring.history) c.new_degrees.push_back(h.degree);
      res.certificate = std::move(c);
      res.status = LocalizeResult<F>::Status::BudgetExhausted;
      return res;
    }

    PresentedRing<F> round_start = res.ring;
    bool adjoined_any = false;
    for (int n = 1; n <= opts.max_level && !adjoined_any; ++n) {
      std::vector<Poly<F>> B = new_fraction_numerators(round_start, pivot, n);
      if (B.empty()) continue;
      log("  level n = " + std::to_string(n) + ": |B_n| = " + std::to_string(B.size()));
      for (const auto& f : B) {
        std::vector<int> var_map(round_start.ring->arity());
        for (size_t i = 0; i < var_map.size(); ++i) var_map[i] = static_cast<int>(i);
        Poly<F> fe = f.embedded(res.ring.ring, var_map);
        Ideal<F> mod = res.ring.ideal.plus(
            {res.ring.markers[static_cast<size_t>(pivot)].pow(n)});
        if (mod.contains(fe)) {
          log("    skip (now redundant): " + f.str());
          continue;  // became expressible through earlier adjunctions
        }
        res.ring = adjoin_fraction(res.ring, fe, pivot, n);
        adjoined_any = true;
        log("    adjoin " + res.ring.history.back().var + " of degree " +
            res.ring.history.back().degree.str());
      }
      // a level where every basis element got filtered counts as empty
    }
    if (!adjoined_any)
      fail("level-cap-exhausted",
           "no new fraction up to n = " + std::to_string(opts.max_level));
    ++res.rounds;
  }
}

// --- Corollary 2.5 style certificate ----------------------------------------

namespace detail {

// value of a polynomial in the extended ring under S_j -> num_j/den_j,
// returned as a fraction over the base ring
template <class F>
std::pair<Poly<F>, Poly<F>> eval_fraction(
    const Poly<F>& g, const RingPtr<F>& base,
    const std::vector<std::pair<Poly<F>, Poly<F>>>& values) {
  const F& k = base->field();
  Poly<F> N = Poly<F>::zero(base, MonomialOrder::grevlex());
  Poly<F> D = Poly<F>::constant(base, k.one());
  size_t nb = base->arity();
  for (const auto& t : g.terms()) {
    Monomial mb(nb);
    for (size_t i = 0; i < nb; ++i) mb.e[i] = t.m.e[i];
    Poly<F> tn = Poly<F>::monomial(base, mb, t.c);
    Poly<F> td = Poly<F>::constant(base, k.one());
    for (size_t j = nb; j < t.m.e.size(); ++j) {
      int e = t.m.e[j];
      if (e == 0) continue;
      const auto& [vn, vd] = values[j - nb];
      tn = tn * vn.pow(e);
      td = td * vd.pow(e);
    }
    // N/D + tn/td
    N = N * td + tn * D;
    D = D * td;
  }
  return {N, D};
}

}  // namespace detail

// Certify ext = R_{m_1} ∩ ... ∩ R_{m_s} without computing saturations:
// every relation of ext must vanish under substitution of the adjoined
// fractions, the fractions must lie in every localization of the base, and
// the two dimension conditions must hold on ext.
template <class F>
Certificate cr2_certificate(const PresentedRing<F>& base, const PresentedRing<F>& ext) {
  Certificate c;
  c.kind = Certificate::Kind::Cr2;
  c.field = base.ring->field().name();
  for (const auto& h : ext.history) c.new_degrees.push_back(h.degree);

  // layout check: ext = base vars followed by the adjoined ones
  if (ext.ring->arity() != base.ring->arity() + ext.history.size())
    fail("invalid-params", "extension arity does not match its history");
  for (size_t i = 0; i < base.ring->arity(); ++i)
    if (ext.ring->var_name(i) != base.ring->var_name(i))
      fail("invalid-params", "extension does not start with the base variables");

  // fraction values over the base ring
  std::vector<std::pair<Poly<F>, Poly<F>>> values;
  for (const auto& h : ext.history) {
    auto [num, den] = detail::eval_fraction(h.numerator, base.ring, values);
    Poly<F> mp = base.markers[static_cast<size_t>(h.pivot)].pow(h.level);
    values.push_back({num, den * mp});
  }

  // (a) relations vanish under substitution
  for (const auto& g : ext.ideal.gens()) {
    auto [N, D] = detail::eval_fraction(g, base.ring, values);
    (void)D;
    if (!base.ideal.contains(N)) {
      c.pass = false;
      c.detail = "relation-not-satisfied: " + g.str();
      return c;
    }
  }
  // (b) fractions lie in every localization of the base
  for (size_t j = 0; j < values.size(); ++j) {
    Ideal<F> mod = base.ideal.plus({values[j].second});
    for (const auto& mk : base.markers) {
      if (!detail::in_saturation(mod, values[j].first, mk)) {
        c.pass = false;
        c.detail = "fraction-outside-intersection: " + ext.history[j].var +
                   " w.r.t. marker " + mk.str();
        return c;
      }
    }
  }
  // (c) dim Spec(R'') = dim Spec(R)
  c.dim_base = dim_of(base.ideal);
  c.dim_presentation = dim_of(ext.ideal);
  if (c.dim_base != c.dim_presentation) {
    c.pass = false;
    c.detail = "condition-failed: dimension (" + std::to_string(c.dim_presentation) +
               " != " + std::to_string(c.dim_base) + ")";
    return c;
  }
  // (d) codim(V(m_1..m_s)) >= 2 in Spec(R'')
  c.dim_with_markers = dim_of(ext.ideal.plus(ext.markers));
  c.codim_markers = c.dim_with_markers < 0
                        ? static_cast<int>(ext.ring->arity()) + 1
                        : c.dim_presentation - c.dim_with_markers;
  if (c.codim_markers < 2) {
    c.pass = false;
    c.detail = "condition-failed: codim (" + std::to_string(c.codim_markers) + " < 2)";
    return c;
  }
  c.pass = true;
  return c;
}

}  // namespace cox
