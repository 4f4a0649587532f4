#pragma once

#include <string>
#include <vector>

#include "cox/localize.hpp"

namespace cox {

// f = sum_{i=0..d} (-1)^i f_i Ta^{d-i} Tb^i along the codim-2 pair (Ta, Tb).
// Canonical bucket for a term with Tb-exponent beta is i = min(beta, d),
// which keeps f_0 free of Tb (what the saturation argument needs).
template <class F>
struct MultiplicitySplit {
  int d = 0;
  std::vector<Poly<F>> parts;  // f_0 .. f_d
  int ia = -1, ib = -1;        // indices of (Ta, Tb)
  bool tb_clean = true;        // no part divisible by Tb
};

template <class F>
MultiplicitySplit<F> split_multiplicity(const Poly<F>& f, int ia, int ib) {
  if (f.is_zero()) fail("zero-polynomial", "cannot split 0");
  size_t ua = static_cast<size_t>(ia), ub = static_cast<size_t>(ib);
  int d = -1;
  for (const auto& t : f.terms()) {
    int q = t.m.e[ua] + t.m.e[ub];
    d = (d < 0) ? q : std::min(d, q);
  }
  if (d == 0)
    fail("multiplicity-zero", "f does not lie in <" + f.ring()->var_name(ua) + "," +
                                  f.ring()->var_name(ub) + ">");
  const F& k = f.ring()->field();
  std::vector<std::vector<Term<F>>> buckets(static_cast<size_t>(d) + 1);
  for (const auto& t : f.terms()) {
    int beta = t.m.e[ub];
    int i = std::min(beta, d);
    Monomial m = t.m;
    m.e[ua] -= d - i;
    m.e[ub] -= i;
    typename F::Elem c = (i % 2 == 0) ? t.c : k.neg(t.c);
    buckets[static_cast<size_t>(i)].push_back({std::move(m), std::move(c)});
  }
  MultiplicitySplit<F> out;
  out.d = d;
  out.ia = ia;
  out.ib = ib;
  for (auto& b : buckets)
    out.parts.push_back(Poly<F>::from_terms(f.ring(), f.order(), std::move(b)));
  // reconstruction must be exact
  Poly<F> rec = Poly<F>::zero(f.ring(), f.order());
  for (int i = 0; i <= d; ++i) {
    Monomial m(f.ring()->arity());
    m.e[ua] = d - i;
    m.e[ub] = i;
    Poly<F> c = out.parts[static_cast<size_t>(i)].scaled_term(
        m, (i % 2 == 0) ? k.one() : k.neg(k.one()));
    rec = rec + c;
  }
  if (rec != f) fail("internal-error", "multiplicity split does not reconstruct f");
  for (const auto& p : out.parts)
    if (p.uses_var(ub)) out.tb_clean = false;
  return out;
}

enum class PresKind { HypersurfaceCI, TheoremB };

template <class F>
struct CoxPresentation {
  PresKind kind = PresKind::TheoremB;
  RingPtr<F> ring;  // T- and S-variables
  GradingMatrix grading;
  std::vector<Poly<F>> relations;  // d+1 relations (or just f for the CI case)
  Ideal<F> ideal;
  int d = 0;
  int pair_a = -1, pair_b = -1;
  std::vector<Poly<F>> parts;
  Certificate certificate;
  PresentedRing<F> presented;  // populated for TheoremB
};

struct TheoremBOptions {
  bool dim3_ok = false;
};

// Closed-form Cox presentation of a general ample hypersurface (Theorem B):
// relations f_0 + Tb S_1; f_i + Ta S_i + Tb S_{i+1}; f_d + Ta S_d, with the
// codim-(d+3) hypothesis checked and a Cor-2.5 style certificate attached.
template <class F>
CoxPresentation<F> theoremB_presentation(const ToricAmbient<F>& Z, const Poly<F>& f,
                                         const TheoremBOptions& opts = {}) {
  check_same_ring(Z.ring, f.ring());
  if (!is_homogeneous(f, Z.grading))
    fail("inhomogeneous-input", "hypersurface equation is not homogeneous");
  DegreeVector deg = degree_of(f, Z.grading);
  auto pairs = codim2_components(Z);
  if (pairs.size() != 1) {
    std::string list;
    for (auto [i, j] : pairs)
      list += " {" + Z.ring->var_name(static_cast<size_t>(i)) + "," +
              Z.ring->var_name(static_cast<size_t>(j)) + "}";
    fail("non-unique-codim2-component",
         "irrelevant ideal has " + std::to_string(pairs.size()) +
             " codim-2 components:" + list);
  }
  if (Z.dim < 4 && !opts.dim3_ok)
    fail("dimension-gate",
         "ambient dimension " + std::to_string(Z.dim) + " < 4 (pass dim3-ok to override)");
  if (Z.quadrant_nef && !is_ample_rank2(deg))
    fail("not-ample", "degree " + deg.str() + " is not ample (positive quadrant)");

  auto [ia, ib] = pairs[0];
  MultiplicitySplit<F> split = split_multiplicity(f, ia, ib);
  int d = split.d;
  size_t r = Z.ring->arity();

  // codim hypothesis: V(Ta, Tb, f_0..f_d) has codim d+3 in K^r
  std::vector<Poly<F>> hyp = {Poly<F>::variable(Z.ring, static_cast<size_t>(ia)),
                              Poly<F>::variable(Z.ring, static_cast<size_t>(ib))};
  for (const auto& p : split.parts) hyp.push_back(p);
  int dim_hyp = dim_of(Ideal<F>(Z.ring, hyp));
  int codim_hyp = static_cast<int>(r) - dim_hyp;
  if (codim_hyp != d + 3)
    fail("codimension-hypothesis-failed",
         "V(Ta,Tb,f_0..f_d) has codimension " + std::to_string(codim_hyp) +
             ", expected " + std::to_string(d + 3));

  // extended ring and grading
  std::vector<std::string> snames;
  for (int j = 1; j <= d; ++j) {
    std::string base = "S" + std::to_string(j);
    while (Z.ring->var_index(base) >= 0) base += "x";
    snames.push_back(base);
  }
  RingPtr<F> ext = extend_ring(Z.ring, snames);
  std::vector<int> vm(r);
  for (size_t i = 0; i < r; ++i) vm[i] = static_cast<int>(i);
  DegreeVector dTa = Z.grading.column(static_cast<size_t>(ia));
  DegreeVector dTb = Z.grading.column(static_cast<size_t>(ib));
  GradingMatrix grading = Z.grading;
  std::vector<DegreeVector> sdegs;
  for (int j = 1; j <= d; ++j) {
    DegreeVector dj = deg - dTa * (d - j + 1) - dTb * j;
    grading = grading.with_column(dj);
    sdegs.push_back(dj);
  }

  Poly<F> Ta = Poly<F>::variable(ext, static_cast<size_t>(ia));
  Poly<F> Tb = Poly<F>::variable(ext, static_cast<size_t>(ib));
  auto S = [&](int j) { return Poly<F>::variable(ext, r + static_cast<size_t>(j) - 1); };
  std::vector<Poly<F>> parts_ext;
  for (const auto& p : split.parts) parts_ext.push_back(p.embedded(ext, vm));

  std::vector<Poly<F>> rels;
  rels.push_back(parts_ext[0] + Tb * S(1));
  for (int i = 1; i <= d - 1; ++i)
    rels.push_back(parts_ext[static_cast<size_t>(i)] + Ta * S(i) + Tb * S(i + 1));
  rels.push_back(parts_ext[static_cast<size_t>(d)] + Ta * S(d));

  // presented base and extension (markers Ta, Tb), fractions over Tb
  PresentedRing<F> base(Z.ring, Ideal<F>(Z.ring, {f}), Z.grading,
                        {Poly<F>::variable(Z.ring, static_cast<size_t>(ia)),
                         Poly<F>::variable(Z.ring, static_cast<size_t>(ib))});
  PresentedRing<F> extp;
  extp.ring = ext;
  extp.ideal = Ideal<F>(ext, rels);
  extp.grading = grading;
  extp.markers = {Ta, Tb};
  extp.base_arity = r;
  for (int j = 1; j <= d; ++j) {
    // S_j = -(f_{j-1} + Ta S_{j-1}) / Tb, numerator in the ring before S_j
    RingPtr<F> prev = (j == 1) ? Z.ring : extend_ring(Z.ring, std::vector<std::string>(
                                              snames.begin(), snames.begin() + (j - 1)));
    std::vector<int> vmp(r);
    for (size_t i = 0; i < r; ++i) vmp[i] = static_cast<int>(i);
    Poly<F> num = -split.parts[static_cast<size_t>(j - 1)].embedded(prev, vmp);
    if (j > 1) {
      Poly<F> Sprev = Poly<F>::variable(prev, prev->arity() - 1);
      std::vector<int> vma(r);
      for (size_t i = 0; i < r; ++i) vma[i] = static_cast<int>(i);
      Poly<F> TaPrev = Poly<F>::variable(prev, static_cast<size_t>(ia));
      num = num - TaPrev * Sprev;
    }
    extp.history.push_back({snames[static_cast<size_t>(j - 1)], num, 1, 1,
                            sdegs[static_cast<size_t>(j - 1)]});
  }
  extp.validate();

  Certificate cert = cr2_certificate(base, extp);
  if (!cert.pass)
    fail("certificate-failed", "Cor 2.5 conditions failed despite the codimension "
                               "hypothesis: " + cert.detail);

  CoxPresentation<F> out;
  out.kind = PresKind::TheoremB;
  out.ring = ext;
  out.grading = grading;
  out.relations = rels;
  out.ideal = extp.ideal;
  out.d = d;
  out.pair_a = ia;
  out.pair_b = ib;
  out.parts = split.parts;
  out.certificate = cert;
  out.presented = extp;
  return out;
}

// --- Corollary C -------------------------------------------------------------

struct CorollaryCCase {
  enum class Kind { Case1, Case2, NotApplicable };
  Kind kind = Kind::NotApplicable;
  int d = 0;
  std::string reason;
};

// Which Corollary-C case covers a hypersurface of degree [a,b] in the
// rank-2 normal form; d is the predicted multiplicity.
inline CorollaryCCase corollaryC_case(const Rank2Params& p, const DegreeVector& deg) {
  p.validate();
  if (deg.rank() != 2) fail("rank-mismatch", "rank-2 degree expected");
  long a = deg.v[0], b = deg.v[1];
  CorollaryCCase out;
  if (p.k == p.n - 1) {
    int m = 0;
    for (int i = 0; i < p.k; ++i)
      if (p.a[static_cast<size_t>(i)] == 0) m = i + 1;
    if (a > 0 && a <= m && b > 0) {
      out.kind = CorollaryCCase::Kind::Case1;
      out.d = static_cast<int>(a);
      return out;
    }
    if (a <= 0 || b <= 0) {
      out.reason = "degree not ample: need a > 0 and b > 0";
      return out;
    }
    if (m == static_cast<int>(p.a.size()) && a > m) {
      // ambient is P^1 x P^n and the degree exceeds the bound
      out.reason = "a > n-1 on P^1 x P^n: effective cone not closed, Cox ring "
                   "not finitely generated";
      return out;
    }
    out.reason = "a <= max{k : a_k = 0} fails (a = " + std::to_string(a) +
                 ", max = " + std::to_string(m) + ")";
    return out;
  }
  if (p.k == 1) {
    if (a > 0 && b > 0 && b <= p.n - 1) {
      out.kind = CorollaryCCase::Kind::Case2;
      out.d = static_cast<int>(b);
      return out;
    }
    if (a <= 0 || b <= 0) out.reason = "degree not ample: need a > 0 and b > 0";
    else out.reason = "0 < b <= n-1 fails (b = " + std::to_string(b) + ")";
    return out;
  }
  out.reason = "2 <= k <= n-2: the irrelevant ideal has no codimension-2 component";
  return out;
}

// --- anticanonical table (Corollary 6.1) -------------------------------------

enum class AnticanonicalRow { HypersurfaceCI, D1Table, D2Table };

template <class F>
struct AnticanonicalResult {
  AnticanonicalRow row = AnticanonicalRow::HypersurfaceCI;
  DegreeVector degree;
  CoxPresentation<F> presentation;
};

template <class F>
AnticanonicalResult<F> anticanonical_presentation(const F& field, const Rank2Params& p,
                                                  uint64_t seed) {
  p.validate();
  if (!is_fano(p)) fail("not-fano", "sum a_i < n-k+1 fails");
  if (p.n < 4) fail("invalid-params", "anticanonical table needs n >= 4");
  ToricAmbient<F> Z = rank2_smooth(field, p);
  DegreeVector deg = anticanonical_degree_rank2(p);
  AnticanonicalResult<F> out;
  out.degree = deg;
  if (p.k >= 2 && p.k <= p.n - 2) {
    Poly<F> f = random_general_polynomial(Z, deg, seed);
    CoxPresentation<F> pres;
    pres.kind = PresKind::HypersurfaceCI;
    pres.ring = Z.ring;
    pres.grading = Z.grading;
    pres.relations = {f};
    pres.ideal = Ideal<F>(Z.ring, {f});
    pres.d = 0;
    pres.certificate.kind = Certificate::Kind::Cr2;
    pres.certificate.pass = true;
    pres.certificate.detail = "no codim-2 irrelevant component; Cox ring is K[T]/<f>";
    pres.certificate.field = field.name();
    pres.certificate.seed = seed;
    out.row = AnticanonicalRow::HypersurfaceCI;
    out.presentation = std::move(pres);
    return out;
  }
  if (p.k == p.n - 1) {
    if (p.a.back() == 0)
      fail("unsupported-shape", "ambient is P^1 x P^{n-1}; enter it in the k = 1 form");
    // Fano forces a_1 = ... = a_{n-2} = 0 and a_{n-1} = 1; deg = [1, n], d = 1
    Poly<F> f = random_general_polynomial(Z, deg, seed);
    out.row = AnticanonicalRow::D1Table;
    out.presentation = theoremB_presentation(Z, f);
    out.presentation.certificate.seed = seed;
    return out;
  }
  // k = 1: deg = [n - a_1, 2], d = 2
  Poly<F> f = random_general_polynomial(Z, deg, seed);
  out.row = AnticanonicalRow::D2Table;
  out.presentation = theoremB_presentation(Z, f);
  out.presentation.certificate.seed = seed;
  return out;
}

// --- very general ample surfaces in rank-2 threefolds (Corollary 6.2) --------

template <class F>
CoxPresentation<F> rank2_surface_presentation(const F& field, const Rank2Params& p,
                                              const DegreeVector& deg, uint64_t seed) {
  p.validate();
  if (p.n != 3) fail("invalid-params", "surface table is for threefolds (n = 3)");
  if (deg.rank() != 2) fail("rank-mismatch", "rank-2 degree expected");
  long a = deg.v[0], b = deg.v[1];
  if (p.k == 2) {
    if (p.a[0] != 0)
      fail("conditions-violated", "a_1 = 0 required (codimension condition "
                                  "unachievable otherwise)");
    if (p.a[1] <= 0) fail("conditions-violated", "a_2 > 0 fails");
    if (a != 1) fail("conditions-violated", "deg = [1,b] fails (a = " + std::to_string(a) + ")");
    if (b < 3) fail("conditions-violated", "b-3>=0 fails (b = " + std::to_string(b) + ")");
  } else if (p.k == 1) {
    if (b != 2) fail("conditions-violated", "deg = [a,2] fails (b = " + std::to_string(b) + ")");
    long lo = std::max<long>(1, 3 - p.a[0]);
    if (a < lo)
      fail("conditions-violated", "a >= max{1,3-a_1} fails (a = " + std::to_string(a) +
                                      ", bound = " + std::to_string(lo) + ")");
  } else {
    fail("conditions-violated", "k must be 1 or 2 for n = 3");
  }
  ToricAmbient<F> Z = rank2_smooth(field, p);
  Poly<F> f = random_general_polynomial(Z, deg, seed);
  TheoremBOptions opts;
  opts.dim3_ok = true;
  try {
    CoxPresentation<F> pres = theoremB_presentation(Z, f, opts);
    pres.certificate.seed = seed;
    return pres;
  } catch (const Error& e) {
    if (e.kind() == "codimension-hypothesis-failed")
      fail("genericity-check-failed", std::string("seed not general - retry: ") + e.what());
    throw;
  }
}

// --- scrolls -----------------------------------------------------------------

// Degree-[d,1] hypersurfaces of P^1 x P^{n-1} are scrolls
// S(0,..,0,1,..,1) with a = d mod (n-1) ones; a = 0 encodes P^1 x P^{n-2}.
struct ScrollType {
  int zeros = 0;
  int ones = 0;
};

inline ScrollType scroll_type(int n, int d) {
  if (n < 3 || d < 1) fail("invalid-params", "scroll_type needs n >= 3, d >= 1");
  int a = d % (n - 1);
  return {n - a - 1, a};
}

}  // namespace cox
