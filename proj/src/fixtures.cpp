#include "cox/fixtures.hpp"

#include <algorithm>
#include <functional>

#include "cox/examples.hpp"

namespace cox {

namespace {

struct Check {
  bool ok = true;
  std::string log;
  void require(bool cond, const std::string& what) {
    log += (cond ? "ok   " : "FAIL ") + what + "\n";
    if (!cond) ok = false;
  }
};

bool same_multiset(std::vector<DegreeVector> a, std::vector<DegreeVector> b) {
  auto lt = [](const DegreeVector& x, const DegreeVector& y) { return x.v < y.v; };
  std::sort(a.begin(), a.end(), lt);
  std::sort(b.begin(), b.end(), lt);
  return a == b;
}

std::vector<DegreeVector> degs(const std::vector<std::vector<long>>& vs) {
  std::vector<DegreeVector> out;
  for (const auto& v : vs) out.push_back(DegreeVector(v));
  return out;
}

template <class F>
std::string input_doc_for(const ToricAmbient<F>& Z, const Poly<F>& f,
                          const std::vector<Poly<F>>& markers) {
  std::string s;
  s += "ring " + Z.ring->field().name() + "[" + render_var_list(Z.ring->vars()) + "]\n";
  s += "grading " + Z.grading.str() + "\n";
  s += "irrelevant ";
  for (size_t i = 0; i < Z.irrelevant.size(); ++i) {
    if (i) s += ", ";
    s += Poly<F>::monomial(Z.ring, Z.irrelevant[i], Z.ring->field().one()).str();
  }
  s += "\nrelations " + f.str() + "\n";
  s += "markers ";
  for (size_t i = 0; i < markers.size(); ++i) {
    if (i) s += ", ";
    s += markers[i].str();
  }
  s += "\n";
  return s;
}

template <class F>
int marker_index(const std::vector<Poly<F>>& markers, const std::string& text) {
  for (size_t i = 0; i < markers.size(); ++i)
    if (markers[i].str() == text) return static_cast<int>(i);
  fail("invalid-params", "marker " + text + " not in list");
}

// ---------------------------------------------------------------------------

template <class F>
FixtureResult fx_cone(const F& field) {
  Check c;
  PresentedRing<F> R = cone_presented(field);
  auto res = intersect_localizations(R, 0);
  c.require(res.status == LocalizeResult<F>::Status::Certified, "certified");
  c.require(res.rounds == 1, "one round");
  c.require(res.ring.history.size() == 1, "one new generator");
  c.require(dim_of(res.ring.ideal) == 3, "presentation dimension 3");
  c.require(codim_of_markers(res.ring) == 2, "markers codim 2");
  Certificate cr2 = cr2_certificate(R, res.ring);
  c.require(cr2.pass, "cr2 certificate passes");
  // after eliminating u, v the presentation is a polynomial ring in x, y, S1
  Ideal<F> J = eliminate_vars(res.ring.ideal, {2, 3});
  c.require(J.gens().empty(), "eliminating u,v leaves no relations");
  FixtureResult out;
  out.ok = c.ok;
  out.log = c.log;
  out.report = presentation_report(res.ring,
                                   minimal_homogeneous_generators(res.ring.ideal,
                                                                  res.ring.grading),
                                   res.certificate, "certified");
  return out;
}

template <class F>
FixtureResult fx_bl2p4(const F& field, int max_rounds = 16) {
  Check c;
  ToricAmbient<F> Z = blowup_p4_two_points(field);
  DegreeVector deg({3, -1, -1});
  const uint64_t seed = 20250810;
  Poly<F> f = random_general_polynomial(Z, deg, seed);
  auto markers = hypersurface_markers(Z, f);
  c.require(markers.size() == 3, "three markers");
  PresentedRing<F> R(Z.ring, Ideal<F>(Z.ring, {f}), Z.grading, markers);
  LocalizeOptions opts;
  opts.max_rounds = max_rounds;
  opts.seed = seed;
  int pivot = marker_index(markers, "T6*T7");
  auto res = intersect_localizations(R, pivot, opts);
  FixtureResult out;
  out.input_doc = input_doc_for(Z, f, markers);
  if (max_rounds < 2) {  // budget probe variant
    c.require(res.status == LocalizeResult<F>::Status::BudgetExhausted, "budget exhausted");
    out.ok = c.ok;
    out.log = c.log;
    out.report = presentation_report(res.ring, res.ring.ideal.gens(), res.certificate,
                                     "budget-exhausted");
    return out;
  }
  c.require(res.status == LocalizeResult<F>::Status::Certified, "certified");
  c.require(res.rounds <= 2, "at most two rounds");
  c.require(res.ring.history.size() == 4, "four new generators");
  std::vector<DegreeVector> got;
  for (const auto& h : res.ring.history) got.push_back(h.degree);
  c.require(same_multiset(got, degs({{1, 0, -2}, {1, -2, 0}, {2, -3, -2}, {2, -2, -3}})),
            "degree multiset {(1,0,-2),(1,-2,0),(2,-3,-2),(2,-2,-3)}");
  auto mins_full = minimal_homogeneous_generators(res.ring.ideal, res.ring.grading);
  c.require(mins_full.size() == 5, "11-variable ideal has 5 minimal generators");
  c.require(dim_of(res.ring.ideal) == 6, "presentation dimension 6");
  // eliminate T4, T5: the Cox ring in 9 variables
  Ideal<F> Jbig = eliminate_vars(res.ring.ideal, {3, 4});
  std::vector<int> keep = {0, 1, 2, 5, 6, 7, 8, 9, 10};
  Ideal<F> J = restrict_ideal(Jbig, keep);
  GradingMatrix gJ = res.ring.grading.restricted(keep);
  c.require(J.ring()->arity() == 9, "eliminated presentation lives in 9 variables");
  c.require(dim_of(J) == 6, "J has Krull dimension 6");
  auto minsJ = minimal_homogeneous_generators(J, gJ);
  c.require(minsJ.size() == 3, "J has exactly 3 minimal generators (complete intersection)");
  Certificate cr2 = cr2_certificate(R, res.ring);
  c.require(cr2.pass, "cr2 certificate re-verified from scratch");
  out.ok = c.ok;
  out.log = c.log;
  out.report = presentation_report(res.ring, mins_full, res.certificate, "certified");
  return out;
}

template <class F>
FixtureResult fx_bl2p4_flip(const F& field) {
  Check c;
  ToricAmbient<F> Z = blowup_p4_two_points_flip(field);
  DegreeVector deg({3, -2, -2});
  const uint64_t seed = 20250811;
  Poly<F> f = random_general_polynomial(Z, deg, seed);
  c.require(f.size() == 25, "25 monomials of degree 3H-2E1-2E2");
  auto markers = hypersurface_markers(Z, f);
  c.require(markers.size() == 4, "four markers");
  PresentedRing<F> R(Z.ring, Ideal<F>(Z.ring, {f}), Z.grading, markers);
  LocalizeOptions opts;
  opts.seed = seed;
  int pivot = marker_index(markers, "T4*T5");
  auto res = intersect_localizations(R, pivot, opts);
  FixtureResult out;
  out.input_doc = input_doc_for(Z, f, markers);
  c.require(res.status == LocalizeResult<F>::Status::Certified, "certified");
  c.require(res.ring.history.size() == 2, "two new generators");
  std::vector<DegreeVector> got;
  for (const auto& h : res.ring.history) got.push_back(h.degree);
  c.require(same_multiset(got, degs({{2, -1, -3}, {2, -3, -1}})),
            "degree multiset {(2,-1,-3),(2,-3,-1)}");
  c.require(dim_of(res.ring.ideal) == 6, "J has dimension 6");
  auto mins = minimal_homogeneous_generators(res.ring.ideal, res.ring.grading);
  c.require(mins.size() == 5, "J has exactly 5 minimal generators");
  c.require(static_cast<int>(res.ring.ring->arity()) - dim_of(res.ring.ideal) == 3,
            "codimension 3, so 5 generators mean no complete intersection");
  Certificate cr2 = cr2_certificate(R, res.ring);
  c.require(cr2.pass, "cr2 certificate re-verified from scratch");
  out.ok = c.ok;
  out.log = c.log;
  out.report = presentation_report(res.ring, mins, res.certificate, "certified");
  return out;
}

template <class F>
FixtureResult fx_blpp4_deg5(const F& field) {
  Check c;
  ToricAmbient<F> Z = blowup_p4_one_point(field);
  DegreeVector deg({5, -3});
  const uint64_t seed = 20250812;
  Poly<F> f = random_general_polynomial(Z, deg, seed);
  c.require(f.size() == 111, "111 monomials of degree 5H-3E");
  auto pres = theoremB_presentation(Z, f);
  c.require(pres.d == 2, "multiplicity d = 2");
  c.require(pres.relations.size() == 3, "three relations");
  std::vector<DegreeVector> sdegs;
  for (size_t j = Z.ring->arity(); j < pres.ring->arity(); ++j)
    sdegs.push_back(pres.grading.column(j));
  c.require(same_multiset(sdegs, degs({{3, -4}, {4, -5}})),
            "S-degree multiset {(3,-4),(4,-5)}");
  c.require(pres.certificate.pass, "certificate passes");
  // relation ideal is saturated with respect to Ta*Tb
  Poly<F> tatb = Poly<F>::variable(pres.ring, static_cast<size_t>(pres.pair_a)) *
                 Poly<F>::variable(pres.ring, static_cast<size_t>(pres.pair_b));
  auto [sat, expo] = saturation(pres.ideal, tatb);
  c.require(ideal_equal(sat, pres.ideal) && expo == 0, "ideal saturated w.r.t. Ta*Tb");
  // the algorithm route reaches the same ring: same dims and S-degrees
  auto markers = hypersurface_markers(Z, f);
  PresentedRing<F> R(Z.ring, Ideal<F>(Z.ring, {f}), Z.grading, markers);
  auto res = intersect_localizations(R, marker_index(markers, "T6"), LocalizeOptions{});
  c.require(res.status == LocalizeResult<F>::Status::Certified, "localize route certified");
  std::vector<DegreeVector> adegs;
  for (const auto& h : res.ring.history) adegs.push_back(h.degree);
  c.require(same_multiset(adegs, sdegs), "localize route matches S-degrees");
  c.require(dim_of(res.ring.ideal) == dim_of(pres.ideal), "localize route matches dimension");
  c.require(minimal_homogeneous_generators(res.ring.ideal, res.ring.grading).size() == 3,
            "localize route has 3 minimal relations");
  FixtureResult out;
  out.input_doc = input_doc_for(Z, f, markers);
  out.ok = c.ok;
  out.log = c.log;
  out.report = presentation_report(pres.presented, pres.relations, pres.certificate,
                                   "certified");
  return out;
}

template <class F>
FixtureResult fx_blpp4_degenerate(const F& field) {
  Check c;
  ToricAmbient<F> Z = blowup_p4_one_point(field);
  DegreeVector deg({5, -3});
  Poly<F> f = random_general_polynomial(Z, deg, 20250812);
  // keep only the T5^2 and T6^2 brackets: the middle coefficient vanishes
  std::vector<Term<F>> ts;
  for (const auto& t : f.terms())
    if (!(t.m.e[4] == 1 && t.m.e[5] == 1)) ts.push_back(t);
  Poly<F> fdeg = Poly<F>::from_terms(Z.ring, f.order(), std::move(ts));
  bool rejected = false;
  std::string kind;
  try {
    theoremB_presentation(Z, fdeg);
  } catch (const Error& e) {
    rejected = true;
    kind = e.kind();
  }
  c.require(rejected && kind == "codimension-hypothesis-failed",
            "closed form rejects the non-general equation (" + kind + ")");
  // the algorithm still terminates, one deeper generator of degree (3,-5)
  auto markers = hypersurface_markers(Z, fdeg);
  PresentedRing<F> R(Z.ring, Ideal<F>(Z.ring, {fdeg}), Z.grading, markers);
  auto res = intersect_localizations(R, marker_index(markers, "T6"), LocalizeOptions{});
  c.require(res.status == LocalizeResult<F>::Status::Certified, "localize certified");
  std::vector<DegreeVector> adegs;
  for (const auto& h : res.ring.history) adegs.push_back(h.degree);
  c.require(same_multiset(adegs, degs({{3, -4}, {3, -5}})),
            "adjoined degrees {(3,-4),(3,-5)}");
  // the level-1 generator is linearly expressible through the level-2 one
  Ideal<F> J = eliminate_vars(res.ring.ideal, {6});
  std::vector<int> keep = {0, 1, 2, 3, 4, 5, 7};
  Ideal<F> Jr = restrict_ideal(J, keep);
  auto mins = minimal_homogeneous_generators(Jr, res.ring.grading.restricted(keep));
  c.require(mins.size() == 2, "one-variable presentation with 2 relations");
  FixtureResult out;
  out.ok = c.ok;
  out.log = c.log;
  out.report = presentation_report(res.ring,
                                   minimal_homogeneous_generators(res.ring.ideal,
                                                                  res.ring.grading),
                                   res.certificate, "certified");
  return out;
}

template <class F>
FixtureResult fx_cor61(const F& field, int k) {
  Check c;
  Rank2Params p;
  p.n = 4;
  p.k = k;
  p.a = (k == 1) ? std::vector<int>{1} : std::vector<int>{0, 0, 1};
  auto res = anticanonical_presentation(field, p, 101);
  if (k == 1) {
    c.require(res.row == AnticanonicalRow::D2Table, "k=1 row has two new generators");
    c.require(res.degree == DegreeVector({3, 2}), "-K = [n-a_1, 2] = [3,2]");
    std::vector<DegreeVector> sdegs;
    for (size_t j = p.n + 2; j < res.presentation.ring->arity(); ++j)
      sdegs.push_back(res.presentation.grading.column(j));
    c.require(same_multiset(sdegs, degs({{4, -1}, {5, -1}})),
              "S-degrees {(n,-1),(n+a_1,-1)} = {(4,-1),(5,-1)}");
  } else {
    c.require(res.row == AnticanonicalRow::D1Table, "k=n-1 row has one new generator");
    c.require(res.degree == DegreeVector({1, 4}), "-K = [1, n] = [1,4]");
    std::vector<DegreeVector> sdegs;
    for (size_t j = p.n + 2; j < res.presentation.ring->arity(); ++j)
      sdegs.push_back(res.presentation.grading.column(j));
    c.require(same_multiset(sdegs, degs({{-1, 4}})), "S-degree (-1, n) = (-1,4)");
  }
  c.require(res.presentation.certificate.pass, "certificate passes");
  FixtureResult out;
  out.ok = c.ok;
  out.log = c.log;
  out.report = presentation_report(res.presentation.presented, res.presentation.relations,
                                   res.presentation.certificate, "certified");
  return out;
}

template <class F>
FixtureResult fx_cor62(const F& field, int k) {
  Check c;
  Rank2Params p;
  p.n = 3;
  p.k = k;
  p.a = (k == 1) ? std::vector<int>{1} : std::vector<int>{0, 1};
  DegreeVector deg = (k == 1) ? DegreeVector({2, 2}) : DegreeVector({1, 3});
  auto pres = rank2_surface_presentation(field, p, deg, 101);
  std::vector<DegreeVector> sdegs;
  for (size_t j = p.n + 2; j < pres.ring->arity(); ++j)
    sdegs.push_back(pres.grading.column(j));
  if (k == 1) {
    c.require(pres.d == 2, "d = 2");
    c.require(same_multiset(sdegs, degs({{3, -1}, {4, -1}})),
              "S-degrees {(a+a_1,-1),(a+2a_1,-1)} = {(3,-1),(4,-1)}");
  } else {
    c.require(pres.d == 1, "d = 1");
    c.require(same_multiset(sdegs, degs({{-1, 3}})), "S-degree (-1, b) = (-1,3)");
  }
  c.require(pres.certificate.pass, "certificate passes");
  if (k == 1) {
    // the a_1 = 0 shape violates a >= max{1, 3-a_1}
    Rank2Params bad = p;
    bad.a = {0};
    bool rejected = false;
    std::string msg;
    try {
      rank2_surface_presentation(field, bad, deg, 101);
    } catch (const Error& e) {
      rejected = e.kind() == "conditions-violated";
      msg = e.what();
    }
    c.require(rejected, "a_1=0, deg [2,2] rejected: " + msg);
  }
  FixtureResult out;
  out.ok = c.ok;
  out.log = c.log;
  out.report = presentation_report(pres.presented, pres.relations, pres.certificate,
                                   "certified");
  return out;
}

template <class F>
FixtureResult fx_p1p3(const F& field) {
  Check c;
  Rank2Params p;
  p.n = 4;
  p.k = 3;
  p.a = {0, 0, 0};  // P^1 x P^3
  ToricAmbient<F> Z = rank2_smooth(field, p);
  std::string last_report;
  for (int d = 1; d <= 3; ++d) {
    DegreeVector deg({static_cast<long>(d), 1});
    auto cc = corollaryC_case(p, deg);
    c.require(cc.kind == CorollaryCCase::Kind::Case1 && cc.d == d,
              "degree [" + std::to_string(d) + ",1] is case 1 with d = " + std::to_string(d));
    Poly<F> f = random_general_polynomial(Z, deg, 101 + static_cast<uint64_t>(d));
    auto pres = theoremB_presentation(Z, f);
    c.require(static_cast<int>(pres.relations.size()) == d + 1,
              "presentation has d+1 = " + std::to_string(d + 1) + " relations");
    c.require(pres.certificate.pass, "certificate passes for d = " + std::to_string(d));
    ScrollType st = scroll_type(p.n, d);
    c.require(st.zeros + st.ones == p.n - 1, "scroll type has n-1 entries");
    if (d == 3) c.require(st.ones == 0, "(n-1)|d encodes P^1 x P^2");
    last_report = presentation_report(pres.presented, pres.relations, pres.certificate,
                                      "certified");
  }
  // the degree [n,1] violation on P^1 x P^n (here [4,1] needs a <= 3)
  auto cc = corollaryC_case(p, DegreeVector({4, 1}));
  c.require(cc.kind == CorollaryCCase::Kind::NotApplicable, "degree [4,1] rejected: " + cc.reason);
  FixtureResult out;
  out.ok = c.ok;
  out.log = c.log;
  out.report = last_report;
  return out;
}

template <class F>
FixtureResult dispatch(const std::string& name, const F& field) {
  if (name == "cone") return fx_cone(field);
  if (name == "bl2p4") return fx_bl2p4(field);
  if (name == "bl2p4-budget") return fx_bl2p4(field, 1);
  if (name == "bl2p4-flip") return fx_bl2p4_flip(field);
  if (name == "blpp4-deg5") return fx_blpp4_deg5(field);
  if (name == "blpp4-deg5-degenerate") return fx_blpp4_degenerate(field);
  if (name == "cor61-k1") return fx_cor61(field, 1);
  if (name == "cor61-k3") return fx_cor61(field, 3);
  if (name == "cor62-k1") return fx_cor62(field, 1);
  if (name == "cor62-k2") return fx_cor62(field, 2);
  if (name == "p1p3-scrolls") return fx_p1p3(field);
  fail("invalid-params", "unknown fixture '" + name + "'");
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"cone",       "bl2p4",      "bl2p4-budget", "bl2p4-flip",
          "blpp4-deg5", "blpp4-deg5-degenerate",      "cor61-k1",
          "cor61-k3",   "cor62-k1",   "cor62-k2",     "p1p3-scrolls"};
}

FixtureResult run_fixture(const std::string& name, const FieldSpec& field) {
  if (field.is_q()) return dispatch(name, QField{});
  return dispatch(name, FpField{field.p});
}

}  // namespace cox
