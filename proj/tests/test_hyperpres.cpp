#include <doctest.h>

#include "cox/examples.hpp"
#include "cox/hyperpres.hpp"
#include "cox/parse.hpp"

using namespace cox;

TEST_CASE("multiplicity splits") {
  QField q;
  auto R = make_ring(q, {"x", "y", "a", "b"});
  // f = a*x - b*y along (x, y): d = 1, parts (a, b)
  auto f = parse_polynomial<QField>("a*x - b*y", R);
  auto sp = split_multiplicity(f, 0, 1);
  CHECK(sp.d == 1);
  REQUIRE(sp.parts.size() == 2);
  CHECK(sp.parts[0].str() == "a");
  CHECK(sp.parts[1].str() == "b");
  CHECK(sp.tb_clean);

  // x^2 y: multiplicity 3, single bucket
  auto g = parse_polynomial<QField>("x^2*y", R);
  auto sg = split_multiplicity(g, 0, 1);
  CHECK(sg.d == 3);
  CHECK(sg.parts[1].str() == "-1");
  CHECK(sg.parts[0].is_zero());
  CHECK(sg.parts[2].is_zero());
  CHECK(sg.parts[3].is_zero());

  // quadric bracket f3*x^2 - f4*x*y + f5*y^2 gives parts (f3, f4, f5)
  auto h = parse_polynomial<QField>("a^3*x^2 - a^2*b^2*x*y + b^5*y^2", R);
  auto sh = split_multiplicity(h, 0, 1);
  CHECK(sh.d == 2);
  CHECK(sh.parts[0].str() == "a^3");
  CHECK(sh.parts[1].str() == "a^2*b^2");
  CHECK(sh.parts[2].str() == "b^5");

  CHECK_THROWS_WITH_AS(split_multiplicity(parse_polynomial<QField>("x + a", R), 0, 1),
                       doctest::Contains("multiplicity-zero"), Error);
}

TEST_CASE("split handles terms deep in the pair ideal") {
  QField q;
  auto R = make_ring(q, {"x", "y", "z"});
  // mult along (x,y) is 1; the y^2 z term is forced into the last bucket
  auto f = parse_polynomial<QField>("x*z^2 + y^2*z", R);
  auto sp = split_multiplicity(f, 0, 1);
  CHECK(sp.d == 1);
  CHECK(sp.parts[0].str() == "z^2");   // free of y by construction
  CHECK(sp.parts[1].str() == "-y*z");  // residual Tb factor, flagged
  CHECK_FALSE(sp.tb_clean);
}

TEST_CASE("closed form on the one-point blow-up of P^4") {
  FpField k(32003);
  auto Z = blowup_p4_one_point(k);
  auto f = random_general_polynomial(Z, DegreeVector({5, -3}), 20250812);
  auto pres = theoremB_presentation(Z, f);
  CHECK(pres.d == 2);
  REQUIRE(pres.relations.size() == 3);
  CHECK(pres.pair_a == 4);
  CHECK(pres.pair_b == 5);
  // S-degrees match the printed trailing columns {(4,-5),(3,-4)}
  std::vector<DegreeVector> sdegs = {pres.grading.column(6), pres.grading.column(7)};
  std::sort(sdegs.begin(), sdegs.end(),
            [](const DegreeVector& a, const DegreeVector& b) { return a.v < b.v; });
  CHECK(sdegs[0] == DegreeVector({3, -4}));
  CHECK(sdegs[1] == DegreeVector({4, -5}));
  // consecutive S-degrees differ by deg Ta - deg Tb
  CHECK(pres.grading.column(7) - pres.grading.column(6) ==
        Z.grading.column(4) - Z.grading.column(5));
  CHECK(pres.certificate.pass);
  CHECK(pres.certificate.codim_markers >= 2);
  // relations are homogeneous under the extended grading
  for (const auto& r : pres.relations) CHECK(is_homogeneous(r, pres.grading));
  // f itself lies in the relation ideal
  std::vector<int> vm = {0, 1, 2, 3, 4, 5};
  CHECK(pres.ideal.contains(f.embedded(pres.ring, vm)));
}

TEST_CASE("closed form rejections") {
  FpField k(32003);
  auto Zbl2 = blowup_p4_two_points(k);
  auto f2 = random_general_polynomial(Zbl2, DegreeVector({3, -1, -1}), 5);
  CHECK_THROWS_WITH_AS(theoremB_presentation(Zbl2, f2),
                       doctest::Contains("non-unique-codim2-component"), Error);

  auto Z = blowup_p4_one_point(k);
  // rigged: every bracket divisible by T1, so V(T5,T6,f_i) has codim 3 < d+3
  auto g = random_general_polynomial(Z, DegreeVector({4, -3}), 7);
  Poly<FpField> t1 = Poly<FpField>::variable(Z.ring, 0);
  CHECK_THROWS_WITH_AS(theoremB_presentation(Z, t1 * g),
                       doctest::Contains("codimension-hypothesis-failed"), Error);

  // inhomogeneous input
  auto bad = parse_polynomial<FpField>("T5 + T6^2", Z.ring);
  CHECK_THROWS_WITH_AS(theoremB_presentation(Z, bad),
                       doctest::Contains("inhomogeneous-input"), Error);

  // dimension gate on a threefold without the override
  Rank2Params p3{3, 1, {1}};
  auto Z3 = rank2_smooth(k, p3);
  auto f3 = random_general_polynomial(Z3, DegreeVector({2, 2}), 7);
  CHECK_THROWS_WITH_AS(theoremB_presentation(Z3, f3), doctest::Contains("dimension-gate"),
                       Error);
  // non-ample degree on a rank-2 ambient
  Rank2Params p5{5, 1, {1}};
  auto Z5 = rank2_smooth(k, p5);
  auto f5 = random_general_polynomial(Z5, DegreeVector({2, 0}), 7);
  CHECK_THROWS_WITH_AS(theoremB_presentation(Z5, f5), doctest::Contains("not-ample"), Error);
}

TEST_CASE("corollary C classification") {
  // case 1: k = n-1, leading zero twists
  Rank2Params p1{5, 4, {0, 0, 1, 2}};
  auto c1 = corollaryC_case(p1, DegreeVector({2, 3}));
  CHECK(c1.kind == CorollaryCCase::Kind::Case1);
  CHECK(c1.d == 2);
  auto c1bad = corollaryC_case(p1, DegreeVector({3, 3}));
  CHECK(c1bad.kind == CorollaryCCase::Kind::NotApplicable);

  // case 2: k = 1
  Rank2Params p2{5, 1, {2}};
  auto c2 = corollaryC_case(p2, DegreeVector({7, 4}));
  CHECK(c2.kind == CorollaryCCase::Kind::Case2);
  CHECK(c2.d == 4);
  CHECK(corollaryC_case(p2, DegreeVector({7, 5})).kind ==
        CorollaryCCase::Kind::NotApplicable);

  // P^1 x P^n with a = n: effective cone not closed
  Rank2Params pp{4, 3, {0, 0, 0}};
  auto cp = corollaryC_case(pp, DegreeVector({4, 1}));
  CHECK(cp.kind == CorollaryCCase::Kind::NotApplicable);
  CHECK(cp.reason.find("not finitely generated") != std::string::npos);

  // middle k has no codim-2 component
  Rank2Params pm{5, 2, {0, 1}};
  CHECK(corollaryC_case(pm, DegreeVector({1, 1})).kind ==
        CorollaryCCase::Kind::NotApplicable);
}

TEST_CASE("anticanonical table rows") {
  FpField k(32003);
  // middle k: plain hypersurface ring
  auto mid = anticanonical_presentation(k, Rank2Params{5, 2, {0, 1}}, 3);
  CHECK(mid.row == AnticanonicalRow::HypersurfaceCI);
  CHECK(mid.presentation.relations.size() == 1);
  CHECK(mid.degree == DegreeVector({3, 3}));

  // k = n-1 with a trailing 1: one new generator of degree (-1, n)
  auto d1 = anticanonical_presentation(k, Rank2Params{4, 3, {0, 0, 1}}, 3);
  CHECK(d1.row == AnticanonicalRow::D1Table);
  CHECK(d1.degree == DegreeVector({1, 4}));
  CHECK(d1.presentation.grading.column(6) == DegreeVector({-1, 4}));

  // k = 1, a_1 = 2: degrees (n+a_1,-1), (n,-1) = (6,-1), (4,-1)
  auto d2 = anticanonical_presentation(k, Rank2Params{4, 1, {2}}, 3);
  CHECK(d2.row == AnticanonicalRow::D2Table);
  CHECK(d2.degree == DegreeVector({2, 2}));
  std::vector<DegreeVector> sdegs = {d2.presentation.grading.column(6),
                                     d2.presentation.grading.column(7)};
  std::sort(sdegs.begin(), sdegs.end(),
            [](const DegreeVector& a, const DegreeVector& b) { return a.v < b.v; });
  CHECK(sdegs[0] == DegreeVector({4, -1}));
  CHECK(sdegs[1] == DegreeVector({6, -1}));

  CHECK_THROWS_WITH_AS(anticanonical_presentation(k, Rank2Params{4, 3, {0, 0, 2}}, 3),
                       doctest::Contains("not-fano"), Error);
  CHECK_THROWS_WITH_AS(anticanonical_presentation(k, Rank2Params{4, 3, {0, 0, 0}}, 3),
                       doctest::Contains("unsupported-shape"), Error);
}

TEST_CASE("rank-2 surface table") {
  FpField k(32003);
  // k = 2, a = (0,1), deg [1,3]: one S of degree (-1, 3)
  auto s1 = rank2_surface_presentation(k, Rank2Params{3, 2, {0, 1}}, DegreeVector({1, 3}), 5);
  CHECK(s1.d == 1);
  CHECK(s1.grading.column(5) == DegreeVector({-1, 3}));
  CHECK(s1.certificate.pass);

  // k = 1, a_1 = 1, deg [2,2]: degrees (4,-1), (3,-1)
  auto s2 = rank2_surface_presentation(k, Rank2Params{3, 1, {1}}, DegreeVector({2, 2}), 5);
  CHECK(s2.d == 2);
  std::vector<DegreeVector> sdegs = {s2.grading.column(5), s2.grading.column(6)};
  std::sort(sdegs.begin(), sdegs.end(),
            [](const DegreeVector& a, const DegreeVector& b) { return a.v < b.v; });
  CHECK(sdegs[0] == DegreeVector({3, -1}));
  CHECK(sdegs[1] == DegreeVector({4, -1}));

  CHECK_THROWS_WITH_AS(
      rank2_surface_presentation(k, Rank2Params{3, 1, {0}}, DegreeVector({2, 2}), 5),
      doctest::Contains("a >= max{1,3-a_1} fails"), Error);
  CHECK_THROWS_WITH_AS(
      rank2_surface_presentation(k, Rank2Params{3, 2, {0, 1}}, DegreeVector({1, 2}), 5),
      doctest::Contains("b-3>=0 fails"), Error);
}

TEST_CASE("scroll types") {
  auto s = scroll_type(5, 7);  // 7 mod 4 = 3
  CHECK(s.zeros == 1);
  CHECK(s.ones == 3);
  auto t = scroll_type(4, 3);  // (n-1) | d
  CHECK(t.zeros == 3);
  CHECK(t.ones == 0);
  auto u = scroll_type(4, 1);
  CHECK(u.zeros == 2);
  CHECK(u.ones == 1);
  for (int n = 3; n <= 8; ++n)
    for (int d = 1; d <= 10; ++d) {
      auto a = scroll_type(n, d);
      auto b = scroll_type(n, d + (n - 1));
      CHECK(a.zeros == b.zeros);
      CHECK(a.ones == b.ones);
    }
  CHECK_THROWS_AS(scroll_type(2, 1), Error);
  CHECK_THROWS_AS(scroll_type(4, 0), Error);
}

TEST_CASE("dropping the last unprojection breaks the codim condition") {
  FpField k(32003);
  Rank2Params p{3, 1, {1}};
  auto Z = rank2_smooth(k, p);
  auto f = random_general_polynomial(Z, DegreeVector({2, 2}), 5);
  TheoremBOptions opts;
  opts.dim3_ok = true;
  auto pres = theoremB_presentation(Z, f, opts);  // d = 2
  REQUIRE(pres.d == 2);

  // rebuild the extension with only the first fraction S1
  PresentedRing<FpField> base(Z.ring, Ideal<FpField>(Z.ring, {f}), Z.grading,
                              {Poly<FpField>::variable(Z.ring, 3),
                               Poly<FpField>::variable(Z.ring, 4)});
  RingPtr<FpField> ext1 = extend_ring(Z.ring, {"S1"});
  std::vector<int> vm = {0, 1, 2, 3, 4};
  Poly<FpField> Tb = Poly<FpField>::variable(ext1, 4);
  Poly<FpField> S1 = Poly<FpField>::variable(ext1, 5);
  Poly<FpField> rel0 = pres.parts[0].embedded(ext1, vm) + Tb * S1;
  PresentedRing<FpField> truncated;
  truncated.ring = ext1;
  truncated.ideal = Ideal<FpField>(ext1, {f.embedded(ext1, vm), rel0});
  truncated.grading = Z.grading.with_column(pres.grading.column(5));
  truncated.markers = {Poly<FpField>::variable(ext1, 3), Poly<FpField>::variable(ext1, 4)};
  truncated.base_arity = 5;
  truncated.history.push_back({"S1", -pres.parts[0], 1, 1, pres.grading.column(5)});

  Certificate cert = cr2_certificate(base, truncated);
  CHECK_FALSE(cert.pass);
  CHECK(cert.detail.find("codim") != std::string::npos);
}
