#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cox/fixtures.hpp"

using namespace cox;

namespace {

int exit_for(const Error& e) {
  const std::string& k = e.kind();
  if (k == "round-budget-exhausted") return 2;
  static const char* hypothesis_class[] = {
      "non-unique-codim2-component", "codimension-hypothesis-failed", "dimension-gate",
      "not-ample", "not-fano", "unsupported-shape", "conditions-violated",
      "genericity-check-failed", "multiplicity-zero", "condition-failed",
      "certificate-failed", "fixture-assertion-failed", "level-cap-exhausted",
      "empty-linear-system"};
  for (const char* h : hypothesis_class)
    if (k == h) return 3;
  return 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    const char* dir = std::getenv("COX_FIXTURE_DIR");
    if (dir) {
      std::ifstream in2(std::string(dir) + "/" + path);
      if (in2) {
        std::stringstream ss;
        ss << in2.rdbuf();
        return ss.str();
      }
    }
    fail("syntax-error", "cannot open file " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DegreeVector parse_degree(std::string s) {
  std::string cleaned;
  for (char c : s)
    if (c != '[' && c != ']' && !std::isspace(static_cast<unsigned char>(c))) cleaned += c;
  std::vector<long> v;
  std::string cur;
  for (char c : cleaned + ",") {
    if (c == ',') {
      if (cur.empty()) fail("syntax-error", "bad degree '" + s + "'");
      v.push_back(std::stol(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (v.empty()) fail("syntax-error", "bad degree '" + s + "'");
  return DegreeVector(v);
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> v;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) v.push_back(std::stoi(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  return v;
}

struct CommonArgs {
  std::string field_str;
  uint64_t seed = 1;
  bool verbose = false;
};

FieldSpec field_of(const CommonArgs& a, const FieldSpec& doc_default) {
  if (a.field_str.empty()) return doc_default;
  return FieldSpec::parse(a.field_str);
}

template <class F>
int run_localize(const F& field, const InputDoc& doc, const std::string& pivot_str,
                 const std::string& markers_str, int max_rounds, const CommonArgs& common) {
  TypedDoc<F> td = typed_document(doc, field);
  if (!td.grading) fail("syntax-error", "localize input needs a grading section");
  std::vector<Poly<F>> markers = td.markers;
  if (!markers_str.empty()) {
    markers.clear();
    std::string cur;
    for (char c : markers_str + ",") {
      if (c == ',') {
        if (!cur.empty()) markers.push_back(parse_polynomial(cur, td.ring));
        cur.clear();
      } else {
        cur += c;
      }
    }
  }
  if (markers.size() == 1)
    fail("single-marker",
         "a single marker m gives R_m itself; Algorithm 1 needs s >= 2");
  PresentedRing<F> R(td.ring, Ideal<F>(td.ring, td.relations), *td.grading, markers);
  int pivot = 0;
  if (!pivot_str.empty()) {
    Poly<F> p = parse_polynomial(pivot_str, td.ring);
    pivot = -1;
    for (size_t i = 0; i < markers.size(); ++i)
      if (markers[i] == p) pivot = static_cast<int>(i);
    if (pivot < 0) fail("invalid-params", "pivot is not one of the markers");
  }
  LocalizeOptions opts;
  opts.max_rounds = max_rounds;
  opts.seed = common.seed;
  if (common.verbose)
    opts.log = [](const std::string& s) { std::cerr << s << "\n"; };
  auto t0 = std::chrono::steady_clock::now();
  auto res = intersect_localizations(R, pivot, opts);
  auto t1 = std::chrono::steady_clock::now();
  if (common.verbose)
    std::cerr << "localize: "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << " ms\n";
  bool certified = res.status == LocalizeResult<F>::Status::Certified;
  std::vector<Poly<F>> rels =
      certified ? minimal_homogeneous_generators(res.ring.ideal, res.ring.grading)
                : res.ring.ideal.gens();
  std::cout << presentation_report(res.ring, rels, res.certificate,
                                   certified ? "certified" : "budget-exhausted");
  return certified ? 0 : 2;
}

template <class F>
int run_verify(const F& field, const InputDoc& doc, const std::string& markers_str,
               const std::string& adjoined_str) {
  TypedDoc<F> td = typed_document(doc, field);
  std::vector<Poly<F>> markers = td.markers;
  if (!markers_str.empty()) {
    markers.clear();
    std::string cur;
    for (char c : markers_str + ",") {
      if (c == ',') {
        if (!cur.empty()) markers.push_back(parse_polynomial(cur, td.ring));
        cur.clear();
      } else {
        cur += c;
      }
    }
  }
  if (markers.empty()) fail("invalid-params", "verify needs markers");
  std::vector<int> adjoined;
  if (!adjoined_str.empty()) {
    std::string cur;
    for (char c : adjoined_str + ",") {
      if (c == ',') {
        if (!cur.empty()) {
          int idx = td.ring->var_index(cur);
          if (idx < 0) fail("invalid-params", "unknown adjoined variable " + cur);
          adjoined.push_back(idx);
        }
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
  } else {
    for (size_t i = 0; i < td.ring->arity(); ++i) {
      const std::string& name = td.ring->var_name(i);
      if (name.size() >= 2 && name[0] == 'S' &&
          std::isdigit(static_cast<unsigned char>(name[1])))
        adjoined.push_back(static_cast<int>(i));
    }
  }
  Ideal<F> P(td.ring, td.relations);
  int dimP = dim_of(P);
  int dim_base;
  if (adjoined.empty()) {
    dim_base = dimP;
  } else {
    Ideal<F> elim = eliminate_vars(P, adjoined);
    std::vector<int> keep;
    for (size_t i = 0; i < td.ring->arity(); ++i)
      if (std::find(adjoined.begin(), adjoined.end(), static_cast<int>(i)) ==
          adjoined.end())
        keep.push_back(static_cast<int>(i));
    dim_base = dim_of(restrict_ideal(elim, keep));
  }
  Ideal<F> with = P.plus(markers);
  int dimM = dim_of(with);
  int codim = dimM < 0 ? static_cast<int>(td.ring->arity()) + 1 : dimP - dimM;
  std::cout << "dim-presentation " << dimP << "\n";
  std::cout << "dim-base " << dim_base << "\n";
  std::cout << "dim-with-markers " << dimM << "\n";
  std::cout << "codim-markers " << codim << "\n";
  std::cout << "adjunctions " << adjoined.size() << "\n";
  if (dimP != dim_base) {
    std::cout << "verify FAIL condition-failed: dimension (" << dimP << " != " << dim_base
              << ")\n";
    fail("condition-failed", "dimension condition");
  }
  if (codim < 2) {
    std::cout << "verify FAIL condition-failed: codim (" << codim << " < 2)\n";
    fail("condition-failed", "codim condition");
  }
  std::cout << "verify pass\n";
  return 0;
}

template <class F>
int run_hypersurface(const F& field, const InputDoc& doc, const std::string& degree_str,
                     const std::string& equation, bool dim3_ok, const CommonArgs& common) {
  TypedDoc<F> td = typed_document(doc, field);
  ToricAmbient<F> Z = ambient_from_doc(td);
  Poly<F> f = equation.empty()
                  ? random_general_polynomial(Z, parse_degree(degree_str), common.seed)
                  : parse_polynomial(equation, td.ring);
  TheoremBOptions opts;
  opts.dim3_ok = dim3_ok;
  auto pres = theoremB_presentation(Z, f, opts);
  pres.certificate.seed = common.seed;
  std::cout << "hypersurface " << f.str() << "\n";
  std::cout << presentation_report(pres.presented, pres.relations, pres.certificate,
                                   "certified");
  return 0;
}

template <class F>
int run_sample(const F& field, const InputDoc& doc, const std::string& degree_str,
               bool emit_input, const CommonArgs& common) {
  TypedDoc<F> td = typed_document(doc, field);
  ToricAmbient<F> Z = ambient_from_doc(td);
  Poly<F> f = random_general_polynomial(Z, parse_degree(degree_str), common.seed);
  if (!emit_input) {
    std::cout << f.str() << "\n";
    return 0;
  }
  std::cout << "ring " << field.name() << "[" << render_var_list(td.ring->vars()) << "]\n";
  std::cout << "grading " << Z.grading.str() << "\n";
  std::cout << "irrelevant ";
  for (size_t i = 0; i < Z.irrelevant.size(); ++i) {
    if (i) std::cout << ", ";
    std::cout << Poly<F>::monomial(Z.ring, Z.irrelevant[i], field.one()).str();
  }
  std::cout << "\nrelations " << f.str() << "\n";
  auto markers = hypersurface_markers(Z, f);
  std::cout << "markers ";
  for (size_t i = 0; i < markers.size(); ++i) {
    if (i) std::cout << ", ";
    std::cout << markers[i].str();
  }
  std::cout << "\n";
  return 0;
}

template <class F>
int run_anticanonical(const F& field, const std::vector<int>& params,
                      const CommonArgs& common) {
  if (params.size() < 3) fail("invalid-params", "--params n,k,a1,...,ak");
  Rank2Params p;
  p.n = params[0];
  p.k = params[1];
  p.a.assign(params.begin() + 2, params.end());
  auto res = anticanonical_presentation(field, p, common.seed);
  const char* row = res.row == AnticanonicalRow::HypersurfaceCI ? "hypersurface-CI"
                    : res.row == AnticanonicalRow::D1Table      ? "d1-table"
                                                                : "d2-table";
  std::cout << "row " << row << "\n";
  std::cout << "anticanonical-degree " << res.degree.str() << "\n";
  if (res.row == AnticanonicalRow::HypersurfaceCI) {
    std::cout << "ring " << field.name() << "["
              << render_var_list(res.presentation.ring->vars()) << "]\n";
    std::cout << "grading " << res.presentation.grading.str() << "\n";
    std::cout << "relations " << res.presentation.relations[0].str() << "\n";
    std::cout << "status certified\ncertificate cr2 pass\n";
    std::cout << "cert-detail " << res.presentation.certificate.detail << "\n";
    return 0;
  }
  std::cout << presentation_report(res.presentation.presented, res.presentation.relations,
                                   res.presentation.certificate, "certified");
  return 0;
}

template <class F>
int run_surface(const F& field, const std::vector<int>& params,
                const std::string& degree_str, const CommonArgs& common) {
  if (params.size() < 2) fail("invalid-params", "--params k,a1[,a2]");
  Rank2Params p;
  p.n = 3;
  p.k = params[0];
  p.a.assign(params.begin() + 1, params.end());
  auto pres = rank2_surface_presentation(field, p, parse_degree(degree_str), common.seed);
  std::cout << presentation_report(pres.presented, pres.relations, pres.certificate,
                                   "certified");
  return 0;
}

template <class T>
int dispatch_field(const FieldSpec& spec, T&& fn) {
  if (spec.is_q()) return fn(QField{});
  return fn(FpField{spec.p});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cox - Cox rings of embedded varieties via localization"};
  app.require_subcommand(1);
  CommonArgs common;

  std::string file, pivot, markers, degree, equation, adjoined, fixture_name, params_str;
  int max_rounds = 16;
  bool dim3_ok = false, emit_input = false, list_fixtures = false;
  int scroll_n = 0, scroll_d = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", common.field_str, "coefficient field: Q or F<p> (default from file / F32003)");
    sub->add_option("--seed", common.seed, "seed for general coefficients");
    sub->add_flag("-v,--verbose", common.verbose, "log per-round sizes and timings to stderr");
  };

  CLI::App* loc = app.add_subcommand("localize", "intersection of localizations (Algorithm 1)");
  loc->add_option("file", file, "presented-ring input file")->required();
  loc->add_option("--markers", markers, "comma-separated markers (overrides file)");
  loc->add_option("--pivot", pivot, "pivot marker (default: first)");
  loc->add_option("--max-rounds", max_rounds, "round budget (default 16)");
  add_common(loc);

  CLI::App* ver = app.add_subcommand("verify", "re-check the certificate conditions of a presentation");
  ver->add_option("file", file, "presentation file")->required();
  ver->add_option("--markers", markers, "comma-separated markers (overrides file)");
  ver->add_option("--adjoined", adjoined, "adjoined variables (default: S<number> names)");
  add_common(ver);

  CLI::App* hyp = app.add_subcommand("hypersurface", "closed-form Cox presentation of a general hypersurface");
  hyp->add_option("file", file, "ambient file")->required();
  hyp->add_option("--degree", degree, "hypersurface degree [a,b,...]");
  hyp->add_option("--equation", equation, "explicit equation (instead of --degree/--seed)");
  hyp->add_flag("--dim3-ok", dim3_ok, "allow ambient dimension 3");
  add_common(hyp);

  CLI::App* smp = app.add_subcommand("sample", "seeded general polynomial of a given degree");
  smp->add_option("file", file, "ambient file")->required();
  smp->add_option("--degree", degree, "degree [a,b,...]")->required();
  smp->add_flag("--emit-input", emit_input, "print a complete localize input document");
  add_common(smp);

  CLI::App* scr = app.add_subcommand("scroll", "scroll type of a degree-[d,1] hypersurface of P^1 x P^{n-1}");
  scr->add_option("--n", scroll_n, "n >= 3")->required();
  scr->add_option("--d", scroll_d, "d >= 1")->required();

  CLI::App* ant = app.add_subcommand("anticanonical", "Cox ring of a general anticanonical hypersurface (rank 2)");
  ant->add_option("--params", params_str, "n,k,a1,...,ak")->required();
  add_common(ant);

  CLI::App* sur = app.add_subcommand("surface", "very general ample surface in a rank-2 toric threefold");
  sur->add_option("--params", params_str, "k,a1[,a2]")->required();
  sur->add_option("--degree", degree, "surface degree [a,b]")->required();
  add_common(sur);

  CLI::App* fix = app.add_subcommand("fixtures", "run a named paper example with its pinned seed");
  fix->add_option("name", fixture_name, "fixture name");
  fix->add_flag("--list", list_fixtures, "list fixture names");
  fix->add_flag("--emit-input", emit_input, "print the fixture's input document instead");
  add_common(fix);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int c = app.exit(e);
    return c == 0 ? 0 : 1;
  }

  try {
    if (loc->parsed()) {
      InputDoc doc = parse_document(read_file(file));
      return dispatch_field(field_of(common, doc.field), [&](const auto& k) {
        return run_localize(k, doc, pivot, markers, max_rounds, common);
      });
    }
    if (ver->parsed()) {
      InputDoc doc = parse_document(read_file(file));
      return dispatch_field(field_of(common, doc.field), [&](const auto& k) {
        return run_verify(k, doc, markers, adjoined);
      });
    }
    if (hyp->parsed()) {
      InputDoc doc = parse_document(read_file(file));
      if (degree.empty() && equation.empty())
        fail("invalid-params", "hypersurface needs --degree or --equation");
      return dispatch_field(field_of(common, doc.field), [&](const auto& k) {
        return run_hypersurface(k, doc, degree, equation, dim3_ok, common);
      });
    }
    if (smp->parsed()) {
      InputDoc doc = parse_document(read_file(file));
      return dispatch_field(field_of(common, doc.field), [&](const auto& k) {
        return run_sample(k, doc, degree, emit_input, common);
      });
    }
    if (scr->parsed()) {
      ScrollType st = scroll_type(scroll_n, scroll_d);
      std::cout << "scroll S(";
      for (int i = 0; i < st.zeros; ++i) std::cout << (i ? ",0" : "0");
      for (int i = 0; i < st.ones; ++i) std::cout << ((st.zeros + i) ? ",1" : "1");
      std::cout << ")\n";
      if (st.ones == 0)
        std::cout << "product P^1 x P^" << scroll_n - 2 << "\n";
      return 0;
    }
    if (ant->parsed()) {
      return dispatch_field(field_of(common, FieldSpec{}), [&](const auto& k) {
        return run_anticanonical(k, parse_int_list(params_str), common);
      });
    }
    if (sur->parsed()) {
      return dispatch_field(field_of(common, FieldSpec{}), [&](const auto& k) {
        return run_surface(k, parse_int_list(params_str), degree, common);
      });
    }
    if (fix->parsed()) {
      if (list_fixtures) {
        for (const auto& n : fixture_names()) std::cout << n << "\n";
        return 0;
      }
      if (fixture_name.empty()) fail("invalid-params", "fixtures needs a name or --list");
      FieldSpec fs = field_of(common, FieldSpec{});
      FixtureResult res = run_fixture(fixture_name, fs);
      if (emit_input) {
        std::cout << res.input_doc;
        return 0;
      }
      std::cout << res.report;
      std::cerr << res.log;
      if (!res.ok) fail("fixture-assertion-failed", fixture_name);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error internal: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
