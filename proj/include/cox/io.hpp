#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cox/hyperpres.hpp"

namespace cox {

struct FieldSpec {
  uint32_t p = 32003;  // 0 encodes Q
  bool is_q() const { return p == 0; }
  std::string str() const { return p ? "F" + std::to_string(p) : "Q"; }
  static FieldSpec parse(const std::string& s);
};

// Untyped document: ring header, sections, certificate metadata. The same
// grammar covers ambient files, presented-ring inputs and emitted reports.
struct InputDoc {
  FieldSpec field;
  std::vector<std::string> vars;
  std::optional<GradingMatrix> grading;
  std::vector<std::string> irrelevant;
  std::vector<std::string> relations;
  std::vector<std::string> markers;
  std::vector<std::pair<std::string, std::string>> meta;  // cert-* and friends
};

InputDoc parse_document(const std::string& text);
std::string render_var_list(const std::vector<std::string>& vars);
std::vector<std::string> parse_var_list(const std::string& body);
GradingMatrix parse_grading_text(const std::string& body);
std::string render_grading(const GradingMatrix& g);

template <class F>
struct TypedDoc {
  RingPtr<F> ring;
  std::optional<GradingMatrix> grading;
  std::vector<Poly<F>> irrelevant;
  std::vector<Poly<F>> relations;
  std::vector<Poly<F>> markers;
};

template <class F>
TypedDoc<F> typed_document(const InputDoc& doc, const F& field) {
  TypedDoc<F> out;
  out.ring = make_ring(field, doc.vars);
  out.grading = doc.grading;
  if (out.grading && out.grading->arity() != out.ring->arity())
    fail("syntax-error", "grading has " + std::to_string(out.grading->arity()) +
                             " columns for " + std::to_string(out.ring->arity()) +
                             " variables");
  for (const auto& s : doc.irrelevant) out.irrelevant.push_back(parse_polynomial(s, out.ring));
  for (const auto& s : doc.relations) out.relations.push_back(parse_polynomial(s, out.ring));
  for (const auto& s : doc.markers) out.markers.push_back(parse_polynomial(s, out.ring));
  return out;
}

template <class F>
ToricAmbient<F> ambient_from_doc(const TypedDoc<F>& doc) {
  if (!doc.grading) fail("syntax-error", "ambient file needs a grading section");
  std::vector<Monomial> irr;
  for (const auto& g : doc.irrelevant) {
    if (g.size() != 1 || !g.ring()->field().is_one(g.leading_coeff()))
      fail("syntax-error", "irrelevant generators must be monomials: " + g.str());
    irr.push_back(g.leading_monomial());
  }
  return ToricAmbient<F>(doc.ring, *doc.grading, std::move(irr));
}

// --- reports -----------------------------------------------------------------

inline std::string certificate_kind_str(const Certificate& c) {
  return c.kind == Certificate::Kind::Codim2Stop ? "codim2-stop" : "cr2";
}

// Deterministic self-describing report; re-parsing it reproduces the
// presentation (ring, grading, relations, markers) exactly.
template <class F>
std::string presentation_report(const PresentedRing<F>& R,
                                const std::vector<Poly<F>>& relations,
                                const Certificate& cert, const std::string& status) {
  std::string s;
  s += "ring " + R.ring->field().name() + "[" + render_var_list(R.ring->vars()) + "]\n";
  s += "grading " + render_grading(R.grading) + "\n";
  s += "relations ";
  for (size_t i = 0; i < relations.size(); ++i) {
    if (i) s += "; ";
    s += relations[i].str();
  }
  s += "\n";
  s += "markers ";
  for (size_t i = 0; i < R.markers.size(); ++i) {
    if (i) s += ", ";
    s += R.markers[i].str();
  }
  s += "\n";
  s += "status " + status + "\n";
  s += "certificate " + certificate_kind_str(cert) + " " + (cert.pass ? "pass" : "fail") + "\n";
  if (!cert.detail.empty()) s += "cert-detail " + cert.detail + "\n";
  s += "cert-dims base " + std::to_string(cert.dim_base) + " presentation " +
       std::to_string(cert.dim_presentation) + " with-markers " +
       std::to_string(cert.dim_with_markers) + " codim " +
       std::to_string(cert.codim_markers) + "\n";
  s += "cert-field " + cert.field + "\n";
  s += "cert-seed " + std::to_string(cert.seed) + "\n";
  s += "cert-rounds " + std::to_string(cert.rounds) + "\n";
  if (!cert.new_degrees.empty()) {
    s += "cert-degrees";
    for (const auto& d : cert.new_degrees) s += " " + d.str();
    s += "\n";
  }
  return s;
}

}  // namespace cox
