#pragma once

#include <string>
#include <vector>

#include "cox/poly.hpp"

namespace cox {

// Element of Z^k, the free divisor class group. Prints as [a,b,...]
// matching the paper's column convention.
struct DegreeVector {
  std::vector<long> v;

  DegreeVector() = default;
  explicit DegreeVector(std::vector<long> coords) : v(std::move(coords)) {}

  size_t rank() const { return v.size(); }

  DegreeVector operator+(const DegreeVector& o) const {
    check(o);
    DegreeVector r(*this);
    for (size_t i = 0; i < v.size(); ++i) r.v[i] += o.v[i];
    return r;
  }
  DegreeVector operator-(const DegreeVector& o) const {
    check(o);
    DegreeVector r(*this);
    for (size_t i = 0; i < v.size(); ++i) r.v[i] -= o.v[i];
    return r;
  }
  DegreeVector operator*(long s) const {
    DegreeVector r(*this);
    for (auto& x : r.v) x *= s;
    return r;
  }
  bool operator==(const DegreeVector& o) const { return v == o.v; }
  bool operator!=(const DegreeVector& o) const { return v != o.v; }
  bool operator<(const DegreeVector& o) const { return v < o.v; }  // lex, for sorting

  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + "]";
  }

private:
  void check(const DegreeVector& o) const {
    if (v.size() != o.v.size()) fail("rank-mismatch", "degree vectors of different rank");
  }
};

// k x r integer matrix; column j is the degree of variable j.
class GradingMatrix {
public:
  GradingMatrix() = default;
  GradingMatrix(std::vector<std::vector<long>> rows) : rows_(std::move(rows)) {
    if (rows_.empty() || rows_[0].empty())
      fail("invalid-params", "grading matrix needs k >= 1, r >= 1");
    for (const auto& r : rows_)
      if (r.size() != rows_[0].size())
        fail("invalid-params", "ragged grading matrix");
  }

  size_t rank() const { return rows_.size(); }
  size_t arity() const { return rows_.empty() ? 0 : rows_[0].size(); }
  const std::vector<std::vector<long>>& rows() const { return rows_; }

  DegreeVector column(size_t j) const {
    std::vector<long> c(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) c[i] = rows_[i][j];
    return DegreeVector(std::move(c));
  }

  DegreeVector degree_of_monomial(const Monomial& m) const {
    if (m.arity() != arity()) fail("rank-mismatch", "monomial arity != grading arity");
    std::vector<long> d(rows_.size(), 0);
    for (size_t i = 0; i < rows_.size(); ++i)
      for (size_t j = 0; j < m.e.size(); ++j) d[i] += rows_[i][j] * m.e[j];
    return DegreeVector(std::move(d));
  }

  GradingMatrix with_column(const DegreeVector& d) const {
    if (d.rank() != rank()) fail("rank-mismatch", "column rank != grading rank");
    auto rows = rows_;
    for (size_t i = 0; i < rows.size(); ++i) rows[i].push_back(d.v[i]);
    return GradingMatrix(std::move(rows));
  }

  // keep columns listed in `cols`, in that order
  GradingMatrix restricted(const std::vector<int>& cols) const {
    std::vector<std::vector<long>> rows(rank());
    for (size_t i = 0; i < rank(); ++i)
      for (int j : cols) rows[i].push_back(rows_[i][j]);
    return GradingMatrix(std::move(rows));
  }

  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (i) s += ",";
      s += "[";
      for (size_t j = 0; j < rows_[i].size(); ++j) {
        if (j) s += ",";
        s += std::to_string(rows_[i][j]);
      }
      s += "]";
    }
    return s + "]";
  }

  bool operator==(const GradingMatrix& o) const { return rows_ == o.rows_; }

private:
  std::vector<std::vector<long>> rows_;
};

// Common degree of all terms; reports two offending terms when f is not
// homogeneous.
template <class F>
DegreeVector degree_of(const Poly<F>& f, const GradingMatrix& g) {
  if (f.is_zero()) fail("zero-polynomial", "degree of 0");
  DegreeVector d = g.degree_of_monomial(f.terms().front().m);
  for (size_t i = 1; i < f.terms().size(); ++i) {
    DegreeVector di = g.degree_of_monomial(f.terms()[i].m);
    if (di != d) {
      Poly<F> a = Poly<F>::monomial(f.ring(), f.terms().front().m, f.ring()->field().one());
      Poly<F> b = Poly<F>::monomial(f.ring(), f.terms()[i].m, f.ring()->field().one());
      fail("inhomogeneous", "terms " + a.str() + " (" + d.str() + ") and " + b.str() +
                                " (" + di.str() + ") have different degrees");
    }
  }
  return d;
}

template <class F>
bool is_homogeneous(const Poly<F>& f, const GradingMatrix& g) {
  if (f.is_zero()) return true;
  DegreeVector d = g.degree_of_monomial(f.terms().front().m);
  for (size_t i = 1; i < f.terms().size(); ++i)
    if (g.degree_of_monomial(f.terms()[i].m) != d) return false;
  return true;
}

// Degree of the variable S adjoined with S*m^n = f.
inline DegreeVector adjoined_degree(const DegreeVector& deg_f, int n,
                                    const DegreeVector& deg_m) {
  if (n < 1) fail("invalid-params", "adjunction level must be >= 1");
  return deg_f - deg_m * n;
}

}  // namespace cox
