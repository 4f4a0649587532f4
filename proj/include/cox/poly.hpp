#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cox/field.hpp"
#include "cox/monomial.hpp"
#include "cox/ring.hpp"

namespace cox {

template <class F>
struct Term {
  Monomial m;
  typename F::Elem c;
};

// Sparse polynomial: terms kept strictly descending under ord(), no zero
// coefficients. All operations are pure; values are safe to share across
// threads.
template <class F>
class Poly {
public:
  using Elem = typename F::Elem;

  Poly() = default;
  Poly(RingPtr<F> ring, MonomialOrder ord)
      : ring_(std::move(ring)), ord_(std::move(ord)) {}

  static Poly zero(RingPtr<F> ring, MonomialOrder ord = MonomialOrder::grevlex()) {
    return Poly(std::move(ring), std::move(ord));
  }
  static Poly constant(RingPtr<F> ring, Elem c,
                       MonomialOrder ord = MonomialOrder::grevlex()) {
    Poly p(ring, std::move(ord));
    if (!ring->field().is_zero(c))
      p.terms_.push_back({Monomial::one(ring->arity()), std::move(c)});
    return p;
  }
  static Poly monomial(RingPtr<F> ring, Monomial m, Elem c,
                       MonomialOrder ord = MonomialOrder::grevlex()) {
    Poly p(ring, std::move(ord));
    if (!ring->field().is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }
  static Poly variable(RingPtr<F> ring, size_t i,
                       MonomialOrder ord = MonomialOrder::grevlex()) {
    return monomial(ring, Monomial::var(ring->arity(), i), ring->field().one(),
                    std::move(ord));
  }

  const RingPtr<F>& ring() const { return ring_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Term<F>>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
  }

  const Term<F>& leading_term() const {
    if (terms_.empty()) fail("zero-polynomial", "leading term of 0");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().m; }
  const Elem& leading_coeff() const { return leading_term().c; }
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.m.deg());
    return d;
  }

  Poly resorted(const MonomialOrder& ord) const {
    if (ord == ord_) return *this;
    Poly r(ring_, ord);
    r.terms_ = terms_;
    std::sort(r.terms_.begin(), r.terms_.end(),
              [&ord](const Term<F>& a, const Term<F>& b) { return ord.greater(a.m, b.m); });
    return r;
  }

  Poly operator-() const {
    Poly r(*this);
    const F& k = ring_->field();
    for (auto& t : r.terms_) t.c = k.neg(t.c);
    return r;
  }

  Poly operator+(const Poly& o) const { return merged(o, false); }
  Poly operator-(const Poly& o) const { return merged(o, true); }

  Poly scaled(const Elem& c) const {
    const F& k = ring_->field();
    if (k.is_zero(c)) return zero(ring_, ord_);
    Poly r(*this);
    for (auto& t : r.terms_) t.c = k.mul(t.c, c);
    return r;
  }

  // c * m * this; keeps sorted order (multiplication by a fixed monomial is
  // order-preserving for every supported order).
  Poly scaled_term(const Monomial& m, const Elem& c) const {
    const F& k = ring_->field();
    if (k.is_zero(c)) return zero(ring_, ord_);
    Poly r(*this);
    for (auto& t : r.terms_) {
      t.m = t.m * m;
      t.c = k.mul(t.c, c);
    }
    return r;
  }

  Poly operator*(const Poly& o) const { return multiply(*this, o); }

  Poly pow(int n) const {
    if (n < 0) fail("invalid-params", "negative power");
    Poly r = constant(ring_, ring_->field().one(), ord_);
    Poly b = *this;
    while (n > 0) {
      if (n & 1) r = r * b;
      b = (n >>= 1) ? b * b : b;
    }
    return r;
  }

  bool operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].m != o.terms_[i].m || !(terms_[i].c == o.terms_[i].c)) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Re-embed into a ring with at least the same variables; var_map[i] gives
  // the index of our variable i in the new ring.
  Poly embedded(const RingPtr<F>& bigger, const std::vector<int>& var_map) const {
    Poly r(bigger, ord_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(bigger->arity());
      for (size_t i = 0; i < t.m.e.size(); ++i) m.e[var_map[i]] = t.m.e[i];
      r.terms_.push_back({std::move(m), t.c});
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [this](const Term<F>& a, const Term<F>& b) { return ord_.greater(a.m, b.m); });
    return r;
  }

  bool uses_var(size_t i) const {
    for (const auto& t : terms_)
      if (t.m.e[i] > 0) return true;
    return false;
  }

  // Canonical text form: terms descending, unit coefficients and exponents
  // elided, fractions as a/b. parse_polynomial(str()) round-trips exactly.
  std::string str() const {
    if (terms_.empty()) return "0";
    const F& k = ring_->field();
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      bool negative = k.print_negative(t.c);
      if (first) {
        if (negative) out += "-";
        first = false;
      } else {
        out += negative ? " - " : " + ";
      }
      std::string mag = k.to_string_abs(t.c);
      if (t.m.is_one()) {
        out += mag;
        continue;
      }
      bool unit = (mag == "1");
      if (!unit) out += mag;
      bool need_star = !unit;
      for (size_t i = 0; i < t.m.e.size(); ++i) {
        if (t.m.e[i] == 0) continue;
        if (need_star) out += "*";
        out += ring_->var_name(i);
        if (t.m.e[i] != 1) out += "^" + std::to_string(t.m.e[i]);
        need_star = true;
      }
    }
    return out;
  }

  // --- construction from unsorted term lists -------------------------------
  static Poly from_terms(RingPtr<F> ring, MonomialOrder ord, std::vector<Term<F>> ts) {
    Poly p(std::move(ring), std::move(ord));
    std::sort(ts.begin(), ts.end(), [&p](const Term<F>& a, const Term<F>& b) {
      return p.ord_.greater(a.m, b.m);
    });
    const F& k = p.ring_->field();
    for (auto& t : ts) {
      if (!p.terms_.empty() && p.terms_.back().m == t.m) {
        p.terms_.back().c = k.add(p.terms_.back().c, t.c);
        if (k.is_zero(p.terms_.back().c)) p.terms_.pop_back();
      } else if (!k.is_zero(t.c)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  // --- multiplication kernels ----------------------------------------------

  // Serial reference: accumulate into an ordered map.
  static Poly multiply_serial(const Poly& f, const Poly& g) {
    check_inputs(f, g);
    const F& k = f.ring_->field();
    auto cmp = [&f](const Monomial& a, const Monomial& b) {
      return f.ord_.greater(a, b);
    };
    std::map<Monomial, Elem, decltype(cmp)> acc(cmp);
    for (const auto& tf : f.terms_)
      for (const auto& tg : g.terms_) {
        Monomial m = tf.m * tg.m;
        Elem c = k.mul(tf.c, tg.c);
        auto it = acc.find(m);
        if (it == acc.end()) {
          acc.emplace(std::move(m), std::move(c));
        } else {
          it->second = k.add(it->second, c);
          if (k.is_zero(it->second)) acc.erase(it);
        }
      }
    Poly r(f.ring_, f.ord_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) r.terms_.push_back({m, c});
    return r;
  }

  // OpenMP kernel: split f across threads, merge partial products. Exact
  // arithmetic makes the reduction order irrelevant, so results are
  // bit-identical to the serial kernel.
  static Poly multiply_parallel(const Poly& f, const Poly& g) {
#ifndef _OPENMP
    return multiply_serial(f, g);
#else
    check_inputs(f, g);
    if (f.terms_.empty() || g.terms_.empty()) return zero(f.ring_, f.ord_);
    int nthreads = omp_get_max_threads();
    size_t chunks = std::min<size_t>(nthreads, f.terms_.size());
    std::vector<Poly> partial(chunks, zero(f.ring_, f.ord_));
#pragma omp parallel for schedule(static)
    for (size_t c = 0; c < chunks; ++c) {
      size_t lo = f.terms_.size() * c / chunks;
      size_t hi = f.terms_.size() * (c + 1) / chunks;
      Poly fc(f.ring_, f.ord_);
      fc.terms_.assign(f.terms_.begin() + lo, f.terms_.begin() + hi);
      partial[c] = multiply_serial(fc, g);
    }
    Poly r = zero(f.ring_, f.ord_);
    for (const auto& p : partial) r = r + p;
    return r;
#endif
  }

  static Poly multiply(const Poly& f, const Poly& g) {
    // parallel pays only for genuinely large products
    if (f.size() * g.size() >= 16384 && f.size() >= 32)
      return multiply_parallel(f, g);
    return multiply_serial(f, g);
  }

private:
  static void check_inputs(const Poly& f, const Poly& g) {
    check_same_ring(f.ring_, g.ring_);
    if (f.ord_ != g.ord_) fail("order-mismatch", "operands sorted under different orders");
  }

  Poly merged(const Poly& o, bool subtract) const {
    check_same_ring(ring_, o.ring_);
    const Poly& rhs = (ord_ == o.ord_) ? o : o.resorted(ord_);
    const F& k = ring_->field();
    Poly r(ring_, ord_);
    r.terms_.reserve(terms_.size() + rhs.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
      int c = ord_.compare(terms_[i].m, rhs.terms_[j].m);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& t = rhs.terms_[j++];
        r.terms_.push_back({t.m, subtract ? k.neg(t.c) : t.c});
      } else {
        Elem v = subtract ? k.sub(terms_[i].c, rhs.terms_[j].c)
                          : k.add(terms_[i].c, rhs.terms_[j].c);
        if (!k.is_zero(v)) r.terms_.push_back({terms_[i].m, std::move(v)});
        ++i; ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < rhs.terms_.size(); ++j) {
      const auto& t = rhs.terms_[j];
      r.terms_.push_back({t.m, subtract ? k.neg(t.c) : t.c});
    }
    return r;
  }

  RingPtr<F> ring_;
  MonomialOrder ord_ = MonomialOrder::grevlex();
  std::vector<Term<F>> terms_;
};

}  // namespace cox
