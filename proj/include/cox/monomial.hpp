#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "cox/error.hpp"

namespace cox {

// Exponent vector, length = ring arity. Total degree is recomputed on
// demand; instances at this scale (arity <= ~14) never made caching pay.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(size_t arity) : e(arity, 0) {}
  explicit Monomial(std::vector<int> ev) : e(std::move(ev)) {}

  size_t arity() const { return e.size(); }
  int deg() const { return std::accumulate(e.begin(), e.end(), 0); }
  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }

  static Monomial one(size_t arity) { return Monomial(arity); }
  static Monomial var(size_t arity, size_t i, int power = 1) {
    Monomial m(arity);
    m.e[i] = power;
    return m;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }
  bool divides(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  // this / o; caller guarantees divisibility.
  Monomial div(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = std::max(r.e[i], o.e[i]);
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0 && o.e[i] > 0) return false;
    return true;
  }
  bool squarefree() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x <= 1; });
  }
  std::vector<int> support() const {
    std::vector<int> s;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) s.push_back(static_cast<int>(i));
    return s;
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

// Monomial orders: grevlex, lex, block elimination (grevlex on the first
// block, then grevlex on the rest), and weight with grevlex tie-break.
class MonomialOrder {
public:
  enum class Kind { Grevlex, Lex, Block, Weight };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0, {}); }
  static MonomialOrder block(int first_block_size) {
    if (first_block_size < 1) fail("invalid-params", "block size must be >= 1");
    return MonomialOrder(Kind::Block, first_block_size, {});
  }
  static MonomialOrder weight(std::vector<long> w) {
    return MonomialOrder(Kind::Weight, 0, std::move(w));
  }

  Kind kind() const { return kind_; }
  int block_size() const { return block_; }
  const std::vector<long>& weights() const { return weight_; }

  // trichotomy: >0 iff a > b under this order.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Grevlex:
        return cmp_grevlex(a.e, b.e, 0, a.e.size());
      case Kind::Lex:
        for (size_t i = 0; i < a.e.size(); ++i)
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
      case Kind::Block: {
        size_t k = static_cast<size_t>(block_);
        if (k > a.e.size()) k = a.e.size();
        if (int c = cmp_grevlex(a.e, b.e, 0, k)) return c;
        return cmp_grevlex(a.e, b.e, k, a.e.size());
      }
      case Kind::Weight: {
        if (weight_.size() != a.e.size())
          fail("invalid-params", "weight vector length != arity");
        long wa = 0, wb = 0;
        for (size_t i = 0; i < a.e.size(); ++i) {
          wa += weight_[i] * a.e[i];
          wb += weight_[i] * b.e[i];
        }
        if (wa != wb) return wa > wb ? 1 : -1;
        return cmp_grevlex(a.e, b.e, 0, a.e.size());
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  // Canonical key for caches and equality.
  std::string key() const {
    switch (kind_) {
      case Kind::Grevlex: return "grevlex";
      case Kind::Lex: return "lex";
      case Kind::Block: return "block" + std::to_string(block_);
      case Kind::Weight: {
        std::string s = "weight";
        for (long w : weight_) s += "," + std::to_string(w);
        return s;
      }
    }
    return "";
  }
  bool operator==(const MonomialOrder& o) const { return key() == o.key(); }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

private:
  MonomialOrder(Kind k, int b, std::vector<long> w)
      : kind_(k), block_(b), weight_(std::move(w)) {}

  static int cmp_grevlex(const std::vector<int>& a, const std::vector<int>& b,
                         size_t lo, size_t hi) {
    int da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da > db ? 1 : -1;
    // equal degree: the last position where they differ decides,
    // with the smaller exponent winning
    for (size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  Kind kind_;
  int block_;
  std::vector<long> weight_;
};

}  // namespace cox
