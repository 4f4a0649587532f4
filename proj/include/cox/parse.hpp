#pragma once

#include <cctype>
#include <string>

#include "cox/poly.hpp"

namespace cox {

namespace detail {

inline typename FpField::Elem elem_from_digits(const FpField& k, const std::string& s) {
  typename FpField::Elem acc = 0;
  for (char ch : s) acc = k.add(k.mul(acc, 10), static_cast<uint32_t>(ch - '0'));
  return acc;
}
inline typename QField::Elem elem_from_digits(const QField&, const std::string& s) {
  return mpq_class(mpz_class(s));
}

// Recursive-descent parser over the grammar
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := uint ['/' uint] | variable | '(' expr ')'
template <class F>
class PolyParser {
public:
  PolyParser(const std::string& src, RingPtr<F> ring, MonomialOrder ord)
      : src_(src), ring_(std::move(ring)), ord_(std::move(ord)) {}

  Poly<F> run() {
    Poly<F> p = expr();
    skip_ws();
    if (pos_ != src_.size()) err("unexpected trailing input");
    return p;
  }

private:
  [[noreturn]] void err(const std::string& what) {
    fail("syntax-error", what + " at byte " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }
  bool eat(char c) {
    if (peek(c)) { ++pos_; return true; }
    return false;
  }

  Poly<F> expr() {
    bool neg = eat('-');
    Poly<F> p = term();
    if (neg) p = -p;
    for (;;) {
      if (eat('+')) p = p + term();
      else if (eat('-')) p = p - term();
      else return p;
    }
  }

  Poly<F> term() {
    Poly<F> p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  Poly<F> factor() {
    Poly<F> p = atom();
    if (eat('^')) {
      size_t at = pos_;
      long n = uint_lit();
      if (n > 512) { pos_ = at; err("exponent too large"); }
      p = p.pow(static_cast<int>(n));
    }
    return p;
  }

  Poly<F> atom() {
    skip_ws();
    if (pos_ >= src_.size()) err("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Poly<F> p = expr();
      if (!eat(')')) err("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      const F& k = ring_->field();
      typename F::Elem v = elem_from_digits(k, num);
      if (eat('/')) {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
          err("expected denominator");
        std::string den = digits();
        typename F::Elem d = elem_from_digits(k, den);
        if (k.is_zero(d)) {
          if (k.characteristic() == 0) fail("coefficient-not-in-field", "zero denominator");
          fail("coefficient-not-in-field",
               "denominator " + den + " vanishes in " + k.name());
        }
        v = k.div(v, d);
      }
      return Poly<F>::constant(ring_, v, ord_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t at = pos_;
      std::string name = ident();
      int idx = ring_->var_index(name);
      if (idx < 0) {
        pos_ = at;
        fail("unknown-variable", name + " at byte " + std::to_string(at));
      }
      return Poly<F>::variable(ring_, static_cast<size_t>(idx), ord_);
    }
    err(std::string("unexpected character '") + c + "'");
  }

  std::string digits() {
    std::string s;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      s += src_[pos_++];
    return s;
  }
  long uint_lit() {
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      err("expected integer");
    return std::stol(digits());
  }
  std::string ident() {
    std::string s;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      s += src_[pos_++];
    return s;
  }

  const std::string& src_;
  size_t pos_ = 0;
  RingPtr<F> ring_;
  MonomialOrder ord_;
};

}  // namespace detail

template <class F>
Poly<F> parse_polynomial(const std::string& src, const RingPtr<F>& ring,
                         MonomialOrder ord = MonomialOrder::grevlex()) {
  return detail::PolyParser<F>(src, ring, std::move(ord)).run();
}

}  // namespace cox
