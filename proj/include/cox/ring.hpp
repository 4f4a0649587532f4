#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cox/error.hpp"

namespace cox {

// Immutable ring context: coefficient field + named variables. Shared by
// pointer; equality is structural so re-built contexts interoperate.
template <class F>
class Ring {
public:
  Ring(F field, std::vector<std::string> vars)
      : field_(std::move(field)), vars_(std::move(vars)) {
    if (vars_.empty()) fail("invalid-params", "ring needs at least one variable");
  }

  const F& field() const { return field_; }
  size_t arity() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var_name(size_t i) const { return vars_[i]; }

  int var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    return -1;
  }

  bool same(const Ring& o) const { return field_ == o.field_ && vars_ == o.vars_; }

private:
  F field_;
  std::vector<std::string> vars_;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> vars) {
  return std::make_shared<const Ring<F>>(std::move(field), std::move(vars));
}

template <class F>
void check_same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  if (a == b) return;
  if (!a || !b || !a->same(*b)) fail("ring-mismatch", "operands live in different rings");
}

// a plus extra trailing variables
template <class F>
RingPtr<F> extend_ring(const RingPtr<F>& r, const std::vector<std::string>& extra) {
  std::vector<std::string> vars = r->vars();
  for (const auto& v : extra) {
    if (r->var_index(v) >= 0) fail("invalid-params", "variable " + v + " already in ring");
    vars.push_back(v);
  }
  return make_ring(r->field(), std::move(vars));
}

}  // namespace cox
