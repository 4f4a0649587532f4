#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "cox/grading.hpp"
#include "cox/poly.hpp"

namespace cox {

// Full division: remainder has no term divisible by any leading monomial
// of G. f - normal_form(f, G) lies in <G>.
template <class F>
Poly<F> normal_form(const Poly<F>& f, const std::vector<Poly<F>>& G,
                    const MonomialOrder& ord) {
  const F& k = f.ring()->field();
  Poly<F> p = f.resorted(ord);
  Poly<F> r = Poly<F>::zero(f.ring(), ord);
  while (!p.is_zero()) {
    const Term<F>& lt = p.leading_term();
    bool reduced = false;
    for (const auto& g : G) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(lt.m)) {
        Monomial q = lt.m.div(g.leading_monomial());
        typename F::Elem c = k.div(lt.c, g.leading_coeff());
        p = p - g.resorted(ord).scaled_term(q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      r = r + Poly<F>::monomial(f.ring(), lt.m, lt.c, ord);
      p = p - Poly<F>::monomial(f.ring(), lt.m, lt.c, ord);
    }
  }
  return r;
}

template <class F>
Poly<F> spoly(const Poly<F>& f, const Poly<F>& g, const MonomialOrder& ord) {
  const F& k = f.ring()->field();
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Poly<F> a = f.scaled_term(l.div(f.leading_monomial()), k.inv(f.leading_coeff()));
  Poly<F> b = g.scaled_term(l.div(g.leading_monomial()), k.inv(g.leading_coeff()));
  return a - b;
}

namespace detail {

template <class F>
struct GbPair {
  size_t i, j;
  Monomial lcm;
  int deg;
};

// Buchberger with the Gebauer-Moeller pair update (product + chain
// criteria) and degree-graded normal selection.
template <class F>
std::vector<Poly<F>> buchberger_raw(std::vector<Poly<F>> gens, const RingPtr<F>& ring,
                                    const MonomialOrder& ord) {
  const F& k = ring->field();
  std::vector<Poly<F>> G;
  std::vector<GbPair<F>> pairs;

  auto update = [&](const Poly<F>& h) {
    size_t t = G.size();
    const Monomial& lh = h.leading_monomial();
    // new pairs, pruned per Gebauer-Moeller
    std::vector<GbPair<F>> cand;
    for (size_t i = 0; i < t; ++i)
      cand.push_back({i, t, G[i].leading_monomial().lcm(lh), 0});
    std::vector<bool> keep(cand.size(), false);
    std::vector<size_t> kept;
    for (size_t a = 0; a < cand.size(); ++a) {
      bool coprime = G[cand[a].i].leading_monomial().coprime(lh);
      bool dominated = false;
      if (!coprime) {
        for (size_t b = 0; b < cand.size() && !dominated; ++b) {
          if (b == a) continue;
          bool b_alive = (b > a) || keep[b];
          if (b_alive && cand[b].lcm.divides(cand[a].lcm) && cand[b].lcm != cand[a].lcm)
            dominated = true;
        }
        if (!dominated) {
          // criterion F: among equal lcms keep the first
          for (size_t b = 0; b < a && !dominated; ++b)
            if (keep[b] && cand[b].lcm == cand[a].lcm) dominated = true;
        }
      }
      keep[a] = !coprime && !dominated;
      if (keep[a]) kept.push_back(a);
    }
    // chain criterion on old pairs
    std::vector<GbPair<F>> survivors;
    for (auto& pr : pairs) {
      const Monomial& l12 = pr.lcm;
      if (!lh.divides(l12) ||
          G[pr.i].leading_monomial().lcm(lh) == l12 ||
          G[pr.j].leading_monomial().lcm(lh) == l12) {
        survivors.push_back(std::move(pr));
      }
    }
    pairs = std::move(survivors);
    for (size_t a : kept) {
      cand[a].deg = cand[a].lcm.deg();
      pairs.push_back(std::move(cand[a]));
    }
    G.push_back(h);
  };

  for (auto& g : gens) {
    if (g.is_zero()) continue;
    Poly<F> r = normal_form(g, G, ord);
    if (r.is_zero()) continue;
    update(r.scaled(k.inv(r.leading_coeff())));
  }

  while (!pairs.empty()) {
    // normal selection: min (deg lcm, lcm, i, j)
    size_t best = 0;
    for (size_t a = 1; a < pairs.size(); ++a) {
      const auto& x = pairs[a];
      const auto& y = pairs[best];
      int dx = x.lcm.deg(), dy = y.lcm.deg();
      bool better;
      if (dx != dy) better = dx < dy;
      else {
        int c = ord.compare(x.lcm, y.lcm);
        if (c != 0) better = c < 0;
        else better = std::pair(x.i, x.j) < std::pair(y.i, y.j);
      }
      if (better) best = a;
    }
    GbPair<F> pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    Poly<F> s = spoly(G[pr.i], G[pr.j], ord);
    Poly<F> r = normal_form(s, G, ord);
    if (!r.is_zero()) update(r.scaled(k.inv(r.leading_coeff())));
  }
  return G;
}

}  // namespace detail

// Reduced Groebner basis: monic, no leading monomial divides another, every
// tail fully reduced. Sorted descending by leading monomial, so output is
// reproducible byte-for-byte.
template <class F>
std::vector<Poly<F>> buchberger(const std::vector<Poly<F>>& gens, const RingPtr<F>& ring,
                                const MonomialOrder& ord) {
  std::vector<Poly<F>> work;
  work.reserve(gens.size());
  for (const auto& g : gens)
    if (!g.is_zero()) work.push_back(g.resorted(ord));
  std::vector<Poly<F>> G = detail::buchberger_raw(std::move(work), ring, ord);
  if (G.empty()) return G;

  // minimalize: ascending leading monomials, drop anything reducible
  std::sort(G.begin(), G.end(), [&ord](const Poly<F>& a, const Poly<F>& b) {
    return ord.less(a.leading_monomial(), b.leading_monomial());
  });
  std::vector<Poly<F>> minimal;
  for (const auto& g : G) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (h.leading_monomial().divides(g.leading_monomial())) { redundant = true; break; }
    if (!redundant) minimal.push_back(g);
  }
  // tail-reduce in place
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly<F>> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly<F> lt = Poly<F>::monomial(ring, minimal[i].leading_monomial(),
                                   minimal[i].leading_coeff(), ord);
    minimal[i] = lt + normal_form(minimal[i] - lt, others, ord);
  }
  std::sort(minimal.begin(), minimal.end(), [&ord](const Poly<F>& a, const Poly<F>& b) {
    return ord.greater(a.leading_monomial(), b.leading_monomial());
  });
  return minimal;
}

// Generator list plus a cache of reduced bases per order. Value semantics;
// the cache rides along behind a mutex so shared copies stay cheap.
template <class F>
class Ideal {
public:
  Ideal() = default;
  Ideal(RingPtr<F> ring, std::vector<Poly<F>> gens)
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      check_same_ring(ring_, g.ring());
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Poly<F>>& gens() const { return gens_; }
  bool has_no_gens() const { return gens_.empty(); }

  const std::vector<Poly<F>>& groebner_basis(
      const MonomialOrder& ord = MonomialOrder::grevlex()) const {
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto it = cache_->gb.find(ord.key());
    if (it != cache_->gb.end()) return it->second;
    auto G = buchberger(gens_, ring_, ord);
    return cache_->gb.emplace(ord.key(), std::move(G)).first->second;
  }

  Poly<F> normal_form(const Poly<F>& f,
                      const MonomialOrder& ord = MonomialOrder::grevlex()) const {
    return cox::normal_form(f, groebner_basis(ord), ord);
  }

  bool contains(const Poly<F>& f) const { return normal_form(f).is_zero(); }

  bool is_unit() const {
    const auto& G = groebner_basis();
    return G.size() == 1 && G[0].is_constant() && !G[0].is_zero();
  }
  bool is_zero_ideal() const { return groebner_basis().empty(); }

  Ideal plus(const std::vector<Poly<F>>& extra) const {
    auto gens = gens_;
    for (const auto& g : extra) gens.push_back(g);
    return Ideal(ring_, std::move(gens));
  }

private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::vector<Poly<F>>> gb;
  };
  RingPtr<F> ring_;
  std::vector<Poly<F>> gens_;
  std::shared_ptr<Cache> cache_;
};

// --- certificates -----------------------------------------------------------

// Every S-polynomial of G reduces to zero. Pairs reduce independently, so
// this is a parallel batch.
template <class F>
bool spoly_criterion_holds(const std::vector<Poly<F>>& G, const MonomialOrder& ord) {
  if (G.size() < 2) return true;
  std::vector<std::pair<size_t, size_t>> idx;
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) idx.push_back({i, j});
  bool ok = true;
#pragma omp parallel for schedule(dynamic)
  for (size_t a = 0; a < idx.size(); ++a) {
    if (!ok) continue;
    auto [i, j] = idx[a];
    if (!normal_form(spoly(G[i], G[j], ord), G, ord).is_zero()) ok = false;
  }
  return ok;
}

// Two-way membership of generators.
template <class F>
bool ideal_equal(const Ideal<F>& I, const Ideal<F>& J) {
  for (const auto& g : I.gens())
    if (!J.contains(g)) return false;
  for (const auto& g : J.gens())
    if (!I.contains(g)) return false;
  return true;
}

// Reduce a batch of polynomials against a fixed basis in parallel.
template <class F>
std::vector<Poly<F>> normal_form_batch(const std::vector<Poly<F>>& fs,
                                       const std::vector<Poly<F>>& G,
                                       const MonomialOrder& ord) {
  std::vector<Poly<F>> out(fs.size());
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < fs.size(); ++i) out[i] = normal_form(fs[i], G, ord);
  return out;
}

}  // namespace cox
