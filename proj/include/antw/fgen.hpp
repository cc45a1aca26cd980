// Generators for valid A_m-functors: transport along a unit-preserving chain
// isomorphism, and the exponential exp([b,r]) of an inner coderivation.
// Both are verified constructions: [b,r] commutes with the codifferential,
// so its exponential is a cofunctor commuting with b; r_0 = r_1 = 0 makes
// every application strictly shorten words, so the exponential is finite and
// the first Taylor component is the identity.
#pragma once

#include "antw/fcat.hpp"
#include "antw/gen.hpp"

namespace antw {

// word-sums over labels: used to iterate coderivation applications
template <class F>
using WordSum = std::map<std::vector<int>, typename F::elem>;

template <class F>
void wordsum_add(const F& k, WordSum<F>& acc, const std::vector<Mor<F>>& blocks, const typename F::elem& coeff) {
  std::vector<int> word(blocks.size());
  std::function<void(size_t, typename F::elem)> rec = [&](size_t j, typename F::elem c) {
    if (k.is_zero(c)) return;
    if (j == blocks.size()) {
      auto it = acc.find(word);
      if (it == acc.end()) {
        acc[word] = c;
      } else {
        it->second = k.add(it->second, c);
        if (k.is_zero(it->second)) acc.erase(it);
      }
      return;
    }
    for (auto& [l, v] : blocks[j].c) {
      word[j] = l;
      rec(j + 1, k.mul(c, v));
    }
  };
  rec(0, k.one());
}

// One application of the coderivation determined by h to a word-sum.
template <class F>
WordSum<F> coderivation_step(const Coderivation<F>& h, const WordSum<F>& in) {
  const F& k = h.source().k;
  WordSum<F> out;
  for (auto& [word, c] : in) {
    coderivation_words<F>(h, word, -1, [&](const std::vector<Mor<F>>& blocks, const typename F::elem& coeff) {
      wordsum_add(k, out, blocks, k.mul(coeff, c));
    });
  }
  return out;
}

// exp([b, r]) for an inner coderivation r over (id, id) with r_0 = r_1 = 0
// of degree -1; an A_m-functor with first component the identity.
template <class F>
AnFunctor<F> exp_inner_automorphism(const AnCategory<F>& a, const AnFunctor<F>& ida, const Coderivation<F>& r, int m) {
  const F& k = a.k;
  auto D = b1_coderivation(r, m);  // degree 0, D_0 = D_1 = 0, commutes with b
  AnFunctor<F> f;
  f.src = &a;
  f.dst = &a;
  f.m = m;
  f.obj_map = ida.obj_map;
  f.ensure_comps_size();
  for (size_t l = 0; l < a.labels.size(); ++l)
    if (!a.is_unit(int(l))) f.comps[1][{int(l)}] = Coords<F>{{int(l), k.one()}};

  std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& w) {
    if (int(w.size()) >= 2) {
      // exp(D)(w)|prim = sum_t (D^t w)|prim / t!   (t >= 1; lengths shrink)
      Coords<F> total;
      WordSum<F> cur;
      cur[w] = k.one();
      auto fact = k.one();
      for (int t = 1; t < int(w.size()); ++t) {
        cur = coderivation_step(D, cur);
        fact = k.mul(fact, k.from_int(t));
        if (cur.empty()) break;
        for (auto& [word, c] : cur)
          if (word.size() == 1) coords_add(k, total, Coords<F>{{word[0], k.one()}}, k.div(c, fact));
      }
      if (!total.empty()) f.comps[int(w.size())][w] = total;
    }
    if (int(w.size()) == m) return;
    int at = w.empty() ? -1 : a.labels[w.back()].dst;
    for (size_t l = 0; l < a.labels.size(); ++l) {
      if (a.is_unit(int(l))) continue;
      if (at >= 0 && a.labels[l].src != at) continue;
      w.push_back(int(l));
      grow(w);
      w.pop_back();
    }
  };
  std::vector<int> w;
  grow(w);
  return f;
}

// Random inner coderivation of degree -1 with r_0 = r_1 = 0.
template <class F>
Coderivation<F> random_inner_coderivation(const AnCategory<F>& a, const AnFunctor<F>& ida, Rng& rng, int m,
                                          int entries = 4) {
  const F& k = a.k;
  Coderivation<F> r;
  r.f1 = &ida;
  r.f2 = &ida;
  r.sdeg = -1;
  r.ensure_comps_size(m);
  // collect composable non-unit pairs/triples and match degrees
  std::vector<std::vector<int>> words;
  std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& w) {
    if (w.size() >= 2) words.push_back(w);
    if (int(w.size()) == std::min(m, 3)) return;
    int at = w.empty() ? -1 : a.labels[w.back()].dst;
    for (size_t l = 0; l < a.labels.size(); ++l) {
      if (a.is_unit(int(l))) continue;
      if (at >= 0 && a.labels[l].src != at) continue;
      w.push_back(int(l));
      grow(w);
      w.pop_back();
    }
  };
  std::vector<int> w;
  grow(w);
  for (int e = 0; e < entries && !words.empty(); ++e) {
    auto& word = words[rng.below(words.size())];
    int want = r.sdeg + 1 - int(word.size()) + 1;  // unshifted target degree
    want = 0;
    for (int l : word) want += a.labels[l].deg - 1;
    want += r.sdeg + 1;
    int src = a.labels[word.front()].src, dst = a.labels[word.back()].dst;
    for (int t : a.hom_labels(src, dst))
      if (a.labels[t].deg == want && !a.is_unit(t)) {
        coords_add(k, r.comps[int(word.size())][word], Coords<F>{{t, k.one()}}, k.from_int(rng.range(1, 4)));
        if (r.comps[int(word.size())][word].empty()) r.comps[int(word.size())].erase(word);
        break;
      }
  }
  return r;
}

// Transport the structure of `a` along a random unit-preserving chain
// isomorphism u (triangular, non-unit components only).  Returns the
// transported category and the strict isomorphism u : a -> b.
template <class F>
std::pair<AnCategory<F>, AnFunctor<F>> transport_category(const AnCategory<F>& a, Rng& rng) {
  const F& k = a.k;
  AnCategory<F> b(k);
  b.arity = a.arity;
  b.ensure_ops_size();
  b.obj_names = a.obj_names;
  b.labels = a.labels;
  b.hom = a.hom;
  b.unit_label = a.unit_label;
  b.unit_coords = a.unit_coords;
  for (auto& l : b.labels)
    if (l.unit_for < 0) l.name = l.name + "'";

  // u: triangular with unit diagonal in label order, preserving (pair, deg)
  std::map<int, Coords<F>> u, uinv;
  for (size_t l = 0; l < a.labels.size(); ++l) {
    Coords<F> row{{int(l), k.one()}};
    if (!a.is_unit(int(l)))
      for (int t : a.hom_labels(a.labels[l].src, a.labels[l].dst))
        if (t > int(l) && !a.is_unit(t) && a.labels[t].deg == a.labels[l].deg && rng.coin(0.4))
          coords_add(k, row, Coords<F>{{t, k.one()}}, k.from_int(rng.range(1, 4)));
    u[int(l)] = row;
  }
  // invert the triangular map: uinv(l) = l - sum_{t>l} u_{lt} uinv(t)
  for (int l = int(a.labels.size()) - 1; l >= 0; --l) {
    Coords<F> row{{l, k.one()}};
    for (auto& [t, c] : u[l]) {
      if (t == l) continue;
      coords_add(k, row, uinv[t], k.neg(c));
    }
    uinv[l] = row;
  }

  auto apply = [&](const std::map<int, Coords<F>>& mp, const Coords<F>& x) {
    Coords<F> out;
    for (auto& [l, c] : x) coords_add(k, out, mp.at(l), c);
    return out;
  };

  // transported tables: b^b_i(Y) = u( b^a_i(u^{-1} Y) )
  for (int i = 1; i < int(a.ops.size()); ++i) {
    // keys of b^b: all composable non-unit tuples that can hit a stored entry
    // under u^{-1}; u is triangular so keys of a suffice as a superset only
    // if we also include tuples mixing in higher labels.  Enumerate all
    // composable non-unit tuples of the arity instead (the categories stay
    // small where this generator is used).
    std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& w) {
      if (int(w.size()) == i) {
        std::vector<Mor<F>> args;
        for (int l : w) {
          auto m = a.label_mor(l);
          m.c = apply(uinv, m.c);
          args.push_back(m);
        }
        auto v = a.eval_b(args);
        if (!v.c.empty()) {
          auto out = apply(u, v.c);
          for (auto& [t, c] : out) b.add_op(i, w, t, c);
        }
        return;
      }
      int at = w.empty() ? -1 : a.labels[w.back()].dst;
      for (size_t l = 0; l < a.labels.size(); ++l) {
        if (a.is_unit(int(l))) continue;
        if (at >= 0 && a.labels[l].src != at) continue;
        w.push_back(int(l));
        grow(w);
        w.pop_back();
      }
    };
    std::vector<int> w;
    grow(w);
  }

  AnFunctor<F> f;
  f.src = &a;
  f.dst = &b;
  f.m = a.arity;
  f.obj_map.resize(a.obj_names.size());
  for (size_t i = 0; i < a.obj_names.size(); ++i) f.obj_map[i] = int(i);
  f.ensure_comps_size();
  for (size_t l = 0; l < a.labels.size(); ++l)
    if (!a.is_unit(int(l))) f.comps[1][{int(l)}] = u[int(l)];
  return {std::move(b), std::move(f)};
}

// a plus one extra object carrying a contractible two-term complex of
// endomorphisms, plus a zero object; the inclusion of a is a fully faithful
// quasi-equivalence when a itself has a zero object to absorb the
// contractible summand.
template <class F>
AnCategory<F> with_contractible_object(const AnCategory<F>& a, const std::string& name) {
  const F& k = a.k;
  AnCategory<F> b(k);
  b.arity = a.arity;
  b.ensure_ops_size();
  b.obj_names = a.obj_names;
  b.labels = a.labels;
  b.hom = a.hom;
  b.unit_label = a.unit_label;
  b.unit_coords = a.unit_coords;
  for (int i = 1; i < int(a.ops.size()); ++i) b.ops[i] = a.ops[i];
  int z = b.add_object(name);
  int w = b.add_label(z, z, -1, name + "_w");
  // m_1(w) = id_Z: contractible endomorphisms
  b.add_op_m1(w, Coords<F>{{b.unit_label[z], k.one()}});
  return b;
}

}  // namespace antw
