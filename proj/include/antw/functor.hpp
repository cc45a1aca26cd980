// A_m-functors as cofunctors on the bar cocategory, stored by Taylor
// components.  f_1 sends identities to identities and higher components
// vanish on them; both rules are applied implicitly, so component tables
// never mention unit labels.
//
// Sign orientation (fixed by eq. h1condition of the calculus): in a tensor
// expression of operators applied to a word, each factor passes the
// arguments consumed by the factors to its LEFT, i.e. the suffix of the word
// in composition order.
#pragma once

#include <map>
#include <vector>

#include "antw/category.hpp"

namespace antw {

template <class F>
struct AnFunctor {
  const AnCategory<F>* src = nullptr;
  const AnCategory<F>* dst = nullptr;
  int m = 1;                     // arity
  std::vector<int> obj_map;      // per source object
  using Key = std::vector<int>;
  std::vector<std::map<Key, Coords<F>>> comps;  // comps[i], 1 <= i <= m

  void ensure_comps_size() {
    if (int(comps.size()) < m + 1) comps.resize(m + 1);
  }

  void set_comp(int i, const Key& key, const Coords<F>& val) {
    ensure_comps_size();
    const F& k = src->k;
    for (size_t j = 0; j < key.size(); ++j) {
      if (src->is_unit(key[j])) throw std::invalid_argument("functor component on a unit tuple");
      if (j > 0 && src->labels[key[j]].src != src->labels[key[j - 1]].dst)
        throw std::invalid_argument("functor component key not composable");
    }
    int want = 1 - i;  // degree 0 on shifted homs
    for (int l : key) want += src->labels[l].deg;
    for (auto& [l, c] : val) {
      if (dst->labels[l].deg != want) throw std::invalid_argument("functor component degree mismatch");
      if (k.is_zero(c)) throw std::invalid_argument("functor component stores zero");
    }
    if (!val.empty()) comps[i][key] = val;
  }

  // f_i on morphisms (multilinear; unit rules applied).
  Mor<F> eval_comp(const std::vector<Mor<F>>& args) const {
    const F& k = src->k;
    int i = int(args.size());
    int deg = 1 - i;
    for (auto& a : args) deg += a.deg;
    Mor<F> out = dst->zero_mor(obj_map[args.front().src], obj_map[args.back().dst], deg);
    std::vector<int> stack;
    std::function<void(int, typename F::elem)> rec = [&](int j, typename F::elem coeff) {
      if (j == i) {
        bool has_unit = false;
        for (int l : stack)
          if (src->is_unit(l)) has_unit = true;
        if (has_unit) {
          if (i == 1) coords_add(k, out.c, dst->unit_coords[obj_map[src->labels[stack[0]].unit_for]], coeff);
          return;
        }
        if (i < int(comps.size())) {
          auto it = comps[i].find(stack);
          if (it != comps[i].end()) coords_add(k, out.c, it->second, coeff);
        }
        return;
      }
      for (auto& [l, v] : args[j].c) {
        stack.push_back(l);
        rec(j + 1, k.mul(coeff, v));
        stack.pop_back();
      }
    };
    rec(0, k.one());
    return out;
  }

  Mor<F> eval_comp_labels(const typename AnCategory<F>::Key& word) const {
    std::vector<Mor<F>> args;
    for (int l : word) args.push_back(src->label_mor(l));
    return eval_comp(args);
  }
};

// Identity functor.
template <class F>
AnFunctor<F> identity_functor(const AnCategory<F>& a, int arity) {
  AnFunctor<F> f;
  f.src = &a;
  f.dst = &a;
  f.m = arity;
  f.obj_map.resize(a.obj_names.size());
  for (size_t i = 0; i < a.obj_names.size(); ++i) f.obj_map[i] = int(i);
  f.ensure_comps_size();
  for (size_t l = 0; l < a.labels.size(); ++l)
    if (!a.is_unit(int(l))) f.comps[1][{int(l)}] = Coords<F>{{int(l), a.k.one()}};
  return f;
}

// All decompositions of `word` into q >= 1 consecutive blocks, mapped
// through the functor components: the cofunctor value as a sum of words
// over dst labels.  Used by relation checks and composition.
template <class F>
void cofunctor_words(const AnFunctor<F>& f, const typename AnCategory<F>::Key& word,
                     const std::function<void(const std::vector<Mor<F>>&, const typename F::elem&)>& emit) {
  const F& k = f.src->k;
  int n = int(word.size());
  std::vector<Mor<F>> acc;
  std::function<void(int, typename F::elem)> rec = [&](int pos, typename F::elem coeff) {
    if (k.is_zero(coeff)) return;
    if (pos == n) {
      emit(acc, coeff);
      return;
    }
    for (int len = 1; pos + len <= n; ++len) {
      typename AnCategory<F>::Key block(word.begin() + pos, word.begin() + pos + len);
      auto v = f.eval_comp_labels(block);
      if (v.c.empty()) continue;
      acc.push_back(v);
      // split the dst word per label later; Mor blocks carry full elems
      rec(pos + len, coeff);
      acc.pop_back();
    }
  };
  rec(0, k.one());
}

// Residual of the cofunctor relation at one source word (primitive output):
//   sum_decomp b(f(block_1), ..., f(block_q))
//   - sum_splices +- f_{...}( word with b_l(block) spliced in ).
// Vanishes for every word of length <= m iff f is an A_m-functor.
template <class F>
Mor<F> functor_residual(const AnFunctor<F>& f, const typename AnCategory<F>::Key& word) {
  const F& k = f.src->k;
  const auto& a = *f.src;
  const auto& b = *f.dst;
  int n = int(word.size());
  int deg = 2 - n;
  for (int l : word) deg += a.labels[l].deg;
  Mor<F> out = b.zero_mor(f.obj_map[a.labels[word.front()].src], f.obj_map[a.labels[word.back()].dst], deg);

  cofunctor_words<F>(f, word, [&](const std::vector<Mor<F>>& blocks, const typename F::elem& coeff) {
    auto v = b.eval_b(blocks);
    coords_add(k, out.c, v.c, coeff);
  });

  for (int len = 1; len <= n; ++len) {
    for (int c = 0; c + len <= n; ++c) {
      std::vector<Mor<F>> inner;
      for (int q = c; q < c + len; ++q) inner.push_back(a.label_mor(word[q]));
      auto mid = a.eval_b(inner);
      if (mid.c.empty()) continue;
      std::vector<Mor<F>> spliced;
      for (int q = 0; q < c; ++q) spliced.push_back(a.label_mor(word[q]));
      spliced.push_back(mid);
      for (int q = c + len; q < n; ++q) spliced.push_back(a.label_mor(word[q]));
      long e = 0;
      for (int q = c + len; q < n; ++q) e += a.labels[word[q]].deg - 1;  // b_l passes the suffix
      auto v = f.eval_comp(spliced);
      coords_add(k, out.c, v.c, parity(e) ? k.one() : k.neg(k.one()));  // minus the relation's right side
    }
  }
  return out;
}

template <class F>
Report check_functor(const AnFunctor<F>& f) {
  Report rep;
  const auto& a = *f.src;
  // enumerate composable non-unit words of length <= m
  std::vector<typename AnCategory<F>::Key> words;
  std::function<void(typename AnCategory<F>::Key&)> grow = [&](typename AnCategory<F>::Key& w) {
    if (int(w.size()) >= 1) words.push_back(w);
    if (int(w.size()) == f.m) return;
    int at = w.empty() ? -1 : a.labels[w.back()].dst;
    for (size_t l = 0; l < a.labels.size(); ++l) {
      if (a.is_unit(int(l))) continue;
      if (at >= 0 && a.labels[l].src != at) continue;
      w.push_back(int(l));
      grow(w);
      w.pop_back();
    }
  };
  typename AnCategory<F>::Key w;
  grow(w);
  for (auto& word : words) {
    auto r = functor_residual(f, word);
    if (!r.c.empty()) {
      rep.add("functor", Status::FAIL,
              "relation fails at " + detail::key_str(a, word) + " = " + detail::coords_str(*f.dst, r.c));
      return rep;
    }
  }
  rep.add("functor", Status::PASS, "cofunctor relations hold up to arity " + std::to_string(f.m));
  return rep;
}

// Composition of the corresponding cofunctors: (g o f)_i restricted to
// primitives, i.e. sum over decompositions g_{q}(f(block_1),...,f(block_q)).
template <class F>
AnFunctor<F> compose_functors(const AnFunctor<F>& g, const AnFunctor<F>& f, int arity = -1) {
  if (f.dst != g.src) throw std::invalid_argument("compose_functors: endpoint mismatch");
  const F& k = f.src->k;
  AnFunctor<F> r;
  r.src = f.src;
  r.dst = g.dst;
  r.m = arity < 0 ? std::min(f.m, g.m) : arity;
  r.obj_map.resize(f.obj_map.size());
  for (size_t i = 0; i < f.obj_map.size(); ++i) r.obj_map[i] = g.obj_map[f.obj_map[i]];
  r.ensure_comps_size();

  const auto& a = *f.src;
  std::function<void(typename AnCategory<F>::Key&)> grow = [&](typename AnCategory<F>::Key& w) {
    if (!w.empty()) {
      Coords<F> total;
      cofunctor_words<F>(f, w, [&](const std::vector<Mor<F>>& blocks, const typename F::elem& coeff) {
        auto v = g.eval_comp(blocks);
        coords_add(k, total, v.c, coeff);
      });
      if (!total.empty()) r.comps[int(w.size())][w] = total;
    }
    if (int(w.size()) == r.m) return;
    int at = w.empty() ? -1 : a.labels[w.back()].dst;
    for (size_t l = 0; l < a.labels.size(); ++l) {
      if (a.is_unit(int(l))) continue;
      if (at >= 0 && a.labels[l].src != at) continue;
      w.push_back(int(l));
      grow(w);
      w.pop_back();
    }
  };
  typename AnCategory<F>::Key w;
  grow(w);
  return r;
}

}  // namespace antw
