// Morphisms between A_m-functors: (f_1,f_2)-coderivations with Taylor
// coefficients h_0 (one element per object) and h_k (degree-homogeneous
// tables vanishing on units), the differential [b,h], the cup products, and
// the resulting A_{n-m}-structure on A_m(a,b).
#pragma once

#include "antw/cohomology.hpp"
#include "antw/functor.hpp"

namespace antw {

template <class F>
struct Coderivation {
  const AnFunctor<F>* f1 = nullptr;  // source functor
  const AnFunctor<F>* f2 = nullptr;  // target functor
  int sdeg = 0;                      // degree as a coderivation (on shifted homs)
  std::map<int, Coords<F>> h0;       // object -> element of dst(f1 A, f2 A), unshifted degree sdeg+1
  using Key = std::vector<int>;
  std::vector<std::map<Key, Coords<F>>> comps;  // h_k, 1 <= k <= m

  const AnCategory<F>& source() const { return *f1->src; }
  const AnCategory<F>& target() const { return *f1->dst; }

  void ensure_comps_size(int m) {
    if (int(comps.size()) < m + 1) comps.resize(m + 1);
  }

  Mor<F> h0_mor(int obj) const {
    const auto& b = target();
    Mor<F> m = b.zero_mor(f1->obj_map[obj], f2->obj_map[obj], sdeg + 1);
    auto it = h0.find(obj);
    if (it != h0.end()) m.c = it->second;
    return m;
  }

  // h_k evaluated on morphisms (vanishes on units, any k >= 1)
  Mor<F> eval_comp(const std::vector<Mor<F>>& args) const {
    const F& k = source().k;
    const auto& a = source();
    const auto& b = target();
    int i = int(args.size());
    int deg = sdeg + 1 - i;
    for (auto& x : args) deg += x.deg;
    Mor<F> out = b.zero_mor(f1->obj_map[args.front().src], f2->obj_map[args.back().dst], deg);
    std::vector<int> stack;
    std::function<void(int, typename F::elem)> rec = [&](int j, typename F::elem coeff) {
      if (j == i) {
        for (int l : stack)
          if (a.is_unit(l)) return;
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
};

// The coderivation determined by the Taylor coefficients, applied to a word:
// emits all output words  f1(blocks) | h_l(middle) | f2(blocks)  with the
// Koszul sign of h passing the suffix consumed by the f2 side.
template <class F>
void coderivation_words(const Coderivation<F>& h, const typename Coderivation<F>::Key& word, int base_obj,
                        const std::function<void(const std::vector<Mor<F>>&, const typename F::elem&)>& emit) {
  const auto& a = h.source();
  const F& k = a.k;
  int n = int(word.size());
  if (n == 0) {
    auto m0 = h.h0_mor(base_obj);
    if (!m0.c.empty()) emit({m0}, k.one());
    return;
  }
  // choose the middle block [c, c+l), l >= 0; c+l == c means h_0 at the
  // object sitting between positions c-1 and c
  for (int c = 0; c <= n; ++c) {
    for (int l = 0; c + l <= n; ++l) {
      Mor<F> midval;
      if (l == 0) {
        int obj = c == 0 ? a.labels[word[0]].src : a.labels[word[c - 1]].dst;
        midval = h.h0_mor(obj);
      } else {
        std::vector<Mor<F>> mid;
        for (int q = c; q < c + l; ++q) mid.push_back(a.label_mor(word[q]));
        midval = h.eval_comp(mid);
      }
      if (midval.c.empty()) continue;
      long e = 0;
      for (int q = c + l; q < n; ++q) e += a.labels[word[q]].deg - 1;
      auto sgn = parity(long(h.sdeg) * e) ? k.neg(k.one()) : k.one();
      // prefix through f1 as a cofunctor, suffix through f2
      typename Coderivation<F>::Key pre(word.begin(), word.begin() + c);
      typename Coderivation<F>::Key suf(word.begin() + c + l, word.end());
      auto with_pre = [&](const std::vector<Mor<F>>& pre_blocks, const typename F::elem& cpre) {
        auto with_suf = [&](const std::vector<Mor<F>>& suf_blocks, const typename F::elem& csuf) {
          std::vector<Mor<F>> out = pre_blocks;
          out.push_back(midval);
          out.insert(out.end(), suf_blocks.begin(), suf_blocks.end());
          emit(out, k.mul(sgn, k.mul(cpre, csuf)));
        };
        if (suf.empty())
          with_suf({}, k.one());
        else
          cofunctor_words<F>(*h.f2, suf, with_suf);
      };
      if (pre.empty())
        with_pre({}, k.one());
      else
        cofunctor_words<F>(*h.f1, pre, with_pre);
    }
  }
}

// b_1(h) = [b, h] as a coderivation over the same endpoints.
template <class F>
Coderivation<F> b1_coderivation(const Coderivation<F>& h, int m) {
  const auto& a = h.source();
  const auto& b = h.target();
  const F& k = a.k;
  Coderivation<F> r;
  r.f1 = h.f1;
  r.f2 = h.f2;
  r.sdeg = h.sdeg + 1;
  r.ensure_comps_size(m);

  // h0 component: b_1(h_0()_A)
  for (size_t A = 0; A < a.obj_names.size(); ++A) {
    auto v = b.eval_b({h.h0_mor(int(A))});
    if (!v.c.empty()) r.h0[int(A)] = v.c;
  }

  // arity-c components on composable non-unit words
  std::function<void(typename Coderivation<F>::Key&)> grow = [&](typename Coderivation<F>::Key& w) {
    if (!w.empty()) {
      Coords<F> total;
      coderivation_words<F>(h, w, -1, [&](const std::vector<Mor<F>>& blocks, const typename F::elem& coeff) {
        auto v = b.eval_b(blocks);
        coords_add(k, total, v.c, coeff);
      });
      // minus (-1)^{|h|} h(spliced)
      int n = int(w.size());
      for (int len = 1; len <= n; ++len)
        for (int c = 0; c + len <= n; ++c) {
          std::vector<Mor<F>> inner;
          for (int q = c; q < c + len; ++q) inner.push_back(a.label_mor(w[q]));
          auto mid = a.eval_b(inner);
          if (mid.c.empty()) continue;
          std::vector<Mor<F>> spliced;
          for (int q = 0; q < c; ++q) spliced.push_back(a.label_mor(w[q]));
          spliced.push_back(mid);
          for (int q = c + len; q < n; ++q) spliced.push_back(a.label_mor(w[q]));
          long e = 0;
          for (int q = c + len; q < n; ++q) e += a.labels[w[q]].deg - 1;  // b_l passes the suffix
          auto v = h.eval_comp(spliced);
          auto sgn = parity(e + h.sdeg) ? k.one() : k.neg(k.one());  // -(-1)^{|h|} (-1)^e
          coords_add(k, total, v.c, sgn);
        }
      if (!total.empty()) r.comps[int(w.size())][w] = total;
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
  typename Coderivation<F>::Key w;
  grow(w);
  return r;
}

// cup composite b_j(h_j, ..., h_1) for composable coderivations
// f_0 -> f_1 -> ... -> f_j (h_t over (f_{t-1}, f_t)); Taylor coefficients of
// (b o (h_j cup ... cup h_1)).
template <class F>
Coderivation<F> bj_coderivations(const std::vector<const Coderivation<F>*>& hs, int m) {
  int j = int(hs.size());
  if (j < 2) throw std::invalid_argument("bj_coderivations: need >= 2 factors");
  const auto& a = hs[0]->source();
  const auto& b = hs[0]->target();
  const F& k = a.k;
  Coderivation<F> r;
  r.f1 = hs[0]->f1;
  r.f2 = hs[j - 1]->f2;
  r.sdeg = 1;
  for (auto* h : hs) r.sdeg += h->sdeg;
  r.ensure_comps_size(m);

  // enumerate splits of the word into u_0 | v_1 | u_1 | ... | v_j | u_j with
  // u_t through the cofunctor f_t and v_t through h_t (possibly empty);
  // each h_t passes everything consumed after v_t (the suffix).
  auto process_word = [&](const typename Coderivation<F>::Key& w, Coords<F>& total) {
    int n = int(w.size());
    // choose 2j cut points 0 <= c_1 <= d_1 <= c_2 <= ... <= d_j <= n:
    // v_t = [c_t, d_t), u_0 = [0, c_1), u_t = [d_t, c_{t+1}), u_j = [d_j, n)
    std::vector<int> cuts(2 * j);
    std::function<void(int, int)> choose = [&](int idx, int from) {
      if (idx == 2 * j) {
        // suffix shifted-degree sums for the sign
        std::vector<long> sufdeg(n + 1, 0);
        for (int q = n - 1; q >= 0; --q) sufdeg[q] = sufdeg[q + 1] + (a.labels[w[q]].deg - 1);
        long e = 0;
        for (int t = 0; t < j; ++t) e += long(hs[t]->sdeg) * sufdeg[cuts[2 * t + 1]];
        auto sgn = parity(e) ? k.neg(k.one()) : k.one();
        // midvalues
        std::vector<Mor<F>> mids(j);
        for (int t = 0; t < j; ++t) {
          int c = cuts[2 * t], d = cuts[2 * t + 1];
          if (c == d) {
            int obj = c == 0 ? (n ? a.labels[w[0]].src : -2) : a.labels[w[c - 1]].dst;
            mids[t] = hs[t]->h0_mor(obj);
          } else {
            std::vector<Mor<F>> mid;
            for (int q = c; q < d; ++q) mid.push_back(a.label_mor(w[q]));
            mids[t] = hs[t]->eval_comp(mid);
          }
          if (mids[t].c.empty()) return;
        }
        // assemble blocks: u_0 via f_0, then mid_1, u_1 via f_1, ...
        std::function<void(int, std::vector<Mor<F>>, typename F::elem)> assemble =
            [&](int t, std::vector<Mor<F>> blocks, typename F::elem coeff) {
              if (t == j + 1) {
                auto v = b.eval_b(blocks);
                coords_add(k, total, v.c, k.mul(sgn, coeff));
                return;
              }
              int from_pos = t == 0 ? 0 : cuts[2 * (t - 1) + 1];
              int to_pos = t == j ? n : cuts[2 * t];
              typename Coderivation<F>::Key u(w.begin() + from_pos, w.begin() + to_pos);
              const AnFunctor<F>* ft = t == 0 ? hs[0]->f1 : hs[t - 1]->f2;
              auto cont = [&](const std::vector<Mor<F>>& ub, const typename F::elem& cu) {
                auto nb = blocks;
                nb.insert(nb.end(), ub.begin(), ub.end());
                if (t < j) nb.push_back(mids[t]);
                assemble(t + 1, std::move(nb), k.mul(coeff, cu));
              };
              if (u.empty())
                cont({}, k.one());
              else
                cofunctor_words<F>(*ft, u, cont);
            };
        assemble(0, {}, k.one());
        return;
      }
      for (int c = from; c <= n; ++c) {
        cuts[idx] = c;
        choose(idx + 1, c);
      }
    };
    choose(0, 0);
  };

  // h0 component: empty word at each object
  for (size_t A = 0; A < a.obj_names.size(); ++A) {
    Coords<F> total;
    std::vector<Mor<F>> blocks;
    bool any = true;
    for (int t = 0; t < j && any; ++t) {
      auto mv = hs[t]->h0_mor(int(A));
      if (mv.c.empty()) any = false;
      blocks.push_back(mv);
    }
    if (any) {
      auto v = b.eval_b(blocks);
      coords_add(k, total, v.c, k.one());
    }
    if (!total.empty()) r.h0[int(A)] = total;
  }

  std::function<void(typename Coderivation<F>::Key&)> grow = [&](typename Coderivation<F>::Key& w) {
    if (!w.empty()) {
      Coords<F> total;
      process_word(w, total);
      if (!total.empty()) r.comps[int(w.size())][w] = total;
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
  typename Coderivation<F>::Key w;
  grow(w);
  return r;
}

// ---------------------------------------------------------------------------
// The A_{n-m}-category A_m(a, b) on a stored list of functors.

template <class F>
struct FunctorCategory {
  AnCategory<F> cat;
  std::vector<const AnFunctor<F>*> functors;
  // label provenance: h0 type (obj, -1, target label) or hk type (word id, target)
  struct LabelInfo {
    int kind = 0;  // 0: h0, 1: hk
    int obj = -1;
    typename Coderivation<F>::Key word;
    int target = -1;
  };
  std::vector<LabelInfo> info;
  std::map<std::pair<int, int>, std::map<std::tuple<int, std::vector<int>, int>, int>> lookup;
  int m = 1;

  explicit FunctorCategory(const F& k) : cat(k) {}

  Coderivation<F> to_coderivation(int fsrc, int fdst, const Coords<F>& coords, int sdeg) const {
    Coderivation<F> h;
    h.f1 = functors[fsrc];
    h.f2 = functors[fdst];
    h.sdeg = sdeg;
    h.ensure_comps_size(m);
    const F& k = cat.k;
    for (auto& [l, c] : coords) {
      const auto& in = info[l];
      if (in.kind == 0)
        coords_add(k, h.h0[in.obj], Coords<F>{{in.target, k.one()}}, c);
      else
        coords_add(k, h.comps[int(in.word.size())][in.word], Coords<F>{{in.target, k.one()}}, c);
    }
    return h;
  }

  Coords<F> from_coderivation(int fsrc, int fdst, const Coderivation<F>& h) const {
    const F& k = cat.k;
    Coords<F> out;
    auto& lk = lookup.at({fsrc, fdst});
    for (auto& [obj, val] : h.h0)
      for (auto& [t, c] : val) {
        auto it = lk.find({obj, {}, t});
        if (it == lk.end()) throw std::logic_error("coderivation h0 component outside the label basis");
        coords_add(k, out, Coords<F>{{it->second, k.one()}}, c);
      }
    for (int i = 1; i < int(h.comps.size()); ++i)
      for (auto& [word, val] : h.comps[i])
        for (auto& [t, c] : val) {
          auto it = lk.find({-1, word, t});
          if (it == lk.end()) throw std::logic_error("coderivation component outside the label basis");
          coords_add(k, out, Coords<F>{{it->second, k.one()}}, c);
        }
    return out;
  }
};

// Build A_m(a, b) on the given functors; tables up to table_arity (the
// structure is A_{n-m} for n = arity of b).
template <class F>
FunctorCategory<F> build_functor_category(const AnCategory<F>& a, const AnCategory<F>& b,
                                          const std::vector<const AnFunctor<F>*>& functors, int m, int table_arity = -1) {
  if (b.arity - m < 1) throw std::invalid_argument("build_functor_category: need m <= n-1");
  const F& k = a.k;
  FunctorCategory<F> fc(k);
  fc.functors = functors;
  fc.m = m;
  int nm = b.arity - m;
  fc.cat.arity = table_arity < 0 ? std::min(nm, 3) : table_arity;
  fc.cat.ensure_ops_size();

  for (size_t i = 0; i < functors.size(); ++i) fc.cat.add_object_raw("F" + std::to_string(i));

  // composable non-unit words of a up to length m
  std::vector<typename Coderivation<F>::Key> words;
  {
    std::function<void(typename Coderivation<F>::Key&)> grow = [&](typename Coderivation<F>::Key& w) {
      if (!w.empty()) words.push_back(w);
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
    typename Coderivation<F>::Key w;
    grow(w);
  }

  // labels
  for (size_t i = 0; i < functors.size(); ++i) {
    for (size_t j = 0; j < functors.size(); ++j) {
      auto& lk = fc.lookup[{int(i), int(j)}];
      for (size_t A = 0; A < a.obj_names.size(); ++A) {
        int sA = functors[i]->obj_map[A], dA = functors[j]->obj_map[A];
        for (auto& [pair, ls] : b.hom) {
          if (pair != std::make_pair(sA, dA)) continue;
          for (int t : ls) {
            int D = b.labels[t].deg;  // label degree sdeg+1 with sdeg = deg(t)-1
            int id = fc.cat.add_label(int(i), int(j), D,
                                      "h0[" + a.obj_names[A] + "->" + b.labels[t].name + "]");
            fc.info.push_back({0, int(A), {}, t});
            lk[{int(A), {}, t}] = id;
          }
        }
      }
      for (auto& w : words) {
        int ws = functors[i]->obj_map[a.labels[w.front()].src];
        int wd = functors[j]->obj_map[a.labels[w.back()].dst];
        int wdeg = 0;
        for (int l : w) wdeg += a.labels[l].deg - 1;
        for (auto& [pair, ls] : b.hom) {
          if (pair != std::make_pair(ws, wd)) continue;
          for (int t : ls) {
            int D = (b.labels[t].deg - 1) - wdeg + 1;
            int id = fc.cat.add_label(int(i), int(j), D,
                                      "h" + std::to_string(w.size()) + "[" + detail::key_str(a, w) + "->" +
                                          b.labels[t].name + "]");
            fc.info.push_back({1, -1, w, t});
            lk[{-1, w, t}] = id;
          }
        }
      }
    }
  }
  // identity coderivations as unit elements
  for (size_t i = 0; i < functors.size(); ++i) {
    Coords<F> u;
    for (size_t A = 0; A < a.obj_names.size(); ++A)
      for (auto& [t, c] : b.unit_coords[functors[i]->obj_map[A]])
        coords_add(k, u, Coords<F>{{fc.lookup[{int(i), int(i)}].at({int(A), {}, t}), k.one()}}, c);
    fc.cat.unit_coords[i] = u;
  }

  // b_1
  for (size_t l = 0; l < fc.cat.labels.size(); ++l) {
    auto& L = fc.cat.labels[l];
    auto h = fc.to_coderivation(L.src, L.dst, Coords<F>{{int(l), k.one()}}, L.deg - 1);
    auto r = b1_coderivation(h, m);
    auto out = fc.from_coderivation(L.src, L.dst, r);
    for (auto& [t, c] : out) fc.cat.add_op(1, {int(l)}, t, c);
  }
  // b_j via cups
  for (int j = 2; j <= fc.cat.arity; ++j) {
    std::vector<int> pick(j);
    std::function<void(int)> rec = [&](int t) {
      if (t == j) {
        std::vector<const Coderivation<F>*> hs;
        std::vector<Coderivation<F>> store;
        store.reserve(j);
        for (int q = 0; q < j; ++q) {
          auto& L = fc.cat.labels[pick[q]];
          store.push_back(fc.to_coderivation(L.src, L.dst, Coords<F>{{pick[q], k.one()}}, L.deg - 1));
        }
        for (int q = 0; q < j; ++q) hs.push_back(&store[q]);
        auto r = bj_coderivations(hs, m);
        auto out = fc.from_coderivation(fc.cat.labels[pick[0]].src, fc.cat.labels[pick[j - 1]].dst, r);
        typename AnCategory<F>::Key key(pick.begin(), pick.end());
        for (auto& [tt, c] : out) fc.cat.add_op(j, key, tt, c);
        return;
      }
      for (size_t l = 0; l < fc.cat.labels.size(); ++l) {
        if (t > 0 && fc.cat.labels[l].src != fc.cat.labels[pick[t - 1]].dst) continue;
        pick[t] = int(l);
        rec(t + 1);
      }
    };
    rec(0);
  }
  return fc;
}

// Is h a homotopy?  h must be closed of degree -1; then every H*(h_0, A)
// must be invertible.
template <class F>
bool check_homotopy(const Coderivation<F>& h, const HStarCategory<F>& Hb, int m, Report* why = nullptr) {
  const auto& b = h.target();
  if (h.sdeg != -1) {
    if (why) why->add("homotopy", Status::FAIL, "degree is not -1");
    return false;
  }
  auto d = b1_coderivation(h, m);
  bool closed = d.h0.empty();
  for (auto& tbl : d.comps)
    if (!tbl.empty()) closed = false;
  if (!closed) throw std::invalid_argument("check_homotopy: h is not closed");
  for (size_t A = 0; A < h.source().obj_names.size(); ++A) {
    auto cls = Hb.cls(h.h0_mor(int(A)));
    if (!cls) throw std::invalid_argument("check_homotopy: h_0 is not closed");
    if (!h_inverse(Hb, *cls)) {
      if (why)
        why->add("homotopy", Status::FAIL, "H*(h_0) not invertible at object " + h.source().obj_names[A]);
      return false;
    }
  }
  if (why) why->add("homotopy", Status::PASS, "");
  return true;
}

}  // namespace antw
