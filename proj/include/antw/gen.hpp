// Seeded instance generators used by the property suites.
//
// dg_path_category: free path DG-categories on a small acyclic quiver.  Even
// generators are closed; odd generators have differentials valued in closed
// paths, so d^2 = 0 and the Leibniz extension is consistent by construction.
//
// layered_an_category: A_n-categories for arbitrary n whose non-unit homs
// split into an input layer (degree 1) and an output layer (degree 2).  All
// higher products map input tuples into the output layer, and any product
// touching the output layer lands in degrees with no basis, so the Stasheff
// identities hold for any choice of tables.  This gives genuinely random
// higher operations with exact A_n bookkeeping.
#pragma once

#include <string>
#include <vector>

#include "antw/category.hpp"
#include "antw/rng.hpp"

namespace antw {

// I_n of the paper: objects x_0..x_n, hom(x_i,x_j) = k a_ij for i<j,
// composition a_jl a_ij = a_il, zero differential.
template <class F>
AnCategory<F> make_In(const F& k, int n, int arity = 15) {
  AnCategory<F> a(k);
  a.arity = arity;
  a.ensure_ops_size();
  for (int i = 0; i <= n; ++i) a.add_object("x" + std::to_string(i));
  std::vector<std::vector<int>> arrow(n + 1, std::vector<int>(n + 1, -1));
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      arrow[i][j] = a.add_label(i, j, 0, "a" + std::to_string(i) + std::to_string(j));
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int l = j + 1; l <= n; ++l) {
        // m_2(a_jl, a_ij) = a_il; both factors have degree 0 so the b-form
        // sign is +1.
        a.add_op(2, {arrow[i][j], arrow[j][l]}, arrow[i][l], k.one());
      }
  return a;
}

struct DgGenOptions {
  int arity = 15;  // declared arity; a DG-category satisfies every bound
};

// Random free path DG-category on the quiver x_0 -> x_1 -> x_2 with the
// chord x_0 -> x_2.  Each edge carries closed generators (degrees 0, 1) and
// a non-closed generator e of degree -1 with a nonzero differential; the
// chord also carries a non-closed generator whose differential may involve
// composite paths.  Length-2 composite paths through x_1 are independent
// basis labels, so the homs stay within degrees [-3,3] and dim <= 4 per
// degree, with enough Leibniz coupling that generic table corruptions break
// an identity.
template <class F>
AnCategory<F> dg_path_category(const F& k, Rng& rng, const DgGenOptions& opt = {}) {
  AnCategory<F> a(k);
  a.arity = opt.arity;
  a.ensure_ops_size();
  for (int i = 0; i < 3; ++i) a.add_object("x" + std::to_string(i));

  struct Gen {
    int id, src, dst, deg;
    bool closed;
  };
  std::vector<Gen> gens;
  auto nz = [&] { return k.from_int(rng.range(1, 4)); };
  auto add_edge = [&](int s, int d) {
    std::string sd = std::to_string(s) + std::to_string(d);
    gens.push_back({a.add_label(s, d, 0, "a" + sd), s, d, 0, true});
    if (rng.coin(0.7)) gens.push_back({a.add_label(s, d, 1, "b" + sd), s, d, 1, true});
    gens.push_back({a.add_label(s, d, -1, "e" + sd), s, d, -1, false});
  };
  add_edge(0, 1);
  add_edge(1, 2);
  add_edge(0, 2);

  // composite path labels g2.g1 for x0 -> x1 -> x2
  struct Path {
    int id, g1, g2, deg;
  };
  std::vector<Path> paths;
  for (auto& g1 : gens)
    for (auto& g2 : gens) {
      if (g1.src != 0 || g1.dst != 1 || g2.src != 1 || g2.dst != 2) continue;
      int deg = g1.deg + g2.deg;
      int id = a.add_label(0, 2, deg, a.labels[g2.id].name + "." + a.labels[g1.id].name);
      paths.push_back({id, g1.id, g2.id, deg});
      a.add_op_m2(g1.id, g2.id, Coords<F>{{id, k.one()}});
    }

  auto is_closed_label = [&](int l) {
    for (auto& g : gens)
      if (g.id == l) return g.closed;
    for (auto& p : paths)
      if (p.id == l) {
        bool c1 = false, c2 = false;
        for (auto& g : gens) {
          if (g.id == p.g1) c1 = g.closed;
          if (g.id == p.g2) c2 = g.closed;
        }
        return c1 && c2;
      }
    return false;
  };
  // nonzero combination of closed labels in hom(s,d) of the given degree
  auto closed_combo = [&](int s, int d, int deg) {
    Coords<F> c;
    std::vector<int> cands;
    for (size_t l = 0; l < a.labels.size(); ++l)
      if (a.labels[l].src == s && a.labels[l].dst == d && a.labels[l].deg == deg && a.labels[l].unit_for < 0 &&
          is_closed_label(int(l)))
        cands.push_back(int(l));
    for (int l : cands)
      if (rng.coin(0.6)) coords_add(k, c, Coords<F>{{l, k.one()}}, nz());
    if (c.empty() && !cands.empty()) c[cands[rng.below(cands.size())]] = nz();
    return c;
  };

  std::map<int, Coords<F>> diff;  // m_1 on generators
  for (auto& g : gens)
    if (!g.closed) {
      auto v = closed_combo(g.src, g.dst, g.deg + 1);
      if (!v.empty()) diff[g.id] = v;
    }
  // Leibniz on composite paths: m_1(g2.g1) = m_1(g2).g1 + (-1)^{|g2|} g2.m_1(g1)
  for (auto& p : paths) {
    Coords<F> val;
    auto d2 = diff.count(p.g2) ? diff[p.g2] : Coords<F>{};
    for (auto& [l, c] : d2)
      for (auto& q : paths)
        if (q.g1 == p.g1 && q.g2 == l) coords_add(k, val, Coords<F>{{q.id, k.one()}}, c);
    auto d1 = diff.count(p.g1) ? diff[p.g1] : Coords<F>{};
    auto sgn = parity(a.labels[p.g2].deg) ? k.neg(k.one()) : k.one();
    for (auto& [l, c] : d1)
      for (auto& q : paths)
        if (q.g1 == l && q.g2 == p.g2) coords_add(k, val, Coords<F>{{q.id, k.one()}}, k.mul(sgn, c));
    if (!val.empty()) diff[p.id] = val;
  }
  for (auto& [l, val] : diff)
    if (!val.empty()) a.add_op_m1(l, val);
  return a;
}

// Deterministically scan single-entry corruptions of the arity-1/2 tables
// until one breaks a Stasheff identity; returns the corrupted category and a
// description.  Corruptions that leave every identity intact produce another
// valid A_n-structure (e.g. rescaling a free composition) and are skipped:
// no audit can distinguish those from honest input.
template <class F>
std::optional<std::pair<AnCategory<F>, std::string>> find_detected_corruption(const AnCategory<F>& a, Rng& rng,
                                                                              int check_arity = 4) {
  for (int arity = 1; arity <= 2 && arity < int(a.ops.size()); ++arity) {
    for (auto& [key, val] : a.ops[arity]) {
      int src = a.labels[key.front()].src, dst = a.labels[key.back()].dst;
      int deg = 2 - arity;
      for (int l : key) deg += a.labels[l].deg;
      for (size_t w = 0; w < a.labels.size(); ++w) {
        if (a.labels[w].src != src || a.labels[w].dst != dst || a.labels[w].deg != deg) continue;
        if (a.labels[w].unit_for >= 0) continue;
        auto b = a;
        auto c = b.k.from_int(rng.range(1, 3));
        auto& cell = b.ops[arity][key];
        coords_add(b.k, cell, Coords<F>{{int(w), b.k.one()}}, c);
        if (cell.empty()) continue;  // corruption cancelled the entry: still a corruption, keep it
        auto rep = check_an_structure(b, check_arity);
        if (rep.failed())
          return std::make_pair(std::move(b), "arity-" + std::to_string(arity) + " entry " + detail::key_str(a, key) +
                                                  " += " + b.k.to_string(c) + "*" + a.labels[w].name + " ; " +
                                                  rep.first_failure());
      }
    }
  }
  return std::nullopt;
}

struct LayeredGenOptions {
  int objects = 1;          // 1 or 2
  int layer1 = 3;           // degree-1 labels per hom
  int layer2 = 2;           // degree-2 labels per hom
  int entries_per_arity = 4;
  bool include_b2 = true;   // random products of two layer-1 labels
};

// Random A_n-category with automatically satisfied Stasheff identities; see
// the header comment.  All structure maps vanish on the output layer, so
// every quadratic term of the identities has a zero factor.
template <class F>
AnCategory<F> layered_an_category(const F& k, Rng& rng, int n, const LayeredGenOptions& opt = {}) {
  AnCategory<F> a(k);
  a.arity = n;
  a.ensure_ops_size();
  int nobj = opt.objects;
  for (int i = 0; i < nobj; ++i) a.add_object("A" + std::to_string(i));
  std::vector<std::vector<int>> lay1(nobj), lay2(nobj);  // endo labels per object
  for (int o = 0; o < nobj; ++o) {
    for (int t = 0; t < opt.layer1; ++t) lay1[o].push_back(a.add_label(o, o, 1, "u" + std::to_string(o) + std::to_string(t)));
    for (int t = 0; t < opt.layer2; ++t) lay2[o].push_back(a.add_label(o, o, 2, "v" + std::to_string(o) + std::to_string(t)));
  }
  auto rand_out = [&](int o) {
    Coords<F> c;
    c[lay2[o][rng.below(lay2[o].size())]] = k.from_int(rng.range(1, 4));
    if (rng.coin(0.4)) coords_add(k, c, Coords<F>{{lay2[o][rng.below(lay2[o].size())], k.one()}}, k.from_int(rng.range(1, 4)));
    return c;
  };
  for (int i = opt.include_b2 ? 2 : 3; i <= n; ++i) {
    for (int t = 0; t < opt.entries_per_arity; ++t) {
      int o = int(rng.below(uint64_t(nobj)));
      typename AnCategory<F>::Key key(i);
      for (int q = 0; q < i; ++q) key[q] = lay1[o][rng.below(lay1[o].size())];
      auto out = rand_out(o);
      auto& cell = a.ops[i][key];
      cell.clear();
      coords_add(k, cell, out, k.one());
      if (cell.empty()) a.ops[i].erase(key);
    }
  }
  return a;
}

}  // namespace antw
