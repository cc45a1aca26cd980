#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "antw/fcat.hpp"
#include "antw/fgen.hpp"
#include "antw/gen.hpp"

using namespace antw;
using F7 = PrimeField;

TEST_CASE("identity functor passes; composing with identity is neutral") {
  F7 k(7);
  Rng rng(5);
  auto a = dg_path_category(k, rng, {});
  auto id = identity_functor(a, 4);
  CHECK(check_functor(id).ok());
  auto idid = compose_functors(id, id);
  CHECK(idid.comps[1] == id.comps[1]);
  for (int i = 2; i < int(idid.comps.size()); ++i) CHECK(idid.comps[i].empty());
}

TEST_CASE("transport along a chain isomorphism is a strict functor") {
  F7 k(7);
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    Rng rng(seed);
    auto a = dg_path_category(k, rng, {});
    auto [b, u] = transport_category(a, rng);
    INFO("seed ", seed);
    CHECK(check_an_structure(b, 5).ok());
    CHECK(check_functor(u).ok());
  }
}

TEST_CASE("exp of an inner coderivation is an A_m-functor with f_1 = id") {
  F7 k(7);
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    Rng rng(seed * 3 + 1);
    auto a = dg_path_category(k, rng, {});
    auto ida = identity_functor(a, 5);
    auto r = random_inner_coderivation(a, ida, rng, 5);
    auto f = exp_inner_automorphism(a, ida, r, 5);
    INFO("seed ", seed);
    CHECK(check_functor(f).ok());
    // strict composition of two exponentials is again a functor
    auto g = compose_functors(f, f);
    CHECK(check_functor(g).ok());
    // (g o f)_2 = g_1 f_2 + g_2 (f_1 x f_1) spot check on one stored key
    if (!f.comps[2].empty()) {
      auto& [key, val] = *f.comps[2].begin();
      auto lhs = g.comps[2].count(key) ? g.comps[2][key] : Coords<F7>{};
      Coords<F7> rhs;
      coords_add(k, rhs, f.eval_comp_labels(key).c, k.one());           // g_1 = f_1 = id on f_2 output... g_1 f_2
      // g_2(f_1 x, f_1 y) = f_2(x, y) since f_1 = id
      coords_add(k, rhs, f.comps[2].count(key) ? f.comps[2][key] : Coords<F7>{}, k.one());
      // direct expansion: both terms equal f_2(key); lhs must be their sum
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("functor category: one-object endofunctors, h0-only homs") {
  F7 k(7);
  AnCategory<F7> a(k);
  a.arity = 3;
  a.ensure_ops_size();
  a.add_object("pt");
  auto id = identity_functor(a, 1);
  auto fc = build_functor_category(a, a, {&id}, 1, 2);
  CHECK(fc.cat.obj_names.size() == 1);
  // the only labels are h0[pt -> id] (no non-unit words exist)
  CHECK(fc.cat.labels.size() == 1);
  CHECK(fc.info[0].kind == 0);
  CHECK(check_an_structure(fc.cat).ok());
}

TEST_CASE("functor category passes check_an_structure at arity n-m (property)") {
  F7 k(7);
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    Rng rng(seed * 11);
    DgGenOptions opt;
    opt.arity = 5;
    auto a = dg_path_category(k, rng, opt);
    auto ida = identity_functor(a, 2);
    auto r = random_inner_coderivation(a, ida, rng, 2, 3);
    auto f = exp_inner_automorphism(a, ida, r, 2);
    REQUIRE(check_functor(f).ok());
    std::vector<const AnFunctor<F7>*> fs = {&ida, &f};
    auto fc = build_functor_category(a, a, fs, 2, 3);  // A_{5-2} = A_3
    auto rep = check_an_structure(fc.cat, 3);
    INFO("seed ", seed, ": ", rep.first_failure());
    CHECK(rep.ok());
  }
}

TEST_CASE("eq:h1condition shape: b_1(h)_1 on an h with only h_0") {
  F7 k(7);
  Rng rng(21);
  auto a = dg_path_category(k, rng, {});
  auto ida = identity_functor(a, 3);
  // h over (id, id) of degree -1 with a single h0 component at object 0
  Coderivation<F7> h;
  h.f1 = &ida;
  h.f2 = &ida;
  h.sdeg = -1;
  h.ensure_comps_size(3);
  // pick a degree-0 endo-ish target: use the unit itself is forbidden in
  // comps but fine inside h0
  h.h0[0] = a.unit_coords[0];
  auto d = b1_coderivation(h, 2);
  // b_1(h)_1(st) = b_2(h_0()_B, f_1(st)) + (-1)^{|t|+1} b_2(f_2(st), h_0()_A)
  // with h_0 = id: the unit laws give st - st = 0 for |t| even, and
  // -st - (-st) ... compute directly and compare with the formula
  for (size_t l = 0; l < a.labels.size(); ++l) {
    if (a.is_unit(int(l)) || a.labels[l].src != 0) continue;
    auto t = a.label_mor(int(l));
    Coords<F7> want;
    // b_2(s id_B, s t) = st ... as the left argument: eval_b({t, id})
    coords_add(k, want, a.eval_b({t, a.unit_mor(a.labels[l].dst)}).c, k.one());
    auto sgn = parity(a.labels[l].deg + 1) ? k.neg(k.one()) : k.one();
    coords_add(k, want, a.eval_b({a.unit_mor(0), t}).c, sgn);
    auto got = d.comps.size() > 1 && d.comps[1].count({int(l)}) ? d.comps[1][{int(l)}] : Coords<F7>{};
    CHECK(got == want);
  }
}
