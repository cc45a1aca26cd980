#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "antw/cohomology.hpp"
#include "antw/gen.hpp"

using namespace antw;
using F5 = PrimeField;

TEST_CASE("minimal category: H* equals the hom spaces") {
  F5 k(5);
  Rng rng(3);
  auto a = layered_an_category(k, rng, 5, {});
  auto H = cohomology(a);
  // b_1 = 0: every (pair, degree) piece has full dimension
  std::map<std::tuple<int, int, int>, int> counts;
  for (auto& l : a.labels) counts[{l.src, l.dst, l.deg}]++;
  for (auto& [key, n] : counts) {
    auto [s, d, g] = key;
    CHECK(H.dim(s, d, g) == n);
  }
}

TEST_CASE("I_1: H* = I_1 itself (da_ij = 0)") {
  F5 k(5);
  auto a = make_In(k, 1);
  auto H = cohomology(a);
  CHECK(H.dim(0, 1, 0) == 1);
  CHECK(H.dim(0, 0, 0) == 1);
  CHECK(H.dim(1, 0, 0) == 0);
  // composition of unit classes
  auto u = H.unit(0);
  CHECK(H.is_unit_class(H.compose(u, u)));
}

TEST_CASE("two-step complex: H* = k id") {
  // one object; hom spanned by id (deg 0), u (deg 0), v (deg -1), b_1(sv) = -su
  F5 k(5);
  AnCategory<F5> a(k);
  a.arity = 3;
  a.ensure_ops_size();
  a.add_object("A");
  int u = a.add_label(0, 0, 0, "u");
  int v = a.add_label(0, 0, -1, "v");
  a.add_op(1, {v}, u, k.one());  // b_1(sv) = su, i.e. m_1(v) = -u (only ranks matter here)
  REQUIRE(check_an_structure(a).ok());
  auto H = cohomology(a);
  CHECK(H.dim(0, 0, 0) == 1);   // only the unit class survives
  CHECK(H.dim(0, 0, -1) == 0);
  auto um = a.label_mor(u);
  auto c = H.cls(um);
  REQUIRE(c.has_value());
  CHECK(c->is_zero(k));  // u is a boundary
  // rank-nullity: dim H = dim ker - dim im per pair and degree
  // (deg 0: ker = {id,u} 2-dim... unit label participates: ker dim 2, im dim 1)
  CHECK(H.dim(0, 0, 0) == 1);
}

TEST_CASE("dim H = dim ker - dim im on random DG categories") {
  F5 k(5);
  for (uint64_t seed = 2; seed <= 10; ++seed) {
    Rng rng(seed);
    auto a = dg_path_category(k, rng, {});
    auto H = cohomology(a);
    // verify on each (pair, degree): recompute ranks directly
    std::map<std::tuple<int, int, int>, std::vector<int>> grp;
    for (size_t l = 0; l < a.labels.size(); ++l)
      grp[{a.labels[l].src, a.labels[l].dst, a.labels[l].deg}].push_back(int(l));
    for (auto& [key, labels] : grp) {
      auto [s, d, g] = key;
      int n = int(labels.size());
      SparseMatrix<F5> M(int(a.labels.size()), n);
      for (int i = 0; i < n; ++i) {
        auto w = a.m1(a.label_mor(labels[i]));
        for (auto& [l, c] : w.c) M.set(k, l, i, c);
      }
      int ker = kernel_basis(k, M).dim();
      // image from below
      auto below = grp.find({s, d, g - 1});
      int im = 0;
      if (below != grp.end()) {
        SparseMatrix<F5> Mb(int(a.labels.size()), int(below->second.size()));
        for (size_t i = 0; i < below->second.size(); ++i) {
          auto w = a.m1(a.label_mor(below->second[i]));
          for (auto& [l, c] : w.c) Mb.set(k, l, int(i), c);
        }
        im = image_basis(k, Mb).dim();
      }
      CHECK(H.dim(s, d, g) == ker - im);
    }
  }
}

TEST_CASE("iso_search basics") {
  F5 k(5);
  auto a = make_In(k, 2);
  auto H = cohomology(a);
  // X = Y: identities
  auto w = iso_search(H, 1, 1);
  REQUIRE(w.has_value());
  CHECK(H.is_unit_class(w->fwd));
  // distinct objects of I_2 are not isomorphic (no map back)
  CHECK_FALSE(iso_search(H, 0, 1).has_value());
}

TEST_CASE("iso_search finds a non-obvious iso") {
  // two objects with hom spaces k in both directions, composition x.y = 3
  F5 k(5);
  AnCategory<F5> a(k);
  a.arity = 4;
  a.ensure_ops_size();
  a.add_object("X");
  a.add_object("Y");
  int f = a.add_label(0, 1, 0, "f");
  int g = a.add_label(1, 0, 0, "g");
  // m_2(g, f) = 3 id_X ; m_2(f, g) = 3 id_Y  (associative: both triple
  // products equal 3f, 3g).  Unit tuples may not be stored explicitly.
  a.add_op_m2(f, g, Coords<F5>{{a.unit_label[0], k.from_int(3)}});
  a.add_op_m2(g, f, Coords<F5>{{a.unit_label[1], k.from_int(3)}});
  CHECK_THROWS(a.add_op_m2(f, a.unit_label[0], Coords<F5>{{f, k.one()}}));
  REQUIRE(check_an_structure(a).ok());
  auto H = cohomology(a);
  auto w = iso_search(H, 0, 1);
  REQUIRE(w.has_value());
  auto gf = H.compose(w->bwd, w->fwd);
  CHECK(H.is_unit_class(gf));
}
