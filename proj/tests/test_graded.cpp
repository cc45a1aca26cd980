#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "antw/graded.hpp"
#include "antw/rng.hpp"

using namespace antw;
using F5 = PrimeField;

TEST_CASE("koszul transposition sign is involutive") {
  // moving x past y and back gives +1
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    int dx = rng.range(-3, 3), dy = rng.range(-3, 3);
    int s1 = koszul_permutation_sign({dx, dy}, {1, 0});
    int s2 = koszul_permutation_sign({dy, dx}, {1, 0});
    CHECK(s1 * s2 == 1);
    CHECK(s1 == ((dx * dy) % 2 ? -1 : 1));
  }
}

TEST_CASE("shift view composes") {
  RationalField k;
  GradedElem<RationalField> x{2, {{0, k.one()}}};
  auto v0 = shift_degree_view(x, 0);
  CHECK(v0.degree == 2);
  auto v1 = shift_degree_view(x, 1);
  CHECK(v1.degree == 1);  // |x| = 2 viewed in (Sigma A)_{i-1}
  auto v2 = shift_degree_view(shift_degree_view(x, 1), 1);
  CHECK(v2.degree == shift_degree_view(x, 2).degree);
  CHECK(shift_degree_view(v1, -1).degree == x.degree);
}

// b_n = s^{-n+1} m_n normalization of the paper:
//   b_1(sf) = -s m_1(f)
//   b_2(sg,sf) = (-1)^{|g|} s m_2(g,f)
//   b_3(sh,sg,sf) = (-1)^{|g|+1} s m_3(h,g,f)
TEST_CASE("b_from_m reproduces the stated low-arity signs") {
  CHECK(b_vs_m_exponent({3}) == 1);                    // always -1 at arity 1
  CHECK(b_vs_m_exponent({0}) == 1);
  for (int dg = -2; dg <= 2; ++dg) {
    CHECK(b_vs_m_exponent({5, dg}) == parity(dg));     // (-1)^{|g|}, f arbitrary
    CHECK(b_vs_m_exponent({-1, dg}) == parity(dg));
    for (int dh = -2; dh <= 2; ++dh)
      CHECK(b_vs_m_exponent({4, dg, dh}) == parity(dg + 1));  // (-1)^{|g|+1}
  }
}

TEST_CASE("b_from_m / m_from_b round trip on random tables") {
  F5 k(5);
  Rng rng(99);
  for (int t = 0; t < 10; ++t) {
    GradedSpace sp;
    for (int i = 0; i < 4; ++i) sp.basis.push_back({"e" + std::to_string(i), rng.range(-2, 2)});
    MultilinearOp<F5> op;
    op.arity = rng.range(1, 3);
    op.degree = 2 - op.arity;  // m-form degree
    op.inputs.assign(op.arity, sp);
    op.output = sp;
    for (int e = 0; e < 5; ++e) {
      std::vector<int> key(op.arity);
      for (auto& x : key) x = rng.range(0, 3);
      int want = 2 - op.arity;
      for (int j : key) want += sp.degree_of(j);
      for (int l = 0; l < 4; ++l)
        if (sp.degree_of(l) == want) {
          op.table[key][l] = k.from_int(rng.range(1, 4));
          break;
        }
      if (op.table.count(key) && op.table[key].empty()) op.table.erase(key);
    }
    auto b = b_from_m(k, op);
    auto m = m_from_b(k, b);
    CHECK(m.table == op.table);
  }
}

TEST_CASE("insert_op: identity inner leaves outer unchanged") {
  F5 k(5);
  GradedSpace sp;
  sp.basis = {{"x", 1}, {"y", 2}, {"z", 0}};
  MultilinearOp<F5> outer;
  outer.arity = 2;
  outer.degree = 1;
  outer.inputs = {sp, sp};
  outer.output = sp;
  outer.table[{0, 0}] = {{1, k.one()}};
  outer.table[{2, 0}] = {{0, k.from_int(3)}};

  MultilinearOp<F5> idop;  // arity-1 degree-0 identity table
  idop.arity = 1;
  idop.degree = 0;
  idop.inputs = {sp};
  idop.output = sp;
  for (int l = 0; l < 3; ++l) idop.table[{l}] = {{l, k.one()}};

  for (int pos = 0; pos < 2; ++pos) {
    auto r = insert_op(k, outer, idop, pos);
    CHECK(r.table == outer.table);
    CHECK(r.degree == 1);
  }
}

TEST_CASE("insert_op koszul sign at position 0 vs 1") {
  // outer arity 2, inner arity 2 (both degree 1): inserting at the right
  // slot (position 0) passes no arguments; at the left slot (position 1)
  // the inner op passes nothing either, but at position 0 the sign comes
  // from the arguments left of the block, i.e. the slot-1 argument.
  F5 k(5);
  GradedSpace sp;
  sp.basis = {{"p", 1}, {"q", 2}, {"r", 0}, {"s", 3}};
  MultilinearOp<F5> outer, inner;
  outer.arity = inner.arity = 2;
  outer.degree = inner.degree = 1;
  outer.inputs = inner.inputs = {sp, sp};
  outer.output = inner.output = sp;
  inner.table[{0, 0}] = {{3, k.one()}};  // c(p,p) = s
  outer.table[{3, 0}] = {{2, k.one()}};  // d(s then p) = r
  outer.table[{3, 1}] = {{2, k.one()}};  // d(s then q) = r
  outer.table[{0, 3}] = {{2, k.one()}};  // d(p then s) = r

  // inner at position 0: the degree-1 inner passes the arguments left of the
  // block, i.e. the outer's slot-1 argument
  auto r0 = insert_op(k, outer, inner, 0);
  REQUIRE(r0.table.count({0, 0, 0}));
  CHECK(r0.table[{0, 0, 0}].at(2) == k.one());  // sdeg p = 0: sign +1
  REQUIRE(r0.table.count({0, 0, 1}));
  CHECK(r0.table[{0, 0, 1}].at(2) == k.from_int(-1));  // sdeg q = 1: sign -1

  // inner at position 1 (leftmost slot): nothing to pass, sign +1
  auto r1 = insert_op(k, outer, inner, 1);
  REQUIRE(r1.table.count({0, 0, 0}));
  CHECK(r1.table[{0, 0, 0}].at(2) == k.one());
}

TEST_CASE("operadic associativity of disjoint insertions") {
  // inserting into disjoint slots in either order agrees up to the Koszul
  // sign of the two inner operations passing each other; with both inners of
  // degree 1 the results differ by the sign of one inner passing the other's
  // arguments and output, which the table machinery must reproduce exactly.
  F5 k(5);
  Rng rng(17);
  for (int t = 0; t < 12; ++t) {
    GradedSpace sp;
    for (int i = 0; i < 3; ++i) sp.basis.push_back({"e" + std::to_string(i), rng.range(-1, 2)});
    auto rand_op = [&](int arity, int degree) {
      MultilinearOp<F5> op;
      op.arity = arity;
      op.degree = degree;
      op.inputs.assign(arity, sp);
      op.output = sp;
      for (int e = 0; e < 6; ++e) {
        std::vector<int> key(arity);
        for (auto& x : key) x = rng.range(0, 2);
        int want = degree;
        for (int j : key) want += sp.degree_of(j) - 1;
        for (int l = 0; l < 3; ++l)
          if (sp.degree_of(l) - 1 == want) op.table[key][l] = k.from_int(rng.range(1, 4));
      }
      for (auto it = op.table.begin(); it != op.table.end();)
        it = it->second.empty() ? op.table.erase(it) : std::next(it);
      return op;
    };
    auto outer = rand_op(3, 1);
    auto in1 = rand_op(2, 1);
    auto in2 = rand_op(2, 1);
    // slots 0 and 2 of the arity-3 outer are disjoint; after inserting in1 at
    // slot 0, in2's slot shifts to 3 ... insert at 2 first then 0 stays 0.
    auto a = insert_op(k, insert_op(k, outer, in2, 2), in1, 0);
    auto b = insert_op(k, insert_op(k, outer, in1, 0), in2, 3);
    // in2 (degree 1) moved past in1's block: arguments of in1 are replaced by
    // its output, net degree change is (1) so the discrepancy sign is
    // (-1)^{|in2| * 1}: compare b against a with that twist applied per key.
    // Both orders must agree entry-by-entry up to the global Koszul rule;
    // verify via the direct relation a = -b when both inners are odd and the
    // blocks are disjoint with in1 to the right of in2.
    for (auto& [key, val] : a.table) {
      auto it = b.table.find(key);
      REQUIRE(it != b.table.end());
      for (auto& [l, c] : val) CHECK(k.add(c, it->second.at(l)) == k.zero());
    }
    CHECK(a.table.size() == b.table.size());
  }
}
