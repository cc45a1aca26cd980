// Exact sparse linear algebra: reduced row echelon form, deterministic
// solves, kernel/image/quotient bases.  Row reduction is fraction-free only
// in the sense of exact field arithmetic; all basis choices are canonical
// (pivots in increasing column order, pivot entries normalized to 1) so
// every construction downstream is reproducible.
#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "antw/scalar.hpp"

namespace antw {

template <class F>
using Vec = std::vector<typename F::elem>;

template <class F>
struct SparseMatrix {
  int rows = 0, cols = 0;
  std::map<std::pair<int, int>, typename F::elem> entries;  // zero entries absent

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c) {}

  void set(const F& k, int r, int c, typename F::elem v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("matrix index");
    if (k.is_zero(v))
      entries.erase({r, c});
    else
      entries[{r, c}] = std::move(v);
  }
  typename F::elem get(const F& k, int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? k.zero() : it->second;
  }

  Vec<F> apply(const F& k, const Vec<F>& x) const {
    Vec<F> y(rows, k.zero());
    for (auto& [rc, v] : entries) y[rc.first] = k.add(y[rc.first], k.mul(v, x[rc.second]));
    return y;
  }
};

// Rows of a reduced echelon form, pivot columns strictly increasing.
template <class F>
struct Echelon {
  int cols = 0;
  std::vector<Vec<F>> rows;   // each normalized, fully reduced
  std::vector<int> pivots;    // pivot column of each row

  int rank() const { return int(rows.size()); }

  // Reduce v against the stored rows (in place); returns the reduced vector.
  Vec<F> reduce(const F& k, Vec<F> v) const {
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& c = v[pivots[i]];
      if (k.is_zero(c)) continue;
      auto f = c;
      for (int j = pivots[i]; j < cols; ++j) v[j] = k.sub(v[j], k.mul(f, rows[i][j]));
    }
    return v;
  }

  // Insert v, keeping reduced echelon shape.  Returns false if v reduced to 0.
  bool insert(const F& k, Vec<F> v) {
    v = reduce(k, v);
    int p = -1;
    for (int j = 0; j < cols; ++j)
      if (!k.is_zero(v[j])) {
        p = j;
        break;
      }
    if (p < 0) return false;
    auto inv = k.inv(v[p]);
    for (int j = p; j < cols; ++j) v[j] = k.mul(v[j], inv);
    // back-substitute into existing rows, then place in pivot order
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& c = rows[i][p];
      if (k.is_zero(c)) continue;
      auto f = c;
      for (int j = p; j < cols; ++j) rows[i][j] = k.sub(rows[i][j], k.mul(f, v[j]));
    }
    size_t at = 0;
    while (at < pivots.size() && pivots[at] < p) ++at;
    rows.insert(rows.begin() + at, std::move(v));
    pivots.insert(pivots.begin() + at, p);
    return true;
  }

  bool contains(const F& k, const Vec<F>& v) const {
    auto r = reduce(k, v);
    for (auto& x : r)
      if (!k.is_zero(x)) return false;
    return true;
  }
};

template <class F>
Echelon<F> echelon_from_rows(const F& k, int cols, const std::vector<Vec<F>>& rws) {
  Echelon<F> e;
  e.cols = cols;
  for (auto& r : rws) e.insert(k, r);
  return e;
}

// A subspace of k^ambient given by its canonical reduced echelon basis.
template <class F>
struct SubspaceBasis {
  int ambient = 0;
  Echelon<F> ech;

  int dim() const { return ech.rank(); }
  bool contains(const F& k, const Vec<F>& v) const { return ech.contains(k, v); }
};

template <class F>
SubspaceBasis<F> span_of(const F& k, int ambient, const std::vector<Vec<F>>& gens) {
  SubspaceBasis<F> s;
  s.ambient = ambient;
  s.ech.cols = ambient;
  for (auto& g : gens) s.ech.insert(k, g);
  return s;
}

// Gaussian data for A: echelon form of [A | I] rows is overkill here; we keep
// the straightforward augmented elimination for solving A x = b.
template <class F>
struct RowReduced {
  int rows = 0, cols = 0;
  std::vector<Vec<F>> r;      // reduced rows of A
  std::vector<Vec<F>> ops;    // same row operations applied to identity
  std::vector<int> pivots;    // pivot col per reduced row (only rank rows kept)
};

template <class F>
RowReduced<F> row_reduce(const F& k, const SparseMatrix<F>& A) {
  RowReduced<F> R;
  R.rows = A.rows;
  R.cols = A.cols;
  std::vector<Vec<F>> M(A.rows, Vec<F>(A.cols, k.zero()));
  for (auto& [rc, v] : A.entries) M[rc.first][rc.second] = v;
  std::vector<Vec<F>> E(A.rows, Vec<F>(A.rows, k.zero()));
  for (int i = 0; i < A.rows; ++i) E[i][i] = k.one();

  int lead = 0;
  for (int col = 0; col < A.cols && lead < A.rows; ++col) {
    int piv = -1;
    for (int i = lead; i < A.rows; ++i)
      if (!k.is_zero(M[i][col])) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[piv], M[lead]);
    std::swap(E[piv], E[lead]);
    auto inv = k.inv(M[lead][col]);
    for (int j = 0; j < A.cols; ++j) M[lead][j] = k.mul(M[lead][j], inv);
    for (int j = 0; j < A.rows; ++j) E[lead][j] = k.mul(E[lead][j], inv);
    for (int i = 0; i < A.rows; ++i) {
      if (i == lead) continue;
      const auto c = M[i][col];
      if (k.is_zero(c)) continue;
      for (int j = 0; j < A.cols; ++j) M[i][j] = k.sub(M[i][j], k.mul(c, M[lead][j]));
      for (int j = 0; j < A.rows; ++j) E[i][j] = k.sub(E[i][j], k.mul(c, E[lead][j]));
    }
    R.pivots.push_back(col);
    ++lead;
  }
  M.resize(lead);
  E.resize(A.rows);  // keep all op rows: rows >= lead witness inconsistency
  R.r = std::move(M);
  R.ops = std::move(E);
  return R;
}

// Deterministic solve: free variables are set to zero under the fixed column
// order, so the particular solution has minimal support for that order.
template <class F>
std::optional<Vec<F>> solve_linear(const F& k, const SparseMatrix<F>& A, const Vec<F>& b) {
  if (int(b.size()) != A.rows) throw std::invalid_argument("solve_linear: dimension mismatch");
  auto R = row_reduce(k, A);
  // transformed rhs
  Vec<F> tb(A.rows, k.zero());
  for (int i = 0; i < A.rows; ++i) {
    auto s = k.zero();
    for (int j = 0; j < A.rows; ++j)
      if (!k.is_zero(R.ops[i][j])) s = k.add(s, k.mul(R.ops[i][j], b[j]));
    tb[i] = s;
  }
  int rank = int(R.pivots.size());
  for (int i = rank; i < A.rows; ++i)
    if (!k.is_zero(tb[i])) return std::nullopt;
  Vec<F> x(A.cols, k.zero());
  for (int i = 0; i < rank; ++i) x[R.pivots[i]] = tb[i];
  return x;
}

// Canonical reduced echelon basis of { x : A x = 0 }.
template <class F>
SubspaceBasis<F> kernel_basis(const F& k, const SparseMatrix<F>& A) {
  auto R = row_reduce(k, A);
  std::vector<bool> is_pivot(A.cols, false);
  for (int p : R.pivots) is_pivot[p] = true;
  std::vector<Vec<F>> gens;
  for (int c = 0; c < A.cols; ++c) {
    if (is_pivot[c]) continue;
    Vec<F> v(A.cols, k.zero());
    v[c] = k.one();
    for (size_t i = 0; i < R.pivots.size(); ++i) v[R.pivots[i]] = k.neg(R.r[i][c]);
    gens.push_back(std::move(v));
  }
  return span_of(k, A.cols, gens);
}

// Canonical basis of the column space expressed in row-vector form, i.e. the
// span of { A e_c } inside k^rows.
template <class F>
SubspaceBasis<F> image_basis(const F& k, const SparseMatrix<F>& A) {
  std::vector<Vec<F>> cols(A.cols, Vec<F>(A.rows, k.zero()));
  for (auto& [rc, v] : A.entries) cols[rc.second][rc.first] = v;
  return span_of(k, A.rows, cols);
}

// Representatives of big/sub together with coset reduction data.
template <class F>
struct QuotientBasis {
  int ambient = 0;
  SubspaceBasis<F> sub;                 // the subspace being divided out
  std::vector<Vec<F>> representatives;  // echelon representatives of big/sub

  // Canonical coset representative of v (idempotent).
  Vec<F> reduce(const F& k, const Vec<F>& v) const { return sub.ech.reduce(k, v); }

  int dim() const { return int(representatives.size()); }

  // Coordinates of [v] in the representative basis; nullopt if v not in big.
  std::optional<Vec<F>> coordinates(const F& k, const Vec<F>& v) const {
    Vec<F> r = reduce(k, v);
    // representatives are mutually reduced echelon rows; read coordinates off pivots
    Vec<F> coords(representatives.size(), k.zero());
    for (size_t i = 0; i < representatives.size(); ++i) {
      // representative i has a unique pivot; use it to read the coefficient
      int p = -1;
      for (int j = 0; j < ambient; ++j)
        if (!k.is_zero(representatives[i][j])) {
          p = j;
          break;
        }
      coords[i] = r[p];
    }
    // check the residual is zero
    Vec<F> acc = r;
    for (size_t i = 0; i < representatives.size(); ++i)
      for (int j = 0; j < ambient; ++j)
        acc[j] = k.sub(acc[j], k.mul(coords[i], representatives[i][j]));
    for (auto& x : acc)
      if (!k.is_zero(x)) return std::nullopt;
    return coords;
  }
};

// sub must be contained in big (verified).
template <class F>
QuotientBasis<F> quotient_basis(const F& k, const SubspaceBasis<F>& sub, const SubspaceBasis<F>& big) {
  if (sub.ambient != big.ambient) throw std::invalid_argument("quotient_basis: ambient mismatch");
  for (auto& r : sub.ech.rows)
    if (!big.contains(k, r)) throw std::invalid_argument("quotient_basis: sub not contained in big");
  QuotientBasis<F> q;
  q.ambient = big.ambient;
  q.sub = sub;
  Echelon<F> reps;
  reps.cols = big.ambient;
  for (auto& r : big.ech.rows) {
    auto red = sub.ech.reduce(k, r);
    reps.insert(k, red);
  }
  q.representatives = reps.rows;
  return q;
}

}  // namespace antw
