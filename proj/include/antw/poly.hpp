// Sparse multivariate polynomials k[x_1..x_n].  Monomials are exponent
// vectors of fixed length; the coefficient map drops zeros eagerly.
#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "antw/scalar.hpp"

namespace antw {

using Monomial = std::vector<int>;

template <class F>
struct Poly {
  int nvars = 0;
  std::map<Monomial, typename F::elem> terms;

  Poly() = default;
  explicit Poly(int n) : nvars(n) {}

  static Poly constant(const F& k, int n, typename F::elem c) {
    Poly p(n);
    if (!k.is_zero(c)) p.terms[Monomial(n, 0)] = c;
    return p;
  }
  static Poly variable(const F& k, int n, int i) {
    Poly p(n);
    Monomial m(n, 0);
    m[i] = 1;
    p.terms[m] = k.one();
    return p;
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(const F& k, const Monomial& m, typename F::elem c) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      if (!k.is_zero(c)) terms[m] = c;
    } else {
      it->second = k.add(it->second, c);
      if (k.is_zero(it->second)) terms.erase(it);
    }
  }

  Poly plus(const F& k, const Poly& o) const {
    Poly r = *this;
    for (auto& [m, c] : o.terms) r.add_term(k, m, c);
    return r;
  }
  Poly scaled(const F& k, const typename F::elem& c) const {
    Poly r(nvars);
    if (k.is_zero(c)) return r;
    for (auto& [m, v] : terms) r.terms[m] = k.mul(v, c);
    return r;
  }
  Poly neg(const F& k) const { return scaled(k, k.neg(k.one())); }
  Poly times(const F& k, const Poly& o) const {
    Poly r(nvars);
    for (auto& [m1, c1] : terms)
      for (auto& [m2, c2] : o.terms) {
        Monomial m(nvars);
        for (int i = 0; i < nvars; ++i) m[i] = m1[i] + m2[i];
        r.add_term(k, m, k.mul(c1, c2));
      }
    return r;
  }

  Poly derivative(const F& k, int i) const {
    Poly r(nvars);
    for (auto& [m, c] : terms) {
      if (m[i] == 0) continue;
      Monomial d = m;
      d[i] -= 1;
      r.add_term(k, d, k.mul(c, k.from_int(m[i])));
    }
    return r;
  }

  int total_degree() const {
    int d = 0;
    for (auto& [m, c] : terms) {
      int s = 0;
      for (int e : m) s += e;
      if (s > d) d = s;
    }
    return d;
  }

  // Evaluation at a point: the image in R_lambda = R/((x_i - lambda_i)_i).
  typename F::elem specialize(const F& k, const Vec<F>& lambda) const {
    if (int(lambda.size()) != nvars) throw std::invalid_argument("specialize: arity mismatch");
    auto acc = k.zero();
    for (auto& [m, c] : terms) {
      auto t = c;
      for (int i = 0; i < nvars; ++i)
        for (int e = 0; e < m[i]; ++e) t = k.mul(t, lambda[i]);
      acc = k.add(acc, t);
    }
    return acc;
  }

  bool equals(const F& k, const Poly& o) const {
    (void)k;
    return nvars == o.nvars && terms == o.terms;
  }

  std::string str(const F& k) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms) {
      if (!first) os << " + ";
      first = false;
      os << k.to_string(c);
      for (int i = 0; i < nvars; ++i) {
        if (m[i] == 0) continue;
        os << "*x" << (i + 1);
        if (m[i] > 1) os << "^" << m[i];
      }
    }
    return os.str();
  }
};

// Parse sums of terms like "2*x1^2*x3 - x2 + 5".  Only + - * ^ and x<i>.
template <class F>
Poly<F> parse_poly(const F& k, int nvars, const std::string& text) {
  Poly<F> out(nvars);
  size_t i = 0;
  auto skip = [&] { while (i < text.size() && isspace(text[i])) ++i; };
  skip();
  bool first = true;
  while (i < text.size()) {
    auto sign = k.one();
    skip();
    if (!first || text[i] == '+' || text[i] == '-') {
      if (i >= text.size()) break;
      if (text[i] == '+') {
        ++i;
      } else if (text[i] == '-') {
        sign = k.neg(sign);
        ++i;
      } else if (!first) {
        throw std::invalid_argument("poly parse: expected + or - at position " + std::to_string(i));
      }
    }
    first = false;
    skip();
    auto coeff = k.one();
    Monomial m(nvars, 0);
    bool saw_factor = false;
    while (true) {
      skip();
      if (i < text.size() && (isdigit(text[i]))) {
        size_t j = i;
        while (j < text.size() && (isdigit(text[j]) || text[j] == '/')) ++j;
        coeff = k.mul(coeff, k.from_string(text.substr(i, j - i)));
        i = j;
        saw_factor = true;
      } else if (i < text.size() && text[i] == 'x') {
        ++i;
        size_t j = i;
        while (j < text.size() && isdigit(text[j])) ++j;
        if (j == i) throw std::invalid_argument("poly parse: variable index expected");
        int idx = std::stoi(text.substr(i, j - i)) - 1;
        if (idx < 0 || idx >= nvars) throw std::invalid_argument("poly parse: variable out of range");
        i = j;
        int e = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip();
          j = i;
          while (j < text.size() && isdigit(text[j])) ++j;
          e = std::stoi(text.substr(i, j - i));
          i = j;
        }
        m[idx] += e;
        saw_factor = true;
      } else {
        break;
      }
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!saw_factor) throw std::invalid_argument("poly parse: empty term");
    out.add_term(k, m, k.mul(sign, coeff));
    skip();
  }
  return out;
}

}  // namespace antw
