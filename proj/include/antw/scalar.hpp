// Exact scalar arithmetic: arbitrary-precision rationals and prime fields.
// Every algorithm in this library is parametrized over a field context F
// providing F::elem and the operations below; contexts are cheap to copy.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace antw {

struct RationalField {
  using elem = mpq_class;

  static elem zero() { return elem(0); }
  static elem one() { return elem(1); }
  static elem from_int(long n) { return elem(n); }
  static elem from_string(const std::string& s) {
    elem x(s);
    x.canonicalize();
    return x;
  }

  static bool is_zero(const elem& a) { return sgn(a) == 0; }
  static elem add(const elem& a, const elem& b) { return a + b; }
  static elem sub(const elem& a, const elem& b) { return a - b; }
  static elem mul(const elem& a, const elem& b) { return a * b; }
  static elem neg(const elem& a) { return -a; }
  static elem inv(const elem& a) {
    if (is_zero(a)) throw std::domain_error("division by zero");
    return elem(1) / a;
  }
  static elem div(const elem& a, const elem& b) { return mul(a, inv(b)); }
  static std::string to_string(const elem& a) { return a.get_str(); }
  std::string describe() const { return "rational"; }
  bool operator==(const RationalField&) const { return true; }
};

// F_p for odd primes p < 2^31.  Elements are canonical residues in [0, p).
struct PrimeField {
  uint32_t p;
  using elem = uint32_t;

  explicit PrimeField(uint32_t prime) : p(prime) {
    if (prime < 2) throw std::domain_error("modulus must be a prime >= 2");
    if (prime >= (uint32_t(1) << 31)) throw std::domain_error("modulus too large");
    for (uint64_t d = 2; d * d <= prime; ++d)
      if (prime % d == 0) throw std::domain_error("modulus is not prime");
  }

  elem zero() const { return 0; }
  elem one() const { return 1 % p; }
  elem from_int(long n) const {
    long r = n % long(p);
    if (r < 0) r += p;
    return elem(r);
  }
  elem from_string(const std::string& s) const { return from_int(std::stol(s)); }

  bool is_zero(const elem& a) const { return a == 0; }
  elem add(const elem& a, const elem& b) const {
    uint64_t s = uint64_t(a) + b;
    return s >= p ? elem(s - p) : elem(s);
  }
  elem sub(const elem& a, const elem& b) const { return add(a, neg(b)); }
  elem mul(const elem& a, const elem& b) const { return elem((uint64_t(a) * b) % p); }
  elem neg(const elem& a) const { return a == 0 ? 0 : p - a; }
  elem inv(const elem& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    // extended euclid on (a, p)
    int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      int64_t q = r / nr;
      int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p;
    return elem(t);
  }
  elem div(const elem& a, const elem& b) const { return mul(a, inv(b)); }
  std::string to_string(const elem& a) const { return std::to_string(a); }
  std::string describe() const { return "prime " + std::to_string(p); }
  bool operator==(const PrimeField& o) const { return p == o.p; }
};

}  // namespace antw
