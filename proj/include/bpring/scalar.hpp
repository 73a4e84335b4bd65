#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_p), p prime.
//
// An element is stored as p rational coefficients c[0..p-1] of
// 1, zeta, ..., zeta^(p-1).  Because 1 + zeta + ... + zeta^(p-1) = 0 the
// representation is made unique by forcing c[p-1] = 0 (subtract c[p-1] from
// every entry).  Equality is then plain component comparison.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bpring/error.hpp"

namespace bpring {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary precision rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorKind::division_by_zero, "rational with zero denominator");
    value_ = boost::multiprecision::cpp_rational(num, den);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  int sign() const { return value_.sign(); }

  Rational operator-() const { return Rational(-value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::division_by_zero, "rational division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << numerator();
    if (denominator() != 1) os << '/' << denominator();
    return os.str();
  }

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
  boost::multiprecision::cpp_rational value_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline void require_prime(long long p) {
  if (!is_prime(p)) throw Error(ErrorKind::invalid_input, "p must be prime (got " + std::to_string(p) + ")");
}

/// Nonnegative residue of k modulo n.
inline int mod(long long k, int n) {
  long long r = k % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

/// Multiplicative inverse of k modulo the prime p; k must be nonzero mod p.
inline int inverse_mod(long long k, int p) {
  int a = mod(k, p);
  if (a == 0) throw Error(ErrorKind::division_by_zero, "no inverse of 0 mod " + std::to_string(p));
  // Fermat: a^(p-2)
  long long result = 1, base = a;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<int>(result);
}

class CyclotomicScalar {
 public:
  /// The zero element of Q(zeta_p).
  explicit CyclotomicScalar(int p) : p_(p), c_(static_cast<std::size_t>(p)) { require_prime(p); }

  CyclotomicScalar(int p, const Rational& r) : CyclotomicScalar(p) { c_[0] = r; }

  /// Builds from p coefficients (not necessarily canonical).
  static CyclotomicScalar from_coeffs(int p, std::vector<Rational> coeffs) {
    if (static_cast<int>(coeffs.size()) != p) {
      throw Error(ErrorKind::invalid_input, "expected " + std::to_string(p) + " coefficients");
    }
    CyclotomicScalar x(p);
    x.c_ = std::move(coeffs);
    x.canonicalize();
    return x;
  }

  static CyclotomicScalar one(int p) { return CyclotomicScalar(p, Rational(1)); }

  int prime() const { return p_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& v : c_) {
      if (!v.is_zero()) return false;
    }
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (!c_[i].is_zero()) return false;
    }
    return true;
  }

  bool is_one() const { return is_rational() && c_[0] == Rational(1); }

  CyclotomicScalar operator-() const {
    CyclotomicScalar r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
  }

  CyclotomicScalar& operator+=(const CyclotomicScalar& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    }
    return *this;
  }

  CyclotomicScalar& operator-=(const CyclotomicScalar& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
    }
    return *this;
  }

  CyclotomicScalar& operator*=(const Rational& r) {
    if (r.is_zero()) {
      for (auto& v : c_) v = Rational(0);
    } else if (r != Rational(1)) {
      for (auto& v : c_) {
        if (!v.is_zero()) v *= r;
      }
    }
    return *this;
  }

  friend CyclotomicScalar operator+(CyclotomicScalar a, const CyclotomicScalar& b) { return a += b; }
  friend CyclotomicScalar operator-(CyclotomicScalar a, const CyclotomicScalar& b) { return a -= b; }
  friend CyclotomicScalar operator*(CyclotomicScalar a, const Rational& r) { return a *= r; }
  friend CyclotomicScalar operator*(const Rational& r, CyclotomicScalar a) { return a *= r; }

  friend CyclotomicScalar operator*(const CyclotomicScalar& a, const CyclotomicScalar& b) {
    a.check_same(b);
    if (auto m = a.monomial()) return b.rotated(m->first) *= m->second;
    if (auto m = b.monomial()) return a.rotated(m->first) *= m->second;
    const int p = a.p_;
    CyclotomicScalar r(p);
    for (int i = 0; i < p; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; j < p; ++j) {
        if (b.c_[j].is_zero()) continue;
        r.c_[(i + j) % p] += a.c_[i] * b.c_[j];
      }
    }
    r.canonicalize();
    return r;
  }

  CyclotomicScalar& operator*=(const CyclotomicScalar& o) { return *this = *this * o; }

  /// Multiplication by zeta^k.
  CyclotomicScalar times_root(long long k) const { return rotated(mod(k, p_)); }

  /// Image under the Galois automorphism zeta -> zeta^j (j a unit mod p).
  CyclotomicScalar galois(int j) const {
    CyclotomicScalar r(p_);
    for (int i = 0; i < p_; ++i) r.c_[static_cast<std::size_t>(mod(static_cast<long long>(i) * j, p_))] = c_[i];
    r.canonicalize();
    return r;
  }

  /// Multiplicative inverse, computed as the product of the nontrivial Galois
  /// conjugates divided by the (rational) field norm.
  CyclotomicScalar inv() const {
    if (is_zero()) throw Error(ErrorKind::division_by_zero, "inverse of zero in Q(zeta_p)");
    if (is_rational()) return CyclotomicScalar(p_, Rational(1) / c_[0]);
    if (auto m = monomial()) return CyclotomicScalar(p_, Rational(1) / m->second).times_root(-m->first);
    CyclotomicScalar conj = one(p_);
    for (int j = 2; j < p_; ++j) conj *= galois(j);
    CyclotomicScalar norm = *this * conj;
    if (!norm.is_rational()) throw Error(ErrorKind::internal_error, "field norm is not rational");
    return conj *= Rational(1) / norm.c_[0];
  }

  friend CyclotomicScalar operator/(const CyclotomicScalar& a, const CyclotomicScalar& b) { return a * b.inv(); }

  friend bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i < p_; ++i) {
      if (c_[i].is_zero()) continue;
      std::string coef = c_[i].to_string();
      bool neg = c_[i].sign() < 0;
      if (neg) coef.erase(0, 1);
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      if (i == 0) {
        out += coef;
      } else {
        if (coef != "1") out += coef + "*";
        out += i == 1 ? std::string("z") : "z^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void check_same(const CyclotomicScalar& o) const {
    if (o.p_ != p_) {
      throw Error(ErrorKind::invalid_input,
                  "mismatched cyclotomic fields p=" + std::to_string(p_) + " and p=" + std::to_string(o.p_));
    }
  }

  void canonicalize() {
    const Rational t = c_.back();
    if (t.is_zero()) return;
    for (auto& v : c_) v -= t;
  }

  // (k, c) when the element is c * zeta^k with k < p-1.
  std::optional<std::pair<int, Rational>> monomial() const {
    std::optional<std::pair<int, Rational>> found;
    for (int i = 0; i < p_; ++i) {
      if (c_[i].is_zero()) continue;
      if (found) return std::nullopt;
      found.emplace(i, c_[i]);
    }
    return found;
  }

  CyclotomicScalar rotated(int k) const {
    if (k == 0) return *this;
    CyclotomicScalar r(p_);
    for (int i = 0; i < p_; ++i) r.c_[static_cast<std::size_t>((i + k) % p_)] = c_[i];
    r.canonicalize();
    return r;
  }

  int p_;
  std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const CyclotomicScalar& x) { return os << x.to_string(); }

/// zeta^(k mod p) in canonical form.
inline CyclotomicScalar root_of_unity(int p, long long k) {
  return CyclotomicScalar::one(p).times_root(k);
}

/// k in [0, p) when x == zeta^k exactly.
inline std::optional<int> phase_exponent(const CyclotomicScalar& x) {
  const int p = x.prime();
  const auto& c = x.coeffs();
  int nonzero = 0, at = -1;
  for (int i = 0; i < p; ++i) {
    if (!c[i].is_zero()) {
      ++nonzero;
      at = i;
    }
  }
  if (nonzero == 1 && c[at] == Rational(1)) return at;
  // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
  if (nonzero == p - 1) {
    for (int i = 0; i + 1 < p; ++i) {
      if (c[i] != Rational(-1)) return std::nullopt;
    }
    return p - 1;
  }
  return std::nullopt;
}

}  // namespace bpring
