#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <iosfwd>

namespace daha {

// Small exact fraction over int64. Used for exponents, root/weight
// coordinates and crossing parameters; coefficients of polynomials use
// GMP rationals instead. Overflow is checked via __int128 intermediates.
struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long n) : num(n), den(1) {}
  Frac(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("Frac: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  static Frac make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Frac: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n, b = d, t;
    while (b) { t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("Frac overflow");
    Frac f; f.num = (long long)n; f.den = (long long)d; return f;
  }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }
  long long floor_ll() const {
    long long q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
  }

  friend Frac operator+(const Frac& a, const Frac& b) {
    return make((__int128)a.num * b.den + (__int128)b.num * a.den,
                (__int128)a.den * b.den);
  }
  friend Frac operator-(const Frac& a, const Frac& b) {
    return make((__int128)a.num * b.den - (__int128)b.num * a.den,
                (__int128)a.den * b.den);
  }
  friend Frac operator*(const Frac& a, const Frac& b) {
    return make((__int128)a.num * b.num, (__int128)a.den * b.den);
  }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.num == 0) throw std::domain_error("Frac: division by zero");
    return make((__int128)a.num * b.den, (__int128)a.den * b.num);
  }
  Frac operator-() const { Frac f; f.num = -num; f.den = den; return f; }
  Frac& operator+=(const Frac& o) { *this = *this + o; return *this; }
  Frac& operator-=(const Frac& o) { *this = *this - o; return *this; }
  Frac& operator*=(const Frac& o) { *this = *this * o; return *this; }
  Frac& operator/=(const Frac& o) { *this = *this / o; return *this; }

  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
  friend bool operator<(const Frac& a, const Frac& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
  friend bool operator<=(const Frac& a, const Frac& b) { return !(b < a); }
  friend bool operator>=(const Frac& a, const Frac& b) { return !(a < b); }

  int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Parses "p", "p/q" or "-p/q"; throws on malformed input.
  static Frac parse(const std::string& s);
};

std::ostream& operator<<(std::ostream& os, const Frac& f);

// Fractional part in [0,1); used for root-of-unity rotation numbers.
inline Frac frac_mod1(const Frac& f) {
  long long fl = f.floor_ll();
  return f - Frac(fl);
}

}  // namespace daha
