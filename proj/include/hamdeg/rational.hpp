#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hamdeg {

// Exact rational with small operands. Thresholds like eta*n stay integer
// arithmetic, so condition checks never touch floating point.
struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long v) : num(v), den(1) {}
  Frac(long long p, long long q) : num(p), den(q) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Frac: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Frac operator+(const Frac& a, const Frac& b) {
    return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Frac operator-(const Frac& a, const Frac& b) {
    return Frac(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Frac operator*(const Frac& a, const Frac& b) {
    return Frac(a.num * b.num, a.den * b.den);
  }

  friend bool operator<(const Frac& a, const Frac& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
  friend bool operator<=(const Frac& a, const Frac& b) { return !(b < a); }
  friend bool operator>=(const Frac& a, const Frac& b) { return !(a < b); }
  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

  long long ceil_mul(long long n) const {
    // ceil(num * n / den); operands small enough for int64 after widening.
    __int128 p = (__int128)num * n;
    long long q = den;
    long long r = (long long)(p >= 0 ? (p + q - 1) / q : p / q);
    return r;
  }
  long long floor_mul(long long n) const {
    __int128 p = (__int128)num * n;
    long long q = den;
    return (long long)(p >= 0 ? p / q : -((-p + q - 1) / q));
  }

  double to_double() const { return (double)num / (double)den; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Accepts "p/q", plain integers, and short decimals ("0.3" -> 3/10).
  static Frac parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Frac: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      long long p = std::stoll(s.substr(0, slash));
      long long q = std::stoll(s.substr(slash + 1));
      return Frac(p, q);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
      if (tail.size() > 15) throw std::invalid_argument("Frac: too many decimals");
      long long q = 1;
      for (size_t i = 0; i < tail.size(); ++i) q *= 10;
      long long whole = head.empty() || head == "-" ? 0 : std::stoll(head);
      long long frac = tail.empty() ? 0 : std::stoll(tail);
      bool neg = !head.empty() && head[0] == '-';
      long long p = (neg ? -1 : 1) * ((whole < 0 ? -whole : whole) * q + frac);
      return Frac(p, q);
    }
    return Frac(std::stoll(s));
  }
};

}  // namespace hamdeg
