#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "salem/error.hpp"

namespace salem {

// Exact rational arithmetic for interval-mass queries. Numerators and
// denominators stay within long long after gcd reduction; intermediates go
// through __int128. Construction scales (N_j up to ~2^48) and dyadic doubles
// both fit comfortably.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    require(den != 0, Err::InvalidArgument, "rational with zero denominator");
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

  static Rat reduce128(__int128 n, __int128 d) {
    require(d != 0, Err::InvalidArgument, "rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
    require(n <= lim && n >= -lim && d <= lim, Err::InvalidArgument,
            "rational overflow");
    Rat r;
    r.num = static_cast<long long>(n);
    r.den = static_cast<long long>(d);
    return r;
  }

  // Exact conversion: every finite double is a dyadic rational.
  static Rat from_double(double x) {
    require(std::isfinite(x), Err::InvalidArgument, "non-finite bound");
    if (x == 0.0) return Rat(0);
    int e = 0;
    double m = std::frexp(x, &e);           // x = m * 2^e, |m| in [0.5, 1)
    auto m53 = static_cast<long long>(std::ldexp(m, 53));
    e -= 53;
    while (m53 != 0 && (m53 & 1) == 0) {
      m53 >>= 1;
      ++e;
    }
    if (e >= 0) {
      require(e < 62, Err::InvalidArgument, "double too large for rational");
      return reduce128(static_cast<__int128>(m53) << e, 1);
    }
    require(-e < 127 - 53, Err::InvalidArgument, "double too small for rational");
    return reduce128(m53, static_cast<__int128>(1) << (-e));
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return reduce128(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                     static_cast<__int128>(a.den) * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return reduce128(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                     static_cast<__int128>(a.den) * b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return reduce128(static_cast<__int128>(a.num) * b.num,
                     static_cast<__int128>(a.den) * b.den);
  }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rat& a, const Rat& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace salem
