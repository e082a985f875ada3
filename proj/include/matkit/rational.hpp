// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "matkit/errors.hpp"

namespace matkit {

// Exact rational with 64-bit components and 128-bit intermediates.  All
// density thresholds in this library stay tiny, so no arbitrary precision
// is needed; overflow would throw via the checked constructor.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
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

  friend Rational operator*(const Rational& a, const Rational& b) {
    return checked(static_cast<__int128>(a.num) * b.num,
                   static_cast<__int128>(a.den) * b.den);
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return checked(static_cast<__int128>(a.num) * b.den +
                       static_cast<__int128>(b.num) * a.den,
                   static_cast<__int128>(a.den) * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(-b.num, b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw DivisionByZero("rational division by zero");
    return checked(static_cast<__int128>(a.num) * b.den,
                   static_cast<__int128>(a.den) * b.num);
  }

  Rational pow(int k) const {
    Rational r(1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  // a < b  iff  a.num*b.den < b.num*a.den; denominators are positive.
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }

  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

 private:
  static Rational checked(__int128 n, __int128 d) {
    __int128 lim = static_cast<__int128>(INT64_MAX);
    if (n > lim || n < -lim || d > lim || d < -lim)
      throw UnsupportedSize("rational overflow");
    Rational r;
    r.num = static_cast<long long>(n);
    r.den = static_cast<long long>(d);
    r.normalize();
    return r;
  }
};

// Decides a*phi >= b for integers with a >= 0, where phi is the golden
// ratio.  phi is the positive root of x^2 = x + 1, so for b > 0 the claim
// is equivalent to (b/a)^2 <= b/a + 1, i.e. b^2 <= a*b + a^2.  Equality
// never occurs for a > 0 since phi is irrational, so the comparison is
// exact with no tolerance.
inline bool phi_dominates(long long a, long long b) {
  if (b <= 0) return true;
  if (a <= 0) return false;
  __int128 aa = a, bb = b;
  return bb * bb <= aa * bb + aa * aa;
}

// Fibonacci with F(0) = 0, F(1) = 1.
inline long long fibonacci(int n) {
  long long a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    long long t = a + b;
    a = b;
    b = t;
  }
  return a;
}

// Decides eps_n * phi^s >= eps_m exactly, using phi^s = F(s)*phi + F(s-1).
// The inequality becomes eps_n*F(s)*phi >= eps_m - eps_n*F(s-1).
inline bool phi_power_bound_holds(long long eps_n, int s, long long eps_m) {
  if (s == 0) return eps_n >= eps_m;
  long long a = eps_n * fibonacci(s);
  long long b = eps_m - eps_n * fibonacci(s - 1);
  return phi_dominates(a, b);
}

}  // namespace matkit
