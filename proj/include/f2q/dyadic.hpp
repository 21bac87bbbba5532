#pragma once

#include <cstdint>
#include <string>

#include "f2q/pauli.hpp"

namespace f2q {

/// Exact Gaussian dyadic number (re + im*i) / 2^k, kept normalized (k = 0
/// or at least one of re, im odd). Closed under the arithmetic needed for
/// ladder-operator polynomials and statevector checks.
struct Dyadic {
  long long re = 0;
  long long im = 0;
  unsigned k = 0;

  Dyadic() = default;
  Dyadic(long long r, long long i, unsigned den_log2) : re(r), im(i), k(den_log2) {
    normalize();
  }

  static Dyadic zero() { return {}; }
  static Dyadic one() { return {1, 0, 0}; }
  static Dyadic half() { return {1, 0, 1}; }

  bool is_zero() const { return re == 0 && im == 0; }

  void normalize() {
    if (re == 0 && im == 0) {
      k = 0;
      return;
    }
    while (k > 0 && re % 2 == 0 && im % 2 == 0) {
      re /= 2;
      im /= 2;
      --k;
    }
  }

  Dyadic operator+(const Dyadic& o) const {
    unsigned kk = k > o.k ? k : o.k;
    long long sa = 1LL << (kk - k), sb = 1LL << (kk - o.k);
    return Dyadic(re * sa + o.re * sb, im * sa + o.im * sb, kk);
  }
  Dyadic operator-(const Dyadic& o) const {
    unsigned kk = k > o.k ? k : o.k;
    long long sa = 1LL << (kk - k), sb = 1LL << (kk - o.k);
    return Dyadic(re * sa - o.re * sb, im * sa - o.im * sb, kk);
  }
  Dyadic operator*(const Dyadic& o) const {
    return Dyadic(re * o.re - im * o.im, re * o.im + im * o.re, k + o.k);
  }
  Dyadic operator-() const { return Dyadic(-re, -im, k); }

  Dyadic times_phase(Phase p) const {
    switch (p.exponent()) {
      case 0: return *this;
      case 1: return Dyadic(-im, re, k);
      case 2: return Dyadic(-re, -im, k);
      default: return Dyadic(im, -re, k);
    }
  }
  Dyadic conj() const { return Dyadic(re, -im, k); }

  bool operator==(const Dyadic&) const = default;

  std::string str() const {
    if (is_zero()) return "0";
    std::string num;
    if (im == 0) {
      num = std::to_string(re);
    } else if (re == 0) {
      if (im == 1)
        num = "i";
      else if (im == -1)
        num = "-i";
      else
        num = std::to_string(im) + "i";
    } else {
      num = "(" + std::to_string(re) + (im > 0 ? "+" : "-");
      long long a = im > 0 ? im : -im;
      if (a != 1) num += std::to_string(a);
      num += "i)";
    }
    if (k == 0) return num;
    return num + "/" + std::to_string(1LL << k);
  }
};

}  // namespace f2q
