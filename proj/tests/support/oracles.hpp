#pragma once

// Reference computations used only by the tests. None of these share code
// paths with the library routines they check.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cicrit/exact_arith.hpp"

namespace cicrit::oracle {

/// binom(top, p) for any integer top, as the falling product top(top-1)...(top-p+1)/p!.
inline Rational binom(const Rational& top, unsigned p) {
  Rational num(1);
  Rational den(1);
  for (unsigned i = 0; i < p; ++i) {
    num *= top - Rational(i);
    den *= Rational(i + 1);
  }
  return num / den;
}

/// Element a + b sqrt(D) of Q(sqrt(D)).
struct QuadraticNumber {
  Rational a;
  Rational b;
  Rational disc;

  QuadraticNumber operator*(const QuadraticNumber& o) const {
    return {a * o.a + b * o.b * disc, a * o.b + b * o.a, disc};
  }
  QuadraticNumber operator+(const QuadraticNumber& o) const { return {a + o.a, b + o.b, disc}; }
};

/// sum_{a=0}^{j} z^a zbar^(j-a) for the roots z, zbar = (n +- sqrt(n^2 - 4d))/2,
/// by expanding every monomial in Q(sqrt(n^2 - 4d)).
inline std::vector<Rational> segre_by_expansion(std::int64_t d, std::int64_t n, unsigned j_max) {
  const Rational disc(n * n - 4 * d);
  const QuadraticNumber z{Rational(Integer(n), Integer(2)), Rational(Integer(1), Integer(2)), disc};
  const QuadraticNumber zbar{Rational(Integer(n), Integer(2)), Rational(Integer(-1), Integer(2)), disc};
  const QuadraticNumber one{Rational(1), Rational(0), disc};
  std::vector<QuadraticNumber> zp{one};
  std::vector<QuadraticNumber> zbp{one};
  for (unsigned i = 1; i <= j_max; ++i) {
    zp.push_back(zp.back() * z);
    zbp.push_back(zbp.back() * zbar);
  }
  std::vector<Rational> out;
  for (unsigned j = 0; j <= j_max; ++j) {
    QuadraticNumber s{Rational(0), Rational(0), disc};
    for (unsigned a = 0; a <= j; ++a) {
      s = s + zp[a] * zbp[j - a];
    }
    // symmetric in the two roots, so the sqrt(D) part cancels
    if (s.b.sign() != 0) {
      throw std::logic_error("segre_by_expansion: irrational part did not cancel");
    }
    out.push_back(s.a);
  }
  return out;
}

/// dim G/P for classical families written as "Grassmannian minus isotropy conditions".
inline unsigned classical_dim(char type, unsigned l, unsigned k) {
  switch (type) {
    case 'A':
      return k * (l + 1 - k);
    case 'B': {  // isotropic k-planes in a (2l+1)-dimensional quadratic space
      const unsigned n = 2 * l + 1;
      return k * (n - k) - k * (k + 1) / 2;
    }
    case 'C': {  // isotropic k-planes in a 2l-dimensional symplectic space
      const unsigned n = 2 * l;
      return k * (n - k) - k * (k - 1) / 2;
    }
    case 'D': {
      const unsigned n = 2 * l;
      if (k + 1 >= l) {
        return l * (l - 1) / 2;  // spinor variety
      }
      return k * (n - k) - k * (k + 1) / 2;
    }
    default:
      return 0;
  }
}

/// Fano index c1(G/P).l for classical families, from the standard tangent-bundle computations.
inline unsigned classical_index(char type, unsigned l, unsigned k) {
  switch (type) {
    case 'A':
      return l + 1;
    case 'B':
      return k == l ? 2 * l : 2 * l - k;
    case 'C':
      return 2 * l - k + 1;
    case 'D':
      return k + 1 >= l ? 2 * l - 2 : 2 * l - k - 1;
    default:
      return 0;
  }
}

/// Minimal integral discriminants on P^1..P^30, produced by an independent
/// Python enumeration with fractions.Fraction (sympy-expanded binomials).
inline const std::vector<std::int64_t>& frozen_delta_min() {
  static const std::vector<std::int64_t> table{
      3,    3,    4,    12,   12,   71,   71,   119,  119,  119,  119,   479,   479,   1559,  1559,
      1559, 1559, 4199, 4199, 4199, 4199, 4199, 4199, 18191, 18191, 18191, 18191, 18191, 18191, 31391};
  return table;
}

}  // namespace cicrit::oracle
