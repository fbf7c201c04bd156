#pragma once

// Arbitrary-precision integers, canonical rationals and dense univariate
// polynomials with rational coefficients. Integers are GMP's mpz_class.

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cicrit {

using Integer = mpz_class;

/// Builds an Integer from any builtin integral type (gmpxx lacks long long overloads).
template <std::integral T>
Integer make_integer(T v) {
  if constexpr (std::is_signed_v<T>) {
    return Integer(static_cast<long>(v));
  } else {
    return Integer(static_cast<unsigned long>(v));
  }
}

/// Exact fraction, always reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : value_(make_integer(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : value_(v) {}    // NOLINT(google-explicit-constructor)
  /// Throws PreconditionViolation on a zero denominator.
  Rational(const Integer& num, const Integer& den);

  /// Parses "a" or "a/b".
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Integer floor() const;
  Integer ceil() const;
  double to_double() const { return value_.get_d(); }
  /// "a" for integers, "a/b" otherwise.
  std::string str() const;
  /// Fixed-point decimal rendering truncated toward zero.
  std::string decimal(unsigned digits) const;

  Rational abs() const;
  Rational pow(unsigned exponent) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws PreconditionViolation on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

/// Dense polynomial in one indeterminate; coefficient i multiplies x^i.
/// Trailing zero coefficients are stripped, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// x + shift
  static Polynomial linear(const Rational& shift);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  Rational coefficient(std::size_t power) const;
  std::span<const Rational> coefficients() const { return coefficients_; }
  Rational leading_coefficient() const;

  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str(char variable = 'x') const;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

Integer factorial(unsigned n);

/// binom(x + top_shift + p, p) as a polynomial in x, i.e.
/// (x+top_shift+p)(x+top_shift+p-1)...(x+top_shift+1) / p!.
/// Throws PreconditionViolation for p == 0.
Polynomial binomial_poly(std::int64_t top_shift, unsigned p);

/// Power sums r1^j + r2^j, j = 0..j_max, of the two roots with
/// r1 + r2 = e1 and r1 r2 = e2 (Newton's identities).
std::vector<Rational> power_sums(const Rational& e1, const Rational& e2, std::size_t j_max);

}  // namespace cicrit
