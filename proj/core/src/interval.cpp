#include "cicrit/interval.hpp"

#include <algorithm>
#include <array>

#include "cicrit/errors.hpp"

namespace cicrit {

namespace {

// arctan(1/x) lies between consecutive partial sums of its alternating series.
RationalInterval arctan_inverse(unsigned x, unsigned terms) {
  Rational sum;
  Rational power = Rational(Integer(1), make_integer(x));  // x^-(2k+1)
  const Rational x_sq_inv = Rational(Integer(1), make_integer(x) * make_integer(x));
  for (unsigned k = 0; k < terms; ++k) {
    const Rational term = power / Rational(2 * k + 1);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    power *= x_sq_inv;
  }
  const Rational next = power / Rational(2 * terms + 1);
  const Rational other = (terms % 2 == 0) ? sum + next : sum - next;
  return {std::min(sum, other), std::max(sum, other)};
}

}  // namespace

RationalInterval::RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) {
    throw PreconditionViolation("RationalInterval: lo > hi");
  }
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  const std::array<Rational, 4> products{a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  const auto [lo, hi] = std::minmax_element(products.begin(), products.end());
  return {*lo, *hi};
}

RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
  if (b.contains(Rational(0))) {
    throw PreconditionViolation("RationalInterval: divisor interval contains zero");
  }
  const RationalInterval reciprocal(Rational(1) / b.hi_, Rational(1) / b.lo_);
  return a * reciprocal;
}

RationalInterval RationalInterval::pow(unsigned exponent) const {
  if (exponent % 2 == 0 && lo_.sign() < 0 && hi_.sign() > 0) {
    return {Rational(0), std::max(lo_.abs(), hi_.abs()).pow(exponent)};
  }
  RationalInterval result(Rational(1));
  for (unsigned i = 0; i < exponent; ++i) {
    result = result * *this;
  }
  return result;
}

bool certainly_greater(const RationalInterval& x, const Rational& bound) {
  if (x.lo() > bound) {
    return true;
  }
  if (x.hi() <= bound) {
    return false;
  }
  throw InconclusiveComparison("interval [" + x.lo().decimal(12) + ", " + x.hi().decimal(12) +
                               "] straddles " + bound.str());
}

bool certainly_at_least(const RationalInterval& x, const Rational& bound) {
  if (x.lo() >= bound) {
    return true;
  }
  if (x.hi() < bound) {
    return false;
  }
  throw InconclusiveComparison("interval [" + x.lo().decimal(12) + ", " + x.hi().decimal(12) +
                               "] straddles " + bound.str());
}

const RationalInterval& pi_interval() {
  // pi = 16 arctan(1/5) - 4 arctan(1/239)
  static const RationalInterval pi = [] {
    const RationalInterval a = arctan_inverse(5, 32);
    const RationalInterval b = arctan_inverse(239, 12);
    return RationalInterval(Rational(16)) * a - RationalInterval(Rational(4)) * b;
  }();
  return pi;
}

const RationalInterval& e_interval() {
  // sum_{k<=N} 1/k! <= e <= sum_{k<=N} 1/k! + 2/(N+1)!
  static const RationalInterval e = [] {
    constexpr unsigned kTerms = 45;
    Rational sum;
    for (unsigned k = 0; k <= kTerms; ++k) {
      sum += Rational(Integer(1), factorial(k));
    }
    return RationalInterval(sum, sum + Rational(Integer(2), factorial(kTerms + 1)));
  }();
  return e;
}

bool stirling_lower_bound_holds(unsigned p) {
  // Squared form: (p!)^2 >= 2 pi p (p/e)^(2p).
  const Rational lhs = Rational(factorial(p)).pow(2);
  const RationalInterval ratio = RationalInterval(Rational(p)) / e_interval();
  const RationalInterval rhs = RationalInterval(Rational(2 * p)) * pi_interval() * ratio.pow(2 * p);
  if (lhs >= rhs.hi()) {
    return true;
  }
  if (lhs < rhs.lo()) {
    return false;
  }
  throw InconclusiveComparison("Stirling comparison undecided at p = " + std::to_string(p));
}

}  // namespace cicrit
