#include "cicrit/rr_integrality.hpp"

#include "cicrit/errors.hpp"

namespace cicrit {

namespace {

std::int64_t as_int64(unsigned v) { return static_cast<std::int64_t>(v); }

}  // namespace

BundleOnProjSpace::BundleOnProjSpace(unsigned p, int c1, std::int64_t d) : p_(p), c1_(c1), d_(d) {
  if (p < 1) {
    throw PreconditionViolation("bundle on P^p requires p >= 1");
  }
  if (c1 != 0 && c1 != 1) {
    throw PreconditionViolation("normalized c1 must be 0 or 1");
  }
}

Rational euler_char(const BundleOnProjSpace& bundle, std::int64_t k) {
  const Polynomial q = binomial_poly(k, bundle.p());
  const std::vector<Rational> sums = power_sums(Rational(bundle.c1()), Rational(bundle.d()), bundle.p());
  Rational chi;
  const auto coefficients = q.coefficients();
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    chi += coefficients[i] * sums[i];
  }
  return chi;
}

Polynomial euler_char_polynomial(const BundleOnProjSpace& bundle) {
  // binom(r + k + p, p) expanded in r with k symbolic: prod_i (r + k + i) / p!.
  // Collect sum over i of ps_i * [r^i] as a polynomial in k.
  const unsigned p = bundle.p();
  const std::vector<Rational> sums = power_sums(Rational(bundle.c1()), Rational(bundle.d()), p);
  // coeffs[i] is the coefficient of r^i, itself a polynomial in k.
  std::vector<Polynomial> coeffs{Polynomial::constant(Rational(1))};
  for (unsigned i = 1; i <= p; ++i) {
    std::vector<Polynomial> next(coeffs.size() + 1);
    const Polynomial k_plus_i = Polynomial::linear(Rational(as_int64(i)));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j] += coeffs[j] * k_plus_i;
      next[j + 1] += coeffs[j];
    }
    coeffs = std::move(next);
  }
  Polynomial chi;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    chi += coeffs[i] * sums[i];
  }
  return chi * Rational(Integer(1), factorial(p));
}

bool is_integral_all_twists(const BundleOnProjSpace& bundle) {
  for (unsigned k = 0; k <= bundle.p(); ++k) {
    if (!euler_char(bundle, as_int64(k)).is_integer()) {
      return false;
    }
  }
  return true;
}

TwistIntegralityTable::TwistIntegralityTable(unsigned p) : p_(p), modulus_(factorial(p)) {
  if (p < 1) {
    throw PreconditionViolation("TwistIntegralityTable requires p >= 1");
  }
  const Rational scale(modulus_);
  scaled_.reserve(p + 1);
  for (unsigned k = 0; k <= p; ++k) {
    const Polynomial q = binomial_poly(as_int64(k), p);
    std::vector<Integer> row;
    row.reserve(p + 1);
    for (unsigned i = 0; i <= p; ++i) {
      const Rational c = q.coefficient(i) * scale;
      Integer v = c.numerator();  // p! clears every denominator
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
      row.push_back(std::move(v));
    }
    scaled_.push_back(std::move(row));
  }
}

bool TwistIntegralityTable::is_integral(int c1, std::int64_t d) const {
  if (c1 != 0 && c1 != 1) {
    throw PreconditionViolation("normalized c1 must be 0 or 1");
  }
  std::vector<Integer> sums(p_ + 1);
  const Integer e1 = make_integer(c1);
  Integer e2 = make_integer(d);
  mpz_mod(e2.get_mpz_t(), e2.get_mpz_t(), modulus_.get_mpz_t());
  sums[0] = 2;
  sums[1] = e1;
  for (unsigned j = 2; j <= p_; ++j) {
    sums[j] = e1 * sums[j - 1] - e2 * sums[j - 2];
    mpz_mod(sums[j].get_mpz_t(), sums[j].get_mpz_t(), modulus_.get_mpz_t());
  }
  Integer acc;
  for (const auto& row : scaled_) {
    acc = 0;
    for (unsigned i = 0; i <= p_; ++i) {
      acc += row[i] * sums[i];
    }
    if (mpz_divisible_p(acc.get_mpz_t(), modulus_.get_mpz_t()) == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace cicrit
