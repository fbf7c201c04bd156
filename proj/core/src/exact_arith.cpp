#include "cicrit/exact_arith.hpp"

#include <algorithm>
#include <sstream>

#include "cicrit/errors.hpp"

namespace cicrit {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw PreconditionViolation("Rational: zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(s, 10));
    }
    return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw PreconditionViolation("Rational: cannot parse '" + s + "'");
  }
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const { return value_.get_str(10); }

std::string Rational::decimal(unsigned digits) const {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Integer scaled = abs().numerator() * scale;
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), value_.get_den_mpz_t());
  std::string body = q.get_str(10);
  if (digits > 0) {
    if (body.size() <= digits) {
      body.insert(0, digits + 1 - body.size(), '0');
    }
    body.insert(body.size() - digits, ".");
  }
  return (sign() < 0 ? "-" : "") + body;
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::pow(unsigned exponent) const {
  Rational r;
  mpz_pow_ui(r.value_.get_num_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.value_.get_den_mpz_t(), value_.get_den_mpz_t(), exponent);
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) {
    throw PreconditionViolation("Rational: division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const Rational& shift) { return Polynomial({shift, Rational(1)}); }

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : Rational();
}

Rational Polynomial::leading_coefficient() const {
  return coefficients_.empty() ? Rational() : coefficients_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
    coefficients_[i] += rhs.coefficients_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
    coefficients_[i] -= rhs.coefficients_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<Rational> product(coefficients_.size() + rhs.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
      product[i + j] += coefficients_[i] * rhs.coefficients_[j];
    }
  }
  coefficients_ = std::move(product);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) {
    c *= scalar;
  }
  trim();
  return *this;
}

std::string Polynomial::str(char variable) const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const Rational& c = coefficients_[i];
    if (c.sign() == 0) {
      continue;
    }
    if (!first) {
      out << (c.sign() < 0 ? " - " : " + ");
    } else if (c.sign() < 0) {
      out << "-";
    }
    first = false;
    const Rational mag = c.abs();
    if (i == 0 || mag != Rational(1)) {
      out << mag.str();
      if (i > 0) {
        out << "*";
      }
    }
    if (i > 0) {
      out << variable;
      if (i > 1) {
        out << "^" << i;
      }
    }
  }
  return out.str();
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back().sign() == 0) {
    coefficients_.pop_back();
  }
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Polynomial binomial_poly(std::int64_t top_shift, unsigned p) {
  if (p == 0) {
    throw PreconditionViolation("binomial_poly: p must be >= 1");
  }
  Polynomial product = Polynomial::constant(Rational(1));
  for (unsigned i = 1; i <= p; ++i) {
    product *= Polynomial::linear(Rational(top_shift + static_cast<std::int64_t>(i)));
  }
  product *= Rational(Integer(1), factorial(p));
  return product;
}

std::vector<Rational> power_sums(const Rational& e1, const Rational& e2, std::size_t j_max) {
  std::vector<Rational> sums;
  sums.reserve(j_max + 1);
  sums.emplace_back(2);
  if (j_max >= 1) {
    sums.push_back(e1);
  }
  for (std::size_t j = 2; j <= j_max; ++j) {
    sums.push_back(e1 * sums[j - 1] - e2 * sums[j - 2]);
  }
  return sums;
}

}  // namespace cicrit
