#include "cicrit/chern_plane.hpp"

#include "cicrit/discriminant_search.hpp"
#include "cicrit/errors.hpp"
#include "cicrit/interval.hpp"

namespace cicrit {

BundleNumerics::BundleNumerics(std::int64_t d, std::int64_t n) : d_(d), n_(n) {
  if (d < 1 || n < 1) {
    throw PreconditionViolation("BundleNumerics requires d >= 1 and n >= 1");
  }
}

std::int64_t discriminant(const BundleNumerics& b) { return 4 * b.d() - b.n() * b.n(); }

std::int64_t e_value(const BundleNumerics& b, std::int64_t k) { return b.d() - b.n() * k + k * k; }

std::optional<std::int64_t> e_nonneg_witness(const BundleNumerics& b) {
  if (discriminant(b) > 0) {
    throw PreconditionViolation("e_nonneg_witness requires Delta <= 0");
  }
  for (std::int64_t k = 1; 2 * k <= b.n(); ++k) {
    if (e_value(b, k) >= 0) {
      return k;
    }
  }
  return std::nullopt;
}

std::vector<Integer> segre_numbers(const BundleNumerics& b, unsigned j_max) {
  std::vector<Integer> s;
  s.reserve(j_max + 1);
  s.emplace_back(1);
  if (j_max >= 1) {
    s.push_back(make_integer(b.n()));
  }
  const Integer n = make_integer(b.n());
  const Integer d = make_integer(b.d());
  for (unsigned j = 2; j <= j_max; ++j) {
    s.push_back(Integer(n * s[j - 1] - d * s[j - 2]));
  }
  return s;
}

bool angle_exclusion(const BundleNumerics& b, unsigned p_v) {
  if (discriminant(b) <= 0) {
    throw PreconditionViolation("angle_exclusion requires Delta > 0");
  }
  if (p_v < 3) {
    throw PreconditionViolation("angle_exclusion requires p(V) >= 3");
  }
  const auto s = segre_numbers(b, p_v - 2);
  for (unsigned j = 1; j < s.size(); ++j) {
    if (sgn(s[j]) <= 0) {
      return true;
    }
  }
  return false;
}

Rational degree_lower_bound(const VarietyInvariants& inv, bool sharp) {
  if (inv.p_pos.value < 2) {
    throw PreconditionViolation("degree_lower_bound requires p(V) >= 2");
  }
  if (!inv.sp) {
    throw DataUnavailable("degree_lower_bound: sp is not tabulated for this variety");
  }
  const Rational sp(inv.sp->value);
  const Rational p_minus_one_sq = Rational(inv.p_pos.value - 1).pow(2);
  if (!sharp) {
    return sp.pow(2) * p_minus_one_sq / Rational(240);
  }
  const Rational numerator = Rational(delta_min_value(inv.sp->value)) * p_minus_one_sq;
  const RationalInterval bound =
      RationalInterval(numerator) / (RationalInterval(Rational(4)) * pi_interval().pow(2));
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 12);
  return Rational((bound.lo() * Rational(scale)).floor(), scale);
}

}  // namespace cicrit
