#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "cicrit/chern_plane.hpp"
#include "cicrit/errors.hpp"
#include "cicrit/interval.hpp"
#include "support/oracles.hpp"

namespace cicrit {
namespace {

std::vector<Integer> ints(std::initializer_list<long> values) {
  std::vector<Integer> out;
  for (long x : values) out.emplace_back(x);
  return out;
}

VarietyInvariants with_positivity(unsigned sp, unsigned p) {
  VarietyInvariants inv;
  inv.sp = TableValue{sp, false};
  inv.p_pos = TableValue{p, false};
  return inv;
}

TEST(BundleNumerics, Preconditions) {
  EXPECT_THROW(BundleNumerics(0, 1), PreconditionViolation);
  EXPECT_THROW(BundleNumerics(1, 0), PreconditionViolation);
  EXPECT_EQ(discriminant(BundleNumerics(5, 2)), 16);
  EXPECT_EQ(discriminant(BundleNumerics(4, 4)), 0);
  EXPECT_EQ(e_value(BundleNumerics(10, 8), 3), 10 - 24 + 9);
}

TEST(Segre, Examples) {
  EXPECT_EQ(segre_numbers(BundleNumerics(1, 2), 3), ints({1, 2, 3, 4}));
  EXPECT_EQ(segre_numbers(BundleNumerics(1, 1), 5), ints({1, 1, 0, -1, -1, 0}));
  EXPECT_EQ(segre_numbers(BundleNumerics(5, 2), 2), ints({1, 2, -1}));
}

TEST(Segre, DeterminantIdentity) {
  for (std::int64_t d = 1; d <= 40; ++d) {
    for (std::int64_t n = 1; n <= 40; ++n) {
      const auto s = segre_numbers(BundleNumerics(d, n), 14);
      Integer dj = d;
      for (std::size_t j = 1; j < 14; ++j) {
        EXPECT_EQ(s[j] * s[j] - s[j - 1] * s[j + 1], dj) << d << "," << n << "," << j;
        dj *= d;
      }
    }
  }
}

TEST(Segre, MatchesRootExpansion) {
  for (std::int64_t d = 1; d <= 50; ++d) {
    for (std::int64_t n = 1; n <= 50; ++n) {
      const auto s = segre_numbers(BundleNumerics(d, n), 12);
      const auto expected = oracle::segre_by_expansion(d, n, 12);
      for (std::size_t j = 0; j <= 12; ++j) {
        EXPECT_EQ(Rational(s[j]), expected[j]);
      }
    }
  }
}

TEST(ENonneg, WitnessExistsExactlyWhenDAtLeastNMinusOne) {
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (std::int64_t d = 1; 4 * d <= n * n; ++d) {
      const auto w = e_nonneg_witness(BundleNumerics(d, n));
      EXPECT_EQ(w.has_value(), d >= n - 1) << d << "," << n;
      if (w) {
        EXPECT_EQ(*w, 1);
        EXPECT_GE(e_value(BundleNumerics(d, n), *w), 0);
      }
    }
  }
  EXPECT_THROW(e_nonneg_witness(BundleNumerics(5, 2)), PreconditionViolation);
}

TEST(ENonneg, PositiveDiscriminantMeansPositiveE) {
  for (std::int64_t d = 1; d <= 60; ++d) {
    for (std::int64_t n = 1; n <= 60; ++n) {
      const BundleNumerics b(d, n);
      if (discriminant(b) > 0) {
        for (std::int64_t k = -20; k <= 80; ++k) {
          EXPECT_GT(e_value(b, k), 0);
        }
      }
    }
  }
}

TEST(AngleExclusion, Examples) {
  EXPECT_TRUE(angle_exclusion(BundleNumerics(5, 2), 6));
  EXPECT_FALSE(angle_exclusion(BundleNumerics(100, 19), 6));
  EXPECT_TRUE(angle_exclusion(BundleNumerics(1, 1), 4));
  EXPECT_THROW(angle_exclusion(BundleNumerics(1, 2), 6), PreconditionViolation);
  EXPECT_THROW(angle_exclusion(BundleNumerics(5, 2), 2), PreconditionViolation);
}

TEST(AngleExclusion, MonotoneInP) {
  for (std::int64_t d = 1; d <= 60; ++d) {
    for (std::int64_t n = 1; n <= 30; ++n) {
      const BundleNumerics b(d, n);
      if (discriminant(b) <= 0) continue;
      bool previous = false;
      for (unsigned p = 3; p <= 30; ++p) {
        const bool now = angle_exclusion(b, p);
        EXPECT_TRUE(!previous || now) << d << "," << n << "," << p;
        previous = now;
      }
    }
  }
}

TEST(AngleExclusion, AgreesWithArgumentBound) {
  // with n > 0 and Delta > 0, the root argument is atan(sqrt(Delta)/n)
  for (std::int64_t d = 1; d <= 80; ++d) {
    for (std::int64_t n = 1; n <= 40; ++n) {
      const BundleNumerics b(d, n);
      const auto delta = discriminant(b);
      if (delta <= 0) continue;
      const double arg = std::atan2(std::sqrt(static_cast<double>(delta)), static_cast<double>(n));
      for (unsigned p = 3; p <= 20; ++p) {
        const double limit = std::numbers::pi / (p - 1);
        if (std::abs(arg - limit) < 1e-9) continue;
        EXPECT_EQ(angle_exclusion(b, p), arg >= limit) << d << "," << n << "," << p;
      }
    }
  }
}

TEST(DegreeBound, PlainIsExact) {
  EXPECT_EQ(degree_lower_bound(with_positivity(18, 18), false), Rational(Integer(7803), Integer(20)));
  EXPECT_EQ(degree_lower_bound(with_positivity(6, 6), false), Rational(Integer(15), Integer(4)));
}

TEST(DegreeBound, SharpIsCertifiedLowerBound) {
  const Rational sharp = degree_lower_bound(with_positivity(4, 5), true);
  // 12 * 16 / (4 pi^2)
  const auto exact = RationalInterval(Rational(192)) / (RationalInterval(Rational(4)) * pi_interval().pow(2));
  EXPECT_LE(sharp, exact.lo());
  const Integer scale = make_integer(1000000000000LL);
  EXPECT_LT(exact.hi() - sharp, Rational(Integer(1), scale));
  EXPECT_EQ(Integer(scale % sharp.denominator()), 0);
  EXPECT_NEAR(sharp.to_double(), 4.8634, 1e-4);
}

TEST(DegreeBound, Preconditions) {
  VarietyInvariants missing;
  missing.p_pos = TableValue{6, false};
  EXPECT_THROW(degree_lower_bound(missing, false), DataUnavailable);
  EXPECT_THROW(degree_lower_bound(with_positivity(4, 1), false), PreconditionViolation);
}

}  // namespace
}  // namespace cicrit
