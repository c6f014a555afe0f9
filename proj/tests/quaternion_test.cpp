#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <limits>

#include "lipschitz/lipschitz.hpp"
#include "random_quaternions.hpp"

namespace {

using namespace lipschitz;
using lipschitz::testing::kPropertyCases;
using lipschitz::testing::QuaternionSource;

constexpr Quaternion kI = Quaternion::i();
constexpr Quaternion kJ = Quaternion::j();
constexpr Quaternion kK = Quaternion::k();

// Basis products e_a * e_b = sign * e_index, from i^2 = j^2 = k^2 = ijk = -1.
struct BasisProduct {
  int sign;
  int index;
};

constexpr std::array<std::array<BasisProduct, 4>, 4> kBasisTable{{
    {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
    {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
    {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
    {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
}};

Quaternion table_mul(const Quaternion& q, const Quaternion& r) {
  std::array<std::int64_t, 4> out{};
  const auto a = q.components();
  const auto b = r.components();
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      const auto [sign, index] = kBasisTable[x][y];
      out[index] += sign * a[x] * b[y];
    }
  }
  return {out[0], out[1], out[2], out[3]};
}

TEST(QuaternionArithmetic, AddAndSubtract) {
  EXPECT_EQ(add(Quaternion{1, 1}, Quaternion{0, 0, 1, -1}), (Quaternion{1, 1, 1, -1}));
  EXPECT_EQ(sub(Quaternion{3, 1, 2, 2}, Quaternion{3, 1, 2, 2}), Quaternion{});
  EXPECT_EQ(neg(Quaternion{1, 1}), (Quaternion{-1, -1}));
  EXPECT_EQ(scale(Quaternion{0, 1, 1}, 3), (Quaternion{0, 3, 3}));
}

TEST(QuaternionArithmetic, BasisProducts) {
  EXPECT_EQ(mul(kI, kJ), kK);
  EXPECT_EQ(mul(kJ, kI), -kK);
  EXPECT_EQ(mul(kJ, kK), kI);
  EXPECT_EQ(mul(kK, kI), kJ);
  EXPECT_EQ(mul(kI, kI), (Quaternion{-1}));
  EXPECT_EQ(mul(mul(kI, kJ), kK), (Quaternion{-1}));
}

TEST(QuaternionArithmetic, WorkedProducts) {
  EXPECT_EQ(mul(Quaternion{1, -1, -1, -1}, Quaternion{1, -1, -1, -1}), (Quaternion{-2, -2, -2, -2}));
  EXPECT_EQ(mul(Quaternion{1, 1}, Quaternion{1, 0, 1}), (Quaternion{1, 1, 1, 1}));
}

TEST(QuaternionArithmetic, ConjugateAndNorm) {
  EXPECT_EQ(conjugate(Quaternion{2, 1, 1, 1}), (Quaternion{2, -1, -1, -1}));
  EXPECT_EQ(norm(Quaternion{2, 1, 1, 1}), 7);
  EXPECT_EQ(norm(Quaternion{1, 2, 2, 2}), 13);
  EXPECT_EQ(norm(Quaternion{1, 1, 1, 0}), 3);
  EXPECT_EQ(abs_sum(Quaternion{-1, 0, 2, -3}), 6);
}

TEST(QuaternionArithmetic, UnitsAreClosedUnderProduct) {
  const auto us = units();
  for (const auto& u : us) {
    EXPECT_EQ(norm(u), 1);
    for (const auto& v : us) {
      EXPECT_NE(std::find(us.begin(), us.end(), mul(u, v)), us.end()) << u << " * " << v;
    }
  }
}

TEST(QuaternionArithmetic, OverflowIsReported) {
  constexpr auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(add(Quaternion{big}, Quaternion{1}), OverflowError);
  EXPECT_THROW(scale(Quaternion{0, big / 2 + 1}, 2), OverflowError);
  EXPECT_THROW(norm(Quaternion{big}), OverflowError);
  EXPECT_THROW(mul(Quaternion{big, 1}, Quaternion{2}), OverflowError);
  EXPECT_THROW(neg(Quaternion{std::numeric_limits<std::int64_t>::min()}), OverflowError);
}

TEST(QuaternionProperties, ProductMatchesBasisTable) {
  QuaternionSource src(0x71);
  for (int n = 0; n < kPropertyCases; ++n) {
    const Quaternion q = src.next();
    const Quaternion r = src.next();
    ASSERT_EQ(mul(q, r), table_mul(q, r)) << q << " * " << r;
  }
}

TEST(QuaternionProperties, NormIsMultiplicative) {
  QuaternionSource src(0x72);
  for (int n = 0; n < kPropertyCases; ++n) {
    const Quaternion q = src.next();
    const Quaternion r = src.next();
    ASSERT_EQ(norm(mul(q, r)), norm(q) * norm(r)) << q << " * " << r;
  }
}

TEST(QuaternionProperties, ConjugateReversesProducts) {
  QuaternionSource src(0x73);
  for (int n = 0; n < kPropertyCases; ++n) {
    const Quaternion q = src.next();
    const Quaternion r = src.next();
    ASSERT_EQ(conjugate(mul(q, r)), mul(conjugate(r), conjugate(q))) << q << " * " << r;
  }
}

TEST(QuaternionProperties, TimesConjugateIsNorm) {
  QuaternionSource src(0x74);
  for (int n = 0; n < kPropertyCases; ++n) {
    const Quaternion q = src.next();
    ASSERT_EQ(mul(q, conjugate(q)), Quaternion{norm(q)}) << q;
  }
}

TEST(QuaternionProperties, ProductIsAssociative) {
  QuaternionSource src(0x75);
  for (int n = 0; n < kPropertyCases; ++n) {
    const Quaternion a = src.next(), b = src.next(), c = src.next();
    ASSERT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
  }
}

}  // namespace
