#include "schmidt/legendre.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"

namespace schmidt {
namespace {

// Random integer sequences with N <= 10 and entries in [-100, 100].
std::vector<IntegerSequence> RandomCorpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(1, 11);
  std::uniform_int_distribution<int> entry(-100, 100);
  std::vector<IntegerSequence> out;
  for (int i = 0; i < count; ++i) {
    std::vector<ExactInt> v(static_cast<std::size_t>(length(rng)));
    for (auto& x : v) x = entry(rng);
    out.emplace_back(std::move(v));
  }
  return out;
}

TEST(IntegerSequence, RejectsEmptyPrefix) {
  EXPECT_THROW(IntegerSequence(std::vector<ExactInt>{}), DomainError);
  const IntegerSequence c{4, 5, 6};
  EXPECT_EQ(c.last(), 2u);
  EXPECT_THROW(c.at(3), IndexError);
}

TEST(LegendreForward, Examples) {
  // Central Delannoy number D(2) = 13.
  EXPECT_EQ(legendre_forward(IntegerSequence{1, 1, 1}, 2), 13);
  EXPECT_EQ(legendre_forward(IntegerSequence{1}, 0), 1);
  // Franel prefix maps to the Apery number 73.
  EXPECT_EQ(legendre_forward(IntegerSequence{1, 2, 10}, 2), 73);
}

TEST(LegendreForward, IndexBeyondPrefix) {
  EXPECT_THROW(legendre_forward(IntegerSequence{1, 2}, 2), IndexError);
  EXPECT_THROW(legendre_forward_central(IntegerSequence{1, 2}, 5), IndexError);
}

TEST(LegendreForward, CentralDelannoyNumbers) {
  // https://oeis.org/A001850
  const std::vector<long long> delannoy{1, 3, 13, 63, 321, 1683, 8989, 48639};
  const IntegerSequence ones(std::vector<ExactInt>(delannoy.size(), ExactInt(1)));
  for (std::size_t n = 0; n < delannoy.size(); ++n) {
    EXPECT_EQ(legendre_forward(ones, n), delannoy[n]);
  }
}

TEST(LegendreForward, TwoFormsAgree) {
  for (const auto& c : RandomCorpus(7, 100)) {
    for (std::size_t n = 0; n <= c.last(); ++n) {
      ASSERT_EQ(legendre_forward(c, n), legendre_forward_central(c, n));
    }
  }
}

TEST(LegendreForward, UnitImpulseGivesAllOnes) {
  std::vector<ExactInt> impulse(15, ExactInt(0));
  impulse[0] = 1;
  const IntegerSequence a = legendre_forward(IntegerSequence(impulse));
  for (std::size_t n = 0; n <= a.last(); ++n) EXPECT_EQ(a[n], 1);
  const IntegerSequence ones(std::vector<ExactInt>(15, ExactInt(1)));
  for (std::size_t n = 0; n <= ones.last(); ++n) {
    EXPECT_EQ(legendre_inverse(ones, n), n == 0 ? 1 : 0);
  }
}

TEST(LegendreCoefficient, Examples) {
  EXPECT_EQ(legendre_coefficient(2, 0), 2);
  EXPECT_EQ(legendre_coefficient(2, 1), 3);
  for (std::size_t n = 0; n <= 20; ++n) EXPECT_EQ(legendre_coefficient(n, n), 1);
  EXPECT_THROW(legendre_coefficient(2, 3), DomainError);
}

TEST(LegendreCoefficient, ClosedFormsAgreeUpTo40) {
  for (std::int64_t n = 0; n <= 40; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      const ExactInt d = legendre_coefficient(static_cast<std::size_t>(n),
                                              static_cast<std::size_t>(k));
      EXPECT_EQ(d * (n + k + 1), (2 * k + 1) * binomial(2 * n, n - k));
    }
  }
}

TEST(LegendreInverse, Examples) {
  EXPECT_EQ(legendre_inverse(IntegerSequence{1}, 0), 1);
  EXPECT_EQ(legendre_inverse(IntegerSequence{1, 5, 73}, 2), 10);
  const IntegerSequence c{1, 2, 3};
  const IntegerSequence a = legendre_forward(c);
  for (std::size_t n = 0; n <= 2; ++n) {
    EXPECT_EQ(legendre_inverse(a, n), ExactRat(c[n]));
  }
  EXPECT_THROW(legendre_inverse(IntegerSequence{1}, 1), IndexError);
}

TEST(LegendreInverse, NonTransformGivesRational) {
  // a = (1, 2): c_1 = (d_{1,1} a_1 - d_{1,0} a_0) / 2 = (2 - 1)/2.
  EXPECT_EQ(legendre_inverse(IntegerSequence{1, 2}, 1), make_rat(1, 2));
}

TEST(LegendreRoundTrip, RandomSequences) {
  for (const auto& c : RandomCorpus(20031119, 100)) {
    const IntegerSequence a = legendre_forward(c);
    for (std::size_t n = 0; n <= c.last(); ++n) {
      ASSERT_EQ(legendre_inverse(a, n), ExactRat(c[n]));
    }
    ASSERT_EQ(triangular_solve(a), c);
  }
}

TEST(TriangularSolve, Examples) {
  EXPECT_EQ(triangular_solve(IntegerSequence{1, 5, 73}), (IntegerSequence{1, 2, 10}));
  EXPECT_EQ(triangular_solve(IntegerSequence{1}), (IntegerSequence{1}));
  EXPECT_EQ(triangular_solve(IntegerSequence{1, 9, 433}), (IntegerSequence{1, 4, 68}));
}

TEST(TriangularSolve, NonIntegralInputRaises) {
  EXPECT_THROW(triangular_solve(IntegerSequence{1, 2}), DivisibilityError);
}

}  // namespace
}  // namespace schmidt
