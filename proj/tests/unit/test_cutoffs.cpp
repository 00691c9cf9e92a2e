#include <gtest/gtest.h>

#include "coase/cutoffs.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using coase::Belief;
using coase::compute_cutoffs;
using coase::delay_class;
using coase::indifference_gap;

TEST(Cutoffs, DegenerateWhenVLowIsZero) {
  const auto t = compute_cutoffs(fixtures::params(0, 1, 0.9));
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t.cutoff(0).value(), 0.0);
  EXPECT_EQ(t.cutoff(1).value(), 0.0);
  EXPECT_TRUE(t.degenerate());
  EXPECT_EQ(t.termination(), coase::Termination::ReachedOne);
  for (double mu : {0.0, 0.3, 0.999}) EXPECT_EQ(delay_class(t, Belief(mu)), 1u);
  EXPECT_THROW(indifference_gap(t, 1, Belief(0.5)), std::invalid_argument);
}

TEST(Cutoffs, FrozenExactValues) {
  const auto t8 = compute_cutoffs(fixtures::params(1, 2, 0.8));
  EXPECT_EQ(t8.cutoff(1).value(), 0.5);
  EXPECT_NEAR(t8.cutoff(2).value(), oracle::kMuBar2Delta08, 1e-13);
  EXPECT_NEAR(t8.cutoff(3).value(), oracle::kMuBar3Delta08, 1e-13);
  EXPECT_NEAR(t8.cutoff(4).value(), oracle::kMuBar4Delta08, 1e-13);
  EXPECT_NEAR(t8.cutoff(5).value(), oracle::kMuBar5Delta08, 1e-13);

  const auto t95 = compute_cutoffs(fixtures::params(1, 2, 0.95));
  EXPECT_NEAR(t95.cutoff(2).value(), oracle::kMuBar2Delta095, 1e-13);
  EXPECT_NEAR(t95.cutoff(3).value(), oracle::kMuBar3Delta095, 1e-13);
  EXPECT_NEAR(t95.cutoff(4).value(), oracle::kMuBar4Delta095, 1e-13);
}

TEST(Cutoffs, MatchSignScanOracle) {
  for (double d : {0.8, 0.95}) {
    const auto t = compute_cutoffs(fixtures::params(1, 2, d));
    const auto ref = oracle::sign_scan_cutoffs({1, 2, d});
    ASSERT_GE(ref.value.size(), 6u);
    const std::size_t m = std::min(ref.value.size(), t.size());
    for (std::size_t n = 0; n < m; ++n) {
      EXPECT_NEAR(t.cutoff(n).value(), ref.value[n], 1e-8) << "delta=" << d << " n=" << n;
    }
  }
}

TEST(Cutoffs, StrictlyIncreasingWithSmallResiduals) {
  for (double d : {0.1, 0.5, 0.8, 0.95, 0.99}) {
    const auto t = compute_cutoffs(fixtures::params(1, 2, d));
    EXPECT_EQ(t.termination(), coase::Termination::ReachedOne);
    for (std::size_t n = 1; n + 1 < t.size(); ++n) {
      EXPECT_LT(t.cutoff(n).value(), t.cutoff(n + 1).value());
      EXPECT_LT(std::abs(indifference_gap(t, n, t.cutoff(n + 1))), 1e-10 * 2.0) << "delta=" << d << " n=" << n;
    }
    EXPECT_LE(t.cutoffs().back().complement(), 1e-10);
  }
}

TEST(Cutoffs, GapExamples) {
  const auto t = compute_cutoffs(fixtures::params(1, 2, 0.8));
  EXPECT_NEAR(indifference_gap(t, 1, Belief(0.5)), -0.2, 1e-15);
  EXPECT_NEAR(indifference_gap(t, 1, t.cutoff(2)), 0.0, 1e-14);
  EXPECT_GT(indifference_gap(t, 1, Belief(t.cutoff(2).value() + 1e-6)), 0.0);
  EXPECT_THROW(indifference_gap(t, 1, Belief(1.0)), std::domain_error);
  EXPECT_THROW(indifference_gap(t, 0, Belief(0.6)), std::invalid_argument);

  const auto t95 = compute_cutoffs(fixtures::params(1, 2, 0.95));
  EXPECT_NEAR(indifference_gap(t95, 1, Belief(0.5)), -0.05, 1e-15);
}

TEST(Cutoffs, GapNondecreasingOnGrid) {
  for (double d : {0.8, 0.95}) {
    const auto t = compute_cutoffs(fixtures::params(1, 2, d));
    for (std::size_t n = 1; n + 1 < t.size() && n < 8; ++n) {
      const double c = t.cutoff(n).complement();
      double prev = -INFINITY;
      for (int i = 0; i < 1001; ++i) {
        const Belief mu = Belief::from_complement(c * (1.0 - i / 1001.0));
        const double g = indifference_gap(t, n, mu);
        EXPECT_GE(g, prev - 1e-14);
        prev = g;
      }
    }
  }
}

TEST(Cutoffs, ImpatienceShortensDelay) {
  const auto fast = compute_cutoffs(fixtures::params(1, 2, 0.1));
  const auto slow = compute_cutoffs(fixtures::params(1, 2, 0.8));
  EXPECT_LT(fast.size(), slow.size());
  const auto ref = oracle::sign_scan_cutoffs({1, 2, 0.1});
  EXPECT_NEAR(fast.cutoff(2).value(), ref.value[2], 1e-8);
  EXPECT_GT(fast.cutoff(2).value(), 0.95);
  EXPECT_EQ(delay_class(fast, Belief(0.9)), 1u);
  EXPECT_EQ(delay_class(slow, Belief(0.9)), 2u);
}

TEST(DelayClass, Examples) {
  const auto t = compute_cutoffs(fixtures::params(1, 2, 0.8));
  EXPECT_EQ(delay_class(t, Belief(0.3)), 0u);
  EXPECT_EQ(delay_class(t, Belief(0.5)), 1u);
  EXPECT_EQ(delay_class(t, Belief(0.6)), 1u);
  EXPECT_EQ(delay_class(t, t.cutoff(2)), 2u);
  EXPECT_EQ(delay_class(t, Belief(0.85)), 2u);
  EXPECT_EQ(delay_class(t, Belief(1.0)), t.last_index());
}

TEST(DelayClass, MonotoneStepFunction) {
  const auto t = compute_cutoffs(fixtures::params(1, 2, 0.95));
  std::size_t prev = 0;
  for (int i = 0; i <= 10000; ++i) {
    const Belief mu(i / 10000.0);
    const std::size_t n = delay_class(t, mu);
    EXPECT_GE(n, prev);
    EXPECT_LE(t.cutoff(n).value(), mu.value());
    if (n + 1 < t.size()) EXPECT_LT(mu.value(), t.cutoff(n + 1).value());
    prev = n;
  }
}

TEST(DelayClass, ExhaustedTruncatedTable) {
  const auto t = compute_cutoffs(fixtures::params(1, 2, 0.8), {3, 1e-10});
  EXPECT_EQ(t.termination(), coase::Termination::MaxIterations);
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(delay_class(t, t.cutoff(3)), 3u);
  EXPECT_THROW(delay_class(t, Belief(0.99)), coase::TableExhausted);
}

TEST(CutoffTable, FromCutoffsValidates) {
  const auto p = fixtures::params(1, 2, 0.8);
  using coase::CutoffTable;
  using coase::Termination;
  EXPECT_NO_THROW(CutoffTable::from_cutoffs(p, {Belief(0), Belief(0.5), Belief(0.7)}, Termination::MaxIterations));
  EXPECT_THROW(CutoffTable::from_cutoffs(p, {Belief(0)}, Termination::ReachedOne), std::invalid_argument);
  EXPECT_THROW(CutoffTable::from_cutoffs(p, {Belief(0.1), Belief(0.5)}, Termination::ReachedOne),
               std::invalid_argument);
  EXPECT_THROW(CutoffTable::from_cutoffs(p, {Belief(0), Belief(0.4)}, Termination::ReachedOne),
               std::invalid_argument);
  EXPECT_THROW(CutoffTable::from_cutoffs(p, {Belief(0), Belief(0.5), Belief(0.5)}, Termination::ReachedOne),
               std::invalid_argument);
  EXPECT_THROW(CutoffTable::from_cutoffs(fixtures::params(0, 1, 0.8), {Belief(0), Belief(0), Belief(0.5)},
                                         Termination::ReachedOne),
               std::invalid_argument);
}

TEST(Cutoffs, Deterministic) {
  EXPECT_EQ(compute_cutoffs(fixtures::params(1, 2, 0.95)), compute_cutoffs(fixtures::params(1, 2, 0.95)));
}
