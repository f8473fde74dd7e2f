#include <gtest/gtest.h>

#include "oracles.hpp"
#include "uoms/error.hpp"
#include "uoms/eval/metrics.hpp"
#include "uoms/rng.hpp"

using namespace uoms;
using eval::average_precision;
using eval::precision_at_k;
using eval::roc_auc;

TEST(AveragePrecision, PerfectRanking) {
    const std::vector<double> s{4, 3, 2, 1};
    const std::vector<int> y{1, 1, 0, 0};
    EXPECT_NEAR(average_precision(s, y), 1.0, 1e-12);
}

TEST(AveragePrecision, PrecisionAtHitEnumeration) {
    const std::vector<double> s{0.9, 0.8, 0.1, 0.05};
    const std::vector<int> y{1, 0, 1, 0};
    EXPECT_NEAR(average_precision(s, y), (1.0 + 2.0 / 3.0) / 2.0, 1e-12);
}

TEST(AveragePrecision, ReversedPerfectBalancedLengthFour) {
    // positives land at ranks 3 and 4: (1/3 + 2/4) / 2
    const std::vector<double> s{1, 2, 3, 4};
    const std::vector<int> y{1, 1, 0, 0};
    const double expected = (1.0 / 3.0 + 0.5) / 2.0;
    EXPECT_NEAR(average_precision(s, y), expected, 1e-12);
    EXPECT_NEAR(oracle::average_precision(s, y), expected, 1e-12);
}

TEST(AveragePrecision, DegenerateLabelsThrow) {
    const std::vector<double> s{1, 2, 3};
    try {
        average_precision(s, std::vector<int>{1, 1, 1});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::degenerate_labels);
    }
}

TEST(RocAuc, PerfectAndPrecAtK) {
    const std::vector<double> s{4, 3, 2, 1};
    const std::vector<int> y{1, 1, 0, 0};
    EXPECT_NEAR(roc_auc(s, y), 1.0, 1e-12);
    EXPECT_NEAR(precision_at_k(s, y, 2), 1.0, 1e-12);
}

TEST(RocAuc, RandomScoresCenterOnHalf) {
    rng r(5);
    double mean = 0.0;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
        std::vector<double> s(200);
        std::vector<int> y(200);
        for (double& v : s) v = r.uniform();
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = i < 20 ? 1 : 0;
        mean += roc_auc(s, y);
    }
    mean /= trials;
    EXPECT_NEAR(mean, 0.5, 0.05);
}

TEST(PrecisionAtK, DirectCount) {
    const std::vector<double> s{3, 2, 1};
    const std::vector<int> y{0, 1, 1};
    EXPECT_NEAR(precision_at_k(s, y, 2), 0.5, 1e-12);
}

TEST(PrecisionAtK, BadKThrows) {
    const std::vector<double> s{3, 2, 1};
    const std::vector<int> y{0, 1, 1};
    try {
        precision_at_k(s, y, 4);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::bad_k);
    }
}

TEST(Metrics, TiedBlocksMatchArrangementEnumeration) {
    rng r(17);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + r.below(30);
        std::vector<double> s(n);
        std::vector<int> y(n);
        for (double& v : s) v = static_cast<double>(r.below(n)); // small tie blocks
        std::size_t pos = 0;
        for (int& v : y) pos += static_cast<std::size_t>(v = r.uniform() < 0.4 ? 1 : 0);
        if (pos == 0 || pos == n) continue;
        const std::size_t k = 1 + r.below(n);
        EXPECT_NEAR(average_precision(s, y), oracle::average_precision(s, y), 1e-12);
        EXPECT_NEAR(roc_auc(s, y), oracle::roc_auc(s, y), 1e-12);
        EXPECT_NEAR(precision_at_k(s, y, k), oracle::precision_at_k(s, y, k), 1e-12);
    }
}

TEST(Metrics, InvariantUnderMonotoneTransform) {
    rng r(19);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> s(40);
        std::vector<int> y(40);
        for (double& v : s) v = r.uniform();
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = i % 5 == 0 ? 1 : 0;
        std::vector<double> t(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) t[i] = std::exp(3.0 * s[i]) - 7.0;
        EXPECT_NEAR(average_precision(s, y), average_precision(t, y), 1e-12);
        EXPECT_NEAR(roc_auc(s, y), roc_auc(t, y), 1e-12);
        EXPECT_NEAR(precision_at_k(s, y, 8), precision_at_k(t, y, 8), 1e-12);
    }
}

TEST(RocAuc, ComplementUnderNegation) {
    rng r(29);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + r.below(40);
        std::vector<double> s(n), neg(n);
        std::vector<int> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = r.uniform(); // continuous: ties almost surely absent
            neg[i] = -s[i];
            y[i] = r.uniform() < 0.5 ? 1 : 0;
        }
        std::size_t pos = 0;
        for (int v : y) pos += static_cast<std::size_t>(v);
        if (pos == 0 || pos == n) continue;
        EXPECT_NEAR(roc_auc(s, y) + roc_auc(neg, y), 1.0, 1e-12);

        // negating scores and flipping labels preserves AUC
        std::vector<int> flipped(n);
        for (std::size_t i = 0; i < n; ++i) flipped[i] = 1 - y[i];
        EXPECT_NEAR(roc_auc(s, y), roc_auc(neg, flipped), 1e-12);
    }
}
