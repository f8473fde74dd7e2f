#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "support.hpp"
#include "uoms/error.hpp"
#include "uoms/similarity.hpp"

using namespace uoms;

namespace {
rank_vector rv(std::vector<double> ranks) { return rank_vector{std::move(ranks)}; }
} // namespace

TEST(Spearman, IdenticalIsOne) {
    const auto a = rv({1, 2, 3, 4});
    EXPECT_NEAR(spearman_rho(a, a), 1.0, 1e-12);
}

TEST(Spearman, ReversedIsMinusOne) {
    EXPECT_NEAR(spearman_rho(rv({1, 2, 3, 4}), rv({4, 3, 2, 1})), -1.0, 1e-12);
}

TEST(Spearman, ClosedFormSwap) {
    // single adjacent swap: 1 - 6 * 2 / (4 * 15) = 0.8
    EXPECT_NEAR(spearman_rho(rv({1, 2, 3, 4}), rv({1, 2, 4, 3})), 0.8, 1e-12);
}

TEST(Spearman, ErrorsOnShapeAndDegeneracy) {
    try {
        spearman_rho(rv({1, 2}), rv({1, 2, 3}));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::shape_mismatch);
    }
    try {
        spearman_rho(rv({2.5, 2.5, 2.5, 2.5}), rv({1, 2, 3, 4}));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::degenerate_ranking);
    }
}

TEST(Kendall, SpecExamples) {
    EXPECT_NEAR(kendall_tau(rv({1, 2, 3, 4}), rv({1, 2, 3, 4})), 1.0, 1e-12);
    EXPECT_NEAR(kendall_tau(rv({1, 2, 3, 4}), rv({1, 2, 4, 3})), (5.0 - 1.0) / 6.0, 1e-12);
    EXPECT_NEAR(kendall_tau(rv({1, 2, 3, 4}), rv({4, 3, 2, 1})), -1.0, 1e-12);
}

TEST(Kendall, MatchesPairCountingOracleUnderTies) {
    rng r(41);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + r.below(40);
        std::vector<double> x(n), y(n);
        for (double& v : x) v = static_cast<double>(r.below(6));
        for (double& v : y) v = static_cast<double>(r.below(6));
        if (is_constant_column(x) || is_constant_column(y)) continue;
        EXPECT_NEAR(rank_similarity(similarity_kind::kendall, to_rank_vector(x),
                                    to_rank_vector(y)),
                    oracle::kendall_tau_b(x, y), 1e-12);
    }
}

TEST(Spearman, MatchesNaiveOracle) {
    rng r(43);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + r.below(40);
        std::vector<double> x(n), y(n);
        for (double& v : x) v = static_cast<double>(r.below(7));
        for (double& v : y) v = static_cast<double>(r.below(7));
        if (is_constant_column(x) || is_constant_column(y)) continue;
        EXPECT_NEAR(score_similarity(similarity_kind::spearman, x, y),
                    oracle::spearman(x, y), 1e-12);
    }
}

TEST(Ndcg, IdealCases) {
    EXPECT_NEAR(ndcg_similarity(rv({1, 2, 3}), rv({1, 2, 3})), 1.0, 1e-12);
    EXPECT_NEAR(ndcg_similarity(rv({1}), rv({1})), 1.0, 1e-12);
}

TEST(Ndcg, SwappedTopPairComputedByBruteForce) {
    // rel from a: item ranks a=[1,2,3] -> rel =[1, 1/2, 1/3]
    // positions from b=[2,1,3]
    const double dcg_ab = 1.0 / std::log2(3.0) + 0.5 / std::log2(2.0) + (1.0 / 3.0) / 2.0;
    const double idcg = 1.0 / std::log2(2.0) + 0.5 / std::log2(3.0) + (1.0 / 3.0) / 2.0;
    // symmetric by construction of this instance
    const double expected = dcg_ab / idcg;
    const double got = ndcg_similarity(rv({1, 2, 3}), rv({2, 1, 3}));
    EXPECT_NEAR(got, expected, 1e-12);
    EXPECT_LT(got, 1.0);
}

TEST(Ndcg, SymmetricAndBounded) {
    rng r(45);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + r.below(30);
        std::vector<double> x(n), y(n);
        for (double& v : x) v = r.uniform();
        for (double& v : y) v = static_cast<double>(r.below(5));
        const auto a = to_rank_vector(x);
        const auto b = to_rank_vector(y);
        const double s1 = ndcg_similarity(a, b);
        const double s2 = ndcg_similarity(b, a);
        EXPECT_NEAR(s1, s2, 1e-12);
        EXPECT_GT(s1, 0.0);
        EXPECT_LE(s1, 1.0 + 1e-12);
    }
}

TEST(Similarity, SymmetryAcrossKernels) {
    rng r(47);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> x(25), y(25);
        for (double& v : x) v = r.uniform();
        for (double& v : y) v = r.uniform();
        const auto a = to_rank_vector(x);
        const auto b = to_rank_vector(y);
        for (auto kind :
             {similarity_kind::spearman, similarity_kind::kendall, similarity_kind::ndcg}) {
            EXPECT_NEAR(rank_similarity(kind, a, b), rank_similarity(kind, b, a), 1e-12);
            EXPECT_NEAR(rank_similarity(kind, a, a), 1.0, 1e-12);
        }
    }
}
