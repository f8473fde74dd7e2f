#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "support.hpp"
#include "uoms/detectors/model_spec.hpp"
#include "uoms/detectors/zoo.hpp"
#include "uoms/error.hpp"

using namespace uoms;
using namespace uoms::detectors;

namespace {

matrix column_points(std::initializer_list<double> xs) {
    matrix X(xs.size(), 1);
    std::size_t i = 0;
    for (double x : xs) X(i++, 0) = x;
    return X;
}

std::size_t argmax_of(const std::vector<double>& v) {
    return static_cast<std::size_t>(
        std::max_element(v.begin(), v.end()) - v.begin());
}

} // namespace

TEST(ModelPool, DefaultGridTotals) {
    const auto pool = enumerate_model_pool(pool_config{});
    EXPECT_EQ(pool.size(), 297u);

    std::map<std::string, std::size_t> counts;
    std::size_t native = 0;
    for (const auto& spec : pool) {
        counts[family_name(spec.algo)]++;
        native += spec.imported() ? 0 : 1;
    }
    EXPECT_EQ(native, 261u);
    EXPECT_EQ(counts["lof"], 36u);
    EXPECT_EQ(counts["knn"], 36u);
    EXPECT_EQ(counts["ocsvm"], 36u);
    EXPECT_EQ(counts["cof"], 7u);
    EXPECT_EQ(counts["abod"], 7u);
    EXPECT_EQ(counts["iforest"], 81u);
    EXPECT_EQ(counts["hbos"], 40u);
    EXPECT_EQ(counts["loda"], 54u);

    // (family, hp1, hp2) unique within the pool
    std::set<std::string> ids;
    for (const auto& spec : pool) ids.insert(spec.id());
    EXPECT_EQ(ids.size(), pool.size());
}

TEST(ModelPool, RestrictedAndEmptyConfigs) {
    pool_config cof_only;
    cof_only.families = {"cof"};
    const auto pool = enumerate_model_pool(cof_only);
    ASSERT_EQ(pool.size(), 7u);
    const std::vector<std::string> grid{"3", "5", "10", "15", "20", "25", "50"};
    for (std::size_t i = 0; i < pool.size(); ++i) {
        EXPECT_EQ(pool[i].hp1.name, "n_neighbors");
        EXPECT_EQ(pool[i].hp1.value, grid[i]);
    }

    pool_config empty;
    empty.families = {};
    EXPECT_TRUE(enumerate_model_pool(empty).empty());

    pool_config bad;
    bad.families = {"svm"};
    try {
        enumerate_model_pool(bad);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::config_error);
    }
}

TEST(ModelPool, IdRoundTrip) {
    for (const auto& spec : enumerate_model_pool(pool_config{})) {
        const model_spec parsed = parse_model_id(spec.id());
        EXPECT_EQ(parsed.id(), spec.id());
    }
    EXPECT_EQ(family_of_model_id("hbos|n_histograms=5|tolerance=0.1"), "hbos");
}

TEST(Knn, CollinearLargest) {
    const matrix X = column_points({0.0, 1.0, 10.0});
    const auto scores = knn_score(X, 1, knn_method::largest);
    EXPECT_NEAR(scores[0], 1.0, 1e-12);
    EXPECT_NEAR(scores[1], 1.0, 1e-12);
    EXPECT_NEAR(scores[2], 9.0, 1e-12);
    EXPECT_EQ(argmax_of(scores), 2u);
}

TEST(Knn, DuplicateRowsShareScores) {
    matrix X(6, 2);
    rng r(2);
    for (std::size_t i = 0; i < 4; ++i) {
        X(i, 0) = r.gauss();
        X(i, 1) = r.gauss();
    }
    X(4, 0) = X(1, 0);
    X(4, 1) = X(1, 1);
    X(5, 0) = X(2, 0);
    X(5, 1) = X(2, 1);
    for (auto method : {knn_method::largest, knn_method::mean, knn_method::median}) {
        const auto s = knn_score(X, 3, method);
        EXPECT_DOUBLE_EQ(s[1], s[4]);
        EXPECT_DOUBLE_EQ(s[2], s[5]);
    }
    const auto cof = cof_score(X, 3);
    EXPECT_DOUBLE_EQ(cof[1], cof[4]);
    const auto abod = abod_score(X, 3);
    EXPECT_DOUBLE_EQ(abod[1], abod[4]);
}

TEST(Knn, MeanEqualsLargestAtKOne) {
    rng r(4);
    matrix X(20, 3);
    for (double& v : X.flat()) v = r.gauss();
    EXPECT_EQ(knn_score(X, 1, knn_method::mean), knn_score(X, 1, knn_method::largest));
    EXPECT_EQ(knn_score(X, 1, knn_method::median), knn_score(X, 1, knn_method::largest));
}

TEST(Knn, BadHyperparameterThrows) {
    const matrix X = column_points({0.0, 1.0, 2.0});
    try {
        knn_score(X, 3, knn_method::largest);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::bad_hyperparameter);
    }
}

TEST(Lof, UniformGridInteriorNearOne) {
    matrix X(49, 2);
    for (int gx = 0; gx < 7; ++gx) {
        for (int gy = 0; gy < 7; ++gy) {
            X(static_cast<std::size_t>(gx * 7 + gy), 0) = gx;
            X(static_cast<std::size_t>(gx * 7 + gy), 1) = gy;
        }
    }
    const auto s = lof_score(X, 8);
    // the exact center of the grid
    EXPECT_NEAR(s[3 * 7 + 3], 1.0, 0.2);
}

TEST(Lof, IsolatedPointDominatesCluster) {
    rng r(6);
    matrix X(11, 2);
    for (std::size_t i = 0; i < 10; ++i) {
        X(i, 0) = 0.1 * r.gauss();
        X(i, 1) = 0.1 * r.gauss();
    }
    X(10, 0) = 8.0;
    X(10, 1) = -7.0;
    const auto s = lof_score(X, 3);
    for (std::size_t i = 0; i < 10; ++i) EXPECT_GT(s[10], s[i]);
}

TEST(Lof, MinkowskiTwoIsEuclidean) {
    rng r(8);
    matrix X(30, 4);
    for (double& v : X.flat()) v = r.gauss();
    EXPECT_EQ(lof_score(X, 5, metric_kind::euclidean),
              lof_score(X, 5, metric_kind::minkowski, 2.0));
}

TEST(Cof, IsolatedEndpointOnChain) {
    const matrix X = column_points({0.0, 1.0, 2.0, 3.0, 10.0});
    const auto s = cof_score(X, 2);
    // hand chaining distances: ac = [1,1,1,1,5]; COF = k*ac/(sum of neighbor ac)
    EXPECT_NEAR(s[4], 5.0, 1e-9);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(s[i], 1.0, 1e-9);
}

TEST(Cof, ChainEndpointsAtLeastInterior) {
    const matrix X = column_points({0.0, 1.0, 2.0, 3.0, 4.0});
    const auto s = cof_score(X, 2);
    const double interior = std::max({s[1], s[2], s[3]});
    EXPECT_GE(s[0] + 1e-12, interior);
    EXPECT_GE(s[4] + 1e-12, interior);
}

TEST(Abod, RingCenterLeastAnomalous) {
    matrix X(9, 2);
    const double pi = std::acos(-1.0);
    for (std::size_t i = 0; i < 8; ++i) {
        const double a = 2.0 * pi * static_cast<double>(i) / 8.0;
        X(i, 0) = std::cos(a);
        X(i, 1) = std::sin(a);
    }
    X(8, 0) = 0.0;
    X(8, 1) = 0.0;
    const auto s = abod_score(X, 8);

    // brute-force distance-weighted angle variance at the center
    std::vector<double> wcos;
    for (std::size_t a = 0; a < 8; ++a) {
        for (std::size_t b = a + 1; b < 8; ++b) {
            const double dot = X(a, 0) * X(b, 0) + X(a, 1) * X(b, 1);
            wcos.push_back(dot); // norms are 1
        }
    }
    double mean = 0.0;
    for (double v : wcos) mean += v;
    mean /= static_cast<double>(wcos.size());
    double var = 0.0;
    for (double v : wcos) var += (v - mean) * (v - mean);
    var /= static_cast<double>(wcos.size());

    EXPECT_NEAR(s[8], -var, 1e-12);
    for (std::size_t i = 0; i < 8; ++i) EXPECT_LT(s[8], s[i]);
}

TEST(IForest, DeterministicGivenSeed) {
    rng r(10);
    matrix X(80, 3);
    for (double& v : X.flat()) v = r.gauss();
    EXPECT_EQ(iforest_score(X, 25, 0.5, 42), iforest_score(X, 25, 0.5, 42));
    EXPECT_NE(iforest_score(X, 25, 0.5, 42), iforest_score(X, 25, 0.5, 43));
}

TEST(IForest, ExtremeOutlierTopsScoresAcrossSeeds) {
    rng r(12);
    matrix X(200, 2);
    for (std::size_t i = 0; i < 199; ++i) {
        X(i, 0) = r.gauss();
        X(i, 1) = r.gauss();
    }
    X(199, 0) = 100.0;
    X(199, 1) = 100.0;
    int wins = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto s = iforest_score(X, 50, 1.0, seed);
        wins += argmax_of(s) == 199 ? 1 : 0;
    }
    EXPECT_GE(wins, 95);
}

TEST(IForest, StableAcrossEnsembleSizes) {
    rng r(14);
    matrix X(150, 4);
    for (double& v : X.flat()) v = r.gauss();
    for (std::size_t i = 0; i < 8; ++i) X(i, 0) += 12.0; // a detectable clump
    const auto small = iforest_score(X, 10, 1.0, 7);
    const auto large = iforest_score(X, 200, 1.0, 7);
    EXPECT_GE(oracle::spearman(small, large), 0.8);
}

TEST(Hbos, EmptiestBinScoresHighest) {
    // 1-D data: dense cluster near zero, one sample off in its own bin
    std::vector<double> xs(50, 0.0);
    rng r(16);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) xs[i] = 0.05 * r.uniform();
    xs.back() = 1.0;
    matrix X(xs.size(), 1);
    for (std::size_t i = 0; i < xs.size(); ++i) X(i, 0) = xs[i];
    const auto s = hbos_score(X, 10, 0.1);
    EXPECT_EQ(argmax_of(s), xs.size() - 1);
}

TEST(Loda, SingleCutMatchesHistogramAlongProjection) {
    rng r(18);
    matrix X(60, 3);
    for (double& v : X.flat()) v = r.uniform();
    const std::vector<std::vector<double>> projection{{0.0, 1.0, 0.0}};
    const auto s = loda_score_with_projections(X, 8, projection);

    // independent direct histogram on the normalized feature
    const matrix Z = minmax_normalize(X);
    std::vector<double> z(60);
    for (std::size_t i = 0; i < 60; ++i) z[i] = Z(i, 1);
    double lo = z[0], hi = z[0];
    for (double v : z) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    std::vector<double> prob(8, 0.0);
    for (double v : z) {
        auto b = static_cast<std::size_t>((v - lo) / (hi - lo) * 8.0);
        prob[std::min<std::size_t>(b, 7)] += 1.0 / 60.0;
    }
    for (std::size_t i = 0; i < 60; ++i) {
        auto b = static_cast<std::size_t>((z[i] - lo) / (hi - lo) * 8.0);
        const double expected = -std::log(prob[std::min<std::size_t>(b, 7)] + 1e-12);
        EXPECT_NEAR(s[i], expected, 1e-12);
    }
}

TEST(Loda, DeterministicGivenSeed) {
    rng r(20);
    matrix X(50, 5);
    for (double& v : X.flat()) v = r.gauss();
    EXPECT_EQ(loda_score(X, 10, 5, 99), loda_score(X, 10, 5, 99));
}

TEST(Detectors, PermutationEquivariance) {
    rng r(22);
    matrix X(40, 3);
    for (double& v : X.flat()) v = r.gauss();

    std::vector<std::size_t> perm(40);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    r.shuffle(perm);
    matrix Xp(40, 3);
    for (std::size_t i = 0; i < 40; ++i) {
        for (std::size_t f = 0; f < 3; ++f) Xp(i, f) = X(perm[i], f);
    }

    // seedless detectors are exactly equivariant; subsampling ones are not
    const auto check = [&](const std::vector<double>& base, const std::vector<double>& permuted) {
        for (std::size_t i = 0; i < 40; ++i) EXPECT_DOUBLE_EQ(permuted[i], base[perm[i]]);
    };
    check(knn_score(X, 4, knn_method::mean), knn_score(Xp, 4, knn_method::mean));
    check(lof_score(X, 4), lof_score(Xp, 4));
    check(cof_score(X, 4), cof_score(Xp, 4));
    check(abod_score(X, 4), abod_score(Xp, 4));
    check(hbos_score(X, 10, 0.1), hbos_score(Xp, 10, 0.1));
}

TEST(Detectors, TranslationInvarianceOfDistanceFamilies) {
    rng r(24);
    matrix X(35, 3), Xt(35, 3);
    for (std::size_t i = 0; i < 35; ++i) {
        for (std::size_t f = 0; f < 3; ++f) {
            X(i, f) = r.gauss();
            Xt(i, f) = X(i, f) + 13.5;
        }
    }
    const auto close = [&](const std::vector<double>& a, const std::vector<double>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-9);
    };
    close(knn_score(X, 5, knn_method::largest), knn_score(Xt, 5, knn_method::largest));
    close(lof_score(X, 5), lof_score(Xt, 5));
    close(cof_score(X, 5), cof_score(Xt, 5));
}

TEST(Detectors, PlantedOutlierTopsEveryFamily) {
    matrix X(61, 4);
    rng r(26);
    for (std::size_t i = 0; i < 60; ++i) {
        for (std::size_t f = 0; f < 4; ++f) X(i, f) = r.gauss();
    }
    for (std::size_t f = 0; f < 4; ++f) X(60, f) = 50.0;

    EXPECT_EQ(argmax_of(knn_score(X, 5, knn_method::largest)), 60u);
    EXPECT_EQ(argmax_of(lof_score(X, 5)), 60u);
    EXPECT_EQ(argmax_of(cof_score(X, 5)), 60u);
    EXPECT_EQ(argmax_of(abod_score(X, 5)), 60u);
    EXPECT_EQ(argmax_of(hbos_score(X, 10, 0.1)), 60u);

    int iforest_wins = 0, loda_wins = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        iforest_wins += argmax_of(iforest_score(X, 50, 0.5, seed)) == 60u ? 1 : 0;
        loda_wins += argmax_of(loda_score(X, 10, 10, seed)) == 60u ? 1 : 0;
    }
    EXPECT_GE(iforest_wins, 19);
    EXPECT_GE(loda_wins, 19);
}

TEST(Zoo, DispatchAndImportGuard) {
    rng r(28);
    matrix X(30, 2);
    for (double& v : X.flat()) v = r.gauss();

    pool_config pc;
    pc.families = {"knn", "hbos"};
    for (const auto& spec : enumerate_model_pool(pc)) {
        if (spec.hp1.as_number() >= 30) continue; // k >= n slots fail by contract
        const auto s = fit_score(spec, X);
        EXPECT_EQ(s.size(), 30u);
    }

    const model_spec ocsvm{family::ocsvm, {"nu", "0.1"}, hyperparameter{"kernel", "rbf"}, 0};
    try {
        fit_score(ocsvm, X);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::config_error);
    }
}
