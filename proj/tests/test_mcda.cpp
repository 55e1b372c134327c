#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "gwva/errors.hpp"
#include "gwva/mcda.hpp"
#include "gwva/presets.hpp"

using namespace gwva;

namespace {

// Published 8-parameter weight columns the preset matrices must reproduce.
constexpr std::array<double, 8> kAhpWeights = {
    0.1786, 0.1429, 0.1071, 0.0714, 0.0357, 0.1786, 0.1071, 0.1786};
constexpr std::array<double, 8> kFuzzyWeights = {
    0.1233, 0.1169, 0.1142, 0.1207, 0.1640, 0.1233, 0.1142, 0.1233};

// Independent transcription of the fuzzy comparison table, kept separate
// from the preset builder on purpose: the oracle below recomputes the
// expected weights from these raw triples with plain arithmetic.
constexpr double kFuzzyTable[8][8][3] = {
    {{1.00, 1.00, 1.00}, {1.25, 0.80, 1.00}, {1.67, 0.60, 1.00},
     {2.50, 0.40, 1.00}, {5.00, 0.20, 1.00}, {1.00, 1.00, 1.00},
     {1.67, 0.60, 1.00}, {1.00, 1.00, 1.00}},
    {{0.80, 1.25, 1.00}, {1.00, 1.00, 1.00}, {1.33, 0.75, 1.00},
     {2.00, 0.50, 1.00}, {4.00, 0.25, 1.00}, {0.80, 1.25, 1.00},
     {1.33, 0.75, 1.00}, {0.80, 1.25, 1.00}},
    {{0.60, 1.67, 1.00}, {0.75, 1.33, 1.00}, {1.00, 1.00, 1.00},
     {1.50, 0.67, 1.00}, {3.00, 0.33, 1.00}, {0.60, 1.67, 1.00},
     {1.00, 1.00, 1.00}, {0.60, 1.67, 1.00}},
    {{0.40, 2.50, 1.00}, {0.50, 2.00, 1.00}, {0.67, 1.50, 1.00},
     {1.00, 1.00, 1.00}, {2.00, 0.50, 1.00}, {0.40, 2.50, 1.00},
     {0.67, 1.50, 1.00}, {0.40, 2.50, 1.00}},
    {{0.20, 5.00, 1.00}, {0.25, 4.00, 1.00}, {0.33, 3.00, 1.00},
     {0.50, 2.00, 1.00}, {1.00, 1.00, 1.00}, {0.20, 5.00, 1.00},
     {0.33, 3.00, 1.00}, {0.20, 5.00, 1.00}},
    {{1.00, 1.00, 1.00}, {1.25, 0.80, 1.00}, {1.67, 0.60, 1.00},
     {2.50, 0.40, 1.00}, {5.00, 0.20, 1.00}, {1.00, 1.00, 1.00},
     {1.67, 0.60, 1.00}, {1.00, 1.00, 1.00}},
    {{0.60, 1.67, 1.00}, {0.75, 1.33, 1.00}, {1.00, 1.00, 1.00},
     {1.50, 0.67, 1.00}, {3.00, 0.33, 1.00}, {0.60, 1.67, 1.00},
     {1.00, 1.00, 1.00}, {0.60, 1.67, 1.00}},
    {{1.00, 1.00, 1.00}, {1.25, 0.80, 1.00}, {1.67, 0.60, 1.00},
     {2.50, 0.40, 1.00}, {5.00, 0.20, 1.00}, {1.00, 1.00, 1.00},
     {1.67, 0.60, 1.00}, {1.00, 1.00, 1.00}}};

// spreadsheet-style oracle: centroid of each cell, row sums over total
std::array<double, 8> fuzzy_oracle_weights()
{
    std::array<double, 8> rowsum{};
    double total = 0.0;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const double centroid = (kFuzzyTable[i][j][0] +
                                     kFuzzyTable[i][j][1] +
                                     kFuzzyTable[i][j][2]) /
                                    3.0;
            rowsum[i] += centroid;
            total += centroid;
        }
    }
    for (double& w : rowsum)
        w /= total;
    return rowsum;
}

} // namespace

TEST_SUITE_BEGIN("mcda");

TEST_CASE("matrix_from_priorities builds the published ratio entries")
{
    const auto v = preset_ahp_priorities();
    const PairwiseMatrix pm = matrix_from_priorities(v);
    CHECK(pm.at(0, 1) == doctest::Approx(5.0 / 4.0)); // D vs R
    CHECK(pm.at(4, 0) == doctest::Approx(1.0 / 5.0)); // T vs D
    CHECK(pm.at(0, 4) == doctest::Approx(5.0));
    CHECK(pm.saaty_bounds_ok());

    const PairwiseMatrix ones = matrix_from_priorities(std::vector{1.0, 1.0, 1.0});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(ones.at(i, j) == 1.0);

    const PairwiseMatrix two = matrix_from_priorities(std::vector{2.0, 1.0});
    CHECK(two.at(0, 1) == 2.0);
    CHECK(two.at(1, 0) == 0.5);

    CHECK_THROWS_AS(matrix_from_priorities(std::vector{1.0, -2.0}),
                    input_error);
}

TEST_CASE("ahp_weights reproduces the published AHP weight column")
{
    const WeightVector w =
        ahp_weights(matrix_from_priorities(preset_ahp_priorities()));
    REQUIRE(w.w.size() == 8);
    double sum = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(std::abs(w.w[i] - kAhpWeights[i]) < 5e-4);
        sum += w.w[i];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ahp_weights: symmetric 2x2 and random consistent matrices")
{
    const WeightVector w =
        ahp_weights(PairwiseMatrix(2, {1.0, 1.0, 1.0, 1.0}));
    CHECK(w.w[0] == doctest::Approx(0.5));
    CHECK(w.w[1] == doctest::Approx(0.5));

    std::mt19937 rng(2718);
    std::uniform_real_distribution<double> prio(0.1, 20.0);
    std::uniform_int_distribution<int> dim(3, 9);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = dim(rng);
        std::vector<double> v(n);
        double total = 0.0;
        for (double& p : v) {
            p = prio(rng);
            total += p;
        }
        const PairwiseMatrix pm = matrix_from_priorities(v);
        const WeightVector weights = ahp_weights(pm);
        for (int i = 0; i < n; ++i)
            REQUIRE(weights.w[i] ==
                    doctest::Approx(v[i] / total).epsilon(1e-12));
        const ConsistencyResult c = consistency(pm, weights);
        REQUIRE(std::abs(c.cr) < 1e-9);

        // scale invariance: alpha * v yields identical weights
        std::vector<double> scaled(v);
        for (double& p : scaled)
            p *= 37.5;
        const WeightVector w2 = ahp_weights(matrix_from_priorities(scaled));
        for (int i = 0; i < n; ++i)
            REQUIRE(std::abs(w2.w[i] - weights.w[i]) < 1e-12);
    }
}

TEST_CASE("consistency: consistent matrices, small-n convention, RI table")
{
    const PairwiseMatrix pm = matrix_from_priorities(preset_ahp_priorities());
    const ConsistencyResult c = consistency(pm, ahp_weights(pm));
    CHECK(c.lambda_max == doctest::Approx(8.0).epsilon(1e-9));
    CHECK(std::abs(c.ci) < 1e-9);
    CHECK(std::abs(c.cr) < 1e-9);
    CHECK(c.acceptable);

    const PairwiseMatrix two(2, {1.0, 3.0, 1.0 / 3.0, 1.0});
    const ConsistencyResult c2 = consistency(two, ahp_weights(two));
    CHECK(c2.ci == 0.0);
    CHECK(c2.cr == 0.0);

    const PairwiseMatrix three(
        3, {1.0, 2.0, 4.0, 0.5, 1.0, 2.0, 0.25, 0.5, 1.0});
    const ConsistencyResult c3 = consistency(three, ahp_weights(three));
    CHECK(std::abs(c3.cr) < 1e-9);

    CHECK(random_index(8) == 1.41);
    CHECK(random_index(1) == 0.0);
    CHECK(random_index(2) == 0.0);
    CHECK_THROWS_AS(random_index(11), input_error);
}

TEST_CASE("reciprocity is checked, not assumed")
{
    CHECK_THROWS_WITH_AS(PairwiseMatrix(2, {1.0, 2.0, 0.75, 1.0}),
                         doctest::Contains("reciprocity"), input_error);
    CHECK_THROWS_AS(PairwiseMatrix(2, {1.0, 2.0, 0.5, 1.5}), input_error);
    CHECK_THROWS_AS(PairwiseMatrix(2, {1.0, -2.0, -0.5, 1.0}), input_error);
}

TEST_CASE("tfn_membership follows the piecewise definition")
{
    const Tfn t{0.0, 1.0, 2.0};
    CHECK(tfn_membership(t, 1.0) == 1.0);
    CHECK(tfn_membership(t, 0.5) == doctest::Approx(0.5));
    CHECK(tfn_membership(t, 3.0) == 0.0);
    CHECK(tfn_membership(t, 0.0) == 0.0);
    CHECK(tfn_membership(t, 2.0) == 0.0);
    CHECK(tfn_membership(t, 1.5) == doctest::Approx(0.5));

    CHECK(tfn_membership(Tfn{2.0, 2.0, 2.0}, 2.0) == 1.0); // point mass
    CHECK(tfn_membership(Tfn{2.0, 2.0, 2.0}, 2.1) == 0.0);
    CHECK(tfn_membership(Tfn{1.0, 1.0, 3.0}, 1.0) == 1.0); // flat left side

    CHECK_THROWS_AS(tfn_membership(Tfn{2.0, 1.0, 3.0}, 1.5), input_error);
}

TEST_CASE("defuzzify_centroid: values and linearity")
{
    CHECK(defuzzify_centroid(Tfn{1.0, 1.0, 1.0}) == 1.0);
    CHECK(defuzzify_centroid(Tfn{5.00, 0.20, 1.00}) ==
          doctest::Approx(2.0667).epsilon(1e-4));
    CHECK(defuzzify_centroid(Tfn{7.5, 7.5, 7.5}) == 7.5);

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> value(0.1, 9.0);
    for (int trial = 0; trial < 50; ++trial) {
        const Tfn t{value(rng), value(rng), value(rng)};
        const double alpha = value(rng), beta = value(rng);
        const Tfn scaled{alpha * t.l + beta, alpha * t.m + beta,
                         alpha * t.u + beta};
        REQUIRE(defuzzify_centroid(scaled) ==
                doctest::Approx(alpha * defuzzify_centroid(t) + beta)
                    .epsilon(1e-12));
    }
}

TEST_CASE("fuzzy_ahp_weights reproduces the published fuzzy weight column")
{
    const std::array<double, 8> oracle = fuzzy_oracle_weights();
    // the oracle itself must agree with the published column
    for (int i = 0; i < 8; ++i)
        REQUIRE(std::abs(oracle[i] - kFuzzyWeights[i]) < 5e-3);

    const WeightVector w = fuzzy_ahp_weights(preset_fuzzy_matrix());
    REQUIRE(w.w.size() == 8);
    double sum = 0.0;
    for (int i = 0; i < 8; ++i) {
        CHECK(std::abs(w.w[i] - kFuzzyWeights[i]) < 5e-3);
        CHECK(w.w[i] == doctest::Approx(oracle[i]).epsilon(1e-12));
        sum += w.w[i];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fuzzy_ahp_weights: uniform matrix and crisp reduction")
{
    std::vector<Tfn> ones(16, Tfn{1.0, 1.0, 1.0});
    const WeightVector uniform = fuzzy_ahp_weights(FuzzyPairwiseMatrix(4, ones));
    for (double w : uniform.w)
        CHECK(w == doctest::Approx(0.25).epsilon(1e-12));

    // degenerate TFNs at the entries of a consistent ratio matrix reduce to
    // crisp row-sum normalization, i.e. v / sum(v)
    const std::vector<double> v{4.0, 2.0, 1.0, 3.0};
    const double total = 10.0;
    std::vector<Tfn> cells;
    for (double vi : v)
        for (double vj : v) {
            const double ratio = vi / vj;
            cells.push_back({ratio, ratio, ratio});
        }
    const WeightVector w = fuzzy_ahp_weights(
        FuzzyPairwiseMatrix(static_cast<int>(v.size()), std::move(cells)));
    // row sums of a consistent ratio matrix are proportional to v
    for (std::size_t i = 0; i < v.size(); ++i)
        REQUIRE(w.w[i] == doctest::Approx(v[i] / total).epsilon(1e-9));
}

TEST_CASE("fuzzy matrix construction enforces the unit diagonal")
{
    std::vector<Tfn> cells(4, Tfn{1.0, 1.0, 1.0});
    cells[0] = {1.0, 2.0, 1.0};
    CHECK_THROWS_AS(FuzzyPairwiseMatrix(2, std::move(cells)), input_error);
    std::vector<Tfn> bad(4, Tfn{1.0, 1.0, 1.0});
    bad[1] = {-1.0, 1.0, 1.0};
    CHECK_THROWS_AS(FuzzyPairwiseMatrix(2, std::move(bad)), input_error);
}

TEST_SUITE_END();
