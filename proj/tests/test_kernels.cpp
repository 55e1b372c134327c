#include <doctest.h>

#include <cstring>
#include <random>
#include <vector>

#include "gwva/kernels.hpp"

using namespace gwva;

namespace {

constexpr double kNodata = -9999.0;

// random cell array with a sprinkling of nodata
std::vector<double> random_cells(std::mt19937& rng, std::size_t n,
                                 double nodata_fraction = 0.1)
{
    std::uniform_real_distribution<double> value(-100.0, 100.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<double> cells(n);
    for (double& c : cells)
        c = coin(rng) < nodata_fraction ? kNodata : value(rng);
    return cells;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b)
{
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

} // namespace

TEST_SUITE_BEGIN("kernels");

TEST_CASE("scalar weighted_sum: values and nodata absorption")
{
    const std::vector<double> a{1.0, 1.0, kNodata, 1.0};
    const std::vector<double> b{2.0, 2.0, 2.0, kNodata};
    const double* layers[] = {a.data(), b.data()};
    const double weights[] = {5.0, 3.0};
    std::vector<double> out(4);
    kernels::scalar::weighted_sum(layers, weights, 2, kNodata, out.data(), 4);
    CHECK(out[0] == 11.0);
    CHECK(out[1] == 11.0);
    CHECK(out[2] == kNodata);
    CHECK(out[3] == kNodata);
}

TEST_CASE("scalar classify_cells: closed-above breaks")
{
    const std::vector<double> in{0.5, 1.0, 1.5, 2.0, 9.0, kNodata};
    const std::vector<double> breaks{1.0, 2.0};
    std::vector<double> out(in.size());
    kernels::scalar::classify_cells(in.data(), breaks.data(), breaks.size(),
                                    kNodata, out.data(), in.size());
    CHECK(out[0] == 1.0);
    CHECK(out[1] == 1.0); // boundary goes to the lower class
    CHECK(out[2] == 2.0);
    CHECK(out[3] == 2.0);
    CHECK(out[4] == 3.0);
    CHECK(out[5] == kNodata);
}

TEST_CASE("scalar minmax_valid skips nodata")
{
    const std::vector<double> in{kNodata, 3.0, -7.0, kNodata, 5.0};
    double mn = 0.0, mx = 0.0;
    std::size_t n_valid = 0;
    kernels::scalar::minmax_valid(in.data(), in.size(), kNodata, mn, mx,
                                  n_valid);
    CHECK(mn == -7.0);
    CHECK(mx == 5.0);
    CHECK(n_valid == 3);
}

TEST_CASE("avx2 kernels are bit-identical to the scalar reference")
{
    if (!kernels::avx2_available()) {
        MESSAGE("AVX2 unavailable on this machine; dispatch equivalence "
                "cannot be exercised");
        return;
    }
#ifdef GWVA_HAVE_AVX2_KERNELS
    std::mt19937 rng(20240817);
    // deliberately awkward lengths around the 4-lane width
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 63u, 1000u, 1001u}) {
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n_layers = 1 + trial % 8;
            std::vector<std::vector<double>> layers;
            std::vector<const double*> ptrs;
            std::vector<double> weights;
            std::uniform_real_distribution<double> wdist(-5.0, 5.0);
            for (std::size_t l = 0; l < n_layers; ++l) {
                layers.push_back(random_cells(rng, n));
                ptrs.push_back(layers.back().data());
                weights.push_back(wdist(rng));
            }
            std::vector<double> ref(n), simd(n);
            kernels::scalar::weighted_sum(ptrs.data(), weights.data(),
                                          n_layers, kNodata, ref.data(), n);
            kernels::avx2::weighted_sum(ptrs.data(), weights.data(), n_layers,
                                        kNodata, simd.data(), n);
            REQUIRE(bitwise_equal(ref, simd));

            const std::vector<double> in = random_cells(rng, n);
            std::vector<double> breaks;
            double b = -80.0;
            for (std::size_t j = 0; j < 1 + trial % 6; ++j) {
                breaks.push_back(b);
                b += 25.0;
            }
            kernels::scalar::classify_cells(in.data(), breaks.data(),
                                            breaks.size(), kNodata, ref.data(),
                                            n);
            kernels::avx2::classify_cells(in.data(), breaks.data(),
                                          breaks.size(), kNodata, simd.data(),
                                          n);
            REQUIRE(bitwise_equal(ref, simd));

            const std::vector<double> xs = random_cells(rng, n, 0.0);
            const std::vector<double> ys = random_cells(rng, n, 0.0);
            kernels::scalar::squared_distances(xs.data(), ys.data(), n, 3.25,
                                               -7.5, ref.data());
            kernels::avx2::squared_distances(xs.data(), ys.data(), n, 3.25,
                                             -7.5, simd.data());
            REQUIRE(bitwise_equal(ref, simd));

            double mn1 = 1.0, mx1 = 2.0, mn2 = 1.0, mx2 = 2.0;
            std::size_t c1 = 0, c2 = 0;
            kernels::scalar::minmax_valid(in.data(), n, kNodata, mn1, mx1, c1);
            kernels::avx2::minmax_valid(in.data(), n, kNodata, mn2, mx2, c2);
            REQUIRE(c1 == c2);
            REQUIRE(mn1 == mn2);
            REQUIRE(mx1 == mx2);
        }
    }
#endif
}

TEST_CASE("all-nodata input stays nodata through weighted_sum")
{
    const std::vector<double> a(7, kNodata);
    const double* layers[] = {a.data()};
    const double weights[] = {2.0};
    std::vector<double> out(7);
    kernels::weighted_sum(layers, weights, 1, kNodata, out.data(), 7);
    for (double v : out)
        CHECK(v == kNodata);
}

TEST_SUITE_END();
