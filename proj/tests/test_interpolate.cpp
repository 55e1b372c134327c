#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <random>

#include "gwva/errors.hpp"
#include "gwva/interpolate.hpp"

using namespace gwva;

namespace {

const GridHeader kOneCell{1, 1, 0.0, 0.0, 10.0, -9999.0};

EmpiricalVariogram synthetic_variogram(const VariogramModel& truth,
                                       int n_lags, double max_lag,
                                       std::size_t pairs_per_bin = 40)
{
    EmpiricalVariogram ev;
    const double width = max_lag / n_lags;
    for (int b = 0; b < n_lags; ++b) {
        const double h = (b + 0.5) * width;
        ev.bins.push_back({h, truth.gamma(h), pairs_per_bin});
    }
    return ev;
}

std::vector<SamplePoint> random_points(std::mt19937& rng, std::size_t n,
                                       double extent = 1000.0)
{
    std::uniform_real_distribution<double> coord(0.0, extent);
    std::uniform_real_distribution<double> value(-20.0, 80.0);
    std::vector<SamplePoint> points;
    while (points.size() < n) {
        SamplePoint p{coord(rng), coord(rng), value(rng)};
        bool dup = false;
        for (const SamplePoint& q : points)
            dup = dup || (q.x == p.x && q.y == p.y);
        if (!dup)
            points.push_back(p);
    }
    return points;
}

} // namespace

TEST_SUITE_BEGIN("interpolate");

TEST_CASE("idw: exact hit, constant field, equidistant mean")
{
    // cell center of the 1x1 geometry is (5, 5)
    const std::vector<SamplePoint> hit{{5.0, 5.0, 12.5}, {100.0, 100.0, 99.0}};
    CHECK(idw(hit, kOneCell).at(0, 0) == 12.5);

    const std::vector<SamplePoint> constant{{1.0, 1.0, 7.0}, {9.0, 3.0, 7.0}};
    CHECK(idw(constant, kOneCell).at(0, 0) == doctest::Approx(7.0));

    const std::vector<SamplePoint> pair{{0.0, 5.0, 0.0}, {10.0, 5.0, 10.0}};
    CHECK(idw(pair, kOneCell, 2.0, 2).at(0, 0) ==
          doctest::Approx(5.0).epsilon(1e-6));
}

TEST_CASE("idw preconditions")
{
    CHECK_THROWS_AS(idw({}, kOneCell), input_error);
    const std::vector<SamplePoint> p{{1.0, 1.0, 1.0}};
    CHECK_THROWS_AS(idw(p, kOneCell, 0.0, 2), input_error);
    CHECK_THROWS_AS(idw(p, kOneCell, 2.0, 0), input_error);
}

TEST_CASE("idw outputs stay inside the sample value range")
{
    std::mt19937 rng(808);
    const GridHeader geom{15, 12, 0.0, 0.0, 80.0, -9999.0};
    for (int trial = 0; trial < 10; ++trial) {
        const auto points = random_points(rng, 12);
        double lo = points[0].value, hi = points[0].value;
        for (const SamplePoint& p : points) {
            lo = std::min(lo, p.value);
            hi = std::max(hi, p.value);
        }
        const Grid g = idw(points, geom, 1.5 + trial * 0.25, 5);
        for (double v : g.values()) {
            REQUIRE(v >= lo - 1e-12);
            REQUIRE(v <= hi + 1e-12);
        }
    }
}

TEST_CASE("idw shifts exactly with a constant added to all values")
{
    std::mt19937 rng(555);
    const GridHeader geom{9, 7, 0.0, 0.0, 100.0, -9999.0};
    const auto points = random_points(rng, 10);
    std::vector<SamplePoint> shifted = points;
    const double c = 123.25;
    for (SamplePoint& p : shifted)
        p.value += c;
    const Grid a = idw(points, geom);
    const Grid b = idw(shifted, geom);
    for (std::size_t i = 0; i < a.size(); ++i)
        REQUIRE(b.values()[i] ==
                doctest::Approx(a.values()[i] + c).epsilon(1e-12));
}

TEST_CASE("empirical_variogram bins half squared differences")
{
    const std::vector<SamplePoint> two{{0.0, 0.0, 1.0}, {3.0, 4.0, 3.0}};
    const EmpiricalVariogram ev = empirical_variogram(two, 1, 10.0);
    REQUIRE(ev.bins.size() == 1);
    CHECK(ev.bins[0].pair_count == 1);
    CHECK(ev.bins[0].semivariance == doctest::Approx(2.0)); // 0.5 * (3-1)^2
    CHECK(ev.bins[0].lag_center == doctest::Approx(5.0));
}

TEST_CASE("empirical_variogram: equal values, out-of-reach pairs, order")
{
    std::mt19937 rng(77);
    auto points = random_points(rng, 15);
    for (SamplePoint& p : points)
        p.value = 4.5;
    for (const VariogramBin& b : empirical_variogram(points, 5, 2000.0).bins)
        CHECK(b.semivariance == 0.0);

    const std::vector<SamplePoint> far{{0.0, 0.0, 1.0}, {500.0, 0.0, 2.0}};
    for (const VariogramBin& b : empirical_variogram(far, 4, 100.0).bins)
        CHECK(b.pair_count == 0);

    // symmetric in point order
    auto shuffled = random_points(rng, 20);
    auto reversed = shuffled;
    std::reverse(reversed.begin(), reversed.end());
    const EmpiricalVariogram a = empirical_variogram(shuffled, 8, 1500.0);
    const EmpiricalVariogram b = empirical_variogram(reversed, 8, 1500.0);
    for (std::size_t i = 0; i < a.bins.size(); ++i) {
        CHECK(a.bins[i].pair_count == b.bins[i].pair_count);
        CHECK(a.bins[i].semivariance ==
              doctest::Approx(b.bins[i].semivariance).epsilon(1e-12));
    }

    const std::vector<SamplePoint> lone{{0.0, 0.0, 1.0}};
    CHECK_THROWS_AS(empirical_variogram(lone, 3, 10.0), input_error);
}

TEST_CASE("fit_variogram recovers synthetic parameters within 1%")
{
    for (VariogramShape shape :
         {VariogramShape::spherical, VariogramShape::exponential,
          VariogramShape::gaussian}) {
        VariogramModel truth;
        truth.shape = shape;
        truth.nugget = 0.0;
        truth.sill = 1.0;
        truth.range = 100.0;
        const VariogramModel fit =
            fit_variogram(synthetic_variogram(truth, 10, 200.0), shape);
        CHECK(std::abs(fit.nugget - truth.nugget) < 0.01 * truth.sill);
        CHECK(std::abs(fit.sill - truth.sill) < 0.01 * truth.sill);
        CHECK(std::abs(fit.range - truth.range) < 0.01 * truth.range);

        VariogramModel bumped;
        bumped.shape = shape;
        bumped.nugget = 0.35;
        bumped.sill = 2.1;
        bumped.range = 140.0;
        const VariogramModel fit2 =
            fit_variogram(synthetic_variogram(bumped, 14, 260.0), shape);
        CHECK(std::abs(fit2.nugget - bumped.nugget) < 0.01 * bumped.sill);
        CHECK(std::abs(fit2.sill - bumped.sill) < 0.01 * bumped.sill);
        CHECK(std::abs(fit2.range - bumped.range) < 0.01 * bumped.range);
    }
}

TEST_CASE("fit_variogram: flat data falls back to a pure-nugget fit")
{
    EmpiricalVariogram flat;
    for (int b = 0; b < 6; ++b)
        flat.bins.push_back({(b + 0.5) * 10.0, 3.25, 12});
    const VariogramModel fit =
        fit_variogram(flat, VariogramShape::spherical);
    CHECK(fit.nugget == doctest::Approx(3.25).epsilon(1e-9));
    CHECK(fit.sill == doctest::Approx(3.25).epsilon(1e-9));
    CHECK(fit.range == doctest::Approx(55.0)); // pinned to the max lag
    CHECK(!fit.degenerate);
}

TEST_CASE("fit_variogram: all-zero semivariances set the degenerate flag")
{
    EmpiricalVariogram zero;
    for (int b = 0; b < 5; ++b)
        zero.bins.push_back({(b + 0.5) * 10.0, 0.0, 9});
    const VariogramModel fit = fit_variogram(zero, VariogramShape::gaussian);
    CHECK(fit.degenerate);
    CHECK(fit.nugget == 0.0);
    CHECK(fit.sill == 1e-12);
    CHECK(fit.range == doctest::Approx(45.0));
}

TEST_CASE("fit_variogram needs 3 non-empty bins and is deterministic")
{
    EmpiricalVariogram two;
    two.bins.push_back({5.0, 1.0, 3});
    two.bins.push_back({15.0, 2.0, 3});
    two.bins.push_back({25.0, 0.0, 0}); // empty: excluded
    CHECK_THROWS_AS(fit_variogram(two, VariogramShape::spherical),
                    input_error);

    VariogramModel truth;
    truth.nugget = 0.2;
    truth.sill = 1.7;
    truth.range = 80.0;
    const EmpiricalVariogram ev = synthetic_variogram(truth, 12, 150.0);
    const VariogramModel a = fit_variogram(ev, VariogramShape::spherical);
    const VariogramModel b = fit_variogram(ev, VariogramShape::spherical);
    CHECK(std::memcmp(&a.nugget, &b.nugget, sizeof(double)) == 0);
    CHECK(std::memcmp(&a.sill, &b.sill, sizeof(double)) == 0);
    CHECK(std::memcmp(&a.range, &b.range, sizeof(double)) == 0);
}

TEST_CASE("kriging weights sum to 1 at random prediction locations")
{
    std::mt19937 rng(909);
    std::uniform_real_distribution<double> coord(-200.0, 1200.0);
    for (int trial = 0; trial < 25; ++trial) {
        const auto points = random_points(rng, 3 + trial % 20);
        VariogramModel model;
        model.shape = trial % 2 ? VariogramShape::exponential
                                : VariogramShape::spherical;
        model.nugget = trial % 3 ? 0.4 : 0.0;
        model.sill = 2.0;
        model.range = 300.0;
        const auto w =
            kriging_weights(points, model, coord(rng), coord(rng));
        double sum = 0.0;
        for (double wi : w)
            sum += wi;
        REQUIRE(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("kriging: exact interpolation and midpoint symmetry")
{
    VariogramModel model;
    model.nugget = 0.0;
    model.sill = 1.0;
    model.range = 50.0;

    // 3x1 grid, cell centers (5,5), (15,5), (25,5)
    const GridHeader geom{3, 1, 0.0, 0.0, 10.0, -9999.0};
    const std::vector<SamplePoint> samples{{5.0, 5.0, 42.0},
                                           {25.0, 5.0, 7.0}};
    const Grid g = kriging(samples, geom, model);
    CHECK(g.at(0, 0) == doctest::Approx(42.0).epsilon(1e-6));
    CHECK(g.at(0, 2) == doctest::Approx(7.0).epsilon(1e-6));

    const std::vector<SamplePoint> ends{{5.0, 5.0, 0.0}, {25.0, 5.0, 10.0}};
    for (VariogramShape shape :
         {VariogramShape::spherical, VariogramShape::exponential,
          VariogramShape::gaussian}) {
        model.shape = shape;
        const Grid mid = kriging(ends, geom, model);
        CHECK(mid.at(0, 1) == doctest::Approx(5.0).epsilon(1e-6));
    }
}

TEST_CASE("kriging predictions are translation-equivariant in values")
{
    std::mt19937 rng(3131);
    const auto points = random_points(rng, 14);
    std::vector<SamplePoint> shifted = points;
    for (SamplePoint& p : shifted)
        p.value += 250.0;
    VariogramModel model;
    model.nugget = 0.1;
    model.sill = 1.4;
    model.range = 400.0;
    const GridHeader geom{6, 6, 0.0, 0.0, 160.0, -9999.0};
    const Grid a = kriging(points, geom, model);
    const Grid b = kriging(shifted, geom, model);
    for (std::size_t i = 0; i < a.size(); ++i)
        REQUIRE(b.values()[i] ==
                doctest::Approx(a.values()[i] + 250.0).epsilon(1e-9));
}

TEST_CASE("kriging rejects duplicate points by location")
{
    const std::vector<SamplePoint> dup{{5.0, 5.0, 1.0},
                                       {5.0, 5.0, 2.0},
                                       {20.0, 5.0, 3.0}};
    VariogramModel model;
    CHECK_THROWS_WITH_AS(kriging(dup, kOneCell, model),
                         doctest::Contains("duplicate points"),
                         compute_error);
}

TEST_CASE("read_points_csv: header check and duplicate rejection")
{
    const auto dir = std::filesystem::temp_directory_path();
    const auto good = dir / "gwva_pts_good.csv";
    {
        std::ofstream out(good);
        out << "x,y,value\n1,2,3.5\n4,5,6.5\n";
    }
    const auto points = read_points_csv(good);
    REQUIRE(points.size() == 2);
    CHECK(points[1].value == 6.5);

    const auto bad_header = dir / "gwva_pts_hdr.csv";
    {
        std::ofstream out(bad_header);
        out << "lon,lat,value\n1,2,3\n";
    }
    CHECK_THROWS_AS(read_points_csv(bad_header), input_error);

    const auto dup = dir / "gwva_pts_dup.csv";
    {
        std::ofstream out(dup);
        out << "x,y,value\n1,2,3\n1,2,4\n";
    }
    CHECK_THROWS_WITH_AS(read_points_csv(dup), doctest::Contains("duplicate"),
                         input_error);
}

TEST_SUITE_END();
