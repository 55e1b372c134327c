#include <doctest.h>

#include <random>

#include "gwva/errors.hpp"
#include "gwva/presets.hpp"
#include "gwva/vindex.hpp"

using namespace gwva;

namespace {

const GridHeader kHeader{2, 2, 0.0, 0.0, 10.0, -9999.0};

// per-parameter admissible rating sets of the preset tables
const std::vector<std::vector<int>> kRatingSets = {
    {10, 8, 6, 4, 2},  // D
    {10, 8, 7, 4, 3},  // R
    {8, 6, 4, 2},      // A
    {10, 8, 6, 4, 3},  // S
    {10, 8, 6, 4, 2},  // T
    {10, 8, 6, 4, 2},  // I
    {10, 8, 6, 4, 2},  // C
    {10, 9, 7, 3, 1},  // LU
};

IndexModel constant_model(Scheme scheme, const std::vector<int>& ratings)
{
    IndexModel m;
    m.scheme = scheme;
    m.parameters = preset_parameters(scheme_uses_lu(scheme));
    m.weights = preset_integer_weights(scheme_uses_lu(scheme));
    for (std::size_t i = 0; i < m.parameters.size(); ++i)
        m.rating_layers.emplace(
            m.parameters[i],
            Grid::filled(kHeader, static_cast<double>(ratings[i])));
    return m;
}

} // namespace

TEST_SUITE_BEGIN("vindex");

TEST_CASE("compute_index reproduces the hand-summed overlay")
{
    const IndexModel m =
        constant_model(Scheme::drastic, {8, 7, 6, 4, 8, 6, 4});
    const Grid vi = compute_index(m);
    for (double v : vi.values())
        CHECK(v == 144.0); // 40+28+18+8+8+30+12
}

TEST_CASE("extreme rating combinations attain the documented bounds")
{
    CHECK(compute_index(constant_model(Scheme::drastic,
                                       {10, 10, 8, 10, 10, 10, 10}))
              .at(0, 0) == 224.0);
    CHECK(compute_index(constant_model(Scheme::drastic, {2, 3, 2, 3, 2, 2, 2}))
              .at(0, 0) == 52.0);
    CHECK(compute_index(constant_model(Scheme::drastic_lu,
                                       {2, 3, 2, 3, 2, 2, 2, 1}))
              .at(0, 0) == 57.0);
    CHECK(compute_index(constant_model(Scheme::drastic_lu,
                                       {10, 10, 8, 10, 10, 10, 10, 10}))
              .at(0, 0) == 274.0);
}

TEST_CASE("random admissible ratings stay inside the index bounds")
{
    std::mt19937 rng(60601);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> ratings;
        for (const auto& set : kRatingSets)
            ratings.push_back(
                set[std::uniform_int_distribution<std::size_t>(
                    0, set.size() - 1)(rng)]);
        std::vector<int> seven(ratings.begin(), ratings.begin() + 7);
        const double vi7 =
            compute_index(constant_model(Scheme::drastic, seven)).at(0, 0);
        REQUIRE(vi7 >= 52.0);
        REQUIRE(vi7 <= 224.0);
        const double vi8 =
            compute_index(constant_model(Scheme::drastic_lu, ratings))
                .at(0, 0);
        REQUIRE(vi8 >= 57.0);
        REQUIRE(vi8 <= 274.0);
    }
}

TEST_CASE("scaling all weights scales VI and leaves the class map fixed")
{
    std::mt19937 rng(808);
    const GridHeader h{12, 10, 0.0, 0.0, 25.0, -9999.0};
    IndexModel m;
    m.scheme = Scheme::drastic;
    m.parameters = preset_parameters(false);
    m.weights = preset_integer_weights(false);
    std::uniform_int_distribution<int> pick(0, 4);
    for (std::size_t p = 0; p < m.parameters.size(); ++p) {
        std::vector<double> cells(h.ncols * h.nrows);
        for (double& c : cells)
            c = static_cast<double>(kRatingSets[p][pick(rng) %
                                                   kRatingSets[p].size()]);
        m.rating_layers.emplace(m.parameters[p], Grid(h, std::move(cells)));
    }
    IndexModel scaled = m;
    const double alpha = 1.0 / 28.0; // integer weights -> normalized weights
    for (double& w : scaled.weights)
        w *= alpha;

    const VulnerabilityMap a = build_vulnerability_map(m, 4);
    const VulnerabilityMap b = build_vulnerability_map(scaled, 4);
    for (std::size_t i = 0; i < a.vi.size(); ++i) {
        REQUIRE(b.vi.values()[i] ==
                doctest::Approx(alpha * a.vi.values()[i]).epsilon(1e-12));
        REQUIRE(a.classes.values()[i] == b.classes.values()[i]);
    }
}

TEST_CASE("raising one rating never lowers the index")
{
    const std::vector<int> base{6, 7, 4, 4, 6, 6, 4};
    const double vi0 =
        compute_index(constant_model(Scheme::drastic, base)).at(0, 0);
    for (std::size_t p = 0; p < base.size(); ++p) {
        std::vector<int> bumped = base;
        bumped[p] += 2;
        const double vi1 =
            compute_index(constant_model(Scheme::drastic, bumped)).at(0, 0);
        CHECK(vi1 >= vi0);
    }
}

TEST_CASE("build_vulnerability_map: two-level surface splits at the gap")
{
    IndexModel m = constant_model(Scheme::drastic, {8, 7, 6, 4, 8, 6, 4});
    // push two cells of D to rating 10: VI 144 -> 154 there
    std::vector<double> d{10.0, 10.0, 8.0, 8.0};
    m.rating_layers.erase("D");
    m.rating_layers.emplace("D", Grid(kHeader, std::move(d)));
    const VulnerabilityMap map = build_vulnerability_map(m, 2);
    CHECK(map.classes.at(0, 0) == 2.0);
    CHECK(map.classes.at(0, 1) == 2.0);
    CHECK(map.classes.at(1, 0) == 1.0);
    CHECK(map.classes.at(1, 1) == 1.0);
    REQUIRE(map.breaks.breaks.size() == 1);
    CHECK(map.breaks.breaks[0] == 144.0);
}

TEST_CASE("constant surface classifies only with k=1; nodata propagates")
{
    IndexModel m = constant_model(Scheme::drastic, {8, 7, 6, 4, 8, 6, 4});
    const VulnerabilityMap one = build_vulnerability_map(m, 1);
    for (double v : one.classes.values())
        CHECK(v == 1.0);
    CHECK_THROWS_AS(build_vulnerability_map(m, 2), input_error);

    std::vector<double> holed{8.0, -9999.0, 8.0, 10.0};
    m.rating_layers.erase("D");
    m.rating_layers.emplace("D", Grid(kHeader, std::move(holed)));
    const VulnerabilityMap map = build_vulnerability_map(m, 2);
    CHECK(map.vi.is_nodata(map.vi.at(0, 1)));
    CHECK(map.classes.is_nodata(map.classes.at(0, 1)));
}

TEST_CASE("class_area_summary percentages cover exactly the valid cells")
{
    const Grid classes(kHeader, {1.0, 1.0, 2.0, -9999.0});
    const auto summary = class_area_summary(classes);
    REQUIRE(summary.size() == 2);
    CHECK(summary[0].class_id == 1);
    CHECK(summary[0].cells == 2);
    CHECK(summary[0].percent == doctest::Approx(66.6667).epsilon(1e-4));
    CHECK(summary[1].percent == doctest::Approx(33.3333).epsilon(1e-4));
    CHECK(summary[0].percent + summary[1].percent ==
          doctest::Approx(100.0).epsilon(1e-12));

    const auto single = class_area_summary(Grid::filled(kHeader, 3.0));
    REQUIRE(single.size() == 1);
    CHECK(single[0].percent == 100.0);

    CHECK(class_area_summary(Grid::filled(kHeader, -9999.0)).empty());
}

TEST_CASE("model validation rejects structural problems")
{
    IndexModel m = constant_model(Scheme::drastic_lu,
                                  {8, 7, 6, 4, 8, 6, 4, 9});
    m.rating_layers.erase("LU");
    CHECK_THROWS_WITH_AS(compute_index(m), doctest::Contains("LU"),
                         input_error);

    IndexModel wrong = constant_model(Scheme::drastic, {8, 7, 6, 4, 8, 6, 4});
    wrong.parameters.push_back("LU");
    CHECK_THROWS_AS(compute_index(wrong), input_error);

    IndexModel mismatched =
        constant_model(Scheme::drastic, {8, 7, 6, 4, 8, 6, 4});
    mismatched.rating_layers.erase("C");
    mismatched.rating_layers.emplace(
        "C", Grid::filled({2, 2, 99.0, 0.0, 10.0, -9999.0}, 4.0));
    CHECK_THROWS_WITH_AS(compute_index(mismatched),
                         doctest::Contains("geometry"), input_error);
}

TEST_SUITE_END();
