#include "gwva/synth.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string_view>

#include "gwva/classify.hpp"
#include "gwva/errors.hpp"
#include "gwva/presets.hpp"
#include "gwva/vindex.hpp"

namespace gwva {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNoiseAmplitude = 0.08;

// Smooth [0, 1] trend over normalized coordinates; the three wave amplitudes
// sum to 0.5 so the field stays in range without clamping.
struct TrendField {
    double a1, b1, p1;
    double a2, b2, p2;
    double a3, p3;

    static TrendField from_rng(SplitMix64& rng)
    {
        TrendField t;
        t.a1 = rng.uniform(0.5, 2.0);
        t.b1 = rng.uniform(0.5, 2.0);
        t.p1 = rng.uniform(0.0, kTwoPi);
        t.a2 = rng.uniform(0.5, 2.5);
        t.b2 = rng.uniform(0.5, 2.5);
        t.p2 = rng.uniform(0.0, kTwoPi);
        t.a3 = rng.uniform(0.5, 1.5);
        t.p3 = rng.uniform(0.0, kTwoPi);
        return t;
    }

    double operator()(double u, double v) const
    {
        return 0.5 + 0.25 * std::sin(kTwoPi * (a1 * u + b1 * v) + p1) +
               0.15 * std::cos(kTwoPi * (a2 * u - b2 * v) + p2) +
               0.10 * std::sin(kTwoPi * a3 * (u + v) + p3);
    }
};

struct LayerDef {
    const char* name;
    bool categorical;
    double lo; // physical range for continuous layers
    double hi;
    int n_codes; // category count for categorical layers
};

// Physical ranges are inset by 0.5% so noisy values stay strictly inside the
// rating band unions.
constexpr LayerDef kLayerDefs[] = {
    {"D", false, 5.70, 66.50, 0},      {"R", false, 42.0, 390.0, 0},
    {"A", true, 0.0, 0.0, 4},          {"S", true, 0.0, 0.0, 5},
    {"T", false, 0.0, 40.50, 0},       {"I", true, 0.0, 0.0, 5},
    {"C", false, 2.96e-05, 4.15e-04, 0}, {"LU", true, 0.0, 0.0, 5},
};

double continuous_value(const LayerDef& def, double s)
{
    const double span = def.hi - def.lo;
    return (def.lo + 0.005 * span) + s * 0.99 * span;
}

double categorical_value(const LayerDef& def, double s)
{
    int code = 1 + static_cast<int>(s * def.n_codes);
    if (code > def.n_codes)
        code = def.n_codes;
    return static_cast<double>(code);
}

double clamp01(double s)
{
    return s < 0.0 ? 0.0 : (s > 1.0 ? 1.0 : s);
}

std::vector<SamplePoint> scatter_samples(SplitMix64& rng, int count,
                                         const GridHeader& h,
                                         const TrendField& trend,
                                         const LayerDef& def)
{
    const double width = h.ncols * h.cellsize;
    const double height = h.nrows * h.cellsize;
    std::vector<SamplePoint> points;
    points.reserve(count);
    while (static_cast<int>(points.size()) < count) {
        const double x = h.xllcorner + rng.next_double() * width;
        const double y = h.yllcorner + rng.next_double() * height;
        bool duplicate = false;
        for (const SamplePoint& p : points)
            duplicate = duplicate || (p.x == x && p.y == y);
        if (duplicate)
            continue;
        const double s = clamp01(trend((x - h.xllcorner) / width,
                                       (y - h.yllcorner) / height));
        points.push_back({x, y, continuous_value(def, s)});
    }
    return points;
}

} // namespace

SyntheticData generate(const SyntheticScenario& scenario)
{
    const GridHeader& h = scenario.geometry;
    if (h.ncols < 1 || h.nrows < 1 || !(h.cellsize > 0.0))
        throw input_error("generate: degenerate scenario geometry");
    if (scenario.n_wells < 1)
        throw input_error("generate: need at least one well");

    SplitMix64 master(scenario.seed);
    const std::size_t n_cells = static_cast<std::size_t>(h.ncols) * h.nrows;

    SyntheticData data{
        {}, {}, {}, {}, Grid::filled(h, h.nodata)};

    TrendField depth_trend{}, recharge_trend{};
    for (const LayerDef& def : kLayerDefs) {
        SplitMix64 rng(master.next());
        const TrendField trend = TrendField::from_rng(rng);
        if (std::string_view(def.name) == "D")
            depth_trend = trend;
        else if (std::string_view(def.name) == "R")
            recharge_trend = trend;
        std::vector<double> cells(n_cells);
        for (std::size_t idx = 0; idx < n_cells; ++idx) {
            const int row = static_cast<int>(idx) / h.ncols;
            const int col = static_cast<int>(idx) % h.ncols;
            const double u = (col + 0.5) / h.ncols;
            const double v = (h.nrows - 1 - row + 0.5) / h.nrows;
            const double noise = kNoiseAmplitude * (2.0 * rng.next_double() - 1.0);
            const double s = clamp01(trend(u, v) + noise);
            cells[idx] = def.categorical ? categorical_value(def, s)
                                         : continuous_value(def, s);
        }
        data.layers.emplace(def.name, Grid(h, std::move(cells)));
    }

    {
        SplitMix64 rng(master.next());
        data.depth_samples = scatter_samples(rng, scenario.n_depth_samples, h,
                                             depth_trend, kLayerDefs[0]);
    }
    {
        SplitMix64 rng(master.next());
        data.recharge_samples = scatter_samples(
            rng, scenario.n_recharge_samples, h, recharge_trend, kLayerDefs[1]);
    }

    // Planted truth: integer-weight DRASTIC_LU overlay of the generated
    // layers; the contamination labels are drawn from it.
    {
        IndexModel model;
        model.scheme = Scheme::drastic_lu;
        model.parameters = preset_parameters(true);
        model.weights = preset_integer_weights(true);
        for (const RatingScheme& scheme : preset_rating_schemes()) {
            RatingResult rated =
                apply_rating(data.layers.at(scheme.parameter), scheme);
            if (rated.out_of_range != 0)
                throw compute_error("generate: layer " + scheme.parameter +
                                    " produced out-of-range physical values");
            model.rating_layers.emplace(scheme.parameter,
                                        std::move(rated.grid));
        }
        data.planted_vi = compute_index(model);
    }

    {
        SplitMix64 rng(master.next());
        const auto range = data.planted_vi.value_range();
        const double lo = range->first;
        const double span = range->second - range->first;
        const double width = h.ncols * h.cellsize;
        const double height = h.nrows * h.cellsize;
        data.wells.reserve(scenario.n_wells);
        while (static_cast<int>(data.wells.size()) < scenario.n_wells) {
            const double x = h.xllcorner + rng.next_double() * width;
            const double y = h.yllcorner + rng.next_double() * height;
            const double vi = *sample_at(data.planted_vi, x, y);
            const double z = span > 0.0 ? (vi - lo) / span : 0.5;
            const double p =
                1.0 / (1.0 + std::exp(-scenario.link_steepness * (z - 0.5)));
            const bool positive = rng.next_double() < p;
            const double nitrate = positive ? rng.uniform(51.0, 300.0)
                                            : rng.uniform(0.0, 49.0);
            data.wells.push_back({x, y, nitrate});
        }
    }
    return data;
}

namespace {

std::string format_number(double v)
{
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

void write_text_file(const std::filesystem::path& path, const std::string& body)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw input_error("cannot create file: " + path.string());
    out << body;
    if (!out)
        throw input_error("failed writing file: " + path.string());
}

void write_points_csv(const std::filesystem::path& path,
                      std::span<const SamplePoint> points)
{
    std::string body = "x,y,value\n";
    for (const SamplePoint& p : points)
        body += format_number(p.x) + "," + format_number(p.y) + "," +
                format_number(p.value) + "\n";
    write_text_file(path, body);
}

} // namespace

void write_scenario_files(const SyntheticData& data,
                          const std::filesystem::path& dir)
{
    namespace fs = std::filesystem;
    fs::create_directories(dir / "layers");
    fs::create_directories(dir / "samples");
    for (const auto& [name, grid] : data.layers)
        write_ascii_grid_file(grid, dir / "layers" / (name + ".asc"));
    write_points_csv(dir / "samples" / "depth.csv", data.depth_samples);
    write_points_csv(dir / "samples" / "recharge.csv", data.recharge_samples);
    std::string wells = "x,y,nitrate_mg_l\n";
    for (const Observation& o : data.wells)
        wells += format_number(o.x) + "," + format_number(o.y) + "," +
                 format_number(o.nitrate) + "\n";
    write_text_file(dir / "wells.csv", wells);
}

} // namespace gwva
