#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "gwva/grid.hpp"

namespace gwva {

/// Scattered measurement at a planar location.
struct SamplePoint {
    double x;
    double y;
    double value;
};

/// Load `x,y,value` CSV (header required, decimal point, one point per
/// line). Duplicate (x, y) locations are rejected.
std::vector<SamplePoint> read_points_csv(const std::filesystem::path& path);

/// Inverse-distance weighting onto a grid: each cell is the d^(-power)
/// weighted mean of its k nearest samples (Euclidean distance from the cell
/// center). A cell center within 1e-9 * cellsize of a sample takes that
/// sample's value exactly.
Grid idw(std::span<const SamplePoint> points, const GridHeader& geometry,
         double power = 2.0, int k = 12);

struct VariogramBin {
    double lag_center;
    double semivariance; // mean of 0.5 * (z_i - z_j)^2 in the bin
    std::size_t pair_count;
};

struct EmpiricalVariogram {
    std::vector<VariogramBin> bins; // uniform width max_dist / n_lags
};

/// Bin half squared value differences of all point pairs with separation
/// <= max_dist. Empty bins keep pair_count 0 and are skipped by fitting.
EmpiricalVariogram empirical_variogram(std::span<const SamplePoint> points,
                                       int n_lags, double max_dist);

enum class VariogramShape { spherical, exponential, gaussian };

VariogramShape parse_variogram_shape(const std::string& name);
const char* variogram_shape_name(VariogramShape shape);

/// Bounded variogram model. gamma(0) = 0 exactly; for d > 0,
/// gamma(d) = nugget + (sill - nugget) * f(d / range) with f the unit shape
/// function (practical-range convention: exponential and gaussian reach
/// ~95% of the sill at d = range).
struct VariogramModel {
    VariogramShape shape = VariogramShape::spherical;
    double nugget = 0.0;
    double sill = 1.0;
    double range = 1.0;
    bool degenerate = false; // flat-data fallback was applied

    double gamma(double distance) const;
};

/// Pair-count-weighted least-squares fit of (nugget, sill, range) to the
/// non-empty bins: deterministic grid search over candidate ranges with a
/// closed-form weighted solve for (nugget, sill - nugget) at each candidate,
/// refined by one local bisection pass. Needs >= 3 non-empty bins. All-zero
/// semivariances yield the degenerate pure-nugget fallback (nugget 0,
/// sill 1e-12, range = max lag); when the fitted partial sill collapses to
/// zero the range is pinned to the max lag (flat data leaves it
/// unidentifiable).
VariogramModel fit_variogram(const EmpiricalVariogram& ev, VariogramShape shape);

/// Ordinary kriging: per cell, solve the (n+1)-dimensional system with the
/// unit-sum Lagrange constraint and predict sum(lambda_i * z_i). Duplicate
/// points make the system singular and are reported by location.
Grid kriging(std::span<const SamplePoint> points, const GridHeader& geometry,
             const VariogramModel& model);

/// Kriging weights (length n, excluding the multiplier) for one prediction
/// location. Exposed for the weight-sum tests.
std::vector<double> kriging_weights(std::span<const SamplePoint> points,
                                    const VariogramModel& model, double x,
                                    double y);

} // namespace gwva
