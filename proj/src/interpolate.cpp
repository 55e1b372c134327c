#include "gwva/interpolate.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

#include "detail/csv.hpp"
#include "gwva/errors.hpp"
#include "gwva/kernels.hpp"
#include "gwva/parallel.hpp"

namespace gwva {

namespace {

constexpr double kDegenerateSill = 1e-12;

struct CellCenter {
    double x;
    double y;
};

CellCenter cell_center(const GridHeader& h, std::size_t idx)
{
    const int row = static_cast<int>(idx) / h.ncols;
    const int col = static_cast<int>(idx) % h.ncols;
    return {h.xllcorner + (col + 0.5) * h.cellsize,
            h.yllcorner + (h.nrows - 1 - row + 0.5) * h.cellsize};
}

// Dense LU with partial pivoting, factored once and solved per cell.
struct LuFactors {
    int n = 0;
    std::vector<double> lu;
    std::vector<int> perm;
    double min_pivot = 0.0;
    double max_pivot = 0.0;
};

LuFactors lu_factor(std::vector<double> a, int n)
{
    LuFactors f;
    f.n = n;
    f.lu = std::move(a);
    f.perm.resize(n);
    for (int i = 0; i < n; ++i)
        f.perm[i] = i;
    auto at = [&f, n](int r, int c) -> double& {
        return f.lu[static_cast<std::size_t>(r) * n + c];
    };
    f.min_pivot = std::numeric_limits<double>::infinity();
    f.max_pivot = 0.0;
    for (int k = 0; k < n; ++k) {
        int pivot_row = k;
        double best = std::abs(at(k, k));
        for (int r = k + 1; r < n; ++r) {
            const double cand = std::abs(at(r, k));
            if (cand > best) {
                best = cand;
                pivot_row = r;
            }
        }
        if (best == 0.0)
            throw compute_error("singular kriging system (pivot " +
                                std::to_string(k) + " vanished)");
        if (pivot_row != k) {
            for (int c = 0; c < n; ++c)
                std::swap(at(k, c), at(pivot_row, c));
            std::swap(f.perm[k], f.perm[pivot_row]);
        }
        f.min_pivot = std::min(f.min_pivot, best);
        f.max_pivot = std::max(f.max_pivot, best);
        const double inv = 1.0 / at(k, k);
        for (int r = k + 1; r < n; ++r) {
            const double m = at(r, k) * inv;
            at(r, k) = m;
            for (int c = k + 1; c < n; ++c)
                at(r, c) -= m * at(k, c);
        }
    }
    return f;
}

void lu_solve(const LuFactors& f, std::span<const double> b, std::span<double> x)
{
    const int n = f.n;
    for (int i = 0; i < n; ++i)
        x[i] = b[f.perm[i]];
    for (int i = 1; i < n; ++i) {
        double s = x[i];
        for (int j = 0; j < i; ++j)
            s -= f.lu[static_cast<std::size_t>(i) * n + j] * x[j];
        x[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = x[i];
        for (int j = i + 1; j < n; ++j)
            s -= f.lu[static_cast<std::size_t>(i) * n + j] * x[j];
        x[i] = s / f.lu[static_cast<std::size_t>(i) * n + i];
    }
}

double unit_shape(VariogramShape shape, double x)
{
    if (x <= 0.0)
        return 0.0;
    switch (shape) {
    case VariogramShape::spherical:
        return x >= 1.0 ? 1.0 : 1.5 * x - 0.5 * x * x * x;
    case VariogramShape::exponential:
        return 1.0 - std::exp(-3.0 * x);
    case VariogramShape::gaussian:
        return 1.0 - std::exp(-3.0 * x * x);
    }
    return 1.0;
}

struct WlsFit {
    double nugget;
    double partial_sill;
    double sse;
};

// Closed-form pair-count-weighted least squares of gamma ~ a + b*f(h/range),
// clamped to a >= 0, b >= 0.
WlsFit wls_at_range(const std::vector<VariogramBin>& bins, VariogramShape shape,
                    double range)
{
    double sw = 0.0, sf = 0.0, sff = 0.0, sy = 0.0, sfy = 0.0;
    for (const VariogramBin& bin : bins) {
        const double w = static_cast<double>(bin.pair_count);
        const double fx = unit_shape(shape, bin.lag_center / range);
        sw += w;
        sf += w * fx;
        sff += w * fx * fx;
        sy += w * bin.semivariance;
        sfy += w * fx * bin.semivariance;
    }
    const double det = sw * sff - sf * sf;
    double a, b;
    if (std::abs(det) < 1e-14 * sw * std::max(sff, 1.0)) {
        b = 0.0;
        a = sy / sw;
    } else {
        b = (sw * sfy - sf * sy) / det;
        a = (sy - b * sf) / sw;
        if (b < 0.0) {
            b = 0.0;
            a = sy / sw;
        }
        if (a < 0.0) {
            a = 0.0;
            b = sff > 0.0 ? std::max(sfy / sff, 0.0) : 0.0;
        }
    }
    double sse = 0.0;
    for (const VariogramBin& bin : bins) {
        const double w = static_cast<double>(bin.pair_count);
        const double fx = unit_shape(shape, bin.lag_center / range);
        const double r = bin.semivariance - a - b * fx;
        sse += w * r * r;
    }
    return {a, b, sse};
}

} // namespace

std::vector<SamplePoint> read_points_csv(const std::filesystem::path& path)
{
    const auto rows = detail::read_numeric_csv(path, "x,y,value");
    std::vector<SamplePoint> points;
    points.reserve(rows.size());
    for (const auto& row : rows) {
        if (!std::isfinite(row[0]) || !std::isfinite(row[1]) ||
            !std::isfinite(row[2]))
            throw input_error(path.string() + ": non-finite sample point");
        points.push_back({row[0], row[1], row[2]});
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].x == points[j].x && points[i].y == points[j].y)
                throw input_error(path.string() + ": duplicate point location (" +
                                  std::to_string(points[i].x) + ", " +
                                  std::to_string(points[i].y) + ")");
    return points;
}

Grid idw(std::span<const SamplePoint> points, const GridHeader& geometry,
         double power, int k)
{
    if (points.empty())
        throw input_error("idw: empty point set");
    if (!(power > 0.0))
        throw input_error("idw: power must be positive");
    if (k < 1)
        throw input_error("idw: neighbor count must be at least 1");

    const std::size_t n_points = points.size();
    const std::size_t n_use = std::min<std::size_t>(k, n_points);
    std::vector<double> xs(n_points), ys(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        xs[i] = points[i].x;
        ys[i] = points[i].y;
    }
    const double eps = 1e-9 * geometry.cellsize;
    const double eps2 = eps * eps;

    const std::size_t n_cells =
        static_cast<std::size_t>(geometry.ncols) * geometry.nrows;
    std::vector<double> out(n_cells);

    parallel_for(n_cells, [&](std::size_t begin, std::size_t end) {
        std::vector<double> d2(n_points);
        std::vector<std::size_t> order(n_points);
        for (std::size_t idx = begin; idx < end; ++idx) {
            const CellCenter c = cell_center(geometry, idx);
            kernels::squared_distances(xs.data(), ys.data(), n_points, c.x,
                                       c.y, d2.data());
            // exact hit wins outright
            std::size_t hit = n_points;
            for (std::size_t p = 0; p < n_points; ++p) {
                if (d2[p] < eps2) {
                    hit = p;
                    break;
                }
            }
            if (hit < n_points) {
                out[idx] = points[hit].value;
                continue;
            }
            for (std::size_t p = 0; p < n_points; ++p)
                order[p] = p;
            std::partial_sort(order.begin(), order.begin() + n_use,
                              order.end(),
                              [&d2](std::size_t a, std::size_t b) {
                                  if (d2[a] != d2[b])
                                      return d2[a] < d2[b];
                                  return a < b;
                              });
            double wsum = 0.0, wz = 0.0;
            for (std::size_t r = 0; r < n_use; ++r) {
                const std::size_t p = order[r];
                const double w = std::pow(d2[p], -0.5 * power);
                wsum += w;
                wz += w * points[p].value;
            }
            out[idx] = wz / wsum;
        }
    });
    return Grid(geometry, std::move(out));
}

EmpiricalVariogram empirical_variogram(std::span<const SamplePoint> points,
                                       int n_lags, double max_dist)
{
    if (points.size() < 2)
        throw input_error("empirical_variogram: need at least 2 points");
    if (n_lags < 1)
        throw input_error("empirical_variogram: need at least 1 lag bin");
    if (!(max_dist > 0.0))
        throw input_error("empirical_variogram: max_dist must be positive");

    const double width = max_dist / n_lags;
    std::vector<double> sums(n_lags, 0.0);
    std::vector<std::size_t> counts(n_lags, 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const double dx = points[i].x - points[j].x;
            const double dy = points[i].y - points[j].y;
            const double h = std::sqrt(dx * dx + dy * dy);
            if (h > max_dist)
                continue;
            // h == max_dist lands in the last bin
            int bin = static_cast<int>(h / width);
            bin = std::min(bin, n_lags - 1);
            const double dz = points[i].value - points[j].value;
            sums[bin] += 0.5 * dz * dz;
            counts[bin] += 1;
        }
    }
    EmpiricalVariogram ev;
    ev.bins.reserve(n_lags);
    for (int b = 0; b < n_lags; ++b)
        ev.bins.push_back({(b + 0.5) * width,
                           counts[b] > 0 ? sums[b] / counts[b] : 0.0,
                           counts[b]});
    return ev;
}

VariogramShape parse_variogram_shape(const std::string& name)
{
    if (name == "spherical")
        return VariogramShape::spherical;
    if (name == "exponential")
        return VariogramShape::exponential;
    if (name == "gaussian")
        return VariogramShape::gaussian;
    throw input_error("unknown variogram shape '" + name +
                      "' (expected spherical, exponential or gaussian)");
}

const char* variogram_shape_name(VariogramShape shape)
{
    switch (shape) {
    case VariogramShape::spherical: return "spherical";
    case VariogramShape::exponential: return "exponential";
    case VariogramShape::gaussian: return "gaussian";
    }
    return "?";
}

double VariogramModel::gamma(double distance) const
{
    if (distance <= 0.0)
        return 0.0;
    return nugget + (sill - nugget) * unit_shape(shape, distance / range);
}

VariogramModel fit_variogram(const EmpiricalVariogram& ev, VariogramShape shape)
{
    std::vector<VariogramBin> bins;
    for (const VariogramBin& b : ev.bins)
        if (b.pair_count > 0)
            bins.push_back(b);
    if (bins.size() < 3)
        throw input_error("fit_variogram: need at least 3 non-empty lag bins");

    const double max_lag = bins.back().lag_center;
    bool all_zero = true;
    for (const VariogramBin& b : bins)
        if (b.semivariance != 0.0)
            all_zero = false;
    if (all_zero)
        return {shape, 0.0, kDegenerateSill, max_lag, true};

    const double lo = 0.5 * bins.front().lag_center;
    const double hi = 1.5 * max_lag;
    constexpr int kCandidates = 100;
    double best_range = lo;
    double best_sse = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kCandidates; ++i) {
        const double r = lo + (hi - lo) * i / (kCandidates - 1);
        const double sse = wls_at_range(bins, shape, r).sse;
        if (sse < best_sse) {
            best_sse = sse;
            best_range = r;
        }
    }
    // one local bisection pass around the winning candidate
    const double step = (hi - lo) / (kCandidates - 1);
    double a = std::max(lo * 0.25, best_range - step);
    double b = best_range + step;
    for (int it = 0; it < 80; ++it) {
        const double m1 = a + (b - a) / 3.0;
        const double m2 = b - (b - a) / 3.0;
        if (wls_at_range(bins, shape, m1).sse <= wls_at_range(bins, shape, m2).sse)
            b = m2;
        else
            a = m1;
    }
    const double range = 0.5 * (a + b);
    WlsFit fit = wls_at_range(bins, shape, range);

    VariogramModel model;
    model.shape = shape;
    if (fit.partial_sill <= 0.0) {
        // flat data: range is unidentifiable, pin it to the max lag
        model.nugget = fit.nugget;
        model.sill = fit.nugget > 0.0 ? fit.nugget : kDegenerateSill;
        model.range = max_lag;
        model.degenerate = fit.nugget <= 0.0;
        return model;
    }
    model.nugget = fit.nugget;
    model.sill = fit.nugget + fit.partial_sill;
    model.range = range;
    return model;
}

namespace {

// (n+1)-dimensional ordinary-kriging matrix: gamma between points plus the
// unit-sum constraint row/column.
LuFactors factor_kriging_system(std::span<const SamplePoint> points,
                                const VariogramModel& model)
{
    const int n = static_cast<int>(points.size());
    const int dim = n + 1;
    std::vector<double> a(static_cast<std::size_t>(dim) * dim, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dx = points[i].x - points[j].x;
            const double dy = points[i].y - points[j].y;
            const double d = std::sqrt(dx * dx + dy * dy);
            if (d == 0.0)
                throw compute_error(
                    "kriging: duplicate points at (" +
                    std::to_string(points[i].x) + ", " +
                    std::to_string(points[i].y) + ") make the system singular");
            const double g = model.gamma(d);
            a[static_cast<std::size_t>(i) * dim + j] = g;
            a[static_cast<std::size_t>(j) * dim + i] = g;
        }
        a[static_cast<std::size_t>(i) * dim + n] = 1.0;
        a[static_cast<std::size_t>(n) * dim + i] = 1.0;
    }
    return lu_factor(std::move(a), dim);
}

void fill_kriging_rhs(std::span<const SamplePoint> points,
                      const VariogramModel& model, double x, double y,
                      std::span<double> rhs)
{
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x - points[i].x;
        const double dy = y - points[i].y;
        rhs[i] = model.gamma(std::sqrt(dx * dx + dy * dy));
    }
    rhs[n] = 1.0;
}

} // namespace

std::vector<double> kriging_weights(std::span<const SamplePoint> points,
                                    const VariogramModel& model, double x,
                                    double y)
{
    const int n = static_cast<int>(points.size());
    if (n < 2)
        throw input_error("kriging: need at least 2 points");
    const LuFactors f = factor_kriging_system(points, model);
    std::vector<double> rhs(n + 1), sol(n + 1);
    fill_kriging_rhs(points, model, x, y, rhs);
    lu_solve(f, rhs, sol);
    sol.resize(n); // drop the Lagrange multiplier
    return sol;
}

Grid kriging(std::span<const SamplePoint> points, const GridHeader& geometry,
             const VariogramModel& model)
{
    const int n = static_cast<int>(points.size());
    if (n < 2)
        throw input_error("kriging: need at least 2 points");
    if (!(model.range > 0.0) || model.nugget < 0.0 || model.sill < model.nugget)
        throw input_error("kriging: invalid variogram model");

    const int dim = n + 1;
    const LuFactors f = factor_kriging_system(points, model);
    if (f.min_pivot > 0.0 && f.max_pivot / f.min_pivot > 1e12)
        std::cerr << "warning: kriging system is ill-conditioned (pivot ratio "
                  << f.max_pivot / f.min_pivot << ")\n";

    const std::size_t n_cells =
        static_cast<std::size_t>(geometry.ncols) * geometry.nrows;
    std::vector<double> out(n_cells);
    parallel_for(n_cells, [&](std::size_t begin, std::size_t end) {
        std::vector<double> rhs(dim), sol(dim);
        for (std::size_t idx = begin; idx < end; ++idx) {
            const CellCenter c = cell_center(geometry, idx);
            fill_kriging_rhs(points, model, c.x, c.y, rhs);
            lu_solve(f, rhs, sol);
            double pred = 0.0;
            for (int i = 0; i < n; ++i)
                pred += sol[i] * points[i].value;
            out[idx] = pred;
        }
    });
    return Grid(geometry, std::move(out));
}

} // namespace gwva
