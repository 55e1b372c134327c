#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gwva {

/// Georeferenced header of a corner-registered raster. Coordinates are planar
/// map units; (xllcorner, yllcorner) is the outer corner of the lower-left
/// cell. Center-registered grids (xllcenter) are rejected at parse.
struct GridHeader {
    int ncols = 0;
    int nrows = 0;
    double xllcorner = 0.0;
    double yllcorner = 0.0;
    double cellsize = 0.0;
    double nodata = -9999.0;

    bool same_geometry(const GridHeader& other) const;

    /// Comma-separated list of fields that differ ("" when identical).
    std::string describe_mismatch(const GridHeader& other) const;
};

/// Immutable raster. Values are stored row-major with rows ordered
/// north -> south, matching the ASCII grid body order. A cell equal to the
/// header's nodata sentinel carries no value.
class Grid {
public:
    Grid(GridHeader header, std::vector<double> values);

    /// Constant-valued grid (including all-nodata when v == header.nodata).
    static Grid filled(const GridHeader& header, double v);

    const GridHeader& header() const { return header_; }
    std::span<const double> values() const { return values_; }
    int ncols() const { return header_.ncols; }
    int nrows() const { return header_.nrows; }
    double nodata() const { return header_.nodata; }
    std::size_t size() const { return values_.size(); }

    /// row counted from the top (north) edge.
    double at(int row, int col) const
    {
        return values_[static_cast<std::size_t>(row) * header_.ncols + col];
    }

    bool is_nodata(double v) const { return v == header_.nodata; }

    /// True when (x, y) falls inside [xll, xll + ncols*cs) x [yll, yll + nrows*cs).
    bool contains(double x, double y) const;

    std::size_t count_valid() const;

    /// Min/max over valid cells; nullopt when the grid is all nodata.
    std::optional<std::pair<double, double>> value_range() const;

    /// All non-nodata cell values in row-major order.
    std::vector<double> valid_values() const;

    bool operator==(const Grid& other) const;

private:
    GridHeader header_;
    std::vector<double> values_;
};

/// One weighted input to a weighted overlay.
struct WeightedLayer {
    const Grid* grid;
    double weight;
};

/// Parse an ESRI ASCII grid document: six header lines (ncols, nrows,
/// xllcorner, yllcorner, cellsize, NODATA_value; keywords case-insensitive,
/// any order), then ncols*nrows whitespace-separated values, rows
/// north -> south. Errors carry the offending 1-based line number.
Grid read_ascii_grid(std::string_view text);
Grid read_ascii_grid_file(const std::filesystem::path& path);

/// Serialize so that read_ascii_grid(write_ascii_grid(g)) == g bit-exactly
/// (shortest round-trip number formatting).
std::string write_ascii_grid(const Grid& g);
void write_ascii_grid_file(const Grid& g, const std::filesystem::path& path);

/// Apply f to every valid cell; nodata cells pass through untouched. A
/// non-finite f(x) aborts with the offending cell index.
Grid map_cells(const Grid& g, const std::function<double(double)>& f);

/// Cell-wise sum_i weight_i * layer_i. All layers must share one geometry;
/// a cell that is nodata in any input is nodata in the output.
Grid weighted_sum(std::span<const WeightedLayer> layers);

/// Value of the cell containing (x, y); nearest-cell lookup, no
/// interpolation. A point on a shared cell edge belongs to the cell whose low
/// edge it touches (floor rule). Returns nullopt on a nodata cell; throws
/// compute_error when the point lies outside the extent.
std::optional<double> sample_at(const Grid& g, double x, double y);

} // namespace gwva
