#pragma once

#include <string>
#include <vector>

#include "gwva/grid.hpp"

namespace gwva {

enum class RatingMode { continuous, categorical };

/// Continuous rating band [lower, upper) -> rating. Bands must be contiguous
/// with strictly increasing lowers; the last band is closed on both ends.
struct RatingBand {
    double lower;
    double upper;
    int rating;
};

/// Categorical rating: integer cell code -> rating.
struct CategoryRating {
    int code;
    std::string label;
    int rating;
};

/// One parameter's rating table plus its overlay weight.
struct RatingScheme {
    std::string parameter;
    RatingMode mode = RatingMode::continuous;
    std::vector<RatingBand> bands;          // continuous mode
    std::vector<CategoryRating> categories; // categorical mode
    double weight = 1.0;

    /// Throws input_error on overlap/ordering/rating-range violations.
    void validate() const;

    /// Rating for a physical value / category code, or -1 when it falls
    /// outside every band / matches no code.
    int rate(double value) const;
};

struct RatingResult {
    Grid grid;                     // ratings 1..10, nodata preserved
    std::size_t out_of_range = 0;  // valid cells that matched nothing
};

/// Replace each valid cell by its rating. Cells outside all bands/codes
/// become nodata and are tallied in out_of_range.
RatingResult apply_rating(const Grid& g, const RatingScheme& scheme);

/// k-class partition of a value set: k-1 ascending boundary values, where a
/// value v belongs to class i+1 iff breaks[i-1] < v <= breaks[i]
/// (closed-above).
struct ClassBreaks {
    std::vector<double> breaks;
    int k = 0;
    std::vector<std::string> labels;
};

/// Default label set; the 5-class case uses the conventional vulnerability
/// vocabulary (very low .. very high), otherwise "class N".
std::vector<std::string> default_class_labels(int k);

/// Optimal k-class Fisher-Jenks partition of the value multiset: minimizes
/// total within-class sum of squared deviations by exact dynamic programming
/// over the distinct sorted values (count-weighted, so the result is exact
/// for the full multiset). Among equal-cost partitions the lexicographically
/// smallest break index vector wins. Break values are the upper value of each
/// class. Requires at least k distinct values.
ClassBreaks jenks_breaks(std::vector<double> values, int k);
ClassBreaks jenks_breaks(std::vector<double> values, int k,
                         std::vector<std::string> labels);

/// Map each valid cell to its class id 1..k (closed-above on breaks); nodata
/// preserved.
Grid classify(const Grid& g, const ClassBreaks& cb);

namespace detail {
/// Within-class squared deviation cost of one class over sorted values
/// [first, last). Exposed for the brute-force test oracle.
double class_cost(std::span<const double> sorted, std::size_t first,
                  std::size_t last);
} // namespace detail

} // namespace gwva
