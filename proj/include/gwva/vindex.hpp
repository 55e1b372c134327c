#pragma once

#include <map>
#include <string>
#include <vector>

#include "gwva/classify.hpp"
#include "gwva/grid.hpp"

namespace gwva {

/// The four weighting schemes, in their fixed execution/report order.
enum class Scheme { drastic, drastic_lu, ahp_lu, fuzzy_ahp_lu };

constexpr Scheme kAllSchemes[] = {Scheme::drastic, Scheme::drastic_lu,
                                  Scheme::ahp_lu, Scheme::fuzzy_ahp_lu};

const char* scheme_name(Scheme s);
Scheme parse_scheme(const std::string& name);

/// True when the scheme includes the land-use parameter.
bool scheme_uses_lu(Scheme s);

/// Everything needed to overlay one scheme: parameter order, weights
/// (integer-valued for drastic/drastic_lu, normalized for the MCDA schemes)
/// and one rating grid per parameter.
struct IndexModel {
    Scheme scheme = Scheme::drastic;
    std::vector<std::string> parameters;
    std::vector<double> weights;
    std::map<std::string, Grid> rating_layers;

    /// Checks parameter set vs scheme, presence of every layer, a shared
    /// geometry, and positive weights. Throws input_error.
    void validate() const;
};

/// Vulnerability index raster: VI(cell) = sum_p weight_p * rating_p(cell).
/// Nodata in any rating layer propagates.
Grid compute_index(const IndexModel& model);

struct VulnerabilityMap {
    Scheme scheme;
    Grid vi;
    Grid classes;
    ClassBreaks breaks;
};

/// VI raster -> Jenks breaks over the valid cells -> class raster.
VulnerabilityMap build_vulnerability_map(const IndexModel& model, int k);
VulnerabilityMap build_vulnerability_map(const IndexModel& model, int k,
                                         std::vector<std::string> labels);

struct ClassArea {
    int class_id;
    std::size_t cells;
    double percent; // of valid cells
};

/// Cell counts and percentages per class id; empty when the grid is all
/// nodata. Percentages sum to 100 over the valid cells.
std::vector<ClassArea> class_area_summary(const Grid& classes);

} // namespace gwva
