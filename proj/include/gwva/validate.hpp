#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "gwva/grid.hpp"

namespace gwva {

/// Nitrate measurement at a well.
struct Observation {
    double x;
    double y;
    double nitrate; // mg/L, >= 0
};

/// Load `x,y,nitrate_mg_l` CSV.
std::vector<Observation> read_observations_csv(const std::filesystem::path& path);

struct LabeledObservation {
    Observation obs;
    bool positive;
};

/// positive iff nitrate is strictly above the threshold ("exceeding").
std::vector<LabeledObservation> binarize(std::span<const Observation> obs,
                                         double threshold);

struct ScoredWell {
    double score;
    bool positive;
    Observation obs;
};

struct ScoreResult {
    std::vector<ScoredWell> wells;
    std::size_t skipped_outside = 0;
    std::size_t skipped_nodata = 0;

    std::size_t skipped() const { return skipped_outside + skipped_nodata; }
};

/// Nearest-cell VI score for each well; wells outside the extent or on
/// nodata cells are skipped and counted. Throws compute_error when no well
/// can be scored.
ScoreResult score_wells(const Grid& vi, std::span<const Observation> obs,
                        double threshold);

struct RocPoint {
    double threshold; // classifier: score >= threshold -> predicted positive
    double fpr;
    double tpr;
};

struct RocResult {
    std::vector<RocPoint> points; // staircase from (0,0) to (1,1)
    double auc = 0.0;             // trapezoidal == tie-adjusted Mann-Whitney
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
};

/// Threshold sweep over the distinct scores, descending; tied scores collapse
/// into one step. Requires at least one positive and one negative label.
RocResult roc_auc(std::span<const std::pair<double, bool>> scored);
RocResult roc_auc(std::span<const ScoredWell> wells);

struct ZoneCoincidence {
    // percent of positives whose cell class is in the high set
    std::optional<double> pct_pos_in_high;
    // percent of negatives whose cell class is in the low set
    std::optional<double> pct_neg_in_low;
    double pct_area_high = 0.0; // percent of valid cells in the high set
    std::size_t n_pos = 0;      // classified positives
    std::size_t n_neg = 0;      // classified negatives
    std::size_t skipped = 0;    // wells outside the extent or on nodata
};

/// Table-6-style coincidence metrics. high_set and low_set must be disjoint;
/// a metric with an empty denominator is reported as undefined, not zero.
ZoneCoincidence zone_coincidence(const Grid& classes,
                                 std::span<const Observation> obs,
                                 double threshold,
                                 const std::set<int>& high_set,
                                 const std::set<int>& low_set);

} // namespace gwva
