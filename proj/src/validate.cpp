#include "gwva/validate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "detail/csv.hpp"
#include "gwva/errors.hpp"

namespace gwva {

std::vector<Observation> read_observations_csv(const std::filesystem::path& path)
{
    const auto rows = detail::read_numeric_csv(path, "x,y,nitrate_mg_l");
    std::vector<Observation> obs;
    obs.reserve(rows.size());
    for (const auto& row : rows) {
        if (!std::isfinite(row[0]) || !std::isfinite(row[1]))
            throw input_error(path.string() + ": non-finite well coordinates");
        if (!(row[2] >= 0.0))
            throw input_error(path.string() + ": nitrate must be >= 0 mg/L");
        obs.push_back({row[0], row[1], row[2]});
    }
    return obs;
}

std::vector<LabeledObservation> binarize(std::span<const Observation> obs,
                                         double threshold)
{
    if (!(threshold > 0.0))
        throw input_error("binarize: threshold must be positive");
    std::vector<LabeledObservation> out;
    out.reserve(obs.size());
    for (const Observation& o : obs)
        out.push_back({o, o.nitrate > threshold});
    return out;
}

ScoreResult score_wells(const Grid& vi, std::span<const Observation> obs,
                        double threshold)
{
    ScoreResult result;
    for (const LabeledObservation& lo : binarize(obs, threshold)) {
        if (!vi.contains(lo.obs.x, lo.obs.y)) {
            ++result.skipped_outside;
            continue;
        }
        const std::optional<double> score = sample_at(vi, lo.obs.x, lo.obs.y);
        if (!score) {
            ++result.skipped_nodata;
            continue;
        }
        result.wells.push_back({*score, lo.positive, lo.obs});
    }
    if (result.wells.empty())
        throw compute_error(
            "score_wells: every well is outside the extent or on nodata");
    return result;
}

RocResult roc_auc(std::span<const std::pair<double, bool>> scored)
{
    RocResult r;
    for (const auto& [score, positive] : scored)
        (positive ? r.n_pos : r.n_neg) += 1;
    if (r.n_pos == 0 || r.n_neg == 0)
        throw compute_error("roc_auc: need both positive and negative labels");

    std::vector<std::pair<double, bool>> s(scored.begin(), scored.end());
    std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) {
        return a.first > b.first;
    });

    r.points.push_back({std::numeric_limits<double>::infinity(), 0.0, 0.0});
    double auc = 0.0;
    std::size_t tp = 0, fp = 0;
    double prev_fpr = 0.0, prev_tpr = 0.0;
    std::size_t i = 0;
    while (i < s.size()) {
        const double score = s[i].first;
        // tied scores collapse into a single ROC step
        while (i < s.size() && s[i].first == score) {
            (s[i].second ? tp : fp) += 1;
            ++i;
        }
        const double fpr = static_cast<double>(fp) / r.n_neg;
        const double tpr = static_cast<double>(tp) / r.n_pos;
        auc += (fpr - prev_fpr) * (tpr + prev_tpr) / 2.0;
        r.points.push_back({score, fpr, tpr});
        prev_fpr = fpr;
        prev_tpr = tpr;
    }
    r.auc = auc;
    return r;
}

RocResult roc_auc(std::span<const ScoredWell> wells)
{
    std::vector<std::pair<double, bool>> scored;
    scored.reserve(wells.size());
    for (const ScoredWell& w : wells)
        scored.emplace_back(w.score, w.positive);
    return roc_auc(scored);
}

ZoneCoincidence zone_coincidence(const Grid& classes,
                                 std::span<const Observation> obs,
                                 double threshold,
                                 const std::set<int>& high_set,
                                 const std::set<int>& low_set)
{
    for (int id : high_set)
        if (low_set.count(id))
            throw input_error("zone_coincidence: high and low class sets "
                              "must be disjoint (both contain " +
                              std::to_string(id) + ")");

    ZoneCoincidence zc;
    std::size_t pos_in_high = 0, neg_in_low = 0;
    for (const LabeledObservation& lo : binarize(obs, threshold)) {
        if (!classes.contains(lo.obs.x, lo.obs.y)) {
            ++zc.skipped;
            continue;
        }
        const std::optional<double> cls = sample_at(classes, lo.obs.x, lo.obs.y);
        if (!cls) {
            ++zc.skipped;
            continue;
        }
        const int id = static_cast<int>(std::lround(*cls));
        if (lo.positive) {
            ++zc.n_pos;
            pos_in_high += high_set.count(id);
        } else {
            ++zc.n_neg;
            neg_in_low += low_set.count(id);
        }
    }
    if (zc.n_pos > 0)
        zc.pct_pos_in_high = 100.0 * static_cast<double>(pos_in_high) / zc.n_pos;
    if (zc.n_neg > 0)
        zc.pct_neg_in_low = 100.0 * static_cast<double>(neg_in_low) / zc.n_neg;

    std::size_t valid = 0, high_cells = 0;
    for (double v : classes.values()) {
        if (classes.is_nodata(v))
            continue;
        ++valid;
        high_cells += high_set.count(static_cast<int>(std::lround(v)));
    }
    zc.pct_area_high =
        valid > 0 ? 100.0 * static_cast<double>(high_cells) / valid : 0.0;
    return zc;
}

} // namespace gwva
