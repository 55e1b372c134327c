#include "gwva/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gwva/errors.hpp"
#include "gwva/kernels.hpp"

namespace gwva {

void RatingScheme::validate() const
{
    if (parameter.empty())
        throw input_error("rating scheme without a parameter name");
    if (!(weight > 0.0))
        throw input_error("rating scheme '" + parameter +
                          "': weight must be positive");
    if (mode == RatingMode::continuous) {
        if (bands.empty())
            throw input_error("rating scheme '" + parameter + "': no bands");
        for (std::size_t i = 0; i < bands.size(); ++i) {
            const RatingBand& b = bands[i];
            if (b.rating < 1 || b.rating > 10)
                throw input_error("rating scheme '" + parameter +
                                  "': rating outside [1, 10]");
            if (!(b.upper > b.lower))
                throw input_error("rating scheme '" + parameter +
                                  "': band upper must exceed lower");
            if (i > 0 && bands[i - 1].upper != b.lower)
                throw input_error("rating scheme '" + parameter +
                                  "': bands must be contiguous");
        }
    } else {
        if (categories.empty())
            throw input_error("rating scheme '" + parameter +
                              "': no categories");
        for (std::size_t i = 0; i < categories.size(); ++i) {
            if (categories[i].rating < 1 || categories[i].rating > 10)
                throw input_error("rating scheme '" + parameter +
                                  "': rating outside [1, 10]");
            for (std::size_t j = i + 1; j < categories.size(); ++j)
                if (categories[i].code == categories[j].code)
                    throw input_error("rating scheme '" + parameter +
                                      "': duplicate category code " +
                                      std::to_string(categories[i].code));
        }
    }
}

int RatingScheme::rate(double value) const
{
    if (mode == RatingMode::continuous) {
        for (std::size_t i = 0; i < bands.size(); ++i) {
            const RatingBand& b = bands[i];
            const bool last = (i + 1 == bands.size());
            // closed-below / open-above; the final band is closed on both ends
            if (value >= b.lower && (value < b.upper || (last && value == b.upper)))
                return b.rating;
        }
        return -1;
    }
    const double rounded = std::nearbyint(value);
    if (rounded != value)
        return -1;
    const long long code = static_cast<long long>(rounded);
    for (const CategoryRating& c : categories)
        if (c.code == code)
            return c.rating;
    return -1;
}

RatingResult apply_rating(const Grid& g, const RatingScheme& scheme)
{
    scheme.validate();
    const double nodata = g.nodata();
    std::vector<double> out(g.values().begin(), g.values().end());
    std::size_t misses = 0;
    for (double& v : out) {
        if (v == nodata)
            continue;
        const int r = scheme.rate(v);
        if (r < 0) {
            v = nodata;
            ++misses;
        } else {
            v = static_cast<double>(r);
        }
    }
    return RatingResult{Grid(g.header(), std::move(out)), misses};
}

std::vector<std::string> default_class_labels(int k)
{
    if (k == 5)
        return {"very low", "low", "moderate", "high", "very high"};
    std::vector<std::string> labels;
    labels.reserve(k);
    for (int i = 1; i <= k; ++i)
        labels.push_back("class " + std::to_string(i));
    return labels;
}

namespace detail {

double class_cost(std::span<const double> sorted, std::size_t first,
                  std::size_t last)
{
    const std::size_t n = last - first;
    if (n == 0)
        return 0.0;
    double mean = 0.0;
    for (std::size_t i = first; i < last; ++i)
        mean += sorted[i];
    mean /= static_cast<double>(n);
    double ssd = 0.0;
    for (std::size_t i = first; i < last; ++i) {
        const double d = sorted[i] - mean;
        ssd += d * d;
    }
    return ssd;
}

} // namespace detail

namespace {

// Count-weighted within-class cost over distinct values [i, j), via prefix
// sums: sum c v^2 - (sum c v)^2 / sum c.
struct WeightedCost {
    std::vector<double> pc, pv, pv2; // prefix sums of c, c*v, c*v^2

    WeightedCost(std::span<const double> values, std::span<const double> counts)
        : pc(values.size() + 1, 0.0),
          pv(values.size() + 1, 0.0),
          pv2(values.size() + 1, 0.0)
    {
        for (std::size_t i = 0; i < values.size(); ++i) {
            pc[i + 1] = pc[i] + counts[i];
            pv[i + 1] = pv[i] + counts[i] * values[i];
            pv2[i + 1] = pv2[i] + counts[i] * values[i] * values[i];
        }
    }

    double operator()(std::size_t i, std::size_t j) const
    {
        const double c = pc[j] - pc[i];
        const double s = pv[j] - pv[i];
        const double s2 = pv2[j] - pv2[i];
        const double cost = s2 - (s * s) / c;
        return cost > 0.0 ? cost : 0.0; // clamp rounding noise
    }
};

} // namespace

ClassBreaks jenks_breaks(std::vector<double> values, int k)
{
    return jenks_breaks(std::move(values), k, default_class_labels(k));
}

ClassBreaks jenks_breaks(std::vector<double> values, int k,
                         std::vector<std::string> labels)
{
    if (values.empty())
        throw input_error("jenks_breaks: empty value set");
    if (k < 1)
        throw input_error("jenks_breaks: class count must be at least 1");
    if (static_cast<int>(labels.size()) != k)
        throw input_error("jenks_breaks: need exactly one label per class");

    std::sort(values.begin(), values.end());
    std::vector<double> distinct;
    std::vector<double> counts;
    for (double v : values) {
        if (!distinct.empty() && distinct.back() == v) {
            counts.back() += 1.0;
        } else {
            distinct.push_back(v);
            counts.push_back(1.0);
        }
    }
    const std::size_t m = distinct.size();
    if (m < static_cast<std::size_t>(k))
        throw input_error("jenks_breaks: " + std::to_string(m) +
                          " distinct values cannot form " + std::to_string(k) +
                          " classes");

    ClassBreaks cb;
    cb.k = k;
    cb.labels = std::move(labels);
    if (k == 1)
        return cb;

    const WeightedCost cost(distinct, counts);

    // suffix[c][i]: minimal cost of splitting distinct[i..m) into c classes
    const std::size_t kk = static_cast<std::size_t>(k);
    std::vector<std::vector<double>> suffix(
        kk + 1, std::vector<double>(m + 1, 0.0));
    for (std::size_t i = 0; i < m; ++i)
        suffix[1][i] = cost(i, m);
    for (std::size_t c = 2; c <= kk; ++c) {
        // classes are non-empty, so i can leave at most m - c values behind
        for (std::size_t i = 0; i + c <= m; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t s = i + 1; s + (c - 1) <= m; ++s) {
                const double candidate = cost(i, s) + suffix[c - 1][s];
                if (candidate < best)
                    best = candidate;
            }
            suffix[c][i] = best;
        }
    }

    // Forward reconstruction; taking the first split that attains the stored
    // minimum yields the lexicographically smallest break index vector.
    cb.breaks.reserve(kk - 1);
    std::size_t i = 0;
    for (std::size_t c = kk; c >= 2; --c) {
        const double target = suffix[c][i];
        for (std::size_t s = i + 1; s + (c - 1) <= m; ++s) {
            if (cost(i, s) + suffix[c - 1][s] == target) {
                cb.breaks.push_back(distinct[s - 1]); // upper value of the class
                i = s;
                break;
            }
        }
    }
    return cb;
}

Grid classify(const Grid& g, const ClassBreaks& cb)
{
    if (cb.k < 1)
        throw input_error("classify: invalid class count");
    if (static_cast<int>(cb.breaks.size()) != cb.k - 1)
        throw input_error("classify: expected k-1 break values");
    for (std::size_t i = 1; i < cb.breaks.size(); ++i)
        if (!(cb.breaks[i - 1] < cb.breaks[i]))
            throw input_error("classify: breaks must be strictly increasing");
    const std::size_t n = g.size();
    std::vector<double> out(n);
    kernels::classify_cells(g.values().data(), cb.breaks.data(),
                            cb.breaks.size(), g.nodata(), out.data(), n);
    return Grid(g.header(), std::move(out));
}

} // namespace gwva
