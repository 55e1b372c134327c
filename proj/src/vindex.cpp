#include "gwva/vindex.hpp"

#include <algorithm>
#include <cmath>

#include "gwva/errors.hpp"

namespace gwva {

const char* scheme_name(Scheme s)
{
    switch (s) {
    case Scheme::drastic: return "drastic";
    case Scheme::drastic_lu: return "drastic_lu";
    case Scheme::ahp_lu: return "ahp_lu";
    case Scheme::fuzzy_ahp_lu: return "fuzzy_ahp_lu";
    }
    return "?";
}

Scheme parse_scheme(const std::string& name)
{
    for (Scheme s : kAllSchemes)
        if (name == scheme_name(s))
            return s;
    throw input_error("unknown scheme '" + name + "'");
}

bool scheme_uses_lu(Scheme s)
{
    return s != Scheme::drastic;
}

namespace {

std::vector<std::string> required_parameters(Scheme s)
{
    std::vector<std::string> p{"D", "R", "A", "S", "T", "I", "C"};
    if (scheme_uses_lu(s))
        p.push_back("LU");
    return p;
}

} // namespace

void IndexModel::validate() const
{
    const auto required = required_parameters(scheme);
    if (parameters != required) {
        std::string want;
        for (const auto& p : required)
            want += (want.empty() ? "" : ",") + p;
        throw input_error(std::string("scheme ") + scheme_name(scheme) +
                          " requires parameters " + want);
    }
    if (weights.size() != parameters.size())
        throw input_error("one weight per parameter required");
    for (double w : weights)
        if (!(w > 0.0) || !std::isfinite(w))
            throw input_error("index weights must be positive");
    const Grid* first = nullptr;
    for (const auto& p : parameters) {
        const auto it = rating_layers.find(p);
        if (it == rating_layers.end())
            throw input_error("missing rating layer for parameter " + p);
        if (!first)
            first = &it->second;
        const std::string diff =
            first->header().describe_mismatch(it->second.header());
        if (!diff.empty())
            throw input_error("rating layer " + p +
                              " geometry mismatch: " + diff);
    }
}

Grid compute_index(const IndexModel& model)
{
    model.validate();
    std::vector<WeightedLayer> layers;
    layers.reserve(model.parameters.size());
    for (std::size_t i = 0; i < model.parameters.size(); ++i)
        layers.push_back(
            {&model.rating_layers.at(model.parameters[i]), model.weights[i]});
    return weighted_sum(layers);
}

VulnerabilityMap build_vulnerability_map(const IndexModel& model, int k)
{
    return build_vulnerability_map(model, k, default_class_labels(k));
}

VulnerabilityMap build_vulnerability_map(const IndexModel& model, int k,
                                         std::vector<std::string> labels)
{
    Grid vi = compute_index(model);
    ClassBreaks breaks = jenks_breaks(vi.valid_values(), k, std::move(labels));
    Grid classes = classify(vi, breaks);
    return VulnerabilityMap{model.scheme, std::move(vi), std::move(classes),
                            std::move(breaks)};
}

std::vector<ClassArea> class_area_summary(const Grid& classes)
{
    std::map<int, std::size_t> counts;
    std::size_t valid = 0;
    for (double v : classes.values()) {
        if (classes.is_nodata(v))
            continue;
        counts[static_cast<int>(std::lround(v))] += 1;
        ++valid;
    }
    std::vector<ClassArea> out;
    out.reserve(counts.size());
    for (const auto& [id, cells] : counts)
        out.push_back(
            {id, cells, 100.0 * static_cast<double>(cells) / valid});
    return out;
}

} // namespace gwva
