#include "gwva/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "gwva/errors.hpp"
#include "gwva/presets.hpp"
#include "gwva/validate.hpp"

namespace gwva {

namespace fs = std::filesystem;
using njson = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

std::string format_number(double v)
{
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_fixed(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

} // namespace

int PipelineConfig::k_for(Scheme s) const
{
    const auto it = k_per_scheme.find(scheme_name(s));
    return it != k_per_scheme.end() ? it->second : default_k;
}

fs::path PipelineConfig::resolve(const fs::path& p) const
{
    return p.is_absolute() ? p : base_dir / p;
}

// --- config document -------------------------------------------------------

namespace {

const njson& require(const njson& j, const char* key, const std::string& where)
{
    const auto it = j.find(key);
    if (it == j.end())
        throw input_error("config: missing '" + std::string(key) + "' in " +
                          where);
    return *it;
}

LayerSource parse_layer_source(const njson& j, const std::string& param)
{
    LayerSource src;
    const std::string where = "layers." + param;
    const std::string source = require(j, "source", where).get<std::string>();
    src.path = require(j, "path", where).get<std::string>();
    if (source == "grid") {
        src.kind = LayerSource::Kind::grid;
        return src;
    }
    if (source != "points")
        throw input_error("config: " + where +
                          ".source must be 'grid' or 'points'");
    src.kind = LayerSource::Kind::points;
    src.method = require(j, "method", where).get<std::string>();
    if (src.method != "idw" && src.method != "kriging")
        throw input_error("config: " + where +
                          ".method must be 'idw' or 'kriging'");
    src.geometry_like =
        require(j, "geometry_like", where).get<std::string>();
    if (j.contains("power"))
        src.idw_power = j["power"].get<double>();
    if (j.contains("neighbors"))
        src.idw_neighbors = j["neighbors"].get<int>();
    if (j.contains("shape"))
        src.shape = parse_variogram_shape(j["shape"].get<std::string>());
    if (j.contains("n_lags"))
        src.n_lags = j["n_lags"].get<int>();
    if (j.contains("max_dist"))
        src.max_dist = j["max_dist"].get<double>();
    return src;
}

RatingScheme parse_rating(const njson& j, const std::string& param)
{
    RatingScheme scheme;
    scheme.parameter = param;
    const std::string where = "ratings." + param;
    scheme.weight = require(j, "weight", where).get<double>();
    const bool has_bands = j.contains("bands");
    const bool has_categories = j.contains("categories");
    if (has_bands == has_categories)
        throw input_error("config: " + where +
                          " needs exactly one of 'bands' or 'categories'");
    if (has_bands) {
        scheme.mode = RatingMode::continuous;
        for (const njson& band : j["bands"]) {
            if (!band.is_array() || band.size() != 3)
                throw input_error("config: " + where +
                                  ".bands entries must be [lower, upper, rating]");
            scheme.bands.push_back({band[0].get<double>(),
                                    band[1].get<double>(),
                                    band[2].get<int>()});
        }
    } else {
        scheme.mode = RatingMode::categorical;
        for (const njson& cat : j["categories"]) {
            if (!cat.is_array() || cat.size() != 3)
                throw input_error("config: " + where +
                                  ".categories entries must be "
                                  "[code, label, rating]");
            scheme.categories.push_back({cat[0].get<int>(),
                                         cat[1].get<std::string>(),
                                         cat[2].get<int>()});
        }
    }
    scheme.validate();
    return scheme;
}

std::vector<std::vector<Tfn>> parse_fuzzy_matrix(const njson& j)
{
    std::vector<std::vector<Tfn>> rows;
    for (const njson& jrow : j) {
        std::vector<Tfn> row;
        for (const njson& cell : jrow) {
            if (!cell.is_array() || cell.size() != 3)
                throw input_error(
                    "config: fuzzy_matrix cells must be [l, m, u]");
            row.push_back({cell[0].get<double>(), cell[1].get<double>(),
                           cell[2].get<double>()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

PipelineConfig load_config(const fs::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open config file: " + path.string());
    njson doc;
    try {
        doc = njson::parse(in, nullptr, true, true); // allow comments
    } catch (const njson::parse_error& e) {
        throw input_error("config parse error in " + path.string() + ": " +
                          e.what());
    }

    PipelineConfig cfg;
    cfg.base_dir = path.parent_path();

    for (const auto& [param, jsrc] :
         require(doc, "layers", "document").items()) {
        if (!param.empty() && param[0] == '_')
            continue; // annotation key
        cfg.layers.emplace(param, parse_layer_source(jsrc, param));
    }
    for (const auto& [param, jrating] :
         require(doc, "ratings", "document").items()) {
        if (!param.empty() && param[0] == '_')
            continue;
        cfg.ratings.push_back(parse_rating(jrating, param));
    }
    for (const njson& s : require(doc, "schemes", "document"))
        cfg.schemes.push_back(parse_scheme(s.get<std::string>()));
    if (cfg.schemes.empty())
        throw input_error("config: 'schemes' must name at least one scheme");

    if (doc.contains("weights")) {
        const njson& w = doc["weights"];
        if (w.contains("ahp_priorities"))
            cfg.ahp_priorities = w["ahp_priorities"].get<std::vector<double>>();
        if (w.contains("ahp_matrix"))
            cfg.ahp_matrix =
                w["ahp_matrix"].get<std::vector<std::vector<double>>>();
        if (!cfg.ahp_priorities.empty() && !cfg.ahp_matrix.empty())
            throw input_error("config: give either weights.ahp_priorities or "
                              "weights.ahp_matrix, not both");
        if (w.contains("fuzzy_matrix"))
            cfg.fuzzy_matrix = parse_fuzzy_matrix(w["fuzzy_matrix"]);
    }

    if (doc.contains("classification")) {
        const njson& c = doc["classification"];
        if (c.contains("k"))
            cfg.default_k = c["k"].get<int>();
        if (c.contains("k_per_scheme"))
            for (const auto& [name, jk] : c["k_per_scheme"].items())
                cfg.k_per_scheme[name] = jk.get<int>();
        if (c.contains("labels"))
            cfg.class_labels = c["labels"].get<std::vector<std::string>>();
    }

    if (doc.contains("validation")) {
        const njson& v = doc["validation"];
        if (v.contains("wells"))
            cfg.wells = v["wells"].get<std::string>();
        if (v.contains("threshold_mg_l"))
            cfg.nitrate_threshold = v["threshold_mg_l"].get<double>();
        if (v.contains("high_classes")) {
            cfg.high_classes.clear();
            for (const njson& id : v["high_classes"])
                cfg.high_classes.insert(id.get<int>());
        }
        if (v.contains("low_classes")) {
            cfg.low_classes.clear();
            for (const njson& id : v["low_classes"])
                cfg.low_classes.insert(id.get<int>());
        }
    }

    if (doc.contains("output")) {
        const njson& o = doc["output"];
        if (o.contains("dir"))
            cfg.output_dir = o["dir"].get<std::string>();
        if (o.contains("palette"))
            for (const njson& color : o["palette"])
                cfg.palette.push_back(parse_color(color.get<std::string>()));
    }
    return cfg;
}

// --- digests / artifact tracking -------------------------------------------

std::string fnv1a64_hex(std::span<const std::uint8_t> bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint8_t b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

std::string fnv1a64_hex(const std::string& bytes)
{
    return fnv1a64_hex(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
}

namespace {

class Emitter {
public:
    explicit Emitter(fs::path out_dir) : out_dir_(std::move(out_dir)) {}

    void emit(const std::string& rel, std::span<const std::uint8_t> bytes)
    {
        const fs::path full = out_dir_ / rel;
        fs::create_directories(full.parent_path());
        std::ofstream out(full, std::ios::binary);
        if (!out)
            throw input_error("cannot create artifact: " + full.string());
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        if (!out)
            throw input_error("failed writing artifact: " + full.string());
        manifest_.emplace_back(rel, fnv1a64_hex(bytes));
        written_.push_back(full);
    }

    void emit(const std::string& rel, const std::string& text)
    {
        emit(rel, std::span<const std::uint8_t>(
                      reinterpret_cast<const std::uint8_t*>(text.data()),
                      text.size()));
    }

    // no partial artifacts survive a failed run
    void remove_written()
    {
        for (const fs::path& p : written_) {
            std::error_code ec;
            fs::remove(p, ec);
        }
    }

    const std::vector<std::pair<std::string, std::string>>& manifest() const
    {
        return manifest_;
    }

private:
    fs::path out_dir_;
    std::vector<std::pair<std::string, std::string>> manifest_;
    std::vector<fs::path> written_;
};

// --- pre-flight -------------------------------------------------------------

void require_file(const fs::path& p, const std::string& what)
{
    if (!fs::exists(p))
        throw input_error("pre-flight: " + what + " not found: " + p.string());
}

std::vector<std::string> needed_parameters(const PipelineConfig& cfg)
{
    bool lu = false;
    for (Scheme s : cfg.schemes)
        lu = lu || scheme_uses_lu(s);
    return preset_parameters(lu);
}

void preflight(const PipelineConfig& cfg)
{
    const std::vector<std::string> params = needed_parameters(cfg);
    for (const std::string& p : params) {
        const auto src = cfg.layers.find(p);
        if (src == cfg.layers.end())
            throw input_error("pre-flight: no layer source for parameter " + p);
        require_file(cfg.resolve(src->second.path), "layer " + p + " input");
        if (src->second.kind == LayerSource::Kind::points)
            require_file(cfg.resolve(src->second.geometry_like),
                         "layer " + p + " geometry_like grid");
        bool rated = false;
        for (const RatingScheme& r : cfg.ratings)
            rated = rated || (r.parameter == p);
        if (!rated)
            throw input_error("pre-flight: no rating scheme for parameter " +
                              p);
    }
    for (Scheme s : cfg.schemes) {
        const int k = cfg.k_for(s);
        if (k < 1)
            throw input_error(std::string("pre-flight: class count for ") +
                              scheme_name(s) + " must be at least 1");
        if (!cfg.class_labels.empty() &&
            static_cast<int>(cfg.class_labels.size()) != k)
            throw input_error(std::string("pre-flight: ") +
                              std::to_string(cfg.class_labels.size()) +
                              " labels configured but " + scheme_name(s) +
                              " uses k=" + std::to_string(k));
    }
    const bool wants_ahp =
        std::count(cfg.schemes.begin(), cfg.schemes.end(), Scheme::ahp_lu) > 0;
    const bool wants_fuzzy =
        std::count(cfg.schemes.begin(), cfg.schemes.end(),
                   Scheme::fuzzy_ahp_lu) > 0;
    if (wants_ahp && cfg.ahp_priorities.empty() && cfg.ahp_matrix.empty())
        throw input_error("pre-flight: scheme ahp_lu needs "
                          "weights.ahp_priorities or weights.ahp_matrix");
    if (wants_fuzzy && cfg.fuzzy_matrix.empty())
        throw input_error("pre-flight: scheme fuzzy_ahp_lu needs "
                          "weights.fuzzy_matrix");
    if (cfg.wells.empty())
        throw input_error("pre-flight: validation.wells is required");
    require_file(cfg.resolve(cfg.wells), "wells file");
    for (int id : cfg.high_classes)
        if (cfg.low_classes.count(id))
            throw input_error("pre-flight: class " + std::to_string(id) +
                              " is in both high_classes and low_classes");
}

// --- stages -----------------------------------------------------------------

Grid assemble_layer(const PipelineConfig& cfg, const std::string& param,
                    const LayerSource& src)
{
    if (src.kind == LayerSource::Kind::grid)
        return read_ascii_grid_file(cfg.resolve(src.path));

    const std::vector<SamplePoint> points =
        read_points_csv(cfg.resolve(src.path));
    const Grid like = read_ascii_grid_file(cfg.resolve(src.geometry_like));
    if (src.method == "idw")
        return idw(points, like.header(), src.idw_power, src.idw_neighbors);

    double max_dist = src.max_dist;
    if (!(max_dist > 0.0)) {
        // default: half the largest pair separation
        double longest = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j) {
                const double dx = points[i].x - points[j].x;
                const double dy = points[i].y - points[j].y;
                longest = std::max(longest, dx * dx + dy * dy);
            }
        max_dist = 0.5 * std::sqrt(longest);
    }
    const EmpiricalVariogram ev =
        empirical_variogram(points, src.n_lags, max_dist);
    const VariogramModel model = fit_variogram(ev, src.shape);
    std::cerr << "layer " << param << ": fitted " <<
        variogram_shape_name(model.shape) << " variogram (nugget "
              << model.nugget << ", sill " << model.sill << ", range "
              << model.range << ")\n";
    return kriging(points, like.header(), model);
}

WeightVector weights_for(const PipelineConfig& cfg, Scheme s,
                         const std::vector<std::string>& params)
{
    switch (s) {
    case Scheme::drastic:
        return {preset_integer_weights(false), preset_parameters(false)};
    case Scheme::drastic_lu: {
        std::vector<double> w;
        for (const std::string& p : params) {
            bool found = false;
            for (const RatingScheme& r : cfg.ratings)
                if (r.parameter == p) {
                    w.push_back(r.weight);
                    found = true;
                    break;
                }
            if (!found)
                throw input_error("no rating weight for parameter " + p);
        }
        return {std::move(w), params};
    }
    case Scheme::ahp_lu: {
        PairwiseMatrix pm = [&cfg] {
            if (!cfg.ahp_priorities.empty())
                return matrix_from_priorities(cfg.ahp_priorities);
            std::vector<double> flat;
            for (const auto& row : cfg.ahp_matrix)
                flat.insert(flat.end(), row.begin(), row.end());
            return PairwiseMatrix(static_cast<int>(cfg.ahp_matrix.size()),
                                  std::move(flat));
        }();
        if (pm.n() != static_cast<int>(params.size()))
            throw input_error("AHP matrix dimension " + std::to_string(pm.n()) +
                              " does not match the " +
                              std::to_string(params.size()) + " parameters");
        WeightVector w = ahp_weights(pm, params);
        const ConsistencyResult c = consistency(pm, w);
        std::cerr << "ahp consistency: lambda_max " << c.lambda_max << ", CI "
                  << c.ci << ", CR " << c.cr
                  << (c.acceptable ? " (acceptable)\n" : " (NOT acceptable)\n");
        return w;
    }
    case Scheme::fuzzy_ahp_lu: {
        std::vector<Tfn> flat;
        for (const auto& row : cfg.fuzzy_matrix)
            flat.insert(flat.end(), row.begin(), row.end());
        FuzzyPairwiseMatrix fm(static_cast<int>(cfg.fuzzy_matrix.size()),
                               std::move(flat));
        if (fm.n() != static_cast<int>(params.size()))
            throw input_error("fuzzy matrix dimension " +
                              std::to_string(fm.n()) +
                              " does not match the " +
                              std::to_string(params.size()) + " parameters");
        return fuzzy_ahp_weights(fm, params);
    }
    }
    throw input_error("unknown scheme");
}

std::string area_summary_csv(Scheme scheme, const Grid& classes,
                             const ClassBreaks& breaks)
{
    std::string csv = "scheme,class,label,cells,percent\n";
    for (const ClassArea& area : class_area_summary(classes)) {
        const std::string label =
            area.class_id >= 1 &&
                    area.class_id <= static_cast<int>(breaks.labels.size())
                ? breaks.labels[area.class_id - 1]
                : "";
        csv += std::string(scheme_name(scheme)) + "," +
               std::to_string(area.class_id) + "," + label + "," +
               std::to_string(area.cells) + "," + format_number(area.percent) +
               "\n";
    }
    return csv;
}

std::string roc_csv(const RocResult& roc)
{
    std::string csv = "threshold,fpr,tpr\n";
    for (const RocPoint& p : roc.points) {
        csv += (std::isinf(p.threshold) ? "inf" : format_number(p.threshold));
        csv += "," + format_number(p.fpr) + "," + format_number(p.tpr) + "\n";
    }
    return csv;
}

template <typename Fn>
auto run_stage(const std::string& stage, Emitter& emitter, Fn&& fn)
{
    try {
        return fn();
    } catch (const input_error& e) {
        emitter.remove_written();
        throw input_error(stage + ": " + e.what());
    } catch (const compute_error& e) {
        emitter.remove_written();
        throw compute_error(stage + ": " + e.what());
    } catch (const std::exception& e) {
        emitter.remove_written();
        throw compute_error(stage + ": " + e.what());
    }
}

} // namespace

std::string report_csv(std::span<const SchemeMetrics> metrics)
{
    std::string csv = "scheme,auc,n_pos,n_neg,pct_high_area,pct_pos_in_high,"
                      "pct_neg_in_low,n_skipped\n";
    for (const SchemeMetrics& m : metrics) {
        csv += scheme_name(m.scheme);
        csv += ",";
        csv += m.auc ? format_number(*m.auc) : "";
        csv += "," + std::to_string(m.n_pos) + "," + std::to_string(m.n_neg);
        csv += "," + format_number(m.pct_high_area);
        csv += ",";
        csv += m.pct_pos_in_high ? format_number(*m.pct_pos_in_high) : "";
        csv += ",";
        csv += m.pct_neg_in_low ? format_number(*m.pct_neg_in_low) : "";
        csv += "," + std::to_string(m.n_skipped) + "\n";
    }
    return csv;
}

std::string report_text(std::span<const SchemeMetrics> metrics)
{
    std::string txt;
    txt += "scheme        auc     n+    n-    high-area%  pos-in-high%  "
           "neg-in-low%  skipped\n";
    for (const SchemeMetrics& m : metrics) {
        char line[160];
        std::snprintf(
            line, sizeof(line),
            "%-13s %-7s %-5zu %-5zu %-11s %-13s %-12s %zu\n",
            scheme_name(m.scheme),
            m.auc ? format_fixed(*m.auc, 3).c_str() : "-", m.n_pos, m.n_neg,
            format_fixed(m.pct_high_area, 2).c_str(),
            m.pct_pos_in_high ? format_fixed(*m.pct_pos_in_high, 2).c_str()
                              : "-",
            m.pct_neg_in_low ? format_fixed(*m.pct_neg_in_low, 2).c_str()
                             : "-",
            m.n_skipped);
        txt += line;
    }
    return txt;
}

PipelineResult run_pipeline(const PipelineConfig& cfg)
{
    const fs::path out_dir = cfg.resolve(cfg.output_dir);
    Emitter emitter(out_dir);

    run_stage("pre-flight", emitter, [&] { preflight(cfg); });
    fs::create_directories(out_dir);

    // assemble physical layers in canonical parameter order
    const std::vector<std::string> params = needed_parameters(cfg);
    std::map<std::string, Grid> physical;
    run_stage("layers", emitter, [&] {
        const GridHeader* reference = nullptr;
        for (const std::string& p : params) {
            const LayerSource& src = cfg.layers.at(p);
            Grid g = assemble_layer(cfg, p, src);
            if (reference) {
                const std::string diff =
                    reference->describe_mismatch(g.header());
                if (!diff.empty())
                    throw input_error("layer " + p +
                                      " geometry differs from the first "
                                      "layer: " + diff);
            }
            if (src.kind == LayerSource::Kind::points)
                emitter.emit("layers/" + p + ".asc", write_ascii_grid(g));
            physical.emplace(p, std::move(g));
            reference = &physical.at(p).header();
        }
    });

    // ratings are scheme-independent
    std::map<std::string, Grid> ratings;
    run_stage("ratings", emitter, [&] {
        for (const std::string& p : params) {
            const RatingScheme* scheme = nullptr;
            for (const RatingScheme& r : cfg.ratings)
                if (r.parameter == p)
                    scheme = &r;
            RatingResult rated = apply_rating(physical.at(p), *scheme);
            if (rated.out_of_range > 0)
                std::cerr << "warning: layer " << p << ": "
                          << rated.out_of_range
                          << " cells outside every rating band/category "
                             "became nodata\n";
            emitter.emit("ratings/" + p + ".asc",
                         write_ascii_grid(rated.grid));
            ratings.emplace(p, std::move(rated.grid));
        }
    });

    const std::vector<Observation> wells = run_stage(
        "wells", emitter,
        [&] { return read_observations_csv(cfg.resolve(cfg.wells)); });

    // derived weights for every enabled scheme, in fixed order
    std::vector<Scheme> ordered;
    for (Scheme s : kAllSchemes)
        if (std::count(cfg.schemes.begin(), cfg.schemes.end(), s))
            ordered.push_back(s);

    std::map<Scheme, WeightVector> weights;
    run_stage("weights", emitter, [&] {
        std::string csv = "scheme,parameter,weight\n";
        for (Scheme s : ordered) {
            const std::vector<std::string> sparams =
                preset_parameters(scheme_uses_lu(s));
            WeightVector w = weights_for(cfg, s, sparams);
            for (std::size_t i = 0; i < w.w.size(); ++i)
                csv += std::string(scheme_name(s)) + "," + w.labels[i] + "," +
                       format_number(w.w[i]) + "\n";
            weights.emplace(s, std::move(w));
        }
        emitter.emit("weights.csv", csv);
    });

    PipelineResult result;
    result.out_dir = out_dir;
    for (Scheme s : ordered) {
        const std::string name = scheme_name(s);
        const VulnerabilityMap map = run_stage("index:" + name, emitter, [&] {
            IndexModel model;
            model.scheme = s;
            model.parameters = preset_parameters(scheme_uses_lu(s));
            model.weights = weights.at(s).w;
            for (const std::string& p : model.parameters)
                model.rating_layers.emplace(p, ratings.at(p));
            const int k = cfg.k_for(s);
            std::vector<std::string> labels =
                cfg.class_labels.empty() ? default_class_labels(k)
                                         : cfg.class_labels;
            return build_vulnerability_map(model, k, std::move(labels));
        });

        run_stage("artifacts:" + name, emitter, [&] {
            emitter.emit(name + "/vi.asc", write_ascii_grid(map.vi));
            emitter.emit(name + "/classes.asc",
                         write_ascii_grid(map.classes));
            emitter.emit(name + "/areas.csv",
                         area_summary_csv(s, map.classes, map.breaks));
            const std::vector<Rgba> palette =
                cfg.palette.empty() ? default_palette(map.breaks.k)
                                    : cfg.palette;
            emitter.emit(name + "/map.png",
                         encode_png(render_map(map.classes, palette)));
        });

        const SchemeMetrics metrics = run_stage(
            "validate:" + name, emitter, [&] {
                SchemeMetrics m;
                m.scheme = s;
                const ScoreResult scored =
                    score_wells(map.vi, wells, cfg.nitrate_threshold);
                for (const ScoredWell& w : scored.wells)
                    (w.positive ? m.n_pos : m.n_neg) += 1;
                m.n_skipped = scored.skipped();
                if (m.n_pos > 0 && m.n_neg > 0) {
                    const RocResult roc = roc_auc(scored.wells);
                    m.auc = roc.auc;
                    emitter.emit(name + "/roc.csv", roc_csv(roc));
                }
                const ZoneCoincidence zc = zone_coincidence(
                    map.classes, wells, cfg.nitrate_threshold,
                    cfg.high_classes, cfg.low_classes);
                m.pct_high_area = zc.pct_area_high;
                m.pct_pos_in_high = zc.pct_pos_in_high;
                m.pct_neg_in_low = zc.pct_neg_in_low;
                return m;
            });
        result.metrics.push_back(metrics);
    }

    run_stage("report", emitter, [&] {
        emitter.emit("report.csv", report_csv(result.metrics));
        emitter.emit("report.txt", report_text(result.metrics));
    });

    // manifest lists every artifact; it is not self-referential
    std::string manifest;
    for (const auto& [rel, digest] : emitter.manifest())
        manifest += digest + "  " + rel + "\n";
    {
        std::ofstream out(out_dir / "manifest.txt", std::ios::binary);
        if (!out)
            throw input_error("cannot create manifest in " + out_dir.string());
        out << manifest;
    }
    result.manifest = emitter.manifest();
    return result;
}

void write_default_config(const fs::path& dir)
{
    ojson doc;

    // config.json feeds the pipeline from the generated grids directly;
    // config_interp.json re-derives D and R from the scattered samples.
    ojson layers;
    for (const char* p : {"D", "R", "A", "S", "T", "I", "C", "LU"})
        layers[p] = {{"source", "grid"},
                     {"path", std::string("layers/") + p + ".asc"}};
    doc["layers"] = layers;

    ojson ratings;
    for (const RatingScheme& scheme : preset_rating_schemes()) {
        ojson entry;
        entry["weight"] = scheme.weight;
        if (scheme.mode == RatingMode::continuous) {
            ojson bands = ojson::array();
            for (const RatingBand& b : scheme.bands)
                bands.push_back({b.lower, b.upper, b.rating});
            entry["bands"] = bands;
        } else {
            ojson cats = ojson::array();
            for (const CategoryRating& c : scheme.categories)
                cats.push_back({c.code, c.label, c.rating});
            entry["categories"] = cats;
        }
        ratings[scheme.parameter] = entry;
    }
    doc["ratings"] = ratings;

    ojson weights;
    weights["ahp_priorities"] = preset_ahp_priorities();
    const FuzzyPairwiseMatrix fm = preset_fuzzy_matrix();
    ojson fuzzy = ojson::array();
    for (int i = 0; i < fm.n(); ++i) {
        ojson row = ojson::array();
        for (int j = 0; j < fm.n(); ++j) {
            const Tfn& t = fm.at(i, j);
            row.push_back({t.l, t.m, t.u});
        }
        fuzzy.push_back(row);
    }
    weights["fuzzy_matrix"] = fuzzy;
    doc["weights"] = weights;

    doc["schemes"] = {"drastic", "drastic_lu", "ahp_lu", "fuzzy_ahp_lu"};
    doc["classification"] = {{"k", 5}, {"k_per_scheme", ojson::object()}};
    doc["validation"] = {{"wells", "wells.csv"},
                         {"threshold_mg_l", 50.0},
                         {"high_classes", {4, 5}},
                         {"low_classes", {1, 2, 3}}};
    doc["output"] = {{"dir", "out"},
                     {"palette", {"#008000", "#9acd32", "#ffff00", "#ffa500",
                                  "#ff0000"}}};

    fs::create_directories(dir);
    {
        std::ofstream out(dir / "config.json", std::ios::binary);
        if (!out)
            throw input_error("cannot create config.json in " + dir.string());
        out << doc.dump(2) << "\n";
    }

    doc["layers"]["D"] = {{"source", "points"},
                          {"path", "samples/depth.csv"},
                          {"method", "idw"},
                          {"power", 2.0},
                          {"neighbors", 12},
                          {"geometry_like", "layers/T.asc"}};
    doc["layers"]["R"] = {{"source", "points"},
                          {"path", "samples/recharge.csv"},
                          {"method", "kriging"},
                          {"shape", "spherical"},
                          {"n_lags", 12},
                          {"max_dist", 0.0},
                          {"geometry_like", "layers/T.asc"}};
    doc["output"]["dir"] = "out_interp";
    {
        std::ofstream out(dir / "config_interp.json", std::ios::binary);
        if (!out)
            throw input_error("cannot create config_interp.json in " +
                              dir.string());
        out << doc.dump(2) << "\n";
    }
}

} // namespace gwva
