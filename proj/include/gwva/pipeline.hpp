#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gwva/classify.hpp"
#include "gwva/grid.hpp"
#include "gwva/interpolate.hpp"
#include "gwva/mcda.hpp"
#include "gwva/render.hpp"
#include "gwva/vindex.hpp"

namespace gwva {

/// Where a physical layer comes from: a ready grid file, or a sample CSV
/// interpolated onto the geometry of another grid file.
struct LayerSource {
    enum class Kind { grid, points };
    Kind kind = Kind::grid;
    std::filesystem::path path;
    // points only:
    std::string method = "idw"; // "idw" | "kriging"
    double idw_power = 2.0;
    int idw_neighbors = 12;
    VariogramShape shape = VariogramShape::spherical;
    int n_lags = 12;
    double max_dist = 0.0; // <= 0: half the largest pair separation
    std::filesystem::path geometry_like;
};

/// Parsed pipeline configuration document (JSON; see docs/config.example.json
/// and the README). Relative paths are resolved against the config file's
/// directory.
struct PipelineConfig {
    std::filesystem::path base_dir;
    std::map<std::string, LayerSource> layers;
    std::vector<RatingScheme> ratings;
    std::vector<Scheme> schemes;
    std::vector<double> ahp_priorities;      // either this...
    std::vector<std::vector<double>> ahp_matrix; // ...or an explicit matrix
    std::vector<std::vector<Tfn>> fuzzy_matrix;
    int default_k = 5;
    std::map<std::string, int> k_per_scheme;
    std::vector<std::string> class_labels; // empty: defaults per k
    std::filesystem::path wells;
    double nitrate_threshold = 50.0;
    std::set<int> high_classes{4, 5};
    std::set<int> low_classes{1, 2, 3};
    std::filesystem::path output_dir = "out";
    std::vector<Rgba> palette; // empty: default

    int k_for(Scheme s) const;
    std::filesystem::path resolve(const std::filesystem::path& p) const;
};

PipelineConfig load_config(const std::filesystem::path& path);

/// Write the annotated default configuration (preset coefficient tables,
/// all four schemes, the synthetic scenario's file layout) to dir/config.json.
void write_default_config(const std::filesystem::path& dir);

/// One report row (Table-6-style columns). Undefined metrics stay empty in
/// the CSV.
struct SchemeMetrics {
    Scheme scheme;
    std::optional<double> auc;
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
    double pct_high_area = 0.0;
    std::optional<double> pct_pos_in_high;
    std::optional<double> pct_neg_in_low;
    std::size_t n_skipped = 0;
};

struct PipelineResult {
    std::filesystem::path out_dir;
    std::vector<std::pair<std::string, std::string>> manifest; // relpath, digest
    std::vector<SchemeMetrics> metrics;
};

/// Run the full workflow: pre-flight config validation, layer assembly
/// (read or interpolate), rating, weight derivation, per-scheme index /
/// classification / rendering, nitrate validation, reports and a digest
/// manifest. Outputs are byte-identical across repeated runs and across
/// worker-thread counts. On any stage failure the partial artifacts are
/// removed and the error names the stage.
PipelineResult run_pipeline(const PipelineConfig& config);

/// Fixed-column CSV for the metrics rows:
/// scheme,auc,n_pos,n_neg,pct_high_area,pct_pos_in_high,pct_neg_in_low,n_skipped
std::string report_csv(std::span<const SchemeMetrics> metrics);

/// Human-readable companion of report_csv.
std::string report_text(std::span<const SchemeMetrics> metrics);

/// FNV-1a 64-bit content digest, hex-encoded (manifest entries).
std::string fnv1a64_hex(std::span<const std::uint8_t> bytes);
std::string fnv1a64_hex(const std::string& bytes);

} // namespace gwva
