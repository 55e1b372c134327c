// gwva: groundwater vulnerability assessment toolkit.
//
// Subcommands mirror the pipeline stages (generate, interpolate, rate,
// weights, index, classify, validate, render) plus `run` for the whole
// config-driven workflow. Exit codes: 0 success, 1 config/input error,
// 2 computation error.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "gwva/errors.hpp"
#include "gwva/kernels.hpp"
#include "gwva/parallel.hpp"
#include "gwva/pipeline.hpp"
#include "gwva/presets.hpp"
#include "gwva/synth.hpp"
#include "gwva/validate.hpp"

namespace {

using namespace gwva;

std::set<int> parse_id_set(const std::string& csv)
{
    std::set<int> ids;
    std::string token;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!token.empty())
                ids.insert(std::stoi(token));
            token.clear();
        } else {
            token += c;
        }
    }
    return ids;
}

GridHeader geometry_from_options(const std::string& like, int ncols, int nrows,
                                 double xll, double yll, double cellsize,
                                 double nodata)
{
    if (!like.empty())
        return read_ascii_grid_file(like).header();
    if (ncols < 1 || nrows < 1 || !(cellsize > 0.0))
        throw input_error(
            "give --like or a full --ncols/--nrows/--cellsize geometry");
    return GridHeader{ncols, nrows, xll, yll, cellsize, nodata};
}

const RatingScheme& find_rating(const std::vector<RatingScheme>& schemes,
                                const std::string& parameter)
{
    for (const RatingScheme& s : schemes)
        if (s.parameter == parameter)
            return s;
    throw input_error("no rating scheme for parameter " + parameter);
}

int run_cli(int argc, char** argv)
{
    CLI::App app{"groundwater vulnerability assessment toolkit"};
    app.require_subcommand(1);

    unsigned threads = 0;
    app.add_option("--threads", threads,
                   "worker pool size for per-cell stages (0 = all cores)");

    // generate
    auto* gen = app.add_subcommand(
        "generate", "write a deterministic synthetic scenario + config");
    std::uint64_t seed = 42;
    std::string gen_dir = "scenario";
    SyntheticScenario scenario;
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--out-dir", gen_dir, "scenario directory");
    gen->add_option("--ncols", scenario.geometry.ncols);
    gen->add_option("--nrows", scenario.geometry.nrows);
    gen->add_option("--cellsize", scenario.geometry.cellsize);
    gen->add_option("--wells", scenario.n_wells, "number of nitrate wells");
    gen->add_option("--steepness", scenario.link_steepness,
                    "logistic link steepness of the planted contamination");

    // interpolate
    auto* interp = app.add_subcommand(
        "interpolate", "grid a sample CSV via IDW or ordinary kriging");
    std::string in_points, like, out_path, method = "idw", shape = "spherical";
    int ncols = 0, nrows = 0, neighbors = 12, n_lags = 12;
    double xll = 0.0, yll = 0.0, cellsize = 0.0, nodata = -9999.0;
    double power = 2.0, max_dist = 0.0;
    interp->add_option("--points", in_points, "x,y,value CSV")->required();
    interp->add_option("--method", method, "idw | kriging");
    interp->add_option("--like", like, "grid file supplying the geometry");
    interp->add_option("--ncols", ncols);
    interp->add_option("--nrows", nrows);
    interp->add_option("--xll", xll);
    interp->add_option("--yll", yll);
    interp->add_option("--cellsize", cellsize);
    interp->add_option("--nodata", nodata);
    interp->add_option("--power", power, "IDW distance exponent");
    interp->add_option("--neighbors", neighbors, "IDW neighbor count");
    interp->add_option("--shape", shape,
                       "variogram shape: spherical | exponential | gaussian");
    interp->add_option("--n-lags", n_lags, "variogram lag bins");
    interp->add_option("--max-dist", max_dist,
                       "variogram cutoff (0 = half the largest separation)");
    interp->add_option("--out", out_path, "output ASCII grid")->required();

    // rate
    auto* rate = app.add_subcommand(
        "rate", "map a physical layer to DRASTIC ratings");
    std::string rate_in, rate_param, rate_config;
    rate->add_option("--in", rate_in, "physical layer grid")->required();
    rate->add_option("--parameter", rate_param, "D,R,A,S,T,I,C or LU")
        ->required();
    rate->add_option("--config", rate_config,
                     "pipeline config supplying rating tables (default: "
                     "built-in preset tables)");
    rate->add_option("--out", out_path, "output rating grid")->required();

    // weights
    auto* weights = app.add_subcommand(
        "weights", "derive and print the per-scheme weight vectors");
    std::string weights_config;
    weights->add_option("--config", weights_config,
                        "pipeline config (default: preset matrices)");

    // index
    auto* index = app.add_subcommand(
        "index", "weighted overlay of rating grids into a VI grid");
    std::string index_scheme = "drastic", ratings_dir, index_config;
    index->add_option("--scheme", index_scheme,
                      "drastic | drastic_lu | ahp_lu | fuzzy_ahp_lu");
    index->add_option("--ratings-dir", ratings_dir,
                      "directory with <parameter>.asc rating grids")
        ->required();
    index->add_option("--config", index_config,
                      "pipeline config for MCDA weights (default: presets)");
    index->add_option("--out", out_path, "output VI grid")->required();

    // classify
    auto* cls = app.add_subcommand(
        "classify", "Jenks natural-breaks classification of a grid");
    std::string cls_in, breaks_out;
    int k = 5;
    cls->add_option("--in", cls_in, "input grid (e.g. a VI grid)")->required();
    cls->add_option("--k", k, "class count");
    cls->add_option("--out", out_path, "output class grid")->required();
    cls->add_option("--breaks-out", breaks_out,
                    "optional CSV with the break values");

    // validate
    auto* val = app.add_subcommand(
        "validate", "ROC/AUC and zone coincidence against nitrate wells");
    std::string val_vi, val_classes, val_wells, roc_out;
    double threshold = 50.0;
    std::string high_ids = "4,5", low_ids = "1,2,3";
    val->add_option("--vi", val_vi, "VI grid")->required();
    val->add_option("--classes", val_classes, "class grid")->required();
    val->add_option("--wells", val_wells, "x,y,nitrate_mg_l CSV")->required();
    val->add_option("--threshold", threshold, "nitrate threshold (mg/L)");
    val->add_option("--high", high_ids, "high/very-high class ids");
    val->add_option("--low", low_ids, "low/moderate class ids");
    val->add_option("--roc-out", roc_out, "optional ROC points CSV");

    // render
    auto* render = app.add_subcommand("render", "class grid to PNG");
    std::string render_in, palette_csv;
    render->add_option("--classes", render_in, "class grid")->required();
    render->add_option("--palette", palette_csv,
                       "comma-separated #rrggbb colors, low to high");
    render->add_option("--out", out_path, "output PNG")->required();

    // run
    auto* run = app.add_subcommand("run", "full config-driven pipeline");
    std::string run_config, run_out;
    run->add_option("--config", run_config, "pipeline config JSON")
        ->required();
    run->add_option("--out-dir", run_out, "override output.dir");

    for (CLI::App* sub : app.get_subcommands({}))
        sub->fallthrough(); // global flags may follow the subcommand

    CLI11_PARSE(app, argc, argv);
    set_worker_threads(threads);

    if (gen->parsed()) {
        scenario.seed = seed;
        const SyntheticData data = generate(scenario);
        write_scenario_files(data, gen_dir);
        write_default_config(gen_dir);
        std::cerr << "scenario written to " << gen_dir << " ("
                  << scenario.geometry.ncols << "x" << scenario.geometry.nrows
                  << " cells, " << data.wells.size() << " wells)\n";
        return 0;
    }

    if (interp->parsed()) {
        const auto points = read_points_csv(in_points);
        const GridHeader geom = geometry_from_options(
            like, ncols, nrows, xll, yll, cellsize, nodata);
        Grid out = [&] {
            if (method == "idw")
                return idw(points, geom, power, neighbors);
            if (method != "kriging")
                throw input_error("--method must be idw or kriging");
            double cutoff = max_dist;
            if (!(cutoff > 0.0)) {
                double longest = 0.0;
                for (std::size_t i = 0; i < points.size(); ++i)
                    for (std::size_t j = i + 1; j < points.size(); ++j) {
                        const double dx = points[i].x - points[j].x;
                        const double dy = points[i].y - points[j].y;
                        longest = std::max(longest, dx * dx + dy * dy);
                    }
                cutoff = 0.5 * std::sqrt(longest);
            }
            const auto ev = empirical_variogram(points, n_lags, cutoff);
            const auto model =
                fit_variogram(ev, parse_variogram_shape(shape));
            std::cerr << "fitted " << variogram_shape_name(model.shape)
                      << " variogram: nugget " << model.nugget << ", sill "
                      << model.sill << ", range " << model.range << "\n";
            return kriging(points, geom, model);
        }();
        write_ascii_grid_file(out, out_path);
        return 0;
    }

    if (rate->parsed()) {
        const std::vector<RatingScheme> schemes =
            rate_config.empty() ? preset_rating_schemes()
                                : load_config(rate_config).ratings;
        const RatingScheme& scheme = find_rating(schemes, rate_param);
        const RatingResult result =
            apply_rating(read_ascii_grid_file(rate_in), scheme);
        if (result.out_of_range > 0)
            std::cerr << "warning: " << result.out_of_range
                      << " cells outside every band/category became nodata\n";
        write_ascii_grid_file(result.grid, out_path);
        return 0;
    }

    if (weights->parsed()) {
        std::vector<double> priorities = preset_ahp_priorities();
        FuzzyPairwiseMatrix fuzzy = preset_fuzzy_matrix();
        if (!weights_config.empty()) {
            const PipelineConfig cfg = load_config(weights_config);
            if (!cfg.ahp_priorities.empty())
                priorities = cfg.ahp_priorities;
            if (!cfg.fuzzy_matrix.empty()) {
                std::vector<Tfn> flat;
                for (const auto& row : cfg.fuzzy_matrix)
                    flat.insert(flat.end(), row.begin(), row.end());
                fuzzy = FuzzyPairwiseMatrix(
                    static_cast<int>(cfg.fuzzy_matrix.size()),
                    std::move(flat));
            }
        }
        const auto params = preset_parameters(true);
        std::cout << "scheme,parameter,weight\n";
        auto print = [&params](const char* scheme, std::span<const double> w) {
            for (std::size_t i = 0; i < w.size(); ++i)
                std::cout << scheme << "," << params[i] << "," << w[i] << "\n";
        };
        const std::vector<double> w7 = preset_integer_weights(false);
        const std::vector<double> w8 = preset_integer_weights(true);
        print("drastic", w7);
        print("drastic_lu", w8);
        const PairwiseMatrix pm = matrix_from_priorities(priorities);
        const WeightVector ahp = ahp_weights(pm, params);
        print("ahp_lu", ahp.w);
        const ConsistencyResult c = consistency(pm, ahp);
        std::cerr << "ahp consistency: lambda_max " << c.lambda_max << ", CI "
                  << c.ci << ", CR " << c.cr
                  << (c.acceptable ? " (acceptable)\n" : " (NOT acceptable)\n");
        print("fuzzy_ahp_lu", fuzzy_ahp_weights(fuzzy, params).w);
        return 0;
    }

    if (index->parsed()) {
        const Scheme scheme = parse_scheme(index_scheme);
        IndexModel model;
        model.scheme = scheme;
        model.parameters = preset_parameters(scheme_uses_lu(scheme));
        for (const std::string& p : model.parameters)
            model.rating_layers.emplace(
                p, read_ascii_grid_file(std::filesystem::path(ratings_dir) /
                                        (p + ".asc")));
        switch (scheme) {
        case Scheme::drastic:
            model.weights = preset_integer_weights(false);
            break;
        case Scheme::drastic_lu:
            model.weights = preset_integer_weights(true);
            break;
        case Scheme::ahp_lu: {
            std::vector<double> priorities = preset_ahp_priorities();
            if (!index_config.empty()) {
                const PipelineConfig cfg = load_config(index_config);
                if (!cfg.ahp_priorities.empty())
                    priorities = cfg.ahp_priorities;
            }
            model.weights =
                ahp_weights(matrix_from_priorities(priorities)).w;
            break;
        }
        case Scheme::fuzzy_ahp_lu: {
            FuzzyPairwiseMatrix fuzzy = preset_fuzzy_matrix();
            if (!index_config.empty()) {
                const PipelineConfig cfg = load_config(index_config);
                if (!cfg.fuzzy_matrix.empty()) {
                    std::vector<Tfn> flat;
                    for (const auto& row : cfg.fuzzy_matrix)
                        flat.insert(flat.end(), row.begin(), row.end());
                    fuzzy = FuzzyPairwiseMatrix(
                        static_cast<int>(cfg.fuzzy_matrix.size()),
                        std::move(flat));
                }
            }
            model.weights = fuzzy_ahp_weights(fuzzy).w;
            break;
        }
        }
        write_ascii_grid_file(compute_index(model), out_path);
        return 0;
    }

    if (cls->parsed()) {
        const Grid in = read_ascii_grid_file(cls_in);
        const ClassBreaks breaks = jenks_breaks(in.valid_values(), k);
        write_ascii_grid_file(classify(in, breaks), out_path);
        if (!breaks_out.empty()) {
            std::ofstream out(breaks_out, std::ios::binary);
            out << "class,label,upper_break\n";
            for (int i = 0; i < breaks.k; ++i) {
                out << (i + 1) << "," << breaks.labels[i] << ",";
                if (i + 1 < breaks.k)
                    out << breaks.breaks[i];
                out << "\n";
            }
        }
        return 0;
    }

    if (val->parsed()) {
        const Grid vi = read_ascii_grid_file(val_vi);
        const Grid classes = read_ascii_grid_file(val_classes);
        const auto obs = read_observations_csv(val_wells);
        const ScoreResult scored = score_wells(vi, obs, threshold);
        std::size_t n_pos = 0, n_neg = 0;
        std::optional<double> auc;
        for (const ScoredWell& w : scored.wells)
            (w.positive ? n_pos : n_neg) += 1;
        if (n_pos > 0 && n_neg > 0) {
            const RocResult roc = roc_auc(scored.wells);
            auc = roc.auc;
            if (!roc_out.empty()) {
                std::ofstream out(roc_out, std::ios::binary);
                out << "threshold,fpr,tpr\n";
                for (const RocPoint& p : roc.points)
                    out << (std::isinf(p.threshold)
                                ? std::string("inf")
                                : std::to_string(p.threshold))
                        << "," << p.fpr << "," << p.tpr << "\n";
            }
        }
        const ZoneCoincidence zc = zone_coincidence(
            classes, obs, threshold, parse_id_set(high_ids),
            parse_id_set(low_ids));
        std::cout << "auc," << (auc ? std::to_string(*auc) : std::string())
                  << "\n"
                  << "n_pos," << n_pos << "\n"
                  << "n_neg," << n_neg << "\n"
                  << "pct_high_area," << zc.pct_area_high << "\n"
                  << "pct_pos_in_high,"
                  << (zc.pct_pos_in_high ? std::to_string(*zc.pct_pos_in_high)
                                         : std::string())
                  << "\n"
                  << "pct_neg_in_low,"
                  << (zc.pct_neg_in_low ? std::to_string(*zc.pct_neg_in_low)
                                        : std::string())
                  << "\n"
                  << "n_skipped," << scored.skipped() << "\n";
        return 0;
    }

    if (render->parsed()) {
        const Grid classes = read_ascii_grid_file(render_in);
        std::vector<Rgba> palette;
        if (!palette_csv.empty()) {
            std::string token;
            for (char c : palette_csv + ",") {
                if (c == ',') {
                    if (!token.empty())
                        palette.push_back(parse_color(token));
                    token.clear();
                } else {
                    token += c;
                }
            }
        } else {
            int max_id = 1;
            for (double v : classes.values())
                if (!classes.is_nodata(v))
                    max_id = std::max(max_id, static_cast<int>(std::lround(v)));
            palette = default_palette(max_id);
        }
        write_png_file(render_map(classes, palette), out_path);
        return 0;
    }

    if (run->parsed()) {
        PipelineConfig cfg = load_config(run_config);
        if (!run_out.empty())
            cfg.output_dir = run_out;
        const PipelineResult result = run_pipeline(cfg);
        std::cerr << "pipeline finished: " << result.manifest.size()
                  << " artifacts in " << result.out_dir << " (kernels: "
                  << kernels::active_implementation() << ")\n";
        std::cout << report_text(result.metrics);
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run_cli(argc, argv);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const compute_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
