#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ltd/config.hpp"
#include "ltd/dataset.hpp"
#include "ltd/discovery.hpp"
#include "ltd/errors.hpp"
#include "ltd/evaluation.hpp"
#include "ltd/hyperopt.hpp"
#include "ltd/io.hpp"
#include "ltd/synthgen.hpp"
#include "ltd/version.hpp"

namespace {

using ltd::Json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitAlgorithmError = 3;
constexpr int kExitConfigError = 4;

struct CommonOptions {
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool normalize = false;
    bool normalize_dates = false;
    bool csv = false;
    std::size_t jobs = 1;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opts, bool with_jobs) {
    cmd->add_option("--config", opts.config_path, "JSON or TOML config file");
    cmd->add_option("--seed", opts.seed, "Seed for all randomness in this command");
    cmd->add_flag("--normalize", opts.normalize,
                  "Normalize claim values (trim, lowercase, collapse whitespace)");
    cmd->add_flag("--normalize-dates", opts.normalize_dates,
                  "Additionally rewrite recognizable dates as ISO-8601 (implies --normalize)");
    cmd->add_flag("--csv", opts.csv, "Also write CSV variants next to the JSON output");
    if (with_jobs) {
        cmd->add_option("--jobs", opts.jobs, "Worker threads for independent runs")
            ->check(CLI::PositiveNumber);
    }
}

ltd::NormalizeOptions normalize_options(const CommonOptions& opts) {
    ltd::NormalizeOptions n;
    n.enabled = opts.normalize || opts.normalize_dates;
    n.dates = opts.normalize_dates;
    return n;
}

// defaults -> config file -> explicit --seed flag.
void resolve_config(const CLI::App* cmd, const CommonOptions& opts, ltd::RunConfig& run,
                    ltd::SynthConfig* synth) {
    if (!opts.config_path.empty()) {
        ltd::apply_config(ltd::read_config_file(opts.config_path), run, synth);
    }
    if (cmd->count("--seed") > 0) {
        run.seed = opts.seed;
        if (synth != nullptr) synth->seed = opts.seed;
    }
}

ltd::Algorithm parse_algorithm_or_throw(const std::string& tag) {
    const auto a = ltd::parse_algorithm(tag);
    if (!a) {
        throw ltd::ConfigError("unknown algorithm '" + tag +
                               "' (expected rbm, rbm-c, majority, mle, ltm or 2est)");
    }
    return *a;
}

std::string join_command(int argc, char** argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        if (i > 0) out += " ";
        out += argv[i];
    }
    return out;
}

std::vector<ltd::ManifestInput> manifest_inputs(const std::vector<std::string>& paths) {
    std::vector<ltd::ManifestInput> inputs;
    inputs.reserve(paths.size());
    for (const std::string& p : paths) {
        inputs.push_back(ltd::ManifestInput{p, ltd::file_digest_hex(p)});
    }
    return inputs;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ------------------------------------------------------------- discover

int cmd_discover(const CLI::App* cmd, const CommonOptions& opts, const std::string& input,
                 const std::string& truth, const std::string& algorithm,
                 const std::string& output, const std::string& command_line) {
    const auto start = std::chrono::steady_clock::now();
    ltd::RunConfig run;
    resolve_config(cmd, opts, run, nullptr);
    const ltd::Algorithm alg = parse_algorithm_or_throw(algorithm);

    std::optional<std::filesystem::path> truth_path;
    std::vector<std::string> inputs = {input};
    if (!truth.empty()) {
        truth_path = truth;
        inputs.push_back(truth);
    }
    const ltd::Dataset dataset = ltd::load_dataset(input, truth_path, normalize_options(opts));
    const ltd::DiscoveryResult result = ltd::discover(dataset, alg, run);

    const Json echo = ltd::run_config_to_json(run);
    ltd::write_result_files(output, dataset, result, echo, run.seed, opts.csv);
    ltd::write_manifest(output, command_line, echo, manifest_inputs(inputs), run.seed,
                        seconds_since(start));
    return kExitOk;
}

// ------------------------------------------------------------- generate

int cmd_generate(const CLI::App* cmd, const CommonOptions& opts,
                 const ltd::SynthConfig& flag_values, const std::string& output_dir,
                 const std::string& command_line) {
    const auto start = std::chrono::steady_clock::now();
    ltd::RunConfig run;
    ltd::SynthConfig synth;
    resolve_config(cmd, opts, run, &synth);

    // Explicit generator flags beat the config file; CLI11 already parsed
    // them into flag_values, so copy over only the ones that were given.
    if (cmd->count("--sources") > 0) synth.n_sources = flag_values.n_sources;
    if (cmd->count("--attributes") > 0) synth.n_attributes = flag_values.n_attributes;
    if (cmd->count("--values-min") > 0) synth.values_min = flag_values.values_min;
    if (cmd->count("--values-max") > 0) synth.values_max = flag_values.values_max;
    if (cmd->count("--claim-frequency") > 0) {
        synth.claim_frequency_mean = flag_values.claim_frequency_mean;
    }
    if (cmd->count("--claim-frequency-concentration") > 0) {
        synth.claim_frequency_concentration = flag_values.claim_frequency_concentration;
    }
    if (cmd->count("--accuracy") > 0) synth.accuracy_mean = flag_values.accuracy_mean;
    if (cmd->count("--accuracy-concentration") > 0) {
        synth.accuracy_concentration = flag_values.accuracy_concentration;
    }
    if (cmd->count("--copy-probability") > 0) {
        synth.copy_probability = flag_values.copy_probability;
    }
    if (cmd->count("--seed") > 0) synth.seed = opts.seed;

    const ltd::SynthResult result = ltd::generate(synth);
    const std::filesystem::path dir(output_dir);
    std::filesystem::create_directories(dir);
    ltd::write_claims_csv(dir / "claims.csv", result.dataset);
    ltd::write_truth_csv(dir / "truth.csv", result.dataset);
    Json profile = ltd::profiles_to_json(result);
    profile["config"] = ltd::synth_config_to_json(synth);
    ltd::write_text_file(dir / "profile.json", profile.dump(2) + "\n");
    ltd::write_manifest(dir / "generate", command_line, ltd::synth_config_to_json(synth), {},
                        synth.seed, seconds_since(start));
    return kExitOk;
}

// ------------------------------------------------------------- evaluate

int cmd_evaluate(const CLI::App* cmd, const CommonOptions& opts, const std::string& input,
                 const std::string& truth, const std::vector<std::string>& algorithms,
                 const std::string& output, const std::string& command_line) {
    const auto start = std::chrono::steady_clock::now();
    ltd::RunConfig run;
    resolve_config(cmd, opts, run, nullptr);

    const ltd::Dataset dataset = ltd::load_dataset(input, std::filesystem::path(truth),
                                                   normalize_options(opts));
    const ltd::DatasetStats stats = ltd::dataset_stats(dataset);

    Json results = Json::array();
    std::string csv = "algorithm,accuracy,iterations,converged\n";
    for (const std::string& tag : algorithms) {
        const ltd::Algorithm alg = parse_algorithm_or_throw(tag);
        const ltd::DiscoveryResult r = ltd::discover(dataset, alg, run);
        const double acc = ltd::accuracy(dataset, r.estimate);
        Json row;
        row["algorithm"] = r.algorithm;
        row["accuracy"] = acc;
        row["iterations"] = r.iterations;
        row["converged"] = r.converged;
        results.push_back(std::move(row));
        csv += tag + "," + ltd::format_double(acc) + "," + std::to_string(r.iterations) + "," +
               (r.converged ? "true" : "false") + "\n";
    }

    Json report;
    report["dataset"] = Json{{"claims", stats.claim_count},
                             {"attributes", dataset.attribute_count()},
                             {"sources", dataset.source_count()},
                             {"mean_normalized_entropy", stats.mean_entropy}};
    if (stats.source_accuracy) {
        report["dataset"]["average_source_accuracy"] = *stats.source_accuracy;
    }
    report["results"] = std::move(results);
    report["seed"] = run.seed;
    ltd::write_text_file(output, report.dump(2) + "\n");
    if (opts.csv) {
        std::filesystem::path stem(output);
        stem.replace_extension();
        ltd::write_text_file(stem.string() + ".csv", csv);
    }
    ltd::write_manifest(output, command_line, ltd::run_config_to_json(run),
                        manifest_inputs({input, truth}), run.seed, seconds_since(start));
    return kExitOk;
}

// ----------------------------------------------------------------- bench

int cmd_bench(const CLI::App* cmd, const CommonOptions& opts,
              const std::vector<std::size_t>& sizes, const std::vector<std::string>& algorithms,
              std::size_t repeats, const std::string& output, const std::string& command_line) {
    const auto start = std::chrono::steady_clock::now();
    ltd::RunConfig run;
    ltd::SynthConfig synth;
    resolve_config(cmd, opts, run, &synth);

    Json rows = Json::array();
    std::string csv = "algorithm,target_claims,claims,seconds\n";
    for (const std::size_t size : sizes) {
        // Scale the attribute count so expected claims match the target.
        ltd::SynthConfig sized = synth;
        const double expected_per_attribute =
            static_cast<double>(synth.n_sources) * synth.claim_frequency_mean;
        sized.n_attributes = std::max<std::size_t>(
            1, static_cast<std::size_t>(static_cast<double>(size) / expected_per_attribute));
        const ltd::SynthResult data = ltd::generate(sized);
        for (const std::string& tag : algorithms) {
            const ltd::Algorithm alg = parse_algorithm_or_throw(tag);
            const ltd::BenchPoint p = ltd::benchmark_discovery(data.dataset, alg, run, repeats);
            Json row;
            row["algorithm"] = tag;
            row["target_claims"] = size;
            row["claims"] = p.claims;
            row["seconds"] = p.seconds;
            rows.push_back(std::move(row));
            csv += tag + "," + std::to_string(size) + "," + std::to_string(p.claims) + "," +
                   ltd::format_double(p.seconds) + "\n";
        }
    }
    Json report;
    report["repeats"] = std::max<std::size_t>(repeats, 3);
    report["points"] = std::move(rows);
    report["seed"] = run.seed;
    ltd::write_text_file(output, report.dump(2) + "\n");
    if (opts.csv) {
        std::filesystem::path stem(output);
        stem.replace_extension();
        ltd::write_text_file(stem.string() + ".csv", csv);
    }
    ltd::write_manifest(output, command_line, ltd::run_config_to_json(run), {}, run.seed,
                        seconds_since(start));
    return kExitOk;
}

// ----------------------------------------------------------------- sweep

std::vector<ltd::ParameterGrid> parse_grids(const std::vector<std::string>& specs) {
    std::vector<ltd::ParameterGrid> grids;
    for (const std::string& spec : specs) {
        const std::size_t eq = spec.find('=');
        if (eq == std::string::npos) {
            throw ltd::ConfigError("--grid expects parameter=v1,v2,... , got '" + spec + "'");
        }
        const std::string name = spec.substr(0, eq);
        const auto param = ltd::parse_parameter(name);
        if (!param) throw ltd::ConfigError("unknown sweep parameter '" + name + "'");
        ltd::ParameterGrid grid;
        grid.parameter = *param;
        std::string rest = spec.substr(eq + 1);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            const std::size_t cut = rest.find(',', pos);
            const std::string item = rest.substr(pos, cut - pos);
            if (item.empty()) throw ltd::ConfigError("--grid has an empty value in '" + spec + "'");
            try {
                grid.values.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw ltd::ConfigError("--grid value '" + item + "' is not a number");
            }
            if (cut == std::string::npos) break;
            pos = cut + 1;
        }
        if (grid.values.empty()) {
            throw ltd::ConfigError("--grid needs at least one value in '" + spec + "'");
        }
        grids.push_back(std::move(grid));
    }
    return grids;
}

Json trace_to_json(const ltd::OptimizeResult& r) {
    Json trace = Json::array();
    for (const ltd::TraceEntry& e : r.trace) {
        Json row;
        row["cycle"] = e.cycle;
        row["parameter"] = std::string(ltd::parameter_name(e.parameter));
        row["value"] = e.value;
        row["accuracy"] = e.accuracy;
        trace.push_back(std::move(row));
    }
    return trace;
}

int cmd_sweep(const CLI::App* cmd, const CommonOptions& opts,
              const std::vector<std::string>& inputs, const std::vector<std::string>& truths,
              const std::string& algorithm, const std::vector<std::string>& grid_specs,
              std::size_t cycles, const std::string& output, const std::string& command_line) {
    const auto start = std::chrono::steady_clock::now();
    ltd::RunConfig run;
    resolve_config(cmd, opts, run, nullptr);
    const ltd::Algorithm alg = parse_algorithm_or_throw(algorithm);
    if (inputs.size() != truths.size() || inputs.empty()) {
        throw ltd::ConfigError("sweep needs one --truth per --input");
    }
    const std::vector<ltd::ParameterGrid> space =
        grid_specs.empty() ? ltd::default_search_space() : parse_grids(grid_specs);

    std::vector<ltd::Dataset> datasets;
    datasets.reserve(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        datasets.push_back(ltd::load_dataset(inputs[i], std::filesystem::path(truths[i]),
                                             normalize_options(opts)));
    }

    Json per_dataset = Json::array();
    std::vector<ltd::RunConfig> best_configs;
    for (std::size_t i = 0; i < datasets.size(); ++i) {
        const ltd::OptimizeResult r =
            ltd::alternating_optimize(datasets[i], alg, space, run, cycles, opts.jobs);
        best_configs.push_back(r.best);
        Json row;
        row["input"] = inputs[i];
        row["initial_accuracy"] = r.initial_accuracy;
        row["best_accuracy"] = r.best_accuracy;
        row["cycles"] = r.cycles;
        row["best_config"] = ltd::run_config_to_json(r.best);
        row["trace"] = trace_to_json(r);
        per_dataset.push_back(std::move(row));
    }

    Json report;
    report["algorithm"] = algorithm;
    report["per_dataset"] = std::move(per_dataset);
    std::string matrix_csv;
    if (datasets.size() >= 1) {
        std::vector<const ltd::Dataset*> ptrs;
        for (const ltd::Dataset& d : datasets) ptrs.push_back(&d);
        const ltd::CrossApplyResult m = ltd::cross_apply(ptrs, alg, best_configs, opts.jobs);
        Json cross;
        cross["matrix"] = Json::array();
        for (const auto& row : m.matrix) {
            Json r = Json::array();
            for (double v : row) r.push_back(std::isnan(v) ? Json(nullptr) : Json(v));
            cross["matrix"].push_back(std::move(r));
        }
        const auto summary_row = [](const std::vector<double>& v) {
            Json r = Json::array();
            for (double x : v) r.push_back(std::isnan(x) ? Json(nullptr) : Json(x));
            return r;
        };
        cross["mean"] = summary_row(m.column_mean);
        cross["std"] = summary_row(m.column_std);
        cross["max"] = summary_row(m.column_max);
        report["cross_apply"] = std::move(cross);

        matrix_csv = "optimized_on";
        for (const std::string& in : inputs) matrix_csv += "," + ltd::csv_escape(in);
        matrix_csv += "\n";
        for (std::size_t i = 0; i < m.matrix.size(); ++i) {
            matrix_csv += ltd::csv_escape(inputs[i]);
            for (double v : m.matrix[i]) {
                matrix_csv += "," + (std::isnan(v) ? std::string("invalid")
                                                   : ltd::format_double(v));
            }
            matrix_csv += "\n";
        }
        const auto csv_summary = [&](const char* label, const std::vector<double>& v) {
            matrix_csv += label;
            for (double x : v) {
                matrix_csv += "," + (std::isnan(x) ? std::string("invalid")
                                                   : ltd::format_double(x));
            }
            matrix_csv += "\n";
        };
        csv_summary("Mean", m.column_mean);
        csv_summary("Std", m.column_std);
        csv_summary("Max", m.column_max);
    }
    report["seed"] = run.seed;
    ltd::write_text_file(output, report.dump(2) + "\n");
    if (opts.csv && !matrix_csv.empty()) {
        std::filesystem::path stem(output);
        stem.replace_extension();
        ltd::write_text_file(stem.string() + ".csv", matrix_csv);
    }
    std::vector<std::string> all_inputs = inputs;
    all_inputs.insert(all_inputs.end(), truths.begin(), truths.end());
    ltd::write_manifest(output, command_line, ltd::run_config_to_json(run),
                        manifest_inputs(all_inputs), run.seed, seconds_since(start));
    return kExitOk;
}

// ----------------------------------------------------------- sensitivity

int cmd_sensitivity(const CLI::App* cmd, const CommonOptions& opts, const std::string& input,
                    const std::string& truth, const std::string& algorithm,
                    const std::string& parameter, const std::vector<double>& grid,
                    const std::string& output, const std::string& command_line) {
    const auto start = std::chrono::steady_clock::now();
    ltd::RunConfig run;
    resolve_config(cmd, opts, run, nullptr);
    const ltd::Algorithm alg = parse_algorithm_or_throw(algorithm);
    const auto param = ltd::parse_parameter(parameter);
    if (!param) throw ltd::ConfigError("unknown sweep parameter '" + parameter + "'");
    if (grid.empty()) throw ltd::ConfigError("sensitivity needs a nonempty --grid");

    const ltd::Dataset dataset = ltd::load_dataset(input, std::filesystem::path(truth),
                                                   normalize_options(opts));
    const std::vector<ltd::SweepPoint> series =
        ltd::sensitivity_sweep(dataset, alg, run, *param, grid, opts.jobs);

    Json points = Json::array();
    std::string csv = "value,accuracy\n";
    for (const ltd::SweepPoint& p : series) {
        Json row;
        row["value"] = p.value;
        row["accuracy"] = p.failed ? Json(nullptr) : Json(p.accuracy);
        points.push_back(std::move(row));
        csv += ltd::format_double(p.value) + "," +
               (p.failed ? std::string("invalid") : ltd::format_double(p.accuracy)) + "\n";
    }
    Json report;
    report["algorithm"] = algorithm;
    report["parameter"] = parameter;
    report["points"] = std::move(points);
    report["seed"] = run.seed;
    ltd::write_text_file(output, report.dump(2) + "\n");
    if (opts.csv) {
        std::filesystem::path stem(output);
        stem.replace_extension();
        ltd::write_text_file(stem.string() + ".csv", csv);
    }
    ltd::write_manifest(output, command_line, ltd::run_config_to_json(run),
                        manifest_inputs({input, truth}), run.seed, seconds_since(start));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Latent truth discovery over conflicting source claims"};
    app.set_version_flag("--version", ltd::kToolVersion);
    app.require_subcommand(1);
    const std::string command_line = join_command(argc, argv);

    // --- discover ---
    auto* discover = app.add_subcommand("discover", "Run one discovery algorithm on a dataset");
    CommonOptions discover_opts;
    std::string discover_input, discover_truth, discover_algorithm, discover_output;
    discover->add_option("--input", discover_input, "Claims CSV")->required();
    discover->add_option("--truth", discover_truth, "Optional ground-truth CSV");
    discover->add_option("--algorithm", discover_algorithm,
                         "rbm | rbm-c | majority | mle | ltm | 2est")
        ->required();
    discover->add_option("--output", discover_output, "Result JSON path")->required();
    add_common_flags(discover, discover_opts, false);

    // --- generate ---
    auto* generate = app.add_subcommand("generate", "Generate a synthetic dataset");
    CommonOptions generate_opts;
    ltd::SynthConfig synth_flags;
    std::string generate_dir;
    generate->add_option("--output-dir", generate_dir, "Directory for the dataset files")
        ->required();
    generate->add_option("--sources", synth_flags.n_sources, "Source count");
    generate->add_option("--attributes", synth_flags.n_attributes, "Attribute count");
    generate->add_option("--values-min", synth_flags.values_min, "Min values per attribute");
    generate->add_option("--values-max", synth_flags.values_max, "Max values per attribute");
    generate->add_option("--claim-frequency", synth_flags.claim_frequency_mean,
                         "Mean claim frequency");
    generate->add_option("--claim-frequency-concentration",
                         synth_flags.claim_frequency_concentration,
                         "Claim-frequency Beta concentration");
    generate->add_option("--accuracy", synth_flags.accuracy_mean, "Mean source accuracy");
    generate->add_option("--accuracy-concentration", synth_flags.accuracy_concentration,
                         "Accuracy Beta concentration");
    generate->add_option("--copy-probability", synth_flags.copy_probability,
                         "Probability that a source copies an earlier one");
    add_common_flags(generate, generate_opts, false);

    // --- evaluate ---
    auto* evaluate = app.add_subcommand("evaluate", "Run algorithms and report accuracy");
    CommonOptions evaluate_opts;
    std::string evaluate_input, evaluate_truth, evaluate_output;
    std::vector<std::string> evaluate_algorithms;
    evaluate->add_option("--input", evaluate_input, "Claims CSV")->required();
    evaluate->add_option("--truth", evaluate_truth, "Ground-truth CSV")->required();
    evaluate->add_option("--algorithms", evaluate_algorithms, "Algorithm tags")
        ->required()
        ->delimiter(',');
    evaluate->add_option("--output", evaluate_output, "Report JSON path")->required();
    add_common_flags(evaluate, evaluate_opts, true);

    // --- bench ---
    auto* bench = app.add_subcommand("bench", "Time algorithms on generated datasets");
    CommonOptions bench_opts;
    std::vector<std::size_t> bench_sizes;
    std::vector<std::string> bench_algorithms;
    std::size_t bench_repeats = 3;
    std::string bench_output;
    bench->add_option("--sizes", bench_sizes, "Target claim counts")->required()->delimiter(',');
    bench->add_option("--algorithms", bench_algorithms, "Algorithm tags")
        ->required()
        ->delimiter(',');
    bench->add_option("--repeats", bench_repeats, "Timing repeats per point (min 3)");
    bench->add_option("--output", bench_output, "Report JSON path")->required();
    add_common_flags(bench, bench_opts, false);

    // --- sweep ---
    auto* sweep = app.add_subcommand(
        "sweep", "Optimize hyperparameters per dataset and cross-apply the results");
    CommonOptions sweep_opts;
    std::vector<std::string> sweep_inputs, sweep_truths, sweep_grids;
    std::string sweep_algorithm, sweep_output;
    std::size_t sweep_cycles = 10;
    sweep->add_option("--input", sweep_inputs, "Claims CSV (repeatable)")->required();
    sweep->add_option("--truth", sweep_truths, "Ground-truth CSV (one per --input)")->required();
    sweep->add_option("--algorithm", sweep_algorithm, "Algorithm tag")->required();
    sweep->add_option("--grid", sweep_grids,
                      "parameter=v1,v2,... (repeatable; replaces the default space)");
    sweep->add_option("--cycles", sweep_cycles, "Cycle cap for the alternating optimizer");
    sweep->add_option("--output", sweep_output, "Report JSON path")->required();
    add_common_flags(sweep, sweep_opts, true);

    // --- sensitivity ---
    auto* sensitivity =
        app.add_subcommand("sensitivity", "Accuracy across one parameter's grid");
    CommonOptions sensitivity_opts;
    std::string sens_input, sens_truth, sens_algorithm, sens_parameter, sens_output;
    std::vector<double> sens_grid;
    sensitivity->add_option("--input", sens_input, "Claims CSV")->required();
    sensitivity->add_option("--truth", sens_truth, "Ground-truth CSV")->required();
    sensitivity->add_option("--algorithm", sens_algorithm, "Algorithm tag")->required();
    sensitivity->add_option("--parameter", sens_parameter, "Parameter name")->required();
    sensitivity->add_option("--grid", sens_grid, "Grid values")->required()->delimiter(',');
    sensitivity->add_option("--output", sens_output, "Report JSON path")->required();
    add_common_flags(sensitivity, sensitivity_opts, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (discover->parsed()) {
            return cmd_discover(discover, discover_opts, discover_input, discover_truth,
                                discover_algorithm, discover_output, command_line);
        }
        if (generate->parsed()) {
            return cmd_generate(generate, generate_opts, synth_flags, generate_dir, command_line);
        }
        if (evaluate->parsed()) {
            return cmd_evaluate(evaluate, evaluate_opts, evaluate_input, evaluate_truth,
                                evaluate_algorithms, evaluate_output, command_line);
        }
        if (bench->parsed()) {
            return cmd_bench(bench, bench_opts, bench_sizes, bench_algorithms, bench_repeats,
                             bench_output, command_line);
        }
        if (sweep->parsed()) {
            return cmd_sweep(sweep, sweep_opts, sweep_inputs, sweep_truths, sweep_algorithm,
                             sweep_grids, sweep_cycles, sweep_output, command_line);
        }
        if (sensitivity->parsed()) {
            return cmd_sensitivity(sensitivity, sensitivity_opts, sens_input, sens_truth,
                                   sens_algorithm, sens_parameter, sens_grid, sens_output,
                                   command_line);
        }
        std::cerr << "no subcommand selected\n";
        return kExitConfigError;
    } catch (const ltd::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const ltd::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ltd::AlgorithmError& e) {
        std::cerr << "algorithm error: " << e.what() << "\n";
        return kExitAlgorithmError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAlgorithmError;
    }
}
