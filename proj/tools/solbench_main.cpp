// Copyright 2026 The solbench Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "solbench/attack.hpp"
#include "solbench/classifier.hpp"
#include "solbench/dataset.hpp"
#include "solbench/errors.hpp"
#include "solbench/numformat.hpp"
#include "solbench/onnx_classifier.hpp"
#include "solbench/plots.hpp"
#include "solbench/preprocess.hpp"
#include "solbench/report.hpp"
#include "solbench/sweep.hpp"
#include "solbench/version.hpp"

namespace {

using namespace solbench;

struct ModelArgs {
  std::string model;
  std::string preprocess_path;
};

struct RunArgs {
  std::string manifest_path;
  int workers = 0;
  std::string on_error = "abort";
  std::string external_scores_path;
  std::string out;
  bool overwrite = false;
};

void add_model_flags(CLI::App* cmd, ModelArgs& args) {
  cmd->add_option("--model", args.model,
                  "Model file (ONNX) or synthetic spec such as "
                  "synthetic:brightness")
      ->required();
  cmd->add_option("--preprocess", args.preprocess_path,
                  "Preprocess config JSON (required for model files)");
}

void add_run_flags(CLI::App* cmd, RunArgs& args) {
  cmd->add_option("--manifest", args.manifest_path,
                  "Dataset manifest CSV (id,path,label)")
      ->required();
  cmd->add_option("--workers", args.workers,
                  "Worker threads; 0 means one per logical processor")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--on-error", args.on_error,
                  "Per-sample error policy: abort or skip")
      ->check(CLI::IsMember({"abort", "skip"}));
  cmd->add_option("--external-scores", args.external_scores_path,
                  "JSON object of externally computed scores to embed");
  cmd->add_option("--out", args.out, "Report JSON output path")->required();
  cmd->add_flag("--overwrite", args.overwrite,
                "Replace the output report if it already exists");
}

std::shared_ptr<Classifier> open_model(const ModelArgs& args) {
  if (args.model.rfind("synthetic:", 0) == 0) {
    return open_classifier(args.model, nullptr);
  }
  if (args.preprocess_path.empty()) {
    throw ConfigError("--preprocess is required for model files");
  }
  const PreprocessConfig config = load_preprocess_config(args.preprocess_path);
  return open_classifier(args.model, &config);
}

std::map<std::string, double> load_external_scores(const std::string& path) {
  if (path.empty()) return {};
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot read external scores '" + path + "'");
  }
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("external scores '" + path + "': " + e.what());
  }
  if (!root.is_object()) {
    throw ConfigError("external scores '" + path + "' must be a JSON object");
  }
  std::map<std::string, double> scores;
  for (const auto& [key, value] : root.items()) {
    if (!value.is_number()) {
      throw ConfigError("external score '" + key + "' must be a number");
    }
    scores[key] = value.get<double>();
  }
  return scores;
}

EvalOptions make_options(const RunArgs& args) {
  EvalOptions options;
  options.workers = args.workers;
  options.on_error =
      args.on_error == "skip" ? ErrorPolicy::kSkip : ErrorPolicy::kAbort;
  return options;
}

RunReport base_report(const Classifier& classifier, const Manifest& manifest,
                      const RunArgs& args) {
  RunReport report;
  report.tool_version = kToolVersion;
  report.timestamp = resolve_timestamp();
  report.model_identity = classifier.identity();
  report.model_digest = classifier.digest();
  if (const PreprocessConfig* config = classifier.preprocess_config()) {
    report.preprocess = *config;
  }
  report.manifest_hash = manifest.content_hash;
  report.external_scores = load_external_scores(args.external_scores_path);
  return report;
}

std::string sibling_path(const std::string& out, const char* extension) {
  std::filesystem::path path(out);
  path.replace_extension(extension);
  return path.string();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << content;
  out.flush();
  if (!out) {
    throw std::runtime_error("failed writing '" + path + "'");
  }
}

std::string percent(double fraction) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f%%", fraction * 100.0);
  return buffer;
}

int run_attack(const ModelArgs& model_args, const RunArgs& run_args,
               const AttackConfig& config) {
  const std::shared_ptr<Classifier> classifier = open_model(model_args);
  const Manifest manifest =
      load_manifest(run_args.manifest_path, classifier->num_classes());
  const std::string base_dir =
      std::filesystem::path(run_args.manifest_path).parent_path().string();
  const ManifestSampleSet samples(manifest, base_dir);
  const EvalOptions options = make_options(run_args);

  const int k5 = std::min(5, classifier->num_classes());
  const std::map<int, double> clean =
      evaluate_clean(*classifier, samples, {1, k5}, options);
  const RobustResult robust =
      evaluate_robust(*classifier, samples, config, options);

  RunReport report = base_report(*classifier, manifest, run_args);
  report.attack_config = config;
  report.clean = CleanMetrics{clean.at(1), clean.at(k5)};
  report.robust = CleanMetrics{robust.top1_accuracy, robust.top5_accuracy};
  report.outcomes = robust.outcomes;
  report.errored_samples = robust.errored_samples;
  write_report_file(report, run_args.out, run_args.overwrite);

  std::cout << "clean  top-1 " << percent(report.clean->top1) << "  top-5 "
            << percent(report.clean->top5) << "\n"
            << "robust top-1 " << percent(report.robust->top1) << "  top-5 "
            << percent(report.robust->top5) << "  (RandSol-Top"
            << config.k << "-" << config.n << ")\n"
            << "report written to " << run_args.out << "\n";
  return 0;
}

int run_sweep(const ModelArgs& model_args, const RunArgs& run_args,
              double step, std::uint64_t seed, std::string csv_path,
              std::string svg_path) {
  const std::shared_ptr<Classifier> classifier = open_model(model_args);
  const Manifest manifest =
      load_manifest(run_args.manifest_path, classifier->num_classes());
  const std::string base_dir =
      std::filesystem::path(run_args.manifest_path).parent_path().string();
  const ManifestSampleSet samples(manifest, base_dir);

  const SweepResult sweep =
      universal_sweep(*classifier, samples, step, make_options(run_args));

  RunReport report = base_report(*classifier, manifest, run_args);
  report.sweep_config = SweepConfig{step, seed};
  report.sweep = sweep;
  write_report_file(report, run_args.out, run_args.overwrite);

  if (csv_path.empty()) csv_path = sibling_path(run_args.out, ".csv");
  if (svg_path.empty()) svg_path = sibling_path(run_args.out, ".svg");
  write_text_file(csv_path, sweep_curve_csv(sweep));
  write_text_file(svg_path,
                  sweep_curve_svg(sweep, classifier->identity()));

  std::cout << "global minimum top-1 accuracy "
            << percent(sweep.global_min_accuracy) << " at alpha "
            << format_double(sweep.global_min_alpha) << "\n"
            << "report written to " << run_args.out << "\n"
            << "curve written to " << csv_path << " and " << svg_path << "\n";
  return 0;
}

int run_landscape(const ModelArgs& model_args,
                  const std::string& manifest_path, int sample_count,
                  int grid_points, const std::string& out,
                  std::string svg_path, const std::string& classnames_path) {
  const std::shared_ptr<Classifier> classifier = open_model(model_args);
  const Manifest manifest =
      load_manifest(manifest_path, classifier->num_classes());
  if (sample_count < 1) {
    throw ConfigError("--samples must be >= 1");
  }
  if (static_cast<std::size_t>(sample_count) > manifest.entries.size()) {
    throw ConfigError("--samples " + std::to_string(sample_count) +
                      " exceeds the manifest's " +
                      std::to_string(manifest.entries.size()) + " entries");
  }
  const std::string base_dir =
      std::filesystem::path(manifest_path).parent_path().string();
  const ManifestSampleSet samples(manifest, base_dir);

  std::map<int, std::string> class_names;
  if (!classnames_path.empty()) {
    class_names = load_class_names(classnames_path);
  }

  std::vector<LossLandscape> landscapes;
  std::vector<std::string> labels;
  for (int i = 0; i < sample_count; ++i) {
    const LabeledSample sample = samples.get(i);
    landscapes.push_back(loss_landscape(*classifier, sample, grid_points));
    const auto name = class_names.find(sample.label);
    labels.push_back(name != class_names.end()
                         ? sample.id + " (" + name->second + ")"
                         : sample.id);
  }

  if (svg_path.empty()) svg_path = sibling_path(out, ".svg");
  write_text_file(out, landscape_csv(landscapes));
  write_text_file(svg_path,
                  landscape_svg(landscapes, classifier->identity(), labels));
  std::cout << "landscapes written to " << out << " and " << svg_path << "\n";
  return 0;
}

int run_report(const std::vector<std::string>& inputs,
               const std::string& csv_path) {
  std::vector<RunReport> reports;
  reports.reserve(inputs.size());
  for (const std::string& path : inputs) {
    reports.push_back(load_report_file(path));
  }
  std::cout << render_report_table(reports);
  if (!csv_path.empty()) {
    write_text_file(csv_path, render_report_csv(reports));
    std::cout << "summary written to " << csv_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark image classifiers against adversarial "
               "solarization"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  ModelArgs attack_model, sweep_model, landscape_model;
  RunArgs attack_run, sweep_run;
  AttackConfig attack_config;

  CLI::App* attack = app.add_subcommand(
      "attack", "Per-sample random-search attack plus clean evaluation");
  add_model_flags(attack, attack_model);
  add_run_flags(attack, attack_run);
  attack->add_option("--k", attack_config.k,
                     "Success when the true label leaves the top-k");
  attack->add_option("--n", attack_config.n, "Threshold draws per sample");
  attack->add_option("--seed", attack_config.seed, "Master seed");

  double sweep_step = 0.01;
  std::uint64_t sweep_seed = 0;
  std::string sweep_csv, sweep_svg;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Universal fixed-threshold attack over a threshold grid");
  add_model_flags(sweep, sweep_model);
  add_run_flags(sweep, sweep_run);
  sweep->add_option("--step", sweep_step, "Threshold grid step");
  sweep->add_option("--seed", sweep_seed, "Recorded in the report");
  sweep->add_option("--csv", sweep_csv,
                    "Curve CSV path (default: --out with .csv)");
  sweep->add_option("--svg", sweep_svg,
                    "Curve SVG path (default: --out with .svg)");

  std::string landscape_manifest, landscape_out, landscape_svg;
  std::string landscape_classnames;
  int landscape_samples = 5;
  int landscape_grid = 101;
  CLI::App* landscape = app.add_subcommand(
      "landscape", "Per-sample loss as a function of the threshold");
  add_model_flags(landscape, landscape_model);
  landscape->add_option("--manifest", landscape_manifest,
                        "Dataset manifest CSV")
      ->required();
  landscape->add_option("--samples", landscape_samples,
                        "Number of manifest entries to plot");
  landscape->add_option("--grid", landscape_grid,
                        "Grid points on [0, 1] inclusive");
  landscape->add_option("--out", landscape_out, "Loss CSV output path")
      ->required();
  landscape->add_option("--svg", landscape_svg,
                        "SVG path (default: --out with .svg)");
  landscape->add_option("--classnames", landscape_classnames,
                        "JSON class-name map for curve labels");

  std::vector<std::string> report_inputs;
  std::string report_csv;
  CLI::App* report = app.add_subcommand(
      "report", "Render one or more report files as a summary table");
  report->add_option("inputs", report_inputs, "Report JSON files")
      ->required();
  report->add_option("--csv", report_csv, "Summary CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (attack->parsed()) {
      return run_attack(attack_model, attack_run, attack_config);
    }
    if (sweep->parsed()) {
      return run_sweep(sweep_model, sweep_run, sweep_step, sweep_seed,
                       sweep_csv, sweep_svg);
    }
    if (landscape->parsed()) {
      return run_landscape(landscape_model, landscape_manifest,
                           landscape_samples, landscape_grid, landscape_out,
                           landscape_svg, landscape_classnames);
    }
    if (report->parsed()) {
      return run_report(report_inputs, report_csv);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
