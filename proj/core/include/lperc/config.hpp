#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lperc/dataset.hpp"
#include "lperc/lperceptron.hpp"

namespace lperc {

/// Everything one experiment run needs; serializes to and from a flat
/// key=value config file without loss.
struct ExperimentConfig {
    std::string dataset_path;
    std::string dataset_name;
    CsvSchema schema;
    std::string method = "lperceptron"; // lperceptron | naive-bayes | knn
    Hyperparameters hyper;
    int knn_k = 5;
    int folds = 10;
    std::uint64_t seed = 42;
    std::string output_path;
    std::string format = "json"; // json | csv
};

/// Bundled experiment configurations: "wbcd-lp", "hsd-lp", plus
/// "{wbcd,hsd}-{nb,knn}" for the baseline comparisons.
ExperimentConfig preset(const std::string& name);
std::vector<std::string> preset_names();

std::string config_to_key_value(const ExperimentConfig& cfg);
ExperimentConfig config_from_key_value(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

/// A published comparison-table row we do not reproduce in-repo; values
/// are percentages.
struct ReferenceRow {
    std::string method;
    double accuracy, sensitivity, specificity, f1;
};

/// Reference rows for dataset "wbcd" or "hsd".
std::vector<ReferenceRow> reference_rows(const std::string& dataset);

} // namespace lperc
