// Command-line driver: cross-validated evaluation, model training,
// batch prediction, and comparison tables against published results.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lperc/baselines.hpp"
#include "lperc/config.hpp"
#include "lperc/dataset.hpp"
#include "lperc/errors.hpp"
#include "lperc/evaluation.hpp"
#include "lperc/lperceptron.hpp"

namespace {

using namespace lperc;

struct CliOptions {
    ExperimentConfig cfg;
    std::string preset_name;
    std::string config_path;
    bool verbose = false;
};

// Flag values override preset/config-file values, so collect flags into a
// scratch config and merge afterwards.
void add_common_flags(CLI::App* cmd, CliOptions& opt, ExperimentConfig& flags) {
    cmd->add_option("--preset", opt.preset_name,
                    "bundled experiment configuration (wbcd-lp, hsd-lp, ...)");
    cmd->add_option("--config", opt.config_path, "key=value config file");
    cmd->add_option("--data", flags.dataset_path, "CSV data file");
    cmd->add_option("--name", flags.dataset_name, "dataset name for reports");
    cmd->add_option("--label-col", flags.schema.label_column,
                    "0-based label column index");
    cmd->add_option("--positive", flags.schema.positive_token,
                    "token of the positive class");
    cmd->add_option("--drop-cols", flags.schema.drop_columns,
                    "0-based column indices to drop (e.g. ID columns)");
    cmd->add_flag("--header", flags.schema.has_header,
                  "data file has a header row");
    cmd->add_option("--method", flags.method,
                    "lperceptron | naive-bayes | knn");
    cmd->add_option("--p1", flags.hyper.p1, "regression target, see --p1-class");
    cmd->add_option("--p2", flags.hyper.p2, "regression target of the other class");
    cmd->add_option("--dlb", flags.hyper.dlb, "degree lower bound");
    cmd->add_option("--dub", flags.hyper.dub, "degree upper bound");
    cmd->add_option("--ite", flags.hyper.ite, "max update passes");
    cmd->add_option("--threshold", flags.hyper.threshold, "activation threshold");
    cmd->add_option("--p1-class", [&flags](const std::vector<std::string>& v) {
            if (v[0] != "positive" && v[0] != "negative") return false;
            flags.hyper.p1_to_positive = v[0] == "positive";
            return true;
        }, "class p1 attaches to: positive | negative");
    cmd->add_option("--update-metric",
                    [&flags](const std::vector<std::string>& v) {
                        flags.hyper.update_metric =
                            update_metric_from_string(v[0]);
                        return true;
                    },
                    "misclassification | sse");
    cmd->add_option("--knn-k", flags.knn_k, "neighbor count for knn");
    cmd->add_option("--k", flags.folds, "fold count (default 10)");
    cmd->add_option("--seed", flags.seed, "fold shuffle seed (default 42)");
    cmd->add_option("--out", flags.output_path, "output file path");
    cmd->add_option("--format", flags.format, "json | csv");
    cmd->add_flag("--verbose", opt.verbose, "print per-fold details");
}

ExperimentConfig resolve(const CliOptions& opt, const ExperimentConfig& flags,
                         const CLI::App* cmd) {
    ExperimentConfig cfg;
    if (!opt.preset_name.empty())
        cfg = preset(opt.preset_name);
    else if (!opt.config_path.empty())
        cfg = load_config_file(opt.config_path);

    auto given = [cmd](const std::string& flag) {
        return cmd->count(flag) > 0;
    };
    if (given("--data")) cfg.dataset_path = flags.dataset_path;
    if (given("--name")) cfg.dataset_name = flags.dataset_name;
    if (given("--label-col")) cfg.schema.label_column = flags.schema.label_column;
    if (given("--positive")) cfg.schema.positive_token = flags.schema.positive_token;
    if (given("--drop-cols")) cfg.schema.drop_columns = flags.schema.drop_columns;
    if (given("--header")) cfg.schema.has_header = flags.schema.has_header;
    if (given("--method")) cfg.method = flags.method;
    if (given("--p1")) cfg.hyper.p1 = flags.hyper.p1;
    if (given("--p2")) cfg.hyper.p2 = flags.hyper.p2;
    if (given("--dlb")) cfg.hyper.dlb = flags.hyper.dlb;
    if (given("--dub")) cfg.hyper.dub = flags.hyper.dub;
    if (given("--ite")) cfg.hyper.ite = flags.hyper.ite;
    if (given("--threshold")) cfg.hyper.threshold = flags.hyper.threshold;
    if (given("--p1-class")) cfg.hyper.p1_to_positive = flags.hyper.p1_to_positive;
    if (given("--update-metric")) cfg.hyper.update_metric = flags.hyper.update_metric;
    if (given("--knn-k")) cfg.knn_k = flags.knn_k;
    if (given("--k")) cfg.folds = flags.folds;
    if (given("--seed")) cfg.seed = flags.seed;
    if (given("--out")) cfg.output_path = flags.output_path;
    if (given("--format")) cfg.format = flags.format;

    if (!given("--seed") && opt.preset_name.empty() && opt.config_path.empty()) {
        if (const char* env = std::getenv("LPERC_SEED"))
            cfg.seed = std::stoull(env);
    }

    if (cfg.dataset_path.empty())
        throw ConfigError("no data file: pass --data or --preset");
    if (cfg.schema.label_column < 0)
        throw ConfigError("no label column: pass --label-col or --preset");
    if (cfg.dataset_name.empty()) cfg.dataset_name = cfg.dataset_path;
    if (cfg.format != "json" && cfg.format != "csv")
        throw ConfigError("format must be json or csv");
    return cfg;
}

Trainer make_trainer(const ExperimentConfig& cfg) {
    if (cfg.method == "lperceptron") return make_lperceptron_trainer(cfg.hyper);
    if (cfg.method == "naive-bayes") return make_gnb_trainer();
    if (cfg.method == "knn") return make_knn_trainer(cfg.knn_k);
    throw ConfigError("unknown method: " + cfg.method);
}

void write_or_print(const std::string& text, const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw DataError("cannot write output file: " + path);
    out << text;
}

void print_metrics(const EvaluationReport& report) {
    const Metrics& m = report.pooled_metrics;
    std::printf("%s on %s (k=%d, seed=%llu)\n", report.method.c_str(),
                report.dataset.c_str(), report.k,
                static_cast<unsigned long long>(report.seed));
    std::printf("  accuracy    %6.2f %%\n", m.accuracy * 100.0);
    std::printf("  sensitivity %6.2f %%\n", m.sensitivity * 100.0);
    std::printf("  specificity %6.2f %%\n", m.specificity * 100.0);
    std::printf("  f1          %6.2f %%\n", m.f1 * 100.0);
}

int cmd_cv(const CliOptions& opt, const ExperimentConfig& flags,
           const CLI::App* cmd) {
    ExperimentConfig cfg = resolve(opt, flags, cmd);
    cfg.hyper.validate();
    const Dataset ds = load_csv(cfg.dataset_path, cfg.schema, cfg.dataset_name);
    EvaluationReport report =
        cross_validate(ds, cfg.folds, cfg.seed, make_trainer(cfg));
    if (cfg.method == "lperceptron") report.hyper = cfg.hyper;

    print_metrics(report);
    if (opt.verbose) {
        for (std::size_t f = 0; f < report.per_fold.size(); ++f) {
            const auto& cm = report.per_fold[f];
            std::printf("  fold %zu: tp=%lld fp=%lld tn=%lld fn=%lld %s\n", f,
                        static_cast<long long>(cm.tp),
                        static_cast<long long>(cm.fp),
                        static_cast<long long>(cm.tn),
                        static_cast<long long>(cm.fn),
                        report.fold_info[f].dump().c_str());
        }
        for (const auto& w : report.warnings)
            std::printf("  warning: %s\n", w.c_str());
    }

    if (cfg.format == "csv")
        write_or_print(reports_to_csv({report}), cfg.output_path);
    else
        write_or_print(report_to_json(report).dump(2) + "\n", cfg.output_path);
    return 0;
}

int cmd_train(const CliOptions& opt, const ExperimentConfig& flags,
              const CLI::App* cmd) {
    ExperimentConfig cfg = resolve(opt, flags, cmd);
    cfg.hyper.validate();
    if (cfg.method != "lperceptron")
        throw ConfigError("train supports only the lperceptron method");
    if (cfg.output_path.empty())
        throw ConfigError("train needs --out for the model file");

    Dataset ds = load_csv(cfg.dataset_path, cfg.schema, cfg.dataset_name);
    if (ds.has_missing()) {
        std::vector<std::size_t> all(ds.rows());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        ds = impute(ds, all);
    }
    const LPerceptronModel model = train(ds.features, ds.labels, cfg.hyper);
    save_model(model, cfg.output_path);
    std::printf("model written to %s (features=%zu, positive_above=%s)\n",
                cfg.output_path.c_str(), model.feature_count(),
                model.positive_above ? "true" : "false");
    return 0;
}

int cmd_predict(const std::string& model_path, const CliOptions& opt,
                const ExperimentConfig& flags, const CLI::App* cmd) {
    ExperimentConfig cfg = resolve(opt, flags, cmd);
    const LPerceptronModel model = load_model(model_path);

    Dataset ds = load_csv(cfg.dataset_path, cfg.schema, cfg.dataset_name);
    if (ds.cols() != model.feature_count())
        throw DimensionError("data has " + std::to_string(ds.cols()) +
                             " features, model expects " +
                             std::to_string(model.feature_count()));
    if (ds.has_missing()) {
        std::vector<std::size_t> all(ds.rows());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        ds = impute(ds, all);
    }

    std::string out = "label\n";
    for (Label y : predict_batch(model, ds.features))
        out += (y == Label::Positive ? "positive\n" : "negative\n");
    if (cfg.output_path.empty())
        std::fputs(out.c_str(), stdout);
    else
        write_or_print(out, cfg.output_path);
    return 0;
}

int cmd_compare(const std::string& dataset, const CliOptions& opt,
                const ExperimentConfig& flags, const CLI::App* cmd) {
    if (dataset != "wbcd" && dataset != "hsd")
        throw ConfigError("compare expects dataset 'wbcd' or 'hsd'");

    std::vector<EvaluationReport> measured;
    for (const std::string m : {"lp", "nb", "knn"}) {
        CliOptions o = opt;
        o.preset_name = dataset + "-" + m;
        ExperimentConfig cfg = resolve(o, flags, cmd);
        cfg.hyper.validate();
        const Dataset ds =
            load_csv(cfg.dataset_path, cfg.schema, cfg.dataset_name);
        measured.push_back(
            cross_validate(ds, cfg.folds, cfg.seed, make_trainer(cfg)));
    }

    std::string csv = reports_to_csv(measured);
    for (const auto& row : reference_rows(dataset)) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s,%s,%.2f,%.2f,%.2f,%.2f,paper-reported\n",
                      row.method.c_str(), dataset.c_str(), row.accuracy,
                      row.sensitivity, row.specificity, row.f1);
        csv += buf;
    }
    std::fputs(csv.c_str(), stdout);

    ExperimentConfig cfg_out = resolve([&] {
        CliOptions o = opt;
        o.preset_name = dataset + "-lp";
        return o;
    }(), flags, cmd);
    if (!cfg_out.output_path.empty()) write_or_print(csv, cfg_out.output_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"L-Perceptron classification engine and evaluation harness"};
    app.require_subcommand(1);

    CliOptions opt;
    ExperimentConfig flags;

    auto* cv = app.add_subcommand("cv", "k-fold cross-validated evaluation");
    add_common_flags(cv, opt, flags);

    auto* train_cmd = app.add_subcommand("train", "train on a full file and save the model");
    add_common_flags(train_cmd, opt, flags);

    std::string model_path;
    auto* predict_cmd = app.add_subcommand("predict", "predict labels with a saved model");
    predict_cmd->add_option("--model", model_path, "model JSON file")->required();
    add_common_flags(predict_cmd, opt, flags);

    std::string compare_dataset;
    auto* compare_cmd = app.add_subcommand(
        "compare", "measured methods plus published reference rows, as CSV");
    compare_cmd->add_option("dataset", compare_dataset, "wbcd | hsd")->required();
    add_common_flags(compare_cmd, opt, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (cv->parsed()) return cmd_cv(opt, flags, cv);
        if (train_cmd->parsed()) return cmd_train(opt, flags, train_cmd);
        if (predict_cmd->parsed())
            return cmd_predict(model_path, opt, flags, predict_cmd);
        if (compare_cmd->parsed())
            return cmd_compare(compare_dataset, opt, flags, compare_cmd);
    } catch (const lperc::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const lperc::NumericError& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return 4;
    } catch (const lperc::DataError& e) {
        std::fprintf(stderr, "data error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
