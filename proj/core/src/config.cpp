#include "lperc/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lperc/errors.hpp"

namespace lperc {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<int> split_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';'))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

} // namespace

ExperimentConfig preset(const std::string& name) {
    ExperimentConfig cfg;

    const bool wbcd = name.rfind("wbcd-", 0) == 0;
    const bool hsd = name.rfind("hsd-", 0) == 0;
    if (wbcd) {
        cfg.dataset_path = "data/breast-cancer-wisconsin.data";
        cfg.dataset_name = "wbcd";
        cfg.schema.label_column = 10;
        cfg.schema.positive_token = "4"; // malignant
        cfg.schema.drop_columns = {0};   // sample code number
        // Published settings: fixed degree 4, targets -2/3, cut at 0.5.
        // p1 goes to the benign class; that is what reproduces the
        // published table.
        cfg.hyper = Hyperparameters{-2.0, 3.0, 4, 4, 2, 0.5, false};
    } else if (hsd) {
        cfg.dataset_path = "data/haberman.data";
        cfg.dataset_name = "hsd";
        cfg.schema.label_column = 3;
        cfg.schema.positive_token = "1"; // survived 5 years or longer
        cfg.hyper = Hyperparameters{-1.3, 2.9, 1, 1, 0, 0.42, true};
    } else {
        throw ConfigError("unknown preset: " + name);
    }

    const std::string method = name.substr(name.find('-') + 1);
    if (method == "lp")
        cfg.method = "lperceptron";
    else if (method == "nb")
        cfg.method = "naive-bayes";
    else if (method == "knn")
        cfg.method = "knn";
    else
        throw ConfigError("unknown preset: " + name);
    return cfg;
}

std::vector<std::string> preset_names() {
    return {"wbcd-lp", "wbcd-nb", "wbcd-knn", "hsd-lp", "hsd-nb", "hsd-knn"};
}

std::string config_to_key_value(const ExperimentConfig& cfg) {
    std::string out;
    out += "data=" + cfg.dataset_path + "\n";
    out += "name=" + cfg.dataset_name + "\n";
    out += "label_col=" + std::to_string(cfg.schema.label_column) + "\n";
    out += "positive=" + cfg.schema.positive_token + "\n";
    out += "drop_cols=" + join_ints(cfg.schema.drop_columns) + "\n";
    out += "header=" + std::string(cfg.schema.has_header ? "true" : "false") + "\n";
    out += "method=" + cfg.method + "\n";
    out += "p1=" + format_double(cfg.hyper.p1) + "\n";
    out += "p2=" + format_double(cfg.hyper.p2) + "\n";
    out += "dlb=" + std::to_string(cfg.hyper.dlb) + "\n";
    out += "dub=" + std::to_string(cfg.hyper.dub) + "\n";
    out += "ite=" + std::to_string(cfg.hyper.ite) + "\n";
    out += "threshold=" + format_double(cfg.hyper.threshold) + "\n";
    out += "p1_class=" +
           std::string(cfg.hyper.p1_to_positive ? "positive" : "negative") + "\n";
    out += "update_metric=" + to_string(cfg.hyper.update_metric) + "\n";
    out += "knn_k=" + std::to_string(cfg.knn_k) + "\n";
    out += "k=" + std::to_string(cfg.folds) + "\n";
    out += "seed=" + std::to_string(cfg.seed) + "\n";
    out += "out=" + cfg.output_path + "\n";
    out += "format=" + cfg.format + "\n";
    return out;
}

ExperimentConfig config_from_key_value(const std::string& text) {
    ExperimentConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected key=value");
        const std::string key = line.substr(0, eq);
        const std::string val = line.substr(eq + 1);
        try {
            if (key == "data") cfg.dataset_path = val;
            else if (key == "name") cfg.dataset_name = val;
            else if (key == "label_col") cfg.schema.label_column = std::stoi(val);
            else if (key == "positive") cfg.schema.positive_token = val;
            else if (key == "drop_cols") cfg.schema.drop_columns = split_ints(val);
            else if (key == "header") cfg.schema.has_header = val == "true";
            else if (key == "method") cfg.method = val;
            else if (key == "p1") cfg.hyper.p1 = std::stod(val);
            else if (key == "p2") cfg.hyper.p2 = std::stod(val);
            else if (key == "dlb") cfg.hyper.dlb = std::stoi(val);
            else if (key == "dub") cfg.hyper.dub = std::stoi(val);
            else if (key == "ite") cfg.hyper.ite = std::stoi(val);
            else if (key == "threshold") cfg.hyper.threshold = std::stod(val);
            else if (key == "p1_class") cfg.hyper.p1_to_positive = val != "negative";
            else if (key == "update_metric")
                cfg.hyper.update_metric = update_metric_from_string(val);
            else if (key == "knn_k") cfg.knn_k = std::stoi(val);
            else if (key == "k") cfg.folds = std::stoi(val);
            else if (key == "seed") cfg.seed = std::stoull(val);
            else if (key == "out") cfg.output_path = val;
            else if (key == "format") cfg.format = val;
            else throw ConfigError("config line " + std::to_string(line_no) +
                                   ": unknown key '" + key + "'");
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": bad value for '" + key + "'");
        }
    }
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_key_value(ss.str());
}

std::vector<ReferenceRow> reference_rows(const std::string& dataset) {
    if (dataset == "wbcd")
        return {{"L-Perceptron", 97.42, 98.73, 96.20, 96.50},
                {"Naive Bayes", 97.36, 97.40, 97.90, 97.64},
                {"RBF Network", 96.77, 97.07, 96.23, 96.60},
                {"J48", 93.41, 93.40, 90.37, 91.86}};
    if (dataset == "hsd")
        return {{"L-Perceptron", 75.18, 90.04, 37.08, 83.86},
                {"Logistic Regression", 74.27, 94.77, 22.95, 82.62},
                {"Linear Discriminant Analysis", 73.78, 95.42, 19.67, 82.71},
                {"KNN", 71.03, 88.23, 34.42, 81.57},
                {"CART", 64.02, 74.50, 26.22, 78.44},
                {"Naive Bayes", 74.17, 94.11, 27.86, 82.52},
                {"SVM", 69.77, 95.42, 3.27, 82.71},
                {"MLP", 66.21, 62.74, 55.73, 72.64},
                {"Random Forest", 67.27, 81.69, 22.95, 80.38}};
    throw ConfigError("unknown dataset for reference rows: " + dataset);
}

} // namespace lperc
