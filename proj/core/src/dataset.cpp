#include "lperc/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "lperc/errors.hpp"

namespace lperc {

bool Dataset::has_missing() const {
    for (const auto& row : missing)
        for (bool m : row)
            if (m) return true;
    return false;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

Dataset load_csv(const std::string& path, const CsvSchema& schema,
                 const std::string& name) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path);

    Dataset ds;
    ds.name = name.empty() ? path : name;

    std::string line;
    std::size_t line_no = 0;
    std::size_t expected_cols = 0;
    bool skip_header = schema.has_header;

    while (std::getline(in, line)) {
        ++line_no;
        if (skip_header) {
            skip_header = false;
            continue;
        }
        if (line.empty() || line == "\r") continue;

        auto tokens = split_line(line);
        if (expected_cols == 0) {
            expected_cols = tokens.size();
            if (schema.label_column < 0 ||
                schema.label_column >= static_cast<int>(expected_cols))
                throw SchemaError("label column " +
                                  std::to_string(schema.label_column) +
                                  " out of range for " +
                                  std::to_string(expected_cols) + " columns");
        } else if (tokens.size() != expected_cols) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(expected_cols) + " columns, got " +
                             std::to_string(tokens.size()));
        }

        std::vector<double> row;
        std::vector<bool> mask;
        for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
            if (i == schema.label_column) continue;
            if (std::find(schema.drop_columns.begin(), schema.drop_columns.end(),
                          i) != schema.drop_columns.end())
                continue;
            const std::string& tok = tokens[i];
            if (tok.empty() || tok == "?") {
                row.push_back(0.0);
                mask.push_back(true);
            } else {
                std::size_t pos = 0;
                double v;
                try {
                    v = std::stod(tok, &pos);
                } catch (const std::exception&) {
                    throw ParseError("line " + std::to_string(line_no) +
                                     ": not a number: '" + tok + "'");
                }
                if (pos != tok.size() || !std::isfinite(v))
                    throw ParseError("line " + std::to_string(line_no) +
                                     ": not a finite number: '" + tok + "'");
                row.push_back(v);
                mask.push_back(false);
            }
        }

        const std::string& lab = tokens[schema.label_column];
        ds.labels.push_back(lab == schema.positive_token ? Label::Positive
                                                         : Label::Negative);
        ds.features.push_back(std::move(row));
        ds.missing.push_back(std::move(mask));
    }

    if (ds.features.empty()) throw DataError("no data rows in " + path);
    if (ds.cols() == 0) throw SchemaError("no feature columns left in " + path);
    return ds;
}

void write_csv(const Dataset& ds, const std::string& path,
               const std::string& positive_token,
               const std::string& negative_token) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write file: " + path);
    for (std::size_t i = 0; i < ds.rows(); ++i) {
        for (std::size_t j = 0; j < ds.cols(); ++j) {
            if (ds.missing[i][j])
                out << '?';
            else
                out << format_double(ds.features[i][j]);
            out << ',';
        }
        out << (ds.labels[i] == Label::Positive ? positive_token
                                                : negative_token)
            << '\n';
    }
}

Dataset impute(const Dataset& ds, const std::vector<std::size_t>& train_rows) {
    if (train_rows.empty()) throw DataError("impute: empty training row set");

    Dataset out = ds;
    const std::size_t m = ds.cols();
    for (std::size_t j = 0; j < m; ++j) {
        bool any_masked = false;
        for (std::size_t i = 0; i < ds.rows(); ++i)
            if (ds.missing[i][j]) { any_masked = true; break; }
        if (!any_masked) continue;

        double sum = 0.0;
        std::size_t count = 0;
        for (std::size_t r : train_rows) {
            if (!ds.missing[r][j]) {
                sum += ds.features[r][j];
                ++count;
            }
        }
        if (count == 0)
            throw DataError("impute: column " + std::to_string(j) +
                            " has no unmasked training value");
        const double mean = sum / static_cast<double>(count);
        for (std::size_t i = 0; i < ds.rows(); ++i)
            if (ds.missing[i][j]) out.features[i][j] = mean;
    }
    return out;
}

FoldAssignment stratified_folds(const Dataset& ds, int k, std::uint64_t seed,
                                std::vector<std::string>* warnings) {
    const std::size_t n = ds.rows();
    if (k < 2) throw ConfigError("fold count must be >= 2, got " +
                                 std::to_string(k));
    if (static_cast<std::size_t>(k) > n)
        throw ConfigError("fold count " + std::to_string(k) +
                          " exceeds instance count " + std::to_string(n));

    FoldAssignment fa;
    fa.k = k;
    fa.fold_of.assign(n, -1);

    std::mt19937_64 rng(seed);
    std::size_t cursor = 0;
    for (Label cls : {Label::Positive, Label::Negative}) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (ds.labels[i] == cls) idx.push_back(i);
        if (warnings && !idx.empty() && idx.size() < static_cast<std::size_t>(k))
            warnings->push_back(
                "class " + std::string(cls == Label::Positive ? "positive"
                                                              : "negative") +
                " has fewer members (" + std::to_string(idx.size()) +
                ") than folds (" + std::to_string(k) + ")");
        // Fisher-Yates with the shared generator; deterministic everywhere.
        for (std::size_t j = idx.size(); j > 1; --j)
            std::swap(idx[j - 1], idx[rng() % j]);
        for (std::size_t i : idx)
            fa.fold_of[i] = static_cast<int>(cursor++ % k);
    }
    return fa;
}

} // namespace lperc
