#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lperc {

enum class Label : std::uint8_t { Negative = 0, Positive = 1 };

/// A loaded tabular dataset: n instances by m features, binary labels,
/// and a mask recording which cells were absent in the source file.
/// Masked cells hold a placeholder of 0.0 until impute() fills them.
struct Dataset {
    std::string name;
    std::vector<std::vector<double>> features; // n x m, row major
    std::vector<Label> labels;                 // n
    std::vector<std::vector<bool>> missing;    // n x m

    std::size_t rows() const { return features.size(); }
    std::size_t cols() const { return features.empty() ? 0 : features[0].size(); }
    bool has_missing() const;
};

/// Column layout of a CSV file. Column indices are 0-based.
struct CsvSchema {
    int label_column = -1;
    std::string positive_token;
    std::vector<int> drop_columns;
    bool has_header = false;
};

struct FoldAssignment {
    std::vector<int> fold_of; // n entries, each in [0, k)
    int k = 0;
};

/// Parse a comma-separated file. "?" and the empty cell are treated as
/// missing. Throws ParseError (naming the line), SchemaError, or DataError.
Dataset load_csv(const std::string& path, const CsvSchema& schema,
                 const std::string& name = "");

/// Inverse of load_csv for round-tripping: features, then the label token
/// ("positive_token" or "0"), masked cells written back as "?".
void write_csv(const Dataset& ds, const std::string& path,
               const std::string& positive_token = "1",
               const std::string& negative_token = "0");

/// Replace every masked cell with the mean of the unmasked values of its
/// column restricted to train_rows. Unmasked cells are untouched and the
/// mask is kept for provenance. Throws DataError when a column has no
/// unmasked training value to average.
Dataset impute(const Dataset& ds, const std::vector<std::size_t>& train_rows);

/// Deterministic stratified fold assignment: per class, instances are
/// shuffled with the seed and dealt to folds through a shared cursor, so
/// both overall and per-class fold sizes differ by at most one.
FoldAssignment stratified_folds(const Dataset& ds, int k, std::uint64_t seed,
                                std::vector<std::string>* warnings = nullptr);

} // namespace lperc
