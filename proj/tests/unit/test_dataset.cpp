#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "lperc/dataset.hpp"
#include "lperc/errors.hpp"

using namespace lperc;

namespace {

std::string write_temp(const std::string& content) {
    static int counter = 0;
    auto path = std::filesystem::temp_directory_path() /
                ("lperc_test_" + std::to_string(++counter) + ".csv");
    std::ofstream out(path);
    out << content;
    return path.string();
}

CsvSchema wbcd_schema() {
    CsvSchema s;
    s.label_column = 10;
    s.positive_token = "4";
    s.drop_columns = {0};
    return s;
}

CsvSchema hsd_schema() {
    CsvSchema s;
    s.label_column = 3;
    s.positive_token = "1";
    return s;
}

} // namespace

TEST_CASE("load_csv: breast cancer file") {
    const Dataset ds =
        load_csv(std::string(LPERC_DATA_DIR) + "/breast-cancer-wisconsin.data",
                 wbcd_schema(), "wbcd");
    CHECK(ds.rows() == 699);
    CHECK(ds.cols() == 9);

    std::size_t rows_with_missing = 0;
    for (const auto& row : ds.missing) {
        bool any = false;
        for (bool m : row) any = any || m;
        if (any) ++rows_with_missing;
    }
    CHECK(rows_with_missing == 16);

    std::size_t positives = 0;
    for (Label y : ds.labels)
        if (y == Label::Positive) ++positives;
    CHECK(positives == 241); // malignant
}

TEST_CASE("load_csv: survival file") {
    const Dataset ds = load_csv(std::string(LPERC_DATA_DIR) + "/haberman.data",
                                hsd_schema(), "hsd");
    CHECK(ds.rows() == 306);
    CHECK(ds.cols() == 3);
    CHECK_FALSE(ds.has_missing());
}

TEST_CASE("load_csv: single row") {
    CsvSchema s;
    s.label_column = 2;
    s.positive_token = "1";
    const Dataset ds = load_csv(write_temp("5,1,1\n"), s);
    CHECK(ds.rows() == 1);
    CHECK(ds.cols() == 2);
    CHECK(ds.labels[0] == Label::Positive);
    CHECK_FALSE(ds.has_missing());
    CHECK(ds.features[0][0] == 5.0);
}

TEST_CASE("load_csv: error paths") {
    CsvSchema s;
    s.label_column = 2;
    s.positive_token = "1";

    SUBCASE("ragged row names the line") {
        try {
            load_csv(write_temp("1,2,1\n3,4\n"), s);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    SUBCASE("label column out of range") {
        CsvSchema bad = s;
        bad.label_column = 9;
        CHECK_THROWS_AS(load_csv(write_temp("1,2,1\n"), bad), SchemaError);
    }
    SUBCASE("no data rows") {
        CHECK_THROWS_AS(load_csv(write_temp(""), s), DataError);
    }
    SUBCASE("non-numeric feature") {
        CHECK_THROWS_AS(load_csv(write_temp("1,abc,1\n"), s), ParseError);
    }
}

TEST_CASE("impute: column mean from training rows") {
    CsvSchema s;
    s.label_column = 1;
    s.positive_token = "1";
    const Dataset ds = load_csv(write_temp("1,1\n?,0\n3,1\n"), s);

    SUBCASE("mean of unmasked values") {
        const Dataset out = impute(ds, {0, 1, 2});
        CHECK(out.features[1][0] == doctest::Approx(2.0));
        CHECK(out.missing[1][0]); // mask kept for provenance
    }
    SUBCASE("identity on fully observed data") {
        const Dataset clean = load_csv(write_temp("1,1\n2,0\n"), s);
        const Dataset out = impute(clean, {0, 1});
        CHECK(out.features == clean.features);
    }
    SUBCASE("singleton training row") {
        const Dataset two = load_csv(write_temp("?,1\n4,0\n"), s);
        const Dataset out = impute(two, {1});
        CHECK(out.features[0][0] == doctest::Approx(4.0));
    }
    SUBCASE("entirely masked column on training rows") {
        const Dataset bad = load_csv(write_temp("?,1\n?,0\n3,1\n"), s);
        CHECK_THROWS_AS(impute(bad, {0, 1}), DataError);
    }
    SUBCASE("uses only training-row statistics") {
        Dataset modified = ds;
        modified.features[2][0] = 1000.0; // not a training row below
        const Dataset a = impute(ds, {0, 1});
        const Dataset b = impute(modified, {0, 1});
        CHECK(a.features[1][0] == b.features[1][0]);
    }
}

TEST_CASE("stratified_folds: examples") {
    SUBCASE("306 instances over 10 folds") {
        const Dataset ds = load_csv(
            std::string(LPERC_DATA_DIR) + "/haberman.data", hsd_schema());
        const FoldAssignment fa = stratified_folds(ds, 10, 42);
        std::vector<int> sizes(10, 0);
        for (int f : fa.fold_of) sizes[f]++;
        int of31 = 0, of30 = 0;
        for (int c : sizes) {
            if (c == 31) ++of31;
            if (c == 30) ++of30;
        }
        CHECK(of31 == 6);
        CHECK(of30 == 4);
    }
    SUBCASE("perfect stratification at 5 folds of 10") {
        Dataset ds;
        ds.name = "tiny";
        for (int i = 0; i < 10; ++i) {
            ds.features.push_back({double(i)});
            ds.missing.push_back({false});
            ds.labels.push_back(i < 5 ? Label::Positive : Label::Negative);
        }
        const FoldAssignment fa = stratified_folds(ds, 5, 7);
        std::vector<int> pos(5, 0), neg(5, 0);
        for (int i = 0; i < 10; ++i)
            (ds.labels[i] == Label::Positive ? pos : neg)[fa.fold_of[i]]++;
        for (int f = 0; f < 5; ++f) {
            CHECK(pos[f] == 1);
            CHECK(neg[f] == 1);
        }
    }
    SUBCASE("deterministic for a fixed seed") {
        const Dataset ds = load_csv(
            std::string(LPERC_DATA_DIR) + "/haberman.data", hsd_schema());
        CHECK(stratified_folds(ds, 10, 3).fold_of ==
              stratified_folds(ds, 10, 3).fold_of);
    }
    SUBCASE("k > n is a configuration error") {
        Dataset ds;
        ds.features = {{1.0}, {2.0}};
        ds.missing = {{false}, {false}};
        ds.labels = {Label::Positive, Label::Negative};
        CHECK_THROWS_AS(stratified_folds(ds, 3, 0), ConfigError);
    }
}

TEST_CASE("stratified_folds: invariants over random datasets") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        Dataset ds;
        const int n = 2 + int(rng() % 60);
        for (int i = 0; i < n; ++i) {
            ds.features.push_back({double(rng() % 10)});
            ds.missing.push_back({false});
            ds.labels.push_back(rng() % 2 ? Label::Positive : Label::Negative);
        }
        const int k = 2 + int(rng() % std::min(n - 1, 9));
        const FoldAssignment fa = stratified_folds(ds, k, rng());

        std::vector<int> total(k, 0), pos(k, 0), neg(k, 0);
        for (int i = 0; i < n; ++i) {
            REQUIRE(fa.fold_of[i] >= 0);
            REQUIRE(fa.fold_of[i] < k);
            total[fa.fold_of[i]]++;
            (ds.labels[i] == Label::Positive ? pos : neg)[fa.fold_of[i]]++;
        }
        auto spread = [](const std::vector<int>& v) {
            int lo = v[0], hi = v[0];
            for (int c : v) {
                lo = std::min(lo, c);
                hi = std::max(hi, c);
            }
            return hi - lo;
        };
        CHECK(spread(total) <= 1);
        CHECK(spread(pos) <= 1);
        CHECK(spread(neg) <= 1);
    }
}

TEST_CASE("csv round-trip preserves the dataset") {
    const Dataset ds =
        load_csv(std::string(LPERC_DATA_DIR) + "/breast-cancer-wisconsin.data",
                 wbcd_schema(), "wbcd");
    const std::string path = write_temp("");
    write_csv(ds, path, "4", "2");

    CsvSchema s;
    s.label_column = 9;
    s.positive_token = "4";
    const Dataset back = load_csv(path, s, "wbcd");
    CHECK(back.features == ds.features);
    CHECK(back.labels == ds.labels);
    CHECK(back.missing == ds.missing);
}
