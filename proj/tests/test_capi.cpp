// Copyright 2026 the bcnn developers
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

// Exercises the shared library strictly through the extern-C surface.

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "bcnn/bcnn.h"

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("bcnn_capi_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(reinterpret_cast<uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const char* name) const { return (path / name).string(); }
};

void write_all(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out);
    out << text;
}

std::string train_config_text(const TempDir& tmp) {
    return "[data]\ntrain=" + tmp.file("train.csv") + "\ntest=" + tmp.file("test.csv") +
           "\n[arch]\nm=1\nn1=1\nn2=1\nhidden=16\n"
           "[train]\nlr=0.001\nbeta1=0.9\nbeta2=0.99\nbatch=10\nepochs=3\nseed=11\n"
           "[report]\nrepeats=2\n";
}

// Maximally mixed two-qubit state, re/im interleaved.
void mixed_state(double rho[32]) {
    std::memset(rho, 0, 32 * sizeof(double));
    for (int k = 0; k < 4; ++k) {
        rho[2 * (k * 4 + k)] = 0.25;
    }
}

}  // namespace

TEST_CASE("version and status names", "[capi]") {
    CHECK(std::string(bcnn_version()) == "0.1.0");
    CHECK(std::string(bcnn_status_name(BCNN_OK)) == "ok");
    CHECK(std::string(bcnn_status_name(BCNN_ERR_CONFIG)) == "config error");
}

TEST_CASE("dataset generate/save/open through the C API", "[capi]") {
    TempDir tmp;
    bcnn_dataset* ds = nullptr;
    REQUIRE(bcnn_dataset_generate("general", 120, 5, 1, &ds) == BCNN_OK);
    CHECK(bcnn_dataset_size(ds) == 120);
    CHECK(bcnn_dataset_entangled(ds) == 60);
    CHECK(std::string(bcnn_dataset_family(ds)) == "general");

    const std::string path = tmp.file("ds.csv");
    REQUIRE(bcnn_dataset_save(ds, path.c_str()) == BCNN_OK);
    bcnn_dataset* back = nullptr;
    REQUIRE(bcnn_dataset_open(path.c_str(), &back) == BCNN_OK);
    CHECK(bcnn_dataset_size(back) == 120);
    bcnn_dataset_close(back);
    bcnn_dataset_close(ds);

    CHECK(bcnn_dataset_generate("klingon", 10, 1, 0, &ds) == BCNN_ERR_INVALID_ARGUMENT);
    CHECK(std::string(bcnn_last_error()).find("klingon") != std::string::npos);
    CHECK(bcnn_dataset_open(tmp.file("missing.csv").c_str(), &ds) == BCNN_ERR_IO);
    CHECK(bcnn_dataset_generate(nullptr, 10, 1, 0, &ds) == BCNN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("PPT labeling through the C API", "[capi]") {
    double rho[32];
    mixed_state(rho);
    double lmin = 0.0;
    int entangled = -1;
    REQUIRE(bcnn_label_ppt(rho, &lmin, &entangled) == BCNN_OK);
    CHECK(lmin == Catch::Approx(0.25));
    CHECK(entangled == 0);

    // Bell state: lambda_min = -1/2.
    std::memset(rho, 0, sizeof(rho));
    rho[2 * 0] = 0.5;
    rho[2 * 3] = 0.5;
    rho[2 * 12] = 0.5;
    rho[2 * 15] = 0.5;
    REQUIRE(bcnn_label_ppt(rho, &lmin, &entangled) == BCNN_OK);
    CHECK(lmin == Catch::Approx(-0.5));
    CHECK(entangled == 1);

    // Not a density matrix.
    std::memset(rho, 0, sizeof(rho));
    rho[0] = 5.0;
    CHECK(bcnn_label_ppt(rho, &lmin, &entangled) == BCNN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("config, training and model round trip through the C API", "[capi]") {
    TempDir tmp;
    bcnn_dataset* train_ds = nullptr;
    bcnn_dataset* test_ds = nullptr;
    REQUIRE(bcnn_dataset_generate("werner", 400, 21, 0, &train_ds) == BCNN_OK);
    REQUIRE(bcnn_dataset_generate("werner", 150, 22, 0, &test_ds) == BCNN_OK);
    REQUIRE(bcnn_dataset_save(train_ds, tmp.file("train.csv").c_str()) == BCNN_OK);
    REQUIRE(bcnn_dataset_save(test_ds, tmp.file("test.csv").c_str()) == BCNN_OK);

    write_all(tmp.file("run.cfg"), train_config_text(tmp));
    bcnn_config* cfg = nullptr;
    REQUIRE(bcnn_config_open(tmp.file("run.cfg").c_str(), &cfg) == BCNN_OK);

    double acc = -1.0;
    REQUIRE(bcnn_train_run(cfg, tmp.file("run").c_str(), &acc) == BCNN_OK);
    CHECK(acc >= 0.0);
    CHECK(acc <= 1.0);
    CHECK(fs::exists(tmp.file("run/model.txt")));
    CHECK(fs::exists(tmp.file("run/history.csv")));
    CHECK(fs::exists(tmp.file("run/manifest.txt")));

    bcnn_model* model = nullptr;
    REQUIRE(bcnn_model_open(tmp.file("run/model.txt").c_str(), &model) == BCNN_OK);
    CHECK(std::string(bcnn_model_family(model)) == "werner");

    double eval_acc = -1.0;
    REQUIRE(bcnn_model_evaluate(model, test_ds, &eval_acc) == BCNN_OK);
    CHECK(eval_acc == Catch::Approx(acc));

    double rho[32];
    mixed_state(rho);
    double prob = -1.0;
    REQUIRE(bcnn_model_predict(model, rho, &prob) == BCNN_OK);
    CHECK(prob > 0.0);
    CHECK(prob < 1.0);

    // Reports.
    REQUIRE(bcnn_report_operators(model, tmp.file("ops.csv").c_str()) == BCNN_OK);
    CHECK(fs::exists(tmp.file("ops.csv")));
    uint64_t nerr = 999;
    REQUIRE(bcnn_report_errors(model, test_ds, "p", 25, tmp.file("hist.csv").c_str(), &nerr) ==
            BCNN_OK);
    CHECK(fs::exists(tmp.file("hist.csv")));
    CHECK(bcnn_report_errors(model, test_ds, "sideways", 25, tmp.file("h2.csv").c_str(),
                             nullptr) == BCNN_ERR_INVALID_ARGUMENT);

    double orig = -1.0, rounded = -1.0;
    REQUIRE(bcnn_report_round_retest(model, test_ds, 2, tmp.file("rr.csv").c_str(), &orig,
                                     &rounded) == BCNN_OK);
    CHECK(orig == Catch::Approx(acc));
    CHECK(rounded >= 0.0);

    double mean = -1.0, stddev = -1.0;
    REQUIRE(bcnn_report_curve_point(cfg, tmp.file("curve.csv").c_str(), &mean, &stddev) ==
            BCNN_OK);
    CHECK(mean >= 0.0);
    CHECK(mean <= 1.0);
    CHECK(stddev >= 0.0);

    // Family mismatch surfaces as the incompatibility status.
    bcnn_dataset* general_ds = nullptr;
    REQUIRE(bcnn_dataset_generate("general", 60, 23, 0, &general_ds) == BCNN_OK);
    CHECK(bcnn_model_evaluate(model, general_ds, &eval_acc) == BCNN_ERR_INCOMPATIBLE);
    CHECK(std::string(bcnn_last_error()).find("family") != std::string::npos);

    bcnn_dataset_close(general_ds);
    bcnn_model_close(model);
    bcnn_config_close(cfg);
    bcnn_dataset_close(train_ds);
    bcnn_dataset_close(test_ds);
}

TEST_CASE("config errors surface with status 2 semantics", "[capi]") {
    TempDir tmp;
    bcnn_config* cfg = nullptr;
    CHECK(bcnn_config_open(tmp.file("none.cfg").c_str(), &cfg) == BCNN_ERR_CONFIG);

    write_all(tmp.file("short.cfg"), "[train]\nlr = 0.001\n");
    REQUIRE(bcnn_config_open(tmp.file("short.cfg").c_str(), &cfg) == BCNN_OK);
    double acc = 0.0;
    CHECK(bcnn_train_run(cfg, tmp.file("out").c_str(), &acc) == BCNN_ERR_CONFIG);
    CHECK(std::string(bcnn_last_error()).find("data.train") != std::string::npos);
    bcnn_config_close(cfg);

    CHECK(bcnn_config_open(nullptr, &cfg) == BCNN_ERR_INVALID_ARGUMENT);
    CHECK(bcnn_train_run(nullptr, "x", &acc) == BCNN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("model open failures map to IO status", "[capi]") {
    TempDir tmp;
    bcnn_model* model = nullptr;
    CHECK(bcnn_model_open(tmp.file("none.txt").c_str(), &model) == BCNN_ERR_IO);
    write_all(tmp.file("junk.txt"), "hello\n");
    CHECK(bcnn_model_open(tmp.file("junk.txt").c_str(), &model) == BCNN_ERR_IO);
}
