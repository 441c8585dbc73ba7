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

// Command-line front end over the bcnn C API. Exit codes: 0 success,
// 2 usage/config error, 3 missing file or shape error, 4 incompatible
// model/dataset pair, 1 anything else.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "bcnn/bcnn.h"

namespace {

namespace fs = std::filesystem;

int exit_code_for(bcnn_status status) {
    switch (status) {
        case BCNN_OK:
            return 0;
        case BCNN_ERR_INVALID_ARGUMENT:
        case BCNN_ERR_CONFIG:
            return 2;
        case BCNN_ERR_IO:
            return 3;
        case BCNN_ERR_INCOMPATIBLE:
            return 4;
        case BCNN_ERR_INTERNAL:
            break;
    }
    return 1;
}

[[nodiscard]] int fail(bcnn_status status) {
    std::fprintf(stderr, "error (%s): %s\n", bcnn_status_name(status), bcnn_last_error());
    return exit_code_for(status);
}

int usage_error(const std::string& msg) {
    std::fprintf(stderr, "error: %s\n", msg.c_str());
    return 2;
}

// --preset NAME resolves NAME.cfg against $BCNN_PRESET_DIR, ./presets and the
// presets directory next to (or two levels above) the executable; an explicit
// path is used as-is.
std::string resolve_preset(const std::string& name) {
    if (name.find('/') != std::string::npos || fs::exists(name)) {
        return name;
    }
    const std::string file = name + ".cfg";
    if (const char* dir = std::getenv("BCNN_PRESET_DIR")) {
        if (fs::exists(fs::path(dir) / file)) {
            return (fs::path(dir) / file).string();
        }
    }
    if (fs::exists(fs::path("presets") / file)) {
        return (fs::path("presets") / file).string();
    }
    std::error_code ec;
    fs::path exe = fs::canonical("/proc/self/exe", ec);
    if (!ec) {
        for (const char* up : {"..", "../.."}) {
            fs::path candidate = exe.parent_path() / up / "presets" / file;
            if (fs::exists(candidate)) {
                return candidate.string();
            }
        }
    }
    return file;  // let the open fail with a clear message
}

struct ConfigHandle {
    bcnn_config* ptr = nullptr;
    ~ConfigHandle() { bcnn_config_close(ptr); }
};

struct DatasetHandle {
    bcnn_dataset* ptr = nullptr;
    ~DatasetHandle() { bcnn_dataset_close(ptr); }
};

struct ModelHandle {
    bcnn_model* ptr = nullptr;
    ~ModelHandle() { bcnn_model_close(ptr); }
};

int open_run_config(const std::string& config_path, const std::string& preset,
                    const std::string& seed_override, ConfigHandle& cfg, int& rc) {
    std::string path = config_path;
    if (path.empty() && !preset.empty()) {
        path = resolve_preset(preset);
    }
    if (path.empty()) {
        rc = usage_error("either --config or --preset is required");
        return 1;
    }
    if (bcnn_status st = bcnn_config_open(path.c_str(), &cfg.ptr)) {
        rc = fail(st);
        return 1;
    }
    if (!seed_override.empty()) {
        if (bcnn_status st = bcnn_config_set(cfg.ptr, "train.seed", seed_override.c_str())) {
            rc = fail(st);
            return 1;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"branching-convolution entanglement classifier"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(bcnn_version()));

    // generate
    auto* gen = app.add_subcommand("generate", "generate a labeled state dataset");
    std::string gen_family, gen_out;
    uint64_t gen_size = 0;
    std::string gen_seed;
    bool gen_balance = false;
    gen->add_option("--family", gen_family, "werner | g1werner | g2werner | general")->required();
    gen->add_option("--size", gen_size, "number of records")->required();
    gen->add_option("--seed", gen_seed, "generation seed (required)")->required();
    gen->add_flag("--balance", gen_balance, "enforce a 1:1 label split (general only)");
    gen->add_option("--out", gen_out, "output CSV path")->required();

    // train
    auto* tr = app.add_subcommand("train", "train a model from a config file");
    std::string tr_config, tr_preset, tr_out = ".", tr_seed;
    tr->add_option("--config", tr_config, "config file path");
    tr->add_option("--preset", tr_preset, "named preset (see presets/)");
    tr->add_option("--out", tr_out, "output directory");
    tr->add_option("--seed", tr_seed, "override [train] seed");

    // eval
    auto* ev = app.add_subcommand("eval", "evaluate a model file on a dataset");
    std::string ev_model, ev_data;
    ev->add_option("--model", ev_model, "model file")->required();
    ev->add_option("--data", ev_data, "dataset CSV")->required();

    // report
    auto* rp = app.add_subcommand("report", "emit CSV reports from trained artifacts");
    std::string rp_kind, rp_model, rp_data, rp_config, rp_preset, rp_seed, rp_out = ".";
    std::string rp_axis = "lambda_min";
    uint64_t rp_bins = 50;
    int rp_decimals = 2;
    rp->add_option("--kind", rp_kind, "operators | errors | round-retest | curve-point")
        ->required();
    rp->add_option("--model", rp_model, "model file");
    rp->add_option("--data", rp_data, "dataset CSV");
    rp->add_option("--config", rp_config, "config file (curve-point)");
    rp->add_option("--preset", rp_preset, "named preset (curve-point)");
    rp->add_option("--seed", rp_seed, "override [train] seed (curve-point)");
    rp->add_option("--axis", rp_axis, "errors axis: p | theta | lambda_min");
    rp->add_option("--bins", rp_bins, "errors histogram bins");
    rp->add_option("--decimals", rp_decimals, "round-retest decimal places");
    rp->add_option("--out", rp_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help / --version
        }
        app.exit(e);
        return 2;
    }

    if (gen->parsed()) {
        if (gen_size == 0) {
            return usage_error("--size must be >= 1");
        }
        uint64_t seed = std::strtoull(gen_seed.c_str(), nullptr, 10);
        DatasetHandle ds;
        if (bcnn_status st =
                bcnn_dataset_generate(gen_family.c_str(), gen_size, seed, gen_balance, &ds.ptr)) {
            return fail(st);
        }
        if (bcnn_status st = bcnn_dataset_save(ds.ptr, gen_out.c_str())) {
            return fail(st);
        }
        const uint64_t total = bcnn_dataset_size(ds.ptr);
        const uint64_t ent = bcnn_dataset_entangled(ds.ptr);
        std::printf("generated %llu %s states: %llu entangled / %llu separable -> %s\n",
                    static_cast<unsigned long long>(total), bcnn_dataset_family(ds.ptr),
                    static_cast<unsigned long long>(ent),
                    static_cast<unsigned long long>(total - ent), gen_out.c_str());
        return 0;
    }

    if (tr->parsed()) {
        ConfigHandle cfg;
        int rc = 0;
        if (open_run_config(tr_config, tr_preset, tr_seed, cfg, rc)) {
            return rc;
        }
        double acc = 0.0;
        if (bcnn_status st = bcnn_train_run(cfg.ptr, tr_out.c_str(), &acc)) {
            return fail(st);
        }
        std::printf("model written to %s/model.txt\n", tr_out.c_str());
        std::printf("test accuracy: %.4f\n", acc);
        return 0;
    }

    if (ev->parsed()) {
        ModelHandle model;
        if (bcnn_status st = bcnn_model_open(ev_model.c_str(), &model.ptr)) {
            return fail(st);
        }
        DatasetHandle data;
        if (bcnn_status st = bcnn_dataset_open(ev_data.c_str(), &data.ptr)) {
            return fail(st);
        }
        double acc = 0.0;
        if (bcnn_status st = bcnn_model_evaluate(model.ptr, data.ptr, &acc)) {
            return fail(st);
        }
        std::printf("accuracy: %.4f (%llu records, family %s)\n", acc,
                    static_cast<unsigned long long>(bcnn_dataset_size(data.ptr)),
                    bcnn_dataset_family(data.ptr));
        return 0;
    }

    // report
    if (rp_kind != "curve-point" && rp_kind != "operators" && rp_kind != "errors" &&
        rp_kind != "round-retest") {
        return usage_error("unknown report kind: " + rp_kind);
    }
    std::error_code ec;
    fs::create_directories(rp_out, ec);

    if (rp_kind == "curve-point") {
        ConfigHandle cfg;
        int rc = 0;
        if (open_run_config(rp_config, rp_preset, rp_seed, cfg, rc)) {
            return rc;
        }
        const std::string out_csv = (fs::path(rp_out) / "curve.csv").string();
        double mean = 0.0, stddev = 0.0;
        if (bcnn_status st = bcnn_report_curve_point(cfg.ptr, out_csv.c_str(), &mean, &stddev)) {
            return fail(st);
        }
        std::printf("curve point: mean accuracy %.4f (std %.4f) -> %s\n", mean, stddev,
                    out_csv.c_str());
        return 0;
    }

    if (rp_model.empty()) {
        return usage_error("--model is required for this report kind");
    }
    ModelHandle model;
    if (bcnn_status st = bcnn_model_open(rp_model.c_str(), &model.ptr)) {
        return fail(st);
    }

    if (rp_kind == "operators") {
        const std::string out_csv = (fs::path(rp_out) / "operators.csv").string();
        if (bcnn_status st = bcnn_report_operators(model.ptr, out_csv.c_str())) {
            return fail(st);
        }
        std::printf("operator table -> %s\n", out_csv.c_str());
        return 0;
    }

    if (rp_data.empty()) {
        return usage_error("--data is required for this report kind");
    }
    DatasetHandle data;
    if (bcnn_status st = bcnn_dataset_open(rp_data.c_str(), &data.ptr)) {
        return fail(st);
    }

    if (rp_kind == "errors") {
        const std::string out_csv = (fs::path(rp_out) / "error_hist.csv").string();
        uint64_t errors = 0;
        if (bcnn_status st = bcnn_report_errors(model.ptr, data.ptr, rp_axis.c_str(), rp_bins,
                                                out_csv.c_str(), &errors)) {
            return fail(st);
        }
        std::printf("%llu misclassified records binned along %s -> %s\n",
                    static_cast<unsigned long long>(errors), rp_axis.c_str(), out_csv.c_str());
        return 0;
    }

    if (rp_kind == "round-retest") {
        const std::string out_csv = (fs::path(rp_out) / "round_retest.csv").string();
        double orig = 0.0, rounded = 0.0;
        if (bcnn_status st = bcnn_report_round_retest(model.ptr, data.ptr, rp_decimals,
                                                      out_csv.c_str(), &orig, &rounded)) {
            return fail(st);
        }
        std::printf("original accuracy: %.4f\n", orig);
        std::printf("rounded accuracy (%d decimals): %.4f (drop %.4f)\n", rp_decimals, rounded,
                    orig - rounded);
        return 0;
    }

    return usage_error("unknown report kind: " + rp_kind);
}
