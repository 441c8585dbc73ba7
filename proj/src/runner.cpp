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

#include "runner.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "errors.hpp"
#include "text_format.hpp"

namespace bcnn {

namespace fs = std::filesystem;

GenerateSummary run_generate(StateFamily family, size_t size, uint64_t seed, bool balance,
                             const std::string& out_path) {
    Dataset ds = sample_dataset(family, size, seed, balance);
    write_dataset_csv(ds, out_path);
    GenerateSummary s;
    s.total = ds.size();
    s.entangled = ds.entangled_count();
    s.separable = s.total - s.entangled;
    return s;
}

namespace {

Dataset load_dataset_checked(const std::string& path, const char* what) {
    if (!fs::exists(path)) {
        throw IoError(std::string(what) + " dataset not found: " + path);
    }
    return read_dataset_csv(path);
}

void write_history_csv(const TrainHistory& history, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open history file for writing: " + path);
    }
    out << "epoch,loss,accuracy,seconds\n";
    for (size_t e = 0; e < history.size(); ++e) {
        char sec[32];
        std::snprintf(sec, sizeof(sec), "%.3f", history[e].seconds);
        out << (e + 1) << ',' << format_g17(history[e].loss) << ','
            << format_g17(history[e].accuracy) << ',' << sec << '\n';
    }
}

void write_manifest(const KvConfig& kv, const RunConfig& rc, const Dataset& train_data,
                    const Dataset& test_data, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open manifest for writing: " + path);
    }
    out << "bcnn-run-manifest v1\n";
    out << "arch " << rc.arch.describe() << '\n';
    out << "dataset train path=" << rc.train_path << " family=" << family_name(train_data.family)
        << " records=" << train_data.size() << " entangled=" << train_data.entangled_count()
        << '\n';
    out << "dataset test path=" << rc.test_path << " family=" << family_name(test_data.family)
        << " records=" << test_data.size() << " entangled=" << test_data.entangled_count() << '\n';
    for (const auto& [key, value] : kv.entries()) {
        out << "config " << key << " = " << value << '\n';
    }
}

}  // namespace

TrainArtifacts run_train(const KvConfig& kv, const std::string& out_dir, SavedModel* out_model) {
    const RunConfig rc = resolve_run_config(kv);
    Dataset train_data = load_dataset_checked(rc.train_path, "train");
    Dataset test_data = load_dataset_checked(rc.test_path, "test");
    if (train_data.family != test_data.family) {
        throw IncompatibleError("train/test datasets belong to different families");
    }

    auto [params, history] = train(train_data, rc.arch, rc.train);

    fs::create_directories(out_dir);
    TrainArtifacts art;
    art.model_path = (fs::path(out_dir) / "model.txt").string();
    art.history_path = (fs::path(out_dir) / "history.csv").string();
    art.manifest_path = (fs::path(out_dir) / "manifest.txt").string();

    SavedModel model{std::move(params), train_data.family};
    write_model_file(model, art.model_path);
    write_history_csv(history, art.history_path);
    write_manifest(kv, rc, train_data, test_data, art.manifest_path);

    art.test_accuracy = evaluate(model.params, test_data).accuracy;
    if (out_model) {
        *out_model = std::move(model);
    }
    return art;
}

void check_compatible(const SavedModel& model, const Dataset& data) {
    if (model.family != data.family) {
        throw IncompatibleError(std::string("model was trained on family '") +
                                family_name(model.family) + "' but the dataset holds '" +
                                family_name(data.family) + "'");
    }
}

EvalResult run_eval(const SavedModel& model, const Dataset& data) {
    check_compatible(model, data);
    return evaluate(model.params, data);
}

void report_operators(const SavedModel& model, const std::string& out_csv) {
    write_operators_csv(extract_operators(model.params), out_csv);
}

Histogram report_error_histogram(const SavedModel& model, const Dataset& data, ErrorAxis axis,
                                 size_t bins, const std::string& out_csv) {
    check_compatible(model, data);
    EvalResult ev = evaluate(model.params, data);
    Histogram hist = error_distribution(ev.errors, data, axis, bins);
    write_histogram_csv(hist, out_csv);
    return hist;
}

RoundRetest report_round_retest(const SavedModel& model, const Dataset& data, int decimals,
                                const std::string& out_csv) {
    check_compatible(model, data);
    RoundRetest rr = round_and_retest(model.params, data, decimals);
    if (!out_csv.empty()) {
        write_round_retest_csv(rr, decimals, out_csv);
    }
    return rr;
}

CurvePoint report_curve_point(const KvConfig& kv, const std::string& out_csv) {
    const RunConfig rc = resolve_run_config(kv);
    Dataset train_data = load_dataset_checked(rc.train_path, "train");
    Dataset test_data = load_dataset_checked(rc.test_path, "test");
    std::vector<size_t> hidden(rc.arch.fc_widths.begin() + 1, rc.arch.fc_widths.end() - 1);
    AccuracyCurve curve =
        accuracy_curve(train_data, test_data, rc.arch.n1, rc.arch.n2, hidden,
                       rc.arch.fix_identity, {rc.arch.m}, rc.repeats, rc.train.seed, &rc.train);
    if (!out_csv.empty()) {
        write_curve_csv(curve, out_csv);
    }
    return curve.points.front();
}

}  // namespace bcnn
