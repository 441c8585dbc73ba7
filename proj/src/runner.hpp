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

#ifndef BCNN_RUNNER_HPP
#define BCNN_RUNNER_HPP

#include <string>

#include "analysis.hpp"
#include "config.hpp"
#include "model_io.hpp"
#include "states.hpp"
#include "train.hpp"

namespace bcnn {

struct GenerateSummary {
    size_t total = 0;
    size_t entangled = 0;
    size_t separable = 0;
};

// Generates a dataset and writes it as CSV.
GenerateSummary run_generate(StateFamily family, size_t size, uint64_t seed, bool balance,
                             const std::string& out_path);

struct TrainArtifacts {
    double test_accuracy = 0.0;
    std::string model_path;
    std::string history_path;
    std::string manifest_path;
};

// Loads the datasets named by the config, trains, evaluates on the test
// split, and writes model.txt, history.csv and manifest.txt into out_dir.
// Everything except the wall-clock column of history.csv is a pure function
// of (config, input files).
TrainArtifacts run_train(const KvConfig& kv, const std::string& out_dir,
                         SavedModel* out_model = nullptr);

// Throws IncompatibleError unless the model was trained on the dataset's
// family.
void check_compatible(const SavedModel& model, const Dataset& data);

EvalResult run_eval(const SavedModel& model, const Dataset& data);

void report_operators(const SavedModel& model, const std::string& out_csv);
Histogram report_error_histogram(const SavedModel& model, const Dataset& data, ErrorAxis axis,
                                 size_t bins, const std::string& out_csv);
RoundRetest report_round_retest(const SavedModel& model, const Dataset& data, int decimals,
                                const std::string& out_csv);
// Trains `report.repeats` fresh models for the configured m and appends one
// accuracy-curve row.
CurvePoint report_curve_point(const KvConfig& kv, const std::string& out_csv);

}  // namespace bcnn

#endif
