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

#ifndef BCNN_ANALYSIS_HPP
#define BCNN_ANALYSIS_HPP

#include <array>
#include <string>
#include <vector>

#include "states.hpp"
#include "train.hpp"

namespace bcnn {

struct CurvePoint {
    size_t operator_count = 0;  // path count m
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0;
    std::vector<uint64_t> seeds;
    std::vector<double> accuracies;
};

struct AccuracyCurve {
    StateFamily family = StateFamily::General;
    std::string arch_desc;
    std::vector<CurvePoint> points;
};

// Trains `repeats` fresh models per m with seeds derived from (base_seed, m,
// repeat) and reports mean and standard deviation of the test accuracy. Each
// m uses its reference Adam row unless `override_cfg` is supplied.
AccuracyCurve accuracy_curve(const Dataset& train_data, const Dataset& test_data, size_t n1,
                             size_t n2, const std::vector<size_t>& hidden, bool fix_identity,
                             const std::vector<size_t>& m_values, size_t repeats,
                             uint64_t base_seed, const TrainConfig* override_cfg = nullptr);

enum class ErrorAxis { P, Theta, LambdaMin };

ErrorAxis error_axis_from_name(std::string_view name);
const char* error_axis_name(ErrorAxis axis);

struct Histogram {
    ErrorAxis axis = ErrorAxis::LambdaMin;
    std::vector<double> edges;    // bins+1 edges, uniform over the observed range
    std::vector<size_t> errors;   // misclassified per bin
    std::vector<size_t> totals;   // all test samples per bin
};

// Bins misclassified records against the full test split along one axis.
// The axis must be carried by the family (p/theta for the parametric
// families, lambda_min always).
Histogram error_distribution(const std::vector<ErrorRecord>& errors, const Dataset& test_data,
                             ErrorAxis axis, size_t bins = 50);

// One row per kernel combination that is not the fixed identity pair,
// columns (X1,Y1,Z1,I1,X2,Y2,Z2,I2): subsystem (1) then subsystem (2).
std::vector<std::array<double, 8>> extract_operators(const ModelParams& params);

// Rebuilds a model from exported operator rows (identity head reuse); used to
// verify the export round-trips.
ModelParams rebuild_from_operators(const ModelParams& reference,
                                   const std::vector<std::array<double, 8>>& rows);

struct RoundRetest {
    double original_accuracy = 0.0;
    double rounded_accuracy = 0.0;
};

// Rounds every Pauli coefficient to `decimals` places (FC head untouched) and
// re-evaluates.
RoundRetest round_and_retest(const ModelParams& params, const Dataset& test_data, int decimals);
ModelParams round_kernels(const ModelParams& params, int decimals);

// CSV emitters for the artifacts above.
void write_curve_csv(const AccuracyCurve& curve, const std::string& path);
void write_histogram_csv(const Histogram& hist, const std::string& path);
void write_operators_csv(const std::vector<std::array<double, 8>>& rows, const std::string& path);
void write_round_retest_csv(const RoundRetest& rr, int decimals, const std::string& path);

}  // namespace bcnn

#endif
