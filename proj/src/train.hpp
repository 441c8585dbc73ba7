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

#ifndef BCNN_TRAIN_HPP
#define BCNN_TRAIN_HPP

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "model.hpp"
#include "states.hpp"

namespace bcnn {

struct TrainConfig {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.99;
    double epsilon = 1e-8;
    size_t batch_size = 10;
    size_t epochs = 10;
    uint64_t seed = 0;

    void validate() const;
};

struct EpochStats {
    double loss = 0.0;      // mean per-sample loss over the epoch
    double accuracy = 0.0;  // running train accuracy over the epoch
    double seconds = 0.0;
};

using TrainHistory = std::vector<EpochStats>;

// Flat views over the trainable scalars (fixed-identity kernels excluded):
// per path, layer-1 then layer-2 kernel coefficients in (X,Y,Z,I) order,
// then FC weights row-major interleaved with their biases.
Eigen::VectorXd pack_trainable(const ModelParams& params);
void unpack_trainable(const Eigen::VectorXd& flat, ModelParams& params);
Eigen::VectorXd pack_gradients(const Gradients& grads, const ModelParams& params);

struct AdamMoments {
    Eigen::VectorXd m;
    Eigen::VectorXd v;

    explicit AdamMoments(Eigen::Index n)
        : m(Eigen::VectorXd::Zero(n)), v(Eigen::VectorXd::Zero(n)) {}
};

// Standard Adam update with bias-corrected moments; t is the 1-based step.
void adam_step(Eigen::VectorXd& params, const Eigen::VectorXd& grads, AdamMoments& moments,
               size_t t, const TrainConfig& cfg);

// Minibatch training with a per-epoch seeded reshuffle (last partial batch
// kept) and mean-reduced batch loss. Fully determined by (dataset, arch, cfg).
std::pair<ModelParams, TrainHistory> train(const Dataset& data, const Architecture& arch,
                                           const TrainConfig& cfg);

struct ErrorRecord {
    size_t index = 0;
    StateFamily family = StateFamily::General;
    std::optional<double> p;
    std::optional<double> theta;
    std::optional<double> phi;
    double lambda_min = 0.0;
    bool entangled = false;  // true label
    double prob = 0.0;       // model output
};

struct EvalResult {
    double accuracy = 0.0;
    std::vector<ErrorRecord> errors;
};

// Decision threshold 0.5 on the sigmoid output. Misclassified records keep
// their generation parameters and lambda_min for the distribution reports.
EvalResult evaluate(const ModelParams& params, const Dataset& data);

// The reference Adam row for a family and path count m. Families without a
// row for the requested m reuse the nearest listed one (General rows cover
// m in [8,15]). The seed is left at 0 for the caller to fill.
TrainConfig preset_train_config(StateFamily family, size_t m);

// Hidden node-layer widths of the reference head: (alpha,1024,1) for the
// parametric families, (alpha,1024,1024,1024,1) for General.
std::vector<size_t> preset_hidden_widths(StateFamily family);

}  // namespace bcnn

#endif
