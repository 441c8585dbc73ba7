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

#include "train.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "rng.hpp"

namespace bcnn {

namespace {

constexpr uint64_t kShuffleStream = 0x73687566;  // "shuf"

template <typename KernelFn, typename FcFn>
void walk_trainable(const ModelParams& params, KernelFn&& on_kernel, FcFn&& on_fc) {
    for (size_t q = 0; q < params.paths.size(); ++q) {
        for (size_t i = 0; i < params.paths[q].layer1.size(); ++i) {
            if (!params.paths[q].layer1[i].fixed_identity) {
                on_kernel(q, 1, i);
            }
        }
        for (size_t j = 0; j < params.paths[q].layer2.size(); ++j) {
            if (!params.paths[q].layer2[j].fixed_identity) {
                on_kernel(q, 2, j);
            }
        }
    }
    for (size_t t = 0; t < params.fc_weights.size(); ++t) {
        on_fc(t);
    }
}

}  // namespace

void TrainConfig::validate() const {
    if (!(lr > 0.0)) {
        throw std::invalid_argument("train config: lr must be positive");
    }
    if (beta1 < 0.0 || beta1 >= 1.0 || beta2 < 0.0 || beta2 >= 1.0) {
        throw std::invalid_argument("train config: betas must lie in [0,1)");
    }
    if (batch_size < 1) {
        throw std::invalid_argument("train config: batch size must be >= 1");
    }
}

Eigen::VectorXd pack_trainable(const ModelParams& params) {
    Eigen::VectorXd flat(static_cast<Eigen::Index>(params.trainable_count()));
    Eigen::Index at = 0;
    walk_trainable(
        params,
        [&](size_t q, int layer, size_t k) {
            const PauliKernel& kn =
                layer == 1 ? params.paths[q].layer1[k] : params.paths[q].layer2[k];
            const auto c = kn.coeffs();
            for (int a = 0; a < 4; ++a) {
                flat(at++) = c[a];
            }
        },
        [&](size_t t) {
            const Eigen::MatrixXd& w = params.fc_weights[t];
            for (Eigen::Index r = 0; r < w.rows(); ++r) {
                for (Eigen::Index c = 0; c < w.cols(); ++c) {
                    flat(at++) = w(r, c);
                }
            }
            const Eigen::VectorXd& b = params.fc_biases[t];
            for (Eigen::Index i = 0; i < b.size(); ++i) {
                flat(at++) = b(i);
            }
        });
    return flat;
}

void unpack_trainable(const Eigen::VectorXd& flat, ModelParams& params) {
    if (flat.size() != static_cast<Eigen::Index>(params.trainable_count())) {
        throw std::invalid_argument("unpack_trainable: size mismatch");
    }
    Eigen::Index at = 0;
    walk_trainable(
        params,
        [&](size_t q, int layer, size_t k) {
            PauliKernel& kn = layer == 1 ? params.paths[q].layer1[k] : params.paths[q].layer2[k];
            kn.set_coeffs({flat(at), flat(at + 1), flat(at + 2), flat(at + 3)});
            at += 4;
        },
        [&](size_t t) {
            Eigen::MatrixXd& w = params.fc_weights[t];
            for (Eigen::Index r = 0; r < w.rows(); ++r) {
                for (Eigen::Index c = 0; c < w.cols(); ++c) {
                    w(r, c) = flat(at++);
                }
            }
            Eigen::VectorXd& b = params.fc_biases[t];
            for (Eigen::Index i = 0; i < b.size(); ++i) {
                b(i) = flat(at++);
            }
        });
}

Eigen::VectorXd pack_gradients(const Gradients& grads, const ModelParams& params) {
    Eigen::VectorXd flat(static_cast<Eigen::Index>(params.trainable_count()));
    Eigen::Index at = 0;
    walk_trainable(
        params,
        [&](size_t q, int layer, size_t k) {
            const auto& c = layer == 1 ? grads.layer1[q][k] : grads.layer2[q][k];
            for (int a = 0; a < 4; ++a) {
                flat(at++) = c[a];
            }
        },
        [&](size_t t) {
            const Eigen::MatrixXd& w = grads.fc_weights[t];
            for (Eigen::Index r = 0; r < w.rows(); ++r) {
                for (Eigen::Index c = 0; c < w.cols(); ++c) {
                    flat(at++) = w(r, c);
                }
            }
            const Eigen::VectorXd& b = grads.fc_biases[t];
            for (Eigen::Index i = 0; i < b.size(); ++i) {
                flat(at++) = b(i);
            }
        });
    return flat;
}

void adam_step(Eigen::VectorXd& params, const Eigen::VectorXd& grads, AdamMoments& moments,
               size_t t, const TrainConfig& cfg) {
    if (params.size() != grads.size() || params.size() != moments.m.size() || t < 1) {
        throw std::invalid_argument("adam_step: shape/step mismatch");
    }
    moments.m = cfg.beta1 * moments.m + (1.0 - cfg.beta1) * grads;
    moments.v = cfg.beta2 * moments.v.array().matrix() +
                (1.0 - cfg.beta2) * grads.array().square().matrix();
    const double mc = 1.0 - std::pow(cfg.beta1, static_cast<double>(t));
    const double vc = 1.0 - std::pow(cfg.beta2, static_cast<double>(t));
    params.array() -= cfg.lr * (moments.m.array() / mc) /
                      ((moments.v.array() / vc).sqrt() + cfg.epsilon);
}

std::pair<ModelParams, TrainHistory> train(const Dataset& data, const Architecture& arch,
                                           const TrainConfig& cfg) {
    cfg.validate();
    arch.validate();
    const size_t n = data.size();
    if (n == 0) {
        throw std::invalid_argument("train: dataset is empty");
    }

    std::vector<Eigen::Matrix4d> tensors(n);
    std::vector<int> labels(n);
    for (size_t s = 0; s < n; ++s) {
        tensors[s] = pauli_tensor(data.records[s].rho);
        labels[s] = data.records[s].entangled ? 1 : 0;
    }

    ModelParams params = init_params(arch, cfg.seed);
    TrainHistory history;
    if (cfg.epochs == 0) {
        return {std::move(params), history};
    }

    Eigen::VectorXd flat = pack_trainable(params);
    AdamMoments moments(flat.size());
    size_t step = 0;

    std::vector<size_t> order(n);
    for (size_t s = 0; s < n; ++s) {
        order[s] = s;
    }
    HeadCache cache;
    std::vector<Eigen::Matrix4d> batch_tensors;
    std::vector<int> batch_labels;

    for (size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        const auto t0 = std::chrono::steady_clock::now();
        Prng shuffle_rng = Prng::derived(cfg.seed, kShuffleStream, epoch);
        for (size_t s = n; s > 1; --s) {
            std::swap(order[s - 1], order[shuffle_rng.below(s)]);
        }

        double loss_sum = 0.0;
        size_t correct = 0;
        for (size_t start = 0; start < n; start += cfg.batch_size) {
            const size_t b = std::min(cfg.batch_size, n - start);
            batch_tensors.clear();
            batch_labels.clear();
            Eigen::MatrixXd feats(b, static_cast<Eigen::Index>(arch.alpha()));
            for (size_t k = 0; k < b; ++k) {
                const size_t s = order[start + k];
                batch_tensors.push_back(tensors[s]);
                batch_labels.push_back(labels[s]);
                feats.row(static_cast<Eigen::Index>(k)) =
                    features_from_tensor(tensors[s], params).transpose();
            }
            const Eigen::VectorXd probs = cache.forward(params, feats);
            for (size_t k = 0; k < b; ++k) {
                const double pk = probs(static_cast<Eigen::Index>(k));
                loss_sum += bce_loss(pk, batch_labels[k]);
                correct += ((pk > 0.5) == (batch_labels[k] == 1)) ? 1 : 0;
            }
            Gradients grads = Gradients::zero_like(params);
            const Eigen::MatrixXd dfeats = cache.backward(params, batch_labels, grads);
            accumulate_kernel_gradients(params, batch_tensors, dfeats, grads);
            adam_step(flat, pack_gradients(grads, params), moments, ++step, cfg);
            unpack_trainable(flat, params);
        }

        const auto t1 = std::chrono::steady_clock::now();
        EpochStats stats;
        stats.loss = loss_sum / static_cast<double>(n);
        stats.accuracy = static_cast<double>(correct) / static_cast<double>(n);
        stats.seconds = std::chrono::duration<double>(t1 - t0).count();
        history.push_back(stats);
    }
    return {std::move(params), std::move(history)};
}

EvalResult evaluate(const ModelParams& params, const Dataset& data) {
    const size_t n = data.size();
    if (n == 0) {
        throw std::invalid_argument("evaluate: dataset is empty");
    }
    EvalResult result;
    size_t correct = 0;
    HeadCache cache;
    constexpr size_t kChunk = 4096;
    for (size_t start = 0; start < n; start += kChunk) {
        const size_t b = std::min(kChunk, n - start);
        Eigen::MatrixXd feats(b, static_cast<Eigen::Index>(params.arch.alpha()));
        for (size_t k = 0; k < b; ++k) {
            feats.row(static_cast<Eigen::Index>(k)) =
                features_from_tensor(pauli_tensor(data.records[start + k].rho), params)
                    .transpose();
        }
        const Eigen::VectorXd probs = cache.forward(params, feats);
        for (size_t k = 0; k < b; ++k) {
            const StateRecord& rec = data.records[start + k];
            const double prob = probs(static_cast<Eigen::Index>(k));
            const bool predicted = prob > 0.5;
            if (predicted == rec.entangled) {
                ++correct;
            } else {
                ErrorRecord err;
                err.index = start + k;
                err.family = rec.family;
                err.p = rec.p;
                err.theta = rec.theta;
                err.phi = rec.phi;
                err.lambda_min = rec.lambda_min;
                err.entangled = rec.entangled;
                err.prob = prob;
                result.errors.push_back(err);
            }
        }
    }
    result.accuracy = static_cast<double>(correct) / static_cast<double>(n);
    return result;
}

TrainConfig preset_train_config(StateFamily family, size_t m) {
    TrainConfig cfg;
    switch (family) {
        case StateFamily::Werner:
            cfg = {0.001, 0.9, 0.99, 1e-8, 10, 10, 0};
            break;
        case StateFamily::G1Werner:
            cfg = {0.001, 0.35, 0.99, 1e-8, 10, 10, 0};
            break;
        case StateFamily::G2Werner:
            if (m <= 1) {
                cfg = {0.001, 0.5, 0.9, 1e-8, 10, 10, 0};
            } else if (m == 2) {
                cfg = {0.001, 0.9, 0.99, 1e-8, 200, 30, 0};
            } else {
                cfg = {0.001, 0.375, 0.99, 1e-8, 10, 10, 0};
            }
            break;
        case StateFamily::General: {
            // Rows exist for m in [8,15]; nearest row otherwise.
            const size_t row = m < 8 ? 8 : (m > 15 ? 15 : m);
            const double beta2[] = {0.825, 0.85, 0.87, 0.9, 0.95, 0.925, 0.925, 0.975};
            cfg = {0.0003, 0.325, beta2[row - 8], 1e-8, 400, 20, 0};
            break;
        }
    }
    return cfg;
}

std::vector<size_t> preset_hidden_widths(StateFamily family) {
    if (family == StateFamily::General) {
        return {1024, 1024, 1024};
    }
    return {1024};
}

}  // namespace bcnn
