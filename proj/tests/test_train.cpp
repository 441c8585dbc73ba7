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

#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "states.hpp"
#include "train.hpp"

using namespace bcnn;

namespace {

TrainConfig quick_config(uint64_t seed) {
    TrainConfig cfg;
    cfg.lr = 0.001;
    cfg.beta1 = 0.9;
    cfg.beta2 = 0.99;
    cfg.batch_size = 10;
    cfg.epochs = 3;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST_CASE("adam_step takes a bias-corrected first step of size lr", "[train]") {
    TrainConfig cfg;
    cfg.lr = 0.001;
    cfg.beta1 = 0.9;
    cfg.beta2 = 0.99;
    Eigen::VectorXd w(1), g(1);
    w << 1.0;
    g << 1.0;
    AdamMoments mo(1);
    adam_step(w, g, mo, 1, cfg);
    // First step moves exactly lr against the gradient sign, up to epsilon.
    CHECK(std::abs(w(0) - (1.0 - cfg.lr)) < 1e-10);
}

TEST_CASE("adam_step with zero betas reduces to sign-scaled steps", "[train]") {
    TrainConfig cfg;
    cfg.lr = 0.01;
    cfg.beta1 = 0.0;
    cfg.beta2 = 0.0;
    Eigen::VectorXd w(2), g(2);
    w << 1.0, -2.0;
    g << 0.3, -4.0;
    Eigen::VectorXd expected = w;
    for (int i = 0; i < 2; ++i) {
        expected(i) -= cfg.lr * g(i) / (std::abs(g(i)) + cfg.epsilon);
    }
    AdamMoments mo(2);
    adam_step(w, g, mo, 1, cfg);
    CHECK((w - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("adam_step leaves parameters alone on zero gradient", "[train]") {
    TrainConfig cfg;
    Eigen::VectorXd w(3);
    w << 0.5, -0.25, 3.0;
    const Eigen::VectorXd before = w;
    AdamMoments mo(3);
    adam_step(w, Eigen::VectorXd::Zero(3), mo, 1, cfg);
    CHECK(w == before);
    CHECK_THROWS_AS(adam_step(w, Eigen::VectorXd::Zero(2), mo, 2, cfg), std::invalid_argument);
}

TEST_CASE("training is deterministic in the seed", "[train]") {
    const Dataset ds = sample_dataset(StateFamily::Werner, 400, 51, false);
    const Architecture arch = Architecture::make(1, 1, 1, {32}, false);
    auto [p1, h1] = train(ds, arch, quick_config(9));
    auto [p2, h2] = train(ds, arch, quick_config(9));
    CHECK(pack_trainable(p1) == pack_trainable(p2));
    REQUIRE(h1.size() == h2.size());
    for (size_t e = 0; e < h1.size(); ++e) {
        CHECK(h1[e].loss == h2[e].loss);
        CHECK(h1[e].accuracy == h2[e].accuracy);
    }
    auto [p3, h3] = train(ds, arch, quick_config(10));
    CHECK(pack_trainable(p1) != pack_trainable(p3));
}

TEST_CASE("zero epochs returns the untouched initialization", "[train]") {
    const Dataset ds = sample_dataset(StateFamily::Werner, 50, 52, false);
    const Architecture arch = Architecture::make(1, 1, 1, {16}, false);
    TrainConfig cfg = quick_config(4);
    cfg.epochs = 0;
    auto [params, history] = train(ds, arch, cfg);
    CHECK(history.empty());
    CHECK(pack_trainable(params) == pack_trainable(init_params(arch, cfg.seed)));
}

TEST_CASE("degenerate all-separable task trains to perfect accuracy", "[train]") {
    // p < 1/3 everywhere: every label is 0.
    Dataset ds;
    ds.family = StateFamily::Werner;
    for (int k = 0; k < 300; ++k) {
        ds.records.push_back(gen_werner(0.01 + 0.3 * (k / 300.0)));
        REQUIRE_FALSE(ds.records.back().entangled);
    }
    const Architecture arch = Architecture::make(1, 1, 1, {32}, false);
    TrainConfig cfg = quick_config(5);
    cfg.epochs = 5;
    auto [params, history] = train(ds, arch, cfg);
    CHECK(evaluate(params, ds).accuracy == 1.0);
    CHECK(history.back().loss < history.front().loss);
}

TEST_CASE("train history has one entry per epoch and decreasing loss", "[train]") {
    const Dataset ds = sample_dataset(StateFamily::Werner, 2000, 53, false);
    const Architecture arch = Architecture::make(1, 1, 1, {64}, false);
    TrainConfig cfg = quick_config(6);
    cfg.epochs = 4;
    auto [params, history] = train(ds, arch, cfg);
    REQUIRE(history.size() == 4);
    CHECK(history.back().loss < history.front().loss);
    for (const EpochStats& e : history) {
        CHECK(e.seconds >= 0.0);
        CHECK(e.accuracy >= 0.0);
        CHECK(e.accuracy <= 1.0);
    }
}

TEST_CASE("a constant-1/2 classifier scores one half on a balanced split", "[train]") {
    const Dataset ds = sample_dataset(StateFamily::General, 200, 54, true);
    const Architecture arch = Architecture::make(1, 1, 1, {8}, false);
    ModelParams params = init_params(arch, 1);
    for (auto& w : params.fc_weights) {
        w.setZero();
    }
    // p = 0.5 exactly; the > 0.5 rule predicts separable everywhere.
    const EvalResult ev = evaluate(params, ds);
    CHECK(ev.accuracy == Catch::Approx(0.5));
    CHECK(ev.errors.size() == 100);
    for (const ErrorRecord& err : ev.errors) {
        CHECK(err.entangled);  // exactly the entangled half is missed
    }
}

TEST_CASE("evaluate keeps misclassified parameters for the reports", "[train]") {
    const Dataset ds = sample_dataset(StateFamily::G2Werner, 300, 55, false);
    const Architecture arch = Architecture::make(2, 1, 1, {16}, false);
    const ModelParams params = init_params(arch, 2);
    const EvalResult ev = evaluate(params, ds);
    for (const ErrorRecord& err : ev.errors) {
        CHECK(err.p.has_value());
        CHECK(err.theta.has_value());
        CHECK(err.phi.has_value());
        CHECK(err.prob > 0.0);
        CHECK(err.prob < 1.0);
    }
}

TEST_CASE("reference Adam rows", "[train]") {
    const TrainConfig w = preset_train_config(StateFamily::Werner, 1);
    CHECK(w.lr == 0.001);
    CHECK(w.beta1 == 0.9);
    CHECK(w.beta2 == 0.99);
    CHECK(w.batch_size == 10);
    CHECK(w.epochs == 10);

    CHECK(preset_train_config(StateFamily::G1Werner, 1).beta1 == 0.35);
    CHECK(preset_train_config(StateFamily::G2Werner, 1).beta2 == 0.9);
    CHECK(preset_train_config(StateFamily::G2Werner, 2).batch_size == 200);
    CHECK(preset_train_config(StateFamily::G2Werner, 2).epochs == 30);
    CHECK(preset_train_config(StateFamily::G2Werner, 7).beta1 == 0.375);

    // Nearest-row reuse outside the listed range.
    CHECK(preset_train_config(StateFamily::General, 1).beta2 == 0.825);
    CHECK(preset_train_config(StateFamily::General, 9).beta2 == 0.85);
    CHECK(preset_train_config(StateFamily::General, 15).beta2 == 0.975);
    CHECK(preset_train_config(StateFamily::General, 40).beta2 == 0.975);
    CHECK(preset_train_config(StateFamily::General, 9).lr == 0.0003);
    CHECK(preset_train_config(StateFamily::General, 9).batch_size == 400);
}
