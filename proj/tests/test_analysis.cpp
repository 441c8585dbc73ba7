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

#include "analysis.hpp"
#include "errors.hpp"
#include "oracles.hpp"

using namespace bcnn;

TEST_CASE("extract_operators lists every non-identity combination", "[analysis]") {
    // All-identity but trainable kernels: rows of (0,0,0,1 | 0,0,0,1).
    const Architecture arch = Architecture::make(1, 2, 2, {8}, false);
    ModelParams params = init_params(arch, 1);
    for (ConvPath& path : params.paths) {
        for (PauliKernel& k : path.layer1) {
            k = PauliKernel::identity(false);
        }
        for (PauliKernel& k : path.layer2) {
            k = PauliKernel::identity(false);
        }
    }
    const auto rows = extract_operators(params);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) {
        CHECK(r == std::array<double, 8>{0, 0, 0, 1, 0, 0, 0, 1});
    }

    // With one fixed identity per layer, the constant combination is dropped.
    const Architecture fixed = Architecture::make(1, 4, 4, {8}, true);
    const ModelParams fixed_params = init_params(fixed, 2);
    CHECK(extract_operators(fixed_params).size() == 15);
}

TEST_CASE("operator export round-trips through rebuild", "[analysis]") {
    Prng rng(41);
    const Architecture arch = Architecture::make(2, 2, 2, {16}, true);
    const ModelParams params = init_params(arch, 3);
    const auto rows = extract_operators(params);
    const ModelParams rebuilt = rebuild_from_operators(params, rows);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix rho = oracles::random_density(rng);
        CHECK(std::abs(model_forward(rho, params) - model_forward(rho, rebuilt)) < 1e-12);
    }
    CHECK_THROWS_AS(rebuild_from_operators(params, {}), std::invalid_argument);
}

TEST_CASE("error histograms bin misclassified against all samples", "[analysis]") {
    const Dataset test = sample_dataset(StateFamily::G1Werner, 2000, 42, false);

    // Synthetic error records clustered at the entanglement boundary.
    std::vector<ErrorRecord> errors;
    for (const StateRecord& rec : test.records) {
        if (std::abs(*rec.p - 1.0 / 3.0) < 0.02) {
            ErrorRecord e;
            e.family = rec.family;
            e.p = rec.p;
            e.theta = rec.theta;
            e.lambda_min = rec.lambda_min;
            errors.push_back(e);
        }
    }
    REQUIRE(!errors.empty());

    const Histogram h = error_distribution(errors, test, ErrorAxis::P, 50);
    REQUIRE(h.errors.size() == 50);
    REQUIRE(h.edges.size() == 51);
    size_t total_errors = 0, total_samples = 0, modal_bin = 0;
    for (size_t k = 0; k < 50; ++k) {
        CHECK(h.errors[k] <= h.totals[k]);  // misclassified is a subset
        total_errors += h.errors[k];
        total_samples += h.totals[k];
        if (h.errors[k] > h.errors[modal_bin]) {
            modal_bin = k;
        }
    }
    CHECK(total_errors == errors.size());
    CHECK(total_samples == test.size());
    // The modal bin contains p = 1/3.
    CHECK(h.edges[modal_bin] <= 1.0 / 3.0);
    CHECK(h.edges[modal_bin + 1] >= 1.0 / 3.0);

    // Empty error list: all-zero histogram.
    const Histogram empty = error_distribution({}, test, ErrorAxis::LambdaMin, 50);
    for (size_t e : empty.errors) {
        CHECK(e == 0);
    }

    // Axis unavailable for the family.
    const Dataset general = sample_dataset(StateFamily::General, 50, 43, false);
    CHECK_THROWS_AS(error_distribution({}, general, ErrorAxis::P, 10), std::invalid_argument);
    CHECK_THROWS_AS(error_axis_from_name("banana"), std::invalid_argument);
}

TEST_CASE("round_and_retest at full precision is a no-op", "[analysis]") {
    const Dataset test = sample_dataset(StateFamily::Werner, 500, 44, false);
    const Architecture arch = Architecture::make(1, 1, 1, {16}, false);
    const ModelParams params = init_params(arch, 4);
    const RoundRetest rr = round_and_retest(params, test, 17);
    CHECK(rr.original_accuracy == rr.rounded_accuracy);
}

TEST_CASE("rounding to zero decimals zeroes small coefficients", "[analysis]") {
    const Architecture arch = Architecture::make(1, 1, 1, {8}, false);
    ModelParams params = init_params(arch, 5);
    for (ConvPath& path : params.paths) {
        for (PauliKernel& k : path.layer1) {
            k.set_coeffs({0.2, -0.3, 0.4, -0.1});
        }
        for (PauliKernel& k : path.layer2) {
            k.set_coeffs({0.45, 0.05, -0.25, 0.3});
        }
    }
    const ModelParams rounded = round_kernels(params, 0);
    ModelParams zeroed = params;
    for (ConvPath& path : zeroed.paths) {
        for (PauliKernel& k : path.layer1) {
            k.set_coeffs({0, 0, 0, 0});
        }
        for (PauliKernel& k : path.layer2) {
            k.set_coeffs({0, 0, 0, 0});
        }
    }
    Prng rng(45);
    for (int rep = 0; rep < 5; ++rep) {
        const ComplexMatrix rho = oracles::random_density(rng);
        CHECK(model_forward(rho, rounded) == model_forward(rho, zeroed));
    }
    CHECK_THROWS_AS(round_kernels(params, -1), std::invalid_argument);
}

TEST_CASE("accuracy_curve trains repeats with distinct seeds", "[analysis]") {
    const Dataset train_ds = sample_dataset(StateFamily::Werner, 300, 46, false);
    const Dataset test_ds = sample_dataset(StateFamily::Werner, 120, 47, false);
    TrainConfig cfg;
    cfg.lr = 0.001;
    cfg.beta1 = 0.9;
    cfg.beta2 = 0.99;
    cfg.batch_size = 30;
    cfg.epochs = 2;
    const AccuracyCurve curve =
        accuracy_curve(train_ds, test_ds, 1, 1, {8}, false, {1, 2}, 3, 99, &cfg);
    REQUIRE(curve.points.size() == 2);
    CHECK(curve.points[0].operator_count == 1);
    CHECK(curve.points[1].operator_count == 2);
    for (const CurvePoint& p : curve.points) {
        REQUIRE(p.seeds.size() == 3);
        CHECK(p.seeds[0] != p.seeds[1]);
        CHECK(p.seeds[1] != p.seeds[2]);
        CHECK(p.mean_accuracy >= 0.0);
        CHECK(p.mean_accuracy <= 1.0);
        CHECK(p.std_accuracy >= 0.0);
        REQUIRE(p.accuracies.size() == 3);
    }
    CHECK(curve.points[0].seeds[0] != curve.points[1].seeds[0]);

    const Dataset other = sample_dataset(StateFamily::General, 50, 48, false);
    CHECK_THROWS_AS(accuracy_curve(train_ds, other, 1, 1, {8}, false, {1}, 1, 9, &cfg),
                    IncompatibleError);
}
