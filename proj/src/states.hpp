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

#ifndef BCNN_STATES_HPP
#define BCNN_STATES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "complex_matrix.hpp"
#include "rng.hpp"

namespace bcnn {

enum class StateFamily { Werner, G1Werner, G2Werner, General };

const char* family_name(StateFamily f);
std::optional<StateFamily> family_from_name(std::string_view name);

// A labeled two-qubit state. lambda_min is the minimum eigenvalue of the
// partial transpose; its sign decides the entanglement label.
struct StateRecord {
    ComplexMatrix rho;  // 4x4, basis |00>,|01>,|10>,|11>
    StateFamily family = StateFamily::General;
    std::optional<double> p;
    std::optional<double> theta;
    std::optional<double> phi;
    double lambda_min = 0.0;
    bool entangled = false;
};

struct PptLabel {
    double lambda_min;
    bool entangled;
};

// Validates Hermiticity (1e-9), unit trace (1e-9) and positivity (eigenvalues
// >= -1e-9); throws std::invalid_argument otherwise.
void validate_density_matrix(const ComplexMatrix& rho);

// Minimum eigenvalue of the partial transpose on subsystem B. Entangled iff
// lambda_min < 0; boundary states (lambda_min >= 0) count as separable.
PptLabel label_ppt(const ComplexMatrix& rho);

// Closed-form label for the parametric families; used as a cross-check
// against label_ppt. Throws on the General family.
bool analytic_label(StateFamily family, double p, double theta = 0.0);

// p |psi><psi| + (1-p) I/4 with |psi> = (|00>+|11>)/sqrt(2), p in (0,1).
StateRecord gen_werner(double p);

// p |psi_t><psi_t| + (1-p) (I_A/2) (x) rho_B with |psi_t> =
// cos(theta)|00> + sin(theta)|11>, p in (0,1), theta in (0,2pi).
StateRecord gen_g1_werner(double p, double theta);

// p |psi><psi| + (1-p) I/4 with |psi> = cos(theta/2)|00> +
// e^{i phi} sin(theta/2)|11>, p in (0,1), theta in (0,pi), phi in (0,2pi).
StateRecord gen_g2_werner(double p, double theta, double phi);

// rho = sigma sigma^dag / tr(sigma sigma^dag) with sigma a 4x4 Ginibre
// matrix (entries i.i.d. standard complex normal). Redraws the degenerate
// tr < 1e-12 case.
StateRecord gen_general(Prng& rng);

struct Dataset {
    std::vector<StateRecord> records;
    uint64_t seed = 0;
    StateFamily family = StateFamily::General;
    std::string split = "train";

    size_t size() const { return records.size(); }
    size_t entangled_count() const;
};

// Deterministic dataset generation. Record i draws from a generator derived
// from (seed, i), so output is independent of generation order. For the
// parametric families, parameters are uniform over their open ranges and no
// balancing is applied; for General with balance=true, rejection sampling
// yields exactly floor(size/2) entangled and ceil(size/2) separable records.
Dataset sample_dataset(StateFamily family, size_t size, uint64_t seed, bool balance,
                       std::string split = "train");

// CSV persistence: header line, then one record per line with 17 significant
// digits (exact double round-trip). Columns: family, p, theta, phi (empty
// when absent), lambda_min, label, then re/im interleaved row-major entries.
void write_dataset_csv(const Dataset& ds, const std::string& path);
Dataset read_dataset_csv(const std::string& path);

}  // namespace bcnn

#endif
