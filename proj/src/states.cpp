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

#include "states.hpp"

#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace bcnn {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// Threshold below which the G1 pure component counts as a product state;
// the state is then PPT for every p and the eigensolver cannot resolve the
// ~|sin 2theta|^2-sized negativity anyway.
constexpr double kProductTol = 1e-9;

void require_open_unit(double p, const char* what) {
    if (!(p > 0.0) || !(p < 1.0)) {
        throw std::invalid_argument(std::string(what) + ": p must lie in (0,1)");
    }
}

StateRecord finish_record(ComplexMatrix rho, StateFamily family, std::optional<double> p,
                          std::optional<double> theta, std::optional<double> phi) {
    StateRecord rec;
    rec.rho = std::move(rho);
    rec.family = family;
    rec.p = p;
    rec.theta = theta;
    rec.phi = phi;
    PptLabel lbl = label_ppt(rec.rho);
    rec.lambda_min = lbl.lambda_min;
    rec.entangled = lbl.entangled;
    return rec;
}

}  // namespace

const char* family_name(StateFamily f) {
    switch (f) {
        case StateFamily::Werner:
            return "werner";
        case StateFamily::G1Werner:
            return "g1werner";
        case StateFamily::G2Werner:
            return "g2werner";
        case StateFamily::General:
            return "general";
    }
    return "unknown";
}

std::optional<StateFamily> family_from_name(std::string_view name) {
    if (name == "werner") {
        return StateFamily::Werner;
    }
    if (name == "g1werner") {
        return StateFamily::G1Werner;
    }
    if (name == "g2werner") {
        return StateFamily::G2Werner;
    }
    if (name == "general") {
        return StateFamily::General;
    }
    return std::nullopt;
}

void validate_density_matrix(const ComplexMatrix& rho) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("density matrix must be 4x4");
    }
    if (!rho.is_finite()) {
        throw std::invalid_argument("density matrix has non-finite entries");
    }
    if (rho.hermiticity_error() > 1e-9) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    cdouble tr = rho.trace();
    if (std::abs(tr - cdouble{1.0, 0.0}) > 1e-9) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    std::vector<double> eigs = hermitian_eigenvalues(rho);
    if (eigs.front() < -1e-9) {
        throw std::invalid_argument("density matrix is not positive semidefinite");
    }
}

PptLabel label_ppt(const ComplexMatrix& rho) {
    validate_density_matrix(rho);
    ComplexMatrix pt = partial_transpose(rho, {2, 2}, 1);
    double lambda_min = hermitian_eigenvalues(pt).front();
    return {lambda_min, lambda_min < 0.0};
}

bool analytic_label(StateFamily family, double p, double theta) {
    switch (family) {
        case StateFamily::Werner:
            return p > 1.0 / 3.0;
        case StateFamily::G1Werner:
            // Entangled iff p > 1/3 and the pure component is not a product
            // state (sin 2theta = 0 makes the state PPT for every p).
            return p > 1.0 / 3.0 && std::abs(std::sin(2.0 * theta)) > kProductTol;
        case StateFamily::G2Werner:
            return p > 1.0 / (1.0 + 2.0 * std::sin(theta));
        case StateFamily::General:
            throw std::invalid_argument("analytic_label: no closed form for the General family");
    }
    throw std::invalid_argument("analytic_label: unknown family");
}

StateRecord gen_werner(double p) {
    require_open_unit(p, "gen_werner");
    ComplexMatrix rho(4);
    const double mix = (1.0 - p) / 4.0;
    for (size_t i = 0; i < 4; ++i) {
        rho(i, i) = mix;
    }
    // |psi><psi| with |psi> = (|00>+|11>)/sqrt(2)
    rho(0, 0) += p / 2.0;
    rho(3, 3) += p / 2.0;
    rho(0, 3) += p / 2.0;
    rho(3, 0) += p / 2.0;
    return finish_record(std::move(rho), StateFamily::Werner, p, std::nullopt, std::nullopt);
}

StateRecord gen_g1_werner(double p, double theta) {
    require_open_unit(p, "gen_g1_werner");
    if (!(theta > 0.0) || !(theta < kTwoPi)) {
        throw std::invalid_argument("gen_g1_werner: theta must lie in (0,2pi)");
    }
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    ComplexMatrix rho(4);
    // (1-p) (I_A/2) (x) rho_B with rho_B = diag(cos^2, sin^2)
    const double w = (1.0 - p) / 2.0;
    rho(0, 0) = w * c * c;
    rho(1, 1) = w * s * s;
    rho(2, 2) = w * c * c;
    rho(3, 3) = w * s * s;
    // p |psi_t><psi_t|
    rho(0, 0) += p * c * c;
    rho(3, 3) += p * s * s;
    rho(0, 3) += p * c * s;
    rho(3, 0) += p * c * s;
    return finish_record(std::move(rho), StateFamily::G1Werner, p, theta, std::nullopt);
}

StateRecord gen_g2_werner(double p, double theta, double phi) {
    require_open_unit(p, "gen_g2_werner");
    if (!(theta > 0.0) || !(theta < kPi)) {
        throw std::invalid_argument("gen_g2_werner: theta must lie in (0,pi)");
    }
    if (!(phi > 0.0) || !(phi < kTwoPi)) {
        throw std::invalid_argument("gen_g2_werner: phi must lie in (0,2pi)");
    }
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    ComplexMatrix rho(4);
    const double mix = (1.0 - p) / 4.0;
    for (size_t i = 0; i < 4; ++i) {
        rho(i, i) = mix;
    }
    // |psi><psi| with |psi> = c|00> + e^{i phi} s|11>
    const cdouble amp = p * c * s * cdouble{std::cos(phi), -std::sin(phi)};
    rho(0, 0) += p * c * c;
    rho(3, 3) += p * s * s;
    rho(0, 3) += amp;
    rho(3, 0) += std::conj(amp);
    return finish_record(std::move(rho), StateFamily::G2Werner, p, theta, phi);
}

StateRecord gen_general(Prng& rng) {
    for (;;) {
        ComplexMatrix sigma(4);
        for (size_t i = 0; i < 4; ++i) {
            for (size_t j = 0; j < 4; ++j) {
                sigma(i, j) = cdouble{rng.normal(), rng.normal()};
            }
        }
        ComplexMatrix rho = sigma * sigma.adjoint();
        const double tr = rho.trace().real();
        if (tr < 1e-12) {
            continue;
        }
        rho = rho * cdouble{1.0 / tr, 0.0};
        return finish_record(std::move(rho), StateFamily::General, std::nullopt, std::nullopt,
                             std::nullopt);
    }
}

size_t Dataset::entangled_count() const {
    size_t n = 0;
    for (const StateRecord& r : records) {
        n += r.entangled ? 1 : 0;
    }
    return n;
}

Dataset sample_dataset(StateFamily family, size_t size, uint64_t seed, bool balance,
                       std::string split) {
    if (size < 1) {
        throw std::invalid_argument("sample_dataset: size must be >= 1");
    }
    if (balance && family != StateFamily::General) {
        throw std::invalid_argument("sample_dataset: balancing applies to the General family only");
    }
    Dataset ds;
    ds.seed = seed;
    ds.family = family;
    ds.split = std::move(split);
    ds.records.reserve(size);
    for (size_t i = 0; i < size; ++i) {
        Prng rng = Prng::derived(seed, i);
        switch (family) {
            case StateFamily::Werner:
                ds.records.push_back(gen_werner(rng.uniform_open()));
                break;
            case StateFamily::G1Werner: {
                const double p = rng.uniform_open();
                const double theta = rng.uniform_open(0.0, kTwoPi);
                ds.records.push_back(gen_g1_werner(p, theta));
                break;
            }
            case StateFamily::G2Werner: {
                const double p = rng.uniform_open();
                const double theta = rng.uniform_open(0.0, kPi);
                const double phi = rng.uniform_open(0.0, kTwoPi);
                ds.records.push_back(gen_g2_werner(p, theta, phi));
                break;
            }
            case StateFamily::General: {
                if (!balance) {
                    ds.records.push_back(gen_general(rng));
                    break;
                }
                // Odd slots target the entangled label, even slots the
                // separable one: floor(size/2) entangled overall.
                const bool want_entangled = (i % 2) == 1;
                StateRecord rec = gen_general(rng);
                while (rec.entangled != want_entangled) {
                    rec = gen_general(rng);
                }
                ds.records.push_back(std::move(rec));
                break;
            }
        }
    }
    return ds;
}

}  // namespace bcnn
