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

#ifndef BCNN_PAULI_HPP
#define BCNN_PAULI_HPP

#include <array>

#include <Eigen/Dense>

#include "complex_matrix.hpp"

namespace bcnn {

// Basis order used throughout: X, Y, Z, I.
enum PauliAxis : int { kPauliX = 0, kPauliY = 1, kPauliZ = 2, kPauliI = 3 };

const ComplexMatrix& pauli_matrix(int axis);

// A 2x2 Hermitian observable parametrized by its four real Pauli
// coefficients. fixed_identity pins the kernel to (0,0,0,1) and excludes it
// from gradient updates.
struct PauliKernel {
    double cx = 0.0;
    double cy = 0.0;
    double cz = 0.0;
    double ci = 0.0;
    bool fixed_identity = false;

    static PauliKernel identity(bool fixed) { return PauliKernel{0.0, 0.0, 0.0, 1.0, fixed}; }

    std::array<double, 4> coeffs() const { return {cx, cy, cz, ci}; }
    void set_coeffs(const std::array<double, 4>& c) {
        cx = c[0];
        cy = c[1];
        cz = c[2];
        ci = c[3];
    }
};

// cx X + cy Y + cz Z + ci I; Hermitian by construction.
ComplexMatrix kernel_to_matrix(const PauliKernel& k);

// Coefficients c_sigma = tr(m sigma)/2 in (X, Y, Z, I) order. Requires a
// Hermitian input (within 1e-9).
std::array<double, 4> pauli_decompose(const ComplexMatrix& m);

// Two-qubit Pauli correlations T(a,b) = tr(rho sigma_a (x) sigma_b), real for
// Hermitian rho. Together with kernel coefficients this reconstructs every
// product-operator expectation as a bilinear form.
Eigen::Matrix4d pauli_tensor(const ComplexMatrix& rho);

}  // namespace bcnn

#endif
