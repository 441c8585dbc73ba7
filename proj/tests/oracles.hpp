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

// Independent reference implementations used only by tests. Everything here
// is deliberately written from the index definitions, not by calling the
// library paths it checks.

#ifndef BCNN_TESTS_ORACLES_HPP
#define BCNN_TESTS_ORACLES_HPP

#include <vector>

#include "complex_matrix.hpp"
#include "rng.hpp"
#include "states.hpp"

namespace bcnn::oracles {

// Entry-by-entry Kronecker product from the definition.
ComplexMatrix kron_brute(const ComplexMatrix& a, const ComplexMatrix& b);

// Reduced matrix of rho . (I (x) M) on the first factor, computed by the raw
// index contraction sum_{ij,kl} rho_{ij,kl} <l|M|k> |i><j|.
ComplexMatrix first_layer_contraction(const ComplexMatrix& rho, const ComplexMatrix& m);

// Partial trace over the last factor by direct index contraction.
ComplexMatrix trace_out_last(const ComplexMatrix& a, size_t last_dim);

// det(A - lambda I) via LU with partial pivoting (real part; inputs are
// Hermitian so the characteristic polynomial is real).
double char_poly(const ComplexMatrix& a, double lambda);

// All real roots of the characteristic polynomial, found by sign scanning
// between the Gershgorin bounds plus bisection. Intended for matrices with
// distinct eigenvalues (random draws).
std::vector<double> eigenvalues_brute(const ComplexMatrix& a, size_t grid = 20000);
double min_eigenvalue_brute(const ComplexMatrix& a);

// Random 4x4 density matrix (Ginibre construction, independent of
// states.cpp's record plumbing).
ComplexMatrix random_density(Prng& rng);

// Direct evaluation of the kernel-gradient double sum.
ComplexMatrix eq7_brute(const ComplexMatrix& o_prev, const ComplexMatrix& delta, size_t d_out,
                        size_t d_kernel);

}  // namespace bcnn::oracles

#endif
