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

#include "pauli.hpp"

#include <stdexcept>

namespace bcnn {

namespace {

ComplexMatrix make_pauli(int axis) {
    ComplexMatrix m(2);
    switch (axis) {
        case kPauliX:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case kPauliY:
            m(0, 1) = cdouble{0.0, -1.0};
            m(1, 0) = cdouble{0.0, 1.0};
            break;
        case kPauliZ:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        case kPauliI:
            m(0, 0) = 1.0;
            m(1, 1) = 1.0;
            break;
        default:
            throw std::invalid_argument("pauli_matrix: axis out of range");
    }
    return m;
}

}  // namespace

const ComplexMatrix& pauli_matrix(int axis) {
    static const ComplexMatrix mats[4] = {make_pauli(0), make_pauli(1), make_pauli(2),
                                          make_pauli(3)};
    if (axis < 0 || axis > 3) {
        throw std::invalid_argument("pauli_matrix: axis out of range");
    }
    return mats[axis];
}

ComplexMatrix kernel_to_matrix(const PauliKernel& k) {
    ComplexMatrix m(2);
    m(0, 0) = cdouble{k.ci + k.cz, 0.0};
    m(0, 1) = cdouble{k.cx, -k.cy};
    m(1, 0) = cdouble{k.cx, k.cy};
    m(1, 1) = cdouble{k.ci - k.cz, 0.0};
    return m;
}

std::array<double, 4> pauli_decompose(const ComplexMatrix& m) {
    if (m.dim() != 2) {
        throw std::invalid_argument("pauli_decompose: matrix must be 2x2");
    }
    if (m.hermiticity_error() > 1e-9) {
        throw std::invalid_argument("pauli_decompose: matrix is not Hermitian");
    }
    std::array<double, 4> c{};
    for (int axis = 0; axis < 4; ++axis) {
        c[axis] = (m * pauli_matrix(axis)).trace().real() / 2.0;
    }
    return c;
}

Eigen::Matrix4d pauli_tensor(const ComplexMatrix& rho) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("pauli_tensor: matrix must be 4x4");
    }
    Eigen::Matrix4d t;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const ComplexMatrix& sa = pauli_matrix(a);
            const ComplexMatrix& sb = pauli_matrix(b);
            // tr(rho (sa (x) sb)) = sum_{ik,jl} rho[(i,k),(j,l)] sa(j,i) sb(l,k)
            cdouble s{0.0, 0.0};
            for (size_t i = 0; i < 2; ++i) {
                for (size_t j = 0; j < 2; ++j) {
                    if (sa(j, i) == cdouble{0.0, 0.0}) {
                        continue;
                    }
                    for (size_t k = 0; k < 2; ++k) {
                        for (size_t l = 0; l < 2; ++l) {
                            s += rho(i * 2 + k, j * 2 + l) * sa(j, i) * sb(l, k);
                        }
                    }
                }
            }
            t(a, b) = s.real();
        }
    }
    return t;
}

}  // namespace bcnn
