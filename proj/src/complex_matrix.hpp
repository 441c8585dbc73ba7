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

#ifndef BCNN_COMPLEX_MATRIX_HPP
#define BCNN_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "rng.hpp"

namespace bcnn {

using cdouble = std::complex<double>;

// Dense square complex matrix, row-major. States, kernels and intermediate
// convolution outputs all live here; dimensions never exceed 16.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(size_t dim) : dim_(dim), data_(dim * dim, cdouble{0.0, 0.0}) {}

    static ComplexMatrix identity(size_t dim);

    size_t dim() const { return dim_; }

    cdouble& operator()(size_t r, size_t c) { return data_[r * dim_ + c]; }
    const cdouble& operator()(size_t r, size_t c) const { return data_[r * dim_ + c]; }

    const std::vector<cdouble>& data() const { return data_; }
    std::vector<cdouble>& data() { return data_; }

    ComplexMatrix operator+(const ComplexMatrix& o) const;
    ComplexMatrix operator-(const ComplexMatrix& o) const;
    ComplexMatrix operator*(const ComplexMatrix& o) const;
    ComplexMatrix operator*(cdouble s) const;

    ComplexMatrix transpose() const;
    ComplexMatrix adjoint() const;

    cdouble trace() const;

    // max |a(i,j) - conj(a(j,i))| over all entries.
    double hermiticity_error() const;
    bool is_hermitian(double tol = 1e-9) const { return hermiticity_error() <= tol; }
    bool is_finite() const;

    double frobenius_norm() const;

    bool operator==(const ComplexMatrix& o) const { return dim_ == o.dim_ && data_ == o.data_; }

  private:
    size_t dim_ = 0;
    std::vector<cdouble> data_;
};

// Kronecker product; result entry (i*dim(b)+k, j*dim(b)+l) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Traces out the tensor factor `site` of a matrix on a product space whose
// factor dimensions are `dims` (product must equal the matrix dimension).
ComplexMatrix partial_trace(const ComplexMatrix& a, const std::vector<size_t>& dims, size_t site);

// Transposes the indices of the tensor factor `site` only.
ComplexMatrix partial_transpose(const ComplexMatrix& a, const std::vector<size_t>& dims,
                                size_t site);

// All eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi rotations;
// converges when the off-diagonal Frobenius norm drops below 1e-12, capped at
// 100 sweeps. Rejects inputs whose hermiticity error exceeds `herm_tol`.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, double herm_tol = 1e-9);

// Random Hermitian matrix. For dim 2, draws the four Pauli coefficients
// i.i.d. uniform on [-1, 1]; for general dim, symmetrizes a matrix with
// uniform complex entries on [-1, 1] x [-1, 1].
ComplexMatrix random_hermitian(size_t dim, Prng& rng);

}  // namespace bcnn

#endif
