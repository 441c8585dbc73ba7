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

#include "complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bcnn {

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    ComplexMatrix m(dim);
    for (size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
    if (dim_ != o.dim_) {
        throw std::invalid_argument("ComplexMatrix::operator+: dimension mismatch");
    }
    ComplexMatrix r(dim_);
    for (size_t i = 0; i < data_.size(); ++i) {
        r.data_[i] = data_[i] + o.data_[i];
    }
    return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
    if (dim_ != o.dim_) {
        throw std::invalid_argument("ComplexMatrix::operator-: dimension mismatch");
    }
    ComplexMatrix r(dim_);
    for (size_t i = 0; i < data_.size(); ++i) {
        r.data_[i] = data_[i] - o.data_[i];
    }
    return r;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
    if (dim_ != o.dim_) {
        throw std::invalid_argument("ComplexMatrix::operator*: dimension mismatch");
    }
    ComplexMatrix r(dim_);
    for (size_t i = 0; i < dim_; ++i) {
        for (size_t k = 0; k < dim_; ++k) {
            cdouble aik = (*this)(i, k);
            if (aik == cdouble{0.0, 0.0}) {
                continue;
            }
            for (size_t j = 0; j < dim_; ++j) {
                r(i, j) += aik * o(k, j);
            }
        }
    }
    return r;
}

ComplexMatrix ComplexMatrix::operator*(cdouble s) const {
    ComplexMatrix r(dim_);
    for (size_t i = 0; i < data_.size(); ++i) {
        r.data_[i] = data_[i] * s;
    }
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(dim_);
    for (size_t i = 0; i < dim_; ++i) {
        for (size_t j = 0; j < dim_; ++j) {
            r(j, i) = (*this)(i, j);
        }
    }
    return r;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(dim_);
    for (size_t i = 0; i < dim_; ++i) {
        for (size_t j = 0; j < dim_; ++j) {
            r(j, i) = std::conj((*this)(i, j));
        }
    }
    return r;
}

cdouble ComplexMatrix::trace() const {
    cdouble t{0.0, 0.0};
    for (size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::hermiticity_error() const {
    double worst = 0.0;
    for (size_t i = 0; i < dim_; ++i) {
        for (size_t j = i; j < dim_; ++j) {
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return worst;
}

bool ComplexMatrix::is_finite() const {
    for (const cdouble& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cdouble& z : data_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const size_t da = a.dim(), db = b.dim();
    ComplexMatrix r(da * db);
    for (size_t i = 0; i < da; ++i) {
        for (size_t j = 0; j < da; ++j) {
            cdouble aij = a(i, j);
            for (size_t k = 0; k < db; ++k) {
                for (size_t l = 0; l < db; ++l) {
                    r(i * db + k, j * db + l) = aij * b(k, l);
                }
            }
        }
    }
    return r;
}

namespace {

size_t dims_product(const std::vector<size_t>& dims) {
    size_t p = 1;
    for (size_t d : dims) {
        p *= d;
    }
    return p;
}

void check_dims(const ComplexMatrix& a, const std::vector<size_t>& dims, size_t site,
                const char* op) {
    if (site >= dims.size() || dims_product(dims) != a.dim()) {
        throw std::invalid_argument(std::string(op) + ": dimension mismatch");
    }
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& a, const std::vector<size_t>& dims, size_t site) {
    check_dims(a, dims, site, "partial_trace");
    size_t left = 1, right = 1;
    for (size_t k = 0; k < site; ++k) {
        left *= dims[k];
    }
    for (size_t k = site + 1; k < dims.size(); ++k) {
        right *= dims[k];
    }
    const size_t d = dims[site];
    ComplexMatrix out(left * right);
    for (size_t l1 = 0; l1 < left; ++l1) {
        for (size_t r1 = 0; r1 < right; ++r1) {
            for (size_t l2 = 0; l2 < left; ++l2) {
                for (size_t r2 = 0; r2 < right; ++r2) {
                    cdouble s{0.0, 0.0};
                    for (size_t k = 0; k < d; ++k) {
                        s += a((l1 * d + k) * right + r1, (l2 * d + k) * right + r2);
                    }
                    out(l1 * right + r1, l2 * right + r2) = s;
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& a, const std::vector<size_t>& dims,
                                size_t site) {
    check_dims(a, dims, site, "partial_transpose");
    size_t left = 1, right = 1;
    for (size_t k = 0; k < site; ++k) {
        left *= dims[k];
    }
    for (size_t k = site + 1; k < dims.size(); ++k) {
        right *= dims[k];
    }
    const size_t d = dims[site];
    ComplexMatrix out(a.dim());
    for (size_t l1 = 0; l1 < left; ++l1) {
        for (size_t s1 = 0; s1 < d; ++s1) {
            for (size_t r1 = 0; r1 < right; ++r1) {
                for (size_t l2 = 0; l2 < left; ++l2) {
                    for (size_t s2 = 0; s2 < d; ++s2) {
                        for (size_t r2 = 0; r2 < right; ++r2) {
                            out((l1 * d + s2) * right + r1, (l2 * d + s1) * right + r2) =
                                a((l1 * d + s1) * right + r1, (l2 * d + s2) * right + r2);
                        }
                    }
                }
            }
        }
    }
    return out;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (size_t i = 0; i < a.dim(); ++i) {
        for (size_t j = 0; j < a.dim(); ++j) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a_in, double herm_tol) {
    const size_t n = a_in.dim();
    if (n == 0) {
        return {};
    }
    if (!a_in.is_finite() || a_in.hermiticity_error() > herm_tol) {
        throw std::invalid_argument("hermitian_eigenvalues: input is not Hermitian");
    }
    // Work on the exactly-Hermitian part so rotations cannot drift.
    ComplexMatrix a = (a_in + a_in.adjoint()) * cdouble{0.5, 0.0};

    constexpr double kOffTol = 1e-12;
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) >= kOffTol; ++sweep) {
        for (size_t p = 0; p + 1 < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                const double beta = std::abs(a(p, q));
                if (beta == 0.0) {
                    continue;
                }
                // Phase factor reducing the (p,q) block to a real symmetric
                // one, then a classic Jacobi rotation on that block.
                const cdouble f = a(p, q) / beta;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * beta);
                const double hyp = std::sqrt(1.0 + tau * tau);
                const double t = (tau >= 0.0) ? -1.0 / (tau + hyp) : 1.0 / (-tau + hyp);
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cdouble sf = s * f;
                const cdouble sfc = s * std::conj(f);
                // A <- V^H A V with V = [[c, -s f], [s conj(f), c]] on (p,q).
                for (size_t k = 0; k < n; ++k) {
                    const cdouble akp = a(k, p);
                    const cdouble akq = a(k, q);
                    a(k, p) = c * akp + sfc * akq;
                    a(k, q) = c * akq - sf * akp;
                }
                for (size_t k = 0; k < n; ++k) {
                    const cdouble apk = a(p, k);
                    const cdouble aqk = a(q, k);
                    a(p, k) = c * apk + sf * aqk;
                    a(q, k) = c * aqk - sfc * apk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<double> eigs(n);
    for (size_t i = 0; i < n; ++i) {
        eigs[i] = a(i, i).real();
    }
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

ComplexMatrix random_hermitian(size_t dim, Prng& rng) {
    if (dim == 2) {
        const double cx = rng.uniform(-1.0, 1.0);
        const double cy = rng.uniform(-1.0, 1.0);
        const double cz = rng.uniform(-1.0, 1.0);
        const double ci = rng.uniform(-1.0, 1.0);
        ComplexMatrix m(2);
        m(0, 0) = cdouble{ci + cz, 0.0};
        m(0, 1) = cdouble{cx, -cy};
        m(1, 0) = cdouble{cx, cy};
        m(1, 1) = cdouble{ci - cz, 0.0};
        return m;
    }
    ComplexMatrix g(dim);
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = 0; j < dim; ++j) {
            g(i, j) = cdouble{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        }
    }
    return (g + g.adjoint()) * cdouble{0.5, 0.0};
}

}  // namespace bcnn
