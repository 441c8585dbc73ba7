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

#include <catch2/catch_amalgamated.hpp>

#include "complex_matrix.hpp"
#include "oracles.hpp"
#include "pauli.hpp"
#include "states.hpp"

using namespace bcnn;

namespace {

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    REQUIRE(a.dim() == b.dim());
    double worst = 0.0;
    for (size_t i = 0; i < a.dim(); ++i) {
        for (size_t j = 0; j < a.dim(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
    }
    return worst;
}

ComplexMatrix bell_state() {
    ComplexMatrix rho(4);
    rho(0, 0) = rho(0, 3) = rho(3, 0) = rho(3, 3) = 0.5;
    return rho;
}

}  // namespace

TEST_CASE("kron identity and Pauli cases", "[linalg]") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(max_abs_diff(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);

    const ComplexMatrix zz = kron(pauli_matrix(kPauliZ), pauli_matrix(kPauliZ));
    for (size_t i = 0; i < 4; ++i) {
        const double expected = (i == 0 || i == 3) ? 1.0 : -1.0;
        CHECK(zz(i, i) == cdouble{expected, 0.0});
    }
    CHECK(zz.trace() == cdouble{0.0, 0.0});

    const ComplexMatrix xx = kron(pauli_matrix(kPauliX), pauli_matrix(kPauliX));
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = 0; j < 4; ++j) {
            CHECK(xx(i, j) == cdouble{i + j == 3 ? 1.0 : 0.0, 0.0});
        }
    }
}

TEST_CASE("kron matches the entry-formula oracle on random matrices", "[linalg]") {
    Prng rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix a = random_hermitian(3, rng);
        const ComplexMatrix b = random_hermitian(2, rng);
        CHECK(max_abs_diff(kron(a, b), oracles::kron_brute(a, b)) == 0.0);
        CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-10);
    }
}

TEST_CASE("trace basics", "[linalg]") {
    CHECK(ComplexMatrix::identity(4).trace() == cdouble{4.0, 0.0});
    const StateRecord rec = gen_werner(0.62);
    CHECK(std::abs(rec.rho.trace() - cdouble{1.0, 0.0}) < 1e-12);
}

TEST_CASE("partial trace reduces Bell state to the maximally mixed qubit", "[linalg]") {
    const ComplexMatrix reduced = partial_trace(bell_state(), {2, 2}, 1);
    CHECK(max_abs_diff(reduced, ComplexMatrix::identity(2) * cdouble{0.5, 0.0}) < 1e-15);
}

TEST_CASE("partial trace of a product equals factor times trace", "[linalg]") {
    Prng rng(12);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix a = random_hermitian(2, rng);
        const ComplexMatrix b = random_hermitian(3, rng);
        const ComplexMatrix prod = kron(a, b);
        const ComplexMatrix traced = partial_trace(prod, {2, 3}, 1);
        CHECK(max_abs_diff(traced, a * b.trace()) < 1e-12);
        // Tracing the remaining site gives the full trace.
        const ComplexMatrix all = partial_trace(traced, {2}, 0);
        CHECK(std::abs(all(0, 0) - prod.trace()) < 1e-12);
        // Against the raw contraction oracle.
        CHECK(max_abs_diff(traced, oracles::trace_out_last(prod, 3)) < 1e-13);
    }
}

TEST_CASE("partial trace validates dimensions", "[linalg]") {
    CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(4), {2, 3}, 0), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(4), {2, 2}, 2), std::invalid_argument);
}

TEST_CASE("first-layer reduction matches the index-contraction oracle", "[linalg]") {
    Prng rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix rho = oracles::random_density(rng);
        const ComplexMatrix m = random_hermitian(2, rng);
        const ComplexMatrix via_ops =
            partial_trace(rho * kron(ComplexMatrix::identity(2), m), {2, 2}, 1);
        CHECK(max_abs_diff(via_ops, oracles::first_layer_contraction(rho, m)) < 1e-12);
    }
}

TEST_CASE("partial transpose fixed points and involution", "[linalg]") {
    const ComplexMatrix mixed = ComplexMatrix::identity(4) * cdouble{0.25, 0.0};
    CHECK(max_abs_diff(partial_transpose(mixed, {2, 2}, 1), mixed) == 0.0);

    Prng rng(14);
    const ComplexMatrix rho = oracles::random_density(rng);
    const ComplexMatrix pt = partial_transpose(rho, {2, 2}, 1);
    CHECK(max_abs_diff(partial_transpose(pt, {2, 2}, 1), rho) == 0.0);  // involution, exact
    CHECK(pt.hermiticity_error() < 1e-15);
    CHECK(std::abs(pt.trace() - rho.trace()) < 1e-15);
}

TEST_CASE("partial transpose of the Bell state has eigenvalues {-1/2, 1/2 x3}", "[linalg]") {
    const ComplexMatrix pt = partial_transpose(bell_state(), {2, 2}, 1);
    const std::vector<double> eigs = hermitian_eigenvalues(pt);
    REQUIRE(eigs.size() == 4);
    CHECK(std::abs(eigs[0] + 0.5) < 1e-12);
    for (size_t k = 1; k < 4; ++k) {
        CHECK(std::abs(eigs[k] - 0.5) < 1e-12);
    }
    // Cross-check the minimum against the characteristic-polynomial oracle.
    CHECK(std::abs(oracles::min_eigenvalue_brute(pt) + 0.5) < 1e-8);
}

TEST_CASE("hermitian_eigenvalues on fixed examples", "[linalg]") {
    ComplexMatrix d(3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const std::vector<double> eigs = hermitian_eigenvalues(d);
    REQUIRE(eigs == std::vector<double>{1.0, 2.0, 3.0});

    const std::vector<double> xe = hermitian_eigenvalues(pauli_matrix(kPauliX));
    CHECK(std::abs(xe[0] + 1.0) < 1e-12);
    CHECK(std::abs(xe[1] - 1.0) < 1e-12);
}

TEST_CASE("Werner partial transpose minimum eigenvalue is (1-3p)/4", "[linalg]") {
    for (double p : {0.05, 0.2, 1.0 / 3.0, 0.5, 0.75, 0.95}) {
        const StateRecord rec = gen_werner(p);
        const ComplexMatrix pt = partial_transpose(rec.rho, {2, 2}, 1);
        const double lmin = hermitian_eigenvalues(pt).front();
        CHECK(std::abs(lmin - (1.0 - 3.0 * p) / 4.0) < 1e-12);
    }
}

TEST_CASE("eigenvalues sum to the trace and match the char-poly oracle", "[linalg]") {
    Prng rng(15);
    for (int rep = 0; rep < 50; ++rep) {
        const ComplexMatrix a = random_hermitian(4, rng);
        const std::vector<double> eigs = hermitian_eigenvalues(a);
        double sum = 0.0;
        for (double e : eigs) {
            sum += e;
        }
        CHECK(std::abs(sum - a.trace().real()) < 1e-9);
        CHECK(std::abs(eigs.front() - oracles::min_eigenvalue_brute(a)) < 1e-8);
    }
}

TEST_CASE("hermitian_eigenvalues rejects non-Hermitian input", "[linalg]") {
    ComplexMatrix bad(2);
    bad(0, 1) = 1.0;  // missing conjugate partner
    CHECK_THROWS_AS(hermitian_eigenvalues(bad), std::invalid_argument);
}

TEST_CASE("random_hermitian is Hermitian, deterministic and Pauli-bounded", "[linalg]") {
    Prng a(99), b(99);
    const ComplexMatrix m1 = random_hermitian(2, a);
    const ComplexMatrix m2 = random_hermitian(2, b);
    CHECK(m1 == m2);
    CHECK(m1.hermiticity_error() < 1e-12);

    Prng rng(100);
    for (int rep = 0; rep < 50; ++rep) {
        const ComplexMatrix m = random_hermitian(2, rng);
        const auto c = pauli_decompose(m);
        for (double v : c) {
            CHECK(std::abs(v) <= 1.0);
        }
    }
    for (size_t dim : {3, 4, 8}) {
        const ComplexMatrix m = random_hermitian(dim, rng);
        CHECK(m.dim() == dim);
        CHECK(m.hermiticity_error() < 1e-12);
    }
}
