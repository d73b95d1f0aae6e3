// Copyright 2026 The fermialg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fermialg/tangle.hpp"

#include <chrono>
#include <cmath>

#include "fermialg/errors.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

using namespace fermialg;
using namespace fermialg::testing;

namespace {

DenseVector ghz(int n, double sign) {
    const std::size_t dim = std::size_t{1} << n;
    return normalized(dim, {{0, 1.0}, {dim - 1, sign}});
}

}  // namespace

TEST(epsilon, table) {
    EXPECT_EQ(epsilon(0, 0), 0);
    EXPECT_EQ(epsilon(1, 1), 0);
    EXPECT_EQ(epsilon(0, 1), 1);
    EXPECT_EQ(epsilon(1, 0), -1);
}

TEST(n_tangle, k_eigenvectors_are_fully_entangled) {
    for (int n : {2, 3, 4}) {
        for (double sign : {1.0, -1.0}) {
            DenseVector psi = ghz(n, sign);
            EXPECT_NEAR(tangle_oracle(psi, n), 1.0, 1e-12);
            TangleResult t = n_tangle(psi, n);
            EXPECT_EQ(t.method, TangleMethod::direct);
            EXPECT_NEAR(t.value, 1.0, 1e-9);
        }
    }
}

TEST(n_tangle, product_states_vanish) {
    for (int n : {2, 3, 4}) {
        const std::size_t dim = std::size_t{1} << n;
        for (std::size_t j = 0; j < dim; ++j) {
            DenseVector e = DenseVector::basis(dim, j);
            EXPECT_EQ(tangle_oracle(e, n), 0.0);
            EXPECT_LT(n_tangle_direct(e, n), 1e-12);
            EXPECT_LT(n_tangle_factorized(e, n), 1e-12);
        }
    }
}

TEST(n_tangle, frozen_oracle_values) {
    // Frozen from an independent numpy enumeration of the definition.
    DenseVector bell = normalized(4, {{1, 1.0}, {2, 1.0}});
    EXPECT_NEAR(n_tangle_direct(bell, 2), 1.0, 1e-12);
    DenseVector w = normalized(8, {{3, 1.0}, {5, 1.0}, {6, 1.0}});
    EXPECT_LT(n_tangle_direct(w, 3), 1e-12);
    DenseVector custom2 = normalized(4, {{0, 1.0}, {1, Complex{0.0, 2.0}}, {2, -1.0}, {3, 0.5}});
    EXPECT_NEAR(n_tangle_direct(custom2, 2), 0.4352, 1e-12);
    DenseVector custom3 = normalized(8, {{0, 1.0},
                                         {1, Complex{0.0, 0.5}},
                                         {2, -1.0},
                                         {3, 2.0},
                                         {5, Complex{0.0, 1.0}},
                                         {6, 0.25},
                                         {7, -0.5}});
    EXPECT_NEAR(n_tangle_direct(custom3, 3), 0.10600368827265899, 1e-12);
}

TEST(n_tangle, invariances_and_bounds_on_random_states) {
    Lcg rng;
    for (int n : {2, 3, 4}) {
        const std::size_t dim = std::size_t{1} << n;
        for (int trial = 0; trial < 100; ++trial) {
            DenseVector psi = random_state(rng, dim);
            const double direct = n_tangle_direct(psi, n);
            EXPECT_GE(direct, 0.0);
            EXPECT_LE(direct, 1.0 + 1e-9);
            EXPECT_NEAR(n_tangle_factorized(psi, n), direct, 1e-9);
            if (trial < 5) {
                EXPECT_NEAR(tangle_oracle(psi, n), direct, 1e-12);
            }

            DenseVector phased = psi;
            const Complex phase = std::polar(1.0, 0.7 + trial);
            for (auto& x : phased.amplitudes) {
                x *= phase;
            }
            EXPECT_NEAR(n_tangle_direct(phased, n), direct, 1e-12);

            DenseVector flipped(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                flipped[i] = psi[(dim - 1) ^ i];
            }
            EXPECT_NEAR(n_tangle_direct(flipped, n), direct, 1e-12);
        }
    }
}

TEST(n_tangle, local_phase_exact_on_ghz) {
    DenseVector psi = ghz(2, 1.0);
    DenseVector phased = psi;
    for (auto& x : phased.amplitudes) {
        x *= Complex{0.0, 1.0};
    }
    EXPECT_EQ(n_tangle_direct(phased, 2), n_tangle_direct(psi, 2));
}

TEST(n_tangle, errors) {
    EXPECT_THROW(n_tangle(DenseVector::basis(32, 0), 5), DomainError);
    EXPECT_THROW(n_tangle(DenseVector::basis(2, 0), 1), DomainError);
    EXPECT_THROW(n_tangle(DenseVector::basis(8, 0), 2), DimensionError);
    EXPECT_THROW(n_tangle(DenseVector(std::vector<Complex>{1.0, 1.0, 0.0, 0.0}), 2), DomainError);
    EXPECT_THROW(n_tangle_direct(DenseVector::basis(256, 0), 8), CapacityError);
    EXPECT_NO_THROW(n_tangle_factorized(DenseVector::basis(256, 0), 8));
}

TEST(n_tangle, direct_six_qubits_matches_factorized) {
    Lcg rng;
    DenseVector psi = random_state(rng, 64);
    EXPECT_NEAR(n_tangle_direct(psi, 6), n_tangle_factorized(psi, 6), 1e-9);
}

TEST(classify_eigenspace_entanglement, two_modes) {
    auto rows = classify_eigenspace_entanglement(2);
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_NEAR(rows[0].tangle, 1.0, 1e-9);
    EXPECT_NEAR(rows[1].tangle, 1.0, 1e-9);
    EXPECT_LT(rows[2].tangle, 1e-12);
    EXPECT_LT(rows[3].tangle, 1e-12);
    EXPECT_EQ(rows[4].label, "(e_1 + e_2)/sqrt2");
    EXPECT_NEAR(rows[4].tangle, 1.0, 1e-9);
}

TEST(classify_eigenspace_entanglement, three_and_four_modes) {
    for (int n : {3, 4}) {
        const auto start = std::chrono::steady_clock::now();
        auto rows = classify_eigenspace_entanglement(n);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        EXPECT_LT(seconds, 5.0);
        EXPECT_NEAR(rows[0].tangle, 1.0, 1e-9);
        EXPECT_NEAR(rows[1].tangle, 1.0, 1e-9);
        for (std::size_t i = 2; i + 1 < rows.size(); ++i) {
            EXPECT_LT(rows[i].tangle, 1e-12) << rows[i].label;
        }
    }
    EXPECT_THROW(classify_eigenspace_entanglement(5), DomainError);
}
