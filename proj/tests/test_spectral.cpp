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

#include "fermialg/spectral.hpp"

#include <cmath>
#include <numbers>

#include "fermialg/errors.hpp"
#include "fermialg/fermi_ops.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

using namespace fermialg;
using namespace fermialg::testing;

namespace {

const Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

}  // namespace

TEST(k_spectrum_analytic, two_modes) {
    SpectrumResult s = k_spectrum_analytic(2);
    ASSERT_EQ(s.spaces.size(), 3u);
    EXPECT_EQ(s.provenance, SpectrumProvenance::analytic);
    EXPECT_EQ(s.spaces[0].value, -1.0);
    EXPECT_EQ(s.spaces[1].value, 0.0);
    EXPECT_EQ(s.spaces[1].multiplicity(), 2u);
    EXPECT_EQ(s.spaces[2].value, 1.0);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_EQ(s.spaces[0].basis[0], DenseVector(std::vector<Complex>{r, 0.0, 0.0, -r}));
    EXPECT_EQ(s.spaces[2].basis[0], DenseVector(std::vector<Complex>{r, 0.0, 0.0, r}));
    EXPECT_EQ(s.spaces[1].basis[0], DenseVector::basis(4, 1));
    EXPECT_EQ(s.spaces[1].basis[1], DenseVector::basis(4, 2));
}

TEST(k_spectrum_analytic, single_mode_hadamard_and_large_n) {
    SpectrumResult one = k_spectrum_analytic(1);
    ASSERT_EQ(one.spaces.size(), 2u);
    EXPECT_EQ(one.spaces[0].basis[0][1].real(), -1.0 / std::sqrt(2.0));
    SpectrumResult six = k_spectrum_analytic(6);
    EXPECT_EQ(six.spaces[1].multiplicity(), 62u);
    EXPECT_THROW(k_spectrum_analytic(0), DomainError);
}

TEST(k_spectrum_analytic, eigen_equations_hold) {
    for (int n = 1; n <= 7; ++n) {
        SparseOperator k = hamiltonian_k(n);
        std::size_t total = 0;
        for (const Eigenspace& space : k_spectrum_analytic(n).spaces) {
            for (const DenseVector& v : space.basis) {
                DenseVector kv = apply(k, v);
                for (std::size_t i = 0; i < v.dim(); ++i) {
                    EXPECT_LT(std::abs(kv[i] - space.value * v[i]), 1e-15);
                }
                ++total;
            }
        }
        EXPECT_EQ(total, mode_dimension(n));
    }
}

TEST(cross_check_spectrum, analytic_matches_numeric) {
    for (int n = 2; n <= 8; ++n) {
        SpectrumComparison c = cross_check_spectrum(n);
        EXPECT_TRUE(c.same_multiplicities) << n;
        EXPECT_LT(c.eigenvalue_error, 1e-10) << n;
        EXPECT_LT(c.projector_error, 1e-8) << n;
    }
    EXPECT_THROW(cross_check_spectrum(12), CapacityError);
}

TEST(numeric_spectrum, number_operator_two_modes) {
    SpectrumResult s = numeric_spectrum(number_operator(2));
    ASSERT_EQ(s.spaces.size(), 3u);
    EXPECT_NEAR(s.spaces[0].value, 0.0, 1e-14);
    EXPECT_NEAR(s.spaces[1].value, 1.0, 1e-14);
    EXPECT_NEAR(s.spaces[2].value, 2.0, 1e-14);
    EXPECT_EQ(s.spaces[1].multiplicity(), 2u);
    EXPECT_NEAR(std::abs(s.spaces[0].basis[0][3]), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(s.spaces[2].basis[0][0]), 1.0, 1e-14);
    DenseMatrix p = eigenspace_projector(s.spaces[1], 4);
    EXPECT_NEAR(p(1, 1).real(), 1.0, 1e-14);
    EXPECT_NEAR(p(2, 2).real(), 1.0, 1e-14);
}

TEST(propagator, two_mode_closed_form) {
    for (double theta : {0.0, 0.37, 1.0, kPi / 2}) {
        Dense expected = zeros(4);
        expected[0][0] = expected[3][3] = std::cos(theta);
        expected[0][3] = expected[3][0] = -kI * std::sin(theta);
        expected[1][1] = expected[2][2] = 1.0;
        EXPECT_LT(max_diff(expected, propagator(2, theta)), 1e-15);
    }
    EXPECT_EQ(propagator(3, 0.0), SparseOperator::identity(8));
}

TEST(propagator, matches_generic_exponential) {
    for (int n = 1; n <= 8; ++n) {
        for (double theta : {0.37, 1.9}) {
            EXPECT_LT(max_abs_diff(propagator(n, theta), expm_hermitian(hamiltonian_k(n), theta)), 1e-10) << n;
        }
    }
    EXPECT_LT(max_diff(taylor_expm(to_dense_oracle(hamiltonian_k(3)), 0.37), propagator(3, 0.37)), 1e-13);
}

TEST(propagator, unitary_with_group_law) {
    for (int n = 1; n <= 6; ++n) {
        const SparseOperator id = SparseOperator::identity(mode_dimension(n));
        SparseOperator u = propagator(n, 0.81);
        EXPECT_LT(max_abs_diff(u * adjoint(u), id), 1e-12);
        EXPECT_LT(max_abs_diff(propagator(n, 0.3) * propagator(n, 0.51), u), 1e-10);
    }
}

TEST(evolve_state, vacuum_transfers_to_full_state) {
    for (int n = 1; n <= 6; ++n) {
        const std::size_t dim = mode_dimension(n);
        DenseVector out = evolve_state(DenseVector::basis(dim, vacuum_index(n)), n, kPi / 2);
        EXPECT_LT(std::abs(out[0] + kI), 1e-15);
        EXPECT_LT(std::abs(out[dim - 1]), 1e-15);
        // Number is not conserved: <N> goes from 0 to n.
        EXPECT_NEAR(expectation(number_operator(n), out).real(), n, 1e-12);
    }
}

TEST(evolve_state, zero_space_vector_is_stationary) {
    for (double theta : {0.2, 1.7, 3.0}) {
        EXPECT_EQ(evolve_state(DenseVector::basis(8, 1), 3, theta), DenseVector::basis(8, 1));
    }
}

TEST(evolve_state, plus_eigenvector_picks_up_phase) {
    const double r = 1.0 / std::sqrt(2.0);
    DenseVector psi(std::vector<Complex>{r, 0.0, 0.0, r});
    const double theta = 0.9;
    DenseVector out = evolve_state(psi, 2, theta);
    const Complex phase = std::polar(1.0, -theta);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_LT(std::abs(out[i] - phase * psi[i]), 1e-15);
    }
}

TEST(evolve_state, conserves_norm_and_energy) {
    Lcg rng;
    for (int n = 1; n <= 5; ++n) {
        SparseOperator k = hamiltonian_k(n);
        DenseVector psi = random_state(rng, mode_dimension(n));
        const double energy = expectation(k, psi).real();
        for (double theta : {0.1, 0.7, 2.5}) {
            DenseVector out = evolve_state(psi, n, theta);
            EXPECT_NEAR(norm(out), 1.0, 1e-10);
            EXPECT_NEAR(expectation(k, out).real(), energy, 1e-10);
        }
    }
}

TEST(evolve_state, errors) {
    EXPECT_THROW(evolve_state(DenseVector::basis(4, 0), 3, 0.1), DimensionError);
    DenseVector unnormalized(std::vector<Complex>{1.0, 1.0});
    EXPECT_THROW(evolve_state(unnormalized, 1, 0.1), DomainError);
    EXPECT_THROW(heisenberg_evolve(number_operator(2), 3, 0.1), DimensionError);
}

TEST(heisenberg_evolve, examples) {
    for (double theta : {0.0, 0.4, 2.2}) {
        EXPECT_LT(max_abs_diff(heisenberg_evolve(hamiltonian_k(3), 3, theta), hamiltonian_k(3)), 1e-15);
        EXPECT_NEAR(trace(heisenberg_evolve(number_operator(2), 2, theta)).real(), 4.0, 1e-12);
    }
    // 2x2 by hand: U = [[0,-i],[-i,0]] at pi/2, U^dagger N U = [[0,0],[0,1]].
    EXPECT_LT(max_abs_diff(heisenberg_evolve(number_operator(1), 1, kPi / 2), SparseOperator(2, {{1, 1, 1.0}})), 1e-15);
}

TEST(heisenberg_evolve, preserves_trace_moments) {
    for (int n = 1; n <= 4; ++n) {
        SparseOperator a = number_operator(n) + 0.3 * creation(n, 1) + 0.3 * annihilation(n, 1);
        SparseOperator b = heisenberg_evolve(a, n, 1.3);
        SparseOperator pa = a;
        SparseOperator pb = b;
        for (int k = 1; k <= 3; ++k) {
            EXPECT_NEAR(std::abs(trace(pa) - trace(pb)), 0.0, 1e-9);
            pa = pa * a;
            pb = pb * b;
        }
    }
}
