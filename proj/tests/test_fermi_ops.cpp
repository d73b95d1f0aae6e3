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

#include "fermialg/fermi_ops.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <map>

#include "fermialg/eigen.hpp"
#include "fermialg/errors.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

using namespace fermialg;
using namespace fermialg::testing;

namespace {

const Complex kI{0.0, 1.0};

void expect_car(int n, const std::function<SparseOperator(int)>& up, const std::function<SparseOperator(int)>& down,
                int modes) {
    const std::size_t dim = std::size_t{1} << n;
    const SparseOperator id = SparseOperator::identity(dim);
    const SparseOperator zero(dim);
    for (int j = 1; j <= modes; ++j) {
        for (int k = 1; k <= modes; ++k) {
            EXPECT_EQ(anticommutator(up(j), down(k)), j == k ? id : zero) << n << ":" << j << "," << k;
            EXPECT_EQ(anticommutator(down(j), down(k)), zero);
            EXPECT_EQ(anticommutator(up(j), up(k)), zero);
        }
    }
}

}  // namespace

TEST(fermi_ops, single_mode_matrices) {
    EXPECT_EQ(creation(1, 1), SparseOperator(2, {{0, 1, 1.0}}));
    EXPECT_EQ(annihilation(1, 1), SparseOperator(2, {{1, 0, 1.0}}));
    EXPECT_EQ(number_operator(1), SparseOperator(2, {{0, 0, 1.0}}));
    EXPECT_EQ(creation(1, 1) * annihilation(1, 1), number_operator(1));
    EXPECT_EQ(hamiltonian_k(1), pauli::sigma1());
}

TEST(fermi_ops, pauli_ladder_matrices) {
    EXPECT_EQ(pauli::sigma_plus(), SparseOperator(2, {{0, 1, 2.0}}));
    EXPECT_EQ(pauli::sigma_minus(), SparseOperator(2, {{1, 0, 2.0}}));
}

TEST(fermi_ops, two_mode_matrices) {
    EXPECT_EQ(annihilation(2, 1), kron(0.5 * pauli::sigma_minus(), pauli::identity()));
    EXPECT_EQ(annihilation(2, 2), kron(pauli::sigma3(), 0.5 * pauli::sigma_minus()));
    EXPECT_EQ(annihilation(2, 1) * annihilation(2, 2), SparseOperator(4, {{3, 0, 1.0}}));
    EXPECT_EQ(hamiltonian_k(2), SparseOperator(4, {{0, 3, 1.0}, {3, 0, 1.0}}));
    EXPECT_EQ(number_operator(2), SparseOperator::diagonal(std::vector<Complex>{2.0, 1.0, 1.0, 0.0}));
    EXPECT_EQ(number_operator(2), creation(2, 1) * annihilation(2, 1) + creation(2, 2) * annihilation(2, 2));
}

TEST(fermi_ops, basis_ordering_matches_fock_states) {
    // c2+ c1+ |0>, c1+ |0>, -c2+ |0>, |0> are e_0, e_1, e_2, e_3.
    const DenseVector vac = DenseVector::basis(4, vacuum_index(2));
    EXPECT_EQ(vacuum_index(2), 3u);
    EXPECT_EQ(apply(creation(2, 2) * creation(2, 1), vac), DenseVector::basis(4, 0));
    EXPECT_EQ(apply(creation(2, 1), vac), DenseVector::basis(4, 1));
    // The string sigma3 sees an empty first mode.
    EXPECT_EQ(apply(creation(2, 2), vac), DenseVector(std::vector<Complex>{0.0, 0.0, -1.0, 0.0}));
}

TEST(fermi_ops, creation_three_modes_is_adjoint_of_jordan_wigner_chain) {
    SparseOperator chain = kron(kron(pauli::sigma3(), 0.5 * pauli::sigma_minus()), pauli::identity());
    EXPECT_EQ(creation(3, 2), adjoint(chain));
    EXPECT_EQ(annihilation(3, 2), chain);
}

TEST(fermi_ops, car_up_to_six_modes) {
    for (int n = 1; n <= 6; ++n) {
        expect_car(n, [n](int k) { return creation(n, k); }, [n](int k) { return annihilation(n, k); }, n);
    }
}

TEST(fermi_ops, annihilation_kills_vacuum) {
    for (int n = 1; n <= 6; ++n) {
        const DenseVector vac = DenseVector::basis(mode_dimension(n), vacuum_index(n));
        for (int k = 1; k <= n; ++k) {
            EXPECT_EQ(norm(apply(annihilation(n, k), vac)), 0.0);
        }
    }
}

TEST(fermi_ops, number_operator_counts_occupation) {
    for (int n = 1; n <= 8; ++n) {
        SparseOperator num = number_operator(n);
        const std::size_t dim = mode_dimension(n);
        EXPECT_EQ(trace(num).real(), n * static_cast<double>(dim / 2));
        for (std::size_t b = 0; b < dim; ++b) {
            EXPECT_EQ(num.at(b, b).real(), n - std::popcount(b));
        }
        if (n <= 5) {
            SparseOperator sum(dim);
            for (int k = 1; k <= n; ++k) {
                sum = sum + creation(n, k) * annihilation(n, k);
            }
            EXPECT_EQ(num, sum);
        }
    }
}

TEST(fermi_ops, product_operators) {
    EXPECT_EQ(product_lowering(2), SparseOperator(4, {{3, 0, 1.0}}));
    EXPECT_EQ(product_raising(1), creation(1, 1));
    EXPECT_EQ(product_raising(4), SparseOperator(16, {{0, 15, 1.0}}));
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(product_lowering(n), adjoint(product_raising(n)));
        EXPECT_EQ(product_raising(n), product_raising_closed_form(n));
        EXPECT_EQ(product_lowering(n), product_lowering_closed_form(n));
    }
}

TEST(fermi_ops, hamiltonian_closed_form) {
    EXPECT_EQ(hamiltonian_k(5), SparseOperator(32, {{0, 31, 1.0}, {31, 0, 1.0}}));
    for (int n = 2; n <= 10; ++n) {
        SparseOperator k = hamiltonian_k(n);
        EXPECT_EQ(k, hamiltonian_k_closed_form(n)) << n;
        EXPECT_EQ(k.nnz(), 2u);
        EXPECT_EQ(k, adjoint(k));
    }
}

TEST(fermi_ops, k_does_not_commute_with_n) {
    for (int n = 1; n <= 8; ++n) {
        EXPECT_FALSE(commutator(hamiltonian_k(n), number_operator(n)).is_zero()) << n;
    }
}

TEST(fermi_ops, minus_sign_combination_single_mode) {
    // c - c^dagger is the explicit matrix [[0,-1],[1,0]] (= -i s2).
    SparseOperator diff = annihilation(1, 1) - creation(1, 1);
    EXPECT_EQ(diff, SparseOperator(2, {{0, 1, -1.0}, {1, 0, 1.0}}));
    EXPECT_EQ(diff, -kI * pauli::sigma2());
}

TEST(fermi_ops, majorana_single_mode) {
    EXPECT_EQ(majorana(1, 1, MajoranaComponent::first), pauli::sigma1());
    EXPECT_EQ(majorana(1, 1, MajoranaComponent::second), SparseOperator(2, {{0, 1, kI}, {1, 0, -kI}}));
    EXPECT_TRUE(anticommutator(majorana(3, 1, MajoranaComponent::first), majorana(3, 1, MajoranaComponent::second))
                    .is_zero());
}

TEST(fermi_ops, majorana_algebra_up_to_four_modes) {
    for (int n = 1; n <= 4; ++n) {
        const SparseOperator id = SparseOperator::identity(mode_dimension(n));
        std::vector<SparseOperator> gammas;
        for (int j = 1; j <= n; ++j) {
            for (auto comp : {MajoranaComponent::first, MajoranaComponent::second}) {
                gammas.push_back(majorana(n, j, comp));
            }
        }
        for (std::size_t a = 0; a < gammas.size(); ++a) {
            EXPECT_EQ(gammas[a], adjoint(gammas[a]));
            EXPECT_EQ(gammas[a] * gammas[a], id);
            for (std::size_t b = 0; b < gammas.size(); ++b) {
                EXPECT_EQ(anticommutator(gammas[a], gammas[b]), a == b ? 2.0 * id : SparseOperator(id.dim()));
            }
        }
        // c_j = (gamma_j1 + i gamma_j2) / 2
        for (int j = 1; j <= n; ++j) {
            EXPECT_EQ(0.5 * (gammas[2 * (j - 1)] + kI * gammas[2 * (j - 1) + 1]), annihilation(n, j));
        }
    }
}

TEST(fermi_ops, spin_positions) {
    EXPECT_EQ(spin_creation(1, 1, Spin::up), creation(2, 1));
    EXPECT_EQ(spin_creation(2, 1, Spin::down), creation(4, 3));
    EXPECT_EQ(spin_annihilation(2, 2, Spin::down), annihilation(4, 4));
    std::vector<SparseOperator> ups;
    std::vector<SparseOperator> downs;
    for (Spin s : {Spin::up, Spin::down}) {
        for (int k = 1; k <= 2; ++k) {
            ups.push_back(spin_creation(2, k, s));
            downs.push_back(spin_annihilation(2, k, s));
        }
    }
    expect_car(4, [&](int k) { return ups[k - 1]; }, [&](int k) { return downs[k - 1]; }, 4);
}

TEST(fermi_ops, spin_hamiltonian_spectrum) {
    // Independent multiplicity oracle: the up and down chains act on separate
    // factors for n = 2, so the spectrum is {a + b} over K(2)'s spectrum twice.
    const double single[] = {-1.0, 0.0, 0.0, 1.0};
    std::map<int, int> expected;
    for (double a : single) {
        for (double b : single) {
            ++expected[static_cast<int>(a + b)];
        }
    }
    EigenDecomposition eig = hermitian_eigen(hamiltonian_spin(2));
    std::map<int, int> found;
    for (double v : eig.eigenvalues) {
        const double r = std::round(v);
        EXPECT_NEAR(v, r, 1e-12);
        ++found[static_cast<int>(r)];
    }
    EXPECT_EQ(found, expected);
    EXPECT_EQ(found.size(), 5u);
}

TEST(fermi_ops, spin_operator_commutators) {
    for (int n = 1; n <= 3; ++n) {
        SparseOperator k = hamiltonian_spin(n);
        SparseOperator num = number_spin(n);
        SparseOperator s = sz(n);
        EXPECT_TRUE(commutator(num, s).is_zero());
        EXPECT_FALSE(commutator(k, s).is_zero());
        EXPECT_FALSE(commutator(k, num).is_zero());
        EXPECT_EQ(k, adjoint(k));
        SparseOperator up_count(num.dim());
        SparseOperator down_count(num.dim());
        for (int j = 1; j <= n; ++j) {
            up_count = up_count + spin_creation(n, j, Spin::up) * spin_annihilation(n, j, Spin::up);
            down_count = down_count + spin_creation(n, j, Spin::down) * spin_annihilation(n, j, Spin::down);
        }
        EXPECT_EQ(s, 0.5 * (up_count - down_count));
        EXPECT_EQ(num, up_count + down_count);
    }
}

TEST(fermi_ops, argument_errors) {
    EXPECT_THROW(creation(3, 0), DomainError);
    EXPECT_THROW(creation(3, 4), DomainError);
    EXPECT_THROW(number_operator(0), DomainError);
    EXPECT_THROW(number_operator(kMaxModes + 1), CapacityError);
    EXPECT_THROW(hamiltonian_spin(13), CapacityError);
    EXPECT_THROW(spin_creation(2, 3, Spin::up), DomainError);
}
