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

#pragma once

#include <cstddef>

#include "fermialg/sparse_operator.hpp"

namespace fermialg {

// Jordan-Wigner representation of Fermi operators.
//
// Mode j of an n-mode system is Kronecker factor j, counted from the left.
// The local basis is (1,0) = occupied, (0,1) = empty, so the vacuum is the
// last basis vector (index 2^n - 1) and the fully occupied state is index 0.
//
//   c_k^dagger = s3 (x) ... (x) s3 (x) (s+/2) (x) I2 (x) ... (x) I2
//                 \___ k-1 ___/      k-th

/// Largest mode count for sparse construction (dimension 2^24).
inline constexpr int kMaxModes = 24;

enum class Spin { up, down };

enum class MajoranaComponent { first = 1, second = 2 };

namespace pauli {
SparseOperator identity();
SparseOperator sigma1();
SparseOperator sigma2();
SparseOperator sigma3();
/// s+ = s1 + i s2 = [[0,2],[0,0]].
SparseOperator sigma_plus();
/// s- = s1 - i s2 = [[0,0],[2,0]].
SparseOperator sigma_minus();
}  // namespace pauli

std::size_t mode_dimension(int n);
std::size_t vacuum_index(int n);

/// True when `mode` (1-based) is occupied in Fock basis state `index`.
bool is_occupied(int n, std::size_t index, int mode);

SparseOperator creation(int n, int k);
SparseOperator annihilation(int n, int k);

/// sum_j c_j^dagger c_j; diagonal with the occupied-mode count of each basis state.
SparseOperator number_operator(int n);

/// c_n^dagger ... c_2^dagger c_1^dagger, built by multiplying the factors.
SparseOperator product_raising(int n);
/// c_1 c_2 ... c_n, built by multiplying the factors.
SparseOperator product_lowering(int n);

/// [[0,1],[0,0]]^{(x) n}; equals product_raising(n).
SparseOperator product_raising_closed_form(int n);
/// [[0,0],[1,0]]^{(x) n}; equals product_lowering(n).
SparseOperator product_lowering_closed_form(int n);

/// K = product_raising(n) + product_lowering(n).
SparseOperator hamiltonian_k(int n);
/// The two-corner form of K: ones at (0, 2^n-1) and (2^n-1, 0).
SparseOperator hamiltonian_k_closed_form(int n);

/// gamma_{j1} = c_j^dagger + c_j, gamma_{j2} = i (c_j^dagger - c_j).
SparseOperator majorana(int n, int j, MajoranaComponent comp);

// Spinful model over 2n Jordan-Wigner positions: up-spin mode k sits at
// position k, down-spin mode k at position k + n.

int spin_position(int n, int k, Spin s);
SparseOperator spin_creation(int n, int k, Spin s);
SparseOperator spin_annihilation(int n, int k, Spin s);

/// Sum of the up and down raising chains and their adjoints.
SparseOperator hamiltonian_spin(int n);
SparseOperator number_spin(int n);
/// S_z = (N_up - N_down) / 2.
SparseOperator sz(int n);

}  // namespace fermialg
