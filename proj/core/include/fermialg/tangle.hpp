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

#include <string>
#include <vector>

#include "fermialg/sparse_operator.hpp"

namespace fermialg {

/// Largest qubit count accepted by the literal quadruple sum (2^{4n} tuples).
inline constexpr int kMaxDirectTangleQubits = 6;

enum class TangleMethod { direct, factorized };

struct TangleResult {
    double value = 0.0;
    int n = 0;
    TangleMethod method = TangleMethod::direct;
};

/// eps_00 = eps_11 = 0, eps_01 = 1, eps_10 = -1.
constexpr int epsilon(int j, int k) { return j == k ? 0 : (j == 0 ? 1 : -1); }

/// Wong-Christensen n-tangle of a pure n-qubit state (n even or n == 3).
///
/// Amplitude c_{j1...jn} is psi[index] with j1 the most significant bit, i.e.
/// qubit j is Kronecker factor j.
TangleResult n_tangle(const DenseVector& psi, int n, TangleMethod method = TangleMethod::direct);

/// Literal sum over all (alpha, beta, gamma, delta) bitstrings with
/// compensated accumulation. Reference for any faster path.
double n_tangle_direct(const DenseVector& psi, int n);

/// Same quantity via the contraction M_ab = sum_x (-1)^{|x|} c_{x a} c_{~x b}
/// over the first n-1 qubits, giving tau = 4 |det M|.
double n_tangle_factorized(const DenseVector& psi, int n);

struct EntanglementRow {
    std::string label;
    double eigenvalue = 0.0;
    double tangle = 0.0;
};

/// Tangle of the K eigenvectors: both +-1 vectors, every zero-eigenspace basis
/// vector e_j, and the zero-eigenspace combination (e_1 + e_{2^n-2})/sqrt2.
/// Uses the direct sum up to four qubits and the factorized one beyond.
std::vector<EntanglementRow> classify_eigenspace_entanglement(int n);

}  // namespace fermialg
