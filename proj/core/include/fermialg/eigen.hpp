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
#include <vector>

#include "fermialg/dense.hpp"
#include "fermialg/sparse_operator.hpp"

namespace fermialg {

/// Default dimension cap of the dense eigensolver (2^11).
inline constexpr std::size_t kDefaultEigenCap = 2048;

/// Inputs with |h_ij - conj(h_ji)| above this (times max(1, max|h_ij|)) are
/// rejected as non-Hermitian.
inline constexpr double kHermitianTolerance = 1e-12;

/// Eigenvalues closer than this form one degenerate cluster.
inline constexpr double kDegeneracyGap = 1e-9;

struct EigenDecomposition {
    /// Ascending.
    std::vector<double> eigenvalues;
    /// eigenvectors[k] belongs to eigenvalues[k]; orthonormal.
    std::vector<DenseVector> eigenvectors;
};

/// Deterministic dense Hermitian eigensolver.
///
/// Householder reduction to a Hermitian tridiagonal, a diagonal phase change
/// making it real symmetric, then implicit-shift QL. Vectors inside each
/// degenerate cluster are re-orthonormalized by modified Gram-Schmidt in index
/// order, and every vector is rotated so its first largest-magnitude
/// component is real and positive.
EigenDecomposition hermitian_eigen(const SparseOperator& h, std::size_t cap = kDefaultEigenCap);
EigenDecomposition hermitian_eigen(const DenseMatrix& h);

/// exp(-i * theta * h) = V diag(exp(-i lambda_k theta)) V^dagger.
SparseOperator expm_hermitian(const SparseOperator& h, double theta, std::size_t cap = kDefaultEigenCap);

}  // namespace fermialg
