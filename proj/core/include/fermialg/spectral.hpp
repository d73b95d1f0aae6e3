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

#include "fermialg/eigen.hpp"
#include "fermialg/sparse_operator.hpp"

namespace fermialg {

enum class SpectrumProvenance { analytic, numeric };

struct Eigenspace {
    double value = 0.0;
    std::vector<DenseVector> basis;

    std::size_t multiplicity() const { return basis.size(); }
};

/// Eigenspaces in ascending eigenvalue order.
struct SpectrumResult {
    std::size_t dim = 0;
    std::vector<Eigenspace> spaces;
    SpectrumProvenance provenance = SpectrumProvenance::numeric;
};

/// Closed-form spectrum of K: +1 on (e_0 + e_last)/sqrt2, -1 on
/// (e_0 - e_last)/sqrt2, and 0 on every other basis vector (2^n - 2 of them).
/// For n = 1 this is the Hadamard pair.
SpectrumResult k_spectrum_analytic(int n);

/// Dense eigendecomposition grouped into clusters of gap < kDegeneracyGap.
/// Each cluster's value is the mean of its members.
SpectrumResult numeric_spectrum(const SparseOperator& h, std::size_t cap = kDefaultEigenCap);

/// Orthogonal projector onto an eigenspace, as a dense matrix.
DenseMatrix eigenspace_projector(const Eigenspace& space, std::size_t dim);

struct SpectrumComparison {
    int n = 0;
    bool same_multiplicities = false;
    /// Largest |analytic - numeric| over paired eigenvalues.
    double eigenvalue_error = 0.0;
    /// Largest Frobenius distance between paired eigenprojectors.
    double projector_error = 0.0;
};

/// Compares k_spectrum_analytic(n) with numeric_spectrum(hamiltonian_k(n)).
SpectrumComparison cross_check_spectrum(int n, std::size_t cap = kDefaultEigenCap);

/// exp(-i theta K) in closed form: identity except the block on {0, 2^n-1},
/// which is [[cos, -i sin], [-i sin, cos]].
SparseOperator propagator(int n, double theta);

/// U(theta) psi. Requires a unit vector of dimension 2^n.
DenseVector evolve_state(const DenseVector& psi, int n, double theta);

/// U(theta)^dagger a U(theta).
SparseOperator heisenberg_evolve(const SparseOperator& a, int n, double theta);

/// <psi| a |psi>.
Complex expectation(const SparseOperator& a, const DenseVector& psi);

}  // namespace fermialg
