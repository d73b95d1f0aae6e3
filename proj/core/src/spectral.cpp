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

#include <algorithm>
#include <cmath>
#include <string>

#include "fermialg/errors.hpp"
#include "fermialg/fermi_ops.hpp"

namespace fermialg {

namespace {

constexpr double kNormTolerance = 1e-10;

double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            sum += std::norm(a(i, j) - b(i, j));
        }
    }
    return std::sqrt(sum);
}

}  // namespace

SpectrumResult k_spectrum_analytic(int n) {
    const std::size_t dim = mode_dimension(n);
    const std::size_t last = dim - 1;
    const double r = 1.0 / std::sqrt(2.0);

    SpectrumResult out;
    out.dim = dim;
    out.provenance = SpectrumProvenance::analytic;

    Eigenspace minus{-1.0, {DenseVector(dim)}};
    minus.basis[0][0] = r;
    minus.basis[0][last] = -r;
    out.spaces.push_back(std::move(minus));

    if (dim > 2) {
        Eigenspace zero{0.0, {}};
        for (std::size_t j = 1; j < last; ++j) {
            zero.basis.push_back(DenseVector::basis(dim, j));
        }
        out.spaces.push_back(std::move(zero));
    }

    Eigenspace plus{1.0, {DenseVector(dim)}};
    plus.basis[0][0] = r;
    plus.basis[0][last] = r;
    out.spaces.push_back(std::move(plus));
    return out;
}

SpectrumResult numeric_spectrum(const SparseOperator& h, std::size_t cap) {
    EigenDecomposition eig = hermitian_eigen(h, cap);
    SpectrumResult out;
    out.dim = h.dim();
    out.provenance = SpectrumProvenance::numeric;
    const std::size_t n = eig.eigenvalues.size();
    for (std::size_t begin = 0; begin < n;) {
        std::size_t end = begin + 1;
        while (end < n && eig.eigenvalues[end] - eig.eigenvalues[end - 1] < kDegeneracyGap) {
            ++end;
        }
        Eigenspace space;
        double sum = 0.0;
        for (std::size_t k = begin; k < end; ++k) {
            sum += eig.eigenvalues[k];
            space.basis.push_back(std::move(eig.eigenvectors[k]));
        }
        space.value = sum / static_cast<double>(end - begin);
        out.spaces.push_back(std::move(space));
        begin = end;
    }
    return out;
}

DenseMatrix eigenspace_projector(const Eigenspace& space, std::size_t dim) {
    DenseMatrix p(dim, dim);
    for (const DenseVector& v : space.basis) {
        if (v.dim() != dim) {
            throw DimensionError("eigenspace_projector: vector dimension mismatch");
        }
        for (std::size_t i = 0; i < dim; ++i) {
            if (v[i] == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < dim; ++j) {
                p(i, j) += v[i] * std::conj(v[j]);
            }
        }
    }
    return p;
}

SpectrumComparison cross_check_spectrum(int n, std::size_t cap) {
    const SpectrumResult analytic = k_spectrum_analytic(n);
    const SpectrumResult numeric = numeric_spectrum(hamiltonian_k(n), cap);

    SpectrumComparison out;
    out.n = n;
    out.same_multiplicities = analytic.spaces.size() == numeric.spaces.size();
    if (!out.same_multiplicities) {
        out.eigenvalue_error = INFINITY;
        out.projector_error = INFINITY;
        return out;
    }
    for (std::size_t s = 0; s < analytic.spaces.size(); ++s) {
        const Eigenspace& a = analytic.spaces[s];
        const Eigenspace& b = numeric.spaces[s];
        if (a.multiplicity() != b.multiplicity()) {
            out.same_multiplicities = false;
        }
        out.eigenvalue_error = std::max(out.eigenvalue_error, std::abs(a.value - b.value));
        out.projector_error = std::max(
            out.projector_error,
            frobenius_distance(eigenspace_projector(a, analytic.dim), eigenspace_projector(b, numeric.dim)));
    }
    return out;
}

SparseOperator propagator(int n, double theta) {
    if (!std::isfinite(theta)) {
        throw DomainError("propagator: non-finite theta");
    }
    const std::size_t dim = mode_dimension(n);
    const auto last = static_cast<std::uint32_t>(dim - 1);
    const Complex c{std::cos(theta), 0.0};
    const Complex s{0.0, -std::sin(theta)};
    std::vector<Entry> entries;
    entries.reserve(dim + 2);
    entries.push_back({0, 0, c});
    entries.push_back({0, last, s});
    for (std::uint32_t i = 1; i < last; ++i) {
        entries.push_back({i, i, 1.0});
    }
    entries.push_back({last, 0, s});
    entries.push_back({last, last, c});
    return SparseOperator(dim, std::move(entries));
}

DenseVector evolve_state(const DenseVector& psi, int n, double theta) {
    const std::size_t dim = mode_dimension(n);
    if (psi.dim() != dim) {
        throw DimensionError("evolve_state: state of dimension " + std::to_string(psi.dim()) +
                             " for n = " + std::to_string(n));
    }
    if (std::abs(norm(psi) - 1.0) > kNormTolerance) {
        throw DomainError("evolve_state: state is not normalized");
    }
    return apply(propagator(n, theta), psi);
}

SparseOperator heisenberg_evolve(const SparseOperator& a, int n, double theta) {
    const SparseOperator u = propagator(n, theta);
    if (a.dim() != u.dim()) {
        throw DimensionError("heisenberg_evolve: operator of dimension " + std::to_string(a.dim()) +
                             " for n = " + std::to_string(n));
    }
    return adjoint(u) * a * u;
}

Complex expectation(const SparseOperator& a, const DenseVector& psi) { return inner(psi, apply(a, psi)); }

}  // namespace fermialg
