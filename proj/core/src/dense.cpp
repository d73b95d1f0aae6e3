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

#include "fermialg/dense.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fermialg/errors.hpp"

namespace fermialg {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

DenseMatrix to_dense(const SparseOperator& op, std::size_t cap) {
    if (op.dim() > cap) {
        throw CapacityError("dense conversion of a " + std::to_string(op.dim()) +
                            "-dimensional operator exceeds the cap " + std::to_string(cap));
    }
    DenseMatrix m(op.dim(), op.dim());
    for (const Entry& e : op.entries()) {
        m(e.row, e.col) = e.value;
    }
    return m;
}

SparseOperator to_sparse(const DenseMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("to_sparse: matrix is not square");
    }
    double largest = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            largest = std::max(largest, std::abs(m(i, j)));
        }
    }
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            double mag = std::abs(m(i, j));
            if (mag != 0.0 && mag >= kDropTolerance * largest) {
                entries.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), m(i, j)});
            }
        }
    }
    return SparseOperator(m.rows(), std::move(entries));
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("multiply: inner dimensions differ");
    }
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Complex x = a(i, k);
            if (x == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += x * b(k, j);
            }
        }
    }
    return c;
}

DenseMatrix adjoint(const DenseMatrix& a) {
    DenseMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            t(j, i) = std::conj(a(i, j));
        }
    }
    return t;
}

}  // namespace fermialg
