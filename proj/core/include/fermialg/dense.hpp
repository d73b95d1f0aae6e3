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

#include "fermialg/sparse_operator.hpp"

namespace fermialg {

/// Row-major dense complex matrix. Used only below the eigensolver cap.
class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Throws CapacityError when `op.dim() > cap`.
DenseMatrix to_dense(const SparseOperator& op, std::size_t cap);

/// Canonical sparse form; entries below kDropTolerance times the largest
/// magnitude in the matrix are dropped.
SparseOperator to_sparse(const DenseMatrix& m);

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix adjoint(const DenseMatrix& a);

}  // namespace fermialg
