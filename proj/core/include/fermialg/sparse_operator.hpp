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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fermialg {

using Complex = std::complex<double>;

/// Largest matrix dimension any operator may reach (2^24).
inline constexpr std::size_t kDefaultMaxDim = std::size_t{1} << 24;

/// Relative cancellation threshold: a sum whose magnitude drops below this
/// fraction of its largest contributing term is stored as an exact zero.
inline constexpr double kDropTolerance = 1e-14;

struct Entry {
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    Complex value;

    friend bool operator==(const Entry&, const Entry&) = default;
};

/// Square complex matrix of power-of-two dimension in coordinate form.
///
/// Entries are kept sorted row-major with unique (row, col) keys and no stored
/// zeros, so two operators are equal exactly when their entry lists are.
class SparseOperator {
  public:
    /// The 1x1 zero operator.
    SparseOperator() = default;

    /// Zero operator of dimension `dim`.
    explicit SparseOperator(std::size_t dim);

    /// Builds an operator from unordered triplets. Duplicate keys are summed
    /// and the result is put into canonical form.
    SparseOperator(std::size_t dim, std::vector<Entry> entries);

    static SparseOperator identity(std::size_t dim);
    static SparseOperator diagonal(std::span<const Complex> diag);

    std::size_t dim() const { return dim_; }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }
    std::span<const Entry> entries() const { return entries_; }

    /// Value at (row, col); zero when no entry is stored.
    Complex at(std::size_t row, std::size_t col) const;

    /// CSR-style offsets: entries of row r are [offsets[r], offsets[r+1]).
    std::vector<std::size_t> row_offsets() const;

    friend bool operator==(const SparseOperator&, const SparseOperator&) = default;

  private:
    struct Canonical {};
    SparseOperator(std::size_t dim, std::vector<Entry> sorted_entries, Canonical);

    friend SparseOperator kron(const SparseOperator&, const SparseOperator&, std::size_t);
    friend SparseOperator matmul(const SparseOperator&, const SparseOperator&);
    friend SparseOperator add(const SparseOperator&, const SparseOperator&);
    friend SparseOperator scale(const SparseOperator&, Complex);
    friend SparseOperator adjoint(const SparseOperator&);

    std::size_t dim_ = 1;
    std::vector<Entry> entries_;
};

/// Complex amplitude vector.
struct DenseVector {
    std::vector<Complex> amplitudes;

    DenseVector() = default;
    explicit DenseVector(std::size_t dim) : amplitudes(dim) {}
    explicit DenseVector(std::vector<Complex> values) : amplitudes(std::move(values)) {}

    std::size_t dim() const { return amplitudes.size(); }
    Complex& operator[](std::size_t i) { return amplitudes[i]; }
    const Complex& operator[](std::size_t i) const { return amplitudes[i]; }

    /// Unit vector e_index.
    static DenseVector basis(std::size_t dim, std::size_t index);

    friend bool operator==(const DenseVector&, const DenseVector&) = default;
};

// Operator algebra. All results are canonical; binary operations require equal
// dimensions and throw DimensionError otherwise.

/// Kronecker product; throws CapacityError when the product dimension would
/// exceed `max_dim`.
SparseOperator kron(const SparseOperator& a, const SparseOperator& b,
                    std::size_t max_dim = kDefaultMaxDim);
SparseOperator matmul(const SparseOperator& a, const SparseOperator& b);
SparseOperator add(const SparseOperator& a, const SparseOperator& b);
SparseOperator subtract(const SparseOperator& a, const SparseOperator& b);
SparseOperator scale(const SparseOperator& a, Complex s);
SparseOperator adjoint(const SparseOperator& a);
SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);
SparseOperator anticommutator(const SparseOperator& a, const SparseOperator& b);

/// trace(a^dagger b).
Complex frobenius_inner(const SparseOperator& a, const SparseOperator& b);
double frobenius_norm(const SparseOperator& a);
Complex trace(const SparseOperator& a);

/// Largest entrywise |a - b|.
double max_abs_diff(const SparseOperator& a, const SparseOperator& b);

/// Largest |a_ij - conj(a_ji)|.
double hermiticity_defect(const SparseOperator& a);

DenseVector apply(const SparseOperator& a, const DenseVector& v);

Complex inner(const DenseVector& a, const DenseVector& b);
double norm(const DenseVector& v);

inline SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) { return add(a, b); }
inline SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) { return subtract(a, b); }
inline SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) { return matmul(a, b); }
inline SparseOperator operator*(Complex s, const SparseOperator& a) { return scale(a, s); }
inline SparseOperator operator*(double s, const SparseOperator& a) { return scale(a, Complex{s, 0.0}); }

}  // namespace fermialg
