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

#include "fermialg/sparse_operator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "fermialg/errors.hpp"

namespace fermialg {

namespace {

void check_dim(std::size_t dim) {
    if (!std::has_single_bit(dim)) {
        throw DomainError("operator dimension must be a power of two, got " + std::to_string(dim));
    }
    if (dim > kDefaultMaxDim) {
        throw CapacityError("operator dimension " + std::to_string(dim) + " exceeds the maximum " +
                            std::to_string(kDefaultMaxDim));
    }
}

void check_same_dim(const SparseOperator& a, const SparseOperator& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                             " vs " + std::to_string(b.dim()) + ")");
    }
}

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Cancellation rule shared by every accumulating operation.
bool survives(Complex sum, double largest_term) {
    double mag = std::abs(sum);
    return mag != 0.0 && mag >= kDropTolerance * largest_term;
}

std::uint64_t key(const Entry& e) { return (std::uint64_t{e.row} << 32) | e.col; }

}  // namespace

SparseOperator::SparseOperator(std::size_t dim) : dim_(dim) { check_dim(dim); }

SparseOperator::SparseOperator(std::size_t dim, std::vector<Entry> entries) : dim_(dim) {
    check_dim(dim);
    for (const Entry& e : entries) {
        if (e.row >= dim || e.col >= dim) {
            throw DomainError("entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) +
                              ") outside a " + std::to_string(dim) + "-dimensional operator");
        }
        if (!is_finite(e.value)) {
            throw DomainError("non-finite operator entry");
        }
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& x, const Entry& y) { return key(x) < key(y); });
    entries_.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size();) {
        Entry merged = entries[i];
        double largest = std::abs(merged.value);
        std::size_t j = i + 1;
        for (; j < entries.size() && key(entries[j]) == key(merged); ++j) {
            merged.value += entries[j].value;
            largest = std::max(largest, std::abs(entries[j].value));
        }
        if (survives(merged.value, largest)) {
            entries_.push_back(merged);
        }
        i = j;
    }
}

SparseOperator::SparseOperator(std::size_t dim, std::vector<Entry> sorted_entries, Canonical)
    : dim_(dim), entries_(std::move(sorted_entries)) {}

SparseOperator SparseOperator::identity(std::size_t dim) {
    check_dim(dim);
    std::vector<Entry> entries(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        auto idx = static_cast<std::uint32_t>(i);
        entries[i] = {idx, idx, Complex{1.0, 0.0}};
    }
    return SparseOperator(dim, std::move(entries), Canonical{});
}

SparseOperator SparseOperator::diagonal(std::span<const Complex> diag) {
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        auto idx = static_cast<std::uint32_t>(i);
        entries.push_back({idx, idx, diag[i]});
    }
    return SparseOperator(diag.size(), std::move(entries));
}

Complex SparseOperator::at(std::size_t row, std::size_t col) const {
    if (row >= dim_ || col >= dim_) {
        throw DomainError("index outside operator");
    }
    Entry probe{static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col), {}};
    auto it = std::lower_bound(entries_.begin(), entries_.end(), probe,
                               [](const Entry& x, const Entry& y) { return key(x) < key(y); });
    if (it != entries_.end() && key(*it) == key(probe)) {
        return it->value;
    }
    return {};
}

std::vector<std::size_t> SparseOperator::row_offsets() const {
    std::vector<std::size_t> offsets(dim_ + 1, 0);
    for (const Entry& e : entries_) {
        ++offsets[e.row + 1];
    }
    for (std::size_t r = 0; r < dim_; ++r) {
        offsets[r + 1] += offsets[r];
    }
    return offsets;
}

DenseVector DenseVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw DomainError("basis index " + std::to_string(index) + " outside dimension " +
                          std::to_string(dim));
    }
    DenseVector v(dim);
    v[index] = 1.0;
    return v;
}

SparseOperator kron(const SparseOperator& a, const SparseOperator& b, std::size_t max_dim) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    if (da > max_dim / db) {
        throw CapacityError("Kronecker product dimension " + std::to_string(da) + "*" +
                            std::to_string(db) + " exceeds the maximum " + std::to_string(max_dim));
    }
    const std::size_t dim = da * db;
    check_dim(dim);
    auto ao = a.row_offsets();
    auto bo = b.row_offsets();
    std::vector<Entry> out;
    out.reserve(a.nnz() * b.nnz());
    // Row ia*db+ib is emitted in increasing order; within a row, (ja, jb)
    // lexicographic order is increasing column order.
    for (std::size_t ia = 0; ia < da; ++ia) {
        for (std::size_t ib = 0; ib < db; ++ib) {
            for (std::size_t p = ao[ia]; p < ao[ia + 1]; ++p) {
                const Entry& x = a.entries_[p];
                for (std::size_t q = bo[ib]; q < bo[ib + 1]; ++q) {
                    const Entry& y = b.entries_[q];
                    Complex v = x.value * y.value;
                    if (v == Complex{}) {
                        continue;
                    }
                    out.push_back({static_cast<std::uint32_t>(ia * db + ib),
                                   static_cast<std::uint32_t>(x.col * db + y.col), v});
                }
            }
        }
    }
    return SparseOperator(dim, std::move(out), SparseOperator::Canonical{});
}

SparseOperator matmul(const SparseOperator& a, const SparseOperator& b) {
    check_same_dim(a, b, "matmul");
    const std::size_t dim = a.dim();
    auto ao = a.row_offsets();
    auto bo = b.row_offsets();

    struct Term {
        std::uint32_t col;
        Complex value;
    };
    std::vector<Term> row;
    std::vector<Entry> out;
    for (std::size_t i = 0; i < dim; ++i) {
        row.clear();
        for (std::size_t p = ao[i]; p < ao[i + 1]; ++p) {
            const Entry& x = a.entries_[p];
            for (std::size_t q = bo[x.col]; q < bo[x.col + 1]; ++q) {
                const Entry& y = b.entries_[q];
                row.push_back({y.col, x.value * y.value});
            }
        }
        std::stable_sort(row.begin(), row.end(),
                         [](const Term& s, const Term& t) { return s.col < t.col; });
        for (std::size_t k = 0; k < row.size();) {
            Complex sum = row[k].value;
            double largest = std::abs(sum);
            std::size_t m = k + 1;
            for (; m < row.size() && row[m].col == row[k].col; ++m) {
                sum += row[m].value;
                largest = std::max(largest, std::abs(row[m].value));
            }
            if (survives(sum, largest)) {
                out.push_back({static_cast<std::uint32_t>(i), row[k].col, sum});
            }
            k = m;
        }
    }
    return SparseOperator(dim, std::move(out), SparseOperator::Canonical{});
}

namespace {

template <typename Combine>
std::vector<Entry> merge_entries(std::span<const Entry> x, std::span<const Entry> y, Combine combine) {
    std::vector<Entry> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() || j < y.size()) {
        Complex xv;
        Complex yv;
        Entry at;
        if (j == y.size() || (i < x.size() && key(x[i]) < key(y[j]))) {
            at = x[i];
            xv = x[i++].value;
        } else if (i == x.size() || key(y[j]) < key(x[i])) {
            at = y[j];
            yv = y[j++].value;
        } else {
            at = x[i];
            xv = x[i++].value;
            yv = y[j++].value;
        }
        Complex sum = combine(xv, yv);
        if (survives(sum, std::max(std::abs(xv), std::abs(yv)))) {
            out.push_back({at.row, at.col, sum});
        }
    }
    return out;
}

}  // namespace

SparseOperator add(const SparseOperator& a, const SparseOperator& b) {
    check_same_dim(a, b, "add");
    return SparseOperator(a.dim(),
                          merge_entries(a.entries(), b.entries(), [](Complex x, Complex y) { return x + y; }),
                          SparseOperator::Canonical{});
}

SparseOperator subtract(const SparseOperator& a, const SparseOperator& b) {
    check_same_dim(a, b, "subtract");
    return add(a, scale(b, -1.0));
}

SparseOperator scale(const SparseOperator& a, Complex s) {
    if (!is_finite(s)) {
        throw DomainError("non-finite scale factor");
    }
    std::vector<Entry> out;
    out.reserve(a.nnz());
    for (const Entry& e : a.entries_) {
        Complex v = e.value * s;
        if (v != Complex{}) {
            out.push_back({e.row, e.col, v});
        }
    }
    return SparseOperator(a.dim(), std::move(out), SparseOperator::Canonical{});
}

SparseOperator adjoint(const SparseOperator& a) {
    std::vector<Entry> out;
    out.reserve(a.nnz());
    for (const Entry& e : a.entries_) {
        out.push_back({e.col, e.row, std::conj(e.value)});
    }
    std::sort(out.begin(), out.end(), [](const Entry& x, const Entry& y) { return key(x) < key(y); });
    return SparseOperator(a.dim(), std::move(out), SparseOperator::Canonical{});
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
    check_same_dim(a, b, "commutator");
    return subtract(matmul(a, b), matmul(b, a));
}

SparseOperator anticommutator(const SparseOperator& a, const SparseOperator& b) {
    check_same_dim(a, b, "anticommutator");
    return add(matmul(a, b), matmul(b, a));
}

Complex frobenius_inner(const SparseOperator& a, const SparseOperator& b) {
    check_same_dim(a, b, "frobenius_inner");
    auto x = a.entries();
    auto y = b.entries();
    Complex sum;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() && j < y.size()) {
        if (key(x[i]) < key(y[j])) {
            ++i;
        } else if (key(y[j]) < key(x[i])) {
            ++j;
        } else {
            sum += std::conj(x[i++].value) * y[j++].value;
        }
    }
    return sum;
}

double frobenius_norm(const SparseOperator& a) {
    double sum = 0.0;
    for (const Entry& e : a.entries()) {
        sum += std::norm(e.value);
    }
    return std::sqrt(sum);
}

Complex trace(const SparseOperator& a) {
    Complex sum;
    for (const Entry& e : a.entries()) {
        if (e.row == e.col) {
            sum += e.value;
        }
    }
    return sum;
}

double max_abs_diff(const SparseOperator& a, const SparseOperator& b) {
    check_same_dim(a, b, "max_abs_diff");
    double worst = 0.0;
    auto x = a.entries();
    auto y = b.entries();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && key(x[i]) < key(y[j]))) {
            worst = std::max(worst, std::abs(x[i++].value));
        } else if (i == x.size() || key(y[j]) < key(x[i])) {
            worst = std::max(worst, std::abs(y[j++].value));
        } else {
            worst = std::max(worst, std::abs(x[i++].value - y[j++].value));
        }
    }
    return worst;
}

double hermiticity_defect(const SparseOperator& a) { return max_abs_diff(a, adjoint(a)); }

DenseVector apply(const SparseOperator& a, const DenseVector& v) {
    if (v.dim() != a.dim()) {
        throw DimensionError("apply: vector of dimension " + std::to_string(v.dim()) +
                             " against operator of dimension " + std::to_string(a.dim()));
    }
    DenseVector out(a.dim());
    for (const Entry& e : a.entries()) {
        out[e.row] += e.value * v[e.col];
    }
    return out;
}

Complex inner(const DenseVector& a, const DenseVector& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("inner: dimension mismatch");
    }
    Complex sum;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

double norm(const DenseVector& v) { return std::sqrt(inner(v, v).real()); }

}  // namespace fermialg
