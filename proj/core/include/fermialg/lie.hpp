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
#include <span>
#include <string>
#include <vector>

#include "fermialg/sparse_operator.hpp"

namespace fermialg {

// Real Lie algebras spanned by operator sets. Spans are over the reals: the
// inner product is Re tr(A^dagger B), so A and iA are distinct directions.

/// A candidate joins the basis when its residual after projection exceeds
/// this fraction of its norm.
inline constexpr double kIndependenceTolerance = 1e-8;
/// Generators with a smaller Frobenius norm are ignored.
inline constexpr double kMinGeneratorNorm = 1e-12;
inline constexpr std::size_t kDefaultMaxLieDim = 64;
/// Eigenvalues of the Killing form (and of the center test) below this
/// fraction of the largest magnitude count as zero.
inline constexpr double kKillingZeroTolerance = 1e-8;

struct ElementOrigin {
    enum class Kind { generator, commutator };
    Kind kind = Kind::generator;
    /// Generator index, or the (existing, new) pair of the commutator.
    std::size_t first = 0;
    std::size_t second = 0;
};

/// Frobenius-orthonormal basis of a real Lie algebra of matrices.
struct LieBasis {
    std::size_t matrix_dim = 0;
    std::vector<SparseOperator> elements;
    std::vector<ElementOrigin> origins;

    std::size_t size() const { return elements.size(); }
};

double real_inner(const SparseOperator& a, const SparseOperator& b);

/// Breadth-first closure under the commutator.
///
/// The generators are Gram-Schmidt orthonormalized in input order. Each pass
/// forms [existing, new] for every new element against every element in index
/// order, projects out the current span and keeps the normalized residual when
/// it exceeds `tol` times the commutator norm. Stops after a pass that adds
/// nothing. Throws CapacityError once the basis would exceed `max_dim`.
LieBasis close(std::span<const SparseOperator> generators, double tol = kIndependenceTolerance,
               std::size_t max_dim = kDefaultMaxLieDim);

/// Closure of {K, N} for n modes.
LieBasis close_kn(int n, double tol = kIndependenceTolerance);

/// ||x - P x|| / ||x|| with P the orthogonal projector onto the real span.
double span_residual(const LieBasis& basis, const SparseOperator& x);

/// max |<e_i, e_j> - delta_ij|.
double orthonormality_defect(const LieBasis& basis);

/// max over pairs of span_residual(basis, [e_i, e_j]).
double closure_defect(const LieBasis& basis);

/// f(i, j, k) with [e_i, e_j] = sum_k f(i, j, k) e_k.
class StructureConstants {
  public:
    StructureConstants() = default;
    explicit StructureConstants(std::size_t dim) : dim_(dim), values_(dim * dim * dim, 0.0) {}

    std::size_t dim() const { return dim_; }
    double& operator()(std::size_t i, std::size_t j, std::size_t k) { return values_[(i * dim_ + j) * dim_ + k]; }
    double operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return values_[(i * dim_ + j) * dim_ + k];
    }

    double max_abs() const;
    /// max |f(i,j,k) + f(j,i,k)|.
    double antisymmetry_defect() const;
    /// Largest coefficient of the Jacobi sum over all (i, j, k, l).
    double jacobi_residual() const;

  private:
    std::size_t dim_ = 0;
    std::vector<double> values_;
};

/// f(i, j, k) = Re <e_k, [e_i, e_j]>. Throws NumericalError when a commutator
/// is not reproduced by its coefficients within 1e-8 (relative).
StructureConstants structure_constants(const LieBasis& basis);

enum class LieTag { sl2R, su2, abelian, other };

const char* to_string(LieTag tag);

struct KillingSignature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    friend bool operator==(const KillingSignature&, const KillingSignature&) = default;
};

struct LieReport {
    std::size_t dimension = 0;
    /// Row-major dimension x dimension Killing matrix.
    std::vector<double> killing;
    std::size_t killing_rank = 0;
    KillingSignature signature;
    bool semisimple = false;
    std::size_t center_dim = 0;
    LieTag tag = LieTag::other;
    /// Named numerical residuals (orthonormality, closure, jacobi, ...).
    std::vector<std::pair<std::string, double>> residuals;
};

/// Killing form B(x, y) = tr(ad x ad y), its signature, the center dimension
/// and a tag. sl2R needs dimension 3 and signature (2,1,0); su2 needs
/// (0,3,0); abelian means all structure constants vanish.
LieReport killing_classify(const LieBasis& basis);

struct IdentityCheck {
    std::string name;
    /// Largest entrywise |lhs - rhs|.
    double residual = 0.0;
};

/// The commutator ladder of K and N for n modes, checked by direct sparse
/// arithmetic: six identities valid for every n, the closed matrix forms of the
/// raising/lowering commutator, and the special cases written out for n = 1, 2, 3.
std::vector<IdentityCheck> verify_identities(int n);

/// N - (n/2) [R, L] with R, L the product raising/lowering operators; central
/// in the algebra generated by K and N.
SparseOperator kn_central_element(int n);

}  // namespace fermialg
