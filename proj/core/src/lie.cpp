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

#include "fermialg/lie.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fermialg/dense.hpp"
#include "fermialg/eigen.hpp"
#include "fermialg/errors.hpp"
#include "fermialg/fermi_ops.hpp"

namespace fermialg {

namespace {

constexpr double kReconstructionTolerance = 1e-8;
constexpr double kAbelianTolerance = 1e-10;

// Two modified Gram-Schmidt sweeps against the (orthonormal) basis.
SparseOperator project_out(const std::vector<SparseOperator>& basis, SparseOperator x) {
    for (int sweep = 0; sweep < 2; ++sweep) {
        const double size = frobenius_norm(x);
        for (const SparseOperator& e : basis) {
            const double c = real_inner(e, x);
            if (std::abs(c) > kDropTolerance * size) {
                x = x - c * e;
            }
        }
    }
    return x;
}

class ClosureBuilder {
  public:
    ClosureBuilder(std::size_t matrix_dim, double tol, std::size_t max_dim) : tol_(tol), max_dim_(max_dim) {
        basis_.matrix_dim = matrix_dim;
    }

    bool try_append(const SparseOperator& x, ElementOrigin origin) {
        const double size = frobenius_norm(x);
        if (size < kMinGeneratorNorm) {
            return false;
        }
        SparseOperator r = project_out(basis_.elements, x);
        const double rest = frobenius_norm(r);
        if (rest <= tol_ * size) {
            return false;
        }
        if (basis_.size() >= max_dim_) {
            throw CapacityError("Lie closure exceeded " + std::to_string(max_dim_) +
                                " elements; the generated algebra may be too large or the tolerance too tight");
        }
        basis_.elements.push_back((1.0 / rest) * r);
        basis_.origins.push_back(origin);
        return true;
    }

    const LieBasis& basis() const { return basis_; }
    LieBasis take() { return std::move(basis_); }

  private:
    double tol_;
    std::size_t max_dim_;
    LieBasis basis_;
};

DenseMatrix real_dense(const std::vector<double>& values, std::size_t dim) {
    DenseMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            m(i, j) = 0.5 * (values[i * dim + j] + values[j * dim + i]);
        }
    }
    return m;
}

// Count of eigenvalues with |lambda| <= tol * max|lambda| (all of them if the
// matrix vanishes), plus the positive and negative counts.
KillingSignature signature_of(const DenseMatrix& m) {
    KillingSignature sig;
    if (m.rows() == 0) {
        return sig;
    }
    const EigenDecomposition eig = hermitian_eigen(m);
    double largest = 0.0;
    for (double v : eig.eigenvalues) {
        largest = std::max(largest, std::abs(v));
    }
    const double cutoff = kKillingZeroTolerance * largest;
    for (double v : eig.eigenvalues) {
        if (largest == 0.0 || std::abs(v) <= cutoff) {
            ++sig.zero;
        } else if (v > 0) {
            ++sig.positive;
        } else {
            ++sig.negative;
        }
    }
    return sig;
}

}  // namespace

double real_inner(const SparseOperator& a, const SparseOperator& b) { return frobenius_inner(a, b).real(); }

LieBasis close(std::span<const SparseOperator> generators, double tol, std::size_t max_dim) {
    if (generators.empty()) {
        throw DomainError("close: no generators");
    }
    const std::size_t matrix_dim = generators.front().dim();
    for (const SparseOperator& g : generators) {
        if (g.dim() != matrix_dim) {
            throw DimensionError("close: generators have different dimensions");
        }
    }

    ClosureBuilder builder(matrix_dim, tol, max_dim);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        builder.try_append(generators[g], {ElementOrigin::Kind::generator, g, g});
    }
    if (builder.basis().size() == 0) {
        throw DomainError("close: every generator vanishes");
    }

    std::vector<std::size_t> frontier(builder.basis().size());
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        frontier[i] = i;
    }
    while (!frontier.empty()) {
        std::vector<std::size_t> added;
        for (std::size_t j : frontier) {
            for (std::size_t i = 0; i < builder.basis().size(); ++i) {
                if (i == j) {
                    continue;
                }
                const auto& elements = builder.basis().elements;
                SparseOperator bracket = commutator(elements[i], elements[j]);
                if (builder.try_append(bracket, {ElementOrigin::Kind::commutator, i, j})) {
                    added.push_back(builder.basis().size() - 1);
                }
            }
        }
        frontier = std::move(added);
    }
    return builder.take();
}

LieBasis close_kn(int n, double tol) {
    const std::vector<SparseOperator> generators{hamiltonian_k(n), number_operator(n)};
    return close(generators, tol);
}

double span_residual(const LieBasis& basis, const SparseOperator& x) {
    const double size = frobenius_norm(x);
    if (size == 0.0) {
        return 0.0;
    }
    return frobenius_norm(project_out(basis.elements, x)) / size;
}

double orthonormality_defect(const LieBasis& basis) {
    double worst = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const double expected = i == j ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(real_inner(basis.elements[i], basis.elements[j]) - expected));
        }
    }
    return worst;
}

double closure_defect(const LieBasis& basis) {
    double worst = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const SparseOperator bracket = commutator(basis.elements[i], basis.elements[j]);
            if (frobenius_norm(bracket) < kMinGeneratorNorm) {
                continue;
            }
            worst = std::max(worst, span_residual(basis, bracket));
        }
    }
    return worst;
}

double StructureConstants::max_abs() const {
    double worst = 0.0;
    for (double v : values_) {
        worst = std::max(worst, std::abs(v));
    }
    return worst;
}

double StructureConstants::antisymmetry_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            for (std::size_t k = 0; k < dim_; ++k) {
                worst = std::max(worst, std::abs((*this)(i, j, k) + (*this)(j, i, k)));
            }
        }
    }
    return worst;
}

double StructureConstants::jacobi_residual() const {
    const auto& f = *this;
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            for (std::size_t k = 0; k < dim_; ++k) {
                for (std::size_t l = 0; l < dim_; ++l) {
                    double sum = 0.0;
                    for (std::size_t m = 0; m < dim_; ++m) {
                        sum += f(i, j, m) * f(m, k, l) + f(j, k, m) * f(m, i, l) + f(k, i, m) * f(m, j, l);
                    }
                    worst = std::max(worst, std::abs(sum));
                }
            }
        }
    }
    return worst;
}

StructureConstants structure_constants(const LieBasis& basis) {
    const std::size_t d = basis.size();
    StructureConstants f(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const SparseOperator bracket = commutator(basis.elements[i], basis.elements[j]);
            SparseOperator rebuilt(basis.matrix_dim);
            for (std::size_t k = 0; k < d; ++k) {
                f(i, j, k) = real_inner(basis.elements[k], bracket);
                rebuilt = rebuilt + f(i, j, k) * basis.elements[k];
            }
            const double size = frobenius_norm(bracket);
            const double miss = frobenius_norm(bracket - rebuilt);
            if (miss > kReconstructionTolerance * std::max(1.0, size)) {
                throw NumericalError("structure_constants: basis is not closed ([e_" + std::to_string(i) + ", e_" +
                                     std::to_string(j) + "] misses the span by " + std::to_string(miss) + ")");
            }
        }
    }
    return f;
}

const char* to_string(LieTag tag) {
    switch (tag) {
        case LieTag::sl2R:
            return "sl2R";
        case LieTag::su2:
            return "su2";
        case LieTag::abelian:
            return "abelian";
        case LieTag::other:
            return "other";
    }
    return "other";
}

LieReport killing_classify(const LieBasis& basis) {
    const StructureConstants f = structure_constants(basis);
    const std::size_t d = basis.size();

    LieReport report;
    report.dimension = d;
    report.killing.assign(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < d; ++k) {
                for (std::size_t l = 0; l < d; ++l) {
                    sum += f(i, k, l) * f(j, l, k);
                }
            }
            report.killing[i * d + j] = sum;
        }
    }
    report.signature = signature_of(real_dense(report.killing, d));
    report.killing_rank = report.signature.positive + report.signature.negative;
    report.semisimple = d > 0 && report.signature.zero == 0;

    // x = sum_i x_i e_i is central iff sum_i x_i f(i, j, k) = 0 for all (j, k);
    // the null space of that stacked map is the null space of its Gram matrix.
    std::vector<double> gram(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t ip = 0; ip < d; ++ip) {
            double sum = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                for (std::size_t k = 0; k < d; ++k) {
                    sum += f(i, j, k) * f(ip, j, k);
                }
            }
            gram[i * d + ip] = sum;
        }
    }
    report.center_dim = signature_of(real_dense(gram, d)).zero;

    if (f.max_abs() <= kAbelianTolerance) {
        report.tag = LieTag::abelian;
    } else if (d == 3 && report.signature == KillingSignature{2, 1, 0}) {
        report.tag = LieTag::sl2R;
    } else if (d == 3 && report.signature == KillingSignature{0, 3, 0}) {
        report.tag = LieTag::su2;
    } else {
        report.tag = LieTag::other;
    }

    report.residuals = {
        {"orthonormality", orthonormality_defect(basis)},
        {"closure", closure_defect(basis)},
        {"antisymmetry", f.antisymmetry_defect()},
        {"jacobi", f.jacobi_residual()},
    };
    return report;
}

SparseOperator kn_central_element(int n) {
    const SparseOperator bracket = commutator(product_raising(n), product_lowering(n));
    return number_operator(n) - (0.5 * n) * bracket;
}

std::vector<IdentityCheck> verify_identities(int n) {
    const SparseOperator k = hamiltonian_k(n);
    const SparseOperator num = number_operator(n);
    const SparseOperator raise = product_raising(n);
    const SparseOperator lower = product_lowering(n);
    const std::size_t dim = k.dim();
    const SparseOperator id = SparseOperator::identity(dim);
    const SparseOperator zero(dim);
    const double nd = n;

    const SparseOperator kn = commutator(k, num);
    const SparseOperator kkn = commutator(k, kn);
    const SparseOperator rl = commutator(raise, lower);

    std::vector<IdentityCheck> out;
    auto check = [&](std::string name, const SparseOperator& lhs, const SparseOperator& rhs) {
        out.push_back({std::move(name), max_abs_diff(lhs, rhs)});
    };

    check("[K,N] = n(L - R)", kn, nd * (lower - raise));
    check("[K,[K,N]] = 2n[R,L]", kkn, (2.0 * nd) * rl);
    check("[N,[K,N]] = -n^2 K", commutator(num, kn), (-nd * nd) * k);
    check("[K,[K,[K,N]]] = 4[K,N]", commutator(k, kkn), 4.0 * kn);
    check("[N,[K,[K,N]]] = 0", commutator(num, kkn), zero);
    check("[[K,N],[K,[K,N]]] = 4n^2 K", commutator(kn, kkn), (4.0 * nd * nd) * k);

    check("[L,[R,L]] = 2L", commutator(lower, rl), 2.0 * lower);
    check("[R,[R,L]] = -2R", commutator(raise, rl), -2.0 * raise);
    {
        const SparseOperator p0(2, {{0, 0, 1.0}});
        const SparseOperator p1(2, {{1, 1, 1.0}});
        SparseOperator top = SparseOperator::identity(1);
        SparseOperator bottom = SparseOperator::identity(1);
        for (int j = 0; j < n; ++j) {
            top = kron(top, p0);
            bottom = kron(bottom, p1);
        }
        check("[R,L] = P0^(x)n - P1^(x)n", rl, top - bottom);
    }
    check("R = [[0,1],[0,0]]^(x)n", raise, product_raising_closed_form(n));
    check("L = [[0,0],[1,0]]^(x)n", lower, product_lowering_closed_form(n));
    check("K = corner form", k, hamiltonian_k_closed_form(n));

    if (n == 1) {
        const SparseOperator cd = creation(1, 1);
        const SparseOperator c = annihilation(1, 1);
        const SparseOperator h = 2.0 * (cd * c) - id;
        check("n=1: [c+,c] = 2c+c - I", commutator(cd, c), h);
        check("n=1: [c+,2c+c - I] = -2c+", commutator(cd, h), -2.0 * cd);
        check("n=1: [c,2c+c - I] = 2c", commutator(c, h), 2.0 * c);
        check("n=1: K = c+ + c = s1", k, pauli::sigma1());
        check("n=1: [K,N] = c - c+", kn, c - cd);
        check("n=1: [K,c - c+] = 4N - 2I", commutator(k, c - cd), 4.0 * num - 2.0 * id);
        check("n=1: [N,c - c+] = -K", commutator(num, c - cd), -1.0 * k);
        check("n=1: c - c+ = [[0,-1],[1,0]]", c - cd, SparseOperator(2, {{0, 1, -1.0}, {1, 0, 1.0}}));
    } else if (n == 2) {
        const SparseOperator c1 = annihilation(2, 1);
        const SparseOperator c2 = annihilation(2, 2);
        const SparseOperator c1d = creation(2, 1);
        const SparseOperator c2d = creation(2, 2);
        const SparseOperator pair_up = c2d * c1d;
        const SparseOperator pair_down = c1 * c2;
        check("n=2: [c2+ c1+, c1 c2] = c1+ c1 + c2+ c2 - I", commutator(pair_up, pair_down),
              c1d * c1 + c2d * c2 - id);
        check("n=2: [c2+ c1+, N - I] = 2 c1+ c2+", commutator(pair_up, num - id), 2.0 * (c1d * c2d));
        check("n=2: [c1 c2, N - I] = 2 c1 c2", commutator(pair_down, num - id), 2.0 * pair_down);
        check("n=2: [K,N] = 2(c1 c2 - c2+ c1+)", kn, 2.0 * (pair_down - pair_up));
        check("n=2: [K,[K,N]] = 4(N - I)", kkn, 4.0 * (num - id));
        check("n=2: [N,[K,N]] = -4K", commutator(num, kn), -4.0 * k);
        check("n=2: [K,[K,[K,N]]] = 4[K,N]", commutator(k, kkn), 4.0 * kn);
        check("n=2: [N,[K,[K,N]]] = 0", commutator(num, kkn), zero);
        check("n=2: [[K,N],[K,[K,N]]] = 16K", commutator(kn, kkn), 16.0 * k);
    } else if (n == 3) {
        SparseOperator c[4];
        SparseOperator cd[4];
        for (int j = 1; j <= 3; ++j) {
            c[j] = annihilation(3, j);
            cd[j] = creation(3, j);
        }
        const SparseOperator up = cd[3] * cd[2] * cd[1];
        const SparseOperator down = c[1] * c[2] * c[3];
        const SparseOperator bracket = commutator(up, down);
        const SparseOperator expansion = 2.0 * (cd[3] * cd[2] * cd[1] * c[1] * c[2] * c[3]) -
                                         cd[2] * cd[1] * c[1] * c[2] - cd[3] * cd[2] * c[2] * c[3] -
                                         cd[3] * cd[1] * c[1] * c[3] + cd[1] * c[1] + cd[2] * c[2] + cd[3] * c[3] - id;
        check("n=3: [c3+ c2+ c1+, c1 c2 c3] expansion", bracket, expansion);
        check("n=3: [c1 c2 c3, [c3+ c2+ c1+, c1 c2 c3]] = 2 c1 c2 c3", commutator(down, bracket), 2.0 * down);
        check("n=3: [c3+ c2+ c1+, [c3+ c2+ c1+, c1 c2 c3]] = -2 c3+ c2+ c1+", commutator(up, bracket),
              -2.0 * up);
        check("n=3: [K,N] = 3(c1 c2 c3 - c3+ c2+ c1+)", kn, 3.0 * (down - up));
        check("n=3: [K,[K,N]] = 6[c3+ c2+ c1+, c1 c2 c3]", kkn, 6.0 * bracket);
        check("n=3: [N,[K,N]] = -9K", commutator(num, kn), -9.0 * k);
        check("n=3: [K,[K,[K,N]]] = 4[K,N]", commutator(k, kkn), 4.0 * kn);
        check("n=3: [N,[K,[K,N]]] = 0", commutator(num, kkn), zero);
        check("n=3: [[K,N],[K,[K,N]]] = 36K", commutator(kn, kkn), 36.0 * k);
    }
    return out;
}

}  // namespace fermialg
