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

#include "fermialg/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "fermialg/errors.hpp"

namespace fermialg {

namespace {

void check_hermitian(const DenseMatrix& h) {
    if (h.rows() != h.cols()) {
        throw DimensionError("hermitian_eigen: matrix is not square");
    }
    const std::size_t n = h.rows();
    double largest = 0.0;
    double defect = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            largest = std::max(largest, std::abs(h(i, j)));
            defect = std::max(defect, std::abs(h(i, j) - std::conj(h(j, i))));
            if (!std::isfinite(h(i, j).real()) || !std::isfinite(h(i, j).imag())) {
                throw DomainError("hermitian_eigen: non-finite entry");
            }
        }
    }
    if (defect > kHermitianTolerance * std::max(1.0, largest)) {
        throw DomainError("hermitian_eigen: input is not Hermitian (defect " + std::to_string(defect) + ")");
    }
}

// Reduces `a` in place to Hermitian tridiagonal form T = Q^dagger A Q and
// returns Q.
DenseMatrix householder_tridiagonalize(DenseMatrix& a) {
    const std::size_t n = a.rows();
    DenseMatrix q = DenseMatrix::identity(n);
    std::vector<Complex> v(n);
    std::vector<Complex> w(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double tail = 0.0;
        for (std::size_t i = k + 2; i < n; ++i) {
            tail += std::norm(a(i, k));
        }
        if (tail == 0.0) {
            continue;
        }
        const Complex x0 = a(k + 1, k);
        const double xnorm = std::sqrt(tail + std::norm(x0));
        const Complex phase = std::abs(x0) == 0.0 ? Complex{1.0, 0.0} : x0 / std::abs(x0);

        // v = x + phase*|x| e_1, normalized; H = I - 2 v v^dagger maps x to -phase*|x| e_1.
        std::fill(v.begin(), v.end(), Complex{});
        v[k + 1] = x0 + phase * xnorm;
        for (std::size_t i = k + 2; i < n; ++i) {
            v[i] = a(i, k);
        }
        double vnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            vnorm += std::norm(v[i]);
        }
        vnorm = std::sqrt(vnorm);
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] /= vnorm;
        }

        // H A H = A - 2 v w^dagger - 2 w v^dagger with p = A v, w = p - (v^dagger p) v.
        Complex vp;
        for (std::size_t i = 0; i < n; ++i) {
            Complex p;
            for (std::size_t j = k + 1; j < n; ++j) {
                p += a(i, j) * v[j];
            }
            w[i] = p;
            vp += std::conj(v[i]) * p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            w[i] -= vp.real() * v[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= 2.0 * (v[i] * std::conj(w[j]) + w[i] * std::conj(v[j]));
            }
        }

        for (std::size_t i = 0; i < n; ++i) {
            Complex qv;
            for (std::size_t j = k + 1; j < n; ++j) {
                qv += q(i, j) * v[j];
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                q(i, j) -= 2.0 * qv * std::conj(v[j]);
            }
        }
    }
    return q;
}

// Implicit-shift QL on the real symmetric tridiagonal (d, e) where e[i]
// couples i and i+1 and e[n-1] == 0. Rotations are accumulated into the
// columns of `vecs`.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, DenseMatrix& vecs) {
    const std::size_t n = d.size();
    const double eps = std::numeric_limits<double>::epsilon();
    const int max_iterations = 30 * static_cast<int>(std::max<std::size_t>(n, 1));
    double shift_total = 0.0;
    double tst1 = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        std::size_t m = l;
        while (m < n && std::abs(e[m]) > eps * tst1) {
            ++m;
        }
        if (m > l) {
            int iterations = 0;
            do {
                if (++iterations > max_iterations) {
                    throw NumericalError("hermitian_eigen: QL iteration did not converge");
                }
                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0) {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                const double dl1 = d[l + 1];
                double h = g - d[l];
                for (std::size_t i = l + 2; i < n; ++i) {
                    d[i] -= h;
                }
                shift_total += h;

                p = d[m];
                double c = 1.0;
                double c2 = c;
                double c3 = c;
                const double el1 = e[l + 1];
                double s = 0.0;
                double s2 = 0.0;
                for (std::size_t ii = m; ii-- > l;) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[ii];
                    h = c * p;
                    r = std::hypot(p, e[ii]);
                    e[ii + 1] = s * r;
                    s = e[ii] / r;
                    c = p / r;
                    p = c * d[ii] - s * g;
                    d[ii + 1] = h + s * (c * g + s * d[ii]);
                    for (std::size_t k = 0; k < n; ++k) {
                        Complex t = vecs(k, ii + 1);
                        vecs(k, ii + 1) = s * vecs(k, ii) + c * t;
                        vecs(k, ii) = c * vecs(k, ii) - s * t;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += shift_total;
        e[l] = 0.0;
    }
}

void orthonormalize_cluster(std::vector<DenseVector>& vecs, std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
        for (std::size_t j = begin; j < k; ++j) {
            Complex overlap = inner(vecs[j], vecs[k]);
            for (std::size_t i = 0; i < vecs[k].dim(); ++i) {
                vecs[k][i] -= overlap * vecs[j][i];
            }
        }
        double len = norm(vecs[k]);
        for (auto& x : vecs[k].amplitudes) {
            x /= len;
        }
    }
}

void fix_phase(DenseVector& v) {
    double largest = 0.0;
    for (const auto& x : v.amplitudes) {
        largest = std::max(largest, std::abs(x));
    }
    for (const auto& x : v.amplitudes) {
        if (std::abs(x) >= largest - 1e-12) {
            Complex rot = std::conj(x) / std::abs(x);
            for (auto& y : v.amplitudes) {
                y *= rot;
            }
            return;
        }
    }
}

}  // namespace

EigenDecomposition hermitian_eigen(const DenseMatrix& h) {
    check_hermitian(h);
    const std::size_t n = h.rows();
    EigenDecomposition out;
    if (n == 0) {
        return out;
    }

    DenseMatrix t = h;
    DenseMatrix vecs = householder_tridiagonalize(t);

    std::vector<double> d(n);
    std::vector<double> e(n, 0.0);
    Complex phase{1.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = t(i, i).real();
        if (i > 0) {
            for (std::size_t r = 0; r < n; ++r) {
                vecs(r, i) *= phase;
            }
        }
        if (i + 1 < n) {
            Complex off = t(i + 1, i);
            e[i] = std::abs(off);
            if (e[i] != 0.0) {
                phase *= off / e[i];
            }
        }
    }

    tridiagonal_ql(d, e, vecs);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return d[x] < d[y]; });

    out.eigenvalues.reserve(n);
    out.eigenvectors.reserve(n);
    for (std::size_t k : order) {
        out.eigenvalues.push_back(d[k]);
        DenseVector v(n);
        for (std::size_t r = 0; r < n; ++r) {
            v[r] = vecs(r, k);
        }
        out.eigenvectors.push_back(std::move(v));
    }

    for (std::size_t begin = 0; begin < n;) {
        std::size_t end = begin + 1;
        while (end < n && out.eigenvalues[end] - out.eigenvalues[end - 1] < kDegeneracyGap) {
            ++end;
        }
        orthonormalize_cluster(out.eigenvectors, begin, end);
        begin = end;
    }
    for (auto& v : out.eigenvectors) {
        fix_phase(v);
    }
    return out;
}

EigenDecomposition hermitian_eigen(const SparseOperator& h, std::size_t cap) {
    return hermitian_eigen(to_dense(h, cap));
}

SparseOperator expm_hermitian(const SparseOperator& h, double theta, std::size_t cap) {
    if (!std::isfinite(theta)) {
        throw DomainError("expm_hermitian: non-finite theta");
    }
    const EigenDecomposition eig = hermitian_eigen(h, cap);
    const std::size_t n = h.dim();
    DenseMatrix u(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex phase = std::polar(1.0, -eig.eigenvalues[k] * theta);
        const DenseVector& v = eig.eigenvectors[k];
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i] == Complex{}) {
                continue;
            }
            const Complex left = phase * v[i];
            for (std::size_t j = 0; j < n; ++j) {
                u(i, j) += left * std::conj(v[j]);
            }
        }
    }
    return to_sparse(u);
}

}  // namespace fermialg
