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

#include "fermialg/tangle.hpp"

#include <bit>
#include <cmath>
#include <cstddef>
#include <string>

#include "fermialg/errors.hpp"
#include "fermialg/spectral.hpp"

namespace fermialg {

namespace {

constexpr double kNormTolerance = 1e-10;

void check_qubits(int n) {
    if (n < 2 || (n % 2 != 0 && n != 3)) {
        throw DomainError("the n-tangle is defined only for n even or n = 3, got n = " + std::to_string(n));
    }
    if (n > 30) {
        throw CapacityError("n-tangle: too many qubits (" + std::to_string(n) + ")");
    }
}

void check_state(const DenseVector& psi, int n) {
    check_qubits(n);
    if (psi.dim() != std::size_t{1} << n) {
        throw DimensionError("n-tangle: state of dimension " + std::to_string(psi.dim()) + " for n = " +
                             std::to_string(n));
    }
    if (std::abs(norm(psi) - 1.0) > kNormTolerance) {
        throw DomainError("n-tangle: state is not normalized");
    }
}

// Kahan-Babuska summation of complex terms.
class CompensatedSum {
  public:
    void add(Complex term) {
        re_ = step(re_, re_c_, term.real());
        im_ = step(im_, im_c_, term.imag());
    }
    Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

  private:
    static double step(double sum, double& comp, double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        return t;
    }
    double re_ = 0.0;
    double re_c_ = 0.0;
    double im_ = 0.0;
    double im_c_ = 0.0;
};

int bit(std::size_t index, int n, int qubit) { return static_cast<int>((index >> (n - qubit)) & 1U); }

// prod_{q=1}^{n-1} eps(x_q, y_q)
int leading_epsilon(std::size_t x, std::size_t y, int n) {
    int sign = 1;
    for (int q = 1; q < n; ++q) {
        sign *= epsilon(bit(x, n, q), bit(y, n, q));
        if (sign == 0) {
            return 0;
        }
    }
    return sign;
}

}  // namespace

double n_tangle_direct(const DenseVector& psi, int n) {
    check_state(psi, n);
    if (n > kMaxDirectTangleQubits) {
        throw CapacityError("direct n-tangle enumeration is limited to n <= " +
                            std::to_string(kMaxDirectTangleQubits));
    }
    const std::size_t dim = psi.dim();
    CompensatedSum sum;
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            const int ab = leading_epsilon(a, b, n);
            if (ab == 0) {
                continue;
            }
            for (std::size_t g = 0; g < dim; ++g) {
                const int ag = ab * epsilon(bit(a, n, n), bit(g, n, n));
                if (ag == 0) {
                    continue;
                }
                for (std::size_t d = 0; d < dim; ++d) {
                    const int sign = ag * leading_epsilon(g, d, n) * epsilon(bit(b, n, n), bit(d, n, n));
                    if (sign == 0) {
                        continue;
                    }
                    sum.add(static_cast<double>(sign) * psi[a] * psi[b] * psi[g] * psi[d]);
                }
            }
        }
    }
    return 2.0 * std::abs(sum.value());
}

double n_tangle_factorized(const DenseVector& psi, int n) {
    check_state(psi, n);
    // x ranges over the first n-1 qubits; its complement pairs with it through
    // the eps factors, each contributing eps(x_q, 1 - x_q) = (-1)^{x_q}.
    const std::size_t half = std::size_t{1} << (n - 1);
    const std::size_t mask = half - 1;
    Complex m[2][2];
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            CompensatedSum sum;
            for (std::size_t x = 0; x < half; ++x) {
                const std::size_t y = ~x & mask;
                const double sign = (std::popcount(x) % 2 == 0) ? 1.0 : -1.0;
                sum.add(sign * psi[(x << 1) | a] * psi[(y << 1) | b]);
            }
            m[a][b] = sum.value();
        }
    }
    // sum_{a,b,c,d} eps_ac eps_bd M_ab M_cd = 2 (M00 M11 - M01 M10)
    return 4.0 * std::abs(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
}

TangleResult n_tangle(const DenseVector& psi, int n, TangleMethod method) {
    TangleResult out;
    out.n = n;
    out.method = method;
    out.value = method == TangleMethod::direct ? n_tangle_direct(psi, n) : n_tangle_factorized(psi, n);
    return out;
}

std::vector<EntanglementRow> classify_eigenspace_entanglement(int n) {
    check_qubits(n);
    const TangleMethod method = n <= 4 ? TangleMethod::direct : TangleMethod::factorized;
    const SpectrumResult spectrum = k_spectrum_analytic(n);
    const std::size_t dim = spectrum.dim;

    std::vector<EntanglementRow> rows;
    for (const Eigenspace& space : spectrum.spaces) {
        if (space.value == 0.0) {
            continue;
        }
        rows.push_back({space.value > 0 ? "+1 eigenvector" : "-1 eigenvector", space.value,
                        n_tangle(space.basis.front(), n, method).value});
    }
    for (std::size_t j = 1; j + 1 < dim; ++j) {
        rows.push_back({"e_" + std::to_string(j), 0.0, n_tangle(DenseVector::basis(dim, j), n, method).value});
    }
    DenseVector mixed(dim);
    mixed[1] = 1.0 / std::sqrt(2.0);
    mixed[dim - 2] = 1.0 / std::sqrt(2.0);
    rows.push_back({"(e_1 + e_" + std::to_string(dim - 2) + ")/sqrt2", 0.0, n_tangle(mixed, n, method).value});
    return rows;
}

}  // namespace fermialg
