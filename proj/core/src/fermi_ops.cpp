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

#include "fermialg/fermi_ops.hpp"

#include <string>
#include <vector>

#include "fermialg/errors.hpp"

namespace fermialg {

namespace pauli {

SparseOperator identity() { return SparseOperator::identity(2); }

SparseOperator sigma1() { return SparseOperator(2, {{0, 1, 1.0}, {1, 0, 1.0}}); }

SparseOperator sigma2() { return SparseOperator(2, {{0, 1, Complex{0.0, -1.0}}, {1, 0, Complex{0.0, 1.0}}}); }

SparseOperator sigma3() { return SparseOperator(2, {{0, 0, 1.0}, {1, 1, -1.0}}); }

SparseOperator sigma_plus() { return sigma1() + Complex{0.0, 1.0} * sigma2(); }

SparseOperator sigma_minus() { return sigma1() - Complex{0.0, 1.0} * sigma2(); }

}  // namespace pauli

namespace {

void check_modes(int n, int max_modes = kMaxModes) {
    if (n < 1) {
        throw DomainError("mode count must be positive, got " + std::to_string(n));
    }
    if (n > max_modes) {
        throw CapacityError("mode count " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(max_modes));
    }
}

void check_mode(int n, int k) {
    check_modes(n);
    if (k < 1 || k > n) {
        throw DomainError("mode index " + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
}

// s3 on factors 1..k-1, `local` on factor k, identity after.
SparseOperator jordan_wigner(int n, int k, const SparseOperator& local) {
    check_mode(n, k);
    const SparseOperator s3 = pauli::sigma3();
    SparseOperator out = SparseOperator::identity(1);
    for (int j = 1; j < k; ++j) {
        out = kron(out, s3);
    }
    out = kron(out, local);
    return kron(out, SparseOperator::identity(std::size_t{1} << (n - k)));
}

SparseOperator tensor_power(const SparseOperator& local, int n) {
    check_modes(n);
    SparseOperator out = SparseOperator::identity(1);
    for (int j = 0; j < n; ++j) {
        out = kron(out, local);
    }
    return out;
}

SparseOperator occupation_diagonal(int modes, int first, int last, double weight, SparseOperator base) {
    std::vector<Entry> entries;
    const std::size_t dim = mode_dimension(modes);
    for (std::size_t b = 0; b < dim; ++b) {
        int count = 0;
        for (int m = first; m <= last; ++m) {
            count += is_occupied(modes, b, m) ? 1 : 0;
        }
        if (count != 0) {
            auto idx = static_cast<std::uint32_t>(b);
            entries.push_back({idx, idx, weight * count});
        }
    }
    return base + SparseOperator(dim, std::move(entries));
}

}  // namespace

std::size_t mode_dimension(int n) {
    check_modes(n);
    return std::size_t{1} << n;
}

std::size_t vacuum_index(int n) { return mode_dimension(n) - 1; }

bool is_occupied(int n, std::size_t index, int mode) {
    check_mode(n, mode);
    return ((index >> (n - mode)) & 1U) == 0;
}

SparseOperator creation(int n, int k) { return jordan_wigner(n, k, 0.5 * pauli::sigma_plus()); }

SparseOperator annihilation(int n, int k) { return jordan_wigner(n, k, 0.5 * pauli::sigma_minus()); }

SparseOperator number_operator(int n) {
    return occupation_diagonal(n, 1, n, 1.0, SparseOperator(mode_dimension(n)));
}

SparseOperator product_raising(int n) {
    check_modes(n);
    SparseOperator out = creation(n, 1);
    for (int k = 2; k <= n; ++k) {
        out = creation(n, k) * out;
    }
    return out;
}

SparseOperator product_lowering(int n) {
    check_modes(n);
    SparseOperator out = annihilation(n, 1);
    for (int k = 2; k <= n; ++k) {
        out = out * annihilation(n, k);
    }
    return out;
}

SparseOperator product_raising_closed_form(int n) { return tensor_power(0.5 * pauli::sigma_plus(), n); }

SparseOperator product_lowering_closed_form(int n) { return tensor_power(0.5 * pauli::sigma_minus(), n); }

SparseOperator hamiltonian_k(int n) { return product_raising(n) + product_lowering(n); }

SparseOperator hamiltonian_k_closed_form(int n) {
    const std::size_t dim = mode_dimension(n);
    const auto last = static_cast<std::uint32_t>(dim - 1);
    return SparseOperator(dim, {{0, last, 1.0}, {last, 0, 1.0}});
}

SparseOperator majorana(int n, int j, MajoranaComponent comp) {
    const SparseOperator up = creation(n, j);
    const SparseOperator down = annihilation(n, j);
    if (comp == MajoranaComponent::first) {
        return up + down;
    }
    return Complex{0.0, 1.0} * (up - down);
}

int spin_position(int n, int k, Spin s) {
    check_modes(2 * n);
    if (k < 1 || k > n) {
        throw DomainError("spin mode index " + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
    return s == Spin::up ? k : k + n;
}

SparseOperator spin_creation(int n, int k, Spin s) { return creation(2 * n, spin_position(n, k, s)); }

SparseOperator spin_annihilation(int n, int k, Spin s) { return annihilation(2 * n, spin_position(n, k, s)); }

SparseOperator hamiltonian_spin(int n) {
    check_modes(2 * n);
    SparseOperator total(mode_dimension(2 * n));
    for (Spin s : {Spin::up, Spin::down}) {
        SparseOperator raise = spin_creation(n, 1, s);
        for (int k = 2; k <= n; ++k) {
            raise = spin_creation(n, k, s) * raise;
        }
        SparseOperator lower = spin_annihilation(n, 1, s);
        for (int k = 2; k <= n; ++k) {
            lower = lower * spin_annihilation(n, k, s);
        }
        total = total + raise + lower;
    }
    return total;
}

SparseOperator number_spin(int n) {
    check_modes(2 * n);
    return number_operator(2 * n);
}

SparseOperator sz(int n) {
    check_modes(2 * n);
    SparseOperator up = occupation_diagonal(2 * n, 1, n, 0.5, SparseOperator(mode_dimension(2 * n)));
    return occupation_diagonal(2 * n, n + 1, 2 * n, -0.5, up);
}

}  // namespace fermialg
