// Copyright 2026 The QPU Emulator Authors
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

#include <cmath>
#include <complex>

#include "qpu/core/local_unitary.hpp"

namespace qpu {

/// QET(θ) on a qubit pair, basis |00⟩,|01⟩,|10⟩,|11⟩.
///
/// The single-excitation block is [[cos θ/2, i sin θ/2], [i sin θ/2, cos θ/2]];
/// |00⟩ and |11⟩ are untouched.
template <typename Scalar = Amplitude>
BasicLocalUnitary<Scalar> qet_matrix(typename Eigen::NumTraits<Scalar>::Real theta) {
    using Real = typename Eigen::NumTraits<Scalar>::Real;
    auto m = DenseMatrix<Scalar>::Identity(4, 4).eval();
    const Real c = std::cos(theta / 2);
    const Real s = std::sin(theta / 2);
    m(1, 1) = Scalar(c, 0);
    m(2, 2) = Scalar(c, 0);
    m(1, 2) = Scalar(0, s);
    m(2, 1) = Scalar(0, s);
    return BasicLocalUnitary<Scalar>::on_qubits(2, std::move(m));
}

/// PHASE(θ, ϕ) = diag(1, e^{−iθ/2+iϕ/2}, e^{iθ/2+iϕ/2}, 1).
template <typename Scalar = Amplitude>
BasicLocalUnitary<Scalar> phase_matrix(typename Eigen::NumTraits<Scalar>::Real theta,
                                       typename Eigen::NumTraits<Scalar>::Real phi) {
    auto m = DenseMatrix<Scalar>::Identity(4, 4).eval();
    m(1, 1) = std::polar<typename Eigen::NumTraits<Scalar>::Real>(1, -theta / 2 + phi / 2);
    m(2, 2) = std::polar<typename Eigen::NumTraits<Scalar>::Real>(1, theta / 2 + phi / 2);
    return BasicLocalUnitary<Scalar>::on_qubits(2, std::move(m));
}

/// CQET on (control, target1, target2): QET(π) on the targets' |01⟩,|10⟩
/// block while the control is |0⟩, identity elsewhere.
template <typename Scalar = Amplitude>
BasicLocalUnitary<Scalar> cqet_matrix() {
    auto m = DenseMatrix<Scalar>::Identity(8, 8).eval();
    // θ = π: cos θ/2 = 0 and i sin θ/2 = i, written exactly.
    m(1, 1) = Scalar(0);
    m(2, 2) = Scalar(0);
    m(1, 2) = Scalar(0, 1);
    m(2, 1) = Scalar(0, 1);
    return BasicLocalUnitary<Scalar>::on_qubits(3, std::move(m));
}

/// Two-position exchange, used for LOAD/SAVE.
template <typename Scalar = Amplitude>
BasicLocalUnitary<Scalar> swap_matrix() {
    auto m = DenseMatrix<Scalar>::Zero(4, 4).eval();
    m(0, 0) = m(3, 3) = Scalar(1);
    m(1, 2) = m(2, 1) = Scalar(1);
    return BasicLocalUnitary<Scalar>::on_qubits(2, std::move(m));
}

template <typename Scalar = Amplitude>
BasicLocalUnitary<Scalar> pauli_x() {
    auto m = DenseMatrix<Scalar>::Zero(2, 2).eval();
    m(0, 1) = m(1, 0) = Scalar(1);
    return BasicLocalUnitary<Scalar>::on_qubits(1, std::move(m));
}

}  // namespace qpu
