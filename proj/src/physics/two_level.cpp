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


#include "qpu/physics/two_level.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qpu::physics {
namespace {

using C = std::complex<double>;
constexpr C kI{0.0, 1.0};
constexpr std::size_t kMaxSteps = std::size_t{1} << 24;
constexpr double kStepTolerance = 1e-8;

void check_pair(C alpha, C beta) {
    const double n = std::norm(alpha) + std::norm(beta);
    if (!std::isfinite(n) || std::abs(n - 1.0) > kPipelineTolerance) {
        throw NormalizationError("two-level amplitudes have norm² " + std::to_string(n));
    }
}

// Evolves in the frame rotating at the mean frequency, then restores the phase.
TwoLevelAmplitudes rk4(C alpha, C beta, const CavityAtomParams& p, std::size_t steps) {
    const double mean = (p.omega_a + p.omega_b) / 2;
    const double half = (p.omega_a - p.omega_b) / 2;
    const C kappa = p.kappa;
    const auto deriv = [&](C a, C b, C& da, C& db) {
        da = -kI * (half * a + kappa * b);
        db = -kI * (std::conj(kappa) * a - half * b);
    };
    const double h = p.t / static_cast<double>(steps);
    C a = alpha;
    C b = beta;
    for (std::size_t i = 0; i < steps; ++i) {
        C k1a, k1b, k2a, k2b, k3a, k3b, k4a, k4b;
        deriv(a, b, k1a, k1b);
        deriv(a + h / 2 * k1a, b + h / 2 * k1b, k2a, k2b);
        deriv(a + h / 2 * k2a, b + h / 2 * k2b, k3a, k3b);
        deriv(a + h * k3a, b + h * k3b, k4a, k4b);
        a += h / 6 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
        b += h / 6 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
    }
    const C phase = std::exp(-kI * mean * p.t);
    return {phase * a, phase * b};
}

double distance(const TwoLevelAmplitudes& x, const TwoLevelAmplitudes& y) {
    return std::max(std::abs(x.c1 - y.c1), std::abs(x.c2 - y.c2));
}

}  // namespace

TwoLevelAmplitudes rabi_coefficients(Amplitude alpha, Amplitude beta, const CavityAtomParams& p) {
    check_pair(alpha, beta);
    const double delta = p.omega_a - p.omega_b;
    const double kappa_abs2 = std::norm(p.kappa);
    const double rate = std::sqrt(delta * delta / 4 + kappa_abs2);
    const C global = std::exp(-kI * (p.omega_a + p.omega_b) * p.t / 2.0);
    const double c = std::cos(rate * p.t);
    const double s = std::sin(rate * p.t);
    if (rate == 0.0) {
        return {global * alpha, global * beta};
    }
    const double denom = std::sqrt(delta * delta + 4 * kappa_abs2);
    const C c1 = global * alpha * c - kI * global * (alpha * delta + 2.0 * beta * p.kappa) / denom * s;
    const C c2 = global * beta * c - kI * global * (2.0 * alpha * std::conj(p.kappa) - beta * delta) / denom * s;
    return {c1, c2};
}

TwoLevelAmplitudes integrate_two_level(Amplitude alpha, Amplitude beta, const CavityAtomParams& p,
                                       std::size_t steps) {
    check_pair(alpha, beta);
    if (!std::isfinite(p.t) || !std::isfinite(p.omega_a) || !std::isfinite(p.omega_b) ||
        !std::isfinite(p.kappa.real()) || !std::isfinite(p.kappa.imag())) {
        throw ConvergenceError("non-finite two-level parameters");
    }
    const bool automatic = steps == 0;
    if (automatic) {
        const double scale = std::abs(p.omega_a - p.omega_b) + std::abs(p.kappa);
        steps = std::max<std::size_t>(16, static_cast<std::size_t>(std::ceil(4 * scale * std::abs(p.t))));
    }
    while (steps <= kMaxSteps) {
        const auto coarse = rk4(alpha, beta, p, steps);
        const auto fine = rk4(alpha, beta, p, 2 * steps);
        if (distance(coarse, fine) < kStepTolerance) {
            return fine;
        }
        if (!automatic) {
            break;
        }
        steps *= 2;
    }
    throw ConvergenceError("two-level integration did not converge with " + std::to_string(steps) + " steps");
}

TwoLevelAmplitudes zeeman_phase(Amplitude c1, Amplitude c2, const ZeemanParams& p) {
    const double split = p.lande_g * p.mu * p.B / 2;
    const double omega_a = p.omega_0 + split;
    const double omega_b = p.omega_0 - split;
    return {c1 * std::exp(-kI * omega_a * p.t), c2 * std::exp(-kI * omega_b * p.t)};
}

}  // namespace qpu::physics
