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

#include <complex>
#include <cstddef>

#include "qpu/core/error.hpp"
#include "qpu/core/state_vector.hpp"

namespace qpu::physics {

/// Effective two-level coupling with ħ = 1. Hamiltonian [[ω_a, κ], [κ*, ω_b]]
/// in the basis (ψ₁, ψ₂).
struct CavityAtomParams {
    std::complex<double> kappa;
    double omega_a = 0.0;
    double omega_b = 0.0;
    double t = 0.0;
};

struct ZeemanParams {
    double omega_0 = 0.0;
    double lande_g = 2.0;
    double mu = 1.0;
    double B = 0.0;
    double t = 0.0;
};

struct TwoLevelAmplitudes {
    Amplitude c1;
    Amplitude c2;
};

class ConvergenceError : public Error {
  public:
    using Error::Error;
};

/// Closed-form coefficients of the detuned Rabi problem.
/// Throws NormalizationError unless |α|²+|β|² = 1 within 1e−9.
TwoLevelAmplitudes rabi_coefficients(Amplitude alpha, Amplitude beta, const CavityAtomParams& p);

/// RK4 integration of i dc/dt = H c. With steps == 0 the step count is chosen
/// automatically; in either case the result is accepted only if halving the
/// step changes it by less than 1e−8 (otherwise ConvergenceError).
TwoLevelAmplitudes integrate_two_level(Amplitude alpha, Amplitude beta, const CavityAtomParams& p,
                                       std::size_t steps = 0);

/// Free evolution in a magnetic field: ω_{a,b} = ω₀ ± gμB/2.
TwoLevelAmplitudes zeeman_phase(Amplitude c1, Amplitude c2, const ZeemanParams& p);

}  // namespace qpu::physics
