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

#include <Eigen/Dense>

namespace qpu::logical {

Eigen::Matrix2cd rx_matrix(double theta);
Eigen::Matrix2cd rz_matrix(double theta);

/// U = e^{iδ}·Rz(a)·Rx(b)·Rz(c), with a, c ∈ [0, 4π), b ∈ [0, 2π), δ ∈ [0, 2π).
struct ZxzAngles {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double global_phase = 0.0;
};

/// Deterministic Z-X-Z factorization. Among the equivalent angle sets the
/// lexicographically smallest (a, c, b, δ) is returned.
/// Throws CompileError if `u` is not unitary within 1e−12.
ZxzAngles decompose_su2(const Eigen::Matrix2cd& u);

Eigen::Matrix2cd compose_zxz(const ZxzAngles& angles);

}  // namespace qpu::logical
