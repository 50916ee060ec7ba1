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


#include "qpu/logical/su2.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <tuple>

#include "qpu/core/state_vector.hpp"
#include "qpu/logical/compiler.hpp"

namespace qpu::logical {
namespace {

using C = std::complex<double>;
constexpr C kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;
constexpr double kDegenerate = 1e-12;

double wrap(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0) {
        r += period;
    }
    // Values within rounding of the period collapse to 0.
    return period - r < 1e-12 ? 0.0 : r;
}

double rounded(double x) { return std::round(x * 1e9) / 1e9; }

}  // namespace

Eigen::Matrix2cd rx_matrix(double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    Eigen::Matrix2cd m;
    m << C(c), -kI * s, -kI * s, C(c);
    return m;
}

Eigen::Matrix2cd rz_matrix(double theta) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = std::polar(1.0, -theta / 2);
    m(1, 1) = std::polar(1.0, theta / 2);
    return m;
}

Eigen::Matrix2cd compose_zxz(const ZxzAngles& z) {
    return std::polar(1.0, z.global_phase) * rz_matrix(z.a) * rx_matrix(z.b) * rz_matrix(z.c);
}

ZxzAngles decompose_su2(const Eigen::Matrix2cd& u) {
    if (!u.allFinite() || (u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > kAlgebraTolerance) {
        throw CompileError("SU2 matrix is not unitary");
    }
    const double base_phase = std::arg(u.determinant()) / 2;
    std::optional<ZxzAngles> best;
    const auto key = [](const ZxzAngles& z) {
        return std::make_tuple(rounded(z.a), rounded(z.c), rounded(z.b), rounded(z.global_phase));
    };
    const auto consider = [&](ZxzAngles z) {
        z.a = wrap(z.a, 4 * kPi);
        z.c = wrap(z.c, 4 * kPi);
        z.b = wrap(z.b, 2 * kPi);
        z.global_phase = wrap(z.global_phase, 2 * kPi);
        if ((compose_zxz(z) - u).cwiseAbs().maxCoeff() > 1e-9) {
            return;
        }
        if (!best || key(z) < key(*best)) {
            best = z;
        }
    };
    for (const double delta : {base_phase, base_phase + kPi}) {
        const Eigen::Matrix2cd v = std::polar(1.0, -delta) * u;
        const double h0 = std::atan2(std::abs(v(0, 1)), std::abs(v(0, 0)));
        for (const double h : {h0, kPi - h0}) {
            const double ch = std::cos(h);
            const double sh = std::sin(h);
            // v00 = e^{-i(a+c)/2} cos h, i·v01 = e^{-i(a-c)/2} sin h
            const bool has_sum = std::abs(ch) > kDegenerate;
            const bool has_diff = std::abs(sh) > kDegenerate;
            const double sum = has_sum ? -2 * std::arg(v(0, 0) / ch) : 0.0;
            const double diff = has_diff ? -2 * std::arg(kI * v(0, 1) / sh) : 0.0;
            if (has_sum && has_diff) {
                const double a = (sum + diff) / 2;
                const double c = (sum - diff) / 2;
                consider({a, 2 * h, c, delta});
                consider({a + 2 * kPi, 2 * h, c + 2 * kPi, delta});
            } else if (has_sum) {
                consider({0.0, 2 * h, sum, delta});
            } else {
                consider({0.0, 2 * h, -diff, delta});
            }
        }
    }
    if (!best) {
        throw CompileError("Z-X-Z decomposition failed");
    }
    return *best;
}

}  // namespace qpu::logical
