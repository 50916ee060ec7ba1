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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qpu/core/error.hpp"
#include "qpu/core/subsystem_shape.hpp"

namespace qpu {

/// Tolerance for exact algebraic identities (unitarity, composition).
inline constexpr double kAlgebraTolerance = 1e-12;
/// Tolerance for quantities accumulated along a pipeline (normalization).
inline constexpr double kPipelineTolerance = 1e-9;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

template <typename Real>
constexpr Real normalization_tolerance() {
    return std::max<Real>(static_cast<Real>(kPipelineTolerance),
                          Real(1000) * std::numeric_limits<Real>::epsilon());
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        const auto z = m.derived().coeff(i);
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

}  // namespace detail

/// Tag for constructing a state whose normalization is not enforced
/// (projections and other intermediate quantities).
struct Unnormalized {};
inline constexpr Unnormalized unnormalized{};

/// Complex amplitude vector over a composite discrete system.
///
/// Normalized to 1 within kPipelineTolerance unless built with `unnormalized`.
template <typename Scalar>
class BasicStateVector {
  public:
    using Real = typename Eigen::NumTraits<Scalar>::Real;
    using Vector = DenseVector<Scalar>;

    BasicStateVector(SubsystemShape shape, Vector amplitudes)
        : shape_(std::move(shape)), amps_(std::move(amplitudes)) {
        check_size();
        if (!detail::all_finite(amps_)) {
            throw NormalizationError("state vector has non-finite amplitudes");
        }
        const Real n2 = amps_.squaredNorm();
        if (std::abs(n2 - Real(1)) > detail::normalization_tolerance<Real>()) {
            throw NormalizationError("state vector norm^2 is " + std::to_string(double(n2)) +
                                     ", expected 1");
        }
    }

    BasicStateVector(SubsystemShape shape, Vector amplitudes, Unnormalized)
        : shape_(std::move(shape)), amps_(std::move(amplitudes)) {
        check_size();
    }

    const SubsystemShape& shape() const noexcept { return shape_; }
    const Vector& amplitudes() const noexcept { return amps_; }
    std::size_t dimension() const noexcept { return static_cast<std::size_t>(amps_.size()); }

    Scalar amplitude(std::size_t index) const { return amps_(static_cast<Eigen::Index>(index)); }
    Scalar amplitude(std::span<const std::size_t> levels) const {
        return amplitude(shape_.index_of(levels));
    }
    Scalar amplitude(std::initializer_list<std::size_t> levels) const {
        return amplitude(std::span<const std::size_t>(levels.begin(), levels.size()));
    }

    Real norm_squared() const { return amps_.squaredNorm(); }

  private:
    void check_size() const {
        if (static_cast<std::size_t>(amps_.size()) != shape_.total_dimension()) {
            throw DimensionError("amplitude count " + std::to_string(amps_.size()) +
                                 " does not match shape dimension " +
                                 std::to_string(shape_.total_dimension()));
        }
    }

    SubsystemShape shape_;
    Vector amps_;
};

using Amplitude = std::complex<double>;
using StateVector = BasicStateVector<Amplitude>;

/// Product basis state |levels[0]> ⊗ |levels[1]> ⊗ ...
template <typename Scalar = Amplitude>
BasicStateVector<Scalar> basis_state(const SubsystemShape& shape,
                                     std::span<const std::size_t> levels) {
    DenseVector<Scalar> amps = DenseVector<Scalar>::Zero(
        static_cast<Eigen::Index>(shape.total_dimension()));
    amps(static_cast<Eigen::Index>(shape.index_of(levels))) = Scalar(1);
    return BasicStateVector<Scalar>(shape, std::move(amps));
}

template <typename Scalar = Amplitude>
BasicStateVector<Scalar> basis_state(const SubsystemShape& shape,
                                     std::initializer_list<std::size_t> levels) {
    return basis_state<Scalar>(shape, std::span<const std::size_t>(levels.begin(), levels.size()));
}

}  // namespace qpu
