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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpu {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Shapes, dimensions or subsystem indices that do not fit together.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Basis level outside the range of its subsystem.
class LevelError : public Error {
  public:
    LevelError(std::size_t subsystem, std::size_t level, std::size_t dim)
        : Error("level " + std::to_string(level) + " out of range for subsystem " +
                std::to_string(subsystem) + " (dimension " + std::to_string(dim) + ")"),
          subsystem_(subsystem) {}

    std::size_t subsystem() const noexcept { return subsystem_; }

  private:
    std::size_t subsystem_;
};

class MeasurementError : public Error {
  public:
    using Error::Error;
};

class NormalizationError : public Error {
  public:
    using Error::Error;
};

}  // namespace qpu
