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

#include "qpu/core/error.hpp"
#include "qpu/core/local_unitary.hpp"
#include "qpu/core/operations.hpp"
#include "qpu/core/random_source.hpp"
#include "qpu/core/state_vector.hpp"
#include "qpu/core/subsystem_shape.hpp"
