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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpu/core/error.hpp"
#include "qpu/logical/compiler.hpp"

namespace qpu::service {

using ClientId = std::string;
using logical::PhysicalPair;

class AddressExhaustedError : public Error {
  public:
    using Error::Error;
};

/// Where a global physical address sits: its logical qubit and pair position.
struct PhysicalOwner {
    std::size_t global_logical = 0;
    bool is_first = true;
};

/// Local logical ↔ global logical per client, global logical → physical pair.
class AddressTable {
  public:
    explicit AddressTable(std::size_t physical_capacity = 1 << 16);

    std::optional<std::size_t> find(const ClientId& client, std::size_t local) const;
    /// Existing global address, or a new one with a fresh physical pair.
    /// Throws AddressExhaustedError when no pair is free.
    std::size_t ensure(const ClientId& client, std::size_t local);

    /// Throws Error for unknown addresses.
    const PhysicalPair& physical(std::size_t global_logical) const;
    const std::pair<ClientId, std::size_t>& local_of(std::size_t global_logical) const;
    std::optional<PhysicalOwner> owner_of_physical(std::size_t physical) const;

    /// Frees every entry of the client; its physical addresses become reusable.
    void release_client(const ClientId& client);

    std::size_t entry_count() const { return to_local_.size(); }
    std::size_t free_physical() const;
    std::size_t physical_capacity() const { return capacity_; }

  private:
    std::size_t capacity_;
    std::size_t next_global_ = 0;
    std::size_t next_physical_ = 0;
    std::vector<std::size_t> free_physical_;
    std::map<std::pair<ClientId, std::size_t>, std::size_t> to_global_;
    std::map<std::size_t, std::pair<ClientId, std::size_t>> to_local_;
    std::map<std::size_t, PhysicalPair> pairs_;
    std::map<std::size_t, PhysicalOwner> physical_owner_;

    std::size_t take_physical();
};

}  // namespace qpu::service
