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


#include "qpu/service/address_table.hpp"

#include <algorithm>

namespace qpu::service {

AddressTable::AddressTable(std::size_t physical_capacity) : capacity_(physical_capacity) {}

std::optional<std::size_t> AddressTable::find(const ClientId& client, std::size_t local) const {
    const auto it = to_global_.find({client, local});
    if (it == to_global_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t AddressTable::take_physical() {
    if (!free_physical_.empty()) {
        // Lowest free address first keeps allocation deterministic.
        const auto it = std::min_element(free_physical_.begin(), free_physical_.end());
        const std::size_t p = *it;
        free_physical_.erase(it);
        return p;
    }
    if (next_physical_ >= capacity_) {
        throw AddressExhaustedError("physical address space exhausted (" + std::to_string(capacity_) + " addresses)");
    }
    return next_physical_++;
}

std::size_t AddressTable::ensure(const ClientId& client, std::size_t local) {
    if (const auto existing = find(client, local)) {
        return *existing;
    }
    if (free_physical() < 2) {
        throw AddressExhaustedError("physical address space exhausted (" + std::to_string(capacity_) + " addresses)");
    }
    const std::size_t first = take_physical();
    const std::size_t second = take_physical();
    const std::size_t global = next_global_++;
    to_global_[{client, local}] = global;
    to_local_[global] = {client, local};
    pairs_[global] = {first, second};
    physical_owner_[first] = {global, true};
    physical_owner_[second] = {global, false};
    return global;
}

const PhysicalPair& AddressTable::physical(std::size_t global_logical) const {
    const auto it = pairs_.find(global_logical);
    if (it == pairs_.end()) {
        throw Error("unknown global logical address " + std::to_string(global_logical));
    }
    return it->second;
}

const std::pair<ClientId, std::size_t>& AddressTable::local_of(std::size_t global_logical) const {
    const auto it = to_local_.find(global_logical);
    if (it == to_local_.end()) {
        throw Error("unknown global logical address " + std::to_string(global_logical));
    }
    return it->second;
}

std::optional<PhysicalOwner> AddressTable::owner_of_physical(std::size_t physical) const {
    const auto it = physical_owner_.find(physical);
    if (it == physical_owner_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void AddressTable::release_client(const ClientId& client) {
    for (auto it = to_global_.begin(); it != to_global_.end();) {
        if (it->first.first != client) {
            ++it;
            continue;
        }
        const std::size_t global = it->second;
        const auto pair = pairs_.at(global);
        for (const auto p : {pair.first, pair.second}) {
            physical_owner_.erase(p);
            free_physical_.push_back(p);
        }
        pairs_.erase(global);
        to_local_.erase(global);
        it = to_global_.erase(it);
    }
}

std::size_t AddressTable::free_physical() const { return free_physical_.size() + (capacity_ - next_physical_); }

}  // namespace qpu::service
