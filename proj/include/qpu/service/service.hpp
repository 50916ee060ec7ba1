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

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

#include "qpu/service/address_table.hpp"
#include "qpu/service/pipeline.hpp"

namespace qpu::service {

struct ServiceOptions {
    AnalysisOptions analysis;
    std::size_t physical_addresses = 1 << 16;
};

struct ServiceResponse {
    ClientId client;
    std::uint64_t ticket = 0;
    std::vector<QubitResult> results;
    std::vector<OpError> errors;

    bool ok() const { return errors.empty(); }
};

/// Multi-client front end: requests are analyzed and transformed on submit,
/// queued FIFO, and executed batch by batch on the backend, either by pump()
/// or by the dispatcher thread started with start().
class Service {
  public:
    using Observer = std::function<void(const ExecutionBatch&, const DispatchResult&)>;

    explicit Service(std::unique_ptr<Backend> backend, ServiceOptions options = {});
    ~Service();

    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    /// Rejected requests complete immediately with errors.
    std::future<ServiceResponse> submit(const ClientRequest& request);

    /// Dispatches one batch; returns the number of segments executed.
    std::size_t pump();
    /// Pumps until the queue is empty.
    void drain();

    void start();
    /// Stops the dispatcher; still-queued requests complete with an error.
    void stop();
    bool running() const;

    std::size_t capacity() const;
    std::size_t pending() const;
    void release_client(const ClientId& client);
    /// Called after every batch from the dispatching thread.
    void set_observer(Observer observer);
    /// Snapshot of the address table.
    AddressTable table() const;

  private:
    std::unique_ptr<Backend> backend_;
    ServiceOptions options_;
    mutable std::mutex mutex_;
    std::mutex dispatch_mutex_;
    std::condition_variable wake_;
    AddressTable table_;
    std::deque<Segment> queue_;
    std::map<std::uint64_t, std::promise<ServiceResponse>> waiting_;
    std::uint64_t next_ticket_ = 0;
    std::uint64_t clock_ = 0;
    Observer observer_;
    std::thread dispatcher_;
    bool stopping_ = false;
    bool running_ = false;
};

}  // namespace qpu::service
