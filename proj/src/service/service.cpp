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


#include "qpu/service/service.hpp"

#include <string>

namespace qpu::service {
namespace {

std::future<ServiceResponse> ready(ServiceResponse response) {
    std::promise<ServiceResponse> p;
    p.set_value(std::move(response));
    return p.get_future();
}

}  // namespace

Service::Service(std::unique_ptr<Backend> backend, ServiceOptions options)
    : backend_(std::move(backend)), options_(options), table_(options.physical_addresses) {}

Service::~Service() { stop(); }

std::future<ServiceResponse> Service::submit(const ClientRequest& request) {
    std::unique_lock lock(mutex_);
    const std::uint64_t ticket = next_ticket_++;
    auto analysis = analyze(request, table_, options_.analysis);
    if (!analysis.request) {
        return ready({request.client, ticket, {}, std::move(analysis.errors)});
    }
    Segment segment;
    try {
        segment = transform(*analysis.request, table_, ticket);
    } catch (const Error& e) {
        return ready({request.client, ticket, {}, {{std::nullopt, e.what()}}});
    }
    if (segment.size() > backend_->capacity()) {
        return ready({request.client,
                      ticket,
                      {},
                      {{std::nullopt, "request needs " + std::to_string(segment.size()) +
                                          " commands but the controller accepts " +
                                          std::to_string(backend_->capacity())}}});
    }
    if (stopping_) {
        return ready({request.client, ticket, {}, {{std::nullopt, "service stopped"}}});
    }
    auto future = waiting_[ticket].get_future();
    queue_.push_back(std::move(segment));
    lock.unlock();
    wake_.notify_all();
    return future;
}

std::size_t Service::pump() {
    std::lock_guard dispatching(dispatch_mutex_);
    ExecutionBatch batch;
    {
        std::lock_guard lock(mutex_);
        batch = buffer_and_batch(queue_, backend_->capacity());
    }
    if (batch.segments.empty()) {
        return 0;
    }
    const auto result = dispatch(batch, *backend_, clock_);
    std::vector<std::pair<std::promise<ServiceResponse>, ServiceResponse>> done;
    Observer observer;
    {
        std::lock_guard lock(mutex_);
        for (auto& r : demux_results(result, table_)) {
            auto it = waiting_.find(r.ticket);
            if (it == waiting_.end()) {
                continue;
            }
            done.emplace_back(std::move(it->second),
                              ServiceResponse{r.client, r.ticket, std::move(r.results), std::move(r.errors)});
            waiting_.erase(it);
        }
        observer = observer_;
    }
    if (observer) {
        observer(batch, result);
    }
    for (auto& [promise, response] : done) {
        promise.set_value(std::move(response));
    }
    return batch.segments.size();
}

void Service::drain() {
    while (pump() > 0) {
    }
}

void Service::start() {
    std::lock_guard lock(mutex_);
    if (running_) {
        return;
    }
    stopping_ = false;
    running_ = true;
    dispatcher_ = std::thread([this] {
        for (;;) {
            {
                std::unique_lock lock(mutex_);
                wake_.wait(lock, [this] { return stopping_ || !queue_.empty(); });
                if (stopping_) {
                    return;
                }
            }
            pump();
        }
    });
}

void Service::stop() {
    {
        std::lock_guard lock(mutex_);
        stopping_ = true;
    }
    wake_.notify_all();
    if (dispatcher_.joinable()) {
        dispatcher_.join();
    }
    std::lock_guard lock(mutex_);
    running_ = false;
    queue_.clear();
    for (auto& [ticket, promise] : waiting_) {
        promise.set_value({{}, ticket, {}, {{std::nullopt, "service stopped"}}});
    }
    waiting_.clear();
}

bool Service::running() const {
    std::lock_guard lock(mutex_);
    return running_;
}

std::size_t Service::capacity() const { return backend_->capacity(); }

std::size_t Service::pending() const {
    std::lock_guard lock(mutex_);
    return queue_.size();
}

void Service::release_client(const ClientId& client) {
    std::lock_guard lock(mutex_);
    table_.release_client(client);
}

void Service::set_observer(Observer observer) {
    std::lock_guard lock(mutex_);
    observer_ = std::move(observer);
}

AddressTable Service::table() const {
    std::lock_guard lock(mutex_);
    return table_;
}

}  // namespace qpu::service
