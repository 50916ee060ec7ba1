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
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qpu/service/pipeline.hpp"
#include "qpu/service/service.hpp"

namespace qpu::service {

/// Newline-delimited JSON messages. Every message may carry an "id" that is
/// echoed verbatim in the response; ids are kept as serialized JSON.
struct SubmitMessage {
    ClientRequest request;
    std::optional<std::string> id;
};

struct CapacityQuery {
    std::optional<std::string> client;
    std::optional<std::string> id;
};

struct MalformedMessage {
    std::string message;
    std::optional<std::string> client;
    std::optional<std::string> id;
};

using IncomingMessage = std::variant<SubmitMessage, CapacityQuery, MalformedMessage>;

/// {"type":"submit","client":c,"ops":[{"op":..,"qubits":[..],"theta"?:..,"phi"?:..}]}
/// or {"type":"capacity"}. Op-level problems are left for analysis.
IncomingMessage parse_message(std::string_view line);

std::string format_submit(const ClientRequest& request, const std::optional<std::string>& id = std::nullopt);
std::string format_capacity_query(const std::optional<std::string>& id = std::nullopt);

/// {"type":"result","client":c,"results":[{"qubit":q,"bit":b}]} or
/// {"type":"error","client":c,"errors":[{"index":i|null,"message":m}]}.
std::string format_response(const ServiceResponse& response, const std::optional<std::string>& id = std::nullopt);
std::string format_capacity(std::size_t capacity, const std::optional<std::string>& id = std::nullopt);
std::string format_error(const std::optional<std::string>& client, const std::vector<OpError>& errors,
                         const std::optional<std::string>& id = std::nullopt);

/// Decoded response, for clients.
struct ResponseMessage {
    std::string type;
    std::optional<std::string> client;
    std::vector<QubitResult> results;
    std::vector<OpError> errors;
    std::optional<std::size_t> capacity;
    std::optional<std::string> id;
};

/// Throws Error for text that is not a response message.
ResponseMessage parse_response(std::string_view line);

}  // namespace qpu::service
