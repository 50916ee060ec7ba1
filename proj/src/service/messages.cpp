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


#include "qpu/service/messages.hpp"

#include <json.hpp>

namespace qpu::service {
namespace {

using Json = nlohmann::ordered_json;

std::optional<std::string> id_of(const Json& j) {
    if (j.is_object() && j.contains("id")) {
        return j["id"].dump();
    }
    return std::nullopt;
}

std::optional<std::string> client_of(const Json& j) {
    if (j.is_object() && j.contains("client") && j["client"].is_string()) {
        return j["client"].get<std::string>();
    }
    return std::nullopt;
}

OpDescriptor decode_op(const Json& j) {
    OpDescriptor d;
    if (!j.is_object()) {
        d.problems.push_back("operation must be an object");
        return d;
    }
    for (const auto& [key, value] : j.items()) {
        if (key == "op") {
            if (value.is_string()) {
                d.op = value.get<std::string>();
            } else {
                d.problems.push_back("field 'op' must be a string");
            }
        } else if (key == "qubits") {
            bool ok = value.is_array();
            if (ok) {
                for (const auto& q : value) {
                    if (!q.is_number_integer()) {
                        ok = false;
                        break;
                    }
                    d.qubits.push_back(q.get<std::int64_t>());
                }
            }
            if (!ok) {
                d.qubits.clear();
                d.problems.push_back("field 'qubits' must be an array of integers");
            }
        } else if (key == "theta" || key == "phi") {
            if (value.is_number()) {
                (key == "theta" ? d.theta : d.phi) = value.get<double>();
            } else {
                d.problems.push_back("field '" + key + "' must be a number");
            }
        } else {
            d.problems.push_back("unexpected field '" + key + "'");
        }
    }
    if (!j.contains("op")) {
        d.problems.push_back("missing field 'op'");
    }
    if (!j.contains("qubits")) {
        d.problems.push_back("missing field 'qubits'");
    }
    return d;
}

void put_id(Json& j, const std::optional<std::string>& id) {
    if (id) {
        j["id"] = Json::parse(*id);
    }
}

std::string line(const Json& j) { return j.dump(); }

}  // namespace

IncomingMessage parse_message(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        return MalformedMessage{std::string("invalid JSON: ") + e.what(), std::nullopt, std::nullopt};
    }
    if (!j.is_object()) {
        return MalformedMessage{"message must be a JSON object", std::nullopt, std::nullopt};
    }
    const auto id = id_of(j);
    const auto client = client_of(j);
    if (!j.contains("type") || !j["type"].is_string()) {
        return MalformedMessage{"missing field 'type'", client, id};
    }
    const auto type = j["type"].get<std::string>();
    if (type == "capacity") {
        return CapacityQuery{client, id};
    }
    if (type != "submit") {
        return MalformedMessage{"unknown message type '" + type + "'", client, id};
    }
    if (!client) {
        return MalformedMessage{"field 'client' must be a string", std::nullopt, id};
    }
    if (!j.contains("ops") || !j["ops"].is_array()) {
        return MalformedMessage{"field 'ops' must be an array", client, id};
    }
    SubmitMessage m{{*client, {}}, id};
    for (const auto& op : j["ops"]) {
        m.request.ops.push_back(decode_op(op));
    }
    return m;
}

std::string format_submit(const ClientRequest& request, const std::optional<std::string>& id) {
    Json j{{"type", "submit"}, {"client", request.client}};
    put_id(j, id);
    Json ops = Json::array();
    for (const auto& d : request.ops) {
        Json op{{"op", d.op}, {"qubits", d.qubits}};
        if (d.theta) {
            op["theta"] = *d.theta;
        }
        if (d.phi) {
            op["phi"] = *d.phi;
        }
        ops.push_back(std::move(op));
    }
    j["ops"] = std::move(ops);
    return line(j);
}

std::string format_capacity_query(const std::optional<std::string>& id) {
    Json j{{"type", "capacity"}};
    put_id(j, id);
    return line(j);
}

std::string format_error(const std::optional<std::string>& client, const std::vector<OpError>& errors,
                         const std::optional<std::string>& id) {
    Json j{{"type", "error"}};
    j["client"] = client ? Json(*client) : Json(nullptr);
    put_id(j, id);
    Json list = Json::array();
    for (const auto& e : errors) {
        list.push_back({{"index", e.index ? Json(*e.index) : Json(nullptr)}, {"message", e.message}});
    }
    j["errors"] = std::move(list);
    return line(j);
}

std::string format_response(const ServiceResponse& response, const std::optional<std::string>& id) {
    if (!response.ok()) {
        return format_error(response.client, response.errors, id);
    }
    Json j{{"type", "result"}, {"client", response.client}};
    put_id(j, id);
    Json list = Json::array();
    for (const auto& r : response.results) {
        list.push_back({{"qubit", r.qubit}, {"bit", r.bit}});
    }
    j["results"] = std::move(list);
    return line(j);
}

std::string format_capacity(std::size_t capacity, const std::optional<std::string>& id) {
    Json j{{"type", "capacity"}, {"capacity", capacity}};
    put_id(j, id);
    return line(j);
}

ResponseMessage parse_response(std::string_view text) {
    try {
        const auto j = Json::parse(text);
        ResponseMessage m;
        m.type = j.at("type").get<std::string>();
        m.client = client_of(j);
        m.id = id_of(j);
        if (j.contains("results")) {
            for (const auto& r : j["results"]) {
                m.results.push_back({r.at("qubit").get<std::size_t>(), r.at("bit").get<int>()});
            }
        }
        if (j.contains("errors")) {
            for (const auto& e : j["errors"]) {
                OpError err{std::nullopt, e.at("message").get<std::string>()};
                if (!e.at("index").is_null()) {
                    err.index = e["index"].get<std::size_t>();
                }
                m.errors.push_back(std::move(err));
            }
        }
        if (j.contains("capacity")) {
            m.capacity = j["capacity"].get<std::size_t>();
        }
        return m;
    } catch (const Json::exception& e) {
        throw Error(std::string("malformed response: ") + e.what());
    }
}

}  // namespace qpu::service
