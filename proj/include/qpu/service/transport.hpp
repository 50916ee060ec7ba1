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

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <list>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>

#include "qpu/service/service.hpp"

namespace qpu::service {

/// Handles one request line and returns the response line (without newline).
/// Blank lines yield an empty string. Without a running dispatcher the
/// service is pumped inline, so responses follow arrival order exactly.
std::string handle_line(Service& service, std::string_view line);

/// Reads requests from `in` until EOF, writing one response line per request.
void serve_stdio(Service& service, std::istream& in, std::ostream& out);

/// TCP server on 127.0.0.1, one thread per connection.
class SocketServer {
  public:
    /// Port 0 picks an ephemeral port. Throws Error if binding fails.
    SocketServer(Service& service, std::uint16_t port = 0);
    ~SocketServer();

    SocketServer(const SocketServer&) = delete;
    SocketServer& operator=(const SocketServer&) = delete;

    std::uint16_t port() const { return port_; }
    void stop();

  private:
    struct Connection {
        int fd;
        std::thread worker;
    };

    Service& service_;
    int listen_fd_ = -1;
    std::uint16_t port_ = 0;
    std::atomic<bool> stopping_{false};
    std::thread acceptor_;
    std::mutex connections_mutex_;
    std::list<Connection> connections_;

    void accept_loop();
    void serve_connection(int fd);
};

/// Blocking line-oriented TCP client for 127.0.0.1.
class LineClient {
  public:
    explicit LineClient(std::uint16_t port);
    ~LineClient();

    LineClient(const LineClient&) = delete;
    LineClient& operator=(const LineClient&) = delete;

    void send(std::string_view line);
    /// Next line without its newline; throws Error if the connection closed.
    std::string receive();
    std::string request(std::string_view line);

  private:
    int fd_ = -1;
    std::string buffer_;
};

}  // namespace qpu::service
