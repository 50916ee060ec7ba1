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


#include "qpu/service/transport.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <istream>
#include <ostream>

#include "qpu/service/messages.hpp"

namespace qpu::service {
namespace {

bool blank(std::string_view line) { return line.find_first_not_of(" \t\r") == std::string_view::npos; }

void write_all(int fd, std::string_view data) {
    while (!data.empty()) {
        const ssize_t n = ::send(fd, data.data(), data.size(), MSG_NOSIGNAL);
        if (n <= 0) {
            if (n < 0 && errno == EINTR) {
                continue;
            }
            throw Error(std::string("socket write failed: ") + std::strerror(errno));
        }
        data.remove_prefix(static_cast<std::size_t>(n));
    }
}

// Reads until `buffer` holds a full line; false on EOF.
bool read_line(int fd, std::string& buffer, std::string& line) {
    for (;;) {
        if (const auto nl = buffer.find('\n'); nl != std::string::npos) {
            line = buffer.substr(0, nl);
            buffer.erase(0, nl + 1);
            return true;
        }
        char chunk[4096];
        const ssize_t n = ::recv(fd, chunk, sizeof chunk, 0);
        if (n < 0 && errno == EINTR) {
            continue;
        }
        if (n <= 0) {
            return false;
        }
        buffer.append(chunk, static_cast<std::size_t>(n));
    }
}

}  // namespace

std::string handle_line(Service& service, std::string_view line) {
    if (blank(line)) {
        return {};
    }
    const auto message = parse_message(line);
    if (const auto* bad = std::get_if<MalformedMessage>(&message)) {
        return format_error(bad->client, {{std::nullopt, bad->message}}, bad->id);
    }
    if (const auto* query = std::get_if<CapacityQuery>(&message)) {
        return format_capacity(service.capacity(), query->id);
    }
    const auto& submit = std::get<SubmitMessage>(message);
    auto future = service.submit(submit.request);
    if (!service.running()) {
        while (future.wait_for(std::chrono::seconds(0)) != std::future_status::ready && service.pump() > 0) {
        }
    }
    return format_response(future.get(), submit.id);
}

void serve_stdio(Service& service, std::istream& in, std::ostream& out) {
    std::string line;
    while (std::getline(in, line)) {
        const auto response = handle_line(service, line);
        if (!response.empty()) {
            out << response << '\n' << std::flush;
        }
    }
}

SocketServer::SocketServer(Service& service, std::uint16_t port) : service_(service) {
    listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (listen_fd_ < 0) {
        throw Error(std::string("socket: ") + std::strerror(errno));
    }
    const int yes = 1;
    ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    addr.sin_port = htons(port);
    if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) < 0 || ::listen(listen_fd_, 16) < 0) {
        const std::string reason = std::strerror(errno);
        ::close(listen_fd_);
        throw Error("cannot listen on 127.0.0.1:" + std::to_string(port) + ": " + reason);
    }
    socklen_t len = sizeof addr;
    ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
    port_ = ntohs(addr.sin_port);
    acceptor_ = std::thread([this] { accept_loop(); });
}

SocketServer::~SocketServer() { stop(); }

void SocketServer::accept_loop() {
    while (!stopping_) {
        pollfd pfd{listen_fd_, POLLIN, 0};
        if (::poll(&pfd, 1, 100) <= 0) {
            continue;
        }
        const int fd = ::accept(listen_fd_, nullptr, nullptr);
        if (fd < 0) {
            continue;
        }
        std::lock_guard lock(connections_mutex_);
        auto& c = connections_.emplace_back(Connection{fd, {}});
        c.worker = std::thread([this, fd] { serve_connection(fd); });
    }
}

void SocketServer::serve_connection(int fd) {
    std::string buffer;
    std::string line;
    try {
        while (read_line(fd, buffer, line)) {
            const auto response = handle_line(service_, line);
            if (!response.empty()) {
                write_all(fd, response + "\n");
            }
        }
    } catch (const Error&) {
        // Peer went away; the connection just ends.
    }
    ::shutdown(fd, SHUT_RDWR);
}

void SocketServer::stop() {
    if (stopping_.exchange(true)) {
        return;
    }
    if (acceptor_.joinable()) {
        acceptor_.join();
    }
    ::close(listen_fd_);
    std::lock_guard lock(connections_mutex_);
    for (auto& c : connections_) {
        ::shutdown(c.fd, SHUT_RDWR);
    }
    for (auto& c : connections_) {
        if (c.worker.joinable()) {
            c.worker.join();
        }
        ::close(c.fd);
    }
    connections_.clear();
}

LineClient::LineClient(std::uint16_t port) {
    fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    addr.sin_port = htons(port);
    if (fd_ < 0 || ::connect(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) < 0) {
        const std::string reason = std::strerror(errno);
        if (fd_ >= 0) {
            ::close(fd_);
        }
        throw Error("cannot connect to 127.0.0.1:" + std::to_string(port) + ": " + reason);
    }
}

LineClient::~LineClient() {
    if (fd_ >= 0) {
        ::close(fd_);
    }
}

void LineClient::send(std::string_view line) {
    std::string data(line);
    data += '\n';
    write_all(fd_, data);
}

std::string LineClient::receive() {
    std::string line;
    if (!read_line(fd_, buffer_, line)) {
        throw Error("connection closed");
    }
    return line;
}

std::string LineClient::request(std::string_view line) {
    send(line);
    return receive();
}

}  // namespace qpu::service
