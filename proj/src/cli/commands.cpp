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


#include "qpu/cli/commands.hpp"

#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpu/isa/machine.hpp"
#include "qpu/isa/program_text.hpp"
#include "qpu/logical.hpp"
#include "qpu/physics.hpp"
#include "qpu/service.hpp"

namespace qpu::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class OutputMode { Human, Machine };
enum class TransportKind { Stdio, Socket };

struct CliConfig {
    std::string input;
    std::uint64_t seed = 0;
    std::size_t shots = 1;
    std::size_t samples = 100;
    std::size_t capacity = 1024;
    std::uint16_t port = 0;
    physics::Convention convention = physics::Convention::Ideal;
    TransportKind transport = TransportKind::Stdio;
    OutputMode output = OutputMode::Human;
};

/// Failure already reported to the user; maps to exit code 1.
struct Reported {};

std::string read_file(const std::string& path, std::ostream& err) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot read '" << path << "'\n";
        throw Reported{};
    }
    std::ostringstream text;
    text << file.rdbuf();
    return text.str();
}

void print_diagnostics(const std::vector<Diagnostic>& diagnostics, const std::string& path, std::ostream& os) {
    for (const auto& d : diagnostics) {
        os << path << ":" << d.line << ": " << d.message << "\n";
    }
}

logical::LogicalProgram load_logical(const std::string& text, const std::string& path, std::ostream& err) {
    auto parsed = logical::parse_logical_text(text);
    if (!parsed.program) {
        print_diagnostics(parsed.diagnostics, path, err);
        throw Reported{};
    }
    return std::move(*parsed.program);
}

QuantumProgram load_physical(const std::string& text, const std::string& path, std::ostream& err) {
    auto parsed = parse_program_text(text);
    if (!parsed.program) {
        print_diagnostics(parsed.diagnostics, path, err);
        throw Reported{};
    }
    return std::move(*parsed.program);
}

int cmd_validate(const CliConfig& cfg, std::ostream& out) {
    const std::string text = read_file(cfg.input, out);
    if (logical::looks_logical(text)) {
        const auto parsed = logical::parse_logical_text(text);
        print_diagnostics(parsed.diagnostics, cfg.input, out);
        if (!parsed.program) {
            return 1;
        }
        const auto problems = logical::validate_logical_program(*parsed.program);
        for (const auto& p : problems) {
            out << cfg.input << ": " << p << "\n";
        }
        if (!problems.empty()) {
            return 1;
        }
        out << "ok: logical program, " << parsed.program->qubit_count << " qubit(s), "
            << parsed.program->gates.size() << " gate(s)\n";
        return 0;
    }
    const auto parsed = parse_program_text(text);
    print_diagnostics(parsed.diagnostics, cfg.input, out);
    if (!parsed.program) {
        return 1;
    }
    const auto issues = validate_program(*parsed.program);
    for (const auto& issue : issues) {
        out << cfg.input << ":" << parsed.lines.at(issue.index) << ": " << issue.message << "\n";
    }
    if (!issues.empty()) {
        return 1;
    }
    out << "ok: physical program, s=" << parsed.program->memory_size << ", "
        << parsed.program->instructions.size() << " instruction(s)\n";
    return 0;
}

struct ShotOutcome {
    std::vector<std::size_t> labels;  // memory address or logical qubit
    std::vector<int> bits;
};

int cmd_run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::string text = read_file(cfg.input, err);
    const bool is_logical = logical::looks_logical(text);

    QuantumProgram program;
    logical::LogicalProgram lp;
    std::optional<logical::LogicalQubitMap> map;
    if (is_logical) {
        lp = load_logical(text, cfg.input, err);
        map = logical::LogicalQubitMap::pairwise(lp.qubit_count);
        program = logical::transform_program(lp, *map);
    } else {
        program = load_physical(text, cfg.input, err);
    }
    const char* label_key = is_logical ? "qubit" : "memory";
    const char label_prefix = is_logical ? 'q' : 'm';

    RandomSource rng(cfg.seed);
    std::map<std::string, std::size_t> counts;
    std::vector<std::size_t> labels;
    for (std::size_t shot = 0; shot < cfg.shots; ++shot) {
        std::vector<MeasurementRecord> records;
        try {
            records = run_program(program, rng).classical_results;
        } catch (const ExecutionError& e) {
            if (cfg.output == OutputMode::Machine) {
                Json msg{{"type", "error"},
                         {"shot", shot},
                         {"errors", Json::array({{{"index", e.index()}, {"message", e.what()}}})}};
                out << msg.dump() << "\n";
            }
            err << "error: " << e.what() << "\n";
            return 1;
        }
        ShotOutcome outcome;
        if (is_logical) {
            outcome.labels = lp.measured;
            outcome.bits = logical::decode_logical_results(records, *map, lp.measured);
        } else {
            for (const auto& r : records) {
                outcome.labels.push_back(r.memory_addr);
                outcome.bits.push_back(r.bit);
            }
        }
        labels = outcome.labels;
        std::string key;
        for (int b : outcome.bits) {
            key += static_cast<char>('0' + b);
        }
        ++counts[key];

        if (cfg.output == OutputMode::Machine) {
            Json results = Json::array();
            for (std::size_t i = 0; i < outcome.bits.size(); ++i) {
                results.push_back({{label_key, outcome.labels[i]}, {"bit", outcome.bits[i]}});
            }
            out << Json{{"type", "shot"}, {"shot", shot}, {"results", results}}.dump() << "\n";
        } else {
            out << "shot " << shot << ":";
            for (std::size_t i = 0; i < outcome.bits.size(); ++i) {
                out << " " << label_prefix << outcome.labels[i] << "=" << outcome.bits[i];
            }
            out << "\n";
        }
    }

    if (cfg.output == OutputMode::Machine) {
        Json names = Json::array();
        for (auto l : labels) {
            names.push_back(std::string(1, label_prefix) + std::to_string(l));
        }
        Json freq = Json::object();
        for (const auto& [k, n] : counts) {
            freq[k] = n;
        }
        out << Json{{"type", "summary"}, {"shots", cfg.shots}, {"labels", names}, {"counts", freq}}.dump() << "\n";
    } else {
        out << "frequencies over " << cfg.shots << " shot(s), bits in order";
        for (auto l : labels) {
            out << " " << label_prefix << l;
        }
        out << ":\n";
        for (const auto& [k, n] : counts) {
            out << "  " << (k.empty() ? "-" : k) << "  " << n << "  " << std::fixed << std::setprecision(4)
                << static_cast<double>(n) / static_cast<double>(cfg.shots) << "\n";
            out.unsetf(std::ios::floatfield);
        }
    }
    return 0;
}

int cmd_compile(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::string text = read_file(cfg.input, err);
    if (!logical::looks_logical(text)) {
        err << cfg.input << ": not a logical program (expected 'LQ n=<int>' header)\n";
        return 1;
    }
    const auto lp = load_logical(text, cfg.input, err);
    out << format_program(logical::transform_program(lp));
    return 0;
}

physics::ProtocolInput random_input(RandomSource& rng) {
    std::array<Amplitude, 4> c;
    double norm = 0.0;
    for (auto& a : c) {
        a = {rng.normal(), rng.normal()};
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    return {c[0] / norm, c[1] / norm, c[2] / norm, c[3] / norm};
}

int cmd_protocol_verify(const CliConfig& cfg, std::ostream& out) {
    constexpr int kSteps = 12;
    std::array<double, kSteps> worst{};
    worst.fill(1.0);
    RandomSource rng(cfg.seed);
    for (std::size_t s = 0; s < cfg.samples; ++s) {
        const auto input = random_input(rng);
        const auto run = physics::run_protocol(input, cfg.convention);
        for (int k = 1; k <= kSteps; ++k) {
            const StateVector& actual =
                k == kSteps ? run.final_state : run.intermediates.at(static_cast<std::size_t>(k - 1));
            const auto printed = physics::printed_state(k, input);
            const double f = std::norm(printed.amplitudes().dot(actual.amplitudes()));
            worst[static_cast<std::size_t>(k - 1)] = std::min(worst[static_cast<std::size_t>(k - 1)], f);
        }
    }
    const auto report = physics::verify_against_cqet(cfg.samples, cfg.convention, cfg.seed);
    const bool ideal = cfg.convention == physics::Convention::Ideal;

    out << "convention: " << (ideal ? "ideal" : "physical") << ", samples: " << cfg.samples << "\n";
    out << "step  min fidelity vs printed state\n";
    double step_defect = 0.0;
    for (int k = 1; k <= kSteps; ++k) {
        const double f = worst[static_cast<std::size_t>(k - 1)];
        step_defect = std::max(step_defect, 1.0 - f);
        out << "psi" << std::left << std::setw(3) << k << std::right << std::setprecision(15) << f << "\n";
    }
    out << "branch phases relative to alpha (rad):";
    for (double p : report.branch_phases) {
        out << " " << std::setprecision(6) << p;
    }
    out << "\n";
    out << "max CQET frame infidelity: " << std::scientific << std::setprecision(3) << report.max_infidelity
        << std::defaultfloat << "\n";
    if (!ideal) {
        out << "physical convention is informational\n";
        return 0;
    }
    const bool pass = report.max_infidelity <= 1e-9 && step_defect <= 1e-9;
    out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

std::atomic<bool> g_terminate{false};

extern "C" void on_terminate_signal(int) { g_terminate = true; }

void log_batches(service::Service& svc, std::ostream& err) {
    svc.set_observer([&err](const service::ExecutionBatch& batch, const service::DispatchResult& result) {
        std::ostringstream log;
        log << "batch: " << batch.segments.size() << " segment(s), " << batch.size() << "/" << batch.capacity
            << " commands\n";
        for (const auto& seg : result.segments) {
            log << "  segment ticket=" << seg.ticket << " client=" << seg.client << " slots=" << seg.addresses.size()
                << " instructions=" << seg.program.instructions.size();
            if (seg.error) {
                log << " error=" << *seg.error;
            }
            log << "\n";
        }
        err << log.str() << std::flush;
    });
}

int cmd_serve(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    service::Service svc(std::make_unique<service::EmulatorBackend>(cfg.capacity, cfg.seed));
    log_batches(svc, err);
    if (cfg.transport == TransportKind::Stdio) {
        service::serve_stdio(svc, in, out);
        return 0;
    }
    svc.start();
    try {
        service::SocketServer server(svc, cfg.port);
        err << "listening on 127.0.0.1:" << server.port() << std::endl;
        std::signal(SIGINT, on_terminate_signal);
        std::signal(SIGTERM, on_terminate_signal);
        while (!g_terminate) {
            std::this_thread::sleep_for(std::chrono::milliseconds(100));
        }
        server.stop();
    } catch (const Error& e) {
        svc.stop();
        err << "error: " << e.what() << "\n";
        return 1;
    }
    svc.stop();
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Emulator and tooling for the transistor-cell quantum processor"};
    app.name("qpu");
    app.require_subcommand(1);
    CliConfig cfg;

    auto* validate = app.add_subcommand("validate", "Check a physical or logical program file");
    validate->add_option("file", cfg.input, "Program file")->required();

    const std::map<std::string, OutputMode> output_names{{"human", OutputMode::Human},
                                                         {"machine", OutputMode::Machine}};
    auto* run = app.add_subcommand("run", "Execute a program for a number of shots");
    run->add_option("file", cfg.input, "Program file")->required();
    run->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    run->add_option("--shots", cfg.shots, "Number of shots")->check(CLI::PositiveNumber)->capture_default_str();
    run->add_option("--output", cfg.output, "human or machine")
        ->transform(CLI::CheckedTransformer(output_names, CLI::ignore_case));

    auto* compile = app.add_subcommand("compile", "Compile a logical program to physical instructions");
    compile->add_option("file", cfg.input, "Logical program file")->required();

    const std::map<std::string, physics::Convention> conventions{{"ideal", physics::Convention::Ideal},
                                                                 {"physical", physics::Convention::Physical}};
    auto* verify = app.add_subcommand("protocol-verify", "Check the photon-exchange protocol against CQET");
    verify->add_option("--samples", cfg.samples, "Random inputs")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--convention", cfg.convention, "ideal or physical")
        ->transform(CLI::CheckedTransformer(conventions, CLI::ignore_case));
    verify->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();

    const std::map<std::string, TransportKind> transports{{"stdio", TransportKind::Stdio},
                                                          {"socket", TransportKind::Socket}};
    auto* serve = app.add_subcommand("serve", "Run the multi-client service");
    serve->add_option("--capacity", cfg.capacity, "Backend command capacity")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    serve->add_option("--transport", cfg.transport, "stdio or socket")
        ->transform(CLI::CheckedTransformer(transports, CLI::ignore_case));
    serve->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    serve->add_option("--port", cfg.port, "TCP port for the socket transport (0 picks one)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) {
            return cmd_validate(cfg, out);
        }
        if (*run) {
            return cmd_run(cfg, out, err);
        }
        if (*compile) {
            return cmd_compile(cfg, out, err);
        }
        if (*verify) {
            return cmd_protocol_verify(cfg, out);
        }
        return cmd_serve(cfg, in, out, err);
    } catch (const Reported&) {
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qpu::cli
