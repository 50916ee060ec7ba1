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


// Runs the seven acceptance criteria and prints one PASS/FAIL line per criterion.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "protocol_transcript.hpp"
#include "qpu/isa/gates.hpp"
#include "qpu/isa/machine.hpp"
#include "qpu/logical.hpp"
#include "qpu/physics.hpp"
#include "qpu/service.hpp"
#include "test_util.hpp"

namespace {

using namespace qpu;
using qpu::testing::C;
using qpu::testing::I;

constexpr double kPi = std::numbers::pi;

class Checker {
  public:
    void expect(bool ok, const std::string& what) {
        if (!ok && failures_.size() < 5) {
            failures_.push_back(what);
        }
        failed_ = failed_ || !ok;
    }
    bool failed() const { return failed_; }
    std::string summary() const {
        std::string s;
        for (const auto& f : failures_) {
            s += (s.empty() ? "" : "; ") + f;
        }
        return s;
    }

  private:
    bool failed_ = false;
    std::vector<std::string> failures_;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// --- 1: gate algebra -----------------------------------------------------------------------

double unitarity_defect(const LocalUnitary& u) {
    const auto m = testing::raw(u);
    return testing::raw_identity_defect(testing::raw_multiply(testing::raw_adjoint(m), m));
}

void gate_algebra(Checker& check) {
    RandomSource rng(101);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double theta = rng.uniform(-4 * kPi, 4 * kPi);
        const double phi = rng.uniform(-4 * kPi, 4 * kPi);
        worst = std::max({worst, unitarity_defect(qet_matrix(theta)), unitarity_defect(phase_matrix(theta, phi))});
    }
    worst = std::max(worst, unitarity_defect(cqet_matrix()));
    check.expect(worst < 1e-12, "unitarity defect " + num(worst));

    // |01⟩ is column 1, |10⟩ is row 2.
    const auto q = testing::raw(qet_matrix(kPi));
    check.expect(q[2][1] == I, "QET(pi)|01> amplitude on |10> is not i");
    check.expect(std::abs(q[1][1]) < 1e-16 && q[0][1] == C(0) && q[3][1] == C(0), "QET(pi)|01> leaves residue");

    double additivity = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double a = rng.uniform(-2 * kPi, 2 * kPi);
        const double b = rng.uniform(-2 * kPi, 2 * kPi);
        const auto ab = testing::raw_multiply(testing::raw(qet_matrix(a)), testing::raw(qet_matrix(b)));
        const auto sum = testing::raw(qet_matrix(a + b));
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 4; ++c) {
                additivity = std::max(additivity, std::abs(ab[r][c] - sum[r][c]));
            }
        }
    }
    check.expect(additivity < 1e-12, "QET additivity error " + num(additivity));
}

// --- 2: excitation conservation --------------------------------------------------------------

int popcount(std::size_t x) { return __builtin_popcountll(x); }

void excitation_conservation(Checker& check) {
    const auto block_diagonal = [](const testing::RawMatrix& m) {
        for (std::size_t r = 0; r < m.size(); ++r) {
            for (std::size_t c = 0; c < m.size(); ++c) {
                if (popcount(r) != popcount(c) && m[r][c] != C(0)) {
                    return false;
                }
            }
        }
        return true;
    };
    RandomSource rng(102);
    for (int i = 0; i < 200; ++i) {
        const double theta = rng.uniform(-4 * kPi, 4 * kPi);
        const double phi = rng.uniform(-4 * kPi, 4 * kPi);
        check.expect(block_diagonal(testing::raw(qet_matrix(theta))), "QET mixes weight classes");
        check.expect(block_diagonal(testing::raw(phase_matrix(theta, phi))), "PHASE mixes weight classes");
    }
    check.expect(block_diagonal(testing::raw(cqet_matrix())), "CQET mixes weight classes");
}

// --- 3: dynamics -----------------------------------------------------------------------------

/// Fixed-step RK4 for i dc/dt = [[ωa, κ], [κ*, ωb]] c.
std::array<C, 2> integrate(C c1, C c2, const physics::CavityAtomParams& p, int steps) {
    const auto f = [&](const std::array<C, 2>& c) {
        return std::array<C, 2>{-I * (p.omega_a * c[0] + p.kappa * c[1]),
                                -I * (std::conj(p.kappa) * c[0] + p.omega_b * c[1])};
    };
    std::array<C, 2> c{c1, c2};
    const double h = p.t / steps;
    for (int s = 0; s < steps; ++s) {
        const auto k1 = f(c);
        const auto k2 = f({c[0] + h / 2 * k1[0], c[1] + h / 2 * k1[1]});
        const auto k3 = f({c[0] + h / 2 * k2[0], c[1] + h / 2 * k2[1]});
        const auto k4 = f({c[0] + h * k3[0], c[1] + h * k3[1]});
        for (std::size_t j = 0; j < 2; ++j) {
            c[j] += h / 6 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        }
    }
    return c;
}

void dynamics(Checker& check) {
    RandomSource rng(103);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        C a{rng.normal(), rng.normal()};
        C b{rng.normal(), rng.normal()};
        const double n = std::sqrt(std::norm(a) + std::norm(b));
        a /= n;
        b /= n;
        const physics::CavityAtomParams p{std::polar(rng.uniform(0.1, 2.0), rng.uniform(0, 2 * kPi)),
                                          rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(0, 3)};
        const auto closed = physics::rabi_coefficients(a, b, p);
        const auto numeric = integrate(a, b, p, 20000);
        worst = std::max({worst, std::abs(closed.c1 - numeric[0]), std::abs(closed.c2 - numeric[1])});
    }
    check.expect(worst < 1e-6, "closed form vs integration " + num(worst));

    double resonant = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double k = rng.uniform(0.1, 3.0);
        const double w = rng.uniform(-2, 2);
        const auto c = physics::rabi_coefficients(1.0, 0.0, {std::polar(k, rng.uniform(0, 2 * kPi)), w, w, kPi / (2 * k)});
        resonant = std::max(resonant, std::abs(std::norm(c.c2) - 1.0));
    }
    check.expect(resonant < 1e-9, "resonant transfer defect " + num(resonant));

    double detuned = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double k = rng.uniform(0.2, 2.0);
        const double delta = rng.uniform(-3, 3);
        const auto p2 = [&](double t) {
            return std::norm(physics::rabi_coefficients(1.0, 0.0, {C(k), delta, 0.0, t}).c2);
        };
        const double period = kPi / std::sqrt(delta * delta / 4 + k * k);
        double best_t = 0.0;
        for (int s = 0; s <= 2000; ++s) {
            const double t = period * s / 2000;
            if (p2(t) > p2(best_t)) {
                best_t = t;
            }
        }
        double lo = std::max(0.0, best_t - period / 2000);
        double hi = best_t + period / 2000;
        for (int it = 0; it < 100; ++it) {
            const double m1 = lo + (hi - lo) / 3;
            const double m2 = hi - (hi - lo) / 3;
            (p2(m1) < p2(m2) ? lo : hi) = p2(m1) < p2(m2) ? m1 : m2;
        }
        const double expected = 4 * k * k / (delta * delta + 4 * k * k);
        detuned = std::max(detuned, std::abs(p2((lo + hi) / 2) - expected));
    }
    check.expect(detuned < 1e-6, "detuned maximum error " + num(detuned));
}

// --- 4: protocol -------------------------------------------------------------------------------

physics::ProtocolInput random_input(RandomSource& rng) {
    std::array<C, 4> c;
    double n = 0.0;
    for (auto& x : c) {
        x = {rng.normal(), rng.normal()};
        n += std::norm(x);
    }
    n = std::sqrt(n);
    return {c[0] / n, c[1] / n, c[2] / n, c[3] / n};
}

void protocol(Checker& check) {
    RandomSource rng(104);
    for (int trial = 0; trial < 5; ++trial) {
        const auto input = random_input(rng);
        const auto run = physics::run_protocol(input);
        const auto coefficients = input.coefficients();
        for (int k = 2; k <= 12; ++k) {
            const auto& state = k == 12 ? run.final_state : run.intermediates.at(static_cast<std::size_t>(k - 1));
            DenseVector<C> expected = DenseVector<C>::Zero(physics::kProtocolDimension);
            for (std::size_t t = 0; t < 4; ++t) {
                expected(static_cast<Eigen::Index>(
                    physics::configuration_index(testing::parse_ket(testing::kTranscribed[k - 1][t])))) =
                    coefficients[t];
            }
            check.expect(state.amplitudes() == expected, "psi" + std::to_string(k) + " differs from printed kets");
        }
    }

    // Frame qubits (control, memory a, memory c): control is the dot (level 1 → 0, 3 → 1);
    // memories start in levels 1/3 and end in levels 0/1.
    const auto in_config = [](unsigned f) {
        return physics::Configuration{0, (f & 2) ? 3 : 1, 0, (f & 4) ? 3 : 1, 0, (f & 1) ? 3 : 1};
    };
    const auto out_config = [](unsigned f) {
        return physics::Configuration{0, (f & 2) ? 1 : 0, 0, (f & 4) ? 3 : 1, 0, (f & 1) ? 1 : 0};
    };
    // Transfer pattern of CQET: control 0 exchanges |01⟩ and |10⟩ of the memories.
    const auto transfer = [](unsigned f) -> unsigned { return (f & 4) || (f & 3) == 0 || (f & 3) == 3 ? f : f ^ 3u; };

    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto input = random_input(rng);
        const auto run = physics::run_protocol(input);
        const auto coefficients = input.coefficients();
        std::array<C, 8> expected{};
        std::array<C, 8> actual{};
        for (std::size_t t = 0; t < 4; ++t) {
            const auto ket = testing::parse_ket(testing::kTranscribed[0][t]);
            for (unsigned f = 0; f < 8; ++f) {
                if (in_config(f) == ket) {
                    expected[transfer(f)] = coefficients[t];
                }
            }
        }
        double captured = 0.0;
        C overlap = 0.0;
        for (unsigned f = 0; f < 8; ++f) {
            actual[f] = run.final_state.amplitude(physics::configuration_index(out_config(f)));
            captured += std::norm(actual[f]);
            overlap += std::conj(expected[f]) * actual[f];
        }
        worst = std::max(worst, 1.0 - std::norm(overlap));
        check.expect(std::abs(captured - 1.0) < 1e-12, "final state leaves the frame");
    }
    check.expect(worst < 1e-10, "CQET frame infidelity " + num(worst));
    const double reported = physics::verify_against_cqet(100).max_infidelity;
    check.expect(reported < 1e-10, "library CQET report " + num(reported));
}

// --- 5: logical layer ----------------------------------------------------------------------------

Eigen::Matrix2cd textbook_rx(double t) {
    Eigen::Matrix2cd m;
    m << std::cos(t / 2), -I * std::sin(t / 2), -I * std::sin(t / 2), std::cos(t / 2);
    return m;
}

Eigen::Matrix2cd textbook_rz(double t) {
    Eigen::Matrix2cd m;
    m << std::exp(-I * (t / 2)), 0, 0, std::exp(I * (t / 2));
    return m;
}

double outside_code_space(const StateVector& reg, std::size_t logical_qubits) {
    const std::size_t n = reg.shape().size();
    double p = 0.0;
    for (std::size_t idx = 0; idx < reg.shape().total_dimension(); ++idx) {
        for (std::size_t q = 0; q < logical_qubits; ++q) {
            const auto b1 = (idx >> (n - 1 - 2 * q)) & 1u;
            const auto b2 = (idx >> (n - 2 - 2 * q)) & 1u;
            if (b1 == b2) {
                p += std::norm(reg.amplitudes()(static_cast<Eigen::Index>(idx)));
                break;
            }
        }
    }
    return p;
}

void logical_layer(Checker& check) {
    using namespace qpu::logical;
    RandomSource rng(105);
    const auto map1 = LogicalQubitMap::pairwise(1);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double t = rng.uniform(-4 * kPi, 4 * kPi);
        const Eigen::MatrixXcd rx = logical_action(logical_rx(map1, 0, t), map1, {0});
        const Eigen::MatrixXcd rz = logical_action(logical_rz(map1, 0, t), map1, {0});
        worst = std::max({worst, (rx - textbook_rx(t)).cwiseAbs().maxCoeff(),
                          (rz - textbook_rz(t)).cwiseAbs().maxCoeff()});
    }
    check.expect(worst < 1e-12, "RX/RZ restriction error " + num(worst));

    const auto map2 = LogicalQubitMap::pairwise(2);
    const Eigen::MatrixXcd cnot = logical_action(synthesize_logical_cnot(map2, 0, 1), map2, {0, 1});
    const unsigned image[4] = {0, 1, 3, 2};
    const C phase = cnot(0, 0);
    check.expect(std::abs(std::abs(phase) - 1.0) < 1e-12, "CNOT |00> not preserved");
    double spread = 0.0;
    for (unsigned col = 0; col < 4; ++col) {
        for (unsigned row = 0; row < 4; ++row) {
            const C want = row == image[col] ? phase : C(0);
            spread = std::max(spread, std::abs(cnot(row, col) - want));
        }
    }
    check.expect(spread < 1e-12, "CNOT truth table or common phase off by " + num(spread));
    Eigen::Matrix4cd ideal = Eigen::Matrix4cd::Zero();
    for (unsigned c = 0; c < 4; ++c) {
        ideal(image[c], c) = 1.0;
    }
    const double distance = 1.0 - std::norm((ideal.adjoint() * cnot).trace()) / 16.0;
    check.expect(distance < 1e-9, "CNOT process distance " + num(distance));

    double recomposition = 0.0;
    for (int i = 0; i < 200; ++i) {
        const Eigen::Matrix2cd u = testing::random_unitary_matrix(2, rng);
        const auto z = decompose_su2(u);
        const Eigen::Matrix2cd v = std::exp(I * z.global_phase) * textbook_rz(z.a) * textbook_rx(z.b) * textbook_rz(z.c);
        recomposition = std::max(recomposition, (u - v).cwiseAbs().maxCoeff());
    }
    check.expect(recomposition < 1e-10, "ZXZ recomposition error " + num(recomposition));

    double leak = 0.0;
    for (int circuit = 0; circuit < 20; ++circuit) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform(0, 2));
        const auto map = LogicalQubitMap::pairwise(n);
        auto state = MachineState::fresh(2 * n);
        Instructions init;
        for (std::size_t q = 0; q < n; ++q) {
            const auto e = encode_init(map, q, 0);
            init.insert(init.end(), e.begin(), e.end());
        }
        state = run_instructions(std::move(state), init, rng).final_state;
        for (int g = 0; g < 12; ++g) {
            const auto q = static_cast<std::size_t>(rng.uniform(0, static_cast<double>(n)));
            const double t = rng.uniform(-kPi, kPi);
            LogicalGate gate;
            switch (static_cast<int>(rng.uniform(0, 4))) {
                case 0: gate = LogicalGate::rx(q, t); break;
                case 1: gate = LogicalGate::rz(q, t); break;
                case 2: gate = LogicalGate::su2(q, testing::random_unitary_matrix(2, rng)); break;
                default: gate = LogicalGate::cnot(q, (q + 1) % n); break;
            }
            state = run_instructions(std::move(state), compile_gate(map, gate), rng).final_state;
            leak = std::max(leak, outside_code_space(state.reg, n));
            check.expect(leakage_check(state.reg, map), "leakage_check failed");
        }
    }
    check.expect(leak < 1e-9, "probability outside code space " + num(leak));
}

// --- 6: statistics -------------------------------------------------------------------------

void statistics(Checker& check) {
    using namespace qpu::logical;
    const double h = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd hadamard;
    hadamard << h, h, h, -h;
    const LogicalProgram plus{1, {LogicalGate::su2(0, hadamard)}, {0}};
    const LogicalProgram bell{2, {LogicalGate::rx(0, kPi / 2), LogicalGate::cnot(0, 1)}, {0, 1}};

    const auto sample = [](const LogicalProgram& lp, std::uint64_t seed, auto&& tally) {
        const auto map = LogicalQubitMap::pairwise(lp.qubit_count);
        const auto program = transform_program(lp, map);
        RandomSource rng(seed);
        for (int s = 0; s < 10000; ++s) {
            tally(decode_logical_results(run_program(program, rng).classical_results, map, lp.measured));
        }
    };
    int zeros = 0;
    sample(plus, 2024, [&](const std::vector<int>& bits) { zeros += bits.at(0) == 0; });
    const double f0 = zeros / 10000.0;
    check.expect(f0 >= 0.48 && f0 <= 0.52, "|+> logical-0 frequency " + num(f0));

    int equal = 0;
    sample(bell, 2025, [&](const std::vector<int>& bits) { equal += bits.at(0) == bits.at(1); });
    const double pe = equal / 10000.0;
    check.expect(pe >= 0.98, "Bell P(equal) " + num(pe));
}

// --- 7: service ------------------------------------------------------------------------------

using namespace qpu::service;

OpDescriptor op(std::string name, std::vector<std::int64_t> qubits, std::optional<double> theta = std::nullopt) {
    return {std::move(name), std::move(qubits), theta, std::nullopt, {}};
}

/// Local qubit `flip` ends in 1, `keep` in 0.
ClientRequest flip_request(const ClientId& client, std::int64_t flip, std::int64_t keep) {
    return {client, {op("QET", {flip}, kPi), op("PHASE", {keep}, 0.0), op("MEASURE", {flip}), op("MEASURE", {keep})}};
}

void certify_isolation(Checker& check, const DispatchResult& result, const AddressTable& table) {
    std::map<std::size_t, ClientId> owner_in_batch;
    for (const auto& seg : result.segments) {
        for (const auto& [physical, address] : seg.addresses) {
            const auto owner = table.owner_of_physical(physical);
            check.expect(owner && table.local_of(owner->global_logical).first == seg.client,
                         "segment touches another client's qubit");
            const auto [it, fresh] = owner_in_batch.emplace(physical, seg.client);
            check.expect(fresh || it->second == seg.client, "physical address shared across clients in a batch");
        }
        if (seg.error) {
            continue;
        }
        check.expect(!seg.trace.empty(), "segment has no trace");
        for (const auto& record : seg.trace) {
            check.expect(record.occupancy.memory.size() == seg.addresses.size(), "segment register exceeds its slots");
        }
        const auto& last = seg.trace.back().occupancy;
        const bool drained = std::none_of(last.memory.begin(), last.memory.end(), [](bool b) { return b; }) &&
                             std::none_of(last.cells.begin(), last.cells.end(), [](bool b) { return b; });
        check.expect(drained, "live qubit survives a segment boundary");
    }
}

std::string scripted(std::uint64_t seed) {
    Service svc(std::make_unique<EmulatorBackend>(120, seed));
    std::vector<std::future<ServiceResponse>> futures;
    const ClientRequest bell{"", {op("QET", {0}, kPi / 2), op("PHASE", {1}, 0.0), op("CQET", {0, 1}),
                                  op("MEASURE", {0}), op("MEASURE", {1})}};
    for (int round = 0; round < 8; ++round) {
        for (const char* client : {"alice", "bob", "carol"}) {
            auto r = bell;
            r.client = client;
            futures.push_back(svc.submit(std::move(r)));
        }
    }
    svc.drain();
    std::string out;
    for (auto& f : futures) {
        out += format_response(f.get()) + "\n";
    }
    return out;
}

class FlakyBackend : public Backend {
  public:
    std::size_t capacity() const override { return 1024; }
    RunResult run(const QuantumProgram& program) override {
        if (++calls_ == 2) {
            throw Error("controller fault");
        }
        return inner_.run(program);
    }

  private:
    int calls_ = 0;
    EmulatorBackend inner_{1024, 7};
};

void service_end_to_end(Checker& check) {
    Service svc(std::make_unique<EmulatorBackend>(1024, 107));
    std::mutex mu;
    std::vector<DispatchResult> results;
    svc.set_observer([&](const ExecutionBatch&, const DispatchResult& r) {
        std::lock_guard lock(mu);
        results.push_back(r);
    });
    svc.start();
    std::atomic<int> wrong{0};
    std::vector<std::thread> clients;
    const std::vector<std::string> names{"alice", "bob", "carol"};
    for (std::size_t k = 0; k < names.size(); ++k) {
        clients.emplace_back([&, k] {
            for (int i = 0; i < 40; ++i) {
                const std::int64_t flip = static_cast<std::int64_t>(k) + i % 3;
                const std::int64_t keep = 20 + static_cast<std::int64_t>(k);
                const auto r = svc.submit(flip_request(names[k], flip, keep)).get();
                const std::vector<QubitResult> want{{static_cast<std::size_t>(flip), 1},
                                                    {static_cast<std::size_t>(keep), 0}};
                if (!r.ok() || r.client != names[k] || r.results != want) {
                    ++wrong;
                }
            }
        });
    }
    for (auto& t : clients) {
        t.join();
    }
    svc.stop();
    check.expect(wrong == 0, std::to_string(wrong.load()) + " responses with foreign or wrong results");
    const auto table = svc.table();
    for (const auto& r : results) {
        certify_isolation(check, r, table);
    }
    check.expect(!results.empty(), "no batches observed");

    const auto first = scripted(9);
    check.expect(first == scripted(9), "fixed seed and order not byte-identical");

    Service flaky(std::make_unique<FlakyBackend>());
    auto a = flaky.submit(flip_request("a", 0, 1));
    auto b = flaky.submit(flip_request("b", 0, 1));
    auto c = flaky.submit(flip_request("c", 0, 1));
    flaky.drain();
    const auto ra = a.get();
    const auto rb = b.get();
    const auto rc = c.get();
    check.expect(ra.ok() && ra.results.size() == 2 && rc.ok() && rc.results.size() == 2,
                 "sibling segment poisoned by a failing one");
    check.expect(!rb.ok() && rb.results.empty(), "failing segment reported success");
}

struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<void(Checker&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"gate-algebra", 1.0, gate_algebra},
        {"excitation-conservation", 1.0, excitation_conservation},
        {"dynamics-oracle", 10.0, dynamics},
        {"protocol-oracle", 10.0, protocol},
        {"logical-layer", 30.0, logical_layer},
        {"statistics", 30.0, statistics},
        {"service-end-to-end", 30.0, service_end_to_end},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Checker check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].run(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        check.expect(seconds < criteria[i].limit_seconds,
                     "runtime " + num(seconds) + " s exceeds " + num(criteria[i].limit_seconds) + " s");
        const bool pass = !check.failed();
        failures += !pass;
        std::printf("%s %zu %s (%.2f s)%s%s\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].name, seconds,
                    pass ? "" : ": ", check.summary().c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
