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


#include <algorithm>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include <gtest/gtest.h>

#include "qpu/logical/compiler.hpp"
#include "qpu/service.hpp"

namespace qpu::service {
namespace {

constexpr double kPi = std::numbers::pi;

OpDescriptor op(std::string name, std::vector<std::int64_t> qubits, std::optional<double> theta = std::nullopt,
                std::optional<double> phi = std::nullopt) {
    return {std::move(name), std::move(qubits), theta, phi, {}};
}

ClientRequest bell(const ClientId& client, std::int64_t a = 0, std::int64_t b = 1) {
    // QET(π/2) is a logical Rx(−π/2); PHASE(0) introduces the target.
    return {client,
            {op("QET", {a}, kPi / 2), op("PHASE", {b}, 0.0), op("CQET", {a, b}), op("MEASURE", {a}),
             op("MEASURE", {b})}};
}

bool has_error(const std::vector<OpError>& errors, std::optional<std::size_t> index, const std::string& text) {
    return std::any_of(errors.begin(), errors.end(), [&](const OpError& e) {
        return e.index == index && e.message.find(text) != std::string::npos;
    });
}

// --- address table ---------------------------------------------------------------

TEST(AddressTable, FirstQubitTakesTwoPhysicalAddresses) {
    AddressTable t(8);
    const auto g = t.ensure("alice", 0);
    EXPECT_EQ(t.entry_count(), 1u);
    EXPECT_EQ(t.free_physical(), 6u);
    const auto p = t.physical(g);
    EXPECT_NE(p.first, p.second);
    EXPECT_EQ(t.local_of(g), (std::pair<ClientId, std::size_t>{"alice", 0}));
    EXPECT_EQ(t.owner_of_physical(p.second)->global_logical, g);
    EXPECT_FALSE(t.owner_of_physical(p.second)->is_first);
}

TEST(AddressTable, ClientsWithSameLocalGetDistinctGlobals) {
    AddressTable t;
    const auto a = t.ensure("alice", 3);
    const auto b = t.ensure("bob", 3);
    EXPECT_NE(a, b);
    const auto pa = t.physical(a);
    const auto pb = t.physical(b);
    EXPECT_EQ(std::set<std::size_t>({pa.first, pa.second, pb.first, pb.second}).size(), 4u);
    EXPECT_EQ(t.ensure("alice", 3), a);
    EXPECT_EQ(t.entry_count(), 2u);
}

TEST(AddressTable, ReleaseFreesAndExhaustionThrows) {
    AddressTable t(4);
    t.ensure("a", 0);
    t.ensure("b", 0);
    EXPECT_THROW(t.ensure("c", 0), AddressExhaustedError);
    t.release_client("a");
    EXPECT_FALSE(t.find("a", 0));
    const auto g = t.ensure("c", 0);
    EXPECT_EQ(t.physical(g), (PhysicalPair{0, 1}));
}

// --- analysis ----------------------------------------------------------------------

TEST(Analyze, QetWithoutThetaNamesOpAndParameter) {
    const auto r = analyze({"alice", {op("QET", {0}), op("MEASURE", {0})}}, AddressTable{});
    EXPECT_FALSE(r.request);
    EXPECT_TRUE(has_error(r.errors, 0, "missing parameter"));
}

TEST(Analyze, WellFormedTwoQubitRequest) {
    const auto r = analyze(bell("alice"), AddressTable{});
    ASSERT_TRUE(r.request);
    EXPECT_TRUE(r.errors.empty());
    EXPECT_EQ(r.request->ops.size(), 5u);
    EXPECT_EQ(r.request->ops[2].op, ServiceOp::Cqet);
}

TEST(Analyze, CqetOnUnintroducedQubit) {
    AddressTable table;
    auto r = analyze({"alice", {op("QET", {0}, 1.0), op("CQET", {0, 5}), op("MEASURE", {0})}}, table);
    EXPECT_TRUE(has_error(r.errors, 1, "never introduced"));
    table.ensure("alice", 5);
    r = analyze({"alice", {op("QET", {0}, 1.0), op("CQET", {0, 5}), op("MEASURE", {0}), op("MEASURE", {5})}}, table);
    EXPECT_TRUE(r.request);
    // Another client's table entry does not count.
    r = analyze({"bob", {op("QET", {0}, 1.0), op("CQET", {0, 5}), op("MEASURE", {0})}}, table);
    EXPECT_TRUE(has_error(r.errors, 1, "never introduced"));
}

TEST(Analyze, ReportsEveryProblem) {
    OpDescriptor malformed = op("QET", {0}, 1.0);
    malformed.problems.push_back("unexpected field 'x'");
    const auto r = analyze({"alice",
                            {op("FROB", {0}), op("QET", {64}, 1.0), op("MEASURE", {0}, 2.0), op("QET", {0}, 1.0, 1.0),
                             op("CQET", {1}), malformed, op("PHASE", {-1}, 1.0)}},
                           AddressTable{});
    EXPECT_TRUE(has_error(r.errors, 0, "unknown operation 'FROB'"));
    EXPECT_TRUE(has_error(r.errors, 1, "address out of range"));
    EXPECT_TRUE(has_error(r.errors, 2, "unexpected parameter: theta"));
    EXPECT_TRUE(has_error(r.errors, 3, "operation after MEASURE"));
    EXPECT_TRUE(has_error(r.errors, 3, "unexpected parameter: phi"));
    EXPECT_TRUE(has_error(r.errors, 4, "expected 2 qubit addresses"));
    EXPECT_TRUE(has_error(r.errors, 5, "unexpected field 'x'"));
    EXPECT_TRUE(has_error(r.errors, 6, "address out of range"));
}

TEST(Analyze, RequiresMeasure) {
    const auto r = analyze({"alice", {op("QET", {0}, 1.0)}}, AddressTable{});
    EXPECT_TRUE(has_error(r.errors, std::nullopt, "no MEASURE"));
    EXPECT_TRUE(has_error(analyze({"alice", {}}, AddressTable{}).errors, std::nullopt, "no MEASURE"));
}

// --- transformation ----------------------------------------------------------------

TEST(Transform, AllocatesPairsAndRewritesOps) {
    AddressTable table;
    const auto v = analyze({"alice", {op("QET", {7}, 0.5), op("MEASURE", {7})}}, table).request.value();
    const auto s = transform(v, table, 42);
    EXPECT_EQ(s.ticket, 42u);
    EXPECT_EQ(table.entry_count(), 1u);
    const auto g = *table.find("alice", 7);
    const auto p = table.physical(g);
    EXPECT_EQ(s.init_bits, (std::vector<std::pair<std::size_t, int>>{{p.first, 0}, {p.second, 1}}));
    ASSERT_EQ(s.commands.size(), 7u);
    EXPECT_EQ(s.commands[2], Instruction::qet(0.5));
    EXPECT_EQ(s.commands[5], Instruction::measure(p.first));
    EXPECT_EQ(s.measured, std::vector<std::size_t>{g});
    EXPECT_EQ(s.size(), 9u);
    // Re-referencing keeps the pair.
    transform(v, table, 43);
    EXPECT_EQ(table.physical(*table.find("alice", 7)), p);
}

TEST(Transform, UnmeasuredQubitsGetHygieneMeasures) {
    AddressTable table;
    const auto v =
        analyze({"alice", {op("PHASE", {0}, 1.0), op("PHASE", {1}, 1.0), op("MEASURE", {1})}}, table).request.value();
    const auto s = transform(v, table);
    const auto p0 = table.physical(*table.find("alice", 0));
    EXPECT_EQ(s.commands.back(), Instruction::measure(p0.second));
    EXPECT_EQ(s.measured.size(), 1u);
    EXPECT_TRUE(validate_program(QuantumProgram{table.physical_capacity(), {}}).empty());
}

TEST(Transform, ExhaustionLeavesTableUntouched) {
    AddressTable table(4);
    const auto v = analyze({"a", {op("PHASE", {0}, 1.0), op("PHASE", {1}, 1.0), op("PHASE", {2}, 1.0),
                                  op("MEASURE", {0})}},
                           table)
                       .request.value();
    EXPECT_THROW(transform(v, table), AddressExhaustedError);
    EXPECT_EQ(table.entry_count(), 0u);
}

// --- buffering -----------------------------------------------------------------------

Segment sized(std::size_t n, const ClientId& client = "c") {
    Segment s;
    s.client = client;
    s.commands.assign(n, Instruction::cqet());
    return s;
}

TEST(BufferAndBatch, FillsWithWholeSegments) {
    std::deque<Segment> q{sized(30), sized(30), sized(30)};
    auto b = buffer_and_batch(q, 100);
    EXPECT_EQ(b.segments.size(), 3u);
    EXPECT_TRUE(q.empty());

    q = {sized(30, "x"), sized(30, "y")};
    b = buffer_and_batch(q, 50);
    ASSERT_EQ(b.segments.size(), 1u);
    EXPECT_EQ(b.segments[0].client, "x");
    EXPECT_EQ(q.size(), 1u);

    q.clear();
    EXPECT_TRUE(buffer_and_batch(q, 50).segments.empty());
}

TEST(BufferAndBatch, KeepsFifoOrder) {
    std::deque<Segment> q{sized(10, "a"), sized(45, "b"), sized(5, "c")};
    const auto b = buffer_and_batch(q, 50);
    ASSERT_EQ(b.segments.size(), 1u);  // "c" would fit but may not overtake "b"
    EXPECT_EQ(q.front().client, "b");
}

// --- dispatch and demux ----------------------------------------------------------------

ExecutionBatch batch_of(AddressTable& table, const std::vector<ClientRequest>& requests) {
    ExecutionBatch batch{{}, 1024};
    std::uint64_t ticket = 0;
    for (const auto& r : requests) {
        batch.segments.push_back(transform(analyze(r, table).request.value(), table, ticket++));
    }
    return batch;
}

TEST(Dispatch, InsertsInitBeforeFirstUse) {
    AddressTable table;
    EmulatorBackend backend(1024, 1);
    std::uint64_t clock = 0;
    const auto result = dispatch(batch_of(table, {{"a", {op("QET", {0}, kPi), op("MEASURE", {0})}}}), backend, clock);
    const auto& prog = result.segments[0].program;
    ASSERT_GE(prog.instructions.size(), 4u);
    EXPECT_EQ(prog.instructions[0], Instruction::init(0, 0));
    EXPECT_EQ(prog.instructions[1], Instruction::load(0, 1));
    EXPECT_EQ(prog.instructions[2], Instruction::init(1, 1));
    EXPECT_EQ(prog.instructions[3], Instruction::load(1, 2));
    EXPECT_EQ(prog.memory_size, 2u);
    EXPECT_EQ(clock, prog.instructions.size());
    const auto& addrs = result.segments[0].addresses;
    EXPECT_EQ(addrs.size(), 2u);
    EXPECT_LT(addrs.begin()->second.recording_time, std::next(addrs.begin())->second.recording_time);
    const auto demuxed = demux_results(result, table);
    ASSERT_EQ(demuxed[0].results.size(), 1u);
    EXPECT_EQ(demuxed[0].results[0], (QubitResult{0, 1}));  // Rx(−π)|0_L⟩ ∝ |1_L⟩
}

TEST(Dispatch, SegmentsReuseSlotIndices) {
    AddressTable table;
    EmulatorBackend backend(1024, 2);
    std::uint64_t clock = 0;
    const auto batch = batch_of(table, {{"a", {op("MEASURE", {0})}}, {"b", {op("QET", {0}, kPi), op("MEASURE", {0})}}});
    const auto result = dispatch(batch, backend, clock);
    ASSERT_EQ(result.segments.size(), 2u);
    EXPECT_EQ(result.segments[0].addresses.begin()->second.index, 0u);
    EXPECT_EQ(result.segments[1].addresses.begin()->second.index, 0u);
    EXPECT_NE(result.segments[0].addresses.begin()->first, result.segments[1].addresses.begin()->first);
    const auto demuxed = demux_results(result, table);
    EXPECT_EQ(demuxed[0].results, (std::vector<QubitResult>{{0, 0}}));
    EXPECT_EQ(demuxed[1].results, (std::vector<QubitResult>{{0, 1}}));
    EXPECT_EQ(demuxed[1].client, "b");
}

class FailingBackend : public Backend {
  public:
    explicit FailingBackend(std::size_t fail_on) : fail_on_(fail_on) {}
    std::size_t capacity() const override { return 1024; }
    RunResult run(const QuantumProgram& program) override {
        if (calls_++ == fail_on_) {
            throw Error("injected controller fault");
        }
        return inner_.run(program);
    }

  private:
    std::size_t fail_on_;
    std::size_t calls_ = 0;
    EmulatorBackend inner_{1024, 3};
};

TEST(Dispatch, FailingSegmentIsIsolated) {
    AddressTable table;
    FailingBackend backend(1);
    std::uint64_t clock = 0;
    const auto batch = batch_of(table, {bell("a"), bell("b"), bell("c")});
    const auto demuxed = demux_results(dispatch(batch, backend, clock), table);
    ASSERT_EQ(demuxed.size(), 3u);
    EXPECT_EQ(demuxed[0].results.size(), 2u);
    EXPECT_TRUE(demuxed[0].errors.empty());
    EXPECT_TRUE(demuxed[1].results.empty());
    EXPECT_TRUE(has_error(demuxed[1].errors, std::nullopt, "injected controller fault"));
    EXPECT_EQ(demuxed[2].results.size(), 2u);
}

TEST(Demux, FirstQubitRuleAndLeakage) {
    AddressTable table;
    const auto g0 = table.ensure("a", 0);
    const auto g1 = table.ensure("a", 1);
    const auto g2 = table.ensure("a", 2);
    const auto p0 = table.physical(g0);
    const auto p1 = table.physical(g1);
    const auto p2 = table.physical(g2);
    SegmentOutcome s;
    s.client = "a";
    s.measured = {g0, g1, g2};
    s.records = {{p0.first, 0}, {p0.second, 1}, {p1.first, 1}, {p1.second, 0}, {p2.first, 1}, {p2.second, 1}};
    const auto out = demux_results({{s}}, table);
    EXPECT_EQ(out[0].results, (std::vector<QubitResult>{{0, 0}, {1, 1}}));
    EXPECT_TRUE(has_error(out[0].errors, std::nullopt, "leakage on q2"));
}

TEST(Demux, OrphanAddress) {
    AddressTable table;
    SegmentOutcome s;
    s.client = "a";
    s.records = {{99, 0}};
    EXPECT_TRUE(has_error(demux_results({{s}}, table)[0].errors, std::nullopt, "orphan physical address 99"));
}

// --- service ---------------------------------------------------------------------------------

std::unique_ptr<Service> make_service(std::uint64_t seed, std::size_t capacity = 1024) {
    return std::make_unique<Service>(std::make_unique<EmulatorBackend>(capacity, seed));
}

/// Every segment's live qubits belong to its own client, and nothing is left
/// live when the segment ends.
void expect_isolated(const DispatchResult& result, const AddressTable& table) {
    for (const auto& seg : result.segments) {
        for (const auto& [physical, address] : seg.addresses) {
            const auto owner = table.owner_of_physical(physical);
            ASSERT_TRUE(owner);
            EXPECT_EQ(table.local_of(owner->global_logical).first, seg.client);
        }
        if (!seg.error) {
            ASSERT_FALSE(seg.trace.empty());
            const auto& last = seg.trace.back().occupancy;
            EXPECT_TRUE(std::none_of(last.memory.begin(), last.memory.end(), [](bool b) { return b; }));
            for (const auto& record : seg.trace) {
                EXPECT_EQ(record.occupancy.memory.size(), seg.addresses.size());
            }
        }
    }
}

TEST(Service, BellCorrelationsEndToEnd) {
    auto service = make_service(5);
    int equal = 0;
    const int shots = 10000;
    for (int s = 0; s < shots; ++s) {
        auto f = service->submit(bell("alice"));
        service->drain();
        const auto r = f.get();
        ASSERT_TRUE(r.ok());
        ASSERT_EQ(r.results.size(), 2u);
        equal += r.results[0].bit == r.results[1].bit;
    }
    EXPECT_GE(static_cast<double>(equal) / shots, 0.98);
    EXPECT_EQ(service->table().entry_count(), 2u);
}

TEST(Service, RejectsBeforeQueueing) {
    auto service = make_service(0, 20);
    auto bad = service->submit({"a", {op("QET", {0}), op("MEASURE", {0})}}).get();
    EXPECT_TRUE(has_error(bad.errors, 0, "missing parameter"));
    auto big = service->submit(bell("a")).get();  // 2 + 2 + 5 + 5 + 13 + 4 commands > 20
    EXPECT_TRUE(has_error(big.errors, std::nullopt, "accepts 20"));
    EXPECT_EQ(service->pending(), 0u);
}

TEST(Service, OversizedRegisterFailsAloneInBatch) {
    auto service = make_service(6);
    ClientRequest wide{"wide", {}};
    for (std::int64_t q = 0; q < 11; ++q) {  // 22 physical slots
        wide.ops.push_back(op("MEASURE", {q}));
    }
    auto a = service->submit(bell("a"));
    auto w = service->submit(wide);
    auto c = service->submit(bell("c"));
    EXPECT_EQ(service->pump(), 3u);
    EXPECT_TRUE(a.get().ok());
    EXPECT_FALSE(w.get().ok());
    EXPECT_TRUE(c.get().ok());
}

std::vector<std::string> scripted_run(std::uint64_t seed, std::vector<DispatchResult>* results = nullptr,
                                      AddressTable* table = nullptr) {
    auto service = make_service(seed, 100);
    if (results) {
        service->set_observer([results](const ExecutionBatch&, const DispatchResult& r) { results->push_back(r); });
    }
    std::vector<std::future<ServiceResponse>> futures;
    for (int round = 0; round < 10; ++round) {
        for (const char* client : {"alice", "bob", "carol"}) {
            futures.push_back(service->submit(bell(client, round % 3, 3 + round % 2)));
        }
    }
    service->drain();
    std::vector<std::string> lines;
    for (auto& f : futures) {
        lines.push_back(format_response(f.get()));
    }
    if (table) {
        *table = service->table();
    }
    return lines;
}

TEST(Service, DeterministicForSeedAndArrivalOrder) {
    std::vector<DispatchResult> results;
    AddressTable table;
    const auto first = scripted_run(11, &results, &table);
    EXPECT_EQ(first, scripted_run(11));
    EXPECT_GT(results.size(), 1u);  // capacity 100 forces several batches
    for (const auto& r : results) {
        expect_isolated(r, table);
    }
    for (std::size_t i = 0; i < first.size(); ++i) {
        const auto m = parse_response(first[i]);
        EXPECT_EQ(m.type, "result");
        EXPECT_EQ(*m.client, std::string(i % 3 == 0 ? "alice" : i % 3 == 1 ? "bob" : "carol"));
        ASSERT_EQ(m.results.size(), 2u);
        EXPECT_EQ(m.results[0].qubit, static_cast<std::size_t>((i / 3) % 3));
    }
}

TEST(Service, ConcurrentClientsReceiveOwnResults) {
    auto service = make_service(12);
    std::mutex mu;
    std::vector<DispatchResult> batches;
    service->set_observer([&](const ExecutionBatch&, const DispatchResult& r) {
        std::lock_guard lock(mu);
        batches.push_back(r);
    });
    service->start();
    std::vector<std::thread> clients;
    std::atomic<int> failures{0};
    for (const std::string name : {"alice", "bob", "carol"}) {
        clients.emplace_back([&, name] {
            for (int i = 0; i < 50; ++i) {
                const std::int64_t q = i % 4;
                const auto r = service->submit({name, {op("QET", {q}, kPi), op("MEASURE", {q})}}).get();
                if (!r.ok() || r.client != name || r.results != std::vector<QubitResult>{{static_cast<std::size_t>(q), 1}}) {
                    ++failures;
                }
            }
        });
    }
    for (auto& t : clients) {
        t.join();
    }
    service->stop();
    EXPECT_EQ(failures.load(), 0);
    const auto table = service->table();
    for (const auto& b : batches) {
        expect_isolated(b, table);
    }
}

// --- messages and transports --------------------------------------------------------------

TEST(Messages, SubmitRoundTrip) {
    const ClientRequest r{"alice", {op("QET", {0}, 1.5), op("PHASE", {1}, 0.5, 0.25), op("MEASURE", {0})}};
    const auto line = format_submit(r, "7");
    EXPECT_EQ(line.find('\n'), std::string::npos);
    const auto parsed = std::get<SubmitMessage>(parse_message(line));
    EXPECT_EQ(parsed.id, "7");
    EXPECT_EQ(parsed.request.client, "alice");
    ASSERT_EQ(parsed.request.ops.size(), 3u);
    EXPECT_EQ(parsed.request.ops[1].phi, 0.25);
    EXPECT_EQ(parsed.request.ops[0].qubits, (std::vector<std::int64_t>{0}));
}

TEST(Messages, MalformedInputs) {
    EXPECT_TRUE(std::holds_alternative<MalformedMessage>(parse_message("{not json")));
    EXPECT_TRUE(std::holds_alternative<MalformedMessage>(parse_message("[1]")));
    EXPECT_TRUE(std::holds_alternative<MalformedMessage>(parse_message(R"({"type":"submit","ops":[]})")));
    EXPECT_TRUE(std::holds_alternative<MalformedMessage>(parse_message(R"({"type":"submit","client":"a"})")));
    EXPECT_TRUE(std::holds_alternative<CapacityQuery>(parse_message(R"({"type":"capacity"})")));
    const auto m = std::get<SubmitMessage>(
        parse_message(R"({"type":"submit","client":"a","ops":[{"op":"QET","qubits":["x"],"theta":"y","z":1}]})"));
    EXPECT_EQ(m.request.ops[0].problems.size(), 3u);
}

TEST(Messages, ResponseFields) {
    const auto ok = format_response({"a", 0, {{2, 1}}, {}}, "\"r1\"");
    EXPECT_EQ(ok, R"({"type":"result","client":"a","id":"r1","results":[{"qubit":2,"bit":1}]})");
    const auto err = format_response({"a", 0, {}, {{0, "missing parameter: theta"}, {std::nullopt, "x"}}});
    EXPECT_EQ(err,
              R"({"type":"error","client":"a","errors":[{"index":0,"message":"missing parameter: theta"},{"index":null,"message":"x"}]})");
    EXPECT_EQ(format_capacity(1024), R"({"type":"capacity","capacity":1024})");
}

TEST(Transport, StdioSessionIsSynchronous) {
    auto service = make_service(9);
    std::istringstream in(format_capacity_query() + "\n\n" + format_submit(bell("a")) + "\n" + "garbage\n" +
                          format_submit({"b", {op("QET", {0}), op("MEASURE", {0})}}) + "\n");
    std::ostringstream out;
    serve_stdio(*service, in, out);
    std::istringstream lines(out.str());
    std::string line;
    std::vector<ResponseMessage> responses;
    while (std::getline(lines, line)) {
        responses.push_back(parse_response(line));
    }
    ASSERT_EQ(responses.size(), 4u);
    EXPECT_EQ(responses[0].capacity, 1024u);
    EXPECT_EQ(responses[1].type, "result");
    EXPECT_EQ(responses[1].results.size(), 2u);
    EXPECT_EQ(responses[2].type, "error");
    EXPECT_EQ(responses[3].type, "error");
    EXPECT_EQ(responses[3].errors[0].index, 0u);
}

TEST(Transport, SocketServesConcurrentClients) {
    auto service = make_service(10);
    service->start();
    SocketServer server(*service);
    ASSERT_NE(server.port(), 0);
    std::vector<std::thread> threads;
    std::atomic<int> good{0};
    for (const std::string name : {"alice", "bob", "carol"}) {
        threads.emplace_back([&, name] {
            LineClient client(server.port());
            for (int i = 0; i < 20; ++i) {
                const auto r = parse_response(client.request(format_submit(bell(name, 2, 5), std::to_string(i))));
                if (r.type == "result" && r.client == name && r.id == std::to_string(i) && r.results.size() == 2 &&
                    r.results[0].qubit == 2 && r.results[1].qubit == 5) {
                    ++good;
                }
            }
            EXPECT_EQ(parse_response(client.request(format_capacity_query())).capacity, 1024u);
        });
    }
    for (auto& t : threads) {
        t.join();
    }
    server.stop();
    service->stop();
    EXPECT_EQ(good.load(), 60);
}

}  // namespace
}  // namespace qpu::service
