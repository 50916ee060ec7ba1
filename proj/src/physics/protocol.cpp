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


#include "qpu/physics/protocol.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "qpu/core/error.hpp"
#include "qpu/core/operations.hpp"
#include "qpu/core/random_source.hpp"
#include "qpu/isa/gates.hpp"

namespace qpu::physics {
namespace {

using Op = ElementaryOp;
constexpr Cavity A = Cavity::A;
constexpr Cavity B = Cavity::B;
constexpr Cavity C = Cavity::C;

// (photon_a, mem_a, photon_b, dot_b, photon_c, mem_c) of the α, β, γ, δ terms.
const std::array<std::array<Configuration, 4>, 12> kPrinted{{
    {{{0, 3, 0, 1, 0, 1}, {0, 1, 0, 1, 0, 3}, {0, 3, 0, 3, 0, 1}, {0, 1, 0, 3, 0, 3}}},
    {{{1, 1, 0, 1, 0, 1}, {0, 0, 0, 1, 0, 3}, {1, 1, 0, 3, 0, 1}, {0, 1, 0, 3, 0, 3}}},
    {{{0, 0, 1, 1, 0, 0}, {0, 0, 0, 1, 0, 1}, {0, 0, 1, 3, 0, 0}, {0, 0, 0, 3, 0, 1}}},
    {{{0, 0, 0, 2, 0, 0}, {0, 0, 0, 1, 0, 1}, {0, 0, 1, 3, 0, 0}, {0, 0, 0, 3, 0, 1}}},
    {{{0, 0, 0, 3, 0, 0}, {0, 0, 0, 1, 0, 1}, {0, 0, 1, 2, 0, 0}, {0, 0, 0, 2, 0, 1}}},
    {{{0, 0, 0, 3, 0, 0}, {0, 0, 0, 1, 0, 1}, {0, 3, 0, 2, 0, 0}, {0, 0, 0, 2, 0, 1}}},
    {{{0, 0, 0, 3, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 3, 0, 2, 0, 0}, {0, 0, 1, 2, 0, 0}}},
    {{{0, 0, 0, 2, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 3, 0, 3, 0, 0}, {0, 0, 1, 3, 0, 0}}},
    {{{0, 0, 1, 1, 0, 0}, {0, 0, 0, 2, 0, 0}, {0, 3, 0, 3, 0, 0}, {0, 0, 1, 3, 0, 0}}},
    {{{0, 0, 0, 1, 0, 1}, {0, 0, 0, 2, 0, 0}, {0, 3, 0, 3, 0, 0}, {0, 0, 0, 3, 0, 1}}},
    {{{0, 0, 0, 1, 0, 1}, {0, 0, 1, 1, 0, 0}, {0, 3, 0, 3, 0, 0}, {0, 0, 0, 3, 0, 1}}},
    {{{0, 0, 0, 1, 0, 1}, {0, 1, 0, 1, 0, 0}, {0, 1, 0, 3, 0, 0}, {0, 0, 0, 3, 0, 1}}},
}};

std::vector<ProtocolStep> ideal_sequence() {
    return {
        {1, {}, {}},
        {2, {Op::u(A, 2, 3), Op::r(A, 1, 2)}, {{{0, 1, 0, 1, 0, 3}, {0, 0, 0, 1, 0, 3}}}},
        {3,
         {Op::q(A, B)},
         {{{0, 1, 1, 1, 0, 1}, {0, 0, 1, 1, 0, 0}},
          {{0, 0, 0, 1, 0, 3}, {0, 0, 0, 1, 0, 1}},
          {{0, 1, 1, 3, 0, 1}, {0, 0, 1, 3, 0, 0}},
          {{0, 1, 0, 3, 0, 3}, {0, 0, 0, 3, 0, 1}}}},
        {4, {Op::r(B, 2, 1)}, {}},
        {5, {Op::u(B, 2, 3)}, {}},
        {6, {Op::q(B, A), Op::r(A, 2, 1), Op::u(A, 3, 2)}, {{{1, 0, 0, 2, 0, 0}, {0, 3, 0, 2, 0, 0}}}},
        {7,
         {Op::u(C, 2, 3), Op::r(C, 1, 2), Op::q(C, B)},
         {{{0, 0, 0, 1, 0, 1}, {0, 0, 1, 1, 0, 0}}, {{0, 0, 0, 2, 0, 1}, {0, 0, 1, 2, 0, 0}}}},
        {8, {Op::u(B, 2, 3)}, {}},
        {9, {Op::r(B, 2, 1)}, {}},
        {10,
         {Op::q(C, B), Op::r(C, 2, 1), Op::u(C, 3, 2)},
         {{{0, 0, 0, 1, 1, 0}, {0, 0, 0, 1, 0, 1}}, {{0, 0, 0, 3, 1, 0}, {0, 0, 0, 3, 0, 1}}}},
        {11, {Op::r(B, 2, 1)}, {}},
        {12,
         {Op::q(A, B), Op::r(A, 2, 1), Op::u(A, 3, 2)},
         {{{1, 0, 0, 1, 0, 0}, {0, 1, 0, 1, 0, 0}}, {{0, 2, 0, 3, 0, 0}, {0, 1, 0, 3, 0, 0}}}},
    };
}

// Full basis permutation sending each relabel source to its target; the
// displaced targets fill the vacated sources in sorted order.
std::vector<std::size_t> relabel_permutation(const std::vector<Relabel>& relabels) {
    std::vector<std::size_t> perm(kProtocolDimension);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        perm[i] = i;
    }
    std::set<std::size_t> sources;
    std::set<std::size_t> targets;
    for (const auto& r : relabels) {
        const auto from = configuration_index(r.from);
        const auto to = configuration_index(r.to);
        if (!sources.insert(from).second || !targets.insert(to).second) {
            throw DimensionError("relabeling is not a bijection");
        }
        perm[from] = to;
    }
    std::vector<std::size_t> vacated;
    for (const auto s : sources) {
        if (!targets.contains(s)) {
            vacated.push_back(s);
        }
    }
    std::size_t next = 0;
    for (const auto t : targets) {
        if (!sources.contains(t)) {
            perm[t] = vacated[next++];
        }
    }
    return perm;
}

void check_input(const ProtocolInput& input) {
    double n = 0;
    for (const auto& c : input.coefficients()) {
        n += std::norm(c);
    }
    if (!std::isfinite(n) || std::abs(n - 1.0) > kPipelineTolerance) {
        throw NormalizationError("protocol input has norm² " + std::to_string(n));
    }
}

double wrap_phase(double phase) {
    constexpr double two_pi = 2 * std::numbers::pi;
    phase = std::fmod(phase, two_pi);
    if (phase > std::numbers::pi) {
        phase -= two_pi;
    } else if (phase <= -std::numbers::pi) {
        phase += two_pi;
    }
    return phase;
}

}  // namespace

std::vector<ProtocolStep> protocol_sequence(Convention convention) {
    auto steps = ideal_sequence();
    for (auto& step : steps) {
        for (auto& op : step.factors) {
            op.convention = convention;
        }
    }
    return steps;
}

const std::array<Configuration, 4>& printed_terms(int k) {
    if (k < 1 || k > 12) {
        throw DimensionError("protocol states are numbered 1..12, got " + std::to_string(k));
    }
    return kPrinted[static_cast<std::size_t>(k - 1)];
}

StateVector printed_state(int k, const ProtocolInput& input) {
    check_input(input);
    DenseVector<Amplitude> amps = DenseVector<Amplitude>::Zero(kProtocolDimension);
    const auto coefficients = input.coefficients();
    const auto& terms = printed_terms(k);
    for (std::size_t t = 0; t < 4; ++t) {
        amps(static_cast<Eigen::Index>(configuration_index(terms[t]))) += coefficients[t];
    }
    return StateVector(protocol_shape(), std::move(amps));
}

StateVector apply_step(const StateVector& state, const ProtocolStep& step) {
    StateVector out = state;
    for (const auto& op : step.factors) {
        const auto placed = elementary_unitary(op);
        out = apply_local(out, placed.unitary, std::span<const std::size_t>(placed.targets));
    }
    if (step.relabels.empty()) {
        return out;
    }
    const auto perm = relabel_permutation(step.relabels);
    DenseVector<Amplitude> moved(static_cast<Eigen::Index>(kProtocolDimension));
    for (std::size_t i = 0; i < perm.size(); ++i) {
        moved(static_cast<Eigen::Index>(perm[i])) = out.amplitudes()(static_cast<Eigen::Index>(i));
    }
    return StateVector(protocol_shape(), std::move(moved));
}

ProtocolRun run_protocol(const ProtocolInput& input, Convention convention) {
    check_input(input);
    const auto steps = protocol_sequence(convention);
    ProtocolRun run{printed_state(1, input), {}};
    for (std::size_t k = 1; k < steps.size(); ++k) {
        run.intermediates.push_back(run.final_state);
        run.final_state = apply_step(run.final_state, steps[k]);
    }
    return run;
}

Configuration input_configuration(unsigned frame_index) {
    const bool control = (frame_index >> 2) & 1u;
    const bool target_a = (frame_index >> 1) & 1u;
    const bool target_c = frame_index & 1u;
    return {0, target_a ? 3 : 1, 0, control ? 3 : 1, 0, target_c ? 3 : 1};
}

Configuration output_configuration(unsigned frame_index) {
    const bool control = (frame_index >> 2) & 1u;
    const int target_a = static_cast<int>((frame_index >> 1) & 1u);
    const int target_c = static_cast<int>(frame_index & 1u);
    return {0, target_a, 0, control ? 3 : 1, 0, target_c};
}

Eigen::VectorXcd input_frame_state(const ProtocolInput& input) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
    const auto coefficients = input.coefficients();
    const auto& terms = printed_terms(1);
    for (std::size_t t = 0; t < 4; ++t) {
        for (unsigned f = 0; f < 8; ++f) {
            if (input_configuration(f) == terms[t]) {
                v(f) += coefficients[t];
            }
        }
    }
    return v;
}

Eigen::VectorXcd output_frame_state(const StateVector& protocol_state) {
    Eigen::VectorXcd v(8);
    for (unsigned f = 0; f < 8; ++f) {
        v(f) = protocol_state.amplitude(configuration_index(output_configuration(f)));
    }
    return v;
}

CqetReport verify_against_cqet(std::size_t samples, Convention convention, std::uint64_t seed) {
    if (samples == 0) {
        throw Error("verify_against_cqet needs at least one sample");
    }
    Eigen::MatrixXcd reference = cqet_matrix().matrix();
    if (convention == Convention::Ideal) {
        reference = reference.cwiseAbs().cast<Amplitude>();
    }
    const auto compare = [&](const ProtocolInput& input) {
        const auto expected = (reference * input_frame_state(input)).eval();
        const auto actual = output_frame_state(run_protocol(input, convention).final_state);
        return expected.dot(actual);
    };

    CqetReport report;
    RandomSource rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        std::array<Amplitude, 4> c;
        double n = 0;
        for (auto& x : c) {
            x = Amplitude(rng.normal(), rng.normal());
            n += std::norm(x);
        }
        for (auto& x : c) {
            x /= std::sqrt(n);
        }
        const double infidelity = 1.0 - std::norm(compare({c[0], c[1], c[2], c[3]}));
        report.max_infidelity = std::max(report.max_infidelity, infidelity);
    }
    std::array<double, 4> raw{};
    for (std::size_t b = 0; b < 4; ++b) {
        std::array<Amplitude, 4> c{};
        c[b] = 1;
        raw[b] = std::arg(compare({c[0], c[1], c[2], c[3]}));
    }
    for (std::size_t b = 0; b < 4; ++b) {
        report.branch_phases[b] = wrap_phase(raw[b] - raw[0]);
    }
    return report;
}

}  // namespace qpu::physics
