// Copyright 2026 The qwalk developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/compile.hpp"

#include <cmath>
#include <numbers>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "qwalk/simulate.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {
namespace {

using testing::max_abs_diff;
using testing::phase_aligned_distance;
using testing::random_circuit;

constexpr double kPi = std::numbers::pi;

/// Smallest layout with the requested wire count (w - 2 position wires).
WireLayout flat_layout(int wires) { return WireLayout(wires - 2, 0); }

/// Unitary (phase included) of a raw basis-gate sequence.
Eigen::MatrixXcd sequence_unitary(const std::vector<BasisGate>& gates,
                                  int wires, double phase = 0.0) {
  CompiledCircuit c;
  c.layout = flat_layout(wires);
  c.gates = gates;
  c.global_phase = phase;
  return compiled_unitary(c);
}

/// Reference multi-controlled NOT via the simulator kernels.
Eigen::MatrixXcd mcx_matrix(const std::vector<int>& controls, int target,
                            int wires) {
  Circuit c(flat_layout(wires));
  std::vector<Control> ctl;
  for (int w : controls) ctl.push_back({w, true});
  c.add(Gate::mcx(target, std::move(ctl)));
  return circuit_unitary(c);
}

TEST_CASE("basis matrices", "[compile]") {
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd rx_pi;
  rx_pi << 0.0, -i, -i, 0.0;
  CHECK(max_abs_diff(basis_matrix(BasisKind::Rx, kPi), rx_pi) < 1e-15);

  Eigen::Matrix2cd rz_pi;
  rz_pi << -i, 0.0, 0.0, i;
  CHECK(max_abs_diff(basis_matrix(BasisKind::Rz, kPi), rz_pi) < 1e-15);

  Eigen::Matrix2cd p;
  p << 1.0, 0.0, 0.0, std::exp(i * (kPi / 4.0));
  CHECK(max_abs_diff(basis_matrix(BasisKind::Phase, kPi / 4.0), p) == 0.0);

  const double r = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix2cd ry;
  ry << r, -r, r, r;
  CHECK(max_abs_diff(basis_matrix(BasisKind::Ry, kPi / 2.0), ry) < 1e-15);

  CHECK_THROWS_AS(basis_matrix(BasisKind::Cnot, 0.0), CircuitError);
}

TEST_CASE("one-qubit factorisation", "[compile]") {
  double phase = 0.0;
  CHECK(decompose_1q(0, CoinAngles{}, phase).empty());
  CHECK(phase == 0.0);

  // The Hadamard-like coin becomes RZ(pi) RY(pi/2) with phase pi/2.
  const std::vector<BasisGate> h =
      decompose_1q(0, {0.0, kPi / 2.0, 0.0, kPi}, phase);
  CHECK(h == std::vector<BasisGate>{BasisGate::rz(0, kPi),
                                    BasisGate::ry(0, kPi / 2.0)});
  CHECK(phase == Catch::Approx(kPi / 2.0));

  Xoshiro256 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const CoinAngles a{rng.next_double(-kPi, kPi), rng.next_double(0.0, kPi),
                       rng.next_double(-kPi, kPi), rng.next_double(-kPi, kPi)};
    phase = 0.0;
    const std::vector<BasisGate> seq = decompose_1q(0, a, phase);
    CHECK(seq.size() <= 3);
    Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
    for (const BasisGate& g : seq) u = basis_matrix(g.kind, g.angle) * u;
    u *= std::exp(Complex(0.0, 1.0) * phase);
    CHECK(max_abs_diff(u, coin_unitary(a)) < 1e-14);
  }
}

TEST_CASE("controlled one-qubit factorisation", "[compile]") {
  double phase = 0.0;
  CHECK(decompose_controlled_1q(0, 1, CoinAngles{}, phase).empty());

  Xoshiro256 rng(19);
  for (int trial = 0; trial < 15; ++trial) {
    const CoinAngles a{rng.next_double(-kPi, kPi), rng.next_double(0.0, kPi),
                       rng.next_double(-kPi, kPi), rng.next_double(-kPi, kPi)};
    phase = 0.0;
    const std::vector<BasisGate> seq = decompose_controlled_1q(0, 1, a, phase);
    CHECK(phase == 0.0);  // everything folds into the P gate

    const Eigen::Matrix2cd k = coin_unitary(a);
    Eigen::MatrixXcd expect = Eigen::MatrixXcd::Identity(4, 4);
    expect(1, 1) = k(0, 0);
    expect(1, 3) = k(0, 1);
    expect(3, 1) = k(1, 0);
    expect(3, 3) = k(1, 1);
    CHECK(max_abs_diff(sequence_unitary(seq, 2), expect) < 1e-13);
  }
}

TEST_CASE("multi-controlled NOT lowering, direct sizes", "[compile]") {
  double phase = 0.0;
  CHECK(decompose_mcx({3}, 1, 5, phase) ==
        std::vector<BasisGate>{BasisGate::cnot(3, 1)});

  phase = 0.0;
  const std::vector<BasisGate> toffoli = decompose_mcx({0, 1}, 2, 3, phase);
  CHECK(toffoli.size() == 17);
  CHECK(max_abs_diff(sequence_unitary(toffoli, 3, phase),
                     mcx_matrix({0, 1}, 2, 3)) < 1e-13);

  CHECK_THROWS_AS(decompose_mcx({0, 1}, 1, 4, phase), CircuitError);
}

TEST_CASE("multi-controlled NOT lowering with borrowed wires", "[compile]") {
  // Three controls with two idle wires takes the Toffoli-chain path; the
  // equality of the full 64x64 unitary also proves the idle wires are
  // restored in any state.
  double phase = 0.0;
  const std::vector<BasisGate> chain = decompose_mcx({0, 1, 2}, 3, 6, phase);
  CHECK(chain.size() == 4 * 17);
  CHECK(max_abs_diff(sequence_unitary(chain, 6, phase),
                     mcx_matrix({0, 1, 2}, 3, 6)) < 1e-12);

  // Four controls with a single idle wire splits in two halves.
  phase = 0.0;
  const std::vector<BasisGate> split =
      decompose_mcx({0, 1, 2, 3}, 4, 6, phase);
  CHECK(max_abs_diff(sequence_unitary(split, 6, phase),
                     mcx_matrix({0, 1, 2, 3}, 4, 6)) < 1e-12);
}

TEST_CASE("multi-controlled NOT lowering without free wires", "[compile]") {
  // Fully packed register: the quadratic root recursion is the only option.
  double phase = 0.0;
  const std::vector<BasisGate> tight = decompose_mcx({0, 1, 2}, 3, 4, phase);
  CHECK(max_abs_diff(sequence_unitary(tight, 4, phase),
                     mcx_matrix({0, 1, 2}, 3, 4)) < 1e-12);

  phase = 0.0;
  const std::vector<BasisGate> five = decompose_mcx({0, 1, 2, 3, 4}, 5, 6,
                                                    phase);
  CHECK(max_abs_diff(sequence_unitary(five, 6, phase),
                     mcx_matrix({0, 1, 2, 3, 4}, 5, 6)) < 1e-11);
}

TEST_CASE("swap compiles to exactly three CNOTs", "[compile]") {
  Circuit c(WireLayout(0, 0));
  c.add(Gate::swap(0, 1));
  const CompiledCircuit out = compile(c);
  CHECK(out.gates ==
        std::vector<BasisGate>{BasisGate::cnot(0, 1), BasisGate::cnot(1, 0),
                               BasisGate::cnot(0, 1)});
  CHECK(out.global_phase == 0.0);
  CHECK(max_abs_diff(compiled_unitary(out), circuit_unitary(c)) < 1e-15);
}

TEST_CASE("controlled swap lowering", "[compile]") {
  Circuit c(WireLayout(1, 0));
  c.add(Gate::swap(0, 1, {{2, true}}));
  CHECK(max_abs_diff(compiled_unitary(compile(c)), circuit_unitary(c)) <
        1e-13);

  Circuit neg(WireLayout(1, 0));
  neg.add(Gate::swap(0, 1, {{2, false}}));
  CHECK(max_abs_diff(compiled_unitary(compile(neg)), circuit_unitary(neg)) <
        1e-13);
}

TEST_CASE("adjacent inverse pairs cancel", "[compile]") {
  Circuit c(WireLayout(0, 0));
  c.add(Gate::cx(0, 1));
  c.add(Gate::cx(0, 1));
  CHECK(compile(c).gates.empty());

  // A coin followed by its adjoint reduces to nothing.
  Circuit coin(WireLayout(0, 0));
  const CoinAngles a{0.0, 0.9, 0.0, 0.0};
  coin.add(Gate::coin(0, a));
  coin.add(Gate::coin(0, a.adjoint()));
  CHECK(compile(coin).gates.empty());

  // Two NOTs stay as rotations but their phases make the product exact.
  Circuit nots(WireLayout(0, 0));
  nots.add(Gate::x(0));
  nots.add(Gate::x(0));
  const CompiledCircuit out = compile(nots);
  CHECK(out.gates.size() == 2);
  CHECK(max_abs_diff(compiled_unitary(out),
                     Eigen::MatrixXcd::Identity(4, 4)) < 1e-15);
}

TEST_CASE("coins support at most one positive control when compiling",
          "[compile]") {
  Circuit two(WireLayout(1, 0));
  two.add(Gate::coin(0, {0.1, 0.2, 0.3, 0.4}, {{1, true}, {2, true}}));
  CHECK_THROWS_AS(compile(two), CircuitError);

  Circuit negc(WireLayout(1, 0));
  negc.add(Gate::coin(0, {0.1, 0.2, 0.3, 0.4}, {{1, false}}));
  CHECK_THROWS_AS(compile(negc), CircuitError);
}

TEST_CASE("compilation reproduces random circuits exactly", "[compile]") {
  for (const WireLayout& layout :
       {WireLayout(2, 0), WireLayout(3, 0), WireLayout(1, 1)}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Circuit c = random_circuit(layout, 25, seed, /*compilable=*/true);
      const Eigen::MatrixXcd direct = circuit_unitary(c);
      const Eigen::MatrixXcd lowered = compiled_unitary(compile(c));
      CHECK((lowered - direct).norm() < 1e-9);
    }
  }
}

TEST_CASE("compilation reproduces builder circuits exactly", "[compile]") {
  const CoinTable coins = random_coin_table(2, 5);
  const Circuit c = build_coin_circuit(2, 1, coins);
  CHECK((compiled_unitary(compile(c)) - circuit_unitary(c)).norm() < 1e-9);

  const Circuit shift = build_shift_circuit(3);
  CHECK((compiled_unitary(compile(shift)) - circuit_unitary(shift)).norm() <
        1e-9);

  WalkSpec spec;
  spec.n = 2;
  spec.m = 1;
  spec.coins = coins;
  const Circuit step = build_walk_step(spec);
  CHECK((compiled_unitary(compile(step)) - circuit_unitary(step)).norm() <
        1e-9);
}

TEST_CASE("global phase stays reduced", "[compile]") {
  Circuit c(WireLayout(2, 0));
  for (int rep = 0; rep < 9; ++rep) c.add(Gate::x(rep % 3));
  const CompiledCircuit out = compile(c);
  CHECK(out.global_phase <= kPi);
  CHECK(out.global_phase > -kPi);
  CHECK(phase_aligned_distance(compiled_unitary(out), circuit_unitary(c)) <
        1e-13);
}

TEST_CASE("compiled metrics", "[compile]") {
  Circuit empty(WireLayout(2, 1));
  const CompiledMetrics none = compiled_metrics(empty);
  CHECK(none.depth == 0);
  CHECK(none.size == 0);
  CHECK(none.width == 6);

  Circuit swap(WireLayout(0, 0));
  swap.add(Gate::swap(0, 1));
  const CompiledMetrics sw = compiled_metrics(swap);
  CHECK(sw.depth == 3);
  CHECK(sw.size == 3);

  // Disjoint rotations share a layer.
  CompiledCircuit par;
  par.layout = WireLayout(1, 0);
  par.gates = {BasisGate::rx(0, 1.0), BasisGate::rx(1, 1.0),
               BasisGate::rx(2, 1.0)};
  CHECK(compiled_metrics(par).depth == 1);
}

TEST_CASE("compiled text form", "[compile]") {
  Circuit c(WireLayout(0, 0));
  c.add(Gate::cx(0, 1));
  const std::string text = to_text(compile(c));
  CHECK(text ==
        "qwalk-basis-circuit v1\n"
        "layout n=0 m=0\n"
        "cnot 1 +0\n"
        "phase 0\n");

  Circuit x(WireLayout(0, 0));
  x.add(Gate::x(1));
  CHECK(to_text(compile(x)) ==
        "qwalk-basis-circuit v1\n"
        "layout n=0 m=0\n"
        "rx 1 3.1415926535897931\n"
        "phase 1.5707963267948966\n");
}

}  // namespace
}  // namespace qwalk
