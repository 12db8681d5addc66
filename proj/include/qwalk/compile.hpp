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

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/circuit.hpp"

namespace qwalk {

/// Target basis: one-qubit rotations, the phase gate and CNOT.
enum class BasisKind : std::uint8_t { Rx, Ry, Rz, Phase, Cnot };

struct BasisGate {
  BasisKind kind = BasisKind::Rx;
  int target = 0;
  int control = -1;    // Cnot only
  double angle = 0.0;  // rotation / phase angles; unused for Cnot

  static BasisGate rx(int t, double a) { return {BasisKind::Rx, t, -1, a}; }
  static BasisGate ry(int t, double a) { return {BasisKind::Ry, t, -1, a}; }
  static BasisGate rz(int t, double a) { return {BasisKind::Rz, t, -1, a}; }
  static BasisGate phase(int t, double a) {
    return {BasisKind::Phase, t, -1, a};
  }
  static BasisGate cnot(int c, int t) { return {BasisKind::Cnot, t, c, 0.0}; }

  bool operator==(const BasisGate&) const = default;
};

/// Circuit over the {RX, RY, RZ, P, CNOT} basis.  The unitary it implements
/// is e^{i global_phase} times the gate product, so the source circuit is
/// reproduced exactly, not only up to phase.
struct CompiledCircuit {
  WireLayout layout;
  std::vector<BasisGate> gates;
  double global_phase = 0.0;
};

/// 2x2 matrix of a one-qubit basis gate kind at the given angle.
Eigen::Matrix2cd basis_matrix(BasisKind kind, double angle);

/// ZYZ factorisation of the CoinAngles unitary: RZ(phi) RY(theta) RZ(lambda)
/// up to the tracked phase alpha + (phi + lambda)/2.  Zero-angle rotations
/// are dropped; the identity yields an empty sequence.
std::vector<BasisGate> decompose_1q(int target, const CoinAngles& a,
                                    double& phase);

/// Singly-controlled CoinAngles unitary via the two-CNOT conjugation
/// A CNOT B CNOT C with the phase folded into a P gate on the control.
std::vector<BasisGate> decompose_controlled_1q(int control, int target,
                                               const CoinAngles& a,
                                               double& phase);

/// Multi-controlled NOT over positive controls.  `wires` is the total wire
/// count of the host circuit; idle wires may be borrowed in any state (they
/// are always restored).  With at least one idle wire the cost is linear in
/// the control count (Toffoli chains), otherwise a quadratic ancilla-free
/// recursion through controlled X^{1/2^k} roots is used.
std::vector<BasisGate> decompose_mcx(const std::vector<int>& controls,
                                     int target, int wires, double& phase);

/// Lowers a circuit to the basis.  SWAP becomes three CNOTs (controlled
/// SWAP conjugates a multi-controlled NOT by two CNOTs); negative controls
/// are conjugated by NOTs; adjacent inverse pairs are cancelled.  No other
/// optimisation is performed.
CompiledCircuit compile(const Circuit& c);

struct CompiledMetrics {
  long long depth = 0;
  int width = 0;
  long long size = 0;
};

/// Unit-cost scheduled depth, wire count and gate count of compile(c).
CompiledMetrics compiled_metrics(const Circuit& c);
CompiledMetrics compiled_metrics(const CompiledCircuit& c);

/// Dense unitary including the global phase.  Refuses more than 12 wires.
Eigen::MatrixXcd compiled_unitary(const CompiledCircuit& c);

/// Same line-oriented text form as circuits, restricted to basis kinds,
/// with a trailing global-phase record.
std::string to_text(const CompiledCircuit& c);

}  // namespace qwalk
