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

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qwalk {

/// Structural problem with a gate or circuit (bad wire index, malformed gate,
/// invalid layout parameters).
class CircuitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested object is too large to materialise (e.g. a dense unitary or
/// state vector for too many wires).
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Angles (alpha, theta, phi, lambda) of a general one-qubit unitary
///
///   e^{i alpha} [ cos(theta/2)            -e^{i lambda} sin(theta/2)      ]
///               [ e^{i phi} sin(theta/2)   e^{i(phi+lambda)} cos(theta/2) ]
struct CoinAngles {
  double alpha = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;

  /// Angles of the adjoint unitary.
  CoinAngles adjoint() const { return {-alpha, -theta, -lambda, -phi}; }

  bool operator==(const CoinAngles&) const = default;
};

/// Wire naming for a walk register with n position wires and packs of size
/// 2^m.  Wires are contiguous from 0, little-endian (wire w carries bit 2^w):
///
///   [0, n)                       position bits b_0 .. b_{n-1}
///   n                            principal coin s_0
///   [n+1, n+2^m)                 ancillary coins s_1 .. s_{2^m - 1}
///   [n+2^m, n+2^{m+1})           ancillary positions b'_0 .. b'_{2^m - 1}
struct WireLayout {
  int n = 0;
  int m = 0;

  WireLayout() = default;
  WireLayout(int n_, int m_) : n(n_), m(m_) {
    if (n < 0 || m < 0 || m > n)
      throw CircuitError("wire layout requires 0 <= m <= n");
  }

  int wire_count() const { return n + (1 << (m + 1)); }
  int position(int p) const { return p; }
  int principal_coin() const { return n; }
  /// s_k; k = 0 is the principal coin.
  int coin(int k) const { return n + k; }
  /// b'_k
  int ancilla_position(int k) const { return n + (1 << m) + k; }

  std::vector<int> position_wires() const;
  std::vector<int> ancillary_coins() const;
  std::vector<int> ancillary_positions() const;

  bool operator==(const WireLayout&) const = default;
};

enum class GateKind : std::uint8_t { Not, Coin, Swap, Mcx };

/// One control wire with polarity (positive fires on |1>, negative on |0>).
struct Control {
  int wire = 0;
  bool positive = true;

  bool operator==(const Control&) const = default;
};

/// A single circuit primitive.  Not has no controls; Mcx is a NOT with one or
/// more (possibly negative) controls; Swap has two targets; Coin applies the
/// CoinAngles unitary to its target.
struct Gate {
  GateKind kind = GateKind::Not;
  std::array<int, 2> target{0, 0};
  int target_count = 1;
  std::vector<Control> controls;
  CoinAngles angles;

  static Gate x(int wire) {
    Gate g;
    g.kind = GateKind::Not;
    g.target = {wire, 0};
    return g;
  }
  static Gate coin(int wire, CoinAngles a, std::vector<Control> ctrl = {}) {
    Gate g;
    g.kind = GateKind::Coin;
    g.target = {wire, 0};
    g.angles = a;
    g.controls = std::move(ctrl);
    return g;
  }
  static Gate swap(int a, int b, std::vector<Control> ctrl = {}) {
    Gate g;
    g.kind = GateKind::Swap;
    g.target = {a, b};
    g.target_count = 2;
    g.controls = std::move(ctrl);
    return g;
  }
  static Gate mcx(int wire, std::vector<Control> ctrl) {
    Gate g;
    g.kind = GateKind::Mcx;
    g.target = {wire, 0};
    g.controls = std::move(ctrl);
    return g;
  }
  /// CNOT with a positive control.
  static Gate cx(int control, int wire) { return mcx(wire, {{control, true}}); }

  /// Gate with the adjoint action (self-inverse except Coin).
  Gate adjoint() const;

  bool operator==(const Gate&) const = default;
};

/// Ordered gate list over a wire layout.  Builders may record segment
/// boundaries; the per-segment depth mode sums scheduled depths over the
/// recorded segments instead of scheduling across them.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(WireLayout layout) : layout_(layout) {}

  const WireLayout& layout() const { return layout_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<std::size_t>& segment_bounds() const { return bounds_; }

  /// Appends a gate after validating wire indices and gate shape.
  void add(Gate g);
  /// Appends all gates of `other` (same layout required), keeping its
  /// internal segment boundaries.
  void extend(const Circuit& other);
  /// Records a segment boundary at the current gate count.
  void close_segment();

  /// Segment ranges [first, last) covering all gates, in order.
  std::vector<std::pair<std::size_t, std::size_t>> segments() const;

  bool operator==(const Circuit&) const = default;

 private:
  WireLayout layout_;
  std::vector<Gate> gates_;
  std::vector<std::size_t> bounds_;
};

/// Depth/width cost model.  `toffoli_depth` is the scheduled depth of an
/// x-controlled NOT; `toffoli_width` the number of extra ancilla wires it
/// needs.  A 0-controlled NOT is a plain NOT and must have depth 1.
struct CostModel {
  int swap_cost = 3;
  std::function<long long(int)> toffoli_depth;
  std::function<int(int)> toffoli_width;

  long long gate_cost(const Gate& g) const;

  /// Every gate costs one layer (SWAP still 3).
  static CostModel atomic();
  /// Ancilla-free multi-controlled NOTs with depth linear in the control
  /// count: 1 for x <= 1, 8x - 6 for x >= 2.
  static CostModel linear();
};

enum class DepthMode { Asap, PerSegmentSum };

/// Weighted critical-path length under greedy earliest-start scheduling:
/// each gate occupies its target and control wires for its full cost, and
/// gates on disjoint wires may share layers.  PerSegmentSum sums the
/// scheduled depth of each recorded segment.
long long circuit_depth(const Circuit& c, const CostModel& cost,
                        DepthMode mode = DepthMode::Asap);

/// Layout wire count plus the widest ancilla requirement over the
/// multi-controlled NOTs present.
int circuit_width(const Circuit& c, const CostModel& cost);

/// Number of gate records.
std::size_t circuit_size(const Circuit& c);

/// Dense unitary of the circuit (little-endian: column k is the image of
/// basis state |k>).  Refuses layouts wider than 12 wires.
Eigen::MatrixXcd circuit_unitary(const Circuit& c);

/// Circuit with the inverse action: gate order reversed, each gate replaced
/// by its adjoint.  Segment boundaries are mirrored.
Circuit inverse(const Circuit& c);

/// Line-oriented text form, one gate per line.  Stable across runs.
std::string to_text(const Circuit& c);
Circuit circuit_from_text(const std::string& text);

}  // namespace qwalk
