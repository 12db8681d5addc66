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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qwalk/simulate.hpp"

namespace qwalk {

namespace {

const double kPi = std::acos(-1.0);

void emit_rotation(std::vector<BasisGate>& out, BasisKind kind, int target,
                   double angle) {
  if (angle != 0.0) out.push_back({kind, target, -1, angle});
}

/// X as a basis sequence: RX(pi) up to a phase of pi/2.
void emit_x(std::vector<BasisGate>& out, int wire, double& phase) {
  out.push_back(BasisGate::rx(wire, kPi));
  phase += kPi / 2.0;
}

/// Hadamard: RZ(pi) then RY(pi/2), up to a phase of pi/2.
void emit_h(std::vector<BasisGate>& out, int wire, double& phase) {
  out.push_back(BasisGate::rz(wire, kPi));
  out.push_back(BasisGate::ry(wire, kPi / 2.0));
  phase += kPi / 2.0;
}

/// Toffoli as the standard 15-gate CNOT + T network, with the two Hadamards
/// expanded (17 basis gates, phase pi).
void emit_toffoli(std::vector<BasisGate>& out, int a, int b, int t,
                  double& phase) {
  const double tq = kPi / 4.0;
  emit_h(out, t, phase);
  out.push_back(BasisGate::cnot(b, t));
  out.push_back(BasisGate::phase(t, -tq));
  out.push_back(BasisGate::cnot(a, t));
  out.push_back(BasisGate::phase(t, tq));
  out.push_back(BasisGate::cnot(b, t));
  out.push_back(BasisGate::phase(t, -tq));
  out.push_back(BasisGate::cnot(a, t));
  out.push_back(BasisGate::phase(b, tq));
  out.push_back(BasisGate::phase(t, tq));
  out.push_back(BasisGate::cnot(a, b));
  emit_h(out, t, phase);
  out.push_back(BasisGate::phase(a, tq));
  out.push_back(BasisGate::phase(b, -tq));
  out.push_back(BasisGate::cnot(a, b));
}

/// Controlled RX(theta) through the two-CNOT conjugation.
void emit_crx(std::vector<BasisGate>& out, int control, int target,
              double theta) {
  out.push_back(BasisGate::rz(target, kPi / 2.0));
  out.push_back(BasisGate::cnot(control, target));
  emit_rotation(out, BasisKind::Ry, target, -theta / 2.0);
  out.push_back(BasisGate::cnot(control, target));
  emit_rotation(out, BasisKind::Ry, target, theta / 2.0);
  out.push_back(BasisGate::rz(target, -kPi / 2.0));
}

/// Controlled X^{s/2^k} (s = +-1): a P(s pi/2^{k+1}) on the control and a
/// controlled RX(s pi/2^k).
void emit_cxroot(std::vector<BasisGate>& out, int control, int target, int k,
                 int sign) {
  out.push_back(BasisGate::phase(control, sign * kPi / std::ldexp(1.0, k + 1)));
  emit_crx(out, control, target, sign * kPi / std::ldexp(1.0, k));
}

void emit_mcx(std::vector<BasisGate>& out, const std::vector<int>& controls,
              int target, int wires, double& phase);

/// Multi-controlled NOT on x >= 3 controls with x - 2 borrowed wires, as two
/// passes of a Toffoli chain (4(x-2) Toffolis).  The borrowed wires may hold
/// any state and are restored.
void emit_mcx_chain(std::vector<BasisGate>& out,
                    const std::vector<int>& controls, int target,
                    const std::vector<int>& borrowed, double& phase) {
  const int x = static_cast<int>(controls.size());
  std::vector<std::array<int, 3>> toffolis;
  toffolis.push_back({controls[x - 1], borrowed[x - 3], target});
  for (int idx = x - 1; idx >= 3; --idx)
    toffolis.push_back({controls[idx - 1], borrowed[idx - 3], borrowed[idx - 2]});
  toffolis.push_back({controls[0], controls[1], borrowed[0]});
  for (int idx = 3; idx <= x - 1; ++idx)
    toffolis.push_back({controls[idx - 1], borrowed[idx - 3], borrowed[idx - 2]});
  // second pass restores the borrowed wires
  const std::size_t pass = toffolis.size();
  for (std::size_t g = 0; g < 2 * pass; ++g) {
    const auto& tof = toffolis[g % pass];
    emit_toffoli(out, tof[0], tof[1], tof[2], phase);
  }
}

/// C^x(X^{1/2^k}) without any free wire: peel off the last control with a
/// controlled root and recurse (quadratic in x).
void emit_mcx_root(std::vector<BasisGate>& out,
                   const std::vector<int>& controls, int target, int k,
                   int wires, double& phase) {
  const int x = static_cast<int>(controls.size());
  if (x == 0) {
    out.push_back(BasisGate::rx(target, kPi / std::ldexp(1.0, k)));
    phase += kPi / std::ldexp(1.0, k + 1);
    return;
  }
  if (x == 1) {
    emit_cxroot(out, controls[0], target, k, +1);
    return;
  }
  std::vector<int> rest(controls.begin(), controls.end() - 1);
  const int last = controls.back();
  emit_cxroot(out, last, target, k + 1, +1);
  emit_mcx(out, rest, last, wires, phase);
  emit_cxroot(out, last, target, k + 1, -1);
  emit_mcx(out, rest, last, wires, phase);
  emit_mcx_root(out, rest, target, k + 1, wires, phase);
}

std::vector<int> idle_wires(const std::vector<int>& controls, int target,
                            int wires) {
  std::vector<bool> used(static_cast<std::size_t>(wires), false);
  used[static_cast<std::size_t>(target)] = true;
  for (int c : controls) used[static_cast<std::size_t>(c)] = true;
  std::vector<int> idle;
  for (int w = 0; w < wires; ++w)
    if (!used[static_cast<std::size_t>(w)]) idle.push_back(w);
  return idle;
}

void emit_mcx(std::vector<BasisGate>& out, const std::vector<int>& controls,
              int target, int wires, double& phase) {
  const int x = static_cast<int>(controls.size());
  if (x == 0) {
    emit_x(out, target, phase);
    return;
  }
  if (x == 1) {
    out.push_back(BasisGate::cnot(controls[0], target));
    return;
  }
  if (x == 2) {
    emit_toffoli(out, controls[0], controls[1], target, phase);
    return;
  }
  const std::vector<int> idle = idle_wires(controls, target, wires);
  if (static_cast<int>(idle.size()) >= x - 2) {
    const std::vector<int> borrowed(idle.begin(), idle.begin() + (x - 2));
    emit_mcx_chain(out, controls, target, borrowed, phase);
    return;
  }
  if (!idle.empty()) {
    // split across one borrowed wire: t ^= P1 & P2 with the borrowed wire
    // accumulating P1, applied twice so it is restored
    const int borrow = idle.front();
    const int x1 = (x + 1) / 2;
    const std::vector<int> first(controls.begin(), controls.begin() + x1);
    std::vector<int> second(controls.begin() + x1, controls.end());
    second.push_back(borrow);
    for (int rep = 0; rep < 2; ++rep) {
      emit_mcx(out, first, borrow, wires, phase);
      emit_mcx(out, second, target, wires, phase);
    }
    return;
  }
  emit_mcx_root(out, controls, target, 0, wires, phase);
}

}  // namespace

Eigen::Matrix2cd basis_matrix(BasisKind kind, double angle) {
  const Complex i(0.0, 1.0);
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  Eigen::Matrix2cd u;
  switch (kind) {
    case BasisKind::Rx:
      u << c, -i * s, -i * s, c;
      return u;
    case BasisKind::Ry:
      u << c, -s, s, c;
      return u;
    case BasisKind::Rz:
      u << std::exp(-i * (angle / 2.0)), 0.0, 0.0, std::exp(i * (angle / 2.0));
      return u;
    case BasisKind::Phase:
      u << 1.0, 0.0, 0.0, std::exp(i * angle);
      return u;
    case BasisKind::Cnot:
      break;
  }
  throw CircuitError("CNOT has no one-qubit matrix");
}

std::vector<BasisGate> decompose_1q(int target, const CoinAngles& a,
                                    double& phase) {
  std::vector<BasisGate> out;
  emit_rotation(out, BasisKind::Rz, target, a.lambda);
  emit_rotation(out, BasisKind::Ry, target, a.theta);
  emit_rotation(out, BasisKind::Rz, target, a.phi);
  phase += a.alpha + (a.phi + a.lambda) / 2.0;
  return out;
}

std::vector<BasisGate> decompose_controlled_1q(int control, int target,
                                               const CoinAngles& a,
                                               [[maybe_unused]] double& phase) {
  // Exact including phase: the conditional phase sits in the trailing P gate,
  // so nothing spills into the global phase.
  std::vector<BasisGate> out;
  if (a == CoinAngles{}) return out;
  emit_rotation(out, BasisKind::Rz, target, (a.lambda - a.phi) / 2.0);
  out.push_back(BasisGate::cnot(control, target));
  emit_rotation(out, BasisKind::Rz, target, -(a.phi + a.lambda) / 2.0);
  emit_rotation(out, BasisKind::Ry, target, -a.theta / 2.0);
  out.push_back(BasisGate::cnot(control, target));
  emit_rotation(out, BasisKind::Ry, target, a.theta / 2.0);
  emit_rotation(out, BasisKind::Rz, target, a.phi);
  const double gamma = a.alpha + (a.phi + a.lambda) / 2.0;
  emit_rotation(out, BasisKind::Phase, control, gamma);
  return out;
}

std::vector<BasisGate> decompose_mcx(const std::vector<int>& controls,
                                     int target, int wires, double& phase) {
  for (int c : controls)
    if (c == target) throw CircuitError("MCX control equals target");
  std::vector<BasisGate> out;
  emit_mcx(out, controls, target, wires, phase);
  return out;
}

namespace {

bool cancels(const BasisGate& a, const BasisGate& b) {
  if (a.kind != b.kind || a.target != b.target) return false;
  if (a.kind == BasisKind::Cnot) return a.control == b.control;
  return a.angle + b.angle == 0.0;
}

void push_cancelling(std::vector<BasisGate>& gates, const BasisGate& g) {
  if (!gates.empty() && cancels(gates.back(), g)) {
    gates.pop_back();
    return;
  }
  gates.push_back(g);
}

}  // namespace

CompiledCircuit compile(const Circuit& c) {
  CompiledCircuit out;
  out.layout = c.layout();
  const int wires = c.layout().wire_count();

  const auto lower_mcx = [&](const std::vector<Control>& controls, int target) {
    std::vector<BasisGate> seq;
    std::vector<int> pos;
    for (const Control& ctl : controls)
      if (!ctl.positive) emit_x(seq, ctl.wire, out.global_phase);
    for (const Control& ctl : controls) pos.push_back(ctl.wire);
    emit_mcx(seq, pos, target, wires, out.global_phase);
    for (const Control& ctl : controls)
      if (!ctl.positive) emit_x(seq, ctl.wire, out.global_phase);
    return seq;
  };

  for (const Gate& g : c.gates()) {
    std::vector<BasisGate> seq;
    switch (g.kind) {
      case GateKind::Not:
        emit_x(seq, g.target[0], out.global_phase);
        break;
      case GateKind::Coin: {
        if (g.controls.empty()) {
          seq = decompose_1q(g.target[0], g.angles, out.global_phase);
        } else if (g.controls.size() == 1 && g.controls[0].positive) {
          seq = decompose_controlled_1q(g.controls[0].wire, g.target[0],
                                        g.angles, out.global_phase);
        } else {
          throw CircuitError(
              "coin gates support at most one positive control");
        }
        break;
      }
      case GateKind::Swap: {
        const int a = g.target[0];
        const int b = g.target[1];
        if (g.controls.empty()) {
          seq.push_back(BasisGate::cnot(a, b));
          seq.push_back(BasisGate::cnot(b, a));
          seq.push_back(BasisGate::cnot(a, b));
        } else {
          // swap = CNOT sandwich around a multi-controlled NOT
          std::vector<Control> controls = g.controls;
          controls.push_back({a, true});
          seq.push_back(BasisGate::cnot(b, a));
          const std::vector<BasisGate> inner = lower_mcx(controls, b);
          seq.insert(seq.end(), inner.begin(), inner.end());
          seq.push_back(BasisGate::cnot(b, a));
        }
        break;
      }
      case GateKind::Mcx:
        seq = lower_mcx(g.controls, g.target[0]);
        break;
    }
    for (const BasisGate& bg : seq) push_cancelling(out.gates, bg);
  }
  out.global_phase = std::remainder(out.global_phase, 2.0 * kPi);
  return out;
}

CompiledMetrics compiled_metrics(const Circuit& c) {
  return compiled_metrics(compile(c));
}

CompiledMetrics compiled_metrics(const CompiledCircuit& c) {
  CompiledMetrics m;
  m.width = c.layout.wire_count();
  m.size = static_cast<long long>(c.gates.size());
  std::vector<long long> free_at(static_cast<std::size_t>(m.width), 0);
  for (const BasisGate& g : c.gates) {
    long long start = free_at[static_cast<std::size_t>(g.target)];
    if (g.kind == BasisKind::Cnot)
      start = std::max(start, free_at[static_cast<std::size_t>(g.control)]);
    const long long end = start + 1;
    free_at[static_cast<std::size_t>(g.target)] = end;
    if (g.kind == BasisKind::Cnot)
      free_at[static_cast<std::size_t>(g.control)] = end;
    m.depth = std::max(m.depth, end);
  }
  return m;
}

namespace {

void apply_basis_gate(StateVector& v, const BasisGate& g) {
  const int wires = state_wires(v);
  if (g.kind == BasisKind::Cnot) {
    apply_gate(v, Gate::cx(g.control, g.target));
    return;
  }
  const Eigen::Matrix2cd u = basis_matrix(g.kind, g.angle);
  const std::uint64_t tbit = 1ull << g.target;
  const std::uint64_t size = 1ull << wires;
  Complex* amp = v.data();
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    if (idx & tbit) continue;
    const Complex a0 = amp[idx];
    const Complex a1 = amp[idx | tbit];
    amp[idx] = u(0, 0) * a0 + u(0, 1) * a1;
    amp[idx | tbit] = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

}  // namespace

Eigen::MatrixXcd compiled_unitary(const CompiledCircuit& c) {
  const int wires = c.layout.wire_count();
  if (wires > 12) throw SizeError("dense unitary limited to 12 wires");
  const Eigen::Index dim = Eigen::Index{1} << wires;
  const Complex scale = std::exp(Complex(0.0, 1.0) * c.global_phase);
  Eigen::MatrixXcd u(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    StateVector col = basis_state(wires, static_cast<std::uint64_t>(k));
    for (const BasisGate& g : c.gates) apply_basis_gate(col, g);
    u.col(k) = scale * col;
  }
  return u;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* basis_name(BasisKind k) {
  switch (k) {
    case BasisKind::Rx:
      return "rx";
    case BasisKind::Ry:
      return "ry";
    case BasisKind::Rz:
      return "rz";
    case BasisKind::Phase:
      return "p";
    case BasisKind::Cnot:
      return "cnot";
  }
  return "?";
}

}  // namespace

std::string to_text(const CompiledCircuit& c) {
  std::ostringstream os;
  os << "qwalk-basis-circuit v1\n";
  os << "layout n=" << c.layout.n << " m=" << c.layout.m << "\n";
  for (const BasisGate& g : c.gates) {
    os << basis_name(g.kind) << ' ' << g.target;
    if (g.kind == BasisKind::Cnot)
      os << " +" << g.control;
    else
      os << ' ' << format_double(g.angle);
    os << '\n';
  }
  os << "phase " << format_double(c.global_phase) << '\n';
  return os.str();
}

}  // namespace qwalk
