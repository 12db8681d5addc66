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

#include "qwalk/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "qwalk/simulate.hpp"

namespace qwalk {

std::vector<int> WireLayout::position_wires() const {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  return w;
}

std::vector<int> WireLayout::ancillary_coins() const {
  std::vector<int> w;
  for (int k = 1; k < (1 << m); ++k) w.push_back(coin(k));
  return w;
}

std::vector<int> WireLayout::ancillary_positions() const {
  std::vector<int> w;
  for (int k = 0; k < (1 << m); ++k) w.push_back(ancilla_position(k));
  return w;
}

Gate Gate::adjoint() const {
  Gate g = *this;
  if (kind == GateKind::Coin) g.angles = angles.adjoint();
  return g;
}

namespace {

void validate_gate(const Gate& g, int wires) {
  const auto check_wire = [wires](int w) {
    if (w < 0 || w >= wires) throw CircuitError("gate wire out of range");
  };
  const int targets = g.kind == GateKind::Swap ? 2 : 1;
  if (g.target_count != targets)
    throw CircuitError("wrong number of targets for gate kind");
  std::vector<int> seen;
  for (int t = 0; t < targets; ++t) {
    check_wire(g.target[t]);
    seen.push_back(g.target[t]);
  }
  for (const Control& c : g.controls) {
    check_wire(c.wire);
    seen.push_back(c.wire);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw CircuitError("gate wires must be distinct");
  if (g.kind == GateKind::Not && !g.controls.empty())
    throw CircuitError("NOT takes no controls; use MCX");
  if (g.kind == GateKind::Mcx && g.controls.empty())
    throw CircuitError("MCX needs at least one control");
}

}  // namespace

void Circuit::add(Gate g) {
  validate_gate(g, layout_.wire_count());
  gates_.push_back(std::move(g));
}

void Circuit::extend(const Circuit& other) {
  if (!(other.layout_ == layout_))
    throw CircuitError("cannot extend across different layouts");
  const std::size_t offset = gates_.size();
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  for (std::size_t b : other.bounds_) bounds_.push_back(offset + b);
}

void Circuit::close_segment() {
  if (gates_.empty()) return;
  if (!bounds_.empty() && bounds_.back() == gates_.size()) return;
  bounds_.push_back(gates_.size());
}

std::vector<std::pair<std::size_t, std::size_t>> Circuit::segments() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t first = 0;
  for (std::size_t b : bounds_) {
    out.emplace_back(first, b);
    first = b;
  }
  out.emplace_back(first, gates_.size());
  return out;
}

long long CostModel::gate_cost(const Gate& g) const {
  switch (g.kind) {
    case GateKind::Swap:
      return swap_cost;
    case GateKind::Coin:
      return 1;
    case GateKind::Not:
      return toffoli_depth(0);
    case GateKind::Mcx:
      return toffoli_depth(static_cast<int>(g.controls.size()));
  }
  throw CircuitError("unknown gate kind");
}

CostModel CostModel::atomic() {
  CostModel cm;
  cm.swap_cost = 3;
  cm.toffoli_depth = [](int) -> long long { return 1; };
  cm.toffoli_width = [](int) { return 0; };
  return cm;
}

CostModel CostModel::linear() {
  CostModel cm;
  cm.swap_cost = 3;
  cm.toffoli_depth = [](int x) -> long long {
    return x <= 1 ? 1 : 8LL * x - 6;
  };
  cm.toffoli_width = [](int) { return 0; };
  return cm;
}

namespace {

long long asap_depth(const std::vector<Gate>& gates, std::size_t first,
                     std::size_t last, const CostModel& cost, int wires) {
  std::vector<long long> free_at(wires, 0);
  long long depth = 0;
  for (std::size_t g = first; g < last; ++g) {
    const Gate& gate = gates[g];
    const long long c = cost.gate_cost(gate);
    if (c < 1) throw CircuitError("gate cost must be at least 1");
    long long start = 0;
    for (int t = 0; t < gate.target_count; ++t)
      start = std::max(start, free_at[gate.target[t]]);
    for (const Control& ctl : gate.controls)
      start = std::max(start, free_at[ctl.wire]);
    const long long end = start + c;
    for (int t = 0; t < gate.target_count; ++t) free_at[gate.target[t]] = end;
    for (const Control& ctl : gate.controls) free_at[ctl.wire] = end;
    depth = std::max(depth, end);
  }
  return depth;
}

}  // namespace

long long circuit_depth(const Circuit& c, const CostModel& cost,
                        DepthMode mode) {
  if (cost.toffoli_depth(0) != 1)
    throw CircuitError("cost model must give a plain NOT depth 1");
  const int wires = c.layout().wire_count();
  if (mode == DepthMode::Asap)
    return asap_depth(c.gates(), 0, c.gates().size(), cost, wires);
  long long total = 0;
  for (const auto& [first, last] : c.segments())
    total += asap_depth(c.gates(), first, last, cost, wires);
  return total;
}

int circuit_width(const Circuit& c, const CostModel& cost) {
  int extra = 0;
  for (const Gate& g : c.gates())
    if (g.kind == GateKind::Mcx)
      extra = std::max(extra,
                       cost.toffoli_width(static_cast<int>(g.controls.size())));
  return c.layout().wire_count() + extra;
}

std::size_t circuit_size(const Circuit& c) { return c.gates().size(); }

Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
  const int wires = c.layout().wire_count();
  if (wires > 12)
    throw SizeError("dense unitary limited to 12 wires");
  const Eigen::Index dim = Eigen::Index{1} << wires;
  Eigen::MatrixXcd u(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    StateVector col = basis_state(wires, static_cast<std::uint64_t>(k));
    for (const Gate& g : c.gates()) apply_gate(col, g);
    u.col(k) = col;
  }
  return u;
}

Circuit inverse(const Circuit& c) {
  const auto& gates = c.gates();
  const std::size_t total = gates.size();
  const auto& bounds = c.segment_bounds();
  std::vector<std::size_t> mirrored;
  for (auto it = bounds.rbegin(); it != bounds.rend(); ++it)
    if (*it > 0 && *it < total) mirrored.push_back(total - *it);

  Circuit out(c.layout());
  std::size_t added = 0;
  std::size_t next_bound = 0;
  for (auto it = gates.rbegin(); it != gates.rend(); ++it, ++added) {
    while (next_bound < mirrored.size() && mirrored[next_bound] == added) {
      out.close_segment();
      ++next_bound;
    }
    out.add(it->adjoint());
  }
  return out;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::Not:
      return "not";
    case GateKind::Coin:
      return "coin";
    case GateKind::Swap:
      return "swap";
    case GateKind::Mcx:
      return "mcx";
  }
  return "?";
}

}  // namespace

std::string to_text(const Circuit& c) {
  std::ostringstream os;
  os << "qwalk-circuit v1\n";
  os << "layout n=" << c.layout().n << " m=" << c.layout().m << "\n";
  const auto& bounds = c.segment_bounds();
  std::size_t next_bound = 0;
  const auto& gates = c.gates();
  for (std::size_t g = 0; g <= gates.size(); ++g) {
    while (next_bound < bounds.size() && bounds[next_bound] == g) {
      os << "seg\n";
      ++next_bound;
    }
    if (g == gates.size()) break;
    const Gate& gate = gates[g];
    os << kind_name(gate.kind);
    for (int t = 0; t < gate.target_count; ++t) os << ' ' << gate.target[t];
    for (const Control& ctl : gate.controls)
      os << ' ' << (ctl.positive ? '+' : '-') << ctl.wire;
    if (gate.kind == GateKind::Coin)
      os << ' ' << format_double(gate.angles.alpha) << ' '
         << format_double(gate.angles.theta) << ' '
         << format_double(gate.angles.phi) << ' '
         << format_double(gate.angles.lambda);
    os << '\n';
  }
  return os.str();
}

Circuit circuit_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "qwalk-circuit v1")
    throw CircuitError("bad circuit header");
  int n = -1, m = -1;
  if (!std::getline(is, line) ||
      std::sscanf(line.c_str(), "layout n=%d m=%d", &n, &m) != 2)
    throw CircuitError("bad layout line");
  Circuit c(WireLayout(n, m));
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line == "seg") {
      c.close_segment();
      continue;
    }
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    std::vector<std::string> toks;
    for (std::string tok; ls >> tok;) toks.push_back(tok);

    const auto parse_int = [](const std::string& tok) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw CircuitError("bad integer: " + tok);
        return v;
      } catch (const CircuitError&) {
        throw;
      } catch (const std::exception&) {
        throw CircuitError("bad integer: " + tok);
      }
    };
    const auto parse_double = [](const std::string& tok) {
      try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw CircuitError("bad number: " + tok);
        return v;
      } catch (const CircuitError&) {
        throw;
      } catch (const std::exception&) {
        throw CircuitError("bad number: " + tok);
      }
    };

    // Grammar: targets (bare ints), controls (+w / -w), then for coin lines
    // exactly four trailing angle parameters.
    std::size_t ntoks = toks.size();
    std::vector<double> params;
    if (kind == "coin") {
      if (ntoks < 5) throw CircuitError("malformed coin line");
      for (std::size_t p = ntoks - 4; p < ntoks; ++p)
        params.push_back(parse_double(toks[p]));
      ntoks -= 4;
    }
    const std::size_t want_targets = kind == "swap" ? 2 : 1;
    if (ntoks < want_targets) throw CircuitError("missing gate target");
    std::vector<int> targets;
    for (std::size_t t = 0; t < want_targets; ++t)
      targets.push_back(parse_int(toks[t]));
    std::vector<Control> controls;
    for (std::size_t t = want_targets; t < ntoks; ++t) {
      if (toks[t][0] != '+' && toks[t][0] != '-')
        throw CircuitError("malformed control token: " + toks[t]);
      controls.push_back({parse_int(toks[t].substr(1)), toks[t][0] == '+'});
    }

    if (kind == "not") {
      if (!controls.empty()) throw CircuitError("malformed not line");
      c.add(Gate::x(targets[0]));
    } else if (kind == "mcx") {
      c.add(Gate::mcx(targets[0], std::move(controls)));
    } else if (kind == "swap") {
      c.add(Gate::swap(targets[0], targets[1], std::move(controls)));
    } else if (kind == "coin") {
      c.add(Gate::coin(targets[0],
                       {params[0], params[1], params[2], params[3]},
                       std::move(controls)));
    } else {
      throw CircuitError("unknown gate kind: " + kind);
    }
  }
  return c;
}

}  // namespace qwalk
