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

#include "qwalk/simulate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qwalk/rng.hpp"

namespace qwalk {

Eigen::Matrix2cd coin_unitary(const CoinAngles& a) {
  return coin_unitary(a.alpha, a.theta, a.phi, a.lambda);
}

Eigen::Matrix2cd coin_unitary(double alpha, double theta, double phi,
                              double lambda) {
  const Complex i(0.0, 1.0);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Eigen::Matrix2cd u;
  u << c, -std::exp(i * lambda) * s,
      std::exp(i * phi) * s, std::exp(i * (phi + lambda)) * c;
  return std::exp(i * alpha) * u;
}

StateVector basis_state(int wires, std::uint64_t index) {
  if (wires < 0 || wires > kMaxDenseWires)
    throw SizeError("dense state limited to " +
                    std::to_string(kMaxDenseWires) + " wires");
  const Eigen::Index dim = Eigen::Index{1} << wires;
  if (index >= static_cast<std::uint64_t>(dim))
    throw CircuitError("basis index out of range");
  StateVector v = StateVector::Zero(dim);
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return v;
}

int state_wires(const StateVector& v) {
  const auto size = static_cast<std::uint64_t>(v.size());
  if (size == 0 || (size & (size - 1)) != 0)
    throw CircuitError("state length must be a power of two");
  return std::countr_zero(size);
}

namespace {

struct KernelMasks {
  std::uint64_t pos = 0;          // control wires that must read 1
  std::uint64_t neg = 0;          // control wires that must read 0
  std::vector<int> free_wires;    // everything not fixed by the gate
};

KernelMasks gate_masks(const Gate& g, int wires) {
  KernelMasks km;
  std::uint64_t fixed = 0;
  for (int t = 0; t < g.target_count; ++t) fixed |= 1ull << g.target[t];
  for (const Control& c : g.controls) {
    const std::uint64_t bit = 1ull << c.wire;
    fixed |= bit;
    (c.positive ? km.pos : km.neg) |= bit;
  }
  km.free_wires.reserve(wires - g.target_count -
                        static_cast<int>(g.controls.size()));
  for (int w = 0; w < wires; ++w)
    if (!(fixed >> w & 1)) km.free_wires.push_back(w);
  return km;
}

inline std::uint64_t scatter(std::uint64_t packed,
                             const std::vector<int>& free_wires) {
  std::uint64_t idx = 0;
  for (std::size_t b = 0; b < free_wires.size(); ++b)
    if (packed >> b & 1) idx |= 1ull << free_wires[b];
  return idx;
}

}  // namespace

void apply_gate(StateVector& state, const Gate& g) {
  const int wires = state_wires(state);
  const KernelMasks km = gate_masks(g, wires);
  const std::uint64_t points = 1ull << km.free_wires.size();
  Complex* amp = state.data();

  switch (g.kind) {
    case GateKind::Not:
    case GateKind::Mcx: {
      const std::uint64_t tbit = 1ull << g.target[0];
      for (std::uint64_t p = 0; p < points; ++p) {
        const std::uint64_t base = scatter(p, km.free_wires) | km.pos;
        std::swap(amp[base], amp[base | tbit]);
      }
      break;
    }
    case GateKind::Coin: {
      const Eigen::Matrix2cd u = coin_unitary(g.angles);
      const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
      const std::uint64_t tbit = 1ull << g.target[0];
      for (std::uint64_t p = 0; p < points; ++p) {
        const std::uint64_t base = scatter(p, km.free_wires) | km.pos;
        const Complex a0 = amp[base];
        const Complex a1 = amp[base | tbit];
        amp[base] = u00 * a0 + u01 * a1;
        amp[base | tbit] = u10 * a0 + u11 * a1;
      }
      break;
    }
    case GateKind::Swap: {
      const std::uint64_t abit = 1ull << g.target[0];
      const std::uint64_t bbit = 1ull << g.target[1];
      for (std::uint64_t p = 0; p < points; ++p) {
        const std::uint64_t base = scatter(p, km.free_wires) | km.pos;
        std::swap(amp[base | abit], amp[base | bbit]);
      }
      break;
    }
  }
}

void apply_circuit(StateVector& state, const Circuit& c) {
  const int wires = state_wires(state);
  if (wires != c.layout().wire_count())
    throw CircuitError("state size does not match circuit layout");
  for (const Gate& g : c.gates()) apply_gate(state, g);
  const double norm2 = state.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-10)
    throw std::runtime_error("state norm drifted during simulation");
}

std::unordered_map<std::uint64_t, Complex> apply_circuit_to_basis(
    const Circuit& c, std::uint64_t index, std::size_t max_support) {
  const int wires = c.layout().wire_count();
  if (wires >= 64) throw SizeError("basis-path evaluation limited to 63 wires");
  if (index >= (1ull << wires)) throw CircuitError("basis index out of range");

  using Map = std::unordered_map<std::uint64_t, Complex>;
  Map cur;
  cur.emplace(index, Complex(1.0, 0.0));

  for (const Gate& g : c.gates()) {
    std::uint64_t pos = 0, neg = 0;
    for (const Control& ctl : g.controls)
      (ctl.positive ? pos : neg) |= 1ull << ctl.wire;
    const auto satisfied = [pos, neg](std::uint64_t k) {
      return (k & pos) == pos && (k & neg) == 0;
    };

    Map next;
    next.reserve(cur.size() * 2);
    switch (g.kind) {
      case GateKind::Not:
      case GateKind::Mcx: {
        const std::uint64_t tbit = 1ull << g.target[0];
        for (const auto& [k, a] : cur)
          next[satisfied(k) ? k ^ tbit : k] += a;
        break;
      }
      case GateKind::Swap: {
        const std::uint64_t abit = 1ull << g.target[0];
        const std::uint64_t bbit = 1ull << g.target[1];
        for (const auto& [k, a] : cur) {
          std::uint64_t nk = k;
          if (satisfied(k) && ((k & abit) != 0) != ((k & bbit) != 0))
            nk = k ^ (abit | bbit);
          next[nk] += a;
        }
        break;
      }
      case GateKind::Coin: {
        const Eigen::Matrix2cd u = coin_unitary(g.angles);
        const std::uint64_t tbit = 1ull << g.target[0];
        for (const auto& [k, a] : cur) {
          if (!satisfied(k)) {
            next[k] += a;
            continue;
          }
          const int row = (k & tbit) ? 1 : 0;
          const Complex to0 = u(0, row) * a;
          const Complex to1 = u(1, row) * a;
          if (to0 != Complex(0.0, 0.0)) next[k & ~tbit] += to0;
          if (to1 != Complex(0.0, 0.0)) next[k | tbit] += to1;
        }
        break;
      }
    }
    if (next.size() > max_support)
      throw SizeError("basis-path support exceeded the configured cap");
    cur = std::move(next);
  }
  return cur;
}

Distribution position_distribution(const StateVector& state,
                                   const WireLayout& layout) {
  const int wires = state_wires(state);
  if (wires != layout.wire_count())
    throw CircuitError("state size does not match layout");
  Distribution d;
  d.n = layout.n;
  const std::uint64_t positions = 1ull << layout.n;
  d.probabilities = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(positions));
  const std::uint64_t size = 1ull << wires;
  for (std::uint64_t idx = 0; idx < size; ++idx)
    d.probabilities[static_cast<Eigen::Index>(idx & (positions - 1))] +=
        std::norm(state[static_cast<Eigen::Index>(idx)]);
  return d;
}

Histogram sample(const Distribution& dist, std::uint64_t shots,
                 std::uint64_t seed) {
  const Eigen::Index outcomes = dist.probabilities.size();
  Histogram h;
  h.n = dist.n;
  h.shots = shots;
  h.seed = seed;
  h.counts.assign(static_cast<std::size_t>(outcomes), 0);

  std::vector<double> cdf(static_cast<std::size_t>(outcomes));
  double acc = 0.0;
  for (Eigen::Index k = 0; k < outcomes; ++k) {
    acc += dist.probabilities[k];
    cdf[static_cast<std::size_t>(k)] = acc;
  }

  Xoshiro256 rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.next_double() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    ++h.counts[static_cast<std::size_t>(it - cdf.begin())];
  }
  return h;
}

double total_variation(const Histogram& h, const Distribution& d) {
  if (static_cast<Eigen::Index>(h.counts.size()) != d.probabilities.size())
    throw CircuitError("histogram and distribution sizes differ");
  if (h.shots == 0) throw CircuitError("total variation needs shots > 0");
  double tv = 0.0;
  for (Eigen::Index k = 0; k < d.probabilities.size(); ++k)
    tv += std::abs(static_cast<double>(h.counts[static_cast<std::size_t>(k)]) /
                       static_cast<double>(h.shots) -
                   d.probabilities[k]);
  return 0.5 * tv;
}

Eigen::MatrixXcd coin_operator_matrix(const CoinTable& coins) {
  const int n = coins.n;
  if (static_cast<int>(coins.angles.size()) != (1 << n))
    throw CircuitError("coin table must have 2^n entries");
  const Eigen::Index half = Eigen::Index{1} << n;
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(2 * half, 2 * half);
  for (Eigen::Index k = 0; k < half; ++k) {
    const Eigen::Matrix2cd c =
        coin_unitary(coins.angles[static_cast<std::size_t>(k)]);
    op(k, k) = c(0, 0);
    op(k, k + half) = c(0, 1);
    op(k + half, k) = c(1, 0);
    op(k + half, k + half) = c(1, 1);
  }
  return op;
}

Eigen::MatrixXcd shift_matrix(int n) {
  const Eigen::Index half = Eigen::Index{1} << n;
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(2 * half, 2 * half);
  for (Eigen::Index k = 0; k < half; ++k) {
    op((k - 1 + half) % half, k) = 1.0;       // coin 0 steps left
    op(half + (k + 1) % half, half + k) = 1.0;  // coin 1 steps right
  }
  return op;
}

StateVector direct_walk_oracle(const CoinTable& coins, int steps,
                               StateVector initial) {
  const int n = coins.n;
  const Eigen::Index half = Eigen::Index{1} << n;
  if (initial.size() != 2 * half)
    throw CircuitError("walk state must have 2^{n+1} amplitudes");
  if (steps < 0) throw CircuitError("steps must be non-negative");

  std::vector<Eigen::Matrix2cd> cs(static_cast<std::size_t>(half));
  for (Eigen::Index k = 0; k < half; ++k)
    cs[static_cast<std::size_t>(k)] =
        coin_unitary(coins.angles[static_cast<std::size_t>(k)]);

  StateVector v = std::move(initial);
  StateVector shifted(2 * half);
  for (int s = 0; s < steps; ++s) {
    for (Eigen::Index k = 0; k < half; ++k) {
      const Eigen::Matrix2cd& c = cs[static_cast<std::size_t>(k)];
      const Complex a0 = v[k];
      const Complex a1 = v[k + half];
      v[k] = c(0, 0) * a0 + c(0, 1) * a1;
      v[k + half] = c(1, 0) * a0 + c(1, 1) * a1;
    }
    for (Eigen::Index k = 0; k < half; ++k) {
      shifted[(k - 1 + half) % half] = v[k];
      shifted[half + (k + 1) % half] = v[half + k];
    }
    v.swap(shifted);
  }
  return v;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string distribution_to_json(const Distribution& d) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (Eigen::Index k = 0; k < d.probabilities.size(); ++k)
    j[std::to_string(k)] = d.probabilities[k];
  return j.dump(2) + "\n";
}

std::string histogram_to_json(const Histogram& h) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < h.counts.size(); ++k)
    j[std::to_string(k)] = h.counts[k];
  return j.dump(2) + "\n";
}

std::string distribution_to_csv(const Distribution& d) {
  std::ostringstream os;
  os << "position,probability\n";
  for (Eigen::Index k = 0; k < d.probabilities.size(); ++k)
    os << k << ',' << format_double(d.probabilities[k]) << '\n';
  return os.str();
}

std::string histogram_to_csv(const Histogram& h) {
  std::ostringstream os;
  os << "position,count\n";
  for (std::size_t k = 0; k < h.counts.size(); ++k)
    os << k << ',' << h.counts[k] << '\n';
  return os.str();
}

}  // namespace qwalk
