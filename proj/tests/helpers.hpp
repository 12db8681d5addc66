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

#include <algorithm>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/circuit.hpp"
#include "qwalk/rng.hpp"

namespace qwalk::testing {

inline std::string data_file(const std::string& name) {
  return std::string(QWALK_DATA_DIR) + "/" + name;
}

inline double max_abs_diff(const Eigen::MatrixXcd& a,
                           const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Frobenius distance after aligning the global phase of `a` to `b`.
inline double phase_aligned_distance(const Eigen::MatrixXcd& a,
                                     const Eigen::MatrixXcd& b) {
  const std::complex<double> overlap = (a.adjoint() * b).trace();
  const std::complex<double> phase =
      std::abs(overlap) > 0.0 ? overlap / std::abs(overlap)
                              : std::complex<double>(1.0, 0.0);
  return (b - phase * a).norm();
}

/// Seeded random circuit over `wires` wires, mixing all gate kinds and
/// control polarities.  With `compilable` set, coin controls stay single and
/// positive (the only controlled-coin shape the basis compiler accepts).
inline Circuit random_circuit(const WireLayout& layout, int gates,
                              std::uint64_t seed, bool compilable = false) {
  const int wires = layout.wire_count();
  Xoshiro256 rng(seed);
  const auto pick_wire = [&](std::vector<int>& taken) {
    int w;
    do {
      w = static_cast<int>(rng.next() % wires);
    } while (std::find(taken.begin(), taken.end(), w) != taken.end());
    taken.push_back(w);
    return w;
  };
  Circuit c(layout);
  for (int g = 0; g < gates; ++g) {
    if (g > 0 && rng.next() % 5 == 0) c.close_segment();
    std::vector<int> taken;
    const int kind = static_cast<int>(rng.next() % 4);
    const auto random_controls = [&](int count) {
      std::vector<Control> ctl;
      for (int k = 0; k < count; ++k)
        ctl.push_back({pick_wire(taken), rng.next() % 2 == 0});
      return ctl;
    };
    switch (kind) {
      case 0:
        c.add(Gate::x(pick_wire(taken)));
        break;
      case 1: {
        const int t = pick_wire(taken);
        const int max_controls = std::min(3, wires - 1);
        c.add(Gate::mcx(t, random_controls(
                               1 + static_cast<int>(rng.next() % max_controls))));
        break;
      }
      case 2: {
        const int t = pick_wire(taken);
        const CoinAngles a{rng.next_double(0.0, 3.0), rng.next_double(0.0, 3.0),
                           rng.next_double(-3.0, 3.0),
                           rng.next_double(-3.0, 3.0)};
        std::vector<Control> ctl =
            random_controls(static_cast<int>(rng.next() % 2));
        if (compilable)
          for (Control& one : ctl) one.positive = true;
        c.add(Gate::coin(t, a, std::move(ctl)));
        break;
      }
      default: {
        const int a = pick_wire(taken);
        const int b = pick_wire(taken);
        c.add(Gate::swap(a, b,
                         random_controls(static_cast<int>(rng.next() % 2))));
        break;
      }
    }
  }
  return c;
}

}  // namespace qwalk::testing
