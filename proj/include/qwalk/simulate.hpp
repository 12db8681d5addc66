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

#include <complex>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/circuit.hpp"
#include "qwalk/coins.hpp"

namespace qwalk {

using Complex = std::complex<double>;
using StateVector = Eigen::VectorXcd;

/// Hard cap on dense simulation size (2^26 amplitudes = 1 GiB).
inline constexpr int kMaxDenseWires = 26;

/// The one-qubit unitary parametrised by CoinAngles.
Eigen::Matrix2cd coin_unitary(const CoinAngles& a);
Eigen::Matrix2cd coin_unitary(double alpha, double theta, double phi,
                              double lambda);

/// |index> over the given number of wires.
StateVector basis_state(int wires, std::uint64_t index);

/// Number of wires of a state vector (its length must be a power of two).
int state_wires(const StateVector& v);

/// Applies one gate in place.  Little-endian: wire w is bit 2^w of the
/// amplitude index.
void apply_gate(StateVector& state, const Gate& g);

/// Applies all gates in order and checks that the norm stayed at 1 within
/// 1e-10.  The state length must be 2^wire_count of the circuit layout.
void apply_circuit(StateVector& state, const Circuit& c);

/// Image of a basis state without materialising the dense vector: the state
/// is kept as a sparse index -> amplitude map.  Intended for circuits whose
/// paths keep a tiny support (coin circuits stay on two basis indices).
/// Throws SizeError if the support exceeds `max_support`.
std::unordered_map<std::uint64_t, Complex> apply_circuit_to_basis(
    const Circuit& c, std::uint64_t index, std::size_t max_support = 4096);

/// Probabilities of the walker position: squared magnitudes summed over all
/// non-position wires.
struct Distribution {
  int n = 0;                       // 2^n positions
  Eigen::VectorXd probabilities;   // length 2^n
};

Distribution position_distribution(const StateVector& state,
                                   const WireLayout& layout);

/// Counted outcomes of repeated sampling from a Distribution.
struct Histogram {
  int n = 0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> counts;  // length 2^n
};

/// Draws `shots` positions by inverse-CDF sampling with a seeded xoshiro
/// generator.  Deterministic for a fixed (distribution, shots, seed).
Histogram sample(const Distribution& dist, std::uint64_t shots,
                 std::uint64_t seed);

/// Total variation distance between a histogram's frequencies and a
/// distribution, 0.5 * sum |count/shots - p|.
double total_variation(const Histogram& h, const Distribution& d);

// -- reference walk operators -------------------------------------------

/// Block-diagonal coin step on n+1 wires: position k selects its own coin.
/// Index convention: state index = k + 2^n * coin_bit.
Eigen::MatrixXcd coin_operator_matrix(const CoinTable& coins);

/// Coin-conditioned cyclic shift on n+1 wires: coin 0 moves k -> k-1 mod 2^n,
/// coin 1 moves k -> k+1 mod 2^n.
Eigen::MatrixXcd shift_matrix(int n);

/// Walk evolution computed directly from the definition (structured coin
/// mixing and index rotation per step, no circuits).  `initial` has length
/// 2^{n+1}; returns the state after `steps` steps.
StateVector direct_walk_oracle(const CoinTable& coins, int steps,
                               StateVector initial);

// -- export ---------------------------------------------------------------

/// {"position": value} JSON object, positions in increasing order.
std::string distribution_to_json(const Distribution& d);
std::string histogram_to_json(const Histogram& h);
/// position,value lines with a header row.
std::string distribution_to_csv(const Distribution& d);
std::string histogram_to_csv(const Histogram& h);

}  // namespace qwalk
