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

#include <cstdint>

#include "qwalk/circuit.hpp"
#include "qwalk/coins.hpp"

namespace qwalk {

// Builders for one step of a discrete-time quantum walk on a cycle of 2^n
// sites with a position-dependent coin.  The coin step runs as 2^{n-m}
// sequential packs; pack i applies the 2^m coins of positions
// [i*2^m, (i+1)*2^m) in parallel, trading circuit width for depth through
// the parameter m in [0, n].
//
// Pack anatomy (execution order):
//   encoder      marks, for every position in the pack, which ancillary
//                position wire b'_r (r = k mod 2^m) should fire, leaving b'
//                one-hot for positions inside the pack and zero otherwise
//   coin fan-out distributes the principal coin s_0 to the ancillary coin
//                wire s_r selected by the one-hot b' register
//   coin layer   the 2^m controlled coins, all disjoint, depth 1
//   fan-out^-1, encoder^-1 restore the ancillas.

/// First ancillary-coin wire index (as an s_* subscript) holding fan-out
/// copies of position bit k: l_0 = l_1 = 1, l_k = l_{k-1} + 2^{k-1} - 1.
int copy_base_index(int k);

/// Fan-out stage: copies position bit k onto ancillary coins
/// s_{l_k} .. s_{l_k + 2^k - 2} for k in [1, m-1], so every swap of the
/// encoder tree has a private control copy.  Empty for m <= 1.
Circuit build_copy_fanout(int n, int m);

/// Stage selector of pack i: flips every position bit b_k (k in [m, n-1])
/// whose stage bit (k - m) of i is 0, then applies a NOT on b'_0 controlled
/// on all of b_m .. b_{n-1}.  For m = n this degenerates to a plain NOT on
/// b'_0.  After it, b'_0 = 1 exactly for positions belonging to pack i.
Circuit build_stage_toffoli(int i, int n, int m);

/// Selector followed by the binary routing tree: level j swaps b'_r with
/// b'_{r + 2^j} controlled on (a copy of) position bit j, moving the mark
/// from b'_0 to b'_{k mod 2^m}.  Requires fan-out copies to be in place for
/// m >= 2.
Circuit build_onehot_core(int i, int n, int m);

/// Full ancillary-position encoder of pack i: fan-out, one-hot core,
/// fan-out inverse.  Leaves b' one-hot at k mod 2^m when position k lies in
/// pack i (with the stage flips still applied to b_m..), zero otherwise.
Circuit build_position_encoder(int i, int n, int m);

/// Ancillary-coin fan-out: first a CNOT tree copying the one-hot b' mark
/// down the register, then log-depth swap layers routing the principal coin
/// s_0 to the s_r selected by b' (interleaved with CNOTs consuming the
/// copies).  Self-contained per pack; empty for m = 0.
Circuit build_coin_fanout(int n, int m);

/// The 2^m controlled coins of pack i: coin of position i*2^m + k acts on
/// s_k, positively controlled on b'_k.  Scheduled depth 1.
Circuit build_coin_layer(int i, int n, int m, const CoinTable& coins);

/// One complete pack i (encoder, fan-out, coins, undo).  Segment boundaries
/// are recorded between the sub-stages.
Circuit build_pack(int i, int n, int m, const CoinTable& coins);

/// The position-dependent coin step: packs 0 .. 2^{n-m}-1 in order.
Circuit build_coin_circuit(int n, int m, const CoinTable& coins);

/// Variant that merges the stage bookkeeping of consecutive packs: pack i
/// flips b_k only when i is a multiple of 2^{k-m} (entering a fresh run),
/// and the closing encoder drops the flips entirely.  Ancillas are restored
/// after the last pack; position flips cancel telescopically across packs.
/// Same action as build_coin_circuit on states with ancillas at zero, with
/// strictly fewer NOT gates once n - m >= 2.
Circuit build_coin_circuit_optimized(int n, int m, const CoinTable& coins);

/// Coin-conditioned cyclic shift on the position register: a cascade of
/// multi-controlled NOTs decrementing the position when s_0 = 0, then a
/// mirrored cascade incrementing it when s_0 = 1.  Returned over the
/// (n, m = 0) layout; the gates only touch b_* and s_0.
Circuit build_shift_circuit(int n);

/// Everything for one walk step.
struct WalkSpec {
  int n = 1;
  int m = 0;
  CoinTable coins;
  bool optimized = false;
};

/// One full step: coin circuit followed by the shift.
Circuit build_walk_step(const WalkSpec& spec);

/// Closed-form scheduled depth of the coin circuit under `cost`:
///   2^{n-m} * (20m + 2*toffoli_depth(n-m) + 8*[m=0] - 5) - 2
/// (per-segment-sum mode; exact for any model with toffoli_depth(1) = 1).
long long structural_depth(int n, int m, const CostModel& cost);

/// Closed-form width n + 2^{m+1} + toffoli_width(n-m).
int structural_width(int n, int m, const CostModel& cost);

}  // namespace qwalk
