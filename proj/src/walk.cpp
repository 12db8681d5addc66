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

#include "qwalk/walk.hpp"

namespace qwalk {

namespace {

void require_register(int n, int m) {
  if (n < 1) throw CircuitError("walk builders need at least one position wire");
  if (m < 0 || m > n) throw CircuitError("pack exponent must satisfy 0 <= m <= n");
}

void require_stage(int i, int n, int m) {
  require_register(n, m);
  if (i < 0 || i >= (1 << (n - m)))
    throw CircuitError("pack index out of range");
}

void require_coins(const CoinTable& coins, int n) {
  if (coins.n != n || static_cast<int>(coins.angles.size()) != (1 << n))
    throw CircuitError("coin table does not match the position register");
}

/// The swap tree moving the b'_0 mark to b'_{k mod 2^m}: level j routes
/// across a stride of 2^j, controlled on position bit j (the root swap) or
/// on its fan-out copies (the k >= 1 swaps, which run in the same layer).
Circuit routing_tree(int n, int m) {
  const WireLayout layout(n, m);
  Circuit c(layout);
  for (int j = 0; j < m; ++j) {
    c.add(Gate::swap(layout.ancilla_position(0), layout.ancilla_position(1 << j),
                     {{layout.position(j), true}}));
    const int base = copy_base_index(j);
    for (int k = 1; k < (1 << j); ++k)
      c.add(Gate::swap(layout.ancilla_position(k),
                       layout.ancilla_position(k + (1 << j)),
                       {{layout.coin(base + k - 1), true}}));
  }
  return c;
}

/// NOT gates of the stage selector under the cumulative flip schedule of the
/// optimized circuit: pack i flips position bit m + j exactly when i is a
/// multiple of 2^j, so the flips of consecutive packs telescope.
Circuit merged_stage_flips(int i, int n, int m) {
  const WireLayout layout(n, m);
  Circuit c(layout);
  for (int k = m; k < n; ++k)
    if (i % (1 << (k - m)) == 0) c.add(Gate::x(layout.position(k)));
  return c;
}

/// The selector NOT on b'_0: controlled on every upper position bit, or a
/// plain NOT when the pack covers the whole register.
Gate selector_not(const WireLayout& layout) {
  if (layout.m == layout.n)
    return Gate::x(layout.ancilla_position(0));
  std::vector<Control> controls;
  for (int k = layout.m; k < layout.n; ++k)
    controls.push_back({layout.position(k), true});
  return Gate::mcx(layout.ancilla_position(0), std::move(controls));
}

void append_shift_gates(Circuit& c, int n) {
  const WireLayout& layout = c.layout();
  const int s0 = layout.principal_coin();
  for (int pass = 0; pass < 2; ++pass) {
    const bool increment = pass == 1;
    for (int j = n - 1; j >= 0; --j) {
      std::vector<Control> controls{{s0, increment}};
      for (int t = 0; t < j; ++t)
        controls.push_back({layout.position(t), increment});
      c.add(Gate::mcx(layout.position(j), std::move(controls)));
    }
  }
}

}  // namespace

int copy_base_index(int k) {
  if (k < 0) throw CircuitError("copy_base_index needs k >= 0");
  if (k >= 62) throw SizeError("copy_base_index overflow");
  // l_0 = 1, l_k = l_{k-1} + 2^{k-1} - 1 telescopes to 2^k - k.
  return k == 0 ? 1 : static_cast<int>((std::int64_t{1} << k) - k);
}

Circuit build_copy_fanout(int n, int m) {
  require_register(n, m);
  const WireLayout layout(n, m);
  Circuit c(layout);
  for (int j = 0; j <= m - 2; ++j) {
    for (int k = j + 1; k <= m - 1; ++k) {
      const int base = copy_base_index(k);
      if (j == 0) {
        c.add(Gate::cx(layout.position(k), layout.coin(base)));
      } else {
        // double the copy block: one fresh copy from the source bit, the
        // rest duplicated from the copies of the previous levels
        c.add(Gate::cx(layout.position(k), layout.coin(base + (1 << j) - 1)));
        for (int l = 0; l <= (1 << j) - 2; ++l)
          c.add(Gate::cx(layout.coin(base + l), layout.coin(base + l + (1 << j))));
      }
    }
  }
  return c;
}

Circuit build_stage_toffoli(int i, int n, int m) {
  require_stage(i, n, m);
  const WireLayout layout(n, m);
  Circuit c(layout);
  for (int k = m; k < n; ++k)
    if (((i >> (k - m)) & 1) == 0) c.add(Gate::x(layout.position(k)));
  c.add(selector_not(layout));
  return c;
}

Circuit build_onehot_core(int i, int n, int m) {
  Circuit c = build_stage_toffoli(i, n, m);
  c.extend(routing_tree(n, m));
  return c;
}

Circuit build_position_encoder(int i, int n, int m) {
  require_stage(i, n, m);
  const Circuit fan = build_copy_fanout(n, m);
  Circuit c(WireLayout(n, m));
  c.extend(fan);
  c.close_segment();
  c.extend(build_onehot_core(i, n, m));
  c.close_segment();
  c.extend(inverse(fan));
  return c;
}

Circuit build_coin_fanout(int n, int m) {
  require_register(n, m);
  const WireLayout layout(n, m);
  Circuit c(layout);
  const int top = (1 << m) - 1;
  // copy tree: duplicate the one-hot mark so each routing level below has
  // its own control
  for (int j = 0; j <= m - 2; ++j)
    for (int k = 0; k <= (1 << (m - j - 1)) - 2; ++k)
      c.add(Gate::cx(layout.ancilla_position(top - (1 << j) - k * (1 << (j + 1))),
                     layout.ancilla_position(top - k * (1 << (j + 1)))));
  // routing: level j halves the stride, consuming one copy layer per level
  for (int j = 0; j <= m - 1; ++j) {
    for (int k = 0; k <= (1 << j) - 1; ++k) {
      const int a = k << (m - j);
      c.add(Gate::swap(layout.coin(a), layout.coin(a + (1 << (m - j - 1))),
                       {{layout.ancilla_position(((k + 1) << (m - j)) - 1), true}}));
    }
    if (j <= m - 2)
      for (int l = 0; l <= (1 << (j + 1)) - 2; ++l)
        c.add(Gate::cx(
            layout.ancilla_position(top - (1 << (m - j - 2)) - l * (1 << (m - j - 1))),
            layout.ancilla_position(top - l * (1 << (m - j - 1)))));
  }
  return c;
}

Circuit build_coin_layer(int i, int n, int m, const CoinTable& coins) {
  require_stage(i, n, m);
  require_coins(coins, n);
  const WireLayout layout(n, m);
  Circuit c(layout);
  for (int k = 0; k < (1 << m); ++k)
    c.add(Gate::coin(layout.coin(k),
                     coins.angles[static_cast<std::size_t>(i) * (1 << m) + k],
                     {{layout.ancilla_position(k), true}}));
  return c;
}

namespace {

/// Assembles one pack out of its opening encoder, the coin sandwich and the
/// closing encoder, recording the segment boundaries the depth accounting
/// schedules against.
Circuit assemble_pack(const Circuit& opening, const Circuit& closing, int i,
                      int n, int m, const CoinTable& coins) {
  const Circuit fanout = build_coin_fanout(n, m);
  Circuit c(WireLayout(n, m));
  c.extend(opening);
  c.close_segment();
  c.extend(fanout);
  c.close_segment();
  c.extend(build_coin_layer(i, n, m, coins));
  c.close_segment();
  c.extend(inverse(fanout));
  c.close_segment();
  c.extend(closing);
  return c;
}

}  // namespace

Circuit build_pack(int i, int n, int m, const CoinTable& coins) {
  const Circuit encoder = build_position_encoder(i, n, m);
  return assemble_pack(encoder, inverse(encoder), i, n, m, coins);
}

Circuit build_coin_circuit(int n, int m, const CoinTable& coins) {
  require_register(n, m);
  require_coins(coins, n);
  Circuit c(WireLayout(n, m));
  for (int i = 0; i < (1 << (n - m)); ++i) {
    if (i > 0) c.close_segment();
    c.extend(build_pack(i, n, m, coins));
  }
  return c;
}

Circuit build_coin_circuit_optimized(int n, int m, const CoinTable& coins) {
  require_register(n, m);
  require_coins(coins, n);
  const WireLayout layout(n, m);
  const Circuit fan = build_copy_fanout(n, m);
  const Circuit fan_inv = inverse(fan);
  const Circuit tree = routing_tree(n, m);
  const Circuit tree_inv = inverse(tree);

  Circuit c(layout);
  for (int i = 0; i < (1 << (n - m)); ++i) {
    if (i > 0) c.close_segment();
    // opening encoder: merged flips, selector, routing tree
    Circuit opening(layout);
    opening.extend(fan);
    opening.close_segment();
    opening.extend(merged_stage_flips(i, n, m));
    opening.add(selector_not(layout));
    opening.extend(tree);
    opening.close_segment();
    opening.extend(fan_inv);
    // closing encoder: routing tree back, selector, and no flips at all
    Circuit closing(layout);
    closing.extend(fan);
    closing.close_segment();
    closing.extend(tree_inv);
    closing.add(selector_not(layout));
    closing.close_segment();
    closing.extend(fan_inv);
    c.extend(assemble_pack(opening, closing, i, n, m, coins));
  }
  return c;
}

Circuit build_shift_circuit(int n) {
  require_register(n, 0);
  Circuit c(WireLayout(n, 0));
  append_shift_gates(c, n);
  return c;
}

Circuit build_walk_step(const WalkSpec& spec) {
  Circuit c = spec.optimized
                  ? build_coin_circuit_optimized(spec.n, spec.m, spec.coins)
                  : build_coin_circuit(spec.n, spec.m, spec.coins);
  c.close_segment();
  append_shift_gates(c, spec.n);
  return c;
}

long long structural_depth(int n, int m, const CostModel& cost) {
  require_register(n, m);
  const long long eps = cost.toffoli_depth(n - m);
  const long long per_pack = 20LL * m + 2 * eps + (m == 0 ? 8 : 0) - 5;
  return (1LL << (n - m)) * per_pack - 2;
}

int structural_width(int n, int m, const CostModel& cost) {
  require_register(n, m);
  return n + (1 << (m + 1)) + cost.toffoli_width(n - m);
}

}  // namespace qwalk
