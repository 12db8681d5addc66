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
#include <string>
#include <vector>

#include "qwalk/circuit.hpp"

namespace qwalk {

/// Per-position coin table for a cycle of 2^n sites: entry k holds the
/// angles of the coin applied at position k.
struct CoinTable {
  int n = 0;
  std::vector<CoinAngles> angles;  // exactly 2^n entries

  bool operator==(const CoinTable&) const = default;
};

/// All-identity coins (alpha = theta = phi = lambda = 0).
CoinTable identity_coins(int n);

/// Seeded random table: alpha, theta uniform in [0, pi); phi, lambda uniform
/// in [-pi, pi).
CoinTable random_coin_table(int n, std::uint64_t seed);

/// JSON round-trip.  The text form is an array of 2^n objects with keys
/// "alpha", "theta", "phi", "lambda".
std::string coin_table_to_json(const CoinTable& t);
CoinTable coin_table_from_json(const std::string& text);
CoinTable load_coin_table(const std::string& path);
void save_coin_table(const CoinTable& t, const std::string& path);

}  // namespace qwalk
