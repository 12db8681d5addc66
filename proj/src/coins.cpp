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

#include "qwalk/coins.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qwalk/rng.hpp"

namespace qwalk {

CoinTable identity_coins(int n) {
  if (n < 0) throw CircuitError("coin table needs n >= 0");
  CoinTable t;
  t.n = n;
  t.angles.assign(std::size_t{1} << n, CoinAngles{});
  return t;
}

CoinTable random_coin_table(int n, std::uint64_t seed) {
  CoinTable t = identity_coins(n);
  const double pi = std::acos(-1.0);
  Xoshiro256 rng(seed);
  for (CoinAngles& a : t.angles) {
    a.alpha = rng.next_double(0.0, pi);
    a.theta = rng.next_double(0.0, pi);
    a.phi = rng.next_double(-pi, pi);
    a.lambda = rng.next_double(-pi, pi);
  }
  return t;
}

std::string coin_table_to_json(const CoinTable& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CoinAngles& a : t.angles) {
    nlohmann::ordered_json row = nlohmann::ordered_json::object();
    row["alpha"] = a.alpha;
    row["theta"] = a.theta;
    row["phi"] = a.phi;
    row["lambda"] = a.lambda;
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

CoinTable coin_table_from_json(const std::string& text) {
  const auto arr = nlohmann::json::parse(text);
  if (!arr.is_array() || arr.empty())
    throw CircuitError("coin table must be a non-empty JSON array");
  const std::size_t rows = arr.size();
  if ((rows & (rows - 1)) != 0)
    throw CircuitError("coin table length must be a power of two");
  CoinTable t;
  t.n = 0;
  while ((std::size_t{1} << t.n) < rows) ++t.n;
  t.angles.reserve(rows);
  for (const auto& row : arr) {
    if (!row.is_object() || !row.contains("alpha") || !row.contains("theta") ||
        !row.contains("phi") || !row.contains("lambda"))
      throw CircuitError(
          "coin table rows need alpha, theta, phi and lambda keys");
    t.angles.push_back({row["alpha"].get<double>(), row["theta"].get<double>(),
                        row["phi"].get<double>(),
                        row["lambda"].get<double>()});
  }
  return t;
}

CoinTable load_coin_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CircuitError("cannot open coin table file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return coin_table_from_json(buf.str());
}

void save_coin_table(const CoinTable& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw CircuitError("cannot write coin table file: " + path);
  out << coin_table_to_json(t);
}

}  // namespace qwalk
