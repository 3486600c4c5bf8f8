// Copyright 2026 The COVE Authors
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
#include <span>
#include <vector>

#include "cove/clustering.hpp"
#include "cove/graph.hpp"
#include "cove/random.hpp"

namespace cove {

// P(k) proportional to k^-exponent on the integers [min, max].
struct PowerLaw {
  long min = 1;
  long max = 1;
  double exponent = 2.0;
};

std::vector<long> sample_truncated_powerlaw(const PowerLaw& law,
                                            std::size_t count, Rng& rng);

// Probability mass of each k in [min, max].
std::vector<double> powerlaw_pmf(const PowerLaw& law);

struct AbcdParams {
  std::size_t n = 1000;
  double xi = 0.2;
  PowerLaw degree{3, 70, 2.5};
  PowerLaw community{15, 700, 1.5};
  std::uint64_t seed = 0;

  // Throws ParameterError unless 0 <= xi <= 1, mins >= 1, min <= max,
  // exponents > 1 and n >= community.min.
  void validate() const;
};

struct AbcdGraph {
  Graph graph;
  Clustering ground_truth;            // partition, no outliers
  std::vector<NodeId> community_of;   // community index per node
  std::vector<long> target_degree;    // sampled degree per node
  std::vector<long> internal_degree;  // round((1 - xi) * degree)
  AbcdParams params;
};

// Simplified ABCD generator: community sizes and degrees from truncated
// power laws, nodes placed in communities larger than their internal degree,
// one configuration-model pass per community plus one over all background
// stubs, then multi-edges collapsed and self-loops dropped. Deterministic in
// params.seed.
AbcdGraph generate_abcd(const AbcdParams& params);

// Fraction of edges whose endpoints lie in different communities.
double inter_community_edge_fraction(const Graph& g,
                                     std::span<const NodeId> community_of);

}  // namespace cove
