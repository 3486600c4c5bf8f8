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

#include "cove/abcd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cove/error.hpp"

namespace cove {
namespace {

void validate_law(const PowerLaw& law, const char* name) {
  if (law.min < 1 || law.min > law.max) {
    throw ParameterError(std::string(name) + " law needs 1 <= min <= max");
  }
  if (!(law.exponent > 1.0)) {
    throw ParameterError(std::string(name) + " law exponent must be > 1");
  }
}

std::vector<double> cumulative(const PowerLaw& law) {
  std::vector<double> cdf = powerlaw_pmf(law);
  std::partial_sum(cdf.begin(), cdf.end(), cdf.begin());
  cdf.back() = 1.0;
  return cdf;
}

long draw(const PowerLaw& law, const std::vector<double>& cdf, Rng& rng) {
  const double u = uniform01(rng);
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) --it;
  return law.min + static_cast<long>(it - cdf.begin());
}

std::vector<long> community_sizes(const AbcdParams& p, Rng& rng) {
  const auto cdf = cumulative(p.community);
  const long n = static_cast<long>(p.n);
  std::vector<long> sizes;
  long sum = 0;
  // Draws that would overshoot n are redrawn until the remainder is too
  // small for any community.
  while (n - sum >= p.community.min) {
    const long s = draw(p.community, cdf, rng);
    if (sum + s > n) continue;
    sizes.push_back(s);
    sum += s;
  }
  long rest = n - sum;
  // Spread the remainder over communities that still have room.
  for (std::size_t i = sizes.size(); rest > 0 && i-- > 0;) {
    const long room = p.community.max - sizes[i];
    const long add = std::min(room, rest);
    sizes[i] += add;
    rest -= add;
  }
  if (rest > 0) {
    throw DataError("cannot split " + std::to_string(p.n) +
                    " nodes into communities within [" +
                    std::to_string(p.community.min) + ", " +
                    std::to_string(p.community.max) + "]");
  }
  return sizes;
}

// Uniform matching of a stub multiset; pairs are appended to `out`.
void configuration_model(std::vector<NodeId> stubs, Rng& rng,
                         std::vector<std::pair<NodeId, NodeId>>& out) {
  shuffle(stubs.begin(), stubs.end(), rng);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    out.emplace_back(stubs[i], stubs[i + 1]);
  }
}

// Adds one stub to the highest-degree node of the pool (lowest id on ties)
// when the stub count is odd.
void fix_parity(std::span<const NodeId> pool, std::span<const long> degree,
                std::vector<NodeId>& stubs) {
  if (stubs.size() % 2 == 0 || pool.empty()) return;
  NodeId best = pool.front();
  for (NodeId v : pool) {
    if (degree[v] > degree[best] || (degree[v] == degree[best] && v < best)) {
      best = v;
    }
  }
  stubs.push_back(best);
}

}  // namespace

std::vector<double> powerlaw_pmf(const PowerLaw& law) {
  validate_law(law, "power");
  std::vector<double> pmf;
  pmf.reserve(static_cast<std::size_t>(law.max - law.min + 1));
  double total = 0.0;
  for (long k = law.min; k <= law.max; ++k) {
    pmf.push_back(std::pow(static_cast<double>(k), -law.exponent));
    total += pmf.back();
  }
  for (double& p : pmf) p /= total;
  return pmf;
}

std::vector<long> sample_truncated_powerlaw(const PowerLaw& law,
                                            std::size_t count, Rng& rng) {
  const auto cdf = cumulative(law);
  std::vector<long> out(count);
  for (auto& x : out) x = draw(law, cdf, rng);
  return out;
}

void AbcdParams::validate() const {
  if (!(xi >= 0.0 && xi <= 1.0)) throw ParameterError("xi must lie in [0, 1]");
  validate_law(degree, "degree");
  validate_law(community, "community size");
  if (n < static_cast<std::size_t>(community.min)) {
    throw ParameterError("n = " + std::to_string(n) +
                         " is smaller than the minimum community size " +
                         std::to_string(community.min));
  }
}

namespace {

constexpr int kAssignmentAttempts = 50;

// Samples degrees (capped below the largest community size) and places every
// node in a community larger than its internal degree. Most constrained
// nodes go first; each takes a uniformly random free slot among the
// communities it fits. Returns false with a reason when the greedy pass
// gets stuck.
bool assign_communities(const AbcdParams& params, const std::vector<long>& sizes,
                        Rng& rng, AbcdGraph& out, std::string& failure) {
  const std::size_t n = params.n;
  const long largest = *std::max_element(sizes.begin(), sizes.end());
  PowerLaw degree = params.degree;
  degree.max = std::min(degree.max, largest - 1);
  if (degree.max < degree.min) {
    failure = "largest community (" + std::to_string(largest) +
              " nodes) cannot hold a node of minimum degree " +
              std::to_string(params.degree.min);
    return false;
  }
  out.target_degree = sample_truncated_powerlaw(degree, n, rng);
  out.internal_degree.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    out.internal_degree[v] = static_cast<long>(std::floor(
        (1.0 - params.xi) * static_cast<double>(out.target_degree[v]) + 0.5));
  }

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  shuffle(order.begin(), order.end(), rng);
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return out.internal_degree[a] > out.internal_degree[b];
  });
  std::vector<std::size_t> by_size(sizes.size());
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });
  std::vector<long> free_slots(sizes.begin(), sizes.end());
  out.community_of.assign(n, 0);
  for (NodeId v : order) {
    const long need = out.internal_degree[v];
    long eligible_free = 0;
    for (std::size_t c : by_size) {
      if (sizes[c] <= need) break;
      eligible_free += free_slots[c];
    }
    if (eligible_free == 0) {
      failure = "no community has room for a node with internal degree " +
                std::to_string(need);
      return false;
    }
    long pick = static_cast<long>(
        uniform_below(rng, static_cast<std::uint64_t>(eligible_free)));
    for (std::size_t c : by_size) {
      if (pick < free_slots[c]) {
        out.community_of[v] = static_cast<NodeId>(c);
        --free_slots[c];
        break;
      }
      pick -= free_slots[c];
    }
  }
  return true;
}

}  // namespace

AbcdGraph generate_abcd(const AbcdParams& params) {
  params.validate();
  Rng rng = stream_for(params.seed, 0xabcdULL);
  const std::size_t n = params.n;

  AbcdGraph out;
  out.params = params;
  std::vector<long> sizes;
  std::string failure;
  for (int attempt = 0; attempt < kAssignmentAttempts; ++attempt) {
    sizes = community_sizes(params, rng);
    if (assign_communities(params, sizes, rng, out, failure)) break;
    sizes.clear();
  }
  if (sizes.empty()) {
    throw DataError(failure + " after " + std::to_string(kAssignmentAttempts) +
                    " attempts");
  }

  std::vector<std::vector<NodeId>> members(sizes.size());
  for (NodeId v = 0; v < n; ++v) members[out.community_of[v]].push_back(v);

  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (const auto& pool : members) {
    std::vector<NodeId> stubs;
    for (NodeId v : pool) stubs.insert(stubs.end(), out.internal_degree[v], v);
    fix_parity(pool, out.internal_degree, stubs);
    configuration_model(std::move(stubs), rng, pairs);
  }
  std::vector<long> background(n);
  std::vector<NodeId> everyone(n);
  std::vector<NodeId> stubs;
  for (NodeId v = 0; v < n; ++v) {
    background[v] = out.target_degree[v] - out.internal_degree[v];
    everyone[v] = v;
    stubs.insert(stubs.end(), background[v], v);
  }
  fix_parity(everyone, background, stubs);
  configuration_model(std::move(stubs), rng, pairs);

  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u == v) continue;
    edges.push_back({std::min(u, v), std::max(u, v), 1.0});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const Edge& a, const Edge& b) {
                            return a.u == b.u && a.v == b.v;
                          }),
              edges.end());
  out.graph = Graph::from_edges(n, edges);

  std::vector<long long> labels(out.community_of.begin(), out.community_of.end());
  out.ground_truth = Clustering::from_labels(labels);
  return out;
}

double inter_community_edge_fraction(const Graph& g,
                                     std::span<const NodeId> community_of) {
  if (g.num_edges() == 0) return 0.0;
  std::size_t inter = 0;
  for (const Edge& e : g.edges()) {
    if (community_of[e.u] != community_of[e.v]) ++inter;
  }
  return static_cast<double>(inter) / static_cast<double>(g.num_edges());
}

}  // namespace cove
