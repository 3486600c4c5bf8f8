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

#include "cove/cooccurrence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>

#include "cove/error.hpp"
#include "cove/parallel.hpp"

namespace cove {
namespace {

using PairCount = std::pair<std::uint64_t, std::uint64_t>;

// Merges two runs sorted by unique key, summing counts of equal keys.
std::vector<PairCount> merge_runs(const std::vector<PairCount>& a,
                                  const std::vector<PairCount>& b) {
  std::vector<PairCount> merged;
  merged.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
      merged.push_back(a[i++]);
    } else if (i >= a.size() || b[j].first < a[i].first) {
      merged.push_back(b[j++]);
    } else {
      merged.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return merged;
}

// Sorts `keys` and folds them into `acc`.
void flush_keys(std::vector<std::uint64_t>& keys, std::vector<PairCount>& acc) {
  if (keys.empty()) return;
  std::sort(keys.begin(), keys.end());
  std::vector<PairCount> run;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    run.emplace_back(keys[i], j - i);
    i = j;
  }
  keys.clear();
  acc = acc.empty() ? std::move(run) : merge_runs(acc, run);
}

constexpr std::size_t kFlushThreshold = std::size_t{1} << 22;

}  // namespace

std::string_view to_string(CooccurrenceKind kind) {
  switch (kind) {
    case CooccurrenceKind::kDiffusion:
      return "T";
    case CooccurrenceKind::kSymmetric:
      return "psi";
    case CooccurrenceKind::kNormalized:
      return "psi_hat";
    case CooccurrenceKind::kCounts:
      return "counts";
    case CooccurrenceKind::kSampled:
      return "psi_tilde";
  }
  return "T";
}

std::vector<double> resolve_window_kernel(std::size_t radius,
                                          std::span<const double> theta) {
  if (radius == 0) throw ParameterError("context radius must be >= 1");
  if (theta.empty()) return std::vector<double>(radius, 1.0);
  if (theta.size() != radius) {
    throw ParameterError("window kernel has " + std::to_string(theta.size()) +
                         " weights for radius " + std::to_string(radius));
  }
  bool any_positive = false;
  for (double t : theta) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
      throw ParameterError("window kernel weights must be finite and >= 0");
    }
    any_positive |= t > 0.0;
  }
  if (!any_positive) throw ParameterError("window kernel is all zero");
  return {theta.begin(), theta.end()};
}

CooccurrenceMatrix truncated_diffusion(const Graph& g, std::size_t radius,
                                       std::span<const double> theta,
                                       unsigned threads) {
  const auto kernel = resolve_window_kernel(radius, theta);
  const TransitionMatrix step = row_normalized_adjacency(g);
  CsrMatrix power = step;
  CsrMatrix sum = CsrMatrix(g.n()).add_scaled(0.0, step, kernel[0]);
  for (std::size_t i = 1; i < kernel.size(); ++i) {
    power = power.multiply(step, threads);
    if (kernel[i] != 0.0) sum = sum.add_scaled(1.0, power, kernel[i]);
  }
  return {std::move(sum), CooccurrenceKind::kDiffusion};
}

CooccurrenceMatrix symmetrize(const CooccurrenceMatrix& diffusion) {
  if (diffusion.kind != CooccurrenceKind::kDiffusion) {
    throw ParameterError("symmetrize expects a diffusion matrix T");
  }
  return {diffusion.matrix.add_scaled(1.0, diffusion.matrix.transpose(), 1.0),
          CooccurrenceKind::kSymmetric};
}

CooccurrenceMatrix exact_cove(const Graph& g, std::size_t radius,
                              std::span<const double> theta,
                              unsigned threads) {
  CooccurrenceMatrix psi =
      symmetrize(truncated_diffusion(g, radius, theta, threads));
  psi.matrix.normalize_rows(/*self_indicator=*/true);
  psi.kind = CooccurrenceKind::kNormalized;
  return psi;
}

CooccurrenceMatrix count_cooccurrences(const WalkCorpus& corpus,
                                       std::size_t radius, unsigned threads) {
  if (radius == 0) throw ParameterError("context radius must be >= 1");
  const std::size_t n = corpus.graph_n;
  const std::size_t num_walks = corpus.walks.size();
  if (threads == 0) threads = default_threads();
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(threads, num_walks));
  std::vector<std::vector<PairCount>> partial(workers);

  const std::size_t chunk = num_walks == 0 ? 0 : (num_walks + workers - 1) / workers;
  parallel_for_chunks(workers, static_cast<unsigned>(workers),
                      [&](std::size_t wb, std::size_t we) {
    std::vector<std::uint64_t> keys;
    for (std::size_t w = wb; w < we; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(num_walks, begin + chunk);
      for (std::size_t k = begin; k < end; ++k) {
        const Walk& walk = corpus.walks[k];
        for (std::size_t s = 0; s < walk.size(); ++s) {
          const std::size_t stop = std::min(walk.size(), s + radius + 1);
          for (std::size_t t = s + 1; t < stop; ++t) {
            const std::uint64_t u = walk[s], v = walk[t];
            if (u >= n || v >= n) {
              throw DataError("walk node id out of range for the corpus");
            }
            keys.push_back((u << 32) | v);
            keys.push_back((v << 32) | u);
          }
        }
        if (keys.size() >= kFlushThreshold) flush_keys(keys, partial[w]);
      }
      flush_keys(keys, partial[w]);
    }
  });

  std::vector<PairCount> total;
  for (auto& part : partial) {
    total = total.empty() ? std::move(part) : merge_runs(total, part);
  }

  std::vector<std::size_t> ptr(n + 1, 0);
  std::vector<NodeId> cols(total.size());
  std::vector<double> vals(total.size());
  for (std::size_t i = 0; i < total.size(); ++i) {
    const auto row = static_cast<std::size_t>(total[i].first >> 32);
    ++ptr[row + 1];
    cols[i] = static_cast<NodeId>(total[i].first & 0xffffffffULL);
    vals[i] = static_cast<double>(total[i].second);
  }
  for (std::size_t r = 0; r < n; ++r) ptr[r + 1] += ptr[r];
  return {CsrMatrix(n, std::move(ptr), std::move(cols), std::move(vals)),
          CooccurrenceKind::kCounts};
}

CooccurrenceMatrix sampled_cove(const CooccurrenceMatrix& counts) {
  if (counts.kind != CooccurrenceKind::kCounts) {
    throw ParameterError("sampled_cove expects a count matrix");
  }
  CooccurrenceMatrix out{counts.matrix, CooccurrenceKind::kSampled};
  out.matrix.normalize_rows(/*self_indicator=*/true);
  return out;
}

Embedding to_distribution_embedding(const CooccurrenceMatrix& m,
                                    const std::vector<std::string>& labels) {
  if (!m.is_distribution()) {
    throw ParameterError("expected a row-normalized co-occurrence matrix, got " +
                         std::string(to_string(m.kind)));
  }
  if (labels.size() != m.n()) {
    throw ParameterError("label count does not match matrix size");
  }
  Embedding e;
  e.kind = EmbeddingKind::kDistribution;
  e.labels = labels;
  const auto n = static_cast<Eigen::Index>(m.n());
  e.values = DenseMatrix::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    auto cs = m.matrix.row_cols(static_cast<std::size_t>(r));
    auto vs = m.matrix.row_values(static_cast<std::size_t>(r));
    for (std::size_t k = 0; k < cs.size(); ++k) e.values(r, cs[k]) = vs[k];
  }
  return e;
}

Embedding hellinger_transform(const CooccurrenceMatrix& m,
                              const std::vector<std::string>& labels) {
  return hellinger_transform(to_distribution_embedding(m, labels));
}

Embedding hellinger_transform(const Embedding& distribution) {
  if (distribution.kind != EmbeddingKind::kDistribution) {
    throw ParameterError("hellinger transform expects a distribution embedding");
  }
  Embedding e;
  e.kind = EmbeddingKind::kHellinger;
  e.labels = distribution.labels;
  e.values = (distribution.values.array().max(0.0) * 0.5).sqrt().matrix();
  return e;
}

CooccurrenceMatrix cove_matrix(const Graph& g, const CoveConfig& config,
                               unsigned threads) {
  if (config.exact) return exact_cove(g, config.radius, config.theta, threads);
  if (!config.theta.empty()) {
    throw ParameterError("a window kernel is only supported for exact COVE");
  }
  return sampled_cove(count_cooccurrences(build_corpus(g, config.walk, threads),
                                          config.radius, threads));
}

Embedding cove_hellinger_embedding(const Graph& g, const CoveConfig& config,
                                   unsigned threads) {
  return hellinger_transform(cove_matrix(g, config, threads), g.labels());
}

}  // namespace cove
