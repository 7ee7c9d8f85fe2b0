// Copyright 2026 The qsot developers
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

#ifndef QSOT_RNG_HPP_
#define QSOT_RNG_HPP_

#include <cstdint>

namespace qsot {

/// Counter-based generator (64-bit SplitMix mixing of key + counter).
/// Deterministic given the seed and fully splittable: split(stream) derives
/// an independent child keyed on the stream id, so parallel callers can hand
/// each task its own generator without coordination.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal via Box-Muller (second value cached).
  double gaussian();

  /// Independent child generator for the given stream id. Children with
  /// distinct ids (or from distinct parents) produce independent sequences.
  Rng split(std::uint64_t stream) const;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Number of successes in `trials` Bernoulli(p) draws. Exact inversion for
/// small expected counts, transformed rejection (BTRS) for large ones.
/// Deterministic given the generator state. Throws on p outside [0, 1].
std::int64_t binomial(std::int64_t trials, double p, Rng& rng);

}  // namespace qsot

#endif  // QSOT_RNG_HPP_
