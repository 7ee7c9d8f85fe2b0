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

#ifndef QSOT_TOMOGRAPHY_HPP_
#define QSOT_TOMOGRAPHY_HPP_

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "qsot/interferometer.hpp"
#include "qsot/matrix.hpp"
#include "qsot/products.hpp"
#include "qsot/rng.hpp"

namespace qsot {

/// Weyl-Heisenberg shift-and-clock operators W_{p,q} = sum_k w^{pk}
/// |k+q mod d><k| with w = exp(2 pi i / d), listed with index p*d + q.
/// They form a unitary operator basis: Tr[W^dag W'] = d * delta.
std::vector<UnitaryMatrix> weyl_basis(Index d);

/// Exact interference oracle: intervention -> complex I. Linear in each
/// intervention operator by construction.
using ExactOracle = std::function<Complex(const Intervention&)>;

/// Oracle backed by a known state (used by tests and the self-oracle CLI).
ExactOracle make_qsot_oracle(const Qsot& q);

/// Finite-statistics oracle at maximum visibility: intervention -> counts
/// (n+, n-) for a given shot budget.
using NoisyOracle = std::function<std::pair<std::int64_t, std::int64_t>(
    const Intervention&, std::int64_t shots, Rng& rng)>;

NoisyOracle make_noisy_qsot_oracle(const Qsot& q);

/// Reconstruct the n-region state from Weyl-basis interference terms:
/// rho = (prod d_i)^-1 sum_tuples I(W_k1 (x) ... (x) W_kn) (W...)^dag.
/// Exact (not least squares): the residual against the oracle is zero for
/// every valid state, including non-Hermitian left products. Basis tuples
/// are enumerated lexicographically in (region, p, q).
Qsot reconstruct(const ExactOracle& oracle, const Dims& region_dims);

struct NoisyReconstruction {
  Qsot state;
  /// Analytic binomial error propagation: largest per-entry standard
  /// deviation of the estimator.
  double max_entry_sigma;
  bool low_confidence;
  std::int64_t shots_per_setting;
  std::int64_t settings;
};

/// Noisy reconstruction at maximum visibility. Per basis tuple, two runs:
/// (V, W, ...) estimates Re I and (iV, W, ...) estimates -Im I; the
/// all-identity tuple is pinned to I = 1, which is the normalization
/// guaranteed by trivial interventions, so the estimate has exact unit
/// trace. The estimator is unbiased.
NoisyReconstruction reconstruct_noisy(const NoisyOracle& oracle,
                                      const Dims& region_dims,
                                      std::int64_t shots_per_setting,
                                      Rng& rng);

}  // namespace qsot

#endif  // QSOT_TOMOGRAPHY_HPP_
