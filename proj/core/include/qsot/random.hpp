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

#ifndef QSOT_RANDOM_HPP_
#define QSOT_RANDOM_HPP_

#include "qsot/channel.hpp"
#include "qsot/matrix.hpp"
#include "qsot/rng.hpp"

namespace qsot {

/// Haar-like unitary: QR of a complex Ginibre matrix with the R diagonal
/// phase-normalized. Deterministic given the generator state.
UnitaryMatrix random_unitary(Index dim, Rng& rng);

/// Full-rank random density operator G G^dag / Tr[G G^dag].
DensityOperator random_density(Index dim, Rng& rng);

/// Random CPTP channel with the given Kraus count: Ginibre stack normalized
/// by S^{-1/2} where S = sum K^dag K.
QuantumChannel random_channel(Index in_dim, Index out_dim, Index kraus_count,
                              Rng& rng);

StateVector random_state(Index dim, Rng& rng);

}  // namespace qsot

#endif  // QSOT_RANDOM_HPP_
