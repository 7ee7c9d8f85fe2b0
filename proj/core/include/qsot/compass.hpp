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

#ifndef QSOT_COMPASS_HPP_
#define QSOT_COMPASS_HPP_

#include <functional>
#include <utility>
#include <vector>

#include "qsot/channel.hpp"
#include "qsot/interferometer.hpp"
#include "qsot/products.hpp"

namespace qsot {

/// A dynamics escorted by a compass register: a qubit initialized to |0><0|
/// next to the system that undergoes the identity channel. The compass
/// carries no dynamical data; its only job is to point from past to future.
struct CompassSetup {
  explicit CompassSetup(Dynamics dynamics_) : dynamics(std::move(dynamics_)) {}
  Dynamics dynamics;
};

/// (E (x) id_C) *FP (rho (x) |0><0|) on regions (A C_A, B C_B); the factor
/// refinement is (A, C_A, B, C_B). Hermitian, unit trace; tracing out the
/// compass gives E *FP rho back.
Qsot compass_qsot(const CompassSetup& s);

/// Compass-dressed interventions
///   V~ = V (x) |1><0| + V^dag (x) |0><1|,
///   W~ = W (x) |0><1| + W^dag (x) |1><0|;
/// both unitary whenever V and W are.
std::pair<UnitaryMatrix, UnitaryMatrix> compass_interventions(
    const UnitaryMatrix& v, const UnitaryMatrix& w);

/// Interference term of the compass experiment. Real within 1e-10 and equal
/// to Re Tr[(V (x) W)(E *L rho)] within 1e-10; disagreement throws.
double compass_interference(const CompassSetup& s, const UnitaryMatrix& v,
                            const UnitaryMatrix& w);

/// Convex mixture of compass experiments (branch-by-branch, then combined;
/// every map involved is linear).
double compass_interference(const std::vector<double>& weights,
                            const std::vector<CompassSetup>& setups,
                            const UnitaryMatrix& v, const UnitaryMatrix& w);

/// One compass run: (V, W) -> real interference value.
using CompassRuns =
    std::function<double(const UnitaryMatrix&, const UnitaryMatrix&)>;

CompassRuns make_compass_runs(const CompassSetup& s);
CompassRuns make_compass_runs(std::vector<double> weights,
                              std::vector<CompassSetup> setups);

/// Recover the left product E *L rho from compass runs alone, two runs per
/// basis pair: (V, W) gives Re Tr[(V (x) W) L] and (iV, W) gives
/// -Im Tr[(V (x) W) L]. The operator-basis expansion is inverted by a
/// rank-checked linear solve; a non-spanning basis throws.
Qsot compass_recover_left(const CompassRuns& runs,
                          const std::vector<UnitaryMatrix>& basis_a,
                          const std::vector<UnitaryMatrix>& basis_b);

/// Same, with the Weyl bases of the setup's input/output dimensions.
Qsot compass_recover_left(const CompassSetup& s);

}  // namespace qsot

#endif  // QSOT_COMPASS_HPP_
