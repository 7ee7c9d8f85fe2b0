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

#ifndef QSOT_AGNOSTIC_HPP_
#define QSOT_AGNOSTIC_HPP_

#include <vector>

#include "qsot/channel.hpp"
#include "qsot/matrix.hpp"

namespace qsot {

// Checkable conditions for a measurement scheme to qualify as causally
// agnostic: probe interactions at different regions must commute, and the
// induced unitaries must be controlled unitaries over a sector decomposition
// of the probe. Sector discovery itself is out of scope; sectors are
// caller-supplied. The no-orchestration condition (closure of the admissible
// interaction set under relabeling systems) is a modeling assumption about
// the experiment, not a predicate on finite data, so it is documented here
// rather than implemented.

struct CommutatorCheck {
  bool commutes;
  double norm;  // Frobenius norm of the embedded commutator
};

/// Embed H_XR on (X, Y, R) as H (x) 1_Y and H_YR as 1_X (x) H, both via
/// explicit factor permutations, and measure their commutator. Inputs must
/// be Hermitian within 1e-10.
CommutatorCheck commutator_check(const ComplexMatrix& h_xr,
                                 const ComplexMatrix& h_yr, Index dim_x,
                                 Index dim_y, Index dim_r,
                                 double tol = kDefaultTol);

/// True iff U on X (x) R equals sum_i U_i (x) P_i with each U_i unitary,
/// for the given complete orthogonal projector family {P_i} on R: all
/// cross-sector blocks vanish and each diagonal block factorizes (checked
/// through the partial trace over R). Throws if the sector family is not a
/// complete orthogonal set of projectors.
bool controlled_unitary_check(const UnitaryMatrix& u,
                              const std::vector<ComplexMatrix>& sectors,
                              Index dim_x, Index dim_r,
                              double tol = kDefaultTol);

/// Hermitian generator H with U = exp(-iH) through the principal branch of
/// the logarithm (Schur-based, so degenerate spectra are safe). Requires the
/// spectrum to stay away from -1 by `margin`; throws otherwise.
ComplexMatrix principal_log_generator(const UnitaryMatrix& u,
                                      double margin = 1e-6);

}  // namespace qsot

#endif  // QSOT_AGNOSTIC_HPP_
