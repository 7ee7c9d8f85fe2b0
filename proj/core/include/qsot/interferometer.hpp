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

#ifndef QSOT_INTERFEROMETER_HPP_
#define QSOT_INTERFEROMETER_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "qsot/channel.hpp"
#include "qsot/matrix.hpp"
#include "qsot/products.hpp"
#include "qsot/rng.hpp"

namespace qsot {

/// Two-arm probe preparation and measurement basis. The derived coefficients
/// S+-, A+- fully determine how an interference term maps to outcome
/// probabilities: Pr(+-) = S+- + 2 Re[A+- I].
class ProbeConfig {
 public:
  ProbeConfig(Complex alpha0, Complex alpha1, StateVector basis_plus,
              StateVector basis_minus);

  /// alpha0 = alpha1 = 1/sqrt2, b+- = (|0> +- |1>)/sqrt2, giving
  /// S+- = 2A+- = 1/2 and Pr(+-) = (1 +- Re I)/2.
  static ProbeConfig max_visibility();

  Complex alpha0() const { return alpha0_; }
  Complex alpha1() const { return alpha1_; }
  const StateVector& basis_plus() const { return basis_plus_; }
  const StateVector& basis_minus() const { return basis_minus_; }

  double s_plus() const { return s_plus_; }
  double s_minus() const { return s_minus_; }
  Complex a_plus() const { return a_plus_; }
  Complex a_minus() const { return a_minus_; }

 private:
  Complex alpha0_, alpha1_;
  StateVector basis_plus_, basis_minus_;
  double s_plus_, s_minus_;
  Complex a_plus_, a_minus_;
};

/// One unitary per region, applied as V_1 (x) ... (x) V_n.
using Intervention = std::vector<UnitaryMatrix>;

struct InterferenceRecord {
  Complex interference;
  double prob_plus;
  double prob_minus;
};

/// Validates prob_plus + prob_minus = 1 within 1e-12 and both >= -1e-12;
/// out-of-range values are reported with the offending numbers.
InterferenceRecord make_interference_record(Complex interference,
                                            double prob_plus,
                                            double prob_minus);

/// I = Tr[(V_1 (x) ... (x) V_n) rho].
Complex interference_from_qsot(const Qsot& q, const Intervention& iv);

/// Pr(+-) = S+- + 2 Re[A+- I]. Never throws; a negative value signals an
/// inconsistent model upstream and is surfaced by make_interference_record.
std::pair<double, double> probabilities(const ProbeConfig& probe, Complex i);

/// Interferometry of a dynamics (rho, E) with interventions V before and W
/// after the channel. Computes the interference term three independent ways
/// (closed form Tr[W E(V rho)], the left-product trace formula, and a full
/// state-vector simulation through purification + Stinespring dilation) and
/// throws std::runtime_error if they disagree beyond 1e-8. The returned
/// record comes from the state-vector path, with probabilities read off an
/// explicit probe measurement.
InterferenceRecord simulate_temporal(const Dynamics& dyn,
                                     const UnitaryMatrix& v,
                                     const UnitaryMatrix& w,
                                     const ProbeConfig& probe);

/// Spatial analogue: I = Tr[(V (x) W) rho_ab] cross-checked against a
/// purification-based state-vector simulation. rho_ab must carry a
/// two-factor dimension list.
InterferenceRecord simulate_spatial(const DensityOperator& rho_ab,
                                    const UnitaryMatrix& v,
                                    const UnitaryMatrix& w,
                                    const ProbeConfig& probe);

/// Time-reversal-symmetric pathway: the equal mixture of the forward dilated
/// dynamics and its reversed description, which must match the FP-product
/// trace formula (and the reversed branch alone the right-product formula).
InterferenceRecord simulate_time_reversed(const Dynamics& dyn,
                                          const UnitaryMatrix& v,
                                          const UnitaryMatrix& w,
                                          const ProbeConfig& probe);
/// Same, with a caller-supplied dilation (the result must not depend on it).
InterferenceRecord simulate_time_reversed(const Dynamics& dyn,
                                          const UnitaryMatrix& v,
                                          const UnitaryMatrix& w,
                                          const ProbeConfig& probe,
                                          const StinespringDilation& dilation);

/// Temporal POVM pair: M+- = Hermitian part of S+- 1 + 2 A+- (V (x) W).
/// M+ + M- = 1 and both are PSD, so Pr(+-) = Tr[M+- (E *FP rho)].
std::pair<ComplexMatrix, ComplexMatrix> povm_elements(const ProbeConfig& probe,
                                                      const UnitaryMatrix& v,
                                                      const UnitaryMatrix& w);

/// Finite statistics: (n+, n-) from `shots` Bernoulli draws of prob_plus.
std::pair<std::int64_t, std::int64_t> sample(const InterferenceRecord& record,
                                             std::int64_t shots, Rng& rng);

}  // namespace qsot

#endif  // QSOT_INTERFEROMETER_HPP_
