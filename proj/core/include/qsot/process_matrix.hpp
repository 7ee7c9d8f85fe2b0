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

#ifndef QSOT_PROCESS_MATRIX_HPP_
#define QSOT_PROCESS_MATRIX_HPP_

#include <vector>

#include "qsot/channel.hpp"
#include "qsot/matrix.hpp"

namespace qsot {

/// CP (not necessarily trace-preserving) map in Kraus form, used as a lab
/// instrument element in the generalized Born rule.
struct CpMap {
  CpMap(std::vector<Mat> kraus_, Index in_dim_, Index out_dim_);
  std::vector<Mat> kraus;
  Index in_dim;
  Index out_dim;

  Mat apply_raw(const Mat& x) const;
};

/// Process matrix on A (x) A' (x) B (x) B', where A/B enter the labs and
/// A'/B' leave them. Hermitian within 1e-10. Probabilities come from the
/// generalized Born rule Pr(M) = Tr[J[M] W] with the basis-independent
/// J[M] = (id (x) M)(SWAP).
class ProcessMatrix {
 public:
  explicit ProcessMatrix(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return m_; }
  const Mat& mat() const { return m_.mat(); }
  Index dim_a() const { return m_.dims()[0]; }
  Index dim_a_out() const { return m_.dims()[1]; }
  Index dim_b() const { return m_.dims()[2]; }
  Index dim_b_out() const { return m_.dims()[3]; }

 private:
  ComplexMatrix m_;
};

/// Jamiolkowski operator of a joint lab map M: AB -> A'B', permuted to the
/// process-matrix factor order (A, A', B, B').
ComplexMatrix lab_map_jamiolkowski(const CpMap& m, Index dim_a, Index dim_b,
                                   Index dim_a_out, Index dim_b_out);

/// Generalized Born rule Pr(M) = Tr[J[M] W]; real for Hermitian W and CP M.
Complex born(const ProcessMatrix& w, const CpMap& m);

/// Process matrix of the causally ordered process "rho enters Alice, E maps
/// Alice's output to Bob's input" built by linear inversion: the composition
/// functional Tr[M_B(E(M_A(rho)))] is evaluated on a matrix-unit basis of
/// lab maps (each unit is the map whose Jamiolkowski operator is a matrix
/// unit), and the results are assembled against the dual basis so that
/// born(W, M) reproduces the composition for all product instruments.
ProcessMatrix ordered_process_matrix(const Dynamics& dyn);

/// First-order approximation W1 = Tr_AB[SWAP_AB W] on A'B'. For an ordered
/// process this equals the left product E *L rho.
ComplexMatrix first_order(const ProcessMatrix& w);

struct WeakMeasurementResult {
  double exact;   // born(W, M) for M(X) = p (1 - K/2) X (1 - K/2)^dag
  double approx;  // Re Tr[p (1 - K) W1]
  double error;
};

/// Weak-measurement comparison; the error shrinks quadratically in ||K||.
/// Throws if the POVM element p |1 - K/2|^2 exceeds the identity.
WeakMeasurementResult weak_measurement_check(const ProcessMatrix& w,
                                             const ComplexMatrix& k, double p);

}  // namespace qsot

#endif  // QSOT_PROCESS_MATRIX_HPP_
