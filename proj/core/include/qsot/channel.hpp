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

#ifndef QSOT_CHANNEL_HPP_
#define QSOT_CHANNEL_HPP_

#include <vector>

#include "qsot/matrix.hpp"

namespace qsot {

// Qubit constants used throughout.
namespace qubit {
Mat id();
Mat x();
Mat y();
Mat z();
Mat hadamard();
Vec ket0();
Vec ket1();
Vec ket_plus();
Vec ket_minus();
}  // namespace qubit

/// Validated unitary: U^dagger U = 1 within 1e-12.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(ComplexMatrix m, double tol = kConstructTol);
  const ComplexMatrix& matrix() const { return m_; }
  const Mat& mat() const { return m_.mat(); }
  Index dim() const { return m_.total_dim(); }

 private:
  ComplexMatrix m_;
};

/// Validated density operator: Hermitian within 1e-12, eigenvalues
/// >= -1e-10, unit trace within 1e-12.
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix m);
  static DensityOperator pure(const StateVector& psi);
  static DensityOperator maximally_mixed(Index dim);

  const ComplexMatrix& matrix() const { return m_; }
  const Mat& mat() const { return m_.mat(); }
  Index dim() const { return m_.total_dim(); }

 private:
  ComplexMatrix m_;
};

/// CPTP map in Kraus form. Kraus operators are the source of truth; the
/// Choi and Jamiolkowski operators are derived views.
/// Validation: sum K^dag K = 1 within 1e-10 and Choi PSD within -1e-10.
class QuantumChannel {
 public:
  QuantumChannel(std::vector<Mat> kraus, Index in_dim, Index out_dim);

  static QuantumChannel identity(Index dim);
  static QuantumChannel unitary(const UnitaryMatrix& u);
  static QuantumChannel pauli_x();
  static QuantumChannel pauli_y();
  static QuantumChannel pauli_z();
  /// Rotation channel exp(-i theta P/2) . exp(+i theta P/2).
  static QuantumChannel rotation_y(double theta);
  static QuantumChannel rotation_z(double theta);
  /// Dephasing D[theta] = (Z[theta] + Z[-theta])/2, Kraus pair
  /// {exp(-i theta Z/2)/sqrt2, exp(+i theta Z/2)/sqrt2}.
  static QuantumChannel dephasing(double theta);
  static QuantumChannel depolarizing(double p);

  Index in_dim() const { return in_dim_; }
  Index out_dim() const { return out_dim_; }
  const std::vector<Mat>& kraus() const { return kraus_; }

  /// sum_k K X K^dag, linearly extended to arbitrary (non-PSD) inputs.
  ComplexMatrix apply(const ComplexMatrix& x) const;
  Mat apply_raw(const Mat& x) const;

  /// J[E] = sum_ij |i><j| (x) E(|j><i|), dims [in_dim, out_dim].
  ComplexMatrix jamiolkowski() const;
  /// Choi matrix sum_ij |i><j| (x) E(|i><j|); partial transpose of J on A.
  ComplexMatrix choi() const;

 private:
  std::vector<Mat> kraus_;
  Index in_dim_;
  Index out_dim_;
};

/// Tensor product channel with Kraus set {K_i (x) L_j}.
QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b);

/// Initial state plus the channel that evolves it.
struct Dynamics {
  Dynamics(DensityOperator initial_, QuantumChannel channel_);
  DensityOperator initial;
  QuantumChannel channel;
};

/// A not-necessarily-CP linear map identified by its Jamiolkowski operator.
/// apply(X) = Tr_A[(X (x) 1) J]; jamiolkowski(inverse_jamiolkowski(J)) = J.
class LinearMap {
 public:
  LinearMap(ComplexMatrix jam, Index in_dim, Index out_dim);
  Index in_dim() const { return in_dim_; }
  Index out_dim() const { return out_dim_; }
  const ComplexMatrix& jamiolkowski() const { return jam_; }
  ComplexMatrix apply(const ComplexMatrix& x) const;
  Mat apply_raw(const Mat& x) const;

 private:
  ComplexMatrix jam_;
  Index in_dim_;
  Index out_dim_;
};

LinearMap inverse_jamiolkowski(const ComplexMatrix& jam, Index in_dim,
                               Index out_dim);

/// Purification on S (x) E with dim E = rank(rho); Tr_E |phi><phi| = rho.
/// Eigenvalues in [-1e-10, 0) are clamped to zero; anything lower throws.
StateVector purify(const DensityOperator& rho);

/// Unitary dilation U: A (x) K -> B (x) K' with environment prepared in
/// |0><0| on K, so that E(rho) = Tr_K'[U (rho (x) |0><0|) U^dag].
/// For square channels K and K' have dimension equal to the Kraus count;
/// otherwise K = out_dim * count and K' = in_dim * count.
struct StinespringDilation {
  Mat unitary;  // (out_dim * env_out) x (in_dim * env_in)
  Index in_dim;
  Index out_dim;
  Index env_in;
  Index env_out;

  /// Environment input state |0><0| of dimension env_in.
  ComplexMatrix env_state() const;
  /// Tr_K'[U (x (x) |0><0|) U^dag], linearly extended.
  ComplexMatrix apply(const ComplexMatrix& x) const;
};

StinespringDilation stinespring(const QuantumChannel& e);

}  // namespace qsot

#endif  // QSOT_CHANNEL_HPP_
