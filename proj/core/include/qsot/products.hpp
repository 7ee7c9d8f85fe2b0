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

#ifndef QSOT_PRODUCTS_HPP_
#define QSOT_PRODUCTS_HPP_

#include <string>
#include <vector>

#include "qsot/channel.hpp"
#include "qsot/matrix.hpp"

namespace qsot {

/// How a state over time was obtained. Advisory metadata only; never used
/// in arithmetic, so mixing differently-tagged states is legal.
enum class Provenance { kLeft, kRight, kFp, kMixture, kReconstructed, kOther };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

enum class ProductKind { kLeft, kRight, kFp };

/// Unit-trace operator over a list of time-separated (or space-separated)
/// regions. Hermiticity and positivity are NOT required in general: left and
/// right products are typically non-Hermitian. FP-tagged states must be
/// Hermitian within 1e-10.
class Qsot {
 public:
  Qsot(ComplexMatrix matrix, Provenance provenance);

  const ComplexMatrix& matrix() const { return m_; }
  const Mat& mat() const { return m_.mat(); }
  const Dims& region_dims() const { return m_.dims(); }
  Index regions() const { return m_.num_factors(); }
  Provenance provenance() const { return provenance_; }

 private:
  ComplexMatrix m_;
  Provenance provenance_;
};

// Linear extensions of the products to arbitrary square inputs (no trace
// validation); block building blocks for the Qsot-returning fronts below.
// The channel acts on the LAST tensor factor of x, so an n-region input
// yields an (n+1)-region output with region order = time order.
ComplexMatrix star_left_op(const QuantumChannel& e, const ComplexMatrix& x);
ComplexMatrix star_right_op(const QuantumChannel& e, const ComplexMatrix& x);
ComplexMatrix star_fp_op(const QuantumChannel& e, const ComplexMatrix& x);
ComplexMatrix star_op(ProductKind kind, const QuantumChannel& e,
                      const ComplexMatrix& x);

/// Left product (rho (x) 1) J[E]. Marginals: Tr_B = rho, Tr_A = E(rho).
Qsot star_left(const QuantumChannel& e, const DensityOperator& rho);
Qsot star_left(const QuantumChannel& e, const Qsot& x);
/// Right product J[E] (rho (x) 1).
Qsot star_right(const QuantumChannel& e, const DensityOperator& rho);
Qsot star_right(const QuantumChannel& e, const Qsot& x);
/// Fullwood-Parzygnat product: average of left and right; Hermitian part of
/// the left product for Hermitian inputs.
Qsot star_fp(const QuantumChannel& e, const DensityOperator& rho);
Qsot star_fp(const QuantumChannel& e, const Qsot& x);

Qsot star(ProductKind kind, const QuantumChannel& e,
          const DensityOperator& rho);
Qsot star(ProductKind kind, const QuantumChannel& e, const Qsot& x);

/// Convex combination. Weights must be nonnegative and sum to 1 within
/// 1e-12; all region dimension lists must agree.
Qsot mix(const std::vector<double>& weights, const std::vector<Qsot>& qsots);

/// Nested product E_n * (E_{n-1} * ... (E_1 * rho)); each channel acts on
/// the most recent region, so region index equals time index.
Qsot markov_chain(const DensityOperator& rho,
                  const std::vector<QuantumChannel>& channels,
                  ProductKind kind);

/// Frobenius distance between (E (x) F) * (rho (x) sigma) and the reordered
/// (E * rho) (x) (F * sigma). Zero for the left product; generally positive
/// for the FP product, which is what synchronization means.
double synchronization_gap(const QuantumChannel& e, const QuantumChannel& f,
                           const DensityOperator& rho,
                           const DensityOperator& sigma, ProductKind kind);

struct FactorizedEnsemble {
  Dynamics enlarged;
  Qsot qsot;  // factorizable state on the flag-extended regions
  Index system_in;
  Index system_out;
  Index flag_dim;
};

/// Embed a mixture sum_i p_i (F_i * rho_i) as the flag-traced marginal of a
/// single factorizable state in a larger space: the channel sum_i F_i (x)
/// (|i><i| . |i><i|) applied to sum_j p_j rho_j (x) |j><j|.
FactorizedEnsemble factorize_in_larger_space(
    const std::vector<double>& weights, const std::vector<Dynamics>& dynamics,
    ProductKind kind = ProductKind::kLeft);

/// Marginal of the enlarged state with both flag registers traced out.
Qsot flag_traced_marginal(const FactorizedEnsemble& fe);

}  // namespace qsot

#endif  // QSOT_PRODUCTS_HPP_
