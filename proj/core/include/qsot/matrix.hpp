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

#ifndef QSOT_MATRIX_HPP_
#define QSOT_MATRIX_HPP_

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qsot {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Index = Eigen::Index;
using Dims = std::vector<Index>;

// Comparison tolerance used when two independently computed values are
// checked against each other.
inline constexpr double kDefaultTol = 1e-10;
// Tighter tolerance applied when validating invariants at construction time.
inline constexpr double kConstructTol = 1e-12;

Index product_dim(const Dims& dims);

/// Dense square operator over a tensor product of finite-dimensional
/// subsystems. The subsystem dimension list travels with the data so that
/// partial traces and factor reorderings are checked rather than assumed.
class ComplexMatrix {
 public:
  /// Throws std::invalid_argument unless dims is nonempty, every entry is
  /// >= 1 and data is square of size prod(dims).
  ComplexMatrix(Dims dims, Mat data);

  static ComplexMatrix identity(Dims dims);
  static ComplexMatrix zero(Dims dims);
  /// Single-subsystem wrapper: dims = [data.rows()].
  static ComplexMatrix from_mat(Mat data);

  const Dims& dims() const { return dims_; }
  Index total_dim() const { return data_.rows(); }
  Index num_factors() const { return static_cast<Index>(dims_.size()); }
  const Mat& mat() const { return data_; }

  /// Same data, different subsystem split (total dimension must agree).
  ComplexMatrix with_dims(Dims dims) const;

  Complex trace() const { return data_.trace(); }

  bool is_hermitian(double tol = kConstructTol) const;
  bool is_unitary(double tol = kConstructTol) const;

 private:
  Dims dims_;
  Mat data_;
};

/// Unit vector over a tensor product of subsystems (norm 1 within 1e-12).
class StateVector {
 public:
  StateVector(Dims dims, Vec amplitudes);

  /// Computational basis vector |index> of a single d-dimensional system.
  static StateVector basis(Index dim, Index index);

  const Dims& dims() const { return dims_; }
  Index total_dim() const { return amplitudes_.size(); }
  const Vec& vec() const { return amplitudes_; }

  /// |v><v| with the same subsystem dims.
  ComplexMatrix projector() const;

 private:
  Dims dims_;
  Vec amplitudes_;
};

// --- mixed-radix index bookkeeping (row-major, leftmost factor slowest) ---

std::vector<Index> mixed_radix_strides(const Dims& dims);
std::vector<Index> mixed_radix_digits(Index linear, const Dims& dims);
Index mixed_radix_compose(const std::vector<Index>& digits, const Dims& dims);

// --- core operations ---

/// Kronecker product; dims = a.dims ++ b.dims.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector tensor(const StateVector& a, const StateVector& b);

/// Trace out every subsystem not listed in `keep`. Kept subsystems stay in
/// their original relative order; duplicates or out-of-range indices throw.
/// The full trace is preserved: Tr(out) = Tr(in).
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<Index>& keep);

ComplexMatrix dagger(const ComplexMatrix& m);

/// (m + m^dagger)/2. Idempotent; Tr[hermitian_part(m)] = Re Tr[m].
ComplexMatrix hermitian_part(const ComplexMatrix& m);

/// ||a - b||_F. Requires equal total dimension (subsystem splits may differ).
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise deviation |a_ij - b_ij|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reorder tensor factors. order[k] is the old factor index placed at new
/// position k; order must be a permutation of 0..n-1.
ComplexMatrix permute_factors(const ComplexMatrix& m,
                              const std::vector<Index>& order);
StateVector permute_factors(const StateVector& v,
                            const std::vector<Index>& order);

/// Lift an operator acting on the listed subsystem positions to the full
/// space (identity elsewhere). positions refer to full_dims slots and must
/// match op.dims() entrywise.
ComplexMatrix embed_operator(const ComplexMatrix& op,
                             const std::vector<Index>& positions,
                             const Dims& full_dims);

/// Apply a possibly dimension-changing linear map to a subset of tensor
/// factors of a state vector. op maps the composite of in_dims to the
/// composite of out_dims; positions index factors of `state` (one per
/// in/out dim, dims at those slots are replaced by out_dims).
StateVector apply_on_factors(const Mat& op, const Dims& in_dims,
                             const Dims& out_dims,
                             const std::vector<Index>& positions,
                             const StateVector& state);

}  // namespace qsot

#endif  // QSOT_MATRIX_HPP_
