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

#include "qsot/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace qsot {

Index product_dim(const Dims& dims) {
  Index p = 1;
  for (Index d : dims) p *= d;
  return p;
}

namespace {

void check_dims(const Dims& dims) {
  if (dims.empty()) throw std::invalid_argument("dims must be nonempty");
  for (Index d : dims) {
    if (d < 1) throw std::invalid_argument("subsystem dims must be >= 1");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(Dims dims, Mat data)
    : dims_(std::move(dims)), data_(std::move(data)) {
  check_dims(dims_);
  const Index d = product_dim(dims_);
  if (data_.rows() != d || data_.cols() != d) {
    throw std::invalid_argument("matrix is " + std::to_string(data_.rows()) +
                                "x" + std::to_string(data_.cols()) +
                                " but dims give " + std::to_string(d));
  }
}

ComplexMatrix ComplexMatrix::identity(Dims dims) {
  const Index d = product_dim(dims);
  return ComplexMatrix(std::move(dims), Mat::Identity(d, d));
}

ComplexMatrix ComplexMatrix::zero(Dims dims) {
  const Index d = product_dim(dims);
  return ComplexMatrix(std::move(dims), Mat::Zero(d, d));
}

ComplexMatrix ComplexMatrix::from_mat(Mat data) {
  const Index d = data.rows();
  return ComplexMatrix({d}, std::move(data));
}

ComplexMatrix ComplexMatrix::with_dims(Dims dims) const {
  if (product_dim(dims) != total_dim()) {
    throw std::invalid_argument("with_dims: total dimension mismatch");
  }
  return ComplexMatrix(std::move(dims), data_);
}

bool ComplexMatrix::is_hermitian(double tol) const {
  return (data_ - data_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool ComplexMatrix::is_unitary(double tol) const {
  const Mat g = data_.adjoint() * data_;
  return (g - Mat::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() <= tol;
}

StateVector::StateVector(Dims dims, Vec amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
  check_dims(dims_);
  if (amplitudes_.size() != product_dim(dims_)) {
    throw std::invalid_argument("state vector length does not match dims");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > kConstructTol) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

StateVector StateVector::basis(Index dim, Index index) {
  if (index < 0 || index >= dim) {
    throw std::invalid_argument("basis index out of range");
  }
  Vec v = Vec::Zero(dim);
  v(index) = 1.0;
  return StateVector({dim}, std::move(v));
}

ComplexMatrix StateVector::projector() const {
  return ComplexMatrix(dims_, amplitudes_ * amplitudes_.adjoint());
}

std::vector<Index> mixed_radix_strides(const Dims& dims) {
  std::vector<Index> strides(dims.size(), 1);
  for (Index i = static_cast<Index>(dims.size()) - 2; i >= 0; --i) {
    strides[i] = strides[i + 1] * dims[i + 1];
  }
  return strides;
}

std::vector<Index> mixed_radix_digits(Index linear, const Dims& dims) {
  const auto strides = mixed_radix_strides(dims);
  std::vector<Index> digits(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    digits[i] = (linear / strides[i]) % dims[i];
  }
  return digits;
}

Index mixed_radix_compose(const std::vector<Index>& digits, const Dims& dims) {
  const auto strides = mixed_radix_strides(dims);
  Index linear = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) linear += digits[i] * strides[i];
  return linear;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return ComplexMatrix(std::move(dims),
                       Eigen::kroneckerProduct(a.mat(), b.mat()).eval());
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  Vec out(a.total_dim() * b.total_dim());
  for (Index i = 0; i < a.total_dim(); ++i) {
    out.segment(i * b.total_dim(), b.total_dim()) = a.vec()(i) * b.vec();
  }
  return StateVector(std::move(dims), std::move(out));
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<Index>& keep) {
  const Dims& dims = m.dims();
  const Index n = m.num_factors();
  std::vector<bool> kept(n, false);
  for (Index k : keep) {
    if (k < 0 || k >= n) throw std::invalid_argument("keep index out of range");
    if (kept[k]) throw std::invalid_argument("duplicate keep index");
    kept[k] = true;
  }
  std::vector<Index> keep_sorted, traced;
  Dims keep_dims, traced_dims;
  for (Index i = 0; i < n; ++i) {
    if (kept[i]) {
      keep_sorted.push_back(i);
      keep_dims.push_back(dims[i]);
    } else {
      traced.push_back(i);
      traced_dims.push_back(dims[i]);
    }
  }
  if (keep_dims.empty()) {
    // Tracing out everything: 1x1 matrix holding the full trace.
    Mat out(1, 1);
    out(0, 0) = m.trace();
    return ComplexMatrix({1}, std::move(out));
  }
  const auto strides = mixed_radix_strides(dims);
  const Index dk = product_dim(keep_dims);
  const Index dt = product_dim(traced_dims);
  Mat out = Mat::Zero(dk, dk);
  for (Index r = 0; r < dk; ++r) {
    const auto rd = mixed_radix_digits(r, keep_dims);
    Index rbase = 0;
    for (std::size_t i = 0; i < keep_sorted.size(); ++i) {
      rbase += rd[i] * strides[keep_sorted[i]];
    }
    for (Index c = 0; c < dk; ++c) {
      const auto cd = mixed_radix_digits(c, keep_dims);
      Index cbase = 0;
      for (std::size_t i = 0; i < keep_sorted.size(); ++i) {
        cbase += cd[i] * strides[keep_sorted[i]];
      }
      Complex acc = 0.0;
      for (Index t = 0; t < dt; ++t) {
        const auto td = mixed_radix_digits(t, traced_dims);
        Index off = 0;
        for (std::size_t i = 0; i < traced.size(); ++i) {
          off += td[i] * strides[traced[i]];
        }
        acc += m.mat()(rbase + off, cbase + off);
      }
      out(r, c) = acc;
    }
  }
  return ComplexMatrix(std::move(keep_dims), std::move(out));
}

ComplexMatrix dagger(const ComplexMatrix& m) {
  return ComplexMatrix(m.dims(), m.mat().adjoint());
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return ComplexMatrix(m.dims(), 0.5 * (m.mat() + m.mat().adjoint()));
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.total_dim() != b.total_dim()) {
    throw std::invalid_argument("frobenius_distance: dimension mismatch");
  }
  return (a.mat() - b.mat()).norm();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.total_dim() != b.total_dim()) {
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  }
  return (a.mat() - b.mat()).cwiseAbs().maxCoeff();
}

namespace {

// index_map[new_linear] = old_linear for the given factor reordering.
std::vector<Index> permutation_index_map(const Dims& old_dims,
                                         const std::vector<Index>& order) {
  const Index n = static_cast<Index>(old_dims.size());
  if (static_cast<Index>(order.size()) != n) {
    throw std::invalid_argument("permute_factors: order size mismatch");
  }
  std::vector<bool> seen(n, false);
  for (Index o : order) {
    if (o < 0 || o >= n || seen[o]) {
      throw std::invalid_argument("permute_factors: not a permutation");
    }
    seen[o] = true;
  }
  Dims new_dims(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) new_dims[k] = old_dims[order[k]];
  const auto old_strides = mixed_radix_strides(old_dims);
  const Index total = product_dim(old_dims);
  std::vector<Index> map(total);
  for (Index lin = 0; lin < total; ++lin) {
    const auto digits = mixed_radix_digits(lin, new_dims);
    Index old_lin = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      old_lin += digits[k] * old_strides[order[k]];
    }
    map[lin] = old_lin;
  }
  return map;
}

}  // namespace

ComplexMatrix permute_factors(const ComplexMatrix& m,
                              const std::vector<Index>& order) {
  const auto map = permutation_index_map(m.dims(), order);
  Dims new_dims(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) new_dims[k] = m.dims()[order[k]];
  const Index d = m.total_dim();
  Mat out(d, d);
  for (Index r = 0; r < d; ++r) {
    for (Index c = 0; c < d; ++c) out(r, c) = m.mat()(map[r], map[c]);
  }
  return ComplexMatrix(std::move(new_dims), std::move(out));
}

StateVector permute_factors(const StateVector& v,
                            const std::vector<Index>& order) {
  const auto map = permutation_index_map(v.dims(), order);
  Dims new_dims(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) new_dims[k] = v.dims()[order[k]];
  Vec out(v.total_dim());
  for (Index i = 0; i < v.total_dim(); ++i) out(i) = v.vec()(map[i]);
  return StateVector(std::move(new_dims), std::move(out));
}

ComplexMatrix embed_operator(const ComplexMatrix& op,
                             const std::vector<Index>& positions,
                             const Dims& full_dims) {
  const Index n = static_cast<Index>(full_dims.size());
  if (positions.size() != op.dims().size()) {
    throw std::invalid_argument("embed_operator: positions/op factor mismatch");
  }
  std::vector<bool> targeted(n, false);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const Index p = positions[i];
    if (p < 0 || p >= n || targeted[p]) {
      throw std::invalid_argument("embed_operator: bad position list");
    }
    if (full_dims[p] != op.dims()[i]) {
      throw std::invalid_argument("embed_operator: dimension mismatch at slot");
    }
    targeted[p] = true;
  }
  const auto strides = mixed_radix_strides(full_dims);
  Dims spect_dims;
  std::vector<Index> spect_pos;
  for (Index i = 0; i < n; ++i) {
    if (!targeted[i]) {
      spect_dims.push_back(full_dims[i]);
      spect_pos.push_back(i);
    }
  }
  const Index ds = spect_dims.empty() ? 1 : product_dim(spect_dims);
  const Index dop = op.total_dim();
  const Index dfull = product_dim(full_dims);
  Mat out = Mat::Zero(dfull, dfull);
  for (Index ro = 0; ro < dop; ++ro) {
    const auto rod = mixed_radix_digits(ro, op.dims());
    Index rbase = 0;
    for (std::size_t i = 0; i < positions.size(); ++i) {
      rbase += rod[i] * strides[positions[i]];
    }
    for (Index co = 0; co < dop; ++co) {
      const Complex val = op.mat()(ro, co);
      if (val == Complex(0.0, 0.0)) continue;
      const auto cod = mixed_radix_digits(co, op.dims());
      Index cbase = 0;
      for (std::size_t i = 0; i < positions.size(); ++i) {
        cbase += cod[i] * strides[positions[i]];
      }
      for (Index s = 0; s < ds; ++s) {
        Index off = 0;
        if (!spect_dims.empty()) {
          const auto sd = mixed_radix_digits(s, spect_dims);
          for (std::size_t i = 0; i < spect_pos.size(); ++i) {
            off += sd[i] * strides[spect_pos[i]];
          }
        }
        out(rbase + off, cbase + off) = val;
      }
    }
  }
  return ComplexMatrix(full_dims, std::move(out));
}

StateVector apply_on_factors(const Mat& op, const Dims& in_dims,
                             const Dims& out_dims,
                             const std::vector<Index>& positions,
                             const StateVector& state) {
  const Dims& dims = state.dims();
  const Index n = static_cast<Index>(dims.size());
  if (positions.size() != in_dims.size() || in_dims.size() != out_dims.size()) {
    throw std::invalid_argument("apply_on_factors: dims/position mismatch");
  }
  if (op.rows() != product_dim(out_dims) || op.cols() != product_dim(in_dims)) {
    throw std::invalid_argument("apply_on_factors: operator shape mismatch");
  }
  std::vector<bool> targeted(n, false);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const Index p = positions[i];
    if (p < 0 || p >= n || targeted[p]) {
      throw std::invalid_argument("apply_on_factors: bad position list");
    }
    if (dims[p] != in_dims[i]) {
      throw std::invalid_argument("apply_on_factors: dimension mismatch");
    }
    targeted[p] = true;
  }
  // Bring targets to the front, contract, then restore the original layout.
  std::vector<Index> to_front(positions.begin(), positions.end());
  Dims spect_dims;
  for (Index i = 0; i < n; ++i) {
    if (!targeted[i]) {
      to_front.push_back(i);
      spect_dims.push_back(dims[i]);
    }
  }
  const StateVector fronted = permute_factors(state, to_front);
  const Index din = product_dim(in_dims);
  const Index dout = product_dim(out_dims);
  const Index ds = spect_dims.empty() ? 1 : product_dim(spect_dims);
  Vec out = Vec::Zero(dout * ds);
  for (Index r = 0; r < dout; ++r) {
    for (Index c = 0; c < din; ++c) {
      const Complex val = op(r, c);
      if (val == Complex(0.0, 0.0)) continue;
      out.segment(r * ds, ds) += val * fronted.vec().segment(c * ds, ds);
    }
  }
  Dims fronted_out_dims(out_dims);
  fronted_out_dims.insert(fronted_out_dims.end(), spect_dims.begin(),
                          spect_dims.end());
  if (std::abs(out.norm() - 1.0) > kConstructTol) {
    throw std::runtime_error(
        "apply_on_factors: result is not a unit vector; op must be an "
        "isometry on the targeted factors");
  }
  StateVector tmp(fronted_out_dims, std::move(out));
  // Invert the to-front permutation.
  std::vector<Index> inverse(n);
  for (Index k = 0; k < n; ++k) inverse[to_front[k]] = k;
  return permute_factors(tmp, inverse);
}

}  // namespace qsot
