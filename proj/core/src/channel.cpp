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

#include "qsot/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace qsot {

namespace qubit {

Mat id() { return Mat::Identity(2, 2); }

Mat x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Mat y() {
  Mat m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Mat z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Mat hadamard() {
  Mat m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

Vec ket0() {
  Vec v(2);
  v << 1, 0;
  return v;
}

Vec ket1() {
  Vec v(2);
  v << 0, 1;
  return v;
}

Vec ket_plus() {
  Vec v(2);
  v << 1, 1;
  return v / std::sqrt(2.0);
}

Vec ket_minus() {
  Vec v(2);
  v << 1, -1;
  return v / std::sqrt(2.0);
}

}  // namespace qubit

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
  if (!m_.is_unitary(tol)) {
    throw std::invalid_argument("matrix is not unitary within tolerance");
  }
}

DensityOperator::DensityOperator(ComplexMatrix m) : m_(std::move(m)) {
  if (!m_.is_hermitian(kConstructTol)) {
    throw std::invalid_argument("density operator is not Hermitian");
  }
  if (std::abs(m_.trace() - Complex(1.0, 0.0)) > kConstructTol) {
    throw std::invalid_argument("density operator does not have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(m_.mat(), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw std::invalid_argument("density operator has a negative eigenvalue");
  }
}

DensityOperator DensityOperator::pure(const StateVector& psi) {
  return DensityOperator(psi.projector());
}

DensityOperator DensityOperator::maximally_mixed(Index dim) {
  return DensityOperator(ComplexMatrix(
      {dim}, Mat::Identity(dim, dim) / static_cast<double>(dim)));
}

QuantumChannel::QuantumChannel(std::vector<Mat> kraus, Index in_dim,
                               Index out_dim)
    : kraus_(std::move(kraus)), in_dim_(in_dim), out_dim_(out_dim) {
  if (kraus_.empty()) throw std::invalid_argument("empty Kraus list");
  for (const Mat& k : kraus_) {
    if (k.rows() != out_dim_ || k.cols() != in_dim_) {
      throw std::invalid_argument("Kraus operator has wrong shape");
    }
  }
  Mat sum = Mat::Zero(in_dim_, in_dim_);
  for (const Mat& k : kraus_) sum += k.adjoint() * k;
  if ((sum - Mat::Identity(in_dim_, in_dim_)).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("Kraus operators are not trace preserving");
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(choi().mat(), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw std::invalid_argument("channel is not completely positive");
  }
}

QuantumChannel QuantumChannel::identity(Index dim) {
  return QuantumChannel({Mat::Identity(dim, dim)}, dim, dim);
}

QuantumChannel QuantumChannel::unitary(const UnitaryMatrix& u) {
  return QuantumChannel({u.mat()}, u.dim(), u.dim());
}

QuantumChannel QuantumChannel::pauli_x() {
  return QuantumChannel({qubit::x()}, 2, 2);
}

QuantumChannel QuantumChannel::pauli_y() {
  return QuantumChannel({qubit::y()}, 2, 2);
}

QuantumChannel QuantumChannel::pauli_z() {
  return QuantumChannel({qubit::z()}, 2, 2);
}

namespace {

Mat rotation_gate(const Mat& pauli, double theta) {
  // exp(-i theta P / 2) = cos(theta/2) 1 - i sin(theta/2) P
  return std::cos(theta / 2) * Mat::Identity(2, 2) -
         Complex(0, 1) * std::sin(theta / 2) * pauli;
}

}  // namespace

QuantumChannel QuantumChannel::rotation_y(double theta) {
  return QuantumChannel({rotation_gate(qubit::y(), theta)}, 2, 2);
}

QuantumChannel QuantumChannel::rotation_z(double theta) {
  return QuantumChannel({rotation_gate(qubit::z(), theta)}, 2, 2);
}

QuantumChannel QuantumChannel::dephasing(double theta) {
  const double s = 1.0 / std::sqrt(2.0);
  return QuantumChannel({s * rotation_gate(qubit::z(), theta),
                         s * rotation_gate(qubit::z(), -theta)},
                        2, 2);
}

QuantumChannel QuantumChannel::depolarizing(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("depolarizing: bad p");
  return QuantumChannel({std::sqrt(1.0 - 0.75 * p) * qubit::id(),
                         std::sqrt(0.25 * p) * qubit::x(),
                         std::sqrt(0.25 * p) * qubit::y(),
                         std::sqrt(0.25 * p) * qubit::z()},
                        2, 2);
}

Mat QuantumChannel::apply_raw(const Mat& x) const {
  if (x.rows() != in_dim_ || x.cols() != in_dim_) {
    throw std::invalid_argument("channel apply: dimension mismatch");
  }
  Mat out = Mat::Zero(out_dim_, out_dim_);
  for (const Mat& k : kraus_) out += k * x * k.adjoint();
  return out;
}

ComplexMatrix QuantumChannel::apply(const ComplexMatrix& x) const {
  return ComplexMatrix({out_dim_}, apply_raw(x.mat()));
}

ComplexMatrix QuantumChannel::jamiolkowski() const {
  const Index d = in_dim_ * out_dim_;
  Mat j = Mat::Zero(d, d);
  for (Index i = 0; i < in_dim_; ++i) {
    for (Index jj = 0; jj < in_dim_; ++jj) {
      Mat unit = Mat::Zero(in_dim_, in_dim_);
      unit(jj, i) = 1.0;
      const Mat e_unit = apply_raw(unit);
      j.block(i * out_dim_, jj * out_dim_, out_dim_, out_dim_) += e_unit;
    }
  }
  return ComplexMatrix({in_dim_, out_dim_}, std::move(j));
}

ComplexMatrix QuantumChannel::choi() const {
  const Index d = in_dim_ * out_dim_;
  Mat c = Mat::Zero(d, d);
  for (Index i = 0; i < in_dim_; ++i) {
    for (Index jj = 0; jj < in_dim_; ++jj) {
      Mat unit = Mat::Zero(in_dim_, in_dim_);
      unit(i, jj) = 1.0;
      c.block(i * out_dim_, jj * out_dim_, out_dim_, out_dim_) +=
          apply_raw(unit);
    }
  }
  return ComplexMatrix({in_dim_, out_dim_}, std::move(c));
}

QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b) {
  std::vector<Mat> kraus;
  kraus.reserve(a.kraus().size() * b.kraus().size());
  for (const Mat& ka : a.kraus()) {
    for (const Mat& kb : b.kraus()) {
      Mat k(ka.rows() * kb.rows(), ka.cols() * kb.cols());
      for (Index i = 0; i < ka.rows(); ++i) {
        for (Index j = 0; j < ka.cols(); ++j) {
          k.block(i * kb.rows(), j * kb.cols(), kb.rows(), kb.cols()) =
              ka(i, j) * kb;
        }
      }
      kraus.push_back(std::move(k));
    }
  }
  return QuantumChannel(std::move(kraus), a.in_dim() * b.in_dim(),
                        a.out_dim() * b.out_dim());
}

Dynamics::Dynamics(DensityOperator initial_, QuantumChannel channel_)
    : initial(std::move(initial_)), channel(std::move(channel_)) {
  if (channel.in_dim() != initial.dim()) {
    throw std::invalid_argument("dynamics: channel input dim != state dim");
  }
}

LinearMap::LinearMap(ComplexMatrix jam, Index in_dim, Index out_dim)
    : jam_(std::move(jam)), in_dim_(in_dim), out_dim_(out_dim) {
  if (jam_.total_dim() != in_dim_ * out_dim_) {
    throw std::invalid_argument("linear map: Jamiolkowski operator size");
  }
}

Mat LinearMap::apply_raw(const Mat& x) const {
  if (x.rows() != in_dim_ || x.cols() != in_dim_) {
    throw std::invalid_argument("linear map apply: dimension mismatch");
  }
  // E(X) = Tr_A[(X (x) 1_B) J]; block (i,j) of J is E(|j><i|).
  Mat out = Mat::Zero(out_dim_, out_dim_);
  for (Index i = 0; i < in_dim_; ++i) {
    for (Index j = 0; j < in_dim_; ++j) {
      out += x(i, j) *
             jam_.mat().block(j * out_dim_, i * out_dim_, out_dim_, out_dim_);
    }
  }
  return out;
}

ComplexMatrix LinearMap::apply(const ComplexMatrix& x) const {
  return ComplexMatrix({out_dim_}, apply_raw(x.mat()));
}

LinearMap inverse_jamiolkowski(const ComplexMatrix& jam, Index in_dim,
                               Index out_dim) {
  return LinearMap(jam, in_dim, out_dim);
}

StateVector purify(const DensityOperator& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho.mat());
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("purify: eigendecomposition failed");
  }
  const Index d = rho.dim();
  std::vector<std::pair<double, Index>> order;
  for (Index k = 0; k < d; ++k) {
    double lambda = es.eigenvalues()(k);
    if (lambda < -1e-10) {
      throw std::invalid_argument("purify: input is not positive semidefinite");
    }
    if (lambda < 0.0) lambda = 0.0;
    order.emplace_back(lambda, k);
  }
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  Index rank = 0;
  for (const auto& entry : order) {
    if (entry.first > 1e-14) ++rank;
  }
  if (rank == 0) throw std::invalid_argument("purify: zero operator");
  Vec phi = Vec::Zero(d * rank);
  for (Index r = 0; r < rank; ++r) {
    Vec v = es.eigenvectors().col(order[r].second);
    // Fix the eigenvector phase: largest-magnitude entry real positive.
    Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    const Complex ph = v(imax) / std::abs(v(imax));
    v /= ph;
    const double amp = std::sqrt(order[r].first);
    for (Index s = 0; s < d; ++s) phi(s * rank + r) = amp * v(s);
  }
  phi /= phi.norm();
  return StateVector({d, rank}, std::move(phi));
}

ComplexMatrix StinespringDilation::env_state() const {
  Mat tau = Mat::Zero(env_in, env_in);
  tau(0, 0) = 1.0;
  return ComplexMatrix({env_in}, std::move(tau));
}

ComplexMatrix StinespringDilation::apply(const ComplexMatrix& x) const {
  if (x.total_dim() != in_dim) {
    throw std::invalid_argument("dilation apply: dimension mismatch");
  }
  const ComplexMatrix joint =
      tensor(ComplexMatrix({in_dim}, x.mat()), env_state());
  const Mat evolved = unitary * joint.mat() * unitary.adjoint();
  return partial_trace(ComplexMatrix({out_dim, env_out}, evolved), {0});
}

StinespringDilation stinespring(const QuantumChannel& e) {
  const Index da = e.in_dim();
  const Index db = e.out_dim();
  const Index r = static_cast<Index>(e.kraus().size());
  const Index env_in = (da == db) ? r : db * r;
  const Index env_out = (da == db) ? r : da * r;
  const Index n = da * env_in;  // == db * env_out
  Mat u = Mat::Zero(n, n);
  // Columns paired with environment state |0>: U|a,0> = sum_i K_i|a> (x) |i>.
  for (Index a = 0; a < da; ++a) {
    for (Index i = 0; i < r; ++i) {
      for (Index b = 0; b < db; ++b) {
        u(b * env_out + i, a * env_in) = e.kraus()[i](b, a);
      }
    }
  }
  // Complete the remaining columns by Gram-Schmidt over the standard basis,
  // in ascending slot order for determinism.
  std::vector<Index> free_cols;
  for (Index a = 0; a < da; ++a) {
    for (Index k = 1; k < env_in; ++k) free_cols.push_back(a * env_in + k);
  }
  std::vector<Index> filled;
  for (Index a = 0; a < da; ++a) filled.push_back(a * env_in);
  std::size_t next_free = 0;
  for (Index cand = 0; cand < n && next_free < free_cols.size(); ++cand) {
    Vec v = Vec::Zero(n);
    v(cand) = 1.0;
    for (Index c : filled) v -= u.col(c).dot(v) * u.col(c);
    // Re-orthogonalize once; plain Gram-Schmidt loses digits.
    for (Index c : filled) v -= u.col(c).dot(v) * u.col(c);
    const double norm = v.norm();
    if (norm < 1e-6) continue;
    const Index col = free_cols[next_free++];
    u.col(col) = v / norm;
    filled.push_back(col);
  }
  if (next_free != free_cols.size()) {
    throw std::runtime_error("stinespring: unitary completion failed");
  }
  return StinespringDilation{std::move(u), da, db, env_in, env_out};
}

}  // namespace qsot
