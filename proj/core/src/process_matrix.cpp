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

#include "qsot/process_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qsot {

CpMap::CpMap(std::vector<Mat> kraus_, Index in_dim_, Index out_dim_)
    : kraus(std::move(kraus_)), in_dim(in_dim_), out_dim(out_dim_) {
  if (kraus.empty()) throw std::invalid_argument("CpMap: empty Kraus list");
  for (const Mat& k : kraus) {
    if (k.rows() != out_dim || k.cols() != in_dim) {
      throw std::invalid_argument("CpMap: Kraus operator shape mismatch");
    }
  }
}

Mat CpMap::apply_raw(const Mat& x) const {
  if (x.rows() != in_dim || x.cols() != in_dim) {
    throw std::invalid_argument("CpMap apply: dimension mismatch");
  }
  Mat out = Mat::Zero(out_dim, out_dim);
  for (const Mat& k : kraus) out += k * x * k.adjoint();
  return out;
}

ProcessMatrix::ProcessMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.num_factors() != 4) {
    throw std::invalid_argument(
        "process matrix needs the four factors (A, A', B, B')");
  }
  if (!m_.is_hermitian(kDefaultTol)) {
    throw std::invalid_argument("process matrix must be Hermitian");
  }
}

ComplexMatrix lab_map_jamiolkowski(const CpMap& m, Index dim_a, Index dim_b,
                                   Index dim_a_out, Index dim_b_out) {
  const Index din = dim_a * dim_b;
  const Index dout = dim_a_out * dim_b_out;
  if (m.in_dim != din || m.out_dim != dout) {
    throw std::invalid_argument("lab map dims do not match process spaces");
  }
  Mat j = Mat::Zero(din * dout, din * dout);
  for (Index i = 0; i < din; ++i) {
    for (Index jj = 0; jj < din; ++jj) {
      Mat unit = Mat::Zero(din, din);
      unit(jj, i) = 1.0;
      j.block(i * dout, jj * dout, dout, dout) = m.apply_raw(unit);
    }
  }
  // Factor order so far: (A, B, A', B'); the process matrix convention
  // interleaves lab input and output per party.
  const ComplexMatrix as_factors({dim_a, dim_b, dim_a_out, dim_b_out},
                                 std::move(j));
  return permute_factors(as_factors, {0, 2, 1, 3});
}

Complex born(const ProcessMatrix& w, const CpMap& m) {
  const ComplexMatrix j = lab_map_jamiolkowski(
      m, w.dim_a(), w.dim_b(), w.dim_a_out(), w.dim_b_out());
  return (j.mat() * w.mat()).trace();
}

ProcessMatrix ordered_process_matrix(const Dynamics& dyn) {
  const Index da = dyn.initial.dim();          // enters Alice
  const Index da_out = dyn.channel.in_dim();   // leaves Alice, feeds E
  const Index db = dyn.channel.out_dim();      // enters Bob
  const Index db_out = db;                     // leaves Bob
  if (da != da_out) {
    throw std::invalid_argument("ordered process: Alice lab must be square");
  }
  const Index na = da * da_out;
  const Index nb = db * db_out;
  // Unit lab maps: the map whose Jamiolkowski operator is |alpha><beta| on
  // (lab-in (x) lab-out); evaluating the composition on all of them pins
  // every matrix entry of W against the dual (matrix-unit) basis.
  const auto unit_map = [](Index alpha, Index beta, Index din,
                           Index dout) -> LinearMap {
    Mat unit = Mat::Zero(din * dout, din * dout);
    unit(alpha, beta) = 1.0;
    return LinearMap(ComplexMatrix({din, dout}, std::move(unit)), din, dout);
  };
  // Cache Alice-side compositions E(M_A(rho)).
  std::vector<Mat> after_alice(na * na);
  for (Index alpha = 0; alpha < na; ++alpha) {
    for (Index beta = 0; beta < na; ++beta) {
      const LinearMap map_a = unit_map(alpha, beta, da, da_out);
      after_alice[alpha * na + beta] =
          dyn.channel.apply_raw(map_a.apply_raw(dyn.initial.mat()));
    }
  }
  Mat w = Mat::Zero(na * nb, na * nb);
  for (Index alpha_a = 0; alpha_a < na; ++alpha_a) {
    for (Index beta_a = 0; beta_a < na; ++beta_a) {
      const Mat& x = after_alice[alpha_a * na + beta_a];
      for (Index alpha_b = 0; alpha_b < nb; ++alpha_b) {
        for (Index beta_b = 0; beta_b < nb; ++beta_b) {
          const LinearMap map_b = unit_map(alpha_b, beta_b, db, db_out);
          const Complex p = map_b.apply_raw(x).trace();
          w(beta_a * nb + beta_b, alpha_a * nb + alpha_b) = p;
        }
      }
    }
  }
  return ProcessMatrix(
      ComplexMatrix({da, da_out, db, db_out}, std::move(w)));
}

namespace {

Mat swap_mat(Index d) {
  Mat s = Mat::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) s(i * d + j, j * d + i) = 1.0;
  }
  return s;
}

}  // namespace

ComplexMatrix first_order(const ProcessMatrix& w) {
  if (w.dim_a() != w.dim_a_out() || w.dim_b() != w.dim_b_out()) {
    throw std::invalid_argument("first_order: lab in/out dims must agree");
  }
  // SWAP_AB between (A, B) and their primed copies is SWAP_AA' (x) SWAP_BB'
  // in the (A, A', B, B') factor order.
  const ComplexMatrix swap_a({w.dim_a(), w.dim_a()}, swap_mat(w.dim_a()));
  const ComplexMatrix swap_b({w.dim_b(), w.dim_b()}, swap_mat(w.dim_b()));
  const ComplexMatrix swap_ab = tensor(swap_a, swap_b);
  const ComplexMatrix product(w.matrix().dims(),
                              swap_ab.mat() * w.mat());
  return partial_trace(product, {1, 3});
}

WeakMeasurementResult weak_measurement_check(const ProcessMatrix& w,
                                             const ComplexMatrix& k,
                                             double p) {
  const Index d = w.dim_a() * w.dim_b();
  if (k.total_dim() != d) {
    throw std::invalid_argument("weak_measurement_check: K dims");
  }
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("weak_measurement_check: p outside [0, 1]");
  }
  const Mat kraus = Mat::Identity(d, d) - 0.5 * k.mat();
  const Mat povm = p * (kraus.adjoint() * kraus);
  Eigen::SelfAdjointEigenSolver<Mat> es(povm, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().maxCoeff() > 1.0 + 1e-12) {
    throw std::invalid_argument(
        "weak_measurement_check: POVM element exceeds identity");
  }
  const CpMap m({std::sqrt(p) * kraus}, d, d);
  const Complex exact = born(w, m);
  const Mat w1 = first_order(w).mat();
  const double approx =
      (p * (Mat::Identity(d, d) - k.mat()) * w1).trace().real();
  return WeakMeasurementResult{exact.real(), approx,
                               std::abs(exact.real() - approx)};
}

}  // namespace qsot
