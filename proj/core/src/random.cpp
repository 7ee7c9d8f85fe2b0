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

#include "qsot/random.hpp"

#include <cmath>

namespace qsot {

namespace {

Mat ginibre(Index rows, Index cols, Rng& rng) {
  Mat g(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      g(i, j) = Complex(rng.gaussian(), rng.gaussian());
    }
  }
  return g;
}

}  // namespace

UnitaryMatrix random_unitary(Index dim, Rng& rng) {
  const Mat g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    const double a = std::abs(d);
    q.col(k) *= (a > 0) ? d / a : Complex(1.0, 0.0);
  }
  return UnitaryMatrix(ComplexMatrix({dim}, std::move(q)));
}

DensityOperator random_density(Index dim, Rng& rng) {
  const Mat g = ginibre(dim, dim, rng);
  Mat rho = g * g.adjoint();
  rho /= rho.trace();
  // Symmetrize away the last bits of float asymmetry.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityOperator(ComplexMatrix({dim}, std::move(rho)));
}

QuantumChannel random_channel(Index in_dim, Index out_dim, Index kraus_count,
                              Rng& rng) {
  std::vector<Mat> kraus;
  kraus.reserve(kraus_count);
  for (Index k = 0; k < kraus_count; ++k) {
    kraus.push_back(ginibre(out_dim, in_dim, rng));
  }
  Mat s = Mat::Zero(in_dim, in_dim);
  for (const Mat& k : kraus) s += k.adjoint() * k;
  Eigen::SelfAdjointEigenSolver<Mat> es(s);
  const Mat s_inv_sqrt = es.operatorInverseSqrt();
  for (Mat& k : kraus) k = k * s_inv_sqrt;
  return QuantumChannel(std::move(kraus), in_dim, out_dim);
}

StateVector random_state(Index dim, Rng& rng) {
  Vec v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = Complex(rng.gaussian(), rng.gaussian());
  v /= v.norm();
  return StateVector({dim}, std::move(v));
}

}  // namespace qsot
