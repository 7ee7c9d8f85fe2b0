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

#include "qsot/agnostic.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace qsot {

CommutatorCheck commutator_check(const ComplexMatrix& h_xr,
                                 const ComplexMatrix& h_yr, Index dim_x,
                                 Index dim_y, Index dim_r, double tol) {
  if (h_xr.total_dim() != dim_x * dim_r || h_yr.total_dim() != dim_y * dim_r) {
    throw std::invalid_argument("commutator_check: dimension mismatch");
  }
  if (!h_xr.is_hermitian(kDefaultTol) || !h_yr.is_hermitian(kDefaultTol)) {
    throw std::invalid_argument("commutator_check: inputs must be Hermitian");
  }
  const Dims full{dim_x, dim_y, dim_r};
  const Mat a =
      embed_operator(h_xr.with_dims({dim_x, dim_r}), {0, 2}, full).mat();
  const Mat b =
      embed_operator(h_yr.with_dims({dim_y, dim_r}), {1, 2}, full).mat();
  const double norm = (a * b - b * a).norm();
  return CommutatorCheck{norm <= tol, norm};
}

bool controlled_unitary_check(const UnitaryMatrix& u,
                              const std::vector<ComplexMatrix>& sectors,
                              Index dim_x, Index dim_r, double tol) {
  if (u.dim() != dim_x * dim_r) {
    throw std::invalid_argument("controlled_unitary_check: U dims");
  }
  if (sectors.empty()) {
    throw std::invalid_argument("controlled_unitary_check: no sectors");
  }
  Mat sum = Mat::Zero(dim_r, dim_r);
  for (const ComplexMatrix& p : sectors) {
    if (p.total_dim() != dim_r) {
      throw std::invalid_argument("controlled_unitary_check: sector dims");
    }
    if (!p.is_hermitian(kDefaultTol) ||
        (p.mat() * p.mat() - p.mat()).cwiseAbs().maxCoeff() > kDefaultTol) {
      throw std::invalid_argument(
          "controlled_unitary_check: sector is not a projector");
    }
    sum += p.mat();
  }
  if ((sum - Mat::Identity(dim_r, dim_r)).cwiseAbs().maxCoeff() > kDefaultTol) {
    throw std::invalid_argument(
        "controlled_unitary_check: sector family is incomplete");
  }
  for (std::size_t i = 0; i < sectors.size(); ++i) {
    for (std::size_t j = i + 1; j < sectors.size(); ++j) {
      if ((sectors[i].mat() * sectors[j].mat()).cwiseAbs().maxCoeff() >
          kDefaultTol) {
        throw std::invalid_argument(
            "controlled_unitary_check: sectors are not orthogonal");
      }
    }
  }

  const Dims full{dim_x, dim_r};
  std::vector<Mat> lifted;
  lifted.reserve(sectors.size());
  for (const ComplexMatrix& p : sectors) {
    lifted.push_back(
        embed_operator(ComplexMatrix({dim_r}, p.mat()), {1}, full).mat());
  }
  // Cross-sector blocks must vanish.
  for (std::size_t i = 0; i < sectors.size(); ++i) {
    for (std::size_t j = 0; j < sectors.size(); ++j) {
      if (i == j) continue;
      if ((lifted[i] * u.mat() * lifted[j]).cwiseAbs().maxCoeff() > tol) {
        return false;
      }
    }
  }
  // Each diagonal block must factorize as U_i (x) P_i with U_i unitary.
  for (std::size_t i = 0; i < sectors.size(); ++i) {
    const double rank = sectors[i].mat().trace().real();
    if (rank < 0.5) continue;  // zero projector contributes nothing
    const ComplexMatrix block(full, lifted[i] * u.mat() * lifted[i]);
    const Mat u_i = partial_trace(block, {0}).mat() / rank;
    const Mat rebuilt =
        Eigen::kroneckerProduct(u_i, sectors[i].mat()).eval();
    if ((block.mat() - rebuilt).cwiseAbs().maxCoeff() > tol) return false;
    if ((u_i.adjoint() * u_i - Mat::Identity(dim_x, dim_x))
            .cwiseAbs()
            .maxCoeff() > tol) {
      return false;
    }
  }
  return true;
}

ComplexMatrix principal_log_generator(const UnitaryMatrix& u, double margin) {
  Eigen::ComplexSchur<Mat> schur(u.mat());
  if (schur.info() != Eigen::Success) {
    throw std::runtime_error("principal_log_generator: Schur failed");
  }
  const Mat& t = schur.matrixT();
  const Mat& q = schur.matrixU();
  const Index d = u.dim();
  Vec phases(d);
  for (Index k = 0; k < d; ++k) {
    const Complex lambda = t(k, k);
    if (std::abs(lambda + Complex(1.0, 0.0)) < margin) {
      throw std::runtime_error(
          "principal_log_generator: spectrum too close to -1 for the "
          "principal branch");
    }
    phases(k) = -std::arg(lambda);
  }
  Mat h = q * phases.asDiagonal() * q.adjoint();
  h = 0.5 * (h + h.adjoint()).eval();
  return ComplexMatrix(u.matrix().dims(), std::move(h));
}

}  // namespace qsot
