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

#include "qsot/products.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qsot {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::kLeft: return "left";
    case Provenance::kRight: return "right";
    case Provenance::kFp: return "fp";
    case Provenance::kMixture: return "mixture";
    case Provenance::kReconstructed: return "reconstructed";
    case Provenance::kOther: return "other";
  }
  return "other";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "left") return Provenance::kLeft;
  if (s == "right") return Provenance::kRight;
  if (s == "fp") return Provenance::kFp;
  if (s == "mixture") return Provenance::kMixture;
  if (s == "reconstructed") return Provenance::kReconstructed;
  if (s == "other") return Provenance::kOther;
  throw std::invalid_argument("unknown provenance tag: " + s);
}

Qsot::Qsot(ComplexMatrix matrix, Provenance provenance)
    : m_(std::move(matrix)), provenance_(provenance) {
  if (std::abs(m_.trace() - Complex(1.0, 0.0)) > kDefaultTol) {
    throw std::invalid_argument("state over time must have unit trace");
  }
  if (provenance_ == Provenance::kFp && !m_.is_hermitian(kDefaultTol)) {
    throw std::invalid_argument("FP-tagged state must be Hermitian");
  }
}

namespace {

// (x (x) 1_B) and 1_{first regions} (x) J[E] with the channel attached to
// the last factor of x.
std::pair<Mat, Mat> star_factors(const QuantumChannel& e,
                                 const ComplexMatrix& x) {
  const Dims& dims = x.dims();
  const Index last = x.num_factors() - 1;
  if (dims[last] != e.in_dim()) {
    throw std::invalid_argument(
        "star product: channel input does not match the last region");
  }
  Dims full = dims;
  full.push_back(e.out_dim());
  const Mat lifted_x =
      tensor(x, ComplexMatrix::identity({e.out_dim()})).mat();
  const Mat lifted_j =
      embed_operator(e.jamiolkowski(), {last, last + 1}, full).mat();
  return {lifted_x, lifted_j};
}

Dims star_dims(const QuantumChannel& e, const ComplexMatrix& x) {
  Dims full = x.dims();
  full.push_back(e.out_dim());
  return full;
}

}  // namespace

ComplexMatrix star_left_op(const QuantumChannel& e, const ComplexMatrix& x) {
  auto [xm, jm] = star_factors(e, x);
  return ComplexMatrix(star_dims(e, x), xm * jm);
}

ComplexMatrix star_right_op(const QuantumChannel& e, const ComplexMatrix& x) {
  auto [xm, jm] = star_factors(e, x);
  return ComplexMatrix(star_dims(e, x), jm * xm);
}

ComplexMatrix star_fp_op(const QuantumChannel& e, const ComplexMatrix& x) {
  auto [xm, jm] = star_factors(e, x);
  return ComplexMatrix(star_dims(e, x), 0.5 * (xm * jm + jm * xm));
}

ComplexMatrix star_op(ProductKind kind, const QuantumChannel& e,
                      const ComplexMatrix& x) {
  switch (kind) {
    case ProductKind::kLeft: return star_left_op(e, x);
    case ProductKind::kRight: return star_right_op(e, x);
    case ProductKind::kFp: return star_fp_op(e, x);
  }
  throw std::logic_error("unreachable");
}

Qsot star_left(const QuantumChannel& e, const DensityOperator& rho) {
  return Qsot(star_left_op(e, rho.matrix()), Provenance::kLeft);
}
Qsot star_left(const QuantumChannel& e, const Qsot& x) {
  return Qsot(star_left_op(e, x.matrix()), Provenance::kLeft);
}
Qsot star_right(const QuantumChannel& e, const DensityOperator& rho) {
  return Qsot(star_right_op(e, rho.matrix()), Provenance::kRight);
}
Qsot star_right(const QuantumChannel& e, const Qsot& x) {
  return Qsot(star_right_op(e, x.matrix()), Provenance::kRight);
}
Qsot star_fp(const QuantumChannel& e, const DensityOperator& rho) {
  return Qsot(star_fp_op(e, rho.matrix()), Provenance::kFp);
}
Qsot star_fp(const QuantumChannel& e, const Qsot& x) {
  return Qsot(star_fp_op(e, x.matrix()), Provenance::kFp);
}

Qsot star(ProductKind kind, const QuantumChannel& e,
          const DensityOperator& rho) {
  switch (kind) {
    case ProductKind::kLeft: return star_left(e, rho);
    case ProductKind::kRight: return star_right(e, rho);
    case ProductKind::kFp: return star_fp(e, rho);
  }
  throw std::logic_error("unreachable");
}

Qsot star(ProductKind kind, const QuantumChannel& e, const Qsot& x) {
  switch (kind) {
    case ProductKind::kLeft: return star_left(e, x);
    case ProductKind::kRight: return star_right(e, x);
    case ProductKind::kFp: return star_fp(e, x);
  }
  throw std::logic_error("unreachable");
}

Qsot mix(const std::vector<double>& weights, const std::vector<Qsot>& qsots) {
  if (weights.size() != qsots.size() || qsots.empty()) {
    throw std::invalid_argument("mix: weights and states must pair up");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("mix: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("mix: weights must sum to 1");
  }
  const Dims& dims = qsots.front().region_dims();
  Mat acc = Mat::Zero(qsots.front().mat().rows(), qsots.front().mat().cols());
  for (std::size_t i = 0; i < qsots.size(); ++i) {
    if (qsots[i].region_dims() != dims) {
      throw std::invalid_argument("mix: region dimension mismatch");
    }
    acc += weights[i] * qsots[i].mat();
  }
  return Qsot(ComplexMatrix(dims, std::move(acc)), Provenance::kMixture);
}

Qsot markov_chain(const DensityOperator& rho,
                  const std::vector<QuantumChannel>& channels,
                  ProductKind kind) {
  if (channels.empty()) {
    throw std::invalid_argument("markov_chain: needs at least one channel");
  }
  Qsot q = star(kind, channels.front(), rho);
  for (std::size_t i = 1; i < channels.size(); ++i) {
    q = star(kind, channels[i], q);
  }
  return q;
}

double synchronization_gap(const QuantumChannel& e, const QuantumChannel& f,
                           const DensityOperator& rho,
                           const DensityOperator& sigma, ProductKind kind) {
  const QuantumChannel joint = tensor(e, f);
  const ComplexMatrix joint_state =
      tensor(rho.matrix(), sigma.matrix()).with_dims({rho.dim() * sigma.dim()});
  // Joint product on regions (A_X A_Y, B_X B_Y), refined to four factors.
  const ComplexMatrix lhs =
      star_op(kind, joint, joint_state)
          .with_dims({rho.dim(), sigma.dim(), e.out_dim(), f.out_dim()});
  // Independent products on (A_X, B_X) (x) (A_Y, B_Y), reordered to match.
  const ComplexMatrix rhs = permute_factors(
      tensor(star_op(kind, e, rho.matrix()), star_op(kind, f, sigma.matrix())),
      {0, 2, 1, 3});
  return frobenius_distance(lhs, rhs);
}

FactorizedEnsemble factorize_in_larger_space(
    const std::vector<double>& weights, const std::vector<Dynamics>& dynamics,
    ProductKind kind) {
  if (weights.size() != dynamics.size() || dynamics.empty()) {
    throw std::invalid_argument("factorize: weights and dynamics must pair up");
  }
  const Index d_in = dynamics.front().channel.in_dim();
  const Index d_out = dynamics.front().channel.out_dim();
  const Index r = static_cast<Index>(dynamics.size());
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("factorize: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("factorize: weights must sum to 1");
  }
  // Flag-controlled channel sum_i F_i (x) (|i><i| . |i><i|).
  std::vector<Mat> kraus;
  for (Index i = 0; i < r; ++i) {
    const Dynamics& dyn = dynamics[i];
    if (dyn.channel.in_dim() != d_in || dyn.channel.out_dim() != d_out) {
      throw std::invalid_argument("factorize: mixed channel dimensions");
    }
    Mat flag = Mat::Zero(r, r);
    flag(i, i) = 1.0;
    for (const Mat& k : dyn.channel.kraus()) {
      Mat lifted(d_out * r, d_in * r);
      lifted.setZero();
      for (Index a = 0; a < d_out; ++a) {
        for (Index b = 0; b < d_in; ++b) {
          lifted.block(a * r, b * r, r, r) = k(a, b) * flag;
        }
      }
      kraus.push_back(std::move(lifted));
    }
  }
  QuantumChannel flagged(std::move(kraus), d_in * r, d_out * r);
  // Flagged initial state sum_j p_j rho_j (x) |j><j|.
  Mat init = Mat::Zero(d_in * r, d_in * r);
  for (Index j = 0; j < r; ++j) {
    const Mat& rho = dynamics[j].initial.mat();
    for (Index a = 0; a < d_in; ++a) {
      for (Index b = 0; b < d_in; ++b) {
        init(a * r + j, b * r + j) += weights[j] * rho(a, b);
      }
    }
  }
  DensityOperator flagged_init(ComplexMatrix({d_in * r}, std::move(init)));
  Qsot enlarged = star(kind, flagged, flagged_init);
  return FactorizedEnsemble{
      Dynamics(std::move(flagged_init), std::move(flagged)),
      std::move(enlarged), d_in, d_out, r};
}

Qsot flag_traced_marginal(const FactorizedEnsemble& fe) {
  const ComplexMatrix refined = fe.qsot.matrix().with_dims(
      {fe.system_in, fe.flag_dim, fe.system_out, fe.flag_dim});
  return Qsot(partial_trace(refined, {0, 2}), Provenance::kMixture);
}

}  // namespace qsot
