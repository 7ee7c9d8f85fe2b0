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

#include "qsot/tomography.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsot {

std::vector<UnitaryMatrix> weyl_basis(Index d) {
  if (d < 2) throw std::invalid_argument("weyl_basis: dimension must be >= 2");
  std::vector<UnitaryMatrix> basis;
  basis.reserve(d * d);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(d);
  for (Index p = 0; p < d; ++p) {
    for (Index q = 0; q < d; ++q) {
      Mat w = Mat::Zero(d, d);
      for (Index k = 0; k < d; ++k) {
        w((k + q) % d, k) = std::polar(1.0, step * static_cast<double>(p * k));
      }
      basis.emplace_back(ComplexMatrix({d}, std::move(w)));
    }
  }
  return basis;
}

ExactOracle make_qsot_oracle(const Qsot& q) {
  return [q](const Intervention& iv) { return interference_from_qsot(q, iv); };
}

NoisyOracle make_noisy_qsot_oracle(const Qsot& q) {
  return [q](const Intervention& iv, std::int64_t shots, Rng& rng) {
    const Complex i = interference_from_qsot(q, iv);
    const auto [p_plus, p_minus] =
        probabilities(ProbeConfig::max_visibility(), i);
    const auto record = make_interference_record(i, p_plus, p_minus);
    return sample(record, shots, rng);
  };
}

namespace {

struct BasisTuples {
  std::vector<std::vector<UnitaryMatrix>> per_region;
  Dims radices;  // d_i^2 per region
  Index count;   // prod d_i^2
};

BasisTuples enumerate_bases(const Dims& region_dims) {
  BasisTuples out;
  out.count = 1;
  for (Index d : region_dims) {
    out.per_region.push_back(weyl_basis(d));
    out.radices.push_back(d * d);
    out.count *= d * d;
  }
  return out;
}

Intervention tuple_intervention(const BasisTuples& bt,
                                const std::vector<Index>& digits) {
  Intervention iv;
  iv.reserve(digits.size());
  for (std::size_t r = 0; r < digits.size(); ++r) {
    iv.push_back(bt.per_region[r][digits[r]]);
  }
  return iv;
}

Mat tuple_operator(const Intervention& iv) {
  Mat op = iv.front().mat();
  for (std::size_t k = 1; k < iv.size(); ++k) {
    Mat next(op.rows() * iv[k].dim(), op.cols() * iv[k].dim());
    for (Index i = 0; i < op.rows(); ++i) {
      for (Index j = 0; j < op.cols(); ++j) {
        next.block(i * iv[k].dim(), j * iv[k].dim(), iv[k].dim(),
                   iv[k].dim()) = op(i, j) * iv[k].mat();
      }
    }
    op = std::move(next);
  }
  return op;
}

}  // namespace

Qsot reconstruct(const ExactOracle& oracle, const Dims& region_dims) {
  const BasisTuples bt = enumerate_bases(region_dims);
  const Index total = product_dim(region_dims);
  Mat acc = Mat::Zero(total, total);
  for (Index t = 0; t < bt.count; ++t) {
    const auto digits = mixed_radix_digits(t, bt.radices);
    const Intervention iv = tuple_intervention(bt, digits);
    const Complex i = oracle(iv);
    acc += i * tuple_operator(iv).adjoint();
  }
  acc /= static_cast<double>(total);
  return Qsot(ComplexMatrix(region_dims, std::move(acc)),
              Provenance::kReconstructed);
}

NoisyReconstruction reconstruct_noisy(const NoisyOracle& oracle,
                                      const Dims& region_dims,
                                      std::int64_t shots_per_setting,
                                      Rng& rng) {
  if (shots_per_setting <= 0) {
    throw std::invalid_argument("reconstruct_noisy: needs a shot budget");
  }
  const BasisTuples bt = enumerate_bases(region_dims);
  const Index total = product_dim(region_dims);
  Mat acc = Mat::Zero(total, total);
  Mat var = Mat::Zero(total, total);  // accumulated per-entry variance
  // One fresh stream per call so repeated reconstructions with the same
  // generator see independent noise; per-setting children keep each tuple
  // deterministic and parallelizable.
  Rng call_rng = rng.split(rng.next_u64());
  for (Index t = 0; t < bt.count; ++t) {
    const auto digits = mixed_radix_digits(t, bt.radices);
    const Intervention iv = tuple_intervention(bt, digits);
    const Mat op_dag = tuple_operator(iv).adjoint();
    Complex i_est;
    double sigma2 = 0.0;
    bool all_identity = true;
    for (Index d : digits) all_identity = all_identity && (d == 0);
    if (all_identity) {
      // Normalization is fixed by trivial interventions; no shots spent.
      i_est = Complex(1.0, 0.0);
    } else {
      Rng rng_re = call_rng.split(2 * static_cast<std::uint64_t>(t));
      Rng rng_im = call_rng.split(2 * static_cast<std::uint64_t>(t) + 1);
      const auto [np_re, nm_re] = oracle(iv, shots_per_setting, rng_re);
      const double p_re =
          static_cast<double>(np_re) / static_cast<double>(shots_per_setting);
      // Phase trick: i V is unitary and rotates I by i, so the + outcome of
      // the rotated run estimates -Im I.
      Intervention iv_rot = iv;
      iv_rot[0] = UnitaryMatrix(
          ComplexMatrix(iv[0].matrix().dims(), Complex(0.0, 1.0) * iv[0].mat()));
      const auto [np_im, nm_im] = oracle(iv_rot, shots_per_setting, rng_im);
      const double p_im =
          static_cast<double>(np_im) / static_cast<double>(shots_per_setting);
      i_est = Complex(2.0 * p_re - 1.0, -(2.0 * p_im - 1.0));
      sigma2 = 4.0 * (p_re * (1.0 - p_re) + p_im * (1.0 - p_im)) /
               static_cast<double>(shots_per_setting);
    }
    acc += i_est * op_dag;
    var += sigma2 * op_dag.cwiseAbs2();
  }
  const double scale = 1.0 / static_cast<double>(total);
  acc *= scale;
  var *= scale * scale;
  const double max_sigma = std::sqrt(var.real().maxCoeff());
  Qsot state(ComplexMatrix(region_dims, std::move(acc)),
             Provenance::kReconstructed);
  return NoisyReconstruction{std::move(state), max_sigma, max_sigma > 0.25,
                             shots_per_setting, 2 * (bt.count - 1)};
}

}  // namespace qsot
