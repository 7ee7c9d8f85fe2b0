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

#include "qsot/compass.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qsot/tomography.hpp"

namespace qsot {

Qsot compass_qsot(const CompassSetup& s) {
  const QuantumChannel joint =
      tensor(s.dynamics.channel, QuantumChannel::identity(2));
  const ComplexMatrix init =
      tensor(s.dynamics.initial.matrix(),
             ComplexMatrix({2}, qubit::ket0() * qubit::ket0().adjoint()))
          .with_dims({s.dynamics.initial.dim() * 2});
  ComplexMatrix fp = star_fp_op(joint, init);
  return Qsot(std::move(fp), Provenance::kFp);
}

std::pair<UnitaryMatrix, UnitaryMatrix> compass_interventions(
    const UnitaryMatrix& v, const UnitaryMatrix& w) {
  Mat flip01 = Mat::Zero(2, 2);  // |1><0|
  flip01(1, 0) = 1.0;
  Mat flip10 = Mat::Zero(2, 2);  // |0><1|
  flip10(0, 1) = 1.0;
  const auto dressed = [](const Mat& u, const Mat& c_fwd, const Mat& c_bwd) {
    const Index d = u.rows();
    Mat out = Mat::Zero(d * 2, d * 2);
    for (Index a = 0; a < d; ++a) {
      for (Index b = 0; b < d; ++b) {
        out.block(a * 2, b * 2, 2, 2) =
            u(a, b) * c_fwd + std::conj(u(b, a)) * c_bwd;
      }
    }
    return out;
  };
  const Index dv = v.dim();
  const Index dw = w.dim();
  Mat vt = dressed(v.mat(), flip01, flip10);
  Mat wt = dressed(w.mat(), flip10, flip01);
  return {UnitaryMatrix(ComplexMatrix({dv * 2}, std::move(vt))),
          UnitaryMatrix(ComplexMatrix({dw * 2}, std::move(wt)))};
}

double compass_interference(const CompassSetup& s, const UnitaryMatrix& v,
                            const UnitaryMatrix& w) {
  const auto [vt, wt] = compass_interventions(v, w);
  const Complex raw = interference_from_qsot(compass_qsot(s), {vt, wt});
  const Complex reference =
      interference_from_qsot(star_left(s.dynamics.channel, s.dynamics.initial),
                             {v, w});
  if (std::abs(raw.imag()) > kDefaultTol ||
      std::abs(raw.real() - reference.real()) > kDefaultTol) {
    std::ostringstream msg;
    msg << "compass_interference: internal disagreement (imag " << raw.imag()
        << ", delta " << std::abs(raw.real() - reference.real()) << ")";
    throw std::runtime_error(msg.str());
  }
  return raw.real();
}

double compass_interference(const std::vector<double>& weights,
                            const std::vector<CompassSetup>& setups,
                            const UnitaryMatrix& v, const UnitaryMatrix& w) {
  if (weights.size() != setups.size() || setups.empty()) {
    throw std::invalid_argument("compass mixture: weights/setups mismatch");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < setups.size(); ++i) {
    acc += weights[i] * compass_interference(setups[i], v, w);
  }
  return acc;
}

CompassRuns make_compass_runs(const CompassSetup& s) {
  return [s](const UnitaryMatrix& v, const UnitaryMatrix& w) {
    return compass_interference(s, v, w);
  };
}

CompassRuns make_compass_runs(std::vector<double> weights,
                              std::vector<CompassSetup> setups) {
  return [weights = std::move(weights), setups = std::move(setups)](
             const UnitaryMatrix& v, const UnitaryMatrix& w) {
    return compass_interference(weights, setups, v, w);
  };
}

Qsot compass_recover_left(const CompassRuns& runs,
                          const std::vector<UnitaryMatrix>& basis_a,
                          const std::vector<UnitaryMatrix>& basis_b) {
  if (basis_a.empty() || basis_b.empty()) {
    throw std::invalid_argument("compass_recover_left: empty basis");
  }
  const Index da = basis_a.front().dim();
  const Index db = basis_b.front().dim();
  const Index n = da * db;
  const Index rows = static_cast<Index>(basis_a.size() * basis_b.size());
  if (rows < n * n) {
    throw std::invalid_argument("compass_recover_left: basis cannot span");
  }
  // Tr[(V (x) W) L] = vec((V (x) W)^T) . vec(L) row by row.
  Mat g(rows, n * n);
  Vec c(rows);
  Index row = 0;
  for (const UnitaryMatrix& va : basis_a) {
    for (const UnitaryMatrix& wb : basis_b) {
      const Mat m = tensor(va.matrix(), wb.matrix()).mat();
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) g(row, i * n + j) = m(j, i);
      }
      const double re = runs(va, wb);
      const UnitaryMatrix va_rot(
          ComplexMatrix(va.matrix().dims(), Complex(0.0, 1.0) * va.mat()));
      const double neg_im = runs(va_rot, wb);
      c(row) = Complex(re, -neg_im);
      ++row;
    }
  }
  Eigen::ColPivHouseholderQR<Mat> qr(g);
  qr.setThreshold(1e-9);
  if (qr.rank() < n * n) {
    throw std::invalid_argument(
        "compass_recover_left: basis does not span the operator space");
  }
  const Vec x = qr.solve(c);
  Mat l(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) l(i, j) = x(i * n + j);
  }
  return Qsot(ComplexMatrix({da, db}, std::move(l)),
              Provenance::kReconstructed);
}

Qsot compass_recover_left(const CompassSetup& s) {
  return compass_recover_left(make_compass_runs(s),
                              weyl_basis(s.dynamics.channel.in_dim()),
                              weyl_basis(s.dynamics.channel.out_dim()));
}

}  // namespace qsot
