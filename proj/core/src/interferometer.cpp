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

#include "qsot/interferometer.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qsot {

namespace {

constexpr double kDisagreeTol = 1e-8;

void throw_disagreement(const char* where, double dev) {
  std::ostringstream msg;
  msg << where << ": independent interference paths disagree by " << dev;
  throw std::runtime_error(msg.str());
}

}  // namespace

ProbeConfig::ProbeConfig(Complex alpha0, Complex alpha1,
                         StateVector basis_plus, StateVector basis_minus)
    : alpha0_(alpha0),
      alpha1_(alpha1),
      basis_plus_(std::move(basis_plus)),
      basis_minus_(std::move(basis_minus)) {
  if (basis_plus_.total_dim() != 2 || basis_minus_.total_dim() != 2) {
    throw std::invalid_argument("probe measurement basis must be 2-dim");
  }
  const double norm2 = std::norm(alpha0_) + std::norm(alpha1_);
  if (std::abs(norm2 - 1.0) > kConstructTol) {
    throw std::invalid_argument("probe amplitudes are not normalized");
  }
  if (std::abs(basis_plus_.vec().dot(basis_minus_.vec())) > kConstructTol) {
    throw std::invalid_argument("probe basis vectors are not orthogonal");
  }
  const Vec& bp = basis_plus_.vec();
  const Vec& bm = basis_minus_.vec();
  s_plus_ = std::norm(alpha0_ * std::conj(bp(0))) +
            std::norm(alpha1_ * std::conj(bp(1)));
  s_minus_ = std::norm(alpha0_ * std::conj(bm(0))) +
             std::norm(alpha1_ * std::conj(bm(1)));
  a_plus_ = std::conj(alpha0_) * alpha1_ * bp(0) * std::conj(bp(1));
  a_minus_ = std::conj(alpha0_) * alpha1_ * bm(0) * std::conj(bm(1));
}

ProbeConfig ProbeConfig::max_visibility() {
  const double s = 1.0 / std::sqrt(2.0);
  return ProbeConfig(s, s, StateVector({2}, qubit::ket_plus()),
                     StateVector({2}, qubit::ket_minus()));
}

InterferenceRecord make_interference_record(Complex interference,
                                            double prob_plus,
                                            double prob_minus) {
  if (prob_plus < -1e-12 || prob_minus < -1e-12 ||
      std::abs(prob_plus + prob_minus - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "inconsistent outcome probabilities: p+ = " << prob_plus
        << ", p- = " << prob_minus << ", I = " << interference.real() << "+"
        << interference.imag() << "i";
    throw std::runtime_error(msg.str());
  }
  return InterferenceRecord{interference, prob_plus, prob_minus};
}

Complex interference_from_qsot(const Qsot& q, const Intervention& iv) {
  if (static_cast<Index>(iv.size()) != q.regions()) {
    throw std::invalid_argument(
        "intervention count does not match region count");
  }
  Mat op = iv.front().mat();
  Dims dims{iv.front().dim()};
  for (std::size_t k = 1; k < iv.size(); ++k) {
    op = tensor(ComplexMatrix(dims, op),
                ComplexMatrix({iv[k].dim()}, iv[k].mat()))
             .mat();
    dims.push_back(iv[k].dim());
  }
  if (dims != q.region_dims()) {
    throw std::invalid_argument("intervention dims do not match regions");
  }
  return (op * q.mat()).trace();
}

std::pair<double, double> probabilities(const ProbeConfig& probe, Complex i) {
  const double p_plus =
      probe.s_plus() + 2.0 * std::real(probe.a_plus() * i);
  const double p_minus =
      probe.s_minus() + 2.0 * std::real(probe.a_minus() * i);
  return {p_plus, p_minus};
}

namespace {

// Probe measurement on the assembled two-arm superposition
// alpha0 |arm0>|0>_R + alpha1 |arm1>|1>_R: project R onto b+-.
std::pair<double, double> project_probe(const ProbeConfig& probe,
                                        const Vec& arm0, const Vec& arm1) {
  const Vec& bp = probe.basis_plus().vec();
  const Vec& bm = probe.basis_minus().vec();
  const Vec plus = probe.alpha0() * std::conj(bp(0)) * arm0 +
                   probe.alpha1() * std::conj(bp(1)) * arm1;
  const Vec minus = probe.alpha0() * std::conj(bm(0)) * arm0 +
                    probe.alpha1() * std::conj(bm(1)) * arm1;
  return {plus.squaredNorm(), minus.squaredNorm()};
}

struct DilatedState {
  StateVector arm;  // factors (system, environment-of-purification, ancilla)
  Index sys_dim;
  Index env_dim;
  Index anc_dim;
};

// |psi_rho>_{AE} (x) |0>_K with factor order (A, E, K).
DilatedState initial_arm(const DensityOperator& rho, Index anc_dim) {
  const StateVector psi = purify(rho);
  const Index env = psi.dims()[1];
  const StateVector chi = tensor(psi, StateVector::basis(anc_dim, 0));
  return DilatedState{chi, rho.dim(), env, anc_dim};
}

}  // namespace

InterferenceRecord simulate_temporal(const Dynamics& dyn,
                                     const UnitaryMatrix& v,
                                     const UnitaryMatrix& w,
                                     const ProbeConfig& probe) {
  const QuantumChannel& e = dyn.channel;
  if (v.dim() != e.in_dim() || w.dim() != e.out_dim()) {
    throw std::invalid_argument("simulate_temporal: intervention dims");
  }
  // (a) closed form Tr[W E(V rho)].
  const Complex i_a =
      (w.mat() * e.apply_raw(v.mat() * dyn.initial.mat())).trace();
  // (b) left-product trace formula.
  const Complex i_b =
      interference_from_qsot(star_left(e, dyn.initial), {v, w});
  // (c) state-vector simulation.
  const StinespringDilation dil = stinespring(e);
  const DilatedState init = initial_arm(dyn.initial, dil.env_in);
  const Dims u_in{dil.in_dim, dil.env_in};
  const Dims u_out{dil.out_dim, dil.env_out};
  const StateVector arm0 =
      apply_on_factors(dil.unitary, u_in, u_out, {0, 2}, init.arm);
  StateVector arm1 =
      apply_on_factors(v.mat(), {v.dim()}, {v.dim()}, {0}, init.arm);
  arm1 = apply_on_factors(dil.unitary, u_in, u_out, {0, 2}, arm1);
  arm1 = apply_on_factors(w.mat(), {w.dim()}, {w.dim()}, {0}, arm1);
  const Complex i_c = arm0.vec().dot(arm1.vec());

  const double dev = std::max({std::abs(i_a - i_b), std::abs(i_a - i_c),
                               std::abs(i_b - i_c)});
  if (dev > kDisagreeTol) throw_disagreement("simulate_temporal", dev);

  const auto [p_plus, p_minus] = project_probe(probe, arm0.vec(), arm1.vec());
  return make_interference_record(i_c, p_plus, p_minus);
}

InterferenceRecord simulate_spatial(const DensityOperator& rho_ab,
                                    const UnitaryMatrix& v,
                                    const UnitaryMatrix& w,
                                    const ProbeConfig& probe) {
  if (rho_ab.matrix().num_factors() != 2) {
    throw std::invalid_argument("simulate_spatial: state must have two regions");
  }
  const Index da = rho_ab.matrix().dims()[0];
  const Index db = rho_ab.matrix().dims()[1];
  if (v.dim() != da || w.dim() != db) {
    throw std::invalid_argument("simulate_spatial: intervention dims");
  }
  const ComplexMatrix vw = tensor(v.matrix(), w.matrix());
  const Complex i_a = (vw.mat() * rho_ab.mat()).trace();

  const StateVector phi = purify(rho_ab);  // factors (AB, env)
  const Index env = phi.dims()[1];
  const StateVector arm0({da, db, env}, phi.vec());
  StateVector arm1 = apply_on_factors(v.mat(), {da}, {da}, {0}, arm0);
  arm1 = apply_on_factors(w.mat(), {db}, {db}, {1}, arm1);
  const Complex i_c = arm0.vec().dot(arm1.vec());
  if (std::abs(i_a - i_c) > kDisagreeTol) {
    throw_disagreement("simulate_spatial", std::abs(i_a - i_c));
  }
  const auto [p_plus, p_minus] = project_probe(probe, arm0.vec(), arm1.vec());
  return make_interference_record(i_c, p_plus, p_minus);
}

InterferenceRecord simulate_time_reversed(const Dynamics& dyn,
                                          const UnitaryMatrix& v,
                                          const UnitaryMatrix& w,
                                          const ProbeConfig& probe) {
  return simulate_time_reversed(dyn, v, w, probe, stinespring(dyn.channel));
}

InterferenceRecord simulate_time_reversed(const Dynamics& dyn,
                                          const UnitaryMatrix& v,
                                          const UnitaryMatrix& w,
                                          const ProbeConfig& probe,
                                          const StinespringDilation& dilation) {
  const QuantumChannel& e = dyn.channel;
  if (v.dim() != e.in_dim() || w.dim() != e.out_dim()) {
    throw std::invalid_argument("simulate_time_reversed: intervention dims");
  }
  if (dilation.in_dim != e.in_dim() || dilation.out_dim != e.out_dim()) {
    throw std::invalid_argument("simulate_time_reversed: dilation dims");
  }
  const DilatedState init = initial_arm(dyn.initial, dilation.env_in);
  const Dims u_in{dilation.in_dim, dilation.env_in};
  const Dims u_out{dilation.out_dim, dilation.env_out};
  const auto dilate = [&](const StateVector& s) {
    return apply_on_factors(dilation.unitary, u_in, u_out, {0, 2}, s);
  };
  // Forward orientation: <U psi0 | W U V psi0>.
  const StateVector fwd0 = dilate(init.arm);
  StateVector fwd1 =
      apply_on_factors(v.mat(), {v.dim()}, {v.dim()}, {0}, init.arm);
  fwd1 = dilate(fwd1);
  fwd1 = apply_on_factors(w.mat(), {w.dim()}, {w.dim()}, {0}, fwd1);
  const Complex i_fwd = fwd0.vec().dot(fwd1.vec());
  // Reversed orientation: <U V^dag psi0 | W U psi0> = Tr[W E(rho V)].
  StateVector rev0 = apply_on_factors(v.mat().adjoint().eval(), {v.dim()},
                                      {v.dim()}, {0}, init.arm);
  rev0 = dilate(rev0);
  const StateVector rev1 =
      apply_on_factors(w.mat(), {w.dim()}, {w.dim()}, {0}, fwd0);
  const Complex i_rev = rev0.vec().dot(rev1.vec());

  const Complex i_mix = 0.5 * (i_fwd + i_rev);
  const Complex i_fp = interference_from_qsot(star_fp(e, dyn.initial), {v, w});
  const Complex i_right =
      interference_from_qsot(star_right(e, dyn.initial), {v, w});
  if (std::abs(i_mix - i_fp) > kDisagreeTol) {
    throw_disagreement("simulate_time_reversed (FP)", std::abs(i_mix - i_fp));
  }
  if (std::abs(i_rev - i_right) > kDisagreeTol) {
    throw_disagreement("simulate_time_reversed (right)",
                       std::abs(i_rev - i_right));
  }
  const auto [p_plus, p_minus] = probabilities(probe, i_mix);
  return make_interference_record(i_mix, p_plus, p_minus);
}

std::pair<ComplexMatrix, ComplexMatrix> povm_elements(const ProbeConfig& probe,
                                                      const UnitaryMatrix& v,
                                                      const UnitaryMatrix& w) {
  const ComplexMatrix vw = tensor(v.matrix(), w.matrix());
  const ComplexMatrix one = ComplexMatrix::identity(vw.dims());
  const auto element = [&](double s, Complex a) {
    return hermitian_part(
        ComplexMatrix(vw.dims(), s * one.mat() + 2.0 * a * vw.mat()));
  };
  return {element(probe.s_plus(), probe.a_plus()),
          element(probe.s_minus(), probe.a_minus())};
}

std::pair<std::int64_t, std::int64_t> sample(const InterferenceRecord& record,
                                             std::int64_t shots, Rng& rng) {
  if (shots < 0) throw std::invalid_argument("sample: negative shot count");
  double p = record.prob_plus;
  if (p < -1e-12 || p > 1.0 + 1e-12) {
    throw std::invalid_argument("sample: probability outside [0, 1]");
  }
  p = std::min(1.0, std::max(0.0, p));
  const std::int64_t n_plus = binomial(shots, p, rng);
  return {n_plus, shots - n_plus};
}

}  // namespace qsot
