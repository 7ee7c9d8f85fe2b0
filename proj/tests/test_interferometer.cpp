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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <numbers>

#include "qsot/random.hpp"

using namespace qsot;

namespace {

constexpr double kPi = std::numbers::pi;

DensityOperator ket_state(const Vec& v) {
  return DensityOperator(ComplexMatrix({2}, v * v.adjoint()));
}

UnitaryMatrix pauli(const Mat& m) { return UnitaryMatrix(ComplexMatrix({2}, m)); }

ProbeConfig random_probe(Rng& rng) {
  const UnitaryMatrix basis = random_unitary(2, rng);
  Complex a0(rng.gaussian(), rng.gaussian());
  Complex a1(rng.gaussian(), rng.gaussian());
  const double n = std::sqrt(std::norm(a0) + std::norm(a1));
  a0 /= n;
  a1 /= n;
  return ProbeConfig(a0, a1, StateVector({2}, basis.mat().col(0)),
                     StateVector({2}, basis.mat().col(1)));
}

}  // namespace

TEST_CASE("probe coefficient identities") {
  Rng rng(1);
  for (int it = 0; it < 500; ++it) {
    const ProbeConfig p = random_probe(rng);
    REQUIRE(p.s_plus() + p.s_minus() == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(std::abs(p.a_plus() + p.a_minus()) < 1e-12);
    REQUIRE(std::abs(p.a_plus()) <= 0.25 + 1e-12);
    REQUIRE(p.s_plus() >= 2.0 * std::abs(p.a_plus()) - 1e-12);
    REQUIRE(p.s_minus() >= 2.0 * std::abs(p.a_minus()) - 1e-12);
  }
  const ProbeConfig mv = ProbeConfig::max_visibility();
  REQUIRE(mv.s_plus() == Catch::Approx(0.5));
  REQUIRE(mv.a_plus().real() == Catch::Approx(0.25));
  REQUIRE(std::abs(mv.a_plus().imag()) < 1e-15);
}

TEST_CASE("probabilities from the interference term") {
  const ProbeConfig mv = ProbeConfig::max_visibility();
  const auto [p1, m1] = probabilities(mv, Complex(1, 0));
  REQUIRE(p1 == Catch::Approx(1.0));
  REQUIRE(m1 == Catch::Approx(0.0).margin(1e-15));
  const auto [pi, mi] = probabilities(mv, Complex(0, 1));
  REQUIRE(pi == Catch::Approx(0.5));
  REQUIRE(mi == Catch::Approx(0.5));
  // Generic check of Pr(+-) = (1 +- Re I)/2 at max visibility.
  const Complex i(0.3, -0.8);
  const auto [pp, pm] = probabilities(mv, i);
  REQUIRE(pp == Catch::Approx((1 + i.real()) / 2));
  REQUIRE(pm == Catch::Approx((1 - i.real()) / 2));
}

TEST_CASE("interference from a state over time") {
  const Qsot q = star_left(QuantumChannel::identity(2),
                           ket_state(qubit::ket0()));
  REQUIRE(std::abs(interference_from_qsot(q, {pauli(qubit::z()),
                                              pauli(qubit::z())}) -
                   Complex(1, 0)) < 1e-14);
  REQUIRE(std::abs(interference_from_qsot(q, {pauli(qubit::x()),
                                              pauli(qubit::x())}) -
                   Complex(1, 0)) < 1e-14);
  Rng rng(12);
  for (int it = 0; it < 20; ++it) {
    const Qsot r = star_left(random_channel(2, 2, 2, rng),
                             random_density(2, rng));
    REQUIRE(std::abs(interference_from_qsot(
                         r, {pauli(qubit::id()), pauli(qubit::id())}) -
                     Complex(1, 0)) < 1e-12);
  }
  REQUIRE_THROWS_AS(interference_from_qsot(q, {pauli(qubit::z())}),
                    std::invalid_argument);
}

TEST_CASE("temporal simulation frozen values") {
  const ProbeConfig mv = ProbeConfig::max_visibility();
  const UnitaryMatrix one = pauli(qubit::id());

  // Trivial interventions: I = 1, p+ = 1.
  const auto r1 = simulate_temporal(
      Dynamics(ket_state(qubit::ket0()), QuantumChannel::identity(2)), one,
      one, mv);
  REQUIRE(std::abs(r1.interference - Complex(1, 0)) < 1e-12);
  REQUIRE(r1.prob_plus == Catch::Approx(1.0).margin(1e-12));

  // Bit-flip channel: Tr[X |1><1|] = 0.
  const auto r2 = simulate_temporal(
      Dynamics(ket_state(qubit::ket0()), QuantumChannel::pauli_x()), one,
      pauli(qubit::x()), mv);
  REQUIRE(std::abs(r2.interference) < 1e-12);

  // Tr[Z |1><1|] = -1 for the same dynamics.
  const auto r3 = simulate_temporal(
      Dynamics(ket_state(qubit::ket0()), QuantumChannel::pauli_x()), one,
      pauli(qubit::z()), mv);
  REQUIRE(std::abs(r3.interference - Complex(-1, 0)) < 1e-12);

  // Hadamard-basis state: Tr[X Z |+><+|] = 0 and Tr[Z Z |+><+|] = 1,
  // both frozen from a by-hand 2x2 contraction.
  const Dynamics plus_id(ket_state(qubit::ket_plus()),
                         QuantumChannel::identity(2));
  const auto r4 = simulate_temporal(plus_id, pauli(qubit::z()),
                                    pauli(qubit::x()), mv);
  REQUIRE(std::abs(r4.interference) < 1e-12);
  const auto r5 = simulate_temporal(plus_id, pauli(qubit::z()),
                                    pauli(qubit::z()), mv);
  REQUIRE(std::abs(r5.interference - Complex(1, 0)) < 1e-12);
}

TEST_CASE("three-path agreement on random instances") {
  Rng rng(31);
  const ProbeConfig mv = ProbeConfig::max_visibility();
  for (int it = 0; it < 40; ++it) {
    const Index da = (it % 2) ? 2 : 3;
    const Index db = (it % 3) ? 2 : 3;
    const Dynamics dyn(random_density(da, rng),
                       random_channel(da, db, 1 + it % 3, rng));
    const UnitaryMatrix v = random_unitary(da, rng);
    const UnitaryMatrix w = random_unitary(db, rng);
    // simulate_temporal throws if any two paths disagree beyond 1e-8; on top
    // of that, compare the record against the closed form at 1e-10.
    const auto rec = simulate_temporal(dyn, v, w, mv);
    const Complex direct =
        (w.mat() * dyn.channel.apply_raw(v.mat() * dyn.initial.mat())).trace();
    REQUIRE(std::abs(rec.interference - direct) < 1e-10);
    const auto [pp, pm] = probabilities(mv, rec.interference);
    REQUIRE(rec.prob_plus == Catch::Approx(pp).margin(1e-10));
    REQUIRE(rec.prob_minus == Catch::Approx(pm).margin(1e-10));
  }
}

TEST_CASE("interference is linear in mixtures") {
  Rng rng(41);
  const std::vector<double> w{0.3, 0.7};
  const Qsot q1 = star_left(random_channel(2, 2, 2, rng),
                            random_density(2, rng));
  const Qsot q2 = star_left(random_channel(2, 2, 2, rng),
                            random_density(2, rng));
  const Qsot mixed = mix(w, {q1, q2});
  for (int it = 0; it < 10; ++it) {
    const Intervention iv{random_unitary(2, rng), random_unitary(2, rng)};
    const Complex direct = interference_from_qsot(mixed, iv);
    const Complex sum = w[0] * interference_from_qsot(q1, iv) +
                        w[1] * interference_from_qsot(q2, iv);
    REQUIRE(std::abs(direct - sum) < 1e-13);
  }
}

TEST_CASE("spatial simulation") {
  const ProbeConfig mv = ProbeConfig::max_visibility();
  Vec bell(4);
  bell << 1, 0, 0, 1;
  bell /= std::sqrt(2.0);
  const DensityOperator rho_bell(ComplexMatrix({2, 2}, bell * bell.adjoint()));
  const auto rec = simulate_spatial(rho_bell, pauli(qubit::x()),
                                    pauli(qubit::x()), mv);
  REQUIRE(std::abs(rec.interference - Complex(1, 0)) < 1e-12);
  REQUIRE(rec.prob_plus == Catch::Approx(1.0).margin(1e-12));

  Rng rng(58);
  const DensityOperator a = random_density(2, rng);
  const DensityOperator b = random_density(2, rng);
  const DensityOperator prod(tensor(a.matrix(), b.matrix()));
  const UnitaryMatrix v = random_unitary(2, rng);
  const UnitaryMatrix w = random_unitary(2, rng);
  const auto rec2 = simulate_spatial(prod, v, w, mv);
  const Complex factored = (v.mat() * a.mat()).trace() *
                           (w.mat() * b.mat()).trace();
  REQUIRE(std::abs(rec2.interference - factored) < 1e-12);

  const auto rec3 =
      simulate_spatial(prod, pauli(qubit::id()), pauli(qubit::id()), mv);
  REQUIRE(std::abs(rec3.interference - Complex(1, 0)) < 1e-12);
}

TEST_CASE("time-reversed pathway") {
  const ProbeConfig mv = ProbeConfig::max_visibility();
  const UnitaryMatrix one = pauli(qubit::id());
  const auto rec = simulate_time_reversed(
      Dynamics(ket_state(qubit::ket0()), QuantumChannel::identity(2)), one,
      one, mv);
  REQUIRE(std::abs(rec.interference - Complex(1, 0)) < 1e-12);

  // The anticorrelated mixtures become indistinguishable: branch-combined
  // time-reversed interference agrees for every Pauli pair.
  const DensityOperator rho0 = ket_state(qubit::ket0());
  const DensityOperator rho1 = ket_state(qubit::ket1());
  const std::vector<Mat> paulis{qubit::id(), qubit::x(), qubit::y(),
                                qubit::z()};
  for (const Mat& vm : paulis) {
    for (const Mat& wm : paulis) {
      const UnitaryMatrix v = pauli(vm);
      const UnitaryMatrix w = pauli(wm);
      const Complex mix1 =
          0.5 * simulate_time_reversed(
                    Dynamics(rho0, QuantumChannel::pauli_x()), v, w, mv)
                    .interference +
          0.5 * simulate_time_reversed(
                    Dynamics(rho1, QuantumChannel::pauli_y()), v, w, mv)
                    .interference;
      const Complex mix2 =
          0.5 * simulate_time_reversed(
                    Dynamics(rho0, QuantumChannel::pauli_y()), v, w, mv)
                    .interference +
          0.5 * simulate_time_reversed(
                    Dynamics(rho1, QuantumChannel::pauli_x()), v, w, mv)
                    .interference;
      REQUIRE(std::abs(mix1 - mix2) < 1e-12);
    }
  }
}

TEST_CASE("dilation independence") {
  Rng rng(73);
  const ProbeConfig mv = ProbeConfig::max_visibility();
  for (int it = 0; it < 50; ++it) {
    const Dynamics dyn(random_density(2, rng),
                       random_channel(2, 2, 2, rng));
    const UnitaryMatrix v = random_unitary(2, rng);
    const UnitaryMatrix w = random_unitary(2, rng);
    const StinespringDilation std_dil = stinespring(dyn.channel);
    // Alternative dilation: rotate the output environment by a fixed
    // unitary; the marginal channel is unchanged.
    StinespringDilation rotated = std_dil;
    const UnitaryMatrix g = random_unitary(std_dil.env_out, rng);
    rotated.unitary =
        tensor(ComplexMatrix::identity({std_dil.out_dim}),
               g.matrix()).mat() *
        std_dil.unitary;
    const auto r1 = simulate_time_reversed(dyn, v, w, mv, std_dil);
    const auto r2 = simulate_time_reversed(dyn, v, w, mv, rotated);
    REQUIRE(std::abs(r1.interference - r2.interference) < 1e-10);
  }
}

TEST_CASE("povm elements") {
  const ProbeConfig mv = ProbeConfig::max_visibility();
  const UnitaryMatrix one = pauli(qubit::id());
  const auto [m_plus, m_minus] = povm_elements(mv, one, one);
  REQUIRE(max_abs_diff(m_plus, ComplexMatrix::identity({2, 2})) < 1e-14);
  REQUIRE(m_minus.mat().cwiseAbs().maxCoeff() < 1e-14);

  // No superposition, no interference: M+- proportional to the identity.
  const ProbeConfig no_mix(1.0, 0.0,
                           StateVector({2}, qubit::ket_plus()),
                           StateVector({2}, qubit::ket_minus()));
  const auto [n_plus, n_minus] =
      povm_elements(no_mix, pauli(qubit::x()), pauli(qubit::y()));
  REQUIRE(max_abs_diff(n_plus, ComplexMatrix(
                                   {2, 2}, no_mix.s_plus() *
                                               Mat::Identity(4, 4))) < 1e-14);
  REQUIRE(std::abs(n_plus.mat()(0, 0) - Complex(0.5, 0)) < 1e-14);

  Rng rng(82);
  const std::vector<Mat> paulis{qubit::id(), qubit::x(), qubit::y(),
                                qubit::z()};
  for (int it = 0; it < 200; ++it) {
    const ProbeConfig p = random_probe(rng);
    const UnitaryMatrix v = pauli(paulis[it % 4]);
    const UnitaryMatrix w = pauli(paulis[(it / 4) % 4]);
    const auto [mp, mm] = povm_elements(p, v, w);
    REQUIRE(mp.is_hermitian(1e-13));
    REQUIRE(max_abs_diff(ComplexMatrix(mp.dims(), mp.mat() + mm.mat()),
                         ComplexMatrix::identity(mp.dims())) < 1e-12);
    Eigen::SelfAdjointEigenSolver<Mat> es(mp.mat(), Eigen::EigenvaluesOnly);
    REQUIRE(es.eigenvalues().minCoeff() > -1e-10);
    // POVM completeness on arbitrary unit-trace operators.
    const Qsot q = star_fp(random_channel(2, 2, 2, rng),
                           random_density(2, rng));
    const Complex total = (mp.mat() * q.mat()).trace() +
                          (mm.mat() * q.mat()).trace();
    REQUIRE(std::abs(total - Complex(1, 0)) < 1e-12);
    // Born-style probabilities match the simulation.
    const Dynamics dyn(random_density(2, rng), random_channel(2, 2, 2, rng));
    const Qsot fp = star_fp(dyn.channel, dyn.initial);
    const auto rec = simulate_time_reversed(dyn, v, w, p);
    REQUIRE(std::abs((mp.mat() * fp.mat()).trace().real() - rec.prob_plus) <
            1e-10);
    REQUIRE(std::abs((mm.mat() * fp.mat()).trace().real() - rec.prob_minus) <
            1e-10);
  }
}

TEST_CASE("sampling") {
  Rng rng(91);
  const InterferenceRecord sure = make_interference_record(Complex(1, 0),
                                                           1.0, 0.0);
  REQUIRE(sample(sure, 100, rng) == std::pair<std::int64_t, std::int64_t>{100, 0});
  REQUIRE(sample(sure, 0, rng) == std::pair<std::int64_t, std::int64_t>{0, 0});

  const InterferenceRecord fair = make_interference_record(Complex(0, 1),
                                                           0.5, 0.5);
  int within = 0;
  const std::int64_t shots = 1000000;
  for (int seed = 0; seed < 50; ++seed) {
    Rng r(7000 + seed);
    const auto [np, nm] = sample(fair, shots, r);
    REQUIRE(np + nm == shots);
    if (std::abs(static_cast<double>(np) / shots - 0.5) <
        2.5 / std::sqrt(shots)) {
      ++within;
    }
  }
  REQUIRE(within >= 49);

  REQUIRE_THROWS_AS(make_interference_record(Complex(0, 0), -0.2, 1.2),
                    std::runtime_error);
}

TEST_CASE("estimator converges at the statistical rate") {
  Rng rng(303);
  const ProbeConfig mv = ProbeConfig::max_visibility();
  const Dynamics dyn(random_density(2, rng), random_channel(2, 2, 2, rng));
  const UnitaryMatrix v = random_unitary(2, rng);
  const UnitaryMatrix w = random_unitary(2, rng);
  const auto rec = simulate_temporal(dyn, v, w, mv);
  for (const std::int64_t shots : {10000, 1000000}) {
    Rng r(404);
    const auto [np, nm] = sample(rec, shots, r);
    const double estimate = 2.0 * static_cast<double>(np) / shots - 1.0;
    REQUIRE(std::abs(estimate - rec.interference.real()) <
            5.0 / std::sqrt(static_cast<double>(shots)));
  }
}
