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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <numbers>

#include "qsot/random.hpp"

using namespace qsot;

namespace {

DensityOperator ket_state(const Vec& v) {
  return DensityOperator(ComplexMatrix({2}, v * v.adjoint()));
}

}  // namespace

TEST_CASE("apply basics") {
  Rng rng(4);
  const DensityOperator rho = random_density(3, rng);
  const QuantumChannel id3 = QuantumChannel::identity(3);
  REQUIRE(frobenius_distance(id3.apply(rho.matrix()), rho.matrix()) == 0.0);

  // A half-turn around y maps |1><1| to |0><0|.
  const QuantumChannel y_pi = QuantumChannel::rotation_y(std::numbers::pi);
  const ComplexMatrix flipped = y_pi.apply(ket_state(qubit::ket1()).matrix());
  REQUIRE(frobenius_distance(flipped, ket_state(qubit::ket0()).matrix()) <
          1e-14);

  // Dephasing damps coherences by cos(theta), matching the channel's FP
  // matrix rather than the cos(theta/2) sometimes quoted for it.
  const double theta = 0.7;
  const ComplexMatrix dephased = QuantumChannel::dephasing(theta).apply(
      ket_state(qubit::ket_plus()).matrix());
  REQUIRE(std::abs(dephased.mat()(0, 1) - Complex(std::cos(theta) / 2, 0)) <
          1e-14);
}

TEST_CASE("channel validation") {
  // Scaled Kraus set that is not trace preserving.
  REQUIRE_THROWS_AS(QuantumChannel({0.5 * qubit::id()}, 2, 2),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(QuantumChannel({Mat::Identity(3, 2)}, 2, 2),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(QuantumChannel({}, 2, 2), std::invalid_argument);
}

TEST_CASE("jamiolkowski of the identity is SWAP") {
  const ComplexMatrix j = QuantumChannel::identity(2).jamiolkowski();
  Mat swap = Mat::Zero(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  REQUIRE((j.mat() - swap).cwiseAbs().maxCoeff() == 0.0);
  // (|0><0| (x) 1) SWAP reproduces the canonical first table entry.
  Mat projected = Mat::Zero(4, 4);
  projected.block(0, 0, 2, 4) = swap.block(0, 0, 2, 4);
  Mat expected = Mat::Zero(4, 4);
  expected(0, 0) = expected(1, 2) = 1.0;
  REQUIRE((projected - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("jamiolkowski of the Z channel carries the sign pattern") {
  const ComplexMatrix j = QuantumChannel::pauli_z().jamiolkowski();
  // Brute force over basis units: block (i, j) must hold Z |j><i| Z.
  for (Index i = 0; i < 2; ++i) {
    for (Index jj = 0; jj < 2; ++jj) {
      Mat unit = Mat::Zero(2, 2);
      unit(jj, i) = 1.0;
      const Mat expected = qubit::z() * unit * qubit::z();
      REQUIRE(
          (j.mat().block(i * 2, jj * 2, 2, 2) - expected).cwiseAbs().maxCoeff() ==
          0.0);
    }
  }
  // SWAP entries signed by (-1)^(i+j).
  REQUIRE(j.mat()(1, 2) == Complex(-1, 0));
  REQUIRE(j.mat()(2, 1) == Complex(-1, 0));
  REQUIRE(j.mat()(0, 0) == Complex(1, 0));
  REQUIRE(j.mat()(3, 3) == Complex(1, 0));
}

TEST_CASE("jamiolkowski marginal and linearity") {
  Rng rng(6);
  for (int it = 0; it < 100; ++it) {
    const Index din = (it % 2) ? 2 : 3;
    const QuantumChannel e = random_channel(din, 2, 2, rng);
    const ComplexMatrix j = e.jamiolkowski();
    const ComplexMatrix marg = partial_trace(j, {0});
    REQUIRE(frobenius_distance(marg, ComplexMatrix::identity({din})) < 1e-12);
  }
  // J is linear in the channel: J[(E+F)/2 style mixtures] = mixture of J's.
  const QuantumChannel a = QuantumChannel::rotation_z(0.3);
  const QuantumChannel b = QuantumChannel::rotation_z(-0.3);
  std::vector<Mat> mixed;
  const double s = 1.0 / std::sqrt(2.0);
  for (const Mat& k : a.kraus()) mixed.push_back(s * k);
  for (const Mat& k : b.kraus()) mixed.push_back(s * k);
  const QuantumChannel avg(mixed, 2, 2);
  const Mat j_avg = avg.jamiolkowski().mat();
  const Mat j_mix = 0.5 * (a.jamiolkowski().mat() + b.jamiolkowski().mat());
  REQUIRE((j_avg - j_mix).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("choi is the partial transpose of jamiolkowski") {
  Rng rng(61);
  const QuantumChannel e = random_channel(2, 3, 2, rng);
  const ComplexMatrix j = e.jamiolkowski();
  const ComplexMatrix c = e.choi();
  for (Index i = 0; i < 2; ++i) {
    for (Index jj = 0; jj < 2; ++jj) {
      REQUIRE((j.mat().block(i * 3, jj * 3, 3, 3) -
               c.mat().block(jj * 3, i * 3, 3, 3))
                  .cwiseAbs()
                  .maxCoeff() < 1e-14);
    }
  }
}

TEST_CASE("inverse jamiolkowski round trips") {
  const LinearMap id_map =
      inverse_jamiolkowski(QuantumChannel::identity(2).jamiolkowski(), 2, 2);
  Rng rng(9);
  const DensityOperator rho = random_density(2, rng);
  REQUIRE(frobenius_distance(id_map.apply(rho.matrix()), rho.matrix()) <
          1e-14);

  for (int it = 0; it < 50; ++it) {
    const QuantumChannel e = random_channel(2, 2, 2, rng);
    const LinearMap inv = inverse_jamiolkowski(e.jamiolkowski(), 2, 2);
    // Rebuild the Jamiolkowski operator of the recovered map.
    Mat j2 = Mat::Zero(4, 4);
    for (Index i = 0; i < 2; ++i) {
      for (Index jj = 0; jj < 2; ++jj) {
        Mat unit = Mat::Zero(2, 2);
        unit(jj, i) = 1.0;
        j2.block(i * 2, jj * 2, 2, 2) = inv.apply_raw(unit);
      }
    }
    REQUIRE((j2 - e.jamiolkowski().mat()).cwiseAbs().maxCoeff() < 1e-12);
  }

  // J = |0><0| (x) |0><0| is the map x -> x_00 |0><0|.
  Mat j = Mat::Zero(4, 4);
  j(0, 0) = 1.0;
  const LinearMap squeeze(ComplexMatrix({2, 2}, j), 2, 2);
  Mat x(2, 2);
  x << Complex(0.3, 0), Complex(0.1, 0.2), Complex(0.1, -0.2), Complex(0.7, 0);
  const Mat out = squeeze.apply_raw(x);
  REQUIRE(std::abs(out(0, 0) - Complex(0.3, 0)) < 1e-15);
  REQUIRE(out.cwiseAbs().sum() == Catch::Approx(0.3));
}

TEST_CASE("apply preserves hermiticity and trace") {
  Rng rng(13);
  for (int it = 0; it < 100; ++it) {
    const QuantumChannel e = random_channel(3, 2, 3, rng);
    Mat g(3, 3);
    for (Index i = 0; i < 3; ++i) {
      for (Index j = 0; j < 3; ++j) g(i, j) = Complex(rng.gaussian(), rng.gaussian());
    }
    const Mat h = 0.5 * (g + g.adjoint());
    const Mat out = e.apply_raw(h);
    REQUIRE((out - out.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    REQUIRE(std::abs(out.trace() - h.trace()) < 1e-12);
  }
}

TEST_CASE("purify") {
  const StateVector phi0 = purify(ket_state(qubit::ket0()));
  REQUIRE(phi0.dims() == Dims{2, 1});
  REQUIRE(std::abs(phi0.vec()(0) - Complex(1, 0)) < 1e-14);

  const StateVector bell = purify(DensityOperator::maximally_mixed(2));
  REQUIRE(bell.dims() == Dims{2, 2});
  const ComplexMatrix marg = partial_trace(bell.projector(), {0});
  REQUIRE(frobenius_distance(marg,
                             DensityOperator::maximally_mixed(2).matrix()) <
          1e-13);

  Rng rng(21);
  for (int it = 0; it < 100; ++it) {
    const Index d = (it % 2) ? 2 : 3;
    const DensityOperator rho = random_density(d, rng);
    const StateVector phi = purify(rho);
    REQUIRE(frobenius_distance(partial_trace(phi.projector(), {0}),
                               rho.matrix()) < 1e-12);
  }
}

TEST_CASE("stinespring dilation") {
  Rng rng(34);
  // Unitary channel: reconstruction is exact and the ancilla is trivial.
  const UnitaryMatrix v = random_unitary(2, rng);
  const StinespringDilation dv = stinespring(QuantumChannel::unitary(v));
  REQUIRE(dv.env_in == 1);
  const DensityOperator rho = random_density(2, rng);
  REQUIRE(frobenius_distance(dv.apply(rho.matrix()),
                             ComplexMatrix({2}, v.mat() * rho.mat() *
                                                    v.mat().adjoint())) <
          1e-12);

  // Dephasing: qubit ancilla, reconstruction below 1e-12 on a basis.
  const StinespringDilation dd =
      stinespring(QuantumChannel::dephasing(0.9));
  REQUIRE(dd.env_in == 2);
  REQUIRE((dd.unitary.adjoint() * dd.unitary -
           Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
  for (Index i = 0; i < 2; ++i) {
    for (Index j = 0; j < 2; ++j) {
      Mat unit = Mat::Zero(2, 2);
      unit(i, j) = 1.0;
      REQUIRE(frobenius_distance(
                  dd.apply(ComplexMatrix({2}, unit)),
                  QuantumChannel::dephasing(0.9).apply(
                      ComplexMatrix({2}, unit))) < 1e-12);
    }
  }

  // Random qutrit channel of Kraus rank 3 on all nine basis units.
  const QuantumChannel e3 = random_channel(3, 3, 3, rng);
  const StinespringDilation d3 = stinespring(e3);
  REQUIRE((d3.unitary.adjoint() * d3.unitary -
           Mat::Identity(9, 9)).cwiseAbs().maxCoeff() < 1e-11);
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) {
      Mat unit = Mat::Zero(3, 3);
      unit(i, j) = 1.0;
      REQUIRE(frobenius_distance(d3.apply(ComplexMatrix({3}, unit)),
                                 e3.apply(ComplexMatrix({3}, unit))) < 1e-10);
    }
  }

  // Rectangular channel: dims follow the lcm-free padding rule.
  const QuantumChannel e23 = random_channel(2, 3, 2, rng);
  const StinespringDilation d23 = stinespring(e23);
  REQUIRE(d23.in_dim * d23.env_in == d23.out_dim * d23.env_out);
  for (Index i = 0; i < 2; ++i) {
    for (Index j = 0; j < 2; ++j) {
      Mat unit = Mat::Zero(2, 2);
      unit(i, j) = 1.0;
      REQUIRE(frobenius_distance(d23.apply(ComplexMatrix({2}, unit)),
                                 e23.apply(ComplexMatrix({2}, unit))) < 1e-10);
    }
  }
}

TEST_CASE("cptp validation over random normalized kraus sets") {
  Rng rng(55);
  for (int it = 0; it < 100; ++it) {
    const QuantumChannel e = random_channel(2, 2, 1 + it % 4, rng);
    Mat sum = Mat::Zero(2, 2);
    for (const Mat& k : e.kraus()) sum += k.adjoint() * k;
    REQUIRE((sum - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-10);
    Eigen::SelfAdjointEigenSolver<Mat> es(e.choi().mat(),
                                          Eigen::EigenvaluesOnly);
    REQUIRE(es.eigenvalues().minCoeff() > -1e-10);
  }
}

TEST_CASE("density operator validation") {
  REQUIRE_THROWS_AS(DensityOperator(ComplexMatrix({2}, qubit::x())),
                    std::invalid_argument);
  Mat neg(2, 2);
  neg << 1.5, 0, 0, -0.5;
  REQUIRE_THROWS_AS(DensityOperator(ComplexMatrix({2}, neg)),
                    std::invalid_argument);
}
