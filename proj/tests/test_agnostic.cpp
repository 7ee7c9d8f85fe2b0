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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "qsot/random.hpp"

using namespace qsot;

namespace {

ComplexMatrix two_site(const Mat& a, const Mat& b) {
  return tensor(ComplexMatrix({2}, a), ComplexMatrix({2}, b));
}

std::vector<ComplexMatrix> computational_sectors(Index d) {
  std::vector<ComplexMatrix> sectors;
  for (Index i = 0; i < d; ++i) {
    Mat p = Mat::Zero(d, d);
    p(i, i) = 1.0;
    sectors.push_back(ComplexMatrix({d}, p));
  }
  return sectors;
}

}  // namespace

TEST_CASE("shared-probe couplings fail the commutator check") {
  const CommutatorCheck r =
      commutator_check(two_site(qubit::x(), qubit::x()),
                       two_site(qubit::z(), qubit::z()), 2, 2, 2);
  REQUIRE_FALSE(r.commutes);
  // || X (x) Z (x) [X, Z] ||_F = 4 sqrt(2), frozen by brute force.
  REQUIRE(r.norm == Catch::Approx(4.0 * std::sqrt(2.0)).margin(1e-12));
}

TEST_CASE("disjoint supports commute") {
  const CommutatorCheck r =
      commutator_check(two_site(qubit::x(), qubit::id()),
                       two_site(qubit::y(), qubit::id()), 2, 2, 2);
  REQUIRE(r.commutes);
  REQUIRE(r.norm < 1e-13);
}

TEST_CASE("common-sector controlled hamiltonians commute") {
  // H_XR = sum_i H_i (x) P_i against H_YR = sum_i H'_i (x) P_i.
  Rng rng(5);
  const Mat h0 = qubit::x();
  const Mat h1 = qubit::z();
  Mat p0 = Mat::Zero(2, 2), p1 = Mat::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  const ComplexMatrix hxr(
      {2, 2}, Eigen::kroneckerProduct(h0, p0).eval() +
                  Eigen::kroneckerProduct(h1, p1).eval());
  const Mat g0 = qubit::y();
  const Mat g1 = qubit::x() + qubit::z();
  const ComplexMatrix hyr(
      {2, 2}, Eigen::kroneckerProduct(g0, p0).eval() +
                  Eigen::kroneckerProduct(g1, p1).eval());
  const CommutatorCheck r = commutator_check(hxr, hyr, 2, 2, 2);
  REQUIRE(r.commutes);
}

TEST_CASE("commutator check validates inputs") {
  REQUIRE_THROWS_AS(
      commutator_check(
          ComplexMatrix({2, 2}, Complex(0, 1) * Mat::Identity(4, 4)),
          two_site(qubit::z(), qubit::z()), 2, 2, 2),
      std::invalid_argument);
  REQUIRE_THROWS_AS(commutator_check(two_site(qubit::x(), qubit::x()),
                                     two_site(qubit::z(), qubit::z()), 2, 3,
                                     2),
                    std::invalid_argument);
}

TEST_CASE("controlled unitaries pass the block check") {
  Rng rng(7);
  const UnitaryMatrix v0 = random_unitary(2, rng);
  const UnitaryMatrix v1 = random_unitary(2, rng);
  Mat p0 = Mat::Zero(2, 2), p1 = Mat::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  const Mat u = Eigen::kroneckerProduct(v0.mat(), p0).eval() +
                Eigen::kroneckerProduct(v1.mat(), p1).eval();
  REQUIRE(controlled_unitary_check(UnitaryMatrix(ComplexMatrix({2, 2}, u)),
                                   computational_sectors(2), 2, 2));

  // A global phase on V (x) 1 is absorbed by the single trivial sector.
  const Mat phased =
      std::polar(1.0, 0.77) *
      Eigen::kroneckerProduct(v0.mat(), Mat::Identity(2, 2)).eval();
  REQUIRE(controlled_unitary_check(
      UnitaryMatrix(ComplexMatrix({2, 2}, phased)),
      {ComplexMatrix::identity({2})}, 2, 2));
}

TEST_CASE("swap between system and probe is not controlled") {
  Mat swap = Mat::Zero(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  REQUIRE_FALSE(controlled_unitary_check(
      UnitaryMatrix(ComplexMatrix({2, 2}, swap)), computational_sectors(2), 2,
      2));
}

TEST_CASE("sector families are validated") {
  Rng rng(9);
  const UnitaryMatrix u = random_unitary(4, rng);
  const UnitaryMatrix u22(ComplexMatrix({2, 2}, u.mat()));
  // Missing projector.
  Mat p0 = Mat::Zero(2, 2);
  p0(0, 0) = 1.0;
  REQUIRE_THROWS_AS(
      controlled_unitary_check(u22, {ComplexMatrix({2}, p0)}, 2, 2),
      std::invalid_argument);
  // Not a projector.
  REQUIRE_THROWS_AS(
      controlled_unitary_check(u22, {ComplexMatrix({2}, 0.5 * Mat::Identity(2, 2)),
                                     ComplexMatrix({2}, 0.5 * Mat::Identity(2, 2))},
                               2, 2),
      std::invalid_argument);
}

TEST_CASE("principal log generators of controlled unitaries commute") {
  // Two controlled unitaries over the same sectors, acting on different
  // systems, must have commuting generators: the two directions of the
  // characterization agree at the numerical level.
  Rng rng(11);
  const auto sectors = computational_sectors(2);
  for (int it = 0; it < 25; ++it) {
    Mat p0 = sectors[0].mat(), p1 = sectors[1].mat();
    const Mat ux = Eigen::kroneckerProduct(random_unitary(2, rng).mat(), p0).eval() +
                   Eigen::kroneckerProduct(random_unitary(2, rng).mat(), p1).eval();
    const Mat uy = Eigen::kroneckerProduct(random_unitary(2, rng).mat(), p0).eval() +
                   Eigen::kroneckerProduct(random_unitary(2, rng).mat(), p1).eval();
    const UnitaryMatrix uxm(ComplexMatrix({2, 2}, ux));
    const UnitaryMatrix uym(ComplexMatrix({2, 2}, uy));
    REQUIRE(controlled_unitary_check(uxm, sectors, 2, 2));
    REQUIRE(controlled_unitary_check(uym, sectors, 2, 2));
    ComplexMatrix hx = ComplexMatrix::identity({2, 2});
    ComplexMatrix hy = ComplexMatrix::identity({2, 2});
    try {
      hx = principal_log_generator(uxm);
      hy = principal_log_generator(uym);
    } catch (const std::runtime_error&) {
      // Spectrum too close to -1 for the principal branch; skip the draw.
      continue;
    }
    const CommutatorCheck r = commutator_check(hx, hy, 2, 2, 2);
    REQUIRE(r.commutes);
  }
}

TEST_CASE("principal log round trips") {
  Rng rng(13);
  for (int it = 0; it < 20; ++it) {
    const UnitaryMatrix u = random_unitary(3, rng);
    ComplexMatrix h = ComplexMatrix::identity({3});
    try {
      h = principal_log_generator(u);
    } catch (const std::runtime_error&) {
      continue;
    }
    REQUIRE(h.is_hermitian(1e-12));
    // exp(-iH) rebuilds U.
    Eigen::SelfAdjointEigenSolver<Mat> es(h.mat());
    Mat rebuilt = Mat::Zero(3, 3);
    for (Index k = 0; k < 3; ++k) {
      rebuilt += std::polar(1.0, -es.eigenvalues()(k)) *
                 es.eigenvectors().col(k) *
                 es.eigenvectors().col(k).adjoint();
    }
    REQUIRE((rebuilt - u.mat()).cwiseAbs().maxCoeff() < 1e-10);
  }
}
