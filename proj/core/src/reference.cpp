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

#include "qsot/reference.hpp"

#include <cmath>
#include <numbers>

#include "qsot/channel.hpp"
#include "qsot/interferometer.hpp"
#include "qsot/products.hpp"

namespace qsot {

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix two_qubit(std::initializer_list<Complex> entries) {
  Mat m(4, 4);
  Index k = 0;
  for (Complex c : entries) {
    m(k / 4, k % 4) = c;
    ++k;
  }
  return ComplexMatrix({2, 2}, std::move(m));
}

DensityOperator ket_state(const Vec& v) {
  return DensityOperator(ComplexMatrix({2}, v * v.adjoint()));
}

ComplexMatrix outer(const Vec& a, const Vec& b) {
  return ComplexMatrix({2}, a * b.adjoint());
}

void add_supplemental_table(std::vector<ReferenceCase>& cases) {
  const struct {
    const char* name;
    QuantumChannel channel;
  } channels[] = {
      {"id", QuantumChannel::identity(2)},
      {"Z", QuantumChannel::pauli_z()},
      {"X", QuantumChannel::pauli_x()},
      {"Y", QuantumChannel::pauli_y()},
  };
  const Vec k0 = qubit::ket0();
  const Vec k1 = qubit::ket1();
  const struct {
    const char* name;
    ComplexMatrix input;
  } inputs[] = {
      {"|0><0|", outer(k0, k0)},
      {"|1><1|", outer(k1, k1)},
      {"|0><1|", outer(k0, k1)},
      {"|1><0|", outer(k1, k0)},
  };
  // Row-major expected matrices, one per (channel, input), in the order
  // id, Z, X, Y for each input.
  const double t[16][16] = {
      // |0><0|
      {1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      // |1><1|
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0},
      // |0><1|
      {0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      // |1><0|
      {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0},
  };
  for (int in = 0; in < 4; ++in) {
    for (int ch = 0; ch < 4; ++ch) {
      Mat expected(4, 4);
      for (Index k = 0; k < 16; ++k) {
        expected(k / 4, k % 4) = t[in * 4 + ch][k];
      }
      cases.push_back(ReferenceCase{
          std::string("table ") + channels[ch].name + " *L " +
              inputs[in].name,
          star_left_op(channels[ch].channel, inputs[in].input),
          ComplexMatrix({2, 2}, std::move(expected))});
    }
  }
}

void add_same_mixture_example(std::vector<ReferenceCase>& cases) {
  const DensityOperator rho0 = ket_state(qubit::ket0());
  const DensityOperator rho1 = ket_state(qubit::ket1());
  const DensityOperator rho_plus = ket_state(qubit::ket_plus());
  const DensityOperator rho_minus = ket_state(qubit::ket_minus());
  const ComplexMatrix expected = two_qubit({0.5, 0, 0, 0,  //
                                            0, 0, 0.5, 0,  //
                                            0, 0, 0.5, 0,  //
                                            -0.5, 0, 0, 0});
  const Qsot ensemble1 =
      mix({0.5, 0.5}, {star_left(QuantumChannel::identity(2), rho0),
                       star_left(QuantumChannel::rotation_y(kPi), rho1)});
  const Qsot ensemble2 =
      mix({0.5, 0.5},
          {star_left(QuantumChannel::rotation_y(-kPi / 2), rho_plus),
           star_left(QuantumChannel::rotation_y(kPi / 2), rho_minus)});
  cases.push_back(
      ReferenceCase{"mixture ensemble 1", ensemble1.matrix(), expected});
  cases.push_back(
      ReferenceCase{"mixture ensemble 2", ensemble2.matrix(), expected});
}

void add_anticorrelated_example(std::vector<ReferenceCase>& cases) {
  const DensityOperator rho0 = ket_state(qubit::ket0());
  const DensityOperator rho1 = ket_state(qubit::ket1());
  const QuantumChannel x = QuantumChannel::pauli_x();
  const QuantumChannel y = QuantumChannel::pauli_y();
  const Qsot left1 = mix({0.5, 0.5}, {star_left(x, rho0), star_left(y, rho1)});
  const Qsot left2 = mix({0.5, 0.5}, {star_left(y, rho0), star_left(x, rho1)});
  cases.push_back(ReferenceCase{"anticorrelated rho1 left", left1.matrix(),
                                two_qubit({0, 0, 0, 0.5,  //
                                           0, 0.5, 0, 0,  //
                                           0, 0, 0.5, 0,  //
                                           -0.5, 0, 0, 0})});
  cases.push_back(ReferenceCase{"anticorrelated rho2 left", left2.matrix(),
                                two_qubit({0, 0, 0, -0.5,  //
                                           0, 0.5, 0, 0,   //
                                           0, 0, 0.5, 0,   //
                                           0.5, 0, 0, 0})});
  const ComplexMatrix fp_expected = two_qubit({0, 0, 0, 0,  //
                                               0, 0.5, 0, 0,  //
                                               0, 0, 0.5, 0,  //
                                               0, 0, 0, 0});
  const Qsot fp1 = mix({0.5, 0.5}, {star_fp(x, rho0), star_fp(y, rho1)});
  const Qsot fp2 = mix({0.5, 0.5}, {star_fp(y, rho0), star_fp(x, rho1)});
  cases.push_back(
      ReferenceCase{"anticorrelated rho1 FP", fp1.matrix(), fp_expected});
  cases.push_back(
      ReferenceCase{"anticorrelated rho2 FP", fp2.matrix(), fp_expected});
}

void add_rotation_family(std::vector<ReferenceCase>& cases) {
  const DensityOperator rho0 = ket_state(qubit::ket0());
  const DensityOperator rho1 = ket_state(qubit::ket1());
  const struct {
    const char* label;
    double theta;
  } angles[] = {{"pi/6", kPi / 6}, {"pi/3", kPi / 3}, {"pi/2", kPi / 2}};
  for (const auto& a : angles) {
    const QuantumChannel zp = QuantumChannel::rotation_z(a.theta);
    const QuantumChannel zm = QuantumChannel::rotation_z(-a.theta);
    const Complex phase = std::polar(1.0, a.theta);
    const Qsot left1 =
        mix({0.5, 0.5}, {star_left(zp, rho0), star_left(zm, rho1)});
    const Qsot left2 =
        mix({0.5, 0.5}, {star_left(zm, rho0), star_left(zp, rho1)});
    cases.push_back(
        ReferenceCase{std::string("rotation theta=") + a.label + " rho1 left",
                      left1.matrix(),
                      two_qubit({0.5, 0, 0, 0,  //
                                 0, 0, 0.5 * phase, 0,  //
                                 0, 0.5 * phase, 0, 0,  //
                                 0, 0, 0, 0.5})});
    cases.push_back(
        ReferenceCase{std::string("rotation theta=") + a.label + " rho2 left",
                      left2.matrix(),
                      two_qubit({0.5, 0, 0, 0,  //
                                 0, 0, 0.5 * std::conj(phase), 0,  //
                                 0, 0.5 * std::conj(phase), 0, 0,  //
                                 0, 0, 0, 0.5})});
    const ComplexMatrix fp_expected =
        two_qubit({0.5, 0, 0, 0,  //
                   0, 0, 0.5 * std::cos(a.theta), 0,  //
                   0, 0.5 * std::cos(a.theta), 0, 0,  //
                   0, 0, 0, 0.5});
    const Qsot fp1 = mix({0.5, 0.5}, {star_fp(zp, rho0), star_fp(zm, rho1)});
    cases.push_back(ReferenceCase{
        std::string("rotation theta=") + a.label + " FP", fp1.matrix(),
        fp_expected});
    // The same FP state arises from dephasing the maximally mixed qubit.
    const Qsot dephased = star_fp(QuantumChannel::dephasing(a.theta),
                                  DensityOperator::maximally_mixed(2));
    cases.push_back(ReferenceCase{
        std::string("dephasing theta=") + a.label + " FP of 1/2",
        dephased.matrix(), fp_expected});
  }
}

}  // namespace

std::vector<ReferenceCase> reference_cases() {
  std::vector<ReferenceCase> cases;
  add_supplemental_table(cases);
  add_same_mixture_example(cases);
  add_anticorrelated_example(cases);
  add_rotation_family(cases);
  return cases;
}

}  // namespace qsot
