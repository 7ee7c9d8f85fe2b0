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

#ifndef QSOT_REFERENCE_HPP_
#define QSOT_REFERENCE_HPP_

#include <string>
#include <vector>

#include "qsot/matrix.hpp"

namespace qsot {

/// One verification fixture: a matrix computed through the library against
/// its independently known closed form.
struct ReferenceCase {
  std::string name;
  ComplexMatrix computed;
  ComplexMatrix expected;

  double deviation() const { return max_abs_diff(computed, expected); }
};

/// The full catalog of qubit fixtures:
///  - the sixteen canonical left products {id, Z, X, Y} * {|0><0|, |1><1|,
///    |0><1|, |1><0|} (the last two by linear extension),
///  - the two ensembles that mix to the same two-region state,
///  - the anti-correlated pair with distinct left products but equal FP
///    products,
///  - the z-rotation family at theta in {pi/6, pi/3, pi/2}, including the
///    dephasing form of its FP product.
std::vector<ReferenceCase> reference_cases();

}  // namespace qsot

#endif  // QSOT_REFERENCE_HPP_
