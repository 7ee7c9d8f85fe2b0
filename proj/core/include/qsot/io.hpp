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

#ifndef QSOT_IO_HPP_
#define QSOT_IO_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "qsot/channel.hpp"
#include "qsot/interferometer.hpp"
#include "qsot/matrix.hpp"
#include "qsot/process_matrix.hpp"
#include "qsot/products.hpp"

namespace qsot {

// JSON interchange formats. Matrices are row-major lists of [re, im] pairs
// with an explicit subsystem dimension list:
//   {"dims": [d1, ..., dk], "data": [[re, im], ...]}
// All doubles survive a write/read round trip bit-exactly. Readers reject
// length mismatches with std::invalid_argument.

nlohmann::json to_json(const ComplexMatrix& m);
ComplexMatrix complex_matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const StateVector& v);
StateVector state_vector_from_json(const nlohmann::json& j);

// {"in_dim", "out_dim", "kraus": [matrix, ...]}; square Kraus operators use
// the matrix format above, rectangular ones {"rows", "cols", "data"}.
nlohmann::json to_json(const QuantumChannel& e);
QuantumChannel channel_from_json(const nlohmann::json& j);

// Matrix fields plus {"provenance": tag, "regions": n}.
nlohmann::json to_json(const Qsot& q);
Qsot qsot_from_json(const nlohmann::json& j);

// {"alpha0": [re, im], "alpha1": [re, im], "basis_plus": statevector,
//  "basis_minus": statevector}
nlohmann::json to_json(const ProbeConfig& p);
ProbeConfig probe_from_json(const nlohmann::json& j);

nlohmann::json to_json(const InterferenceRecord& r);

// Matrix fields plus {"spaces": ["A", "A'", "B", "B'"]}.
nlohmann::json to_json(const ProcessMatrix& w);
ProcessMatrix process_matrix_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace qsot

#endif  // QSOT_IO_HPP_
