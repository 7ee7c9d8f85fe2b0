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

#include "qsot/io.hpp"

#include <fstream>
#include <stdexcept>

namespace qsot {

using nlohmann::json;

namespace {

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("complex entries must be [re, im] pairs");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json entries_to_json(const Mat& m) {
  json data = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) data.push_back(complex_to_json(m(r, c)));
  }
  return data;
}

Mat entries_from_json(const json& data, Index rows, Index cols) {
  if (!data.is_array() ||
      static_cast<Index>(data.size()) != rows * cols) {
    throw std::invalid_argument("matrix data length does not match dims");
  }
  Mat m(rows, cols);
  Index k = 0;
  for (const json& e : data) {
    m(k / cols, k % cols) = complex_from_json(e);
    ++k;
  }
  return m;
}

Dims dims_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("dims must be a nonempty array");
  }
  Dims dims;
  for (const json& d : j) dims.push_back(d.get<Index>());
  return dims;
}

}  // namespace

json to_json(const ComplexMatrix& m) {
  return json{{"dims", m.dims()}, {"data", entries_to_json(m.mat())}};
}

ComplexMatrix complex_matrix_from_json(const json& j) {
  const Dims dims = dims_from_json(j.at("dims"));
  const Index d = product_dim(dims);
  return ComplexMatrix(dims, entries_from_json(j.at("data"), d, d));
}

json to_json(const StateVector& v) {
  json amps = json::array();
  for (Index i = 0; i < v.total_dim(); ++i) {
    amps.push_back(complex_to_json(v.vec()(i)));
  }
  return json{{"dims", v.dims()}, {"amplitudes", amps}};
}

StateVector state_vector_from_json(const json& j) {
  const Dims dims = dims_from_json(j.at("dims"));
  const json& amps = j.at("amplitudes");
  if (!amps.is_array() ||
      static_cast<Index>(amps.size()) != product_dim(dims)) {
    throw std::invalid_argument("amplitude count does not match dims");
  }
  Vec v(product_dim(dims));
  Index k = 0;
  for (const json& a : amps) v(k++) = complex_from_json(a);
  return StateVector(dims, std::move(v));
}

json to_json(const QuantumChannel& e) {
  json kraus = json::array();
  for (const Mat& k : e.kraus()) {
    if (k.rows() == k.cols()) {
      kraus.push_back(json{{"dims", Dims{k.rows()}},
                           {"data", entries_to_json(k)}});
    } else {
      kraus.push_back(json{{"rows", k.rows()},
                           {"cols", k.cols()},
                           {"data", entries_to_json(k)}});
    }
  }
  return json{
      {"in_dim", e.in_dim()}, {"out_dim", e.out_dim()}, {"kraus", kraus}};
}

QuantumChannel channel_from_json(const json& j) {
  const Index in_dim = j.at("in_dim").get<Index>();
  const Index out_dim = j.at("out_dim").get<Index>();
  std::vector<Mat> kraus;
  for (const json& jk : j.at("kraus")) {
    if (jk.contains("dims")) {
      const Dims dims = dims_from_json(jk.at("dims"));
      const Index d = product_dim(dims);
      kraus.push_back(entries_from_json(jk.at("data"), d, d));
    } else {
      kraus.push_back(entries_from_json(jk.at("data"),
                                        jk.at("rows").get<Index>(),
                                        jk.at("cols").get<Index>()));
    }
  }
  return QuantumChannel(std::move(kraus), in_dim, out_dim);
}

json to_json(const Qsot& q) {
  json j = to_json(q.matrix());
  j["provenance"] = to_string(q.provenance());
  j["regions"] = q.regions();
  return j;
}

Qsot qsot_from_json(const json& j) {
  ComplexMatrix m = complex_matrix_from_json(j);
  if (j.contains("regions") &&
      j.at("regions").get<Index>() != m.num_factors()) {
    throw std::invalid_argument("qsot: region count does not match dims");
  }
  const Provenance prov =
      j.contains("provenance")
          ? provenance_from_string(j.at("provenance").get<std::string>())
          : Provenance::kOther;
  return Qsot(std::move(m), prov);
}

json to_json(const ProbeConfig& p) {
  return json{{"alpha0", complex_to_json(p.alpha0())},
              {"alpha1", complex_to_json(p.alpha1())},
              {"basis_plus", to_json(p.basis_plus())},
              {"basis_minus", to_json(p.basis_minus())}};
}

ProbeConfig probe_from_json(const json& j) {
  return ProbeConfig(complex_from_json(j.at("alpha0")),
                     complex_from_json(j.at("alpha1")),
                     state_vector_from_json(j.at("basis_plus")),
                     state_vector_from_json(j.at("basis_minus")));
}

json to_json(const InterferenceRecord& r) {
  return json{{"re_I", r.interference.real()},
              {"im_I", r.interference.imag()},
              {"p_plus", r.prob_plus},
              {"p_minus", r.prob_minus}};
}

json to_json(const ProcessMatrix& w) {
  json j = to_json(w.matrix());
  j["spaces"] = json::array({"A", "A'", "B", "B'"});
  return j;
}

ProcessMatrix process_matrix_from_json(const json& j) {
  return ProcessMatrix(complex_matrix_from_json(j));
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open file for write: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace qsot
