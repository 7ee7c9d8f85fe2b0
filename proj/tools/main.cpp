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

// Command line front end. Exit codes: 0 success, 1 verification failure,
// 2 input or validation error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "channel_spec.hpp"
#include "qsot/agnostic.hpp"
#include "qsot/compass.hpp"
#include "qsot/interferometer.hpp"
#include "qsot/io.hpp"
#include "qsot/process_matrix.hpp"
#include "qsot/products.hpp"
#include "qsot/reference.hpp"
#include "qsot/rng.hpp"
#include "qsot/tomography.hpp"

namespace {

using namespace qsot;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

struct GlobalOptions {
  double tolerance = kDefaultTol;
  std::uint64_t seed = 0;
};

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json_file(out_path, j);
  }
}

ProductKind kind_from_string(const std::string& s) {
  if (s == "left") return ProductKind::kLeft;
  if (s == "right") return ProductKind::kRight;
  if (s == "fp") return ProductKind::kFp;
  throw std::invalid_argument("unknown product kind: " + s);
}

struct Ensemble {
  std::vector<double> weights;
  std::vector<Dynamics> dynamics;
  std::vector<std::string> channel_specs;  // canonicalized where named
};

Ensemble load_ensemble(const std::string& path) {
  const json j = load_json_file(path);
  Ensemble e;
  if (!j.contains("dynamics") || !j.at("dynamics").is_array() ||
      j.at("dynamics").empty()) {
    throw std::invalid_argument("ensemble file needs a dynamics array");
  }
  for (const json& d : j.at("dynamics")) {
    e.dynamics.emplace_back(cli::state_from_value(d.at("state")),
                            cli::channel_from_value(d.at("channel")));
    e.channel_specs.push_back(
        d.at("channel").is_string()
            ? cli::canonical_channel_spec(d.at("channel").get<std::string>())
            : std::string("kraus"));
  }
  if (j.contains("weights")) {
    e.weights = j.at("weights").get<std::vector<double>>();
  } else {
    e.weights.assign(e.dynamics.size(), 1.0 / e.dynamics.size());
  }
  if (e.weights.size() != e.dynamics.size()) {
    throw std::invalid_argument("ensemble weights/dynamics size mismatch");
  }
  return e;
}

Ensemble ensemble_from_flags(const std::vector<std::string>& states,
                             const std::vector<std::string>& channels,
                             std::vector<double> weights) {
  if (states.size() != channels.size() || states.empty()) {
    throw std::invalid_argument(
        "provide matching --state and --channel lists");
  }
  Ensemble e;
  for (std::size_t i = 0; i < states.size(); ++i) {
    e.dynamics.emplace_back(cli::parse_state_spec(states[i]),
                            cli::parse_channel_spec(channels[i]));
    e.channel_specs.push_back(cli::canonical_channel_spec(channels[i]));
  }
  if (weights.empty()) {
    weights.assign(states.size(), 1.0 / states.size());
  }
  if (weights.size() != states.size()) {
    throw std::invalid_argument("--weight count must match --state count");
  }
  e.weights = std::move(weights);
  return e;
}

Qsot ensemble_qsot(const Ensemble& e, ProductKind kind) {
  std::vector<Qsot> parts;
  parts.reserve(e.dynamics.size());
  for (const Dynamics& d : e.dynamics) {
    parts.push_back(star(kind, d.channel, d.initial));
  }
  if (parts.size() == 1) return parts.front();
  return mix(e.weights, parts);
}

// --- subcommand payloads -------------------------------------------------

int run_product(const std::string& kind, const std::string& state,
                const std::string& channel, const std::string& out) {
  const QuantumChannel e = cli::parse_channel_spec(channel);
  const DensityOperator rho = cli::parse_state_spec(state);
  const Qsot q = star(kind_from_string(kind), e, rho);
  json j = to_json(q);
  j["channel_spec"] = cli::canonical_channel_spec(channel);
  emit(j, out);
  return kExitOk;
}

int run_interfere(const GlobalOptions& g, const Ensemble& ensemble,
                  const std::string& v_spec, const std::string& w_spec,
                  const std::string& probe_path, bool time_reversed,
                  std::int64_t shots, bool sweep, const std::string& out) {
  const UnitaryMatrix v = cli::parse_unitary_spec(v_spec);
  const UnitaryMatrix w = cli::parse_unitary_spec(w_spec);
  const ProbeConfig probe =
      probe_path.empty() ? ProbeConfig::max_visibility()
                         : probe_from_json(load_json_file(probe_path));
  Rng rng(g.seed);

  const auto run_once = [&](const UnitaryMatrix& vu, const UnitaryMatrix& wu)
      -> InterferenceRecord {
    Complex total(0, 0);
    for (std::size_t i = 0; i < ensemble.dynamics.size(); ++i) {
      const InterferenceRecord rec =
          time_reversed
              ? simulate_time_reversed(ensemble.dynamics[i], vu, wu, probe)
              : simulate_temporal(ensemble.dynamics[i], vu, wu, probe);
      total += ensemble.weights[i] * rec.interference;
    }
    const auto [pp, pm] = probabilities(probe, total);
    return make_interference_record(total, pp, pm);
  };

  if (sweep) {
    if (out.empty()) {
      throw std::invalid_argument("--sweep-paulis needs --out CSV path");
    }
    std::ofstream csv(out);
    if (!csv) throw std::invalid_argument("cannot open " + out);
    csv << "intervention_id,re_I,im_I,p_plus,p_minus,n_plus,n_minus,shots,"
           "seed\n";
    const char* names[4] = {"I", "X", "Y", "Z"};
    const Mat mats[4] = {qubit::id(), qubit::x(), qubit::y(), qubit::z()};
    csv.precision(17);
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        const InterferenceRecord rec =
            run_once(UnitaryMatrix(ComplexMatrix({2}, mats[a])),
                     UnitaryMatrix(ComplexMatrix({2}, mats[b])));
        std::int64_t np = 0, nm = 0;
        if (shots > 0) {
          Rng task = rng.split(a * 4 + b);
          std::tie(np, nm) = sample(rec, shots, task);
        }
        csv << names[a] << "." << names[b] << "," << rec.interference.real()
            << "," << rec.interference.imag() << "," << rec.prob_plus << ","
            << rec.prob_minus << "," << np << "," << nm << "," << shots << ","
            << g.seed << "\n";
      }
    }
    return kExitOk;
  }

  const InterferenceRecord rec = run_once(v, w);
  json j = to_json(rec);
  j["pathway"] = time_reversed ? "fp" : "left";
  j["seed"] = g.seed;
  if (shots > 0) {
    const auto [np, nm] = sample(rec, shots, rng);
    j["n_plus"] = np;
    j["n_minus"] = nm;
    j["shots"] = shots;
  }
  emit(j, out);
  return kExitOk;
}

int run_sample(const GlobalOptions& g, const std::string& record_path,
               std::int64_t shots, const std::string& out) {
  const json j = load_json_file(record_path);
  const InterferenceRecord rec = make_interference_record(
      Complex(j.at("re_I").get<double>(), j.at("im_I").get<double>()),
      j.at("p_plus").get<double>(), j.at("p_minus").get<double>());
  Rng rng(g.seed);
  const auto [np, nm] = sample(rec, shots, rng);
  emit(json{{"n_plus", np}, {"n_minus", nm}, {"shots", shots},
            {"seed", g.seed}},
       out);
  return kExitOk;
}

int run_tomo(const GlobalOptions& g, const std::string& oracle_spec,
             const std::string& dims_text, std::int64_t shots,
             const std::string& out) {
  Dims dims;
  {
    std::stringstream ss(dims_text);
    std::string part;
    while (std::getline(ss, part, ',')) dims.push_back(std::stoll(part));
    if (dims.empty()) throw std::invalid_argument("--dims must be d1,d2,...");
  }
  const auto colon = oracle_spec.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("--oracle must be self:FILE or noisy:FILE");
  }
  const std::string mode = oracle_spec.substr(0, colon);
  const std::string path = oracle_spec.substr(colon + 1);
  const Qsot source = qsot_from_json(load_json_file(path));
  if (source.region_dims() != dims) {
    throw std::invalid_argument("--dims do not match the oracle state");
  }

  json report;
  report["basis_order"] = "lexicographic in (region, p, q)";
  report["dims"] = dims;
  report["seed"] = g.seed;
  if (mode == "self") {
    const ExactOracle oracle = make_qsot_oracle(source);
    const Qsot rec = reconstruct(oracle, dims);
    // Raw interference values and the residual over the full basis.
    json raw = json::array();
    double residual = 0.0;
    std::vector<std::vector<UnitaryMatrix>> bases;
    for (Index d : dims) bases.push_back(weyl_basis(d));
    Dims radices;
    for (Index d : dims) radices.push_back(d * d);
    for (Index t = 0; t < product_dim(radices); ++t) {
      const auto digits = mixed_radix_digits(t, radices);
      Intervention iv;
      for (std::size_t r = 0; r < dims.size(); ++r) {
        iv.push_back(bases[r][digits[r]]);
      }
      const Complex i_true = oracle(iv);
      const Complex i_rec = interference_from_qsot(rec, iv);
      raw.push_back(json::array({i_true.real(), i_true.imag()}));
      residual = std::max(residual, std::abs(i_true - i_rec));
    }
    report["raw_interference"] = raw;
    report["residual"] = residual;
    report["matrix"] = to_json(rec);
    emit(report, out);
    return kExitOk;
  }
  if (mode == "noisy") {
    if (shots <= 0) {
      throw std::invalid_argument("noisy oracle needs --shots > 0");
    }
    Rng rng(g.seed);
    const NoisyReconstruction nr = reconstruct_noisy(
        make_noisy_qsot_oracle(source), dims, shots, rng);
    report["matrix"] = to_json(nr.state);
    report["shots_per_setting"] = nr.shots_per_setting;
    report["settings"] = nr.settings;
    report["max_entry_sigma"] = nr.max_entry_sigma;
    report["low_confidence"] = nr.low_confidence;
    report["max_entry_error_vs_source"] =
        max_abs_diff(nr.state.matrix(), source.matrix());
    emit(report, out);
    return kExitOk;
  }
  throw std::invalid_argument("unknown oracle mode: " + mode);
}

int run_compass(const std::vector<std::string>& ensemble_paths,
                const std::string& out) {
  if (ensemble_paths.empty() || ensemble_paths.size() > 2) {
    throw std::invalid_argument("compass takes one or two --ensemble files");
  }
  json report;
  std::vector<Qsot> recovered;
  for (const std::string& path : ensemble_paths) {
    const Ensemble e = load_ensemble(path);
    std::vector<CompassSetup> setups;
    for (const Dynamics& d : e.dynamics) setups.emplace_back(d);
    const Index din = e.dynamics.front().channel.in_dim();
    const Index dout = e.dynamics.front().channel.out_dim();
    const Qsot rec = compass_recover_left(
        make_compass_runs(e.weights, setups), weyl_basis(din),
        weyl_basis(dout));
    recovered.push_back(rec);
    report["recovered"].push_back(to_json(rec));
  }
  if (recovered.size() == 2) {
    report["distance"] =
        frobenius_distance(recovered[0].matrix(), recovered[1].matrix());
  }
  emit(report, out);
  return kExitOk;
}

int run_procmat(const std::string& state, const std::string& channel,
                bool first_order_flag, const std::string& out) {
  const Dynamics dyn(cli::parse_state_spec(state),
                     cli::parse_channel_spec(channel));
  const ProcessMatrix w = ordered_process_matrix(dyn);
  json j = to_json(w);
  if (first_order_flag) {
    const ComplexMatrix w1 = first_order(w);
    j["first_order"] = to_json(w1);
    j["first_order_vs_left_product"] = frobenius_distance(
        w1, star_left(dyn.channel, dyn.initial).matrix());
  }
  emit(j, out);
  return kExitOk;
}

int run_cam_check(const std::string& hxr_path, const std::string& hyr_path,
                  const std::string& dims_text, const std::string& unitary_path,
                  const std::string& sectors_path, const std::string& out) {
  json report;
  if (!hxr_path.empty()) {
    if (hyr_path.empty() || dims_text.empty()) {
      throw std::invalid_argument(
          "commutator mode needs --hxr, --hyr and --dims dX,dY,dR");
    }
    Dims dims;
    std::stringstream ss(dims_text);
    std::string part;
    while (std::getline(ss, part, ',')) dims.push_back(std::stoll(part));
    if (dims.size() != 3) {
      throw std::invalid_argument("--dims must be dX,dY,dR");
    }
    const CommutatorCheck r = commutator_check(
        complex_matrix_from_json(load_json_file(hxr_path)),
        complex_matrix_from_json(load_json_file(hyr_path)), dims[0], dims[1],
        dims[2]);
    report["mode"] = "commutator";
    report["commutes"] = r.commutes;
    report["norm"] = r.norm;
  } else {
    if (unitary_path.empty() || sectors_path.empty()) {
      throw std::invalid_argument(
          "controlled mode needs --unitary and --sectors");
    }
    const json js = load_json_file(sectors_path);
    const Index dim_x = js.at("dim_x").get<Index>();
    const Index dim_r = js.at("dim_r").get<Index>();
    std::vector<ComplexMatrix> sectors;
    for (const json& p : js.at("sectors")) {
      sectors.push_back(complex_matrix_from_json(p));
    }
    const UnitaryMatrix u(
        complex_matrix_from_json(load_json_file(unitary_path)));
    report["mode"] = "controlled-unitary";
    report["controlled"] =
        controlled_unitary_check(u, sectors, dim_x, dim_r);
  }
  emit(report, out);
  return kExitOk;
}

int run_verify_examples(const GlobalOptions& g, const std::string& out,
                        const std::string& inject_fault) {
  std::vector<ReferenceCase> cases = reference_cases();
  bool fault_matched = false;
  if (!inject_fault.empty()) {
    for (ReferenceCase& c : cases) {
      if (c.name == inject_fault) {
        Mat perturbed = c.computed.mat();
        perturbed(0, 0) += 1e-3;
        c.computed = ComplexMatrix(c.computed.dims(), perturbed);
        fault_matched = true;
      }
    }
    if (!fault_matched) {
      throw std::invalid_argument("no fixture named: " + inject_fault);
    }
  }
  json report = json::array();
  int failures = 0;
  for (const ReferenceCase& c : cases) {
    const double dev = c.deviation();
    const bool ok = dev < g.tolerance;
    failures += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << c.name
              << "  (max deviation " << dev << ")\n";
    if (!ok) {
      std::cout << "  computed:\n" << c.computed.mat() << "\n  expected:\n"
                << c.expected.mat() << "\n";
    }
    report.push_back(json{{"name", c.name}, {"max_deviation", dev},
                          {"pass", ok}});
  }
  std::cout << (failures == 0 ? "all fixtures passed"
                              : std::to_string(failures) + " fixtures failed")
            << " (tolerance " << g.tolerance << ")\n";
  if (!out.empty()) {
    write_json_file(out, json{{"tolerance", g.tolerance},
                              {"cases", report},
                              {"failures", failures}});
  }
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qsot: quantum states over spacetime - products, interferometry, "
      "tomography, process matrices"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--tolerance", g.tolerance,
                 "verification tolerance (default 1e-10)");
  app.add_option("--seed", g.seed, "base seed for all randomized steps");

  // product
  auto* product = app.add_subcommand("product", "compute a QSOT product");
  std::string kind = "left", state, channel, out;
  product->add_option("--kind", kind, "left|right|fp");
  product->add_option("--state", state, "initial state spec")->required();
  product->add_option("--channel", channel, "channel spec")->required();
  product->add_option("--out", out, "output JSON path (default stdout)");

  // interfere
  auto* interfere =
      app.add_subcommand("interfere", "simulate two-arm interferometry");
  std::vector<std::string> i_states, i_channels;
  std::vector<double> i_weights;
  std::string i_ensemble, i_v = "I", i_w = "I", i_probe, i_out;
  bool i_time_reversed = false, i_sweep = false;
  std::int64_t i_shots = 0;
  interfere->add_option("--state", i_states, "initial state spec(s)");
  interfere->add_option("--channel", i_channels, "channel spec(s)");
  interfere->add_option("--weight", i_weights, "mixture weights");
  interfere->add_option("--ensemble", i_ensemble, "ensemble JSON file");
  interfere->add_option("--V", i_v, "intervention before the channel");
  interfere->add_option("--W", i_w, "intervention after the channel");
  interfere->add_option("--probe", i_probe, "probe JSON (default max visibility)");
  interfere->add_flag("--time-reversed", i_time_reversed,
                      "use the time-reversal-symmetric (FP) pathway");
  interfere->add_option("--shots", i_shots, "also sample outcome counts");
  interfere->add_flag("--sweep-paulis", i_sweep,
                      "sweep all 16 Pauli pairs, write CSV to --out");
  interfere->add_option("--out", i_out, "output path");

  // sample
  auto* sample_cmd =
      app.add_subcommand("sample", "draw counts from a record file");
  std::string s_record, s_out;
  std::int64_t s_shots = 0;
  sample_cmd->add_option("--record", s_record, "record JSON")->required();
  sample_cmd->add_option("--shots", s_shots, "shot count")->required();
  sample_cmd->add_option("--out", s_out, "output path");

  // tomo
  auto* tomo = app.add_subcommand("tomo", "reconstruct a state over spacetime");
  std::string t_oracle, t_dims, t_out;
  std::int64_t t_shots = 0;
  tomo->add_option("--oracle", t_oracle, "self:FILE or noisy:FILE")
      ->required();
  tomo->add_option("--dims", t_dims, "region dims, e.g. 2,2")->required();
  tomo->add_option("--shots", t_shots, "shots per setting (noisy mode)");
  tomo->add_option("--out", t_out, "output path");

  // compass
  auto* compass =
      app.add_subcommand("compass", "recover left products via a compass qubit");
  std::vector<std::string> c_ensembles;
  std::string c_out;
  compass->add_option("--ensemble", c_ensembles, "ensemble JSON file(s)")
      ->required();
  compass->add_option("--out", c_out, "output path");

  // procmat
  auto* procmat =
      app.add_subcommand("procmat", "ordered process matrix utilities");
  std::string p_state, p_channel, p_out;
  bool p_first_order = false;
  procmat->add_option("--state", p_state, "initial state spec")->required();
  procmat->add_option("--channel", p_channel, "channel spec")->required();
  procmat->add_flag("--first-order", p_first_order,
                    "include the first-order term and its left-product check");
  procmat->add_option("--out", p_out, "output path");

  // cam-check
  auto* cam = app.add_subcommand(
      "cam-check", "causally agnostic measurement condition checks");
  std::string m_hxr, m_hyr, m_dims, m_unitary, m_sectors, m_out;
  cam->add_option("--hxr", m_hxr, "H_XR JSON (commutator mode)");
  cam->add_option("--hyr", m_hyr, "H_YR JSON (commutator mode)");
  cam->add_option("--dims", m_dims, "dX,dY,dR (commutator mode)");
  cam->add_option("--unitary", m_unitary, "U JSON (controlled mode)");
  cam->add_option("--sectors", m_sectors,
                  "sector file {dim_x, dim_r, sectors:[...]}");
  cam->add_option("--out", m_out, "output path");

  // verify-examples
  auto* verify = app.add_subcommand(
      "verify-examples", "replay every reference fixture and report");
  std::string v_out, v_fault;
  verify->add_option("--out", v_out, "JSON report path");
  verify->add_option("--inject-fault", v_fault,
                     "perturb the named fixture (harness self-test)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (product->parsed()) return run_product(kind, state, channel, out);
    if (interfere->parsed()) {
      const Ensemble e = i_ensemble.empty()
                             ? ensemble_from_flags(i_states, i_channels,
                                                   i_weights)
                             : load_ensemble(i_ensemble);
      return run_interfere(g, e, i_v, i_w, i_probe, i_time_reversed, i_shots,
                           i_sweep, i_out);
    }
    if (sample_cmd->parsed()) return run_sample(g, s_record, s_shots, s_out);
    if (tomo->parsed()) return run_tomo(g, t_oracle, t_dims, t_shots, t_out);
    if (compass->parsed()) return run_compass(c_ensembles, c_out);
    if (procmat->parsed()) {
      return run_procmat(p_state, p_channel, p_first_order, p_out);
    }
    if (cam->parsed()) {
      return run_cam_check(m_hxr, m_hyr, m_dims, m_unitary, m_sectors, m_out);
    }
    if (verify->parsed()) return run_verify_examples(g, v_out, v_fault);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
