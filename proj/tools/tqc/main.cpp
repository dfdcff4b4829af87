// Copyright 2026 The tqc developers
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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tqc/circuit.hpp"
#include "tqc/errors.hpp"
#include "tqc/kak.hpp"
#include "tqc/linalg.hpp"
#include "tqc/synth.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

struct CliConfig {
  double tolerance = 1e-9;
  double classify_tolerance = tqc::kClassifyTol;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output_path;
  std::string format = "json";
  std::optional<int> force_class;
};

std::string read_input(const std::string &path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw tqc::ParseError("cannot open input file: " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_output(const CliConfig &cfg, const std::string &doc) {
  if (cfg.output_path) {
    std::ofstream f(*cfg.output_path, std::ios::binary);
    if (!f) throw tqc::ParseError("cannot open output file: " + *cfg.output_path);
    f << doc;
    if (!doc.empty() && doc.back() != '\n') f << '\n';
  } else {
    std::cout << doc;
    if (!doc.empty() && doc.back() != '\n') std::cout << '\n';
  }
}

json mat2_json(const tqc::Mat2 &m) {
  json rows = json::array();
  for (int i = 0; i < 2; ++i) {
    json row = json::array();
    for (int j = 0; j < 2; ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

tqc::SynthOptions synth_options(const CliConfig &cfg) {
  tqc::SynthOptions o;
  o.tol = cfg.tolerance;
  o.class_tol = cfg.classify_tolerance;
  if (cfg.force_class) {
    switch (*cfg.force_class) {
      case 0: o.force_class = tqc::GateClass::Local; break;
      case 1: o.force_class = tqc::GateClass::OneCnot; break;
      case 2: o.force_class = tqc::GateClass::TwoCnot; break;
      default: o.force_class = tqc::GateClass::ThreeCnot; break;
    }
  }
  return o;
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int cmd_decompose(const CliConfig &cfg, const std::string &input_path) {
  const tqc::Mat4 m = tqc::parse_matrix(read_input(input_path));
  const auto [su, norm_phase] = tqc::su4_normalize(m);
  tqc::KakDecomposition kd = tqc::kak_decompose(su);
  kd.global_phase += norm_phase;
  const tqc::GateClass cls = tqc::classify(kd.params, cfg.classify_tolerance);
  if (cfg.format == "json") {
    const json doc{{"hx", kd.params.hx},
                   {"hy", kd.params.hy},
                   {"hz", kd.params.hz},
                   {"pre_a", mat2_json(kd.pre_a)},
                   {"pre_b", mat2_json(kd.pre_b)},
                   {"post_a", mat2_json(kd.post_a)},
                   {"post_b", mat2_json(kd.post_b)},
                   {"global_phase", kd.global_phase},
                   {"class", tqc::to_string(cls)}};
    write_output(cfg, doc.dump());
  } else {
    auto mat2_text = [](const char *name, const tqc::Mat2 &m) {
      std::string s = std::string(name) + ":\n";
      for (int i = 0; i < 2; ++i) {
        s += " ";
        for (int j = 0; j < 2; ++j) {
          char buf[96];
          std::snprintf(buf, sizeof buf, " %.17g%+.17gi", m(i, j).real(),
                        m(i, j).imag());
          s += buf;
        }
        s += "\n";
      }
      return s;
    };
    std::string out;
    out += "h = (" + fmt17(kd.params.hx) + ", " + fmt17(kd.params.hy) + ", " +
           fmt17(kd.params.hz) + ")\n";
    out += "global_phase = " + fmt17(kd.global_phase) + "\n";
    out += "class = " + std::string(tqc::to_string(cls)) + "\n";
    out += mat2_text("pre_a", kd.pre_a);
    out += mat2_text("pre_b", kd.pre_b);
    out += mat2_text("post_a", kd.post_a);
    out += mat2_text("post_b", kd.post_b);
    write_output(cfg, out);
  }
  return kExitOk;
}

int cmd_classify(const CliConfig &cfg, const std::string &input_path) {
  const tqc::Mat4 m = tqc::parse_matrix(read_input(input_path));
  const auto su = tqc::su4_normalize(m).first;
  const tqc::GateClass cls =
      tqc::classify(tqc::kak_decompose(su).params, cfg.classify_tolerance);
  if (cfg.format == "json") {
    write_output(cfg, json{{"class", tqc::to_string(cls)},
                           {"cnot_count", tqc::cnot_count(cls)}}
                          .dump());
  } else {
    write_output(cfg, std::string(tqc::to_string(cls)) + " (" +
                          std::to_string(tqc::cnot_count(cls)) + " CNOTs)\n");
  }
  return kExitOk;
}

int cmd_synth(const CliConfig &cfg, const std::string &input_path) {
  const tqc::Mat4 m = tqc::parse_matrix(read_input(input_path));
  const tqc::SynthesisResult r = tqc::synth(m, synth_options(cfg));
  if (cfg.format == "json") {
    write_output(cfg, tqc::serialize_circuit(r.circuit));
  } else {
    write_output(cfg, tqc::circuit_to_text(r.circuit));
  }
  std::cerr << "synth: " << tqc::cnot_count(r.circuit) << " CNOTs, class "
            << tqc::to_string(r.class_used) << ", distance "
            << fmt17(r.verification_distance) << "\n";
  return kExitOk;
}

int cmd_verify(const CliConfig &cfg, const std::string &circuit_path,
               const std::string &matrix_path) {
  const tqc::Circuit c = tqc::parse_circuit(read_input(circuit_path));
  const tqc::Mat4 m = tqc::parse_matrix(read_input(matrix_path));
  const tqc::VerificationReport r = tqc::verify(c, m, cfg.tolerance);
  if (cfg.format == "json") {
    write_output(cfg, json{{"passed", r.passed},
                           {"distance", r.distance},
                           {"relative_phase", r.relative_phase},
                           {"tolerance", r.tolerance}}
                          .dump());
  } else {
    write_output(cfg, std::string(r.passed ? "PASS" : "FAIL") + " distance " +
                          fmt17(r.distance) + " relative_phase " +
                          fmt17(r.relative_phase) + "\n");
  }
  return r.passed ? kExitOk : kExitVerifyFailed;
}

int cmd_optimize(const CliConfig &cfg, const std::string &input_path) {
  const tqc::Circuit c = tqc::parse_circuit(read_input(input_path));
  const int before = tqc::cnot_count(c);
  const tqc::SynthesisResult r = tqc::optimize(c, synth_options(cfg));
  if (cfg.format == "json") {
    write_output(cfg, tqc::serialize_circuit(r.circuit));
  } else {
    write_output(cfg, tqc::circuit_to_text(r.circuit));
  }
  std::cerr << "optimize: CNOTs " << before << " -> "
            << tqc::cnot_count(r.circuit) << ", distance "
            << fmt17(r.verification_distance) << "\n";
  return kExitOk;
}

int cmd_gate(const CliConfig &cfg, const std::string &name,
             const std::vector<double> &args) {
  const tqc::Mat4 m = tqc::named_gate(name, args);
  write_output(cfg, cfg.format == "json" ? tqc::serialize_matrix(m)
                                         : tqc::matrix_to_text(m));
  return kExitOk;
}

int cmd_random(const CliConfig &cfg) {
  std::uint64_t seed;
  if (cfg.seed) {
    seed = *cfg.seed;
  } else {
    std::random_device rd;
    seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  const tqc::Mat4 m = tqc::haar_su4(seed).matrix();
  write_output(cfg, cfg.format == "json" ? tqc::serialize_matrix(m)
                                         : tqc::matrix_to_text(m));
  std::cerr << "random: seed " << seed << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Two-qubit gate compiler: canonical decomposition, CNOT-cost "
               "classification and minimal-CNOT circuit synthesis"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string input = "-", circuit_file, matrix_file, gate_name;
  std::vector<double> gate_args;
  std::uint64_t seed_value = 0;
  int force_class_value = -1;

  auto add_common = [&](CLI::App *sub, bool with_force) {
    sub->add_option("--tol", cfg.tolerance, "verification tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--class-tol", cfg.classify_tolerance,
                    "gate-class decision tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", cfg.output_path, "write the result here");
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    if (with_force)
      sub->add_option("--force-class", force_class_value,
                      "skip dispatch and force a CNOT count (testing hook)")
          ->check(CLI::Range(0, 3));
  };

  CLI::App *dec = app.add_subcommand("decompose",
                                     "print the canonical decomposition of a "
                                     "4x4 unitary (matrix JSON, - for stdin)");
  dec->add_option("matrix", input, "matrix JSON file")->required();
  add_common(dec, false);

  CLI::App *cls = app.add_subcommand("classify", "print the minimal CNOT cost");
  cls->add_option("matrix", input, "matrix JSON file")->required();
  add_common(cls, false);

  CLI::App *syn =
      app.add_subcommand("synth", "synthesize a minimal-CNOT circuit");
  syn->add_option("matrix", input, "matrix JSON file")->required();
  add_common(syn, true);

  CLI::App *ver = app.add_subcommand("verify",
                                     "check a circuit against a target matrix "
                                     "up to global phase");
  ver->add_option("circuit", circuit_file, "circuit JSON file")->required();
  ver->add_option("matrix", matrix_file, "matrix JSON file")->required();
  add_common(ver, false);

  CLI::App *opt = app.add_subcommand("optimize",
                                     "re-synthesize a circuit with the fewest "
                                     "CNOTs");
  opt->add_option("circuit", input, "circuit JSON file")->required();
  add_common(opt, true);

  CLI::App *gat = app.add_subcommand("gate", "emit a named gate as matrix JSON");
  gat->add_option("name", gate_name,
                  "ID, CNOT, CZ, SWAP, ISWAP, CPHASE phi, CAN hx hy hz")
      ->required();
  gat->add_option("args", gate_args, "gate parameters in radians");
  add_common(gat, false);

  CLI::App *rnd = app.add_subcommand("random", "emit a Haar-random SU(4) gate");
  rnd->add_option("--seed", seed_value, "64-bit seed (output is deterministic)");
  add_common(rnd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitBadInput;
  }
  if (force_class_value >= 0) cfg.force_class = force_class_value;
  if (rnd->count("--seed") > 0) cfg.seed = seed_value;

  try {
    if (dec->parsed()) return cmd_decompose(cfg, input);
    if (cls->parsed()) return cmd_classify(cfg, input);
    if (syn->parsed()) return cmd_synth(cfg, input);
    if (ver->parsed()) return cmd_verify(cfg, circuit_file, matrix_file);
    if (opt->parsed()) return cmd_optimize(cfg, input);
    if (gat->parsed()) return cmd_gate(cfg, gate_name, gate_args);
    if (rnd->parsed()) return cmd_random(cfg);
  } catch (const tqc::VerificationFailedError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const tqc::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
