// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

// oplab -- finite-dimensional operator lab for polar decompositions,
// Aluthge / Duggal / mean transforms, and complex-symmetry certification
// of weighted shifts and arbitrary complex matrices.
//
// Exit codes: 0 success, 1 expectation/property mismatch, 2 usage error.

#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oplab/io.hpp"
#include "oplab/matrix.hpp"
#include "oplab/polar.hpp"
#include "oplab/repro.hpp"
#include "oplab/shift.hpp"
#include "oplab/suite.hpp"
#include "oplab/symmetry.hpp"

namespace {

using namespace oplab;
using nlohmann::json;

struct InputSelector {
  std::string shift_spec;
  std::string matrix_path;
};

struct LoadedInput {
  ComplexMatrix matrix;
  std::optional<WeightedShift> shift;
};

LoadedInput load_input(const InputSelector& in) {
  if (!in.shift_spec.empty() && !in.matrix_path.empty())
    throw CLI::ValidationError("pass --shift or --matrix, not both");
  if (in.shift_spec.empty() && in.matrix_path.empty())
    throw CLI::ValidationError("an input is required: --shift or --matrix");
  LoadedInput out;
  if (!in.shift_spec.empty()) {
    out.shift = io::shift_from_cli_spec(in.shift_spec);
    out.matrix = to_matrix(*out.shift);
  } else {
    out.matrix = io::read_matrix_file(in.matrix_path);
    if (!out.matrix.is_square())
      throw std::invalid_argument("matrix input must be square");
  }
  return out;
}

void print_matrix(const std::string& name, const ComplexMatrix& m) {
  std::printf("%s (%zux%zu):\n", name.c_str(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::printf(" ");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const cxd v = m(i, j);
      if (v.imag() == 0.0)
        std::printf(" %12.6g", v.real());
      else
        std::printf(" %12.6g%+.6gi", v.real(), v.imag());
    }
    std::printf("\n");
  }
}

json matrix_json(const ComplexMatrix& m) {
  return json::parse(io::matrix_to_json(m));
}

json verdict_json(const SymmetryVerdict& v, const CertifyConfig& cfg) {
  return json::parse(io::verdict_to_json(v, cfg.tau_yes, cfg.tau_no));
}

SymmetryVerdict certify_or_inconclusive(const ComplexMatrix& m,
                                        const CertifyConfig& cfg) {
  try {
    return certify_cs(m, cfg);
  } catch (const std::exception&) {
    SymmetryVerdict v;
    v.status = CsStatus::Inconclusive;
    v.seed = cfg.seed;
    return v;
  }
}

void print_verdict_line(const char* label, const SymmetryVerdict& v) {
  std::printf("  %-18s %-13s residual %.6g  (restarts used: %d)\n", label,
              to_string(v.status), v.residual, v.restarts_used);
}

int cmd_analyze(const InputSelector& in, std::vector<double> ts,
                const CertifyConfig& cfg, const std::string& format) {
  const LoadedInput input = load_input(in);
  const ComplexMatrix& t = input.matrix;
  if (ts.empty()) ts = {0.0, 0.25, 0.5, 0.75, 1.0};

  const PolarParts pp = polar_decompose(t);
  const ComplexMatrix td = duggal(t);

  struct TransformEntry {
    std::string name;
    double t;
    ComplexMatrix m;
  };
  std::vector<TransformEntry> transforms;
  transforms.push_back({"duggal", 1.0, td});
  for (double s : ts)
    if (s >= 0.0 && s <= 1.0)
      transforms.push_back({"aluthge", s, aluthge_t(t, s)});
  for (double s : ts)
    if (s >= 0.0 && s <= 0.5)
      transforms.push_back({"mean", s, mean_t(t, s)});

  json doc;
  doc["matrix"] = matrix_json(t);
  doc["polar"] = {{"U", matrix_json(pp.U)}, {"P", matrix_json(pp.P)}};
  doc["polar_checks"] = {
      {"partial_isometry", is_partial_isometry(pp.U)},
      {"unitary", is_unitary(pp.U)},
      {"reconstruction_error", frobenius_norm(matmul(pp.U, pp.P) - t)}};

  json jt = json::array();
  for (const TransformEntry& e : transforms)
    jt.push_back({{"kind", e.name}, {"t", e.t}, {"matrix", matrix_json(e.m)}});
  doc["transforms"] = jt;

  if (input.shift) {
    const WeightedShift& s = *input.shift;
    json jc;
    jc["cs"] = cs_criterion(s);
    jc["duggal_cs"] = duggal_cs_criterion(s);
    jc["both_cs"] = both_cs_criterion(s);
    json ja = json::array();
    for (double tt : ts)
      if (tt > 0.0 && tt <= 1.0)
        ja.push_back({{"t", tt}, {"cs", aluthge_cs_criterion(s, tt)}});
    jc["aluthge_cs"] = ja;
    json jm = json::array();
    for (double tt : ts)
      if (tt >= 0.0 && tt <= 0.5)
        jm.push_back({{"t", tt}, {"cs", mean_cs_criterion(s, tt)}});
    jc["mean_cs"] = jm;
    doc["criteria"] = jc;
  }

  json jv;
  jv["T"] = verdict_json(certify_or_inconclusive(t, cfg), cfg);
  for (const TransformEntry& e : transforms) {
    char key[64];
    std::snprintf(key, sizeof(key), "%s(t=%g)", e.name.c_str(), e.t);
    jv[key] = verdict_json(certify_or_inconclusive(e.m, cfg), cfg);
  }
  doc["certify"] = jv;

  json jp;
  try {
    jp["normal"] = is_normal(t);
    jp["quasinormal"] = is_quasinormal(t);
    jp["binormal"] = is_binormal(t);
    jp["centered"] = is_centered(t);
  } catch (const std::exception& e) {
    jp["error"] = e.what();
  }
  doc["predicates"] = jp;

  if (format == "report") {
    std::printf("%s\n", doc.dump(2).c_str());
    return 0;
  }

  print_matrix("T", t);
  print_matrix("U (polar factor)", pp.U);
  print_matrix("P = |T|", pp.P);
  std::printf("polar: partial isometry %s, unitary %s\n",
              doc["polar_checks"]["partial_isometry"].get<bool>() ? "yes" : "no",
              doc["polar_checks"]["unitary"].get<bool>() ? "yes" : "no");
  for (const TransformEntry& e : transforms) {
    char name[64];
    std::snprintf(name, sizeof(name), "%s(t=%g)", e.name.c_str(), e.t);
    print_matrix(name, e.m);
  }
  if (input.shift) {
    std::printf("criteria:\n");
    std::printf("  cs=%s duggal_cs=%s both_cs=%s\n",
                doc["criteria"]["cs"].get<bool>() ? "true" : "false",
                doc["criteria"]["duggal_cs"].get<bool>() ? "true" : "false",
                doc["criteria"]["both_cs"].get<bool>() ? "true" : "false");
    for (const json& e : doc["criteria"]["aluthge_cs"])
      std::printf("  aluthge_cs(t=%g)=%s\n", e["t"].get<double>(),
                  e["cs"].get<bool>() ? "true" : "false");
    for (const json& e : doc["criteria"]["mean_cs"])
      std::printf("  mean_cs(t=%g)=%s\n", e["t"].get<double>(),
                  e["cs"].get<bool>() ? "true" : "false");
  }
  std::printf("certifier verdicts:\n");
  for (const auto& [key, val] : doc["certify"].items())
    std::printf("  %-18s %-13s residual %.6g\n", key.c_str(),
                val["status"].get<std::string>().c_str(),
                val["residual"].get<double>());
  if (doc["predicates"].contains("normal"))
    std::printf("predicates: normal=%s quasinormal=%s binormal=%s centered=%s\n",
                doc["predicates"]["normal"].get<bool>() ? "true" : "false",
                doc["predicates"]["quasinormal"].get<bool>() ? "true" : "false",
                doc["predicates"]["binormal"].get<bool>() ? "true" : "false",
                doc["predicates"]["centered"].get<bool>() ? "true" : "false");
  return 0;
}

int cmd_transform(const InputSelector& in, const std::string& kind, double t,
                  const std::string& out_path, const std::string& format) {
  const LoadedInput input = load_input(in);
  ComplexMatrix m;
  if (kind == "duggal")
    m = duggal(input.matrix);
  else if (kind == "aluthge")
    m = aluthge_t(input.matrix, t);
  else if (kind == "mean")
    m = mean_t(input.matrix, t);
  else if (kind == "polar-u")
    m = polar_decompose(input.matrix).U;
  else if (kind == "modulus")
    m = polar_decompose(input.matrix).P;
  else
    throw CLI::ValidationError("unknown transform kind: " + kind);

  if (!out_path.empty()) io::write_matrix_file(out_path, m);
  if (format == "report")
    std::printf("%s\n", io::matrix_to_json(m).c_str());
  else
    print_matrix(kind, m);
  return 0;
}

int cmd_certify(const InputSelector& in, const CertifyConfig& cfg,
                const std::string& format) {
  const LoadedInput input = load_input(in);
  const SymmetryVerdict v = certify_or_inconclusive(input.matrix, cfg);
  if (format == "report") {
    std::printf("%s\n", io::verdict_to_json(v, cfg.tau_yes, cfg.tau_no).c_str());
  } else {
    print_verdict_line("input", v);
    if (v.certificate) print_matrix("certificate J", *v.certificate);
  }
  return 0;
}

int cmd_repro(const std::string& case_id, bool all) {
  std::vector<std::string> ids;
  if (all)
    ids = repro::case_ids();
  else
    ids.push_back(case_id);
  bool ok = true;
  for (const std::string& id : ids) {
    repro::CaseResult res;
    try {
      res = repro::run_case(id);
    } catch (const std::out_of_range&) {
      std::fprintf(stderr, "unknown case id: %s\n", id.c_str());
      return 2;
    }
    std::printf("%s", repro::format_result(res).c_str());
    ok = ok && res.pass;
  }
  return ok ? 0 : 1;
}

int cmd_suite(std::uint64_t seed, int cases, unsigned threads,
              bool no_certifier) {
  suite::SuiteOptions opt;
  opt.seed = seed;
  opt.n_cases = cases;
  opt.threads = threads;
  opt.with_certifier = !no_certifier;
  const suite::SuiteReport rep = suite::run_property_suite(opt);
  std::printf("%s", rep.to_text().c_str());
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oplab: polar decompositions, Aluthge/Duggal/mean transforms, "
               "and complex-symmetry certification for finite matrices"};
  app.require_subcommand(1);

  InputSelector in;
  CertifyConfig cfg;
  std::string format = "pretty";
  std::vector<double> ts;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--shift", in.shift_spec,
                    "comma-separated weights, e.g. 1,2,1 or 1+2i,3i");
    sub->add_option("--matrix", in.matrix_path, "matrix JSON file");
  };
  auto add_certify_opts = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "certifier seed");
    sub->add_option("--restarts", cfg.restarts, "certifier restarts");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "pretty|report")
        ->check(CLI::IsMember({"pretty", "report"}));
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "full report: polar parts, transforms, criteria, verdicts");
  add_input(analyze);
  add_certify_opts(analyze);
  add_format(analyze);
  analyze->add_option("--t", ts, "transform parameters to evaluate");

  CLI::App* transform =
      app.add_subcommand("transform", "compute one transform of the input");
  add_input(transform);
  add_format(transform);
  std::string kind = "aluthge";
  double tval = 0.5;
  std::string out_path;
  transform->add_option("--kind", kind,
                        "duggal|aluthge|mean|polar-u|modulus");
  transform->add_option("--t", tval, "parameter for aluthge/mean");
  transform->add_option("--out", out_path, "write result to matrix JSON file");

  CLI::App* certify =
      app.add_subcommand("certify", "complex-symmetry verdict for the input");
  add_input(certify);
  add_certify_opts(certify);
  add_format(certify);

  CLI::App* repro_cmd = app.add_subcommand(
      "repro", "run a reproducibility case from the catalog (exit 1 on "
               "mismatch)");
  std::string case_id;
  bool repro_all = false;
  repro_cmd->add_option("case", case_id, "case id");
  repro_cmd->add_flag("--all", repro_all, "run every case");
  repro_cmd->add_flag_callback("--list", [] {
    for (const std::string& id : oplab::repro::case_ids())
      std::printf("%s\n", id.c_str());
    std::exit(0);
  });

  CLI::App* suite_cmd = app.add_subcommand(
      "suite", "randomized property suite (exit 1 on any failure)");
  std::uint64_t suite_seed = 1;
  int suite_cases = 100;
  unsigned suite_threads = 0;
  bool no_certifier = false;
  suite_cmd->add_option("--seed", suite_seed, "suite seed");
  suite_cmd->add_option("--cases", suite_cases, "number of random cases")
      ->check(CLI::PositiveNumber);
  suite_cmd->add_option("--threads", suite_threads, "worker threads (0=auto)");
  suite_cmd->add_flag("--no-certifier", no_certifier,
                      "closed-form criteria only (fast)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze))
      return cmd_analyze(in, ts, cfg, format);
    if (app.got_subcommand(transform))
      return cmd_transform(in, kind, tval, out_path, format);
    if (app.got_subcommand(certify)) return cmd_certify(in, cfg, format);
    if (app.got_subcommand(repro_cmd)) {
      if (!repro_all && case_id.empty()) {
        std::fprintf(stderr, "repro: a case id or --all is required\n");
        return 2;
      }
      return cmd_repro(case_id, repro_all);
    }
    if (app.got_subcommand(suite_cmd))
      return cmd_suite(suite_seed, suite_cases, suite_threads, no_certifier);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
