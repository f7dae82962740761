// Copyright 2026 The sepcheck Authors
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

#include "sepcheck/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "sepcheck/criteria.hpp"
#include "sepcheck/error.hpp"
#include "sepcheck/io.hpp"
#include "sepcheck/oracle.hpp"
#include "sepcheck/state_factory.hpp"

namespace sepcheck::cli {

namespace {

struct GenOptions {
  std::string kind;
  std::optional<int> n;
  std::optional<double> p;
  std::optional<int> d;
  std::vector<int> dims;
  std::uint64_t seed = 0;
  int terms = 4;
  std::string mode = "full-sep";
  std::string partition;
  std::string out_path;
};

struct CheckOptions {
  std::string in_path;
  std::string criteria = "all";
  double tol = kDefaultTolerance;
  std::string format;
  std::string out_path;
};

struct ThresholdOptions {
  std::string criterion;
  int n = 3;
  double tol = kDefaultTolerance;
  double lo = 0.0;
  double hi = 1.0;
  std::string format;
};

struct OracleOptions {
  std::vector<int> dims;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
  std::vector<std::string> modes{"full-sep"};
  std::string partition;
  std::string criteria = "all";
  double tol = kDefaultTolerance;
  int terms = 4;
  std::string format;
};

std::string default_format() {
  if (const char* env = std::getenv(kFormatEnv)) {
    const std::string v = env;
    if (v == "json" || v == "text") return v;
  }
  return "text";
}

std::string generator_line(const std::vector<std::string>& args) {
  std::string s = "sepcheck";
  for (const auto& a : args) s += ' ' + a;
  return s;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io: return kIoError;
    case ErrorKind::Bracket: return kBracketFailure;
    default: return kInputError;
  }
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw Error(ErrorKind::Io, "cannot open '" + out_path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw Error(ErrorKind::Io, "failed writing '" + out_path + "'");
}

template <typename T>
const T& need(const std::optional<T>& v, const char* flag, const std::string& kind) {
  if (!v) throw Error(ErrorKind::InvalidArgument, "gen " + kind + " needs " + flag);
  return *v;
}

SamplingMode parse_mode(const std::string& text, const std::string& partition, const SubsystemDims& dims) {
  if (text == "full-sep") return SamplingMode::fully_separable();
  if (text == "bisep-mixed") return SamplingMode::biseparable_mixed();
  if (text == "bisep-fixed") {
    if (partition.empty()) {
      return SamplingMode::biseparable_fixed(Bipartition({1}, dims.parties()));
    }
    return SamplingMode::biseparable_fixed(Bipartition::parse(partition, dims.parties()));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown mode '" + text + "' (full-sep, bisep-fixed, bisep-mixed)");
}

std::vector<CriterionId> parse_selector(const std::string& text) {
  if (text == "all") return {std::begin(kAllCriteria), std::end(kAllCriteria)};
  std::vector<CriterionId> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto id = parse_criterion(item);
    if (!id) throw Error(ErrorKind::InvalidArgument, "unknown criterion '" + item + "'");
    if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "empty criteria selector");
  return out;
}

DensityMatrix generate(const GenOptions& o, StateMetadata& meta) {
  meta.label = o.kind;
  if (o.kind == "ghz") return ghz(need(o.n, "--n", o.kind));
  if (o.kind == "ghz-noise") return ghz_white_noise({need(o.n, "--n", o.kind), need(o.p, "--p", o.kind)});
  if (o.kind == "w") return w_state(need(o.n, "--n", o.kind));
  if (o.kind == "ghz-qudit") return ghz_qudit(need(o.n, "--n", o.kind), need(o.d, "--d", o.kind));
  if (o.kind == "random-product" || o.kind == "random-separable") {
    if (o.dims.empty()) throw Error(ErrorKind::InvalidArgument, "gen " + o.kind + " needs --dims");
    const SubsystemDims dims(o.dims);
    meta.seed = o.seed;
    if (o.kind == "random-product") return random_pure_product(dims, o.seed);
    return random_separable_mixture({dims, o.terms, o.seed, parse_mode(o.mode, o.partition, dims)});
  }
  throw Error(ErrorKind::InvalidArgument, "unknown state kind '" + o.kind + "'");
}

int cmd_gen(const GenOptions& o, const std::vector<std::string>& args, std::ostream& out) {
  StateMetadata meta;
  meta.generator = generator_line(args);
  const DensityMatrix rho = generate(o, meta);
  if (o.out_path.empty()) {
    out << state_to_json(rho, meta).dump() << '\n';
  } else {
    write_state_file(o.out_path, rho, meta);
  }
  return kOk;
}

CheckReport run_check(const StateFile& state, const std::string& input, const std::vector<CriterionId>& selected,
                      double tol) {
  const DensityMatrix& rho = state.rho;
  const SubsystemDims& dims = rho.dims();
  const bool qubits = dims.all_qubits();
  auto wants = [&](CriterionId id) { return std::find(selected.begin(), selected.end(), id) != selected.end(); };

  CheckReport report;
  report.input = input;
  report.dims.assign(dims.levels().begin(), dims.levels().end());
  report.label = state.metadata.label;
  auto skip = [&](CriterionId id, std::string reason) { report.skipped.push_back({id, std::move(reason)}); };
  const std::string qubit_only = "requires all-qubit dims, input has (" + dims.to_string() + ")";

  // Pairs (t1, t2) and (t4a, t6) share a code path; on qubits the qudit id reduces to the qubit one.
  auto pair = [&](CriterionId qubit_id, CriterionId qudit_id, auto check) {
    if (!wants(qubit_id) && !wants(qudit_id)) return;
    if (qubits) {
      report.reports.push_back(check(rho, tol));
      if (wants(qubit_id) && wants(qudit_id)) {
        skip(qudit_id, "identical to " + std::string(short_id(qubit_id)) + " on all-qubit dims");
      }
    } else {
      if (wants(qubit_id)) skip(qubit_id, qubit_only + "; see " + std::string(short_id(qudit_id)));
      if (wants(qudit_id)) report.reports.push_back(check(rho, tol));
    }
  };
  auto qubit_check = [&](CriterionId id, auto check) {
    if (!wants(id)) return;
    if (qubits) {
      report.reports.push_back(check(rho, tol));
    } else {
      skip(id, qubit_only);
    }
  };

  pair(CriterionId::BisepQubit, CriterionId::BisepQudit, check_bisep);
  qubit_check(CriterionId::WType, check_w_type);
  pair(CriterionId::FullSepGhzType, CriterionId::FullSepQudit, check_fullsep_ghz_type);
  qubit_check(CriterionId::FullSepWType, check_fullsep_w_type);
  if (wants(CriterionId::GhzNoiseExact)) {
    if (!qubits) {
      skip(CriterionId::GhzNoiseExact, qubit_only);
    } else if (!match_ghz_noise(rho)) {
      skip(CriterionId::GhzNoiseExact, "input is not a GHZ white-noise mixture");
    } else {
      report.reports.push_back(check_ghz_noise_exact(rho, tol));
    }
  }
  report.overall = overall_classification(report.reports);
  return report;
}

int cmd_check(const CheckOptions& o, std::ostream& out) {
  const auto selected = parse_selector(o.criteria);
  const StateFile state = read_state_file(o.in_path);
  const CheckReport report = run_check(state, o.in_path, selected, o.tol);
  const std::string text = o.format == "json" ? report_to_json(report).dump(2) + "\n" : report_to_text(report);
  emit(text, o.out_path, out);
  return kOk;
}

int cmd_threshold(const ThresholdOptions& o, std::ostream& out) {
  auto id = parse_criterion(o.criterion);
  if (!id) throw Error(ErrorKind::InvalidArgument, "unknown criterion '" + o.criterion + "'");
  if (o.n < 2) throw Error(ErrorKind::InvalidArgument, "--n must be at least 2");
  const double p = critical_noise(*id, o.n, o.lo, o.hi, o.tol);

  std::optional<double> closed;
  switch (*id) {
    case CriterionId::FullSepGhzType:
    case CriterionId::FullSepQudit:
    case CriterionId::GhzNoiseExact:
      closed = ghz_noise_threshold(o.n);
      break;
    case CriterionId::BisepQubit:
    case CriterionId::BisepQudit: {
      const double half = std::ldexp(1.0, o.n - 1);
      closed = half / (2.0 * half - 1.0);
      break;
    }
    default:
      break;
  }

  if (o.format == "json") {
    nlohmann::json doc{{"criterion", short_id(*id)}, {"n", o.n}, {"tolerance", o.tol}, {"p_critical", p}};
    if (closed) {
      doc["closed_form"] = *closed;
      doc["difference"] = p - *closed;
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "criterion: " << short_id(*id) << ' ' << name(*id) << '\n';
    out << "n: " << o.n << '\n';
    out << "p_critical: " << format_double(p) << '\n';
    if (closed) {
      out << "closed_form: " << format_double(*closed) << '\n';
      out << "difference: " << format_double(p - *closed) << '\n';
    }
  }
  return kOk;
}

int cmd_oracle(const OracleOptions& o, std::ostream& out) {
  if (o.dims.empty()) throw Error(ErrorKind::InvalidArgument, "oracle needs --dims");
  OracleRunSpec spec{.dims = SubsystemDims(o.dims)};
  spec.samples = o.samples.value_or(spec.dims.all_qubits() ? 10000 : 1000);
  spec.seed = o.seed;
  spec.tol = o.tol;
  spec.max_terms = o.terms;
  for (const auto& m : o.modes) spec.modes.push_back(parse_mode(m, o.partition, spec.dims));

  const bool all_full = std::all_of(spec.modes.begin(), spec.modes.end(),
                                    [](const SamplingMode& m) { return m.kind == SamplingKind::FullySeparable; });
  if (o.criteria == "all") {
    for (CriterionId id : kAllCriteria) {
      if (id == CriterionId::GhzNoiseExact || !applicable(id, spec.dims)) continue;
      if (certifies_non_full_separability(id) && !all_full) continue;
      // On qubits the qudit ids duplicate the qubit ones.
      if (spec.dims.all_qubits() && (id == CriterionId::BisepQudit || id == CriterionId::FullSepQudit)) continue;
      spec.criteria.push_back(id);
    }
  } else {
    spec.criteria = parse_selector(o.criteria);
  }

  const OracleSummary summary = run_soundness(spec);
  if (o.format == "json") {
    out << summary_to_json(summary, spec).dump(2) << '\n';
  } else {
    out << summary_to_text(summary, spec);
  }
  return summary.sound() ? kOk : kOracleViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Element-wise separability criteria for multipartite density matrices", "sepcheck"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json"};

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a state file");
  gen_cmd->add_option("kind", gen.kind, "ghz | ghz-noise | w | ghz-qudit | random-product | random-separable")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Party count");
  gen_cmd->add_option("--p", gen.p, "White-noise weight in [0, 1]");
  gen_cmd->add_option("--d", gen.d, "Levels per party (ghz-qudit)");
  gen_cmd->add_option("--dims", gen.dims, "Comma-separated levels, e.g. 2,2,2")->delimiter(',');
  gen_cmd->add_option("--seed", gen.seed, "Sampler seed");
  gen_cmd->add_option("--terms", gen.terms, "Mixture terms (random-separable)");
  gen_cmd->add_option("--mode", gen.mode, "full-sep | bisep-fixed | bisep-mixed (random-separable)");
  gen_cmd->add_option("--partition", gen.partition, "Split for bisep-fixed, e.g. 1|2,3");
  gen_cmd->add_option("-o,--out", gen.out_path, "Output path (stdout if omitted)");

  CheckOptions check;
  check.format = default_format();
  auto* check_cmd = app.add_subcommand("check", "Evaluate criteria on a state file");
  check_cmd->add_option("input", check.in_path, "State file")->required();
  check_cmd->add_option("--criteria", check.criteria, "all, or a comma list of t1,t2,t3,t4a,t4b,t5,t6");
  check_cmd->add_option("--tol", check.tol, "Violation tolerance");
  check_cmd->add_option("--format", check.format, "text | json")->check(CLI::IsMember(formats));
  check_cmd->add_option("-o,--out", check.out_path, "Report path (stdout if omitted)");

  ThresholdOptions threshold;
  threshold.format = default_format();
  auto* threshold_cmd = app.add_subcommand("threshold", "Critical noise weight on the GHZ white-noise family");
  threshold_cmd->add_option("--criterion", threshold.criterion, "t1, t2, t4a, t5 or t6")->required();
  threshold_cmd->add_option("--n", threshold.n, "Qubit count")->required();
  threshold_cmd->add_option("--tol", threshold.tol, "Bisection interval width");
  threshold_cmd->add_option("--lo", threshold.lo, "Bracket lower end");
  threshold_cmd->add_option("--hi", threshold.hi, "Bracket upper end");
  threshold_cmd->add_option("--format", threshold.format, "text | json")->check(CLI::IsMember(formats));

  OracleOptions oracle;
  oracle.format = default_format();
  auto* oracle_cmd = app.add_subcommand("oracle", "Sample separable states and count criterion violations");
  oracle_cmd->add_option("--dims", oracle.dims, "Comma-separated levels")->delimiter(',')->required();
  oracle_cmd->add_option("--samples", oracle.samples, "Samples per mode (default 10000 qubits, 1000 otherwise)");
  oracle_cmd->add_option("--seed", oracle.seed, "Base seed");
  oracle_cmd->add_option("--mode", oracle.modes, "full-sep, bisep-fixed, bisep-mixed (comma list)")->delimiter(',');
  oracle_cmd->add_option("--partition", oracle.partition, "Split for bisep-fixed, e.g. 1|2,3");
  oracle_cmd->add_option("--criteria", oracle.criteria, "all, or a comma list of ids");
  oracle_cmd->add_option("--tol", oracle.tol, "Violation tolerance");
  oracle_cmd->add_option("--terms", oracle.terms, "Maximum pure terms per mixture");
  oracle_cmd->add_option("--format", oracle.format, "text | json")->check(CLI::IsMember(formats));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "sepcheck: " << e.what() << '\n';
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kInputError;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, args, out);
    if (check_cmd->parsed()) return cmd_check(check, out);
    if (threshold_cmd->parsed()) return cmd_threshold(threshold, out);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle, out);
  } catch (const Error& e) {
    err << "sepcheck: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "sepcheck: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace sepcheck::cli
