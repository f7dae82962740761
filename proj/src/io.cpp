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

#include "sepcheck/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sepcheck/error.hpp"

namespace sepcheck {

using nlohmann::json;

namespace {

constexpr const char* kStateFormat = "sepcheck-state";
constexpr int kStateVersion = 1;
constexpr double kZeroBelow = 1e-300;

double flush_tiny(double v) { return std::abs(v) < kZeroBelow ? 0.0 : v; }

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw Error(ErrorKind::Parse, where + " is not a number");
  return v.get<double>();
}

const json& member(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw Error(ErrorKind::Parse, std::string("missing key '") + key + "'");
  return *it;
}

json criterion_to_json(const CriterionReport& r) {
  return json{{"id", short_id(r.id)},
              {"name", name(r.id)},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"margin", r.margin},
              {"verdict", to_string(r.verdict)},
              {"implication", to_string(r.implication)},
              {"tolerance", r.tolerance}};
}

CriterionId criterion_of(const json& v) {
  if (!v.is_string()) throw Error(ErrorKind::Parse, "criterion id is not a string");
  auto id = parse_criterion(v.get<std::string>());
  if (!id) throw Error(ErrorKind::Parse, "unknown criterion id '" + v.get<std::string>() + "'");
  return *id;
}

std::string join_dims(const std::vector<int>& dims) {
  std::string s;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(dims[k]);
  }
  return s;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json state_to_json(const DensityMatrix& rho, const StateMetadata& metadata) {
  const std::size_t dim = rho.size();
  const auto data = rho.data();
  json matrix = json::array();
  for (std::size_t r = 0; r < dim; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < dim; ++c) {
      const Complex z = data[r * dim + c];
      row.push_back(json::array({flush_tiny(z.real()), flush_tiny(z.imag())}));
    }
    matrix.push_back(std::move(row));
  }
  json meta = json::object();
  if (!metadata.label.empty()) meta["label"] = metadata.label;
  if (!metadata.generator.empty()) meta["generator"] = metadata.generator;
  meta["seed"] = metadata.seed ? json(*metadata.seed) : json(nullptr);
  const auto levels = rho.dims().levels();
  return json{{"format", kStateFormat},
              {"version", kStateVersion},
              {"dims", std::vector<int>(levels.begin(), levels.end())},
              {"index_base", 1},
              {"matrix", std::move(matrix)},
              {"metadata", std::move(meta)}};
}

StateFile state_from_json(const json& doc, const ValidationConfig& cfg) {
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "state file is not a JSON object");
  if (auto it = doc.find("format"); it != doc.end() && *it != kStateFormat) {
    throw Error(ErrorKind::Parse, "unexpected format tag");
  }
  if (auto it = doc.find("version"); it != doc.end() && *it != kStateVersion) {
    throw Error(ErrorKind::Parse, "unsupported state file version");
  }
  const json& jdims = member(doc, "dims");
  if (!jdims.is_array()) throw Error(ErrorKind::Parse, "'dims' is not an array");
  std::vector<int> levels;
  for (const auto& d : jdims) {
    if (!d.is_number_integer()) throw Error(ErrorKind::Parse, "'dims' entries must be integers");
    levels.push_back(d.get<int>());
  }
  SubsystemDims dims(levels);
  if (dims.total() > kMaxDensityDim) throw Error(ErrorKind::DimensionMismatch, "dimension exceeds 4096");
  const std::size_t dim = dims.total();

  const json& matrix = member(doc, "matrix");
  if (!matrix.is_array() || matrix.size() != dim) {
    throw Error(ErrorKind::DimensionMismatch, "'matrix' must have " + std::to_string(dim) + " rows");
  }
  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const json& row = matrix[r];
    if (!row.is_array() || row.size() != dim) {
      throw Error(ErrorKind::DimensionMismatch, "row " + std::to_string(r + 1) + " must have " + std::to_string(dim) +
                                                    " entries");
    }
    for (std::size_t c = 0; c < dim; ++c) {
      const json& z = row[c];
      const std::string where = "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
      if (!z.is_array() || z.size() != 2) throw Error(ErrorKind::Parse, where + " is not a [re, im] pair");
      entries.emplace_back(number(z[0], where), number(z[1], where));
    }
  }

  StateMetadata meta;
  if (auto it = doc.find("metadata"); it != doc.end() && it->is_object()) {
    if (auto l = it->find("label"); l != it->end() && l->is_string()) meta.label = l->get<std::string>();
    if (auto g = it->find("generator"); g != it->end() && g->is_string()) meta.generator = g->get<std::string>();
    if (auto s = it->find("seed"); s != it->end() && s->is_number_unsigned()) meta.seed = s->get<std::uint64_t>();
  }
  return StateFile{DensityMatrix::build(std::move(dims), std::move(entries), cfg), std::move(meta)};
}

void write_state_file(const std::filesystem::path& path, const DensityMatrix& rho, const StateMetadata& metadata) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for writing");
  out << state_to_json(rho, metadata).dump() << '\n';
  out.flush();
  if (!out) throw Error(ErrorKind::Io, "failed writing '" + path.string() + "'");
}

StateFile read_state_file(const std::filesystem::path& path, const ValidationConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
  return state_from_json(doc, cfg);
}

Implication overall_classification(std::span<const CriterionReport> reports) {
  bool non_full = false;
  bool full = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Violated && certifies_genuine_entanglement(r.id)) {
      return Implication::GenuineMultipartiteEntangled;
    }
    if (r.verdict == Verdict::Violated) non_full = true;
    if (r.implication == Implication::FullySeparable) full = true;
  }
  if (non_full) return Implication::NotFullySeparable;
  return full ? Implication::FullySeparable : Implication::Inconclusive;
}

json report_to_json(const CheckReport& report) {
  json reports = json::array();
  for (const auto& r : report.reports) reports.push_back(criterion_to_json(r));
  json skipped = json::array();
  for (const auto& s : report.skipped) skipped.push_back(json{{"id", short_id(s.id)}, {"reason", s.reason}});
  json input{{"path", report.input}, {"dims", report.dims}};
  if (!report.label.empty()) input["label"] = report.label;
  return json{{"input", std::move(input)},
              {"reports", std::move(reports)},
              {"skipped", std::move(skipped)},
              {"overall", to_string(report.overall)}};
}

CheckReport report_from_json(const json& doc) {
  CheckReport out;
  try {
    const json& input = member(doc, "input");
    out.input = member(input, "path").get<std::string>();
    out.dims = member(input, "dims").get<std::vector<int>>();
    if (auto l = input.find("label"); l != input.end()) out.label = l->get<std::string>();
    for (const auto& j : member(doc, "reports")) {
      CriterionReport r;
      r.id = criterion_of(member(j, "id"));
      r.lhs = number(member(j, "lhs"), "lhs");
      r.rhs = number(member(j, "rhs"), "rhs");
      r.margin = number(member(j, "margin"), "margin");
      r.tolerance = number(member(j, "tolerance"), "tolerance");
      auto v = parse_verdict(member(j, "verdict").get<std::string>());
      auto i = parse_implication(member(j, "implication").get<std::string>());
      if (!v || !i) throw Error(ErrorKind::Parse, "bad verdict or implication");
      r.verdict = *v;
      r.implication = *i;
      out.reports.push_back(r);
    }
    for (const auto& j : member(doc, "skipped")) {
      out.skipped.push_back({criterion_of(member(j, "id")), member(j, "reason").get<std::string>()});
    }
    auto overall = parse_implication(member(doc, "overall").get<std::string>());
    if (!overall) throw Error(ErrorKind::Parse, "bad overall classification");
    out.overall = *overall;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return out;
}

std::string report_to_text(const CheckReport& report) {
  std::ostringstream os;
  os << "input: " << report.input << " dims (" << join_dims(report.dims) << ")";
  if (!report.label.empty()) os << " label " << report.label;
  os << '\n';
  for (const auto& r : report.reports) {
    os << short_id(r.id) << ' ' << name(r.id) << " lhs=" << format_double(r.lhs) << " rhs=" << format_double(r.rhs)
       << " margin=" << format_double(r.margin) << ' ' << to_string(r.verdict) << ' ' << to_string(r.implication)
       << " tol=" << format_double(r.tolerance) << '\n';
  }
  for (const auto& s : report.skipped) os << short_id(s.id) << " skipped: " << s.reason << '\n';
  os << "overall: " << to_string(report.overall) << '\n';
  return os.str();
}

json summary_to_json(const OracleSummary& summary, const OracleRunSpec& spec) {
  json modes = json::array();
  for (const auto& m : spec.modes) modes.push_back(m.name());
  json criteria = json::array();
  for (const auto& c : summary.criteria) {
    criteria.push_back(json{{"id", short_id(c.id)},
                            {"name", name(c.id)},
                            {"max_margin", c.max_margin},
                            {"violations", c.violations},
                            {"samples", c.samples},
                            {"worst_seed", c.worst_seed},
                            {"worst_terms", c.worst_terms},
                            {"worst_mode", c.worst_mode.name()}});
  }
  const auto levels = spec.dims.levels();
  return json{{"dims", std::vector<int>(levels.begin(), levels.end())},
              {"samples_per_mode", spec.samples},
              {"samples", summary.samples},
              {"seed", spec.seed},
              {"modes", std::move(modes)},
              {"max_terms", spec.max_terms},
              {"tolerance", spec.tol},
              {"criteria", std::move(criteria)},
              {"violations", summary.violations()},
              {"sound", summary.sound()}};
}

std::string summary_to_text(const OracleSummary& summary, const OracleRunSpec& spec) {
  std::ostringstream os;
  os << "oracle: dims (" << spec.dims.to_string() << ") samples/mode " << spec.samples << " seed " << spec.seed
     << " tol " << format_double(spec.tol) << " modes";
  for (const auto& m : spec.modes) os << ' ' << m.name();
  os << '\n';
  for (const auto& c : summary.criteria) {
    os << short_id(c.id) << ' ' << name(c.id) << " max_margin=" << format_double(c.max_margin)
       << " violations=" << c.violations << " samples=" << c.samples << " worst_seed=" << c.worst_seed
       << " worst_terms=" << c.worst_terms << " worst_mode=" << c.worst_mode.name() << '\n';
  }
  os << "result: " << (summary.sound() ? "sound" : "VIOLATED") << " (" << summary.violations() << " violations)\n";
  return os.str();
}

}  // namespace sepcheck
