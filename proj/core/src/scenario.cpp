// Copyright 2026 The hybridpulse Authors
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

#include "hybridpulse/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

#include "hybridpulse/errors.hpp"
#include "hybridpulse/fidelity.hpp"
#include "hybridpulse/pulse.hpp"
#include "hybridpulse/schedule.hpp"

namespace hp {

const char* to_string(ExperimentKind k) noexcept {
  switch (k) {
    case ExperimentKind::SingleGate: return "single-gate";
    case ExperimentKind::HybridSweep: return "hybrid-sweep";
    case ExperimentKind::STComparison: return "st-comparison";
    case ExperimentKind::TwoQubit: return "two-qubit";
    case ExperimentKind::Figure2Bundle: return "figure2-bundle";
    case ExperimentKind::Adiabatic: return "adiabatic";
  }
  return "unknown";
}

bool Scenario::operator==(const Scenario& o) const {
  auto ramp = [](const RampOptions& r) { return std::tie(r.dt_max, r.dt_min, r.tolerance); };
  auto deph = [](const DephasingSpec& d) { return std::tie(d.Gamma, d.gamma); };
  return kind == o.kind && name == o.name && seed == o.seed && qubit == o.qubit &&
         gate == o.gate && order == o.order && t_min == o.t_min && t_max == o.t_max &&
         points == o.points && splittings == o.splittings && materials == o.materials &&
         Gamma_charge == o.Gamma_charge && two_qubit == o.two_qubit && phi == o.phi &&
         deph(two_qubit_dephasing) == deph(o.two_qubit_dephasing) &&
         cancel_control_phase == o.cancel_control_phase && ramp_time == o.ramp_time &&
         theta == o.theta && ramp(integrator) == ramp(o.integrator);
}

namespace {

constexpr std::array<ExperimentKind, 6> kKinds{
    ExperimentKind::SingleGate,   ExperimentKind::HybridSweep,   ExperimentKind::STComparison,
    ExperimentKind::TwoQubit,     ExperimentKind::Figure2Bundle, ExperimentKind::Adiabatic};

const std::map<std::string, STParams (*)()>& material_table() {
  static const std::map<std::string, STParams (*)()> m{
      {"gaas", &STParams::gaas},
      {"natural-si", &STParams::natural_si},
      {"purified-si", &STParams::purified_si}};
  return m;
}

// Sections a kind reads, and which of them must appear.
struct Layout {
  std::vector<std::string> sections;
  std::vector<std::string> required;
};

Layout layout_of(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::SingleGate:
      return {{"experiment", "qubit", "gate", "integrator"}, {"qubit"}};
    case ExperimentKind::HybridSweep:
      return {{"experiment", "qubit", "sweep"}, {"qubit"}};
    case ExperimentKind::STComparison:
      return {{"experiment", "sweep", "st"}, {"st"}};
    case ExperimentKind::TwoQubit:
      return {{"experiment", "two-qubit"}, {"two-qubit"}};
    case ExperimentKind::Figure2Bundle:
      return {{"experiment", "qubit", "sweep", "st"}, {}};
    case ExperimentKind::Adiabatic:
      return {{"experiment", "qubit", "adiabatic", "integrator"}, {"qubit"}};
  }
  return {};
}

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> k{
      {"experiment", {"kind", "name", "seed"}},
      {"qubit", {"E01", "t1", "t2", "Gamma", "gamma"}},
      {"gate", {"beta", "eta", "zeta", "order"}},
      {"sweep", {"t_min", "t_max", "points", "splittings"}},
      {"st", {"materials", "Gamma_charge"}},
      {"two-qubit",
       {"control_E01", "control_t1", "target_E01", "target_t1", "delta_eps", "phi", "Gamma",
        "gamma", "cancel_control_phase"}},
      {"adiabatic", {"ramp_time", "theta"}},
      {"integrator", {"dt_max", "dt_min", "tolerance"}}};
  return k;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<double> to_number(const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

// Plain numbers or [-][a*]pi[/b].
std::optional<double> to_angle(const std::string& s) {
  if (auto v = to_number(s)) return v;
  static const std::regex re(R"(^(-)?(?:([0-9.eE+-]+)\*)?pi(?:/([0-9.eE+-]+))?$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) return std::nullopt;
  double v = kPi;
  if (m[2].matched) {
    auto a = to_number(m[2].str());
    if (!a) return std::nullopt;
    v *= *a;
  }
  if (m[3].matched) {
    auto b = to_number(m[3].str());
    if (!b || *b == 0.0) return std::nullopt;
    v /= *b;
  }
  return m[1].matched ? -v : v;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

struct Problems {
  std::vector<std::pair<ErrorKind, std::string>> list;
  void add(ErrorKind k, int line, const std::string& msg) {
    list.emplace_back(k, line > 0 ? "line " + std::to_string(line) + ": " + msg : msg);
  }
  void raise() const {
    if (list.empty()) return;
    std::string all;
    for (const auto& [k, m] : list) all += (all.empty() ? "" : "\n") + m;
    throw Error(list.front().first, all);
  }
};

struct Entry {
  std::string value;
  int line;
};

using Sections = std::map<std::string, std::map<std::string, Entry>>;

class Reader {
 public:
  Reader(const Sections& sec, Problems& pr) : sec_(sec), pr_(pr) {}

  const Entry* find(const std::string& s, const std::string& k) const {
    auto it = sec_.find(s);
    if (it == sec_.end()) return nullptr;
    auto jt = it->second.find(k);
    return jt == it->second.end() ? nullptr : &jt->second;
  }

  void number(const std::string& s, const std::string& k, double& out) const {
    if (const Entry* e = find(s, k)) {
      if (auto v = to_number(e->value)) out = *v;
      else bad(s, k, *e, "a number");
    }
  }
  void angle(const std::string& s, const std::string& k, double& out) const {
    if (const Entry* e = find(s, k)) {
      if (auto v = to_angle(e->value)) out = *v;
      else bad(s, k, *e, "an angle");
    }
  }
  template <class Int>
  void integer(const std::string& s, const std::string& k, Int& out) const {
    if (const Entry* e = find(s, k)) {
      Int v{};
      const char* end = e->value.data() + e->value.size();
      auto [p, ec] = std::from_chars(e->value.data(), end, v);
      if (ec != std::errc() || p != end) bad(s, k, *e, "an integer");
      else out = v;
    }
  }
  void boolean(const std::string& s, const std::string& k, bool& out) const {
    if (const Entry* e = find(s, k)) {
      if (e->value == "true") out = true;
      else if (e->value == "false") out = false;
      else bad(s, k, *e, "true or false");
    }
  }
  void numbers(const std::string& s, const std::string& k, std::vector<double>& out) const {
    if (const Entry* e = find(s, k)) {
      std::vector<double> v;
      for (const auto& item : split_list(e->value)) {
        auto x = to_number(item);
        if (!x) return bad(s, k, *e, "a comma-separated list of numbers");
        v.push_back(*x);
      }
      out = v;
    }
  }

 private:
  void bad(const std::string& s, const std::string& k, const Entry& e, const char* what) const {
    pr_.add(ErrorKind::ParseError, e.line,
            "[" + s + "] " + k + " = '" + e.value + "' is not " + what);
  }
  const Sections& sec_;
  Problems& pr_;
};

void check(Problems& pr, bool ok, const std::string& field, const std::string& rule) {
  if (!ok) pr.add(ErrorKind::ValidationError, 0, field + ": " + rule);
}

template <class F>
void check_nested(Problems& pr, const std::string& section, F&& validate) {
  try {
    validate();
  } catch (const Error& e) {
    pr.add(ErrorKind::ValidationError, 0, "[" + section + "] " + e.what());
  }
}

void validate_scenario(const Scenario& s, const std::set<std::string>& used, Problems& pr) {
  check(pr, !s.name.empty() && s.name.find_first_of("/\\ ") == std::string::npos,
        "[experiment] name", "must be non-empty without spaces or slashes");
  if (used.count("qubit")) check_nested(pr, "qubit", [&] { s.qubit.validate(); });
  if (used.count("gate")) check_nested(pr, "gate", [&] { s.gate.validate(); });
  if (used.count("sweep")) {
    check(pr, s.t_min > 0 && s.t_max > s.t_min, "[sweep] t_min, t_max", "need 0 < t_min < t_max");
    check(pr, s.points >= 2, "[sweep] points", "must be >= 2");
    check(pr, !s.splittings.empty(), "[sweep] splittings", "must not be empty");
    for (double e : s.splittings) check(pr, e > 0, "[sweep] splittings", "entries must be > 0");
  }
  if (used.count("st")) {
    check(pr, !s.materials.empty(), "[st] materials", "must not be empty");
    for (const auto& m : s.materials)
      check(pr, material_table().count(m) > 0, "[st] materials",
            "unknown material '" + m + "' (gaas, natural-si, purified-si)");
    check(pr, s.Gamma_charge >= 0, "[st] Gamma_charge", "must be >= 0");
  }
  if (used.count("two-qubit")) {
    check_nested(pr, "two-qubit", [&] { s.two_qubit.validate(); });
    check(pr, s.two_qubit_dephasing.Gamma >= 0, "[two-qubit] Gamma", "must be >= 0");
    check(pr, s.two_qubit_dephasing.gamma >= 0, "[two-qubit] gamma", "must be >= 0");
  }
  if (used.count("adiabatic")) check(pr, s.ramp_time >= 0, "[adiabatic] ramp_time", "must be >= 0");
  if (used.count("integrator")) {
    const RampOptions& r = s.integrator;
    check(pr, r.dt_min > 0 && r.dt_max >= r.dt_min, "[integrator] dt_min, dt_max",
          "need 0 < dt_min <= dt_max");
    check(pr, r.tolerance > 0, "[integrator] tolerance", "must be > 0");
  }
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  Problems pr;
  Sections sec;
  std::map<std::string, int> section_line;
  std::string current;
  std::istringstream is(text);
  std::string raw;
  int ln = 0;
  while (std::getline(is, raw)) {
    ++ln;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        pr.add(ErrorKind::ParseError, ln, "unterminated section header");
        continue;
      }
      current = trim(line.substr(1, line.size() - 2));
      if (!known_keys().count(current)) {
        pr.add(ErrorKind::UnknownKey, ln, "unknown section [" + current + "]");
      } else if (section_line.count(current)) {
        pr.add(ErrorKind::ParseError, ln, "duplicate section [" + current + "]");
      } else {
        section_line[current] = ln;
        sec[current];
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      pr.add(ErrorKind::ParseError, ln, "expected 'key = value'");
      continue;
    }
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (current.empty()) {
      pr.add(ErrorKind::ParseError, ln, "key '" + key + "' outside any section");
      continue;
    }
    auto ks = known_keys().find(current);
    if (ks == known_keys().end()) continue;  // already reported
    if (!ks->second.count(key)) {
      pr.add(ErrorKind::UnknownKey, ln, "unknown key '" + key + "' in [" + current + "]");
      continue;
    }
    if (key.empty() || value.empty()) {
      pr.add(ErrorKind::ParseError, ln, "empty key or value");
      continue;
    }
    if (sec[current].count(key)) {
      pr.add(ErrorKind::ParseError, ln, "duplicate key '" + key + "'");
      continue;
    }
    sec[current][key] = {value, ln};
  }

  Scenario s;
  const Reader r(sec, pr);
  const Entry* kind = r.find("experiment", "kind");
  if (!kind) {
    pr.add(ErrorKind::ValidationError, 0, "[experiment] kind is required");
    pr.raise();
  }
  bool found = false;
  for (ExperimentKind k : kKinds)
    if (kind->value == to_string(k)) {
      s.kind = k;
      found = true;
    }
  if (!found) {
    pr.add(ErrorKind::ValidationError, kind->line, "unknown experiment kind '" + kind->value + "'");
    pr.raise();
  }

  const Layout lay = layout_of(s.kind);
  const std::set<std::string> used(lay.sections.begin(), lay.sections.end());
  for (const auto& [name, line] : section_line)
    if (!used.count(name))
      pr.add(ErrorKind::ValidationError, line,
             "section [" + name + "] is not used by kind " + kind->value);
  for (const auto& req : lay.required)
    if (!section_line.count(req))
      pr.add(ErrorKind::ValidationError, 0,
             "kind " + kind->value + " requires section [" + req + "]");

  if (const Entry* e = r.find("experiment", "name")) s.name = e->value;
  r.integer("experiment", "seed", s.seed);

  r.number("qubit", "E01", s.qubit.E01);
  r.number("qubit", "t1", s.qubit.t1);
  s.qubit.t2 = HybridParams::valley_ratio() * s.qubit.t1;
  r.number("qubit", "t2", s.qubit.t2);
  r.number("qubit", "Gamma", s.qubit.Gamma);
  r.number("qubit", "gamma", s.qubit.gamma);

  r.angle("gate", "beta", s.gate.beta);
  r.angle("gate", "eta", s.gate.eta);
  r.angle("gate", "zeta", s.gate.zeta);
  if (const Entry* e = r.find("gate", "order")) {
    if (e->value == "standard") s.order = SequenceOrder::Standard;
    else if (e->value == "alternative") s.order = SequenceOrder::Alternative;
    else pr.add(ErrorKind::ParseError, e->line, "[gate] order must be standard or alternative");
  }

  r.number("sweep", "t_min", s.t_min);
  r.number("sweep", "t_max", s.t_max);
  r.integer("sweep", "points", s.points);
  r.numbers("sweep", "splittings", s.splittings);

  if (const Entry* e = r.find("st", "materials")) s.materials = split_list(e->value);
  r.number("st", "Gamma_charge", s.Gamma_charge);

  auto& tq = s.two_qubit;
  r.number("two-qubit", "control_E01", tq.control.E01);
  r.number("two-qubit", "control_t1", tq.control.t1);
  r.number("two-qubit", "target_E01", tq.target.E01);
  r.number("two-qubit", "target_t1", tq.target.t1);
  tq.control.t2 = HybridParams::valley_ratio() * tq.control.t1;
  tq.target.t2 = HybridParams::valley_ratio() * tq.target.t1;
  r.number("two-qubit", "delta_eps", tq.delta_eps);
  r.angle("two-qubit", "phi", s.phi);
  r.number("two-qubit", "Gamma", s.two_qubit_dephasing.Gamma);
  r.number("two-qubit", "gamma", s.two_qubit_dephasing.gamma);
  r.boolean("two-qubit", "cancel_control_phase", s.cancel_control_phase);

  r.number("adiabatic", "ramp_time", s.ramp_time);
  r.angle("adiabatic", "theta", s.theta);

  r.number("integrator", "dt_max", s.integrator.dt_max);
  r.number("integrator", "dt_min", s.integrator.dt_min);
  r.number("integrator", "tolerance", s.integrator.tolerance);

  validate_scenario(s, used, pr);
  pr.raise();
  return s;
}

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream os;
  auto kv = [&](const char* k, const std::string& v) { os << k << " = " << v << '\n'; };
  auto num = [&](const char* k, double v) { kv(k, fmt17(v)); };
  auto join = [](const auto& items, auto&& fmt) {
    std::string out;
    for (const auto& x : items) out += (out.empty() ? "" : ", ") + fmt(x);
    return out;
  };
  for (const auto& section : layout_of(s.kind).sections) {
    os << '[' << section << "]\n";
    if (section == "experiment") {
      kv("kind", to_string(s.kind));
      kv("name", s.name);
      kv("seed", std::to_string(s.seed));
    } else if (section == "qubit") {
      num("E01", s.qubit.E01);
      num("t1", s.qubit.t1);
      num("t2", s.qubit.t2);
      num("Gamma", s.qubit.Gamma);
      num("gamma", s.qubit.gamma);
    } else if (section == "gate") {
      num("beta", s.gate.beta);
      num("eta", s.gate.eta);
      num("zeta", s.gate.zeta);
      kv("order", s.order == SequenceOrder::Standard ? "standard" : "alternative");
    } else if (section == "sweep") {
      num("t_min", s.t_min);
      num("t_max", s.t_max);
      kv("points", std::to_string(s.points));
      kv("splittings", join(s.splittings, [](double v) { return fmt17(v); }));
    } else if (section == "st") {
      kv("materials", join(s.materials, [](const std::string& m) { return m; }));
      num("Gamma_charge", s.Gamma_charge);
    } else if (section == "two-qubit") {
      num("control_E01", s.two_qubit.control.E01);
      num("control_t1", s.two_qubit.control.t1);
      num("target_E01", s.two_qubit.target.E01);
      num("target_t1", s.two_qubit.target.t1);
      num("delta_eps", s.two_qubit.delta_eps);
      num("phi", s.phi);
      num("Gamma", s.two_qubit_dephasing.Gamma);
      num("gamma", s.two_qubit_dephasing.gamma);
      kv("cancel_control_phase", s.cancel_control_phase ? "true" : "false");
    } else if (section == "adiabatic") {
      num("ramp_time", s.ramp_time);
      num("theta", s.theta);
    } else if (section == "integrator") {
      num("dt_max", s.integrator.dt_max);
      num("dt_min", s.integrator.dt_min);
      num("tolerance", s.integrator.tolerance);
    }
  }
  return os.str();
}

Scenario scenario_from_csv(const std::string& csv_text) {
  // Scenario lines carry a "# " prefix; informational lines are "# # ...",
  // which become comments once the prefix is gone.
  std::istringstream is(csv_text);
  std::string line, text;
  while (std::getline(is, line)) {
    if (line.rfind("# ", 0) != 0) break;
    text += line.substr(2) + '\n';
  }
  return parse_scenario(text);
}

namespace {

std::vector<std::string> header_lines(const Scenario& s, const std::vector<std::string>& info) {
  std::vector<std::string> out;
  std::istringstream is(serialize_scenario(s));
  std::string line;
  while (std::getline(is, line)) out.push_back(line);
  out.push_back("# generator hybridpulse " HYBRIDPULSE_VERSION);
  for (const auto& i : info) out.push_back("# " + i);
  return out;
}

class Output {
 public:
  Output(const RunConfig& cfg, RunResult& res) : dir_(cfg.out_dir), res_(res) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create " + dir_.string() + ": " + ec.message());
  }

  template <class F>
  void write(const std::string& file, F&& body) {
    const auto path = dir_ / file;
    std::ostringstream os;
    body(os);
    std::ofstream f(path, std::ios::binary);
    f << os.str();
    f.close();
    if (!f) throw Error(ErrorKind::Io, "failed to write " + path.string());
    res_.files.push_back(path.string());
  }

 private:
  std::filesystem::path dir_;
  RunResult& res_;
};

std::vector<double> grid_of(const Scenario& s) { return log_grid(s.t_min, s.t_max, s.points); }

std::vector<STParams> materials_of(const Scenario& s) {
  std::vector<STParams> out;
  for (const auto& m : s.materials) {
    STParams st = material_table().at(m)();
    st.Gamma_charge = s.Gamma_charge;
    out.push_back(st);
  }
  return out;
}

void write_st_csv(std::ostream& os, const std::vector<SweepResult>& rs,
                  const std::vector<std::string>& header) {
  for (const auto& h : header) os << "# " << h << '\n';
  os << "material,t,infidelity,leakage,eps\n";
  for (const auto& r : rs)
    for (const auto& row : r.rows)
      os << r.label << ',' << fmt17(row.t) << ',' << fmt17(row.infidelity) << ','
         << fmt17(row.leakage) << ',' << fmt17(row.eps) << '\n';
}

std::vector<std::string> sweep_info(const Scenario& s, const std::string& what) {
  return {"artifact " + what,
          "metric " + std::string(kFidelityMetric),
          "grid log-spaced, " + std::to_string(s.points) + " points"};
}

void run_hybrid(const Scenario& s, double E01, const RunConfig& cfg, Output& out,
                const std::string& file) {
  SweepOptions so;
  so.threads = cfg.threads;
  const SweepResult r = hybrid_sweep(E01, {s.qubit.Gamma, s.qubit.gamma}, grid_of(s), so);
  auto info = sweep_info(s, "hybrid x(pi) infidelity vs t1, E01 = " + fmt17(E01));
  info.push_back("sequence alternative order, jointly refined plateaus");
  info.push_back("columns merged: anticrossings not distinct; calibrated: coherent residual < 1e-10");
  out.write(file, [&](std::ostream& os) { write_sweep_csv(os, r, header_lines(s, info)); });
}

void run_st(const Scenario& s, const RunConfig& cfg, Output& out, const std::string& file) {
  const auto rs = comparison_sweep(materials_of(s), grid_of(s), cfg.threads);
  auto info = sweep_info(s, "singlet-triplet exchange pi gate infidelity vs t");
  info.push_back("eps optimised per point over log10(|eps|/t) in [" + fmt17(kSTBracketLo) +
                 ", " + fmt17(kSTBracketHi) + "]");
  out.write(file, [&](std::ostream& os) { write_st_csv(os, rs, header_lines(s, info)); });
}

}  // namespace

RunResult run_scenario(const Scenario& s, const RunConfig& cfg) {
  if (cfg.threads < 1) throw Error(ErrorKind::InvalidArgument, "threads must be >= 1");
  RunResult res;
  Output out(cfg, res);
  const std::string csv = s.name + ".csv";
  switch (s.kind) {
    case ExperimentKind::SingleGate: {
      const RotationSchedule rs = schedule_rotation(s.qubit, s.gate, s.order);
      RunOptions ro;
      ro.ramp = s.integrator;
      const FidelityReport f = gate_fidelity(s.qubit, rs.schedule, rotation(s.gate), ro);
      const std::vector<std::string> info{
          "artifact per-state fidelity of the compiled rotation",
          "metric " + std::string(kFidelityMetric),
          "coherent residual " + fmt17(rs.residual),
          "schedule " + s.name + ".schedule"};
      out.write(csv, [&](std::ostream& os) {
        for (const auto& h : header_lines(s, info)) os << "# " << h << '\n';
        os << "state,fidelity\n";
        for (std::size_t k = 0; k < 6; ++k)
          os << cardinal_labels()[k] << ',' << fmt17(f.per_state[k]) << '\n';
        os << "average," << fmt17(f.fidelity) << '\n';
        os << "leakage," << fmt17(f.leakage) << '\n';
      });
      out.write(s.name + ".schedule",
                [&](std::ostream& os) { write_schedule(os, rs.schedule, s.qubit); });
      break;
    }
    case ExperimentKind::HybridSweep:
      run_hybrid(s, s.qubit.E01, cfg, out, csv);
      break;
    case ExperimentKind::STComparison:
      run_st(s, cfg, out, csv);
      break;
    case ExperimentKind::TwoQubit: {
      ConditionalSchedule cs = conditional_phase_schedule(s.two_qubit, s.phi);
      if (s.cancel_control_phase) cs = cancel_control_phase(s.two_qubit, cs);
      const TruthTable tt = truth_table(s.two_qubit, cs, s.two_qubit_dephasing);
      const std::vector<std::string> info{
          "artifact truth table of the conditional phase gate",
          "pulses " + std::to_string(cs.pulse_count()),
          "conditional_phase " + fmt17(tt.conditional_phase),
          "control_phase " + fmt17(tt.control_phase),
          "target_phase " + fmt17(tt.target_phase),
          "spurious_excitation " + fmt17(tt.spurious_excitation),
          std::string("conditioned ") + (tt.conditioned ? "true" : "false"),
          "metric average gate fidelity on the logical block vs CPHASE(phi) with the "
          "measured single-qubit phases"};
      out.write(csv, [&](std::ostream& os) { write_truth_table_csv(os, tt, header_lines(s, info)); });
      break;
    }
    case ExperimentKind::Figure2Bundle:
      for (double E01 : s.splittings)
        run_hybrid(s, E01, cfg, out, s.name + "_hybrid_E01_" + fmt17(E01) + ".csv");
      run_st(s, cfg, out, s.name + "_st.csv");
      break;
    case ExperimentKind::Adiabatic: {
      const PulseSchedule ps = adiabatic_schedule(s.qubit, s.ramp_time, s.theta);
      RunOptions ro;
      ro.ramp = s.integrator;
      ro.samples_per_segment = 20;
      const Trajectory tr =
          run_schedule(basis_state(3, kLevel1), s.qubit, ps, DephasingSpec::of(s.qubit), ro);
      const std::vector<std::string> info{"artifact trajectory from |1>, ramps through B"};
      out.write(csv, [&](std::ostream& os) { write_trajectory_csv(os, tr, header_lines(s, info)); });
      break;
    }
  }
  return res;
}

}  // namespace hp
