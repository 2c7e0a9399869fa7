/*
 * Copyright 2026 The gablab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "cli/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "gablab/error.hpp"
#include "gablab/random.hpp"

namespace gablab::cli {
namespace {

const std::set<std::string>& known_tasks() {
  static const std::set<std::string> tasks = {"completeness", "density", "duality", "excess",
                                              "rdual41",      "rdual43", "tight"};
  return tasks;
}

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw InputError(what + " must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < INT32_MIN || x > INT32_MAX) throw InputError(what + " out of range");
  return static_cast<int>(x);
}

LatticeSpec parse_lattice(const json& v, const std::string& name, std::size_t arity) {
  LatticeSpec out;
  if (v.is_string()) {
    if (v.get<std::string>() != "all") throw InputError(name + ": expected \"all\" or a generator list");
    out.all = true;
    return out;
  }
  if (!v.is_array()) throw InputError(name + ": expected \"all\" or a generator list");
  for (const json& gen : v) {
    if (gen.is_number_integer() && arity == 1) {
      out.generators.push_back({as_int(gen, name)});
      continue;
    }
    if (!gen.is_array() || gen.size() != arity) {
      throw InputError(name + ": each generator needs " + std::to_string(arity) + " residues");
    }
    std::vector<int> r;
    for (const json& x : gen) r.push_back(as_int(x, name));
    out.generators.push_back(std::move(r));
  }
  return out;
}

WindowSpec parse_window(const json& v) {
  if (!v.is_object()) throw InputError("window must be an object");
  const json& kind = require(v, "kind");
  if (!kind.is_string()) throw InputError("window kind must be a string");
  WindowSpec w;
  const std::string k = kind.get<std::string>();
  auto read_seed = [&](bool required) {
    if (!v.contains("seed")) {
      if (required) throw InputError("random window needs a seed");
      return;
    }
    const json& s = v.at("seed");
    if (!s.is_number_integer() || (s.is_number_integer() && !s.is_number_unsigned() && s.get<std::int64_t>() < 0)) {
      throw InputError("seed must be a nonnegative integer");
    }
    w.seed = s.get<std::uint64_t>();
  };
  if (k == "random") {
    w.kind = WindowKind::random;
    read_seed(true);
  } else if (k == "delta") {
    w.kind = WindowKind::delta;
  } else if (k == "canonical_parseval") {
    w.kind = WindowKind::canonical_parseval;
    read_seed(false);
  } else if (k == "values") {
    w.kind = WindowKind::values;
    const json& vals = require(v, "values");
    if (!vals.is_array()) throw InputError("window values must be an array");
    for (const json& z : vals) {
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw InputError("window values are [re, im] pairs");
      }
      w.values.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
  } else {
    throw InputError("unknown window kind \"" + k + "\"");
  }
  return w;
}

json window_to_json(const WindowSpec& w) {
  switch (w.kind) {
    case WindowKind::random:
      return {{"kind", "random"}, {"seed", w.seed}};
    case WindowKind::delta:
      return {{"kind", "delta"}};
    case WindowKind::canonical_parseval:
      return {{"kind", "canonical_parseval"}, {"seed", w.seed}};
    case WindowKind::values: {
      json vals = json::array();
      for (const Complex& z : w.values) vals.push_back({z.real(), z.imag()});
      return {{"kind", "values"}, {"values", vals}};
    }
  }
  return {};
}

json lattice_to_json(const LatticeSpec& l) {
  if (l.all) return "all";
  return l.generators;
}

Subgroup resolve_lattice(const LatticeSpec& l, const GroupSpec& g, Side side) {
  std::vector<Elem> gens;
  for (const auto& r : l.generators) {
    const auto mods = g.moduli();
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] < 0 || r[i] >= mods[i]) {
        throw InputError("generator residue " + std::to_string(r[i]) + " outside Z_" +
                         std::to_string(mods[i]));
      }
    }
    gens.push_back(g.elem(side, r));
  }
  return span_subgroup(g, side, gens);
}

bool lex_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                      b.elements().begin(), b.elements().end());
}

Window base_window(const ExperimentSpec& s, const GroupSpec& g) {
  switch (s.window.kind) {
    case WindowKind::delta:
      return Window::delta(g, 0);
    case WindowKind::values: {
      if (static_cast<int>(s.window.values.size()) != g.order()) {
        throw InputError("window has " + std::to_string(s.window.values.size()) +
                         " values, group order is " + std::to_string(g.order()));
      }
      CVector v(g.order());
      for (int i = 0; i < g.order(); ++i) v[i] = s.window.values[static_cast<std::size_t>(i)];
      return Window(g, v);
    }
    case WindowKind::random:
    case WindowKind::canonical_parseval: {
      Xorshift64Star rng(s.window.seed);
      return Window(g, random_complex_vector(g.order(), rng));
    }
  }
  throw InputError("unreachable window kind");
}

// The system a case runs on, or nullopt when the window kind's own
// precondition fails (canonical_parseval needs a frame).
std::optional<GaborSystem> case_system(const ExperimentSpec& s, const Window& w,
                                       const Subgroup& time, const Subgroup& freq) {
  GaborSystem sys(w, time, freq);
  if (s.window.kind != WindowKind::canonical_parseval) return sys;
  if (!frame_bounds(sys, Convention::weighted).is_frame) return std::nullopt;
  return sys.with_window(canonical_parseval(sys, Convention::weighted));
}

struct TaskOutcome {
  std::string verdict;
  json payload;
};

TaskOutcome verdict_of(bool holds, json payload) {
  return {holds ? kVerdictPass : kVerdictFail, std::move(payload)};
}

TaskOutcome skipped(const std::string& reason) { return {kVerdictSkipped, {{"reason", reason}}}; }

std::vector<double> sweep_grid(const ExperimentSpec& s) {
  return s.theta_grid ? *s.theta_grid : default_theta_grid();
}

TaskOutcome run_task(const std::string& task, const ExperimentSpec& s, const GaborSystem& sys) {
  const double tol = s.tol;
  if (task == "duality") {
    const DualityVerdict v = verify_duality(sys, tol);
    return verdict_of(v.holds, to_json(v));
  }
  if (task == "tight") {
    const TightnessVerdict v = verify_tight_orthogonal(sys, tol);
    return verdict_of(v.holds, to_json(v));
  }
  if (task == "rdual43") {
    if (!(sys.freq_lattice() == annihilator(sys.time_lattice()))) {
      return skipped("frequency lattice is not the annihilator of the time lattice");
    }
    const CriticalRDualReport r = critical_rdual_verify(sys.window(), sys.time_lattice(), sys.freq_lattice(), tol);
    return verdict_of(r.holds, to_json(r));
  }
  if (task == "rdual41") {
    const SpectralReport fb = frame_bounds(sys, Convention::weighted);
    if (!fb.is_frame || fb.upper_bound - fb.lower_bound > tol * fb.upper_bound) {
      return skipped("window does not generate a tight frame");
    }
    const RDualWitness w =
        adjoint_rdual_witness(sys, OrthonormalBasis::standard(sys.group().order()),
                              OrthonormalBasis::standard(sys.atom_count()), tol);
    json payload = to_json(w, s.hashes_only);
    const bool holds = w.unitarity_defect <= tol && w.w_gram_defect <= tol;
    payload["holds"] = holds;
    return verdict_of(holds, std::move(payload));
  }
  if (task == "density") {
    const ThetaSweep sw = completeness_sweep(sys, sweep_grid(s));
    const Covering cov = covering(sys.time_lattice(), sys.freq_lattice());
    json payload = to_json(sw);
    payload["latticeSize"] = to_json(lattice_size(sys.time_lattice(), sys.freq_lattice()));
    payload["coveringCells"] = cov.cells.size();
    return verdict_of(sw.holds(), std::move(payload));
  }
  if (task == "completeness") {
    const CompletenessVerdict v = completeness_verdict(sys);
    return verdict_of(v.holds, to_json(v));
  }
  if (task == "excess") {
    const ExcessDeficit ed = excess_deficit(gabor_atoms(sys));
    const SpectralReport fb = frame_bounds(sys, Convention::weighted);
    const int n = sys.group().order();
    const bool consistent = ed.excess == ed.atom_count - ed.rank && ed.deficit == n - ed.rank &&
                            fb.is_frame == (ed.deficit == 0) &&
                            (!fb.is_frame || ed.excess == ed.atom_count - n);
    json payload = to_json(ed);
    payload["isFrame"] = fb.is_frame;
    payload["holds"] = consistent;
    return verdict_of(consistent, std::move(payload));
  }
  throw InputError("unknown task " + task);
}

}  // namespace

ExperimentSpec parse_spec(const json& j) {
  if (!j.is_object()) throw InputError("spec must be a JSON object");
  ExperimentSpec s;

  const json& group = require(j, "group");
  if (!group.is_array() || group.empty()) throw InputError("group must be a nonempty modulus list");
  for (const json& m : group) {
    const int v = as_int(m, "modulus");
    if (v < 1) throw InputError("moduli must be positive");
    s.moduli.push_back(v);
  }

  s.window = parse_window(require(j, "window"));
  s.time = parse_lattice(require(j, "timeLattice"), "timeLattice", s.moduli.size());
  s.freq = parse_lattice(require(j, "freqLattice"), "freqLattice", s.moduli.size());

  const json& tasks = require(j, "tasks");
  if (!tasks.is_array() || tasks.empty()) throw InputError("tasks must be a nonempty list");
  std::set<std::string> uniq;
  for (const json& t : tasks) {
    if (!t.is_string() || !known_tasks().contains(t.get<std::string>())) {
      throw InputError("unknown task " + t.dump());
    }
    uniq.insert(t.get<std::string>());
  }
  s.tasks.assign(uniq.begin(), uniq.end());

  if (j.contains("thetaGrid")) {
    const json& grid = j.at("thetaGrid");
    if (!grid.is_array() || grid.empty()) throw InputError("thetaGrid must be a nonempty list");
    std::vector<double> thetas;
    for (const json& t : grid) {
      if (!t.is_number()) throw InputError("thetaGrid entries must be numbers");
      const double v = t.get<double>();
      if (!(v > 0.0) || !std::isfinite(v)) throw InputError("thetaGrid entries must be positive");
      if (!thetas.empty() && !(v < thetas.back())) {
        throw InputError("thetaGrid must be strictly descending");
      }
      thetas.push_back(v);
    }
    s.theta_grid = std::move(thetas);
  }
  if (j.contains("tol")) {
    const json& t = j.at("tol");
    if (!t.is_number() || !(t.get<double>() > 0.0)) throw InputError("tol must be positive");
    s.tol = t.get<double>();
  }
  if (j.contains("hashesOnly")) {
    if (!j.at("hashesOnly").is_boolean()) throw InputError("hashesOnly must be a boolean");
    s.hashes_only = j.at("hashesOnly").get<bool>();
  }
  return s;
}

ExperimentSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return parse_spec(j);
}

json spec_to_json(const ExperimentSpec& s) {
  json out = {{"group", s.moduli},
              {"window", window_to_json(s.window)},
              {"timeLattice", lattice_to_json(s.time)},
              {"freqLattice", lattice_to_json(s.freq)},
              {"tasks", s.tasks},
              {"tol", s.tol},
              {"hashesOnly", s.hashes_only}};
  if (s.theta_grid) out["thetaGrid"] = *s.theta_grid;
  return out;
}

GroupSpec spec_group(const ExperimentSpec& s) {
  try {
    return GroupSpec::make(s.moduli, max_order_from_env());
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

std::vector<std::pair<Subgroup, Subgroup>> lattice_pairs(const ExperimentSpec& s,
                                                         const GroupSpec& g) {
  auto side_list = [&](const LatticeSpec& l, Side side) {
    try {
      if (l.all) return enumerate_subgroups(g, side);
      return std::vector<Subgroup>{resolve_lattice(l, g, side)};
    } catch (const Error& e) {
      throw InputError(e.what());
    }
  };
  std::vector<Subgroup> times = side_list(s.time, Side::primal);
  std::vector<Subgroup> freqs = side_list(s.freq, Side::dual);
  std::sort(times.begin(), times.end(), lex_less);
  std::sort(freqs.begin(), freqs.end(), lex_less);
  std::vector<std::pair<Subgroup, Subgroup>> out;
  for (const Subgroup& t : times)
    for (const Subgroup& f : freqs) out.emplace_back(t, f);
  return out;
}

RunResult run_experiment(const ExperimentSpec& s) {
  const GroupSpec g = spec_group(s);
  const Window w = base_window(s, g);
  RunResult r;
  for (const auto& [time, freq] : lattice_pairs(s, g)) {
    std::optional<GaborSystem> sys;
    std::string setup_error;
    try {
      sys = case_system(s, w, time, freq);
    } catch (const Error& e) {
      setup_error = e.what();
    }
    for (const std::string& task : s.tasks) {
      TaskOutcome o;
      if (!setup_error.empty()) {
        o = {kVerdictFail, {{"error", setup_error}}};
      } else if (!sys) {
        o = skipped("window does not generate a frame; no canonical Parseval window");
      } else {
        try {
          o = run_task(task, s, *sys);
        } catch (const Error& e) {
          o = {kVerdictFail, {{"error", e.what()}}};
        }
      }
      if (o.verdict == kVerdictPass) ++r.passed;
      if (o.verdict == kVerdictSkipped) {
        ++r.passed;
        ++r.skipped;
      }
      if (o.verdict == kVerdictFail) ++r.failed;
      r.cases.push_back({time, freq, task, o.verdict, std::move(o.payload), s.tol});
    }
  }
  return r;
}

json report_json(const ExperimentSpec& s, const RunResult& r, const std::string& timestamp) {
  json cases = json::array();
  const json window = window_to_json(s.window);
  for (const CaseResult& c : r.cases) {
    cases.push_back({{"timeLattice", to_json(c.time)},
                     {"freqLattice", to_json(c.freq)},
                     {"window", window},
                     {"task", c.task},
                     {"verdict", c.verdict},
                     {"tolerance", c.tolerance},
                     {"payload", c.payload}});
  }
  return {{"schemaVersion", 1},
          {"timestamp", timestamp},
          {"spec", spec_to_json(s)},
          {"summary",
           {{"cases", r.cases.size()}, {"pass", r.passed}, {"fail", r.failed}, {"skipped", r.skipped}}},
          {"cases", cases}};
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json enumerate_json(const GroupSpec& g) {
  json subs = json::array();
  for (const Subgroup& l : enumerate_subgroups(g, Side::primal)) {
    json entry = to_json(l);
    entry["annihilator"] = to_json(annihilator(l));
    entry["section"] = section(l).reps;
    subs.push_back(std::move(entry));
  }
  return {{"moduli", std::vector<int>(g.moduli().begin(), g.moduli().end())},
          {"order", g.order()},
          {"count", subs.size()},
          {"subgroups", subs}};
}

SweepOutput run_sweep(const ExperimentSpec& s) {
  if (std::find(s.tasks.begin(), s.tasks.end(), "density") == s.tasks.end() &&
      std::find(s.tasks.begin(), s.tasks.end(), "completeness") == s.tasks.end()) {
    throw InputError("sweep needs a density or completeness task");
  }
  const GroupSpec g = spec_group(s);
  const Window w = base_window(s, g);
  const std::vector<double> grid = sweep_grid(s);

  std::ostringstream os;
  os << kSweepCsvHeader << '\n';
  SweepOutput out;
  int pairs = 0;
  int failing = 0;
  int incomplete = 0;
  double lowest_final = 1.0;
  for (const auto& [time, freq] : lattice_pairs(s, g)) {
    ++pairs;
    os << "# time=" << to_json(time)["elements"].dump() << " freq=" << to_json(freq)["elements"].dump();
    std::optional<GaborSystem> sys;
    try {
      sys = case_system(s, w, time, freq);
    } catch (const Error& e) {
      os << " error=\"" << e.what() << "\"\n";
      ++failing;
      continue;
    }
    if (!sys) {
      os << " skipped: precondition\n";
      continue;
    }
    const ThetaSweep sw = completeness_sweep(*sys, grid);
    os << " d=" << lattice_density_ratio(*sys) << " rank=" << sw.rank << "/" << sw.dimension
       << " psi_limit=" << format_double(sw.psi_limit) << " holds=" << (sw.holds() ? "true" : "false")
       << '\n';
    write_sweep_rows(os, sw);
    if (!sw.holds()) ++failing;
    if (sw.rank < sw.dimension) {
      ++incomplete;
      lowest_final = std::min(lowest_final, sw.psi_values.back());
    }
  }
  os << "# summary: pairs=" << pairs << " failing=" << failing << " incomplete=" << incomplete;
  if (incomplete > 0) os << " min_final_psi_incomplete=" << format_double(lowest_final);
  os << '\n';
  out.csv = os.str();
  out.ok = failing == 0;
  return out;
}

}  // namespace gablab::cli
