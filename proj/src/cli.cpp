// Copyright 2026 The raygeo Authors
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

#include "raygeo/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "raygeo/error.hpp"
#include "raygeo/geometry.hpp"
#include "raygeo/lawcheck.hpp"
#include "raygeo/probability.hpp"

namespace raygeo {

namespace {

/// Flag or configuration problem; maps to kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json load_json(const std::string& source) {
  // Inline JSON is accepted for convenience; anything else is a path.
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
    try {
      return Json::parse(source);
    } catch (const Json::parse_error& e) {
      throw UsageError(std::string("malformed inline JSON: ") + e.what());
    }
  }
  std::ifstream in(source);
  if (!in) throw UsageError("cannot read " + source);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("malformed JSON in " + source + ": " + e.what());
  }
}

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  auto to_size = [&](const std::string& s) -> std::size_t {
    try {
      std::size_t pos = 0;
      const unsigned long v = std::stoul(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw UsageError("bad dimension list '" + text + "'");
    }
  };
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const std::size_t lo = to_size(text.substr(0, dots));
    const std::size_t hi = to_size(text.substr(dots + 2));
    if (lo > hi) throw UsageError("empty dimension range '" + text + "'");
    for (std::size_t d = lo; d <= hi; ++d) dims.push_back(d);
    return dims;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) dims.push_back(to_size(item));
  return dims;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RAYGEO_SEED")) {
    try {
      return std::stoull(env, nullptr, 0);
    } catch (const std::exception&) {
      throw UsageError(std::string("RAYGEO_SEED is not an integer: ") + env);
    }
  }
  return 42;
}

Json error_json(const Error& e, const std::vector<std::string>& names = {}) {
  Json j = {{"kind", to_string(e.kind())}, {"message", e.what()}};
  if (!e.detail().empty()) {
    std::string detail = e.detail();
    // Translate the library's x/y/z slots to the caller's argument names.
    if (e.kind() == ErrorKind::OrthogonalPair && names.size() == 3) {
      for (char& ch : detail) {
        if (ch >= 'x' && ch <= 'z') ch = names[static_cast<std::size_t>(ch - 'x')][0];
      }
      Json pair = Json::array();
      std::stringstream ss(detail);
      for (std::string item; std::getline(ss, item, ',');) pair.push_back(item);
      j["pair"] = pair;
      if (pair.size() == 2) {
        j["message"] = "theta undefined: inputs " + pair[0].get<std::string>() + " and " +
                       pair[1].get<std::string>() + " are orthogonal";
      }
    }
    j["detail"] = detail;
  }
  return Json{{"error", j}};
}

std::string fmt(double v, int precision = 6) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string reports_table(const std::vector<LawReport>& reports, bool timings) {
  std::size_t width = 6;
  for (const auto& r : reports) width = std::max(width, r.law_id.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "law" << "  " << std::setw(8) << "kind" << std::right
     << std::setw(8) << "run" << std::setw(7) << "skip" << std::setw(7) << "fail" << std::setw(13) << "worst"
     << std::setw(10) << "tol" << "  verdict";
  if (timings) os << std::setw(11) << "ms";
  os << '\n';
  std::size_t passed = 0;
  for (const auto& r : reports) {
    passed += r.pass ? 1 : 0;
    os << std::left << std::setw(static_cast<int>(width)) << r.law_id << "  " << std::setw(8)
       << (r.negative_control ? "control" : "law") << std::right << std::setw(8) << r.trials_run << std::setw(7)
       << r.trials_skipped << std::setw(7) << r.failures << std::setw(13) << fmt(r.worst_residual, 3)
       << std::setw(10) << fmt(r.tolerance, 2) << "  " << (r.pass ? "PASS" : "FAIL");
    if (timings) os << std::setw(11) << fmt(r.elapsed_ms, 4);
    os << '\n';
  }
  os << passed << "/" << reports.size() << " laws pass\n";
  return os.str();
}

Ray ray_arg(const std::string& src, const char* name) {
  try {
    return ray_from_json(load_json(src));
  } catch (const Error& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

bool looks_like_subspace(const Json& j) { return j.is_object() && j.contains("basis"); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::vector<TwoSlitRow> two_slit_table(const SuperpositionSpec& slits, const std::vector<Ray>& detectors,
                                       const Tolerance& tol) {
  const Ray sup = superpose(slits, tol);
  std::vector<TwoSlitRow> rows;
  rows.reserve(detectors.size());
  for (const auto& x : detectors) {
    if (x.dim() != sup.dim()) throw Error(ErrorKind::DimensionMismatch, "detector dimension differs from the slits");
    TwoSlitRow row{x};
    row.quantum = p_sim(sup, x);
    row.classical = slits.r * p_sim(slits.y, x) + (1.0 - slits.r) * p_sim(slits.z, x);
    row.interference = row.quantum - row.classical;
    rows.push_back(std::move(row));
  }
  return rows;
}

Json default_two_slit_config() {
  Json detectors = Json::array();
  const double h = std::numbers::sqrt2 / 2.0;
  for (int k = 0; k < 8; ++k) {
    const double phi = k * std::numbers::pi / 4.0;
    detectors.push_back(Json::array({Json::array({h, 0.0}), Json::array({h * std::cos(phi), h * std::sin(phi)})}));
  }
  return {{"y", Json::array({1.0, 0.0})}, {"z", Json::array({0.6, 0.8})}, {"r", 0.5}, {"detectors", detectors}};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"raygeo: ray geometry of Hilbert spaces, with a law verification harness"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  Tolerance tol;
  auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--eps-abs", tol.eps_abs, "Absolute tolerance")->capture_default_str();
    cmd->add_option("--eps-rel", tol.eps_rel, "Relative tolerance")->capture_default_str();
  };

  // verify
  std::string dims_text = "2..8";
  std::size_t trials = 1000;
  std::optional<std::uint64_t> seed_flag;
  std::vector<std::string> law_patterns;
  std::string flavor_text;
  std::string format = "json";
  std::string output_path;
  bool timings = false;
  unsigned threads = 0;
  double angle_tol = 1e-8;
  auto* verify = app.add_subcommand("verify", "Check registered laws on seeded random instances");
  verify->add_option("--dims", dims_text, "Dimensions: 'a..b' or a comma list")->capture_default_str();
  verify->add_option("--trials", trials, "Trials per law per dimension")->capture_default_str();
  verify->add_option("--seed", seed_flag, "Seed (default: $RAYGEO_SEED or 42)");
  verify->add_option("--laws", law_patterns, "Glob(s) on law ids")->delimiter(',');
  verify->add_option("--flavor", flavor_text, "Override every law's instance flavor");
  verify->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  verify->add_option("--output", output_path, "Write the report to this file");
  verify->add_option("--angle-tol", angle_tol, "Angular tolerance in radians")->capture_default_str();
  verify->add_option("--threads", threads, "Worker threads (0 = hardware)");
  verify->add_flag("--timings", timings, "Include elapsed_ms in reports");
  add_tol(verify);

  // compute
  auto* compute = app.add_subcommand("compute", "Evaluate p, theta, a projection or coplanarity");
  compute->require_subcommand(1);
  std::string in_a, in_b, in_c;
  auto inputs = [&](CLI::App* cmd, bool third) {
    cmd->add_option("--a", in_a, "First input (path or inline JSON)")->required();
    cmd->add_option("--b", in_b, "Second input (path or inline JSON)")->required();
    if (third) cmd->add_option("--c", in_c, "Third input (path or inline JSON)")->required();
    add_tol(cmd);
  };
  auto* c_p = compute->add_subcommand("p", "p(a, b) for rays, or p(a, b) for a ray and a subspace");
  inputs(c_p, false);
  auto* c_theta = compute->add_subcommand("theta", "theta(a, b, c) in (-pi, pi]");
  inputs(c_theta, true);
  auto* c_project = compute->add_subcommand("project", "Projection of ray a onto subspace b");
  inputs(c_project, false);
  auto* c_coplanar = compute->add_subcommand("coplanar", "Whether rays a, b, c are coplanar");
  inputs(c_coplanar, true);

  // superpose
  std::string spec_path, report_p;
  auto* sup = app.add_subcommand("superpose", "Superposition r y + (1 - r) z");
  sup->add_option("--spec", spec_path, "Spec JSON {y, z, r}")->required();
  sup->add_option("--report-p", report_p, "Ray x: print closed-form and direct p(x, result)");
  add_tol(sup);

  // search
  std::uint64_t budget = 100000;
  auto* search = app.add_subcommand("search", "Search real 3D instances violating the non-squared interference bound");
  search->add_option("--seed", seed_flag, "Seed (default: $RAYGEO_SEED or 42)");
  search->add_option("--budget", budget, "Number of trials")->capture_default_str();
  add_tol(search);

  // demo-two-slit
  std::string config_path;
  std::string demo_format = "table";
  auto* demo = app.add_subcommand("demo-two-slit", "Quantum vs classical detection probabilities for two slits");
  demo->add_option("--config", config_path, "Config JSON {y, z, r, detectors}; built-in default otherwise");
  demo->add_option("--format", demo_format, "json or table")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  add_tol(demo);

  std::vector<std::string> argv_store{"raygeo"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::vector<std::string> arg_names;
  try {
    tol.validate();
    if (*verify) {
      GeneratorSpec gen;
      gen.dims = parse_dims(dims_text);
      gen.trials_per_dim = trials;
      gen.seed = seed_flag.value_or(default_seed());
      gen.tol = tol;
      gen.angle_tol = angle_tol;
      if (!flavor_text.empty()) {
        gen.flavor = flavor_from_string(flavor_text);
        if (!gen.flavor) throw UsageError("unknown flavor '" + flavor_text + "'");
      }
      gen.validate();
      const auto reports = run_all(gen, law_patterns, threads);
      if (reports.empty()) throw UsageError("no law matches the --laws filter");
      std::string text;
      if (format == "table") {
        text = reports_table(reports, timings);
      } else {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(to_json(r, timings));
        text = dump(arr);
      }
      write_output(text, output_path, out);
      return aggregate_pass(reports) ? kExitOk : kExitNegative;
    }

    if (*compute) {
      if (*c_p) {
        const Ray a = ray_arg(in_a, "a");
        const Json jb = load_json(in_b);
        const double v = looks_like_subspace(jb) ? p_prop(a, subspace_from_json(jb), tol) : p_sim(a, ray_from_json(jb));
        out << dump({{"value", v}});
      } else if (*c_theta) {
        arg_names = {"a", "b", "c"};
        const double v = theta(ray_arg(in_a, "a"), ray_arg(in_b, "b"), ray_arg(in_c, "c"));
        out << dump({{"value", v}});
      } else if (*c_project) {
        const Ray a = ray_arg(in_a, "a");
        const Subspace b = subspace_from_json(load_json(in_b));
        out << dump({{"value", to_json(project_ray(b, a, tol))}});
      } else if (*c_coplanar) {
        out << dump({{"value", coplanar(ray_arg(in_a, "a"), ray_arg(in_b, "b"), ray_arg(in_c, "c"), tol)}});
      }
      return kExitOk;
    }

    if (*sup) {
      const SuperpositionSpec spec = spec_from_json(load_json(spec_path));
      Ray result = [&] {
        try {
          return superpose(spec, tol);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::OrthogonalComponents) throw;
          throw Error(ErrorKind::OrthogonalComponents,
                      "y and z are orthogonal; orthogonal states have no superposition", e.detail());
        }
      }();
      if (report_p.empty()) {
        out << dump(to_json(result));
      } else {
        const Ray x = ray_arg(report_p, "report-p");
        out << dump({{"ray", to_json(result)},
                     {"p_closed_form", p_of_superposition_closed_form(spec, x, tol)},
                     {"p_direct", p_sim(x, result)}});
      }
      return kExitOk;
    }

    if (*search) {
      const std::uint64_t seed = seed_flag.value_or(default_seed());
      const auto witness = search_nonsquared_counterexample(seed, budget, tol);
      if (!witness) {
        out << dump({{"result", "NotFound"}, {"seed", seed}, {"budget", budget}});
        return kExitNegative;
      }
      if (witness->terms.rhs() - witness->terms.lhs_squared() < -tol.eps_abs) {
        err << "witness violates the squared interference inequality\n";
        return kExitNegative;
      }
      Json j = to_json(*witness);
      j["seed"] = seed;
      out << dump(j);
      return kExitOk;
    }

    if (*demo) {
      const Json cfg = config_path.empty() ? default_two_slit_config() : load_json(config_path);
      if (!cfg.is_object() || !cfg.contains("detectors") || !cfg["detectors"].is_array()) {
        throw UsageError("demo config needs {y, z, r, detectors: [...]}");
      }
      const SuperpositionSpec spec = spec_from_json(cfg);
      std::vector<Ray> detectors;
      for (const auto& d : cfg["detectors"]) detectors.push_back(ray_from_json(d));
      const auto rows = two_slit_table(spec, detectors, tol);
      if (demo_format == "json") {
        Json arr = Json::array();
        for (const auto& row : rows) {
          arr.push_back({{"detector", to_json(row.detector)},
                         {"quantum", row.quantum},
                         {"classical", row.classical},
                         {"interference", row.interference}});
        }
        out << dump({{"spec", to_json(spec)}, {"omega", omega(spec.r, spec.y, spec.z, tol)}, {"rows", arr}});
      } else {
        out << "r = " << fmt(spec.r) << ", p(y, z) = " << fmt(p_sim(spec.y, spec.z))
            << ", omega = " << fmt(omega(spec.r, spec.y, spec.z, tol)) << '\n';
        out << std::setw(9) << "detector" << std::setw(12) << "quantum" << std::setw(12) << "classical"
            << std::setw(14) << "interference" << '\n';
        out << std::fixed << std::setprecision(6);
        for (std::size_t i = 0; i < rows.size(); ++i) {
          // Clamp round-off so that vanishing terms never print as -0.000000.
          auto shown = [](double v) { return std::abs(v) < 5e-7 ? 0.0 : v; };
          out << std::setw(9) << i << std::setw(12) << shown(rows[i].quantum) << std::setw(12)
              << shown(rows[i].classical) << std::setw(14) << shown(rows[i].interference) << '\n';
        }
        out.unsetf(std::ios::floatfield);
        out << std::setprecision(6);
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedInput || e.kind() == ErrorKind::UnknownLaw ||
        e.kind() == ErrorKind::DimensionMismatch) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    out << dump(error_json(e, arg_names));
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace raygeo
