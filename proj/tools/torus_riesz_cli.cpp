// Copyright 2026 The Authors.
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

// Batch front end: Epstein zeta tables, expected energies, DPP samples,
// Monte Carlo energies and the A_{s,d} versus lattice-zeta comparison.

#include <omp.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "torus_riesz/asymptotics.hpp"
#include "torus_riesz/csv.hpp"
#include "torus_riesz/dpp.hpp"
#include "torus_riesz/energy.hpp"
#include "torus_riesz/error.hpp"
#include "torus_riesz/ewald.hpp"
#include "torus_riesz/lattice.hpp"
#include "torus_riesz/lattice_io.hpp"

namespace {

using namespace torus_riesz;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct RunConfig {
  std::string lattice = "Z1";
  std::string lattice_file;
  bool normalize = false;
  std::optional<double> s;
  std::string s_grid;
  std::string support;
  std::optional<double> n;
  int dim = 0;
  std::size_t replicas = 1;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string out;
  double rel_tol = 1e-10;
};

Error usage(const std::string& what) { return Error(ErrorCode::DomainError, what); }

Lattice load_lattice(const RunConfig& cfg) {
  if (!cfg.lattice_file.empty()) return lattice_from_json_file(cfg.lattice_file);
  return named_lattice(cfg.lattice, cfg.normalize);
}

std::vector<double> split_numbers(const std::string& text, char sep) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw usage("cannot parse number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

// --s wins over --s-grid; the grid is min,max,count with count ≥ 2.
std::vector<double> s_values(const RunConfig& cfg) {
  if (cfg.s) return {*cfg.s};
  if (cfg.s_grid.empty()) throw usage("one of --s or --s-grid is required");
  const std::vector<double> g = split_numbers(cfg.s_grid, ',');
  if (g.size() != 3) throw usage("--s-grid expects min,max,count");
  const double count = g[2];
  if (count < 2 || count != std::floor(count)) throw usage("--s-grid count must be an integer >= 2");
  if (!(g[1] > g[0])) throw usage("--s-grid needs min < max");
  const int n = static_cast<int>(count);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = g[0] + (g[1] - g[0]) * i / (n - 1);
  return out;
}

long parse_integer(const std::string& text, const std::string& what) {
  const std::vector<double> v = split_numbers(text, ',');
  if (v.size() != 1 || v[0] != std::floor(v[0])) throw usage(what + " must be an integer");
  return static_cast<long>(v[0]);
}

// box:n and shell:N live on Z^d; domain:ball / domain:box scale a unit-mass
// domain by N^{1/d} on the chosen lattice; list:k1;k2;... gives dual
// coefficient vectors with comma-separated entries.
SpectralSupport build_support(const RunConfig& cfg) {
  const auto colon = cfg.support.find(':');
  if (colon == std::string::npos) throw usage("--support expects kind:argument");
  const std::string kind = cfg.support.substr(0, colon);
  const std::string arg = cfg.support.substr(colon + 1);
  if (kind == "box" || kind == "shell") {
    const int d = cfg.dim > 0 ? cfg.dim : load_lattice(cfg).dim();
    const long v = parse_integer(arg, "--support " + kind);
    if (v < 0) throw usage("--support " + kind + " needs a nonnegative argument");
    return kind == "box" ? support_box(d, static_cast<int>(v)) : support_shell(d, v);
  }
  if (kind == "domain") {
    const Lattice lattice = load_lattice(cfg);
    if (!cfg.n) throw usage("--support domain:* needs --N");
    const int d = lattice.dim();
    if (arg == "ball") {
      return support_scaled_domain(lattice, DomainSpec::unit_mass_ball(d, lattice.covolume()), *cfg.n);
    }
    if (arg == "box") {
      return support_scaled_domain(lattice, DomainSpec::unit_mass_cube(d, lattice.covolume()), *cfg.n);
    }
    throw usage("unknown domain '" + arg + "' (ball or box)");
  }
  if (kind == "list") {
    const Lattice lattice = load_lattice(cfg);
    std::vector<IntVector> coeffs;
    std::stringstream in(arg);
    std::string item;
    while (std::getline(in, item, ';')) {
      const std::vector<double> v = split_numbers(item, ',');
      IntVector k(static_cast<Eigen::Index>(v.size()));
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != std::floor(v[i])) throw usage("non-integer coefficient in --support list");
        k[static_cast<Eigen::Index>(i)] = static_cast<std::int64_t>(v[i]);
      }
      coeffs.push_back(k);
    }
    return SpectralSupport(lattice, std::move(coeffs));
  }
  throw usage("unknown support kind '" + kind + "'");
}

// Runs `row(i)` for every grid point, possibly in parallel, and returns the
// rows in grid order. The first failure (lowest index) is rethrown.
template <class Row>
std::vector<std::vector<std::string>> grid_rows(std::size_t n, Row&& row) {
  std::vector<std::vector<std::string>> rows(n);
  std::vector<std::exception_ptr> failures(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    try {
      rows[i] = row(static_cast<std::size_t>(i));
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return rows;
}

void emit(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& r : rows) {
    if (r.size() == 1 && r[0].starts_with("#")) {
      out << r[0] << '\n';
    } else {
      csv::write_row(out, r);
    }
  }
}

void cmd_zeta(const RunConfig& cfg, std::ostream& out) {
  const Lattice lattice = load_lattice(cfg);
  const std::vector<double> grid = s_values(cfg);
  EwaldSettings settings;
  settings.rel_tol = cfg.rel_tol;
  settings.validate();
  csv::write_row(out, {"s", "value"});
  emit(out, grid_rows(grid.size(), [&](std::size_t i) -> std::vector<std::string> {
         const double s = grid[i];
         if (s == lattice.dim()) return {"# s=" + csv::number(s) + " skipped: pole at s = d"};
         return {csv::number(s), csv::number(epstein_zeta(lattice, s, settings).value)};
       }));
}

void cmd_expected_energy(const RunConfig& cfg, std::ostream& out) {
  const SpectralSupport supp = build_support(cfg);
  const std::vector<double> grid = s_values(cfg);
  csv::write_row(out, {"s", "tN", "closed_form", "poisson_baseline", "pair_sum"});
  emit(out, grid_rows(grid.size(), [&](std::size_t i) -> std::vector<std::string> {
         const EnergyReport r = expected_energy_closed(supp, grid[i]);
         return {csv::number(r.s), csv::number(static_cast<std::uint64_t>(r.t_n)),
                 csv::number(r.closed_form), csv::number(r.poisson_baseline),
                 csv::number(r.pair_sum)};
       }));
}

void cmd_sample(const RunConfig& cfg, std::ostream& out) {
  const SpectralSupport supp = build_support(cfg);
  std::vector<std::string> header{"replica", "point_index"};
  for (int j = 1; j <= supp.dim(); ++j) header.push_back("c" + std::to_string(j));
  csv::write_row(out, header);
  const auto batch = sample_replicas(supp, cfg.seed, cfg.replicas);
  for (const auto& c : batch) {
    for (std::size_t p = 0; p < c.points.size(); ++p) {
      std::vector<std::string> row{csv::number(c.replica), csv::number(static_cast<std::uint64_t>(p))};
      for (double x : c.points[p].coeffs) row.push_back(csv::number(x));
      csv::write_row(out, row);
    }
  }
}

void cmd_mc_energy(const RunConfig& cfg, std::ostream& out) {
  const SpectralSupport supp = build_support(cfg);
  const std::vector<double> grid = s_values(cfg);
  if (cfg.replicas < 100) throw usage("--replicas must be at least 100");
  EwaldSettings settings;
  settings.rel_tol = cfg.rel_tol;
  settings.validate();
  csv::write_row(out, {"s", "tN", "replicas", "seed", "mean", "stderr", "closed_form", "z_score"});
  for (double s : grid) {
    const EnergyReport closed = expected_energy_closed(supp, s);
    const MCReport mc = mc_expected_energy(supp, s, cfg.replicas, cfg.seed, settings);
    const double diff = mc.mean - closed.closed_form;
    const double z = mc.std_error > 0.0 ? diff / mc.std_error : (diff == 0.0 ? 0.0 : INFINITY);
    csv::write_row(out, {csv::number(s), csv::number(static_cast<std::uint64_t>(closed.t_n)),
                         csv::number(static_cast<std::uint64_t>(mc.replicas)), csv::number(mc.seed),
                         csv::number(mc.mean), csv::number(mc.std_error),
                         csv::number(closed.closed_form), csv::number(z)});
  }
}

void cmd_figure1(const RunConfig& cfg, std::ostream& out) {
  const int d = cfg.dim > 0 ? cfg.dim : 2;
  std::string name;
  if (d == 2) {
    name = "hexagonal";
  } else if (d == 4) {
    name = "D4";
  } else {
    throw usage("figure1 supports --dim 2 or 4");
  }
  const Lattice lattice = named_lattice(name, true);
  std::vector<double> grid;
  if (cfg.s || !cfg.s_grid.empty()) {
    grid = s_values(cfg);
  } else {
    const int n = 40;
    for (int i = 0; i < n; ++i) grid.push_back(0.05 + (d - 0.1) * i / (n - 1));
  }
  EwaldSettings settings;
  settings.rel_tol = cfg.rel_tol;
  settings.validate();
  csv::write_comment(out, "lattice: " + name + " (covolume 1), d = " + std::to_string(d));
  csv::write_row(out, {"s", "A_sd", "zeta_lattice"});
  emit(out, grid_rows(grid.size(), [&](std::size_t i) -> std::vector<std::string> {
         const double s = grid[i];
         return {csv::number(s), csv::number(a_constant(s, d)),
                 csv::number(epstein_zeta(lattice, s, settings).value)};
       }));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periodic Riesz energies of determinantal point processes on flat tori"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file with flag defaults (flags override it)");

  RunConfig cfg;
  app.add_option("--lattice", cfg.lattice,
                 "Z<d>, hexagonal, D4, E8, or gram:<path> (default Z1)");
  app.add_option("--lattice-file", cfg.lattice_file, "lattice JSON file");
  app.add_flag("--normalize-covolume", cfg.normalize, "rescale the named lattice to covolume 1");
  app.add_option("--s", cfg.s, "single Riesz exponent");
  app.add_option("--s-grid", cfg.s_grid, "min,max,count");
  app.add_option("--support", cfg.support,
                 "box:n | shell:N | domain:ball | domain:box | list:k1;k2;...");
  app.add_option("--N", cfg.n, "scale parameter for domain supports");
  app.add_option("--dim", cfg.dim, "dimension for box/shell supports and figure1");
  app.add_option("--replicas", cfg.replicas, "number of DPP replicas");
  app.add_option("--seed", cfg.seed, "RNG seed (default 0)");
  app.add_option("--threads", cfg.threads, "OpenMP threads (0 = runtime default)")
      ->envname("TORUS_RIESZ_THREADS");
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--rel-tol", cfg.rel_tol, "Ewald truncation tolerance");

  struct Command {
    CLI::App* app;
    void (*run)(const RunConfig&, std::ostream&);
  };
  const std::vector<Command> commands = {
      {app.add_subcommand("zeta", "Epstein zeta over s"), cmd_zeta},
      {app.add_subcommand("expected-energy", "closed-form expected energy"), cmd_expected_energy},
      {app.add_subcommand("sample", "draw DPP configurations"), cmd_sample},
      {app.add_subcommand("mc-energy", "Monte Carlo energy versus the closed form"), cmd_mc_energy},
      {app.add_subcommand("figure1", "A_{s,d} against the lattice zeta"), cmd_figure1},
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (cfg.threads < 0) {
    std::cerr << "error: --threads must be nonnegative\n";
    return kExitUsage;
  }
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

  try {
    std::ostringstream buffer;
    for (const auto& c : commands) {
      if (c.app->parsed()) c.run(cfg, buffer);
    }
    if (cfg.out.empty()) {
      std::cout << buffer.str() << std::flush;
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot write '" << cfg.out << "'\n";
        return kExitUsage;
      }
      file << buffer.str();
      if (!file.flush()) {
        std::cerr << "error: failed writing '" << cfg.out << "'\n";
        return kExitUsage;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_numerical_failure(e.code()) ? kExitNumerical : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
