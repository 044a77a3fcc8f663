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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "torus_riesz/asymptotics.hpp"
#include "torus_riesz/dpp.hpp"
#include "torus_riesz/energy.hpp"
#include "torus_riesz/ewald.hpp"
#include "torus_riesz/optimizer.hpp"
#include "torus_riesz/pair_sum.hpp"
#include "torus_riesz/specfun.hpp"

using namespace torus_riesz;

namespace {

const double kPi = static_cast<double>(oracle::kPiL);

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double sphere(int d) {
  return 2.0 * std::pow(kPi, d / 2.0) / static_cast<double>(oracle::gamma(d / 2.0L));
}

// Collects sub-checks and a short note for the failing ones.
struct Verdict {
  bool ok = true;
  std::ostringstream notes;
  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [" << what << "]";
    }
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string capture(const std::string& args) {
  const std::string cmd = std::string(TORUS_RIESZ_CLI) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  if (pclose(pipe) != 0) out = "<failed>";
  return out;
}

void zeta_identities(Verdict& v) {
  for (const char* name : {"Z1", "Z2", "hexagonal", "D4"}) {
    const Lattice l = named_lattice(name, true);
    v.check(std::abs(epstein_zeta(l, 0.0).value + 1.0) < 1e-8, std::string(name) + " s=0");
    // The analytic continuation approaches the same value.
    v.check(std::abs(epstein_zeta(l, 1e-10).value + 1.0) < 1e-8, std::string(name) + " s->0");
  }
  const Lattice z = named_lattice("Z1", false);
  for (double s : {0.5, 1.5, 3.0}) {
    const double got = epstein_zeta(z, s).value;
    v.check(rel(got, 2.0 * oracle::riemann_zeta(s)) < 1e-9, "Z s=" + fmt(s));
  }
  const double z2 = epstein_zeta(named_lattice("Z2", false), 4.0).value;
  v.check(rel(z2, 4.0 * oracle::riemann_zeta(2.0) * oracle::dirichlet_beta(2.0)) < 1e-9, "Z2 s=4");
}

void residues(Verdict& v) {
  for (int d : {1, 2}) {
    const Lattice l = named_lattice("Z" + std::to_string(d), false);
    const double s = d - 1e-6;
    v.check(rel((s - d) * epstein_zeta(l, s).value, sphere(d)) < 1e-3, "zeta d=" + fmt(d));
  }
  const double sh = 2.0 - 1e-6;
  v.check(rel((sh - 2.0) * epstein_zeta(named_lattice("hexagonal", true), sh).value, sphere(2)) <
              1e-3,
          "zeta hexagonal");
  for (int d : {1, 2, 3, 8}) {
    const double s = d - 1e-6;
    v.check(rel((s - d) * a_constant(s, d), sphere(d)) < 1e-3, "A d=" + fmt(d));
  }
}

void functional_equation(Verdict& v) {
  Matrix oblique(2, 2);
  oblique << 1.3, 0.4, 0.0, 0.9;
  const std::vector<std::pair<std::string, Lattice>> lattices = {
      {"Z2", named_lattice("Z2", false)},
      {"hexagonal", named_lattice("hexagonal", true)},
      {"oblique", Lattice(oblique)}};
  for (const auto& [name, l] : lattices) {
    for (double s : {0.3, 0.7, 1.4}) {
      const double lhs = std::pow(kPi, -s / 2) * specfun::gamma(s / 2) * epstein_zeta(l, s).value;
      const double rhs = std::pow(kPi, -(2 - s) / 2) * specfun::gamma((2 - s) / 2) *
                         epstein_zeta(l.dual(), 2 - s).value / l.covolume();
      v.check(rel(lhs, rhs) < 1e-8, name + " s=" + fmt(s));
    }
  }
}

void quadrature_vs_closed(Verdict& v) {
  const SpectralSupport pair(named_lattice("Z1", false),
                             {IntVector::Constant(1, 0), IntVector::Constant(1, 1)});
  const SpectralSupport box = support_box(1, 1);
  const std::pair<const SpectralSupport*, double> cases[] = {{&pair, 0.5}, {&box, 0.7}};
  for (auto [supp, s] : cases) {
    const double closed = expected_energy_closed(*supp, s).closed_form;
    const double quad = expected_energy_quadrature(*supp, s).value;
    v.check(rel(quad, closed) < 1e-5, "t=" + fmt(supp->trace()) + " rel " + fmt(rel(quad, closed)));
  }
}

void mc_vs_closed(Verdict& v) {
  struct Case {
    SpectralSupport supp;
    double s;
    std::uint64_t seed;
  };
  const Case cases[] = {{support_box(1, 1), 0.5, 1}, {support_shell(2, 4), 1.0, 0}};
  for (const auto& c : cases) {
    const MCReport mc = mc_expected_energy(c.supp, c.s, 400, c.seed);
    const double closed = expected_energy_closed(c.supp, c.s).closed_form;
    const double z = (mc.mean - closed) / mc.std_error;
    v.notes << " z=" << fmt(z);
    v.check(std::abs(z) <= 3.0, "d=" + fmt(c.supp.dim()));
  }
}

void rearrangement(Verdict& v) {
  const DomainSpec disk = DomainSpec::unit_mass_ball(2, 1.0);
  const DomainSpec square = DomainSpec::unit_mass_cube(2, 1.0);
  const MCReport ball = riesz_double_integral_mc(disk, 1.0, 1.0, 1000000, 0);
  const MCReport cube = riesz_double_integral_mc(square, 1.0, 1.0, 1000000, 1);
  const double se = std::hypot(ball.std_error, cube.std_error);
  v.notes << " gap/se=" << fmt((ball.mean - cube.mean) / se);
  v.check(ball.mean - cube.mean > 3.0 * se, "I_ball - I_cube");
  const Lattice z2 = named_lattice("Z2", false);
  v.check(c_upper_bound(z2, disk, 1.0) < c_upper_bound(z2, square, 1.0), "bound order");
}

void ball_bound_consistency(Verdict& v) {
  const std::pair<int, double> bound_cases[] = {{2, 1.0}, {1, 0.5}, {3, 2.0}};
  for (auto [d, s] : bound_cases) {
    const Lattice l = named_lattice("Z" + std::to_string(d), false);
    const double c = c_upper_bound(l, DomainSpec::unit_mass_ball(d, 1.0), s);
    v.check(std::abs(c - a_constant(s, d)) < 1e-10 * std::abs(a_constant(s, d)),
            "bound d=" + fmt(d));
  }
  const std::pair<int, double> bessel_cases[] = {{1, 0.5}, {2, 1.0}, {3, 1.5}};
  for (auto [d, s] : bessel_cases) {
    v.check(rel(bessel_square_integral_quadrature(d, s), bessel_square_integral(d, s)) < 1e-6,
            "bessel d=" + fmt(d));
  }
}

void figure_data(Verdict& v) {
  const std::pair<int, const char*> cases[] = {{2, "hexagonal"}, {4, "D4"}};
  for (auto [d, name] : cases) {
    const Lattice l = named_lattice(name, true);
    int bad = 0;
    for (int i = 0; i < 40; ++i) {
      const double s = 0.05 + (d - 0.1) * i / 39.0;
      bad += !(a_constant(s, d) > epstein_zeta(l, s).value);
    }
    v.check(bad == 0, std::string(name) + " violations " + fmt(bad));
    const std::string flags = "figure1 --dim " + std::to_string(d);
    const std::string a = capture(flags + " --threads 1");
    v.check(a != "<failed>" && a == capture(flags + " --threads 2") && a == capture(flags),
            std::string(name) + " csv not reproducible");
  }
}

void asymptotic_convergence(Verdict& v) {
  const Lattice z1 = named_lattice("Z1", false);
  const DomainSpec interval = DomainSpec::unit_mass_cube(1, 1.0);
  const double s = 0.5;
  const double target = -energy_pair_prefactor(1, 1.0, s) * 8.0 / 3.0;
  double prev = INFINITY;
  for (double n : {1e3, 1e4, 1e5}) {
    const EnergyReport e = expected_energy_closed(support_scaled_domain(z1, interval, n), s);
    const double t = static_cast<double>(e.t_n);
    const double second = (e.closed_form - e.prefactor_pole * (t * t - t)) / std::pow(t, 1.0 + s);
    const double gap = rel(second, target);
    v.notes << " gap(" << fmt(n) << ")=" << fmt(gap);
    v.check(gap < prev, "gap not decreasing");
    prev = gap;
  }
}

void sampler_statistics(Verdict& v) {
  const int replicas = 10000;
  // First intensity on a sub-box of the shell r_2(5) = 8 process.
  const SpectralSupport shell = support_shell(2, 5);
  double sum = 0.0, sum2 = 0.0;
  for (int r = 0; r < replicas; ++r) {
    int count = 0;
    for (const auto& p : sample(shell, 2026, r).points) {
      count += p.coeffs[0] > 0.1 && p.coeffs[0] < 0.45 && p.coeffs[1] > 0.3 && p.coeffs[1] < 0.9;
    }
    sum += count;
    sum2 += count * count;
  }
  const double mean = sum / replicas;
  const double se = std::sqrt((sum2 / replicas - mean * mean) / (replicas - 1));
  const double expected = 8.0 * 0.35 * 0.6;
  v.notes << " box z=" << fmt((mean - expected) / se);
  v.check(std::abs(mean - expected) < 3.0 * se, "box count");

  // Pair-gap histogram for the d = 1 box n = 1 process.
  const SpectralSupport box = support_box(1, 1);
  const int bins = 10;
  std::vector<double> hs(bins, 0.0), hs2(bins, 0.0);
  for (int r = 0; r < replicas; ++r) {
    std::vector<int> count(bins, 0);
    const auto pts = sample(box, 2026, r).points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (i == j) continue;
        double g = pts[i].coeffs[0] - pts[j].coeffs[0];
        g -= std::floor(g);
        ++count[std::min(bins - 1, static_cast<int>(g * bins))];
      }
    }
    for (int b = 0; b < bins; ++b) {
      hs[b] += count[b];
      hs2[b] += count[b] * count[b];
    }
  }
  double worst = 0.0;
  for (int b = 0; b < bins; ++b) {
    const double m = hs[b] / replicas;
    const double e = std::sqrt((hs2[b] / replicas - m * m) / (replicas - 1));
    worst = std::max(worst, std::abs(m - oracle::box1_pair_gap_mass(b / 10.0, (b + 1) / 10.0)) / e);
  }
  v.notes << " max bin |z|=" << fmt(worst);
  v.check(worst < 3.0, "pair histogram");
}

void optimizer_sanity(Verdict& v) {
  for (const char* name : {"Z2", "hexagonal", "D4"}) {
    const Lattice l = named_lattice(name, true);
    const SpectralSupport two = greedy_support_optimizer(l, 2, 0.5, 3.0);
    const Matrix& w = two.dual_vectors();
    v.check(std::abs((w.col(0) - w.col(1)).norm() - shortest_vector(l.dual())) < 1e-12, name);
  }
  const Lattice z1 = named_lattice("Z1", false);
  int mismatches = 0;
  for (double s : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    for (std::size_t t = 1; t <= 5; ++t) {
      const double a = 1.0 - s;
      const double g = pair_sum(greedy_support_optimizer(z1, t, s, 6.0), a);
      const double x = pair_sum(exhaustive_support_optimizer(z1, t, s, 6.0), a);
      mismatches += std::abs(g - x) > 1e-12 * (1.0 + x);
    }
  }
  v.check(mismatches == 0, "greedy below exhaustive " + fmt(mismatches));
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<void(Verdict&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "zeta identities", 10, zeta_identities},
      {2, "residues of zeta and A", 10, residues},
      {3, "functional equation", 30, functional_equation},
      {4, "closed form vs quadrature", 120, quadrature_vs_closed},
      {5, "closed form vs Monte Carlo", 600, mc_vs_closed},
      {6, "rearrangement direction", 60, rearrangement},
      {7, "ball bound equals A; Bessel quadrature", 60, ball_bound_consistency},
      {8, "A above lattice zeta; reproducible CSV", 120, figure_data},
      {9, "second-order term convergence", 120, asymptotic_convergence},
      {10, "sampler statistics", 600, sampler_statistics},
      {11, "support optimizer", 60, optimizer_sanity},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.ok = false;
      v.notes << " [exception: " << e.what() << "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) v.check(false, "over time budget");
    all = all && v.ok;
    std::cout << "criterion " << c.id << ": " << (v.ok ? "PASS" : "FAIL") << "  " << c.title
              << " (" << fmt(secs) << " s)" << v.notes.str() << std::endl;
  }
  return all ? 0 : 1;
}
