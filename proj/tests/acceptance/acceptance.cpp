// Copyright 2026 The esdsim Authors
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

// Acceptance suite: one PASS/FAIL line per criterion, tolerances and time
// budgets fixed below. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "analytic.hpp"
#include "channels.hpp"
#include "entanglement.hpp"
#include "oracles.hpp"
#include "random_states.hpp"
#include "validation.hpp"

using namespace esd;

namespace {

constexpr double kAdditivityKrausTol = 1e-10;
constexpr double kAdditivityLindbladTol = 1e-6;
constexpr double kAdditivityBudget = 5.0;
constexpr double kPhaseTol = 1e-10;
constexpr double kPhaseBudget = 1.0;
constexpr double kElementTol = 1e-12;
constexpr double kAmpConcurrenceTol = 1e-10;
constexpr double kEsdTol = 1e-8;
constexpr double kEsdBudget = 5.0;
constexpr double kDiagramBudget = 60.0;
constexpr double kExpFitTol = 1e-8;
constexpr double kCompletenessTol = 1e-10;
constexpr double kPreservationTol = 1e-10;
constexpr double kXAgreementTol = 1e-10;
constexpr double kUnitaryTol = 1e-8;
constexpr double kKrausLindbladTol = 1e-6;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

NoiseSet symmetric(double gamma1, double gamma2) {
  NoiseSet specs;
  for (Qubit q : {Qubit::kA, Qubit::kB}) {
    if (gamma1 > 0.0) specs.push_back({q, NoiseKind::kAmplitude, gamma1});
    if (gamma2 > 0.0) specs.push_back({q, NoiseKind::kPhase, gamma2});
  }
  return specs;
}

std::vector<double> grid(double hi, int n) {
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) t[i] = hi * i / (n - 1);
  return t;
}

Outcome ac1() {
  const auto times = grid(5.0, 20);
  double kraus = 0.0;
  double lindblad = 0.0;
  for (double g1 : {0.1, 1.0, 3.0}) {
    for (double g2 : {0.1, 1.0, 3.0}) {
      const AdditivityReport r = additivity(g1, g2, times, 1e-4);
      kraus = std::max(kraus, r.max_dev_kraus);
      lindblad = std::max(lindblad, r.max_dev_lindblad);
    }
  }
  return {kraus <= kAdditivityKrausTol && lindblad <= kAdditivityLindbladTol,
          fmt("kraus dev %.3e (tol %.0e), lindblad dev %.3e (tol %.0e)", kraus, kAdditivityKrausTol, lindblad,
              kAdditivityLindbladTol)};
}

Outcome ac2() {
  double worst = 0.0;
  for (double lambda : {1.0, 2.0, 3.0, 4.0}) {
    const auto times = grid(5.0, 50);
    const ConcurrenceTrace tr = trace_concurrence(XState::lambda_family(lambda).density(), symmetric(0.0, 1.0), times);
    for (std::size_t i = 0; i < times.size(); ++i) {
      worst = std::max(worst, std::abs(tr.values[i] - 2.0 * lambda / 9.0 * std::exp(-times[i])));
    }
  }
  return {worst <= kPhaseTol, fmt("max |C - (2l/9)e^-t| %.3e (tol %.0e)", worst, kPhaseTol)};
}

Outcome ac3() {
  double worst = 0.0;
  for (double lambda : {1.0, 2.0, 3.0, 4.0}) {
    for (double t : grid(5.0, 50)) {
      const DensityMatrix rho = evolve(XState::lambda_family(lambda).density(), symmetric(1.0, 0.0), t);
      const double w2 = 1.0 - std::exp(-t);
      worst = std::max({worst, std::abs(rho(1, 2).real() - lambda / 9.0 * std::exp(-t)),
                        std::abs(rho(0, 0).real() - std::exp(-2.0 * t) / 9.0),
                        std::abs(rho(3, 3).real() - (w2 * w2 + 8.0 * w2) / 9.0)});
    }
  }
  return {worst <= kElementTol, fmt("max element dev %.3e (tol %.0e)", worst, kElementTol)};
}

Outcome ac4() {
  double worst = 0.0;
  double smallest = 1.0;
  bool crossed = false;
  for (double lambda : {3.0, 3.5, 4.0}) {
    const DensityMatrix rho = XState::lambda_family(lambda).density();
    for (double t : grid(20.0, 201)) {
      const double c = fast_concurrence(evolve(rho, symmetric(1.0, 0.0), t));
      const double w2 = -std::expm1(-t);
      const double closed = 2.0 / 9.0 * (lambda - std::sqrt(w2 * w2 + 8.0 * w2)) * std::exp(-t);
      worst = std::max(worst, std::abs(c - closed));
      smallest = std::min(smallest, c);
    }
    crossed = crossed || esd_time(rho, symmetric(1.0, 0.0), 20.0).has_value();
  }
  return {worst <= kAmpConcurrenceTol && smallest > 0.0 && !crossed,
          fmt("max dev %.3e (tol %.0e), min C on grid %.3e, zero crossing %s", worst, kAmpConcurrenceTol, smallest,
              crossed ? "found" : "none")};
}

Outcome ac5() {
  // Oracle: quadratic root, confirmed by bisection on the closed-form bracket.
  const double quadratic = testing::esd_lambda4_combined();
  const double bisected = testing::bisect(
      [](double t) {
        const double w2 = -std::expm1(-t);
        return 4.0 * std::exp(-t) - std::sqrt(w2 * w2 + 8.0 * w2);
      },
      0.0, 5.0);
  const auto found = esd_time(XState::lambda_family(4.0).density(), symmetric(1.0, 1.0), 20.0);
  const double dev = found ? std::abs(*found - quadratic) : INFINITY;
  int finite = 0;
  for (int k = 1; k <= 32; ++k) {
    if (esd_time(XState::lambda_family(4.0 * k / 32.0).density(), symmetric(1.0, 1.0), 20.0)) ++finite;
  }
  const bool oracle_ok = std::abs(quadratic - bisected) < 1e-12 && std::abs(quadratic - testing::kEsdLambda4Combined) < 1e-14;
  return {oracle_ok && dev <= kEsdTol && finite == 32,
          fmt("t* %.12f vs oracle %.12f, dev %.3e (tol %.0e), finite for %d/32 lambdas", found ? *found : NAN,
              quadratic, dev, kEsdTol, finite)};
}

struct Panel {
  std::vector<DiagramCell> cells;
  DiagramGrid grid;
};

Panel panel(const NoiseSet& specs) {
  const DiagramGrid g{64, 64};
  return {diagram(g, specs, default_t_max(specs)), g};
}

bool valid_entangled(const DiagramCell& c) {
  return c.decay.kind != DecayKind::kInvalid && c.decay.kind != DecayKind::kSeparableAtStart;
}

Outcome ac6() {
  const Panel p = panel(symmetric(1.0, 0.0));
  const double da = p.grid.a_step();
  const double dz = p.grid.z_step();
  int checked = 0;
  int skipped = 0;
  int mismatched = 0;
  int mismatched_near = 0;
  for (const DiagramCell& c : p.cells) {
    if (!valid_entangled(c)) continue;
    const bool dies = c.a > c.z * c.z;
    // Near the boundary if any neighbouring lattice point sits on the other side.
    bool near = false;
    for (int i = -1; i <= 1; ++i)
      for (int j = -1; j <= 1; ++j) {
        const double z = c.z + j * dz;
        near = near || ((c.a + i * da > z * z) != dies);
      }
    const bool ok = (c.decay.kind == DecayKind::kSuddenDeath) == dies;
    if (near) {
      ++skipped;
      if (!ok) ++mismatched_near;
      continue;
    }
    ++checked;
    if (!ok) ++mismatched;
  }
  return {mismatched == 0 && checked > 0,
          fmt("%d cells checked, %d mismatches; %d boundary cells skipped (%d differ)", checked, mismatched, skipped,
              mismatched_near)};
}

Outcome ac7() {
  const Panel p = panel(symmetric(0.0, 1.0));
  int sudden = 0;
  int entangled = 0;
  for (const DiagramCell& c : p.cells) {
    if (c.decay.kind == DecayKind::kSuddenDeath) ++sudden;
    if (valid_entangled(c)) ++entangled;
  }
  return {sudden == 0 && entangled > 0, fmt("%d SUDDEN_DEATH cells among %d entangled", sudden, entangled)};
}

Outcome ac8() {
  const Panel p = panel(symmetric(1.0, 1.0));
  int checked = 0;
  int other = 0;
  for (const DiagramCell& c : p.cells) {
    if (!valid_entangled(c) || c.a <= 0.0) continue;
    ++checked;
    if (c.decay.kind != DecayKind::kSuddenDeath) ++other;
  }
  return {other == 0 && checked > 0, fmt("%d entangled cells with a > 0, %d not SUDDEN_DEATH", checked, other)};
}

// Max residual of a least-squares line through (t, log y).
double log_linear_residual(const std::vector<double>& t, const std::vector<double>& y) {
  const std::size_t n = t.size();
  double st = 0, sy = 0, stt = 0, sty = 0;
  std::vector<double> ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    ly[i] = std::log(y[i]);
    st += t[i];
    sy += ly[i];
    stt += t[i] * t[i];
    sty += t[i] * ly[i];
  }
  const double slope = (n * sty - st * sy) / (n * stt - st * st);
  const double icept = (sy - slope * st) / n;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(ly[i] - (icept + slope * t[i])));
  return worst;
}

Outcome ac9() {
  const NoiseSpec amp_a{Qubit::kA, NoiseKind::kAmplitude, 1.0};
  const NoiseSpec ph_a{Qubit::kA, NoiseKind::kPhase, 1.0};
  const NoiseSpec amp_b{Qubit::kB, NoiseKind::kAmplitude, 1.0};
  const DensityMatrix rho = XState::lambda_family(4.0).density();

  const auto t_a = esd_time(rho, NoiseSet{amp_a, ph_a}, 20.0);
  const NoiseSet split{ph_a, amp_b};
  const auto t_split = esd_time(rho, split, 20.0);

  // Coherent product probe, |x+> on each qubit, so both marginals carry coherence.
  ComplexMat probe(4);
  for (cplx& v : probe.entries()) v = 0.25;
  const DensityMatrix probe_rho = DensityMatrix::validate(probe);
  std::vector<double> times;
  std::vector<double> coh_a;
  std::vector<double> coh_b;
  for (double t : grid(10.0, 101)) {
    const DensityMatrix out = evolve(probe_rho, split, t);
    times.push_back(t);
    coh_a.push_back(std::abs(partial_trace(out.mat(), Qubit::kA)(0, 1)));
    coh_b.push_back(std::abs(partial_trace(out.mat(), Qubit::kB)(0, 1)));
  }
  const double fit = std::max(log_linear_residual(times, coh_a), log_linear_residual(times, coh_b));
  const bool dead_after = t_split && fast_concurrence(evolve(rho, split, 2.0 * *t_split)) == 0.0;

  const double dev_a = t_a ? std::abs(*t_a - testing::kLn5) : INFINITY;
  const double dev_split = t_split ? std::abs(*t_split - testing::kLn5) : INFINITY;
  return {dev_a <= kEsdTol && dev_split <= kEsdTol && fit < kExpFitTol && dead_after,
          fmt("(a) t* %.10f, (b) t* %.10f, golden ln5 dev %.1e/%.1e (tol %.0e); marginal log-fit residual %.2e (tol "
              "%.0e)",
              t_a ? *t_a : NAN, t_split ? *t_split : NAN, dev_a, dev_split, kEsdTol, fit, kExpFitTol)};
}

Outcome ac10() {
  testing::Rng rng(20260101);

  double completeness = 0.0;
  for (double rate : {0.1, 1.0, 3.0}) {
    for (int k = 0; k <= 60; ++k) {
      const double t = 1e-6 * std::pow(20.0 / rate / 1e-6, k / 60.0);
      completeness = std::max({completeness, completeness_defect(dephasing_channel(rate, t)),
                               completeness_defect(amplitude_channel(rate, t)),
                               completeness_defect(noise_channel(symmetric(rate, rate), 2, t))});
    }
  }

  const NoiseSet all = symmetric(1.0, 1.0);
  double preservation = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrix out = evolve(testing::random_density(rng, 2), all, rng.uniform(0.0, 5.0));
    preservation = std::max({preservation, std::abs(trace(out.mat()) - 1.0), -hermitian_eigvals(out.mat())[0]});
  }

  double x_agree = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const XState x = testing::random_xstate(rng);
    x_agree = std::max(x_agree, std::abs(concurrence(x.density()) - concurrence_x(x)));
  }

  double unitary = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrix rho = testing::random_density(rng, 2);
    const ComplexMat turned = testing::conjugate_by(testing::random_local_unitary(rng), rho.mat());
    unitary = std::max(unitary, std::abs(concurrence(rho) - concurrence(DensityMatrix::validate(turned))));
  }

  // Every non-empty subset of the four noise slots.
  const NoiseSet slots{{Qubit::kA, NoiseKind::kAmplitude, 1.0},
                       {Qubit::kB, NoiseKind::kAmplitude, 1.0},
                       {Qubit::kA, NoiseKind::kPhase, 1.0},
                       {Qubit::kB, NoiseKind::kPhase, 1.0}};
  double kl = 0.0;
  for (int mask = 1; mask < 16; ++mask) {
    NoiseSet specs;
    for (int s = 0; s < 4; ++s)
      if (mask & (1 << s)) specs.push_back(slots[s]);
    const DensityMatrix rho = testing::random_density(rng, 2);
    kl = std::max(kl, max_abs_diff(evolve(rho, specs, 1.0).mat(), integrate(rho, specs, 1.0).mat()));
  }

  const bool pass = completeness <= kCompletenessTol && preservation <= kPreservationTol &&
                    x_agree <= kXAgreementTol && unitary <= kUnitaryTol && kl <= kKrausLindbladTol;
  return {pass, fmt("completeness %.1e, trace/positivity %.1e, X vs general %.1e, local unitary %.1e, "
                    "Kraus vs Lindblad %.1e",
                    completeness, preservation, x_agree, unitary, kl)};
}

struct Criterion {
  const char* id;
  const char* name;
  double budget_s;  // 0: no runtime limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "single-qubit coherence rates add", kAdditivityBudget, ac1},
      {"AC2", "phase-only concurrence is exponential", kPhaseBudget, ac2},
      {"AC3", "amplitude-only matrix elements", 0.0, ac3},
      {"AC4", "amplitude-only concurrence closed form", 0.0, ac4},
      {"AC5", "combined-noise sudden-death time", kEsdBudget, ac5},
      {"AC6", "amplitude-only diagram boundary a = |z|^2", kDiagramBudget, ac6},
      {"AC7", "phase-only diagram has no sudden death", kDiagramBudget, ac7},
      {"AC8", "combined diagram is all sudden death for a > 0", kDiagramBudget, ac8},
      {"AC9", "asymmetric noise placements", 0.0, ac9},
      {"AC10", "property suites", 0.0, ac10},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.budget_s == 0.0 || secs < c.budget_s;
    const bool pass = out.pass && in_time;
    if (!pass) ++failures;
    std::string timing = fmt("%.2fs", secs);
    if (c.budget_s > 0.0) timing += fmt(" (limit %.0fs)", c.budget_s);
    std::printf("%-4s %s  %s: %s [%s]\n", c.id, pass ? "PASS" : "FAIL", c.name, out.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
