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

#include "validation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

#include "analytic.hpp"
#include "channels.hpp"
#include "entanglement.hpp"

namespace esd {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> linspace(double from, double to, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = n == 1 ? from : from + (to - from) * i / (n - 1);
  return out;
}

NoiseSet symmetric(double gamma1, double gamma2) {
  NoiseSet specs;
  for (Qubit q : {Qubit::kA, Qubit::kB}) {
    if (gamma1 > 0.0) specs.push_back({q, NoiseKind::kAmplitude, gamma1});
    if (gamma2 > 0.0) specs.push_back({q, NoiseKind::kPhase, gamma2});
  }
  return specs;
}

double kraus_concurrence(double lambda, const NoiseSet& specs, double t) {
  return fast_concurrence(evolve(XState::lambda_family(lambda).density(), specs, t));
}

// Runs `body`, which returns the worst deviation, and records the outcome.
void run_check(ValidationReport& report, std::string name, double tolerance,
               const std::function<double(std::string&)>& body) {
  CheckResult result{std::move(name), kInf, tolerance, false, {}};
  try {
    result.worst = body(result.detail);
    result.passed = std::isfinite(result.worst) && result.worst <= tolerance;
  } catch (const std::exception& e) {
    result.detail = std::string("exception: ") + e.what();
  }
  report.checks.push_back(std::move(result));
}

KrausChannel perturbed_amplitude(double gamma1, double t, double delta) {
  KrausChannel ch = amplitude_channel(gamma1, t);
  if (delta == 0.0) return ch;
  std::vector<ComplexMat> ops = ch.ops();
  ops[1](1, 0) += delta;
  return KrausChannel(std::move(ops));
}

}  // namespace

AdditivityReport additivity(double gamma1, double gamma2, std::span<const double> times, double dt) {
  AdditivityReport report;
  report.gamma1 = gamma1;
  report.gamma2 = gamma2;
  report.dt = dt;
  const NoiseSet specs{{Qubit::kA, NoiseKind::kAmplitude, gamma1}, {Qubit::kA, NoiseKind::kPhase, gamma2}};
  for (const NoiseSpec& s : specs) s.check();

  // |s><s| with s = (|+> + |->)/sqrt 2, so rho_12(0) = 1/2.
  const DensityMatrix rho0 = DensityMatrix::validate(ComplexMat(2, {0.5, 0.5, 0.5, 0.5}));
  const cplx c0 = rho0(0, 1);

  DensityMatrix rho_ode = rho0;
  double t_prev = 0.0;
  for (double t : times) {
    if (t < t_prev) throw InvalidArgument("additivity times must be ascending and >= 0");
    rho_ode = integrate(rho_ode, specs, t - t_prev, dt);
    t_prev = t;
    const DensityMatrix rho_kraus = apply(noise_channel(specs, 1, t), rho0);
    const AdditivityRow row{t, (rho_kraus(0, 1) / c0).real(), (rho_ode(0, 1) / c0).real(),
                            analytic::coherence_single(gamma1, gamma2, t)};
    report.max_dev_kraus = std::max(report.max_dev_kraus, std::abs(row.kraus - row.analytic));
    report.max_dev_lindblad = std::max(report.max_dev_lindblad, std::abs(row.lindblad - row.analytic));
    report.rows.push_back(row);
  }
  report.pass = report.max_dev_kraus <= AdditivityReport::kKrausTolerance &&
                report.max_dev_lindblad <= AdditivityReport::kLindbladTolerance;
  return report;
}

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

ValidationReport run_validation(const ValidationOptions& options) {
  ValidationReport report;
  const std::vector<double> rates{0.5, 1.0, 2.0};
  const std::vector<double> grid = linspace(0.0, 5.0, 50);

  std::vector<AdditivityReport> additivity_runs;
  try {
    const std::vector<double> times = linspace(0.0, 5.0, 20);
    for (double g1 : {0.1, 1.0, 3.0})
      for (double g2 : {0.1, 1.0, 3.0}) additivity_runs.push_back(additivity(g1, g2, times, kDefaultStep));
  } catch (...) {
    additivity_runs.clear();
  }
  auto worst_of = [&](double AdditivityReport::*field) {
    if (additivity_runs.empty()) return kInf;
    double worst = 0.0;
    for (const auto& r : additivity_runs) worst = std::max(worst, r.*field);
    return worst;
  };
  run_check(report, "coherence_additivity_kraus", AdditivityReport::kKrausTolerance,
            [&](std::string&) { return worst_of(&AdditivityReport::max_dev_kraus); });
  run_check(report, "coherence_additivity_lindblad", AdditivityReport::kLindbladTolerance,
            [&](std::string&) { return worst_of(&AdditivityReport::max_dev_lindblad); });

  run_check(report, "phase_noise_concurrence", 1e-10, [&](std::string&) {
    double worst = 0.0;
    for (double lambda : {1.0, 2.0, 3.0, 4.0})
      for (double g2 : rates)
        for (double t : grid) {
          const double expected = analytic::c_phase(analytic::LambdaFamily::make(lambda), g2, t);
          worst = std::max(worst, std::abs(kraus_concurrence(lambda, symmetric(0.0, g2), t) - expected));
        }
    return worst;
  });

  // Element checks build the lifted amplitude channel by hand so that the
  // omega perturbation hook reaches them.
  struct ElementDeviation {
    double z = 0.0, a = 0.0, d = 0.0;
  } elements;
  bool elements_ok = true;
  try {
    for (double lambda : {1.0, 2.0, 3.0, 4.0})
      for (double g1 : rates)
        for (double t : grid) {
          const KrausChannel local = perturbed_amplitude(g1, t, options.amplitude_omega_perturbation);
          const ComplexMat out = lift(local, local).map(XState::lambda_family(lambda).matrix());
          const auto expected = analytic::amp_elements(analytic::LambdaFamily::make(lambda), g1, t);
          elements.z = std::max(elements.z, std::abs(out(1, 2) - expected.z));
          elements.a = std::max(elements.a, std::abs(out(0, 0) - expected.a));
          elements.d = std::max(elements.d, std::abs(out(3, 3) - expected.d));
        }
  } catch (...) {
    elements_ok = false;
  }
  run_check(report, "amplitude_coherence", 1e-12,
            [&](std::string&) { return elements_ok ? elements.z : kInf; });
  run_check(report, "amplitude_excited_population", 1e-12,
            [&](std::string&) { return elements_ok ? elements.a : kInf; });
  run_check(report, "amplitude_ground_population", 1e-12,
            [&](std::string&) { return elements_ok ? elements.d : kInf; });

  run_check(report, "amplitude_noise_concurrence", 1e-10, [&](std::string& detail) {
    double worst = 0.0;
    double smallest = kInf;
    for (double lambda : {3.0, 3.5, 4.0})
      for (double g1 : rates)
        for (double t : linspace(0.0, 20.0 / g1, 50)) {
          const double numeric = kraus_concurrence(lambda, symmetric(g1, 0.0), t);
          smallest = std::min(smallest, numeric);
          worst = std::max(worst, std::abs(numeric - analytic::c_amp(analytic::LambdaFamily::make(lambda), g1, t)));
        }
    std::ostringstream os;
    os << "smallest concurrence " << smallest;
    detail = os.str();
    return smallest > 0.0 ? worst : kInf;
  });

  run_check(report, "combined_noise_concurrence", 1e-10, [&](std::string&) {
    const double scale = options.drop_combined_normalization ? 9.0 : 1.0;
    double worst = 0.0;
    for (double lambda : {1.0, 2.0, 3.0, 3.5, 4.0})
      for (double g1 : rates)
        for (double g2 : rates)
          for (double t : grid) {
            const double expected =
                scale * analytic::c_combined(analytic::LambdaFamily::make(lambda), g1, g2, t);
            worst = std::max(worst, std::abs(kraus_concurrence(lambda, symmetric(g1, g2), t) - expected));
          }
    return worst;
  });

  run_check(report, "closed_form_consistency", 1e-12, [&](std::string&) {
    double worst = 0.0;
    for (double lambda : {3.0, 3.5, 4.0})
      for (double g : rates)
        for (double t : grid) {
          const auto fam = analytic::LambdaFamily::make(lambda);
          worst = std::max(worst, std::abs(analytic::c_combined(fam, 0.0, g, t) - analytic::c_phase(fam, g, t)));
          worst = std::max(worst, std::abs(analytic::c_combined(fam, g, 0.0, t) - analytic::c_amp(fam, g, t)));
        }
    return worst;
  });

  run_check(report, "combined_esd_time", 1e-8, [&](std::string& detail) {
    double worst = 0.0;
    for (int k = 1; k <= 32; ++k) {
      const double lambda = 4.0 * k / 32;
      const NoiseSet specs = symmetric(1.0, 1.0);
      const auto numeric = esd_time(XState::lambda_family(lambda).density(), specs, default_t_max(specs));
      const auto closed = analytic::esd_time_combined(analytic::LambdaFamily::make(lambda), 1.0, 1.0);
      if (!numeric || !closed) {
        detail = "no finite sudden-death time at lambda = " + std::to_string(lambda);
        return kInf;
      }
      worst = std::max(worst, std::abs(*numeric - *closed));
    }
    return worst;
  });

  run_check(report, "non_additivity_witness", 0.0, [&](std::string& detail) {
    int violations = 0;
    for (double lambda : {3.2, 3.6, 4.0}) {
      const auto fam = analytic::LambdaFamily::make(lambda);
      const DensityMatrix rho = XState::lambda_family(lambda).density();
      violations += !analytic::esd_time_combined(fam, 1.0, 1.0).has_value();
      violations += analytic::esd_time_combined(fam, 1.0, 0.0).has_value();
      violations += analytic::esd_time_combined(fam, 0.0, 1.0).has_value();
      violations += !esd_time(rho, symmetric(1.0, 1.0), 20.0).has_value();
      violations += esd_time(rho, symmetric(1.0, 0.0), 20.0).has_value();
      violations += esd_time(rho, symmetric(0.0, 1.0), 20.0).has_value();
    }
    detail = std::to_string(violations) + " violations";
    return static_cast<double>(violations);
  });

  run_check(report, "kraus_lindblad_agreement", 1e-6, [&](std::string&) {
    const std::vector<NoiseSet> placements{
        {{Qubit::kA, NoiseKind::kAmplitude, 0.8}},
        {{Qubit::kB, NoiseKind::kAmplitude, 0.8}},
        {{Qubit::kA, NoiseKind::kPhase, 1.3}},
        {{Qubit::kB, NoiseKind::kPhase, 1.3}},
        {{Qubit::kA, NoiseKind::kAmplitude, 1.0}, {Qubit::kA, NoiseKind::kPhase, 1.0}},
        {{Qubit::kA, NoiseKind::kPhase, 1.0}, {Qubit::kB, NoiseKind::kAmplitude, 1.0}},
        symmetric(0.7, 1.1),
    };
    // A pure state with every coherence present, next to rho_4.
    const ComplexMat bell = [] {
      const cplx amps[4] = {0.5, cplx{0.0, 0.5}, 0.5, 0.5};
      ComplexMat m(4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = amps[i] * std::conj(amps[j]);
      return m;
    }();
    const std::vector<DensityMatrix> states{XState::lambda_family(4.0).density(), DensityMatrix::validate(bell)};
    double worst = 0.0;
    for (const NoiseSet& specs : placements)
      for (const DensityMatrix& rho : states) {
        const double t = 1.0;
        worst = std::max(worst, max_abs_diff(evolve(rho, specs, t).mat(), integrate(rho, specs, t).mat()));
      }
    return worst;
  });

  run_check(report, "channel_completeness", 1e-10, [&](std::string&) {
    double worst = 0.0;
    for (double g : {0.1, 1.0, 3.0}) {
      for (int k = 0; k <= 40; ++k) {
        const double t = 1e-4 * std::pow(20.0 / g / 1e-4, k / 40.0);
        const KrausChannel deph = dephasing_channel(g, t);
        const KrausChannel amp = amplitude_channel(g, t);
        for (const KrausChannel& ch : {deph, amp, compose(deph, amp), lift(deph, amp), lift(amp, compose(amp, deph))})
          worst = std::max(worst, completeness_defect(ch));
      }
    }
    return worst;
  });

  return report;
}

}  // namespace esd
