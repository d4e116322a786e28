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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "entanglement.hpp"
#include "oracles.hpp"
#include "random_states.hpp"

using namespace esd;
using esd::testing::Rng;

namespace {

const NoiseSpec kAmpA{Qubit::kA, NoiseKind::kAmplitude, 1.0};
const NoiseSpec kAmpB{Qubit::kB, NoiseKind::kAmplitude, 1.0};
const NoiseSpec kPhaseA{Qubit::kA, NoiseKind::kPhase, 1.0};
const NoiseSpec kPhaseB{Qubit::kB, NoiseKind::kPhase, 1.0};

DensityMatrix bell() {
  ComplexMat m(4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return DensityMatrix::validate(m);
}

DensityMatrix werner(double p) {
  ComplexMat m = ComplexMat::identity(4);
  m *= (1.0 - p) / 4.0;
  m += p * bell().mat();
  return DensityMatrix::validate(m);
}

}  // namespace

TEST_CASE("XState::make") {
  const XState x = XState::make(0.1, 0.4, 0.3, 0.2, {0.1, 0.2});
  CHECK(x.matrix()(1, 2) == cplx(0.1, 0.2));
  CHECK(x.matrix()(2, 1) == cplx(0.1, -0.2));
  CHECK_THROWS_AS(XState::make(0.5, 0.5, 0.5, 0.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(XState::make(-0.1, 0.6, 0.5, 0.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(XState::make(0.0, 0.5, 0.5, 0.0, 0.6), InvalidArgument);
  CHECK_NOTHROW(XState::make(0.0, 0.5, 0.5, 0.0, 0.5));
  CHECK_THROWS_AS(XState::lambda_family(0.0), InvalidArgument);
  CHECK_THROWS_AS(XState::lambda_family(4.01), InvalidArgument);
}

TEST_CASE("as_xstate") {
  CHECK(as_xstate(XState::lambda_family(2.0).matrix()).has_value());
  CHECK_FALSE(as_xstate(bell().mat()).has_value());
  const auto x = as_xstate(XState::make(0.1, 0.4, 0.3, 0.2, {0.1, 0.2}).matrix());
  REQUIRE(x);
  CHECK(x->d == 0.2);
  CHECK(x->z == cplx(0.1, 0.2));
}

TEST_CASE("concurrence examples") {
  CHECK(concurrence(bell()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(concurrence(werner(0.0)) <= 1e-12);
  CHECK(std::abs(concurrence(werner(0.6)) - 0.4) < 1e-10);
  CHECK(concurrence(werner(1.0 / 3.0)) <= 1e-7);
  const DensityMatrix product = DensityMatrix::validate(ComplexMat::diagonal({1.0, 0.0, 0.0, 0.0}));
  CHECK(concurrence(product) <= 1e-12);
  CHECK_THROWS_AS(concurrence(DensityMatrix::validate(ComplexMat::diagonal({1.0, 0.0}))), InvalidArgument);
}

TEST_CASE("concurrence_x examples") {
  CHECK(std::abs(concurrence_x(XState::lambda_family(4.0)) - 8.0 / 9.0) < 1e-15);
  CHECK(std::abs(concurrence_x(XState::lambda_family(1.0)) - 2.0 / 9.0) < 1e-15);
  CHECK(concurrence_x(XState::make(0.25, 0.25, 0.25, 0.25, 0.2)) == 0.0);
  CHECK(std::abs(concurrence_x(XState::make(0.1, 0.4, 0.4, 0.1, {0.0, 0.3})) - 0.4) < 1e-15);
}

TEST_CASE("general and X concurrence agree on random X states") {
  Rng rng(7);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const XState x = testing::random_xstate(rng);
    worst = std::max(worst, std::abs(concurrence(x.density()) - concurrence_x(x)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("concurrence is invariant under local unitaries") {
  Rng rng(8);
  double worst = 0.0;
  for (int trial = 0; trial < 300; ++trial) {
    const DensityMatrix rho = trial % 2 ? testing::random_density(rng, 2) : testing::random_xstate(rng).density();
    const ComplexMat turned = testing::conjugate_by(testing::random_local_unitary(rng), rho.mat());
    worst = std::max(worst, std::abs(concurrence(rho) - concurrence(DensityMatrix::validate(turned))));
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("fast_concurrence matches Wootters") {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho = trial % 2 ? testing::random_density(rng, 2) : testing::random_xstate(rng).density();
    CHECK(std::abs(fast_concurrence(rho) - concurrence(rho)) <= 1e-10);
  }
}

TEST_CASE("trace_concurrence") {
  const std::vector<double> times{0.0, 0.5, 1.0, 2.0};
  const NoiseSet phase{kPhaseA, kPhaseB};
  const ConcurrenceTrace tr = trace_concurrence(XState::lambda_family(4.0).density(), phase, times);
  REQUIRE(tr.values.size() == 4);
  for (std::size_t i = 0; i < times.size(); ++i)
    CHECK(std::abs(tr.values[i] - 8.0 / 9.0 * std::exp(-times[i])) < 1e-12);
  CHECK(tr.specs == phase);

  const std::vector<double> unordered{0.0, 1.0, 0.5};
  CHECK_THROWS_AS(trace_concurrence(bell(), phase, unordered), InvalidArgument);
  const std::vector<double> negative{-1.0, 0.5};
  CHECK_THROWS_AS(trace_concurrence(bell(), phase, negative), InvalidArgument);

  const NoiseSet amp{kAmpA, kAmpB};
  const std::vector<double> ln2{std::numbers::ln2};
  const ConcurrenceTrace at = trace_concurrence(XState::lambda_family(4.0).density(), amp, ln2);
  CHECK(std::abs(at.values[0] - testing::kAmpConcurrenceLambda4AtLn2) < 1e-12);
}

TEST_CASE("default_t_max") {
  CHECK(default_t_max(NoiseSet{}) == 20.0);
  CHECK(default_t_max(NoiseSet{{Qubit::kA, NoiseKind::kPhase, 0.5}, {Qubit::kB, NoiseKind::kAmplitude, 2.0}}) ==
        40.0);
  CHECK(default_t_max(NoiseSet{{Qubit::kA, NoiseKind::kPhase, 0.0}, kAmpB}) == 20.0);
}

TEST_CASE("oracles agree with their frozen values") {
  CHECK(std::abs(testing::esd_lambda4_combined() - testing::kEsdLambda4Combined) < 1e-14);
  CHECK(std::abs(testing::esd_amplitude_only(2.0) - testing::kEsdLambda2Amplitude) < 1e-14);
}

TEST_CASE("esd_time") {
  SUBCASE("combined noise on both qubits, lambda = 4") {
    const auto t = esd_time(XState::lambda_family(4.0).density(), NoiseSet{kAmpA, kAmpB, kPhaseA, kPhaseB}, 20.0);
    REQUIRE(t);
    CHECK(std::abs(*t - testing::kEsdLambda4Combined) < 1e-8);
  }
  SUBCASE("amplitude only, lambda = 2") {
    const auto t = esd_time(XState::lambda_family(2.0).density(), NoiseSet{kAmpA, kAmpB}, 20.0);
    REQUIRE(t);
    CHECK(std::abs(*t - testing::kEsdLambda2Amplitude) < 1e-8);
  }
  SUBCASE("amplitude only, lambda = 4 never dies") {
    CHECK_FALSE(esd_time(XState::lambda_family(4.0).density(), NoiseSet{kAmpA, kAmpB}, 20.0));
  }
  SUBCASE("phase only never dies") {
    CHECK_FALSE(esd_time(XState::lambda_family(0.5).density(), NoiseSet{kPhaseA, kPhaseB}, 20.0));
  }
  SUBCASE("separable start") {
    CHECK_THROWS_AS(esd_time(werner(0.2), NoiseSet{kAmpA}, 20.0), SeparableInitialState);
  }
  SUBCASE("bad horizon") {
    CHECK_THROWS_AS(esd_time(bell(), NoiseSet{kAmpA}, 0.0), InvalidArgument);
  }
  SUBCASE("non-X state matches the hand formula under amplitude noise") {
    // a = 1/9, b = c = 4/9, z = 0.2 with a real-valued coherence.
    const XState x = XState::make(1.0 / 9.0, 4.0 / 9.0, 4.0 / 9.0, 0.0, 0.2);
    const auto t = esd_time(x.density(), NoiseSet{kAmpA, kAmpB}, 20.0);
    REQUIRE(t);
    CHECK(std::abs(*t - testing::kEsdLambda18Amplitude) < 1e-8);
    const double oracle = testing::bisect(
        [&](double s) { return testing::amplitude_only_concurrence(x.a, x.b, x.c, 0.2, s); }, 0.0, 5.0);
    CHECK(std::abs(*t - oracle) < 1e-8);
  }
}

TEST_CASE("ESD on a Werner state under dense evolution") {
  // A Werner state is not X-shaped in the product basis once rotated, so this uses Wootters throughout.
  Rng rng(5);
  const ComplexMat u = testing::random_local_unitary(rng);
  const DensityMatrix rotated = DensityMatrix::validate(testing::conjugate_by(u, werner(0.8).mat()));
  const NoiseSet phase{kPhaseA, kPhaseB};
  const auto t = esd_time(rotated, phase, 20.0);
  // Local unitaries do not commute with dephasing, so only existence and a consistent sign change are checked.
  if (t) {
    CHECK(fast_concurrence(evolve(rotated, phase, *t * 0.999)) > 0.0);
    CHECK(fast_concurrence(evolve(rotated, phase, *t * 1.001)) <= kEsdThreshold);
  }
}

TEST_CASE("classify") {
  const NoiseSet amp{kAmpA, kAmpB};
  const DecayClass strong = classify(XState::lambda_family(4.0), amp, 20.0);
  CHECK(strong.kind == DecayKind::kExponential);
  CHECK_FALSE(strong.t_star);

  const DecayClass weak = classify(XState::lambda_family(2.0), amp, 20.0);
  CHECK(weak.kind == DecayKind::kSuddenDeath);
  REQUIRE(weak.t_star);
  CHECK(std::abs(*weak.t_star - testing::kEsdLambda2Amplitude) < 1e-8);

  const DecayClass none = classify(XState::make(0.5, 0.25, 0.25, 0.0, 0.0), amp, 20.0);
  CHECK(none.kind == DecayKind::kSeparableAtStart);

  CHECK_THROWS_AS(classify(XState::make(0.4, 0.3, 0.2, 0.1, 0.1), amp, 20.0), InvalidArgument);

  CHECK(std::string(to_string(DecayKind::kSuddenDeath)) == "SUDDEN_DEATH");
  CHECK(std::string(to_string(DecayKind::kSeparableAtStart)) == "SEPARABLE_AT_START");
  CHECK(std::string(to_string(DecayKind::kExponential)) == "EXPONENTIAL");
  CHECK(std::string(to_string(DecayKind::kInvalid)) == "INVALID");
}

TEST_CASE("diagram") {
  const DiagramGrid grid{9, 9};
  const NoiseSet amp{kAmpA, kAmpB};
  const auto cells = diagram(grid, amp, 20.0);
  REQUIRE(cells.size() == 81);

  SUBCASE("a-major order and grid values") {
    CHECK(cells[0].a == 0.0);
    CHECK(cells[1].z == doctest::Approx(0.5 / 8));
    CHECK(cells[9].a == doctest::Approx(1.0 / 8));
    CHECK(cells[80].a == 1.0);
    CHECK(cells[80].z == 0.5);
  }
  SUBCASE("classes") {
    for (const DiagramCell& cell : cells) {
      const double bound = (1.0 - cell.a) / 2.0;
      if (cell.z > bound + 1e-12) {
        CHECK(cell.decay.kind == DecayKind::kInvalid);
      } else if (cell.z == 0.0) {
        CHECK(cell.decay.kind == DecayKind::kSeparableAtStart);
      } else {
        CHECK(cell.decay.kind != DecayKind::kInvalid);
      }
      CHECK(cell.decay.t_star.has_value() == (cell.decay.kind == DecayKind::kSuddenDeath));
    }
  }
  SUBCASE("amplitude panel matches the hand formula") {
    for (const DiagramCell& cell : cells) {
      if (cell.decay.kind != DecayKind::kSuddenDeath) continue;
      const double b = (1.0 - cell.a) / 2.0;
      const double oracle = testing::bisect(
          [&](double s) { return testing::amplitude_only_concurrence(cell.a, b, b, cell.z, s); }, 0.0, 20.0);
      CHECK(std::abs(*cell.decay.t_star - oracle) < 1e-8);
    }
  }
  SUBCASE("threads give identical output") {
    const auto threaded = diagram(grid, amp, 20.0, 3);
    REQUIRE(threaded.size() == cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      CHECK(threaded[i].decay.kind == cells[i].decay.kind);
      CHECK(threaded[i].decay.t_star == cells[i].decay.t_star);
    }
  }
  SUBCASE("phase panel never shows sudden death") {
    for (const DiagramCell& cell : diagram(grid, NoiseSet{kPhaseA, kPhaseB}, 20.0))
      CHECK(cell.decay.kind != DecayKind::kSuddenDeath);
  }
}

TEST_CASE("asymmetric placements of lambda = 4") {
  const DensityMatrix rho = XState::lambda_family(4.0).density();
  const auto both_on_a = esd_time(rho, NoiseSet{kAmpA, kPhaseA}, 20.0);
  REQUIRE(both_on_a);
  CHECK(std::abs(*both_on_a - testing::kLn5) < 1e-8);
  const auto split = esd_time(rho, NoiseSet{kPhaseA, kAmpB}, 20.0);
  REQUIRE(split);
  CHECK(std::abs(*split - testing::kLn5) < 1e-8);
}
