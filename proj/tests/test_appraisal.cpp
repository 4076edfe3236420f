/*
 * (C) Copyright 2026 affectq developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "appraisal.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using namespace affectq;

TEST_CASE("power regression fits log-log least squares") {
  SUBCASE("two points determine the line exactly") {
    const std::vector<int> history{8, 2};
    const PowerFit fit = fit_power_regression(history);
    CHECK(fit.a == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(fit.b == doctest::Approx(-2.0).epsilon(1e-12));
  }
  SUBCASE("constant history gives a flat fit") {
    const std::vector<int> history{5, 5, 5, 5};
    const PowerFit fit = fit_power_regression(history);
    CHECK(fit.a == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(std::fabs(fit.b) < 1e-12);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(fit_power_regression(std::vector<int>{7}),
                    std::invalid_argument);
    CHECK_THROWS_AS(fit_power_regression(std::vector<int>{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(fit_power_regression(std::vector<int>{3, 0, 5}),
                    std::invalid_argument);
  }
}

TEST_CASE("power regression recovers noiseless synthetic power laws") {
  for (double a_true : {1.0, 20.0, 100.0}) {
    for (double b_true : {-1.0, -0.5, 0.0}) {
      std::vector<double> samples;
      for (int t = 1; t <= 10; ++t)
        samples.push_back(a_true * std::pow(t, b_true));
      const PowerFit fit = fit_power_regression(samples);
      CHECK(std::fabs(fit.a - a_true) <= 1e-9);
      CHECK(std::fabs(fit.b - b_true) <= 1e-9);
    }
  }
}

TEST_CASE("emotion classification follows the decision table order") {
  // Rule order: fear (exp1<norm) first, then anger / sadness (act<norm),
  // then joy (act>norm), with sadness as the act==norm default.
  CHECK(classify_emotion(3.0, 5.0, 10.0) == Emotion::Fear);
  CHECK(classify_emotion(3.0, 17.0, 10.0) == Emotion::Anger);
  CHECK(classify_emotion(12.0, 10.0, 10.0) == Emotion::Joy);
  CHECK(classify_emotion(10.0, 10.0, 10.0) == Emotion::Sadness);
  // Overlapping regions resolve to the first matching rule: anything with
  // exp1 < norm is fear even when the anger/sadness guards also hold.
  CHECK(classify_emotion(3.0, 3.0, 10.0) == Emotion::Fear);
  CHECK(classify_emotion(3.0, 7.0, 10.0) == Emotion::Fear);
  // act > norm with exp1 >= norm is joy regardless of exp1.
  CHECK(classify_emotion(15.0, 20.0, 10.0) == Emotion::Joy);
}

TEST_CASE("emotion classification is total, deterministic, scale-invariant") {
  const double values[] = {-2.0, -1.0, 0.0, 1.0, 2.0};
  for (double act : values) {
    for (double exp1 : values) {
      for (double norm : values) {
        const Emotion e = classify_emotion(act, exp1, norm);
        CHECK((e == Emotion::Joy || e == Emotion::Sadness ||
               e == Emotion::Anger || e == Emotion::Fear));
        CHECK(classify_emotion(act, exp1, norm) == e);
        for (double k : {0.5, 3.0, 1e6})
          CHECK(classify_emotion(k * act, k * exp1, k * norm) == e);
      }
    }
  }
}

TEST_CASE("begin_episode refits norm and resets exp1") {
  AppraisalState state(15, 15, 48.0);  // bootstrap = 4 x optimal 12

  SUBCASE("empty history uses the bootstrap norm") {
    state.begin_episode(1);
    CHECK(state.norm() == doctest::Approx(48.0));
    CHECK(state.exp1() == doctest::Approx(48.0));
  }
  SUBCASE("single completed episode is used verbatim") {
    state.end_episode(40, {}, false);
    state.begin_episode(2);
    CHECK(state.norm() == doctest::Approx(40.0));
  }
  SUBCASE("two-point fit evaluated at the episode index") {
    state.end_episode(100, {}, false);
    state.end_episode(50, {}, false);
    state.begin_episode(3);
    // exact fit: a=100, b=-1 -> norm = 100/3
    CHECK(state.norm() == doctest::Approx(100.0 / 3.0).epsilon(1e-9));
    CHECK(state.exp1() == doctest::Approx(100.0 / 3.0).epsilon(1e-9));
  }
  SUBCASE("constant history stays constant") {
    for (int i = 0; i < 4; ++i) state.end_episode(5, {}, false);
    state.begin_episode(5);
    CHECK(state.norm() == doctest::Approx(5.0).epsilon(1e-12));
  }
}

TEST_CASE("on_step increments exp1 past norm and tracks act") {
  AppraisalState state(15, 15, 48.0);
  state.end_episode(10, {}, false);  // norm = 10 from the single entry
  state.begin_episode(2);
  REQUIRE(state.norm() == doctest::Approx(10.0));

  SUBCASE("no increment at or below norm") {
    state.on_step(5, {0, 0});
    CHECK(state.exp1() == doctest::Approx(10.0));
    state.on_step(10, {0, 0});
    CHECK(state.exp1() == doctest::Approx(10.0));
  }
  SUBCASE("one increment per step past norm") {
    state.on_step(11, {0, 0});
    CHECK(state.exp1() == doctest::Approx(11.0));
    state.on_step(12, {0, 0});
    CHECK(state.exp1() == doctest::Approx(12.0));
  }
  SUBCASE("unknown positions keep the previous act") {
    const std::vector<PosRemaining> traj{{{3, 3}, 7}, {{6, 6}, 0}};
    state.end_episode(20, traj, true);
    state.begin_episode(3);
    state.on_step(0, {3, 3});
    CHECK(state.act() == doctest::Approx(7.0));
    state.on_step(1, {9, 9});  // never visited
    CHECK(state.act() == doctest::Approx(7.0));
  }
}

TEST_CASE("end_episode maintains best known distances") {
  AppraisalState state(15, 15, 48.0);

  SUBCASE("goal position records remaining 0") {
    const std::vector<PosRemaining> traj{{{5, 6}, 1}, {{6, 6}, 0}};
    state.end_episode(30, traj, true);
    CHECK(state.best_distance({6, 6}) == 0);
    CHECK(state.best_distance({5, 6}) == 1);
  }
  SUBCASE("minimum across episodes") {
    state.end_episode(30, std::vector<PosRemaining>{{{2, 2}, 9}}, true);
    CHECK(state.best_distance({2, 2}) == 9);
    state.end_episode(20, std::vector<PosRemaining>{{{2, 2}, 4}}, true);
    CHECK(state.best_distance({2, 2}) == 4);
    state.end_episode(25, std::vector<PosRemaining>{{{2, 2}, 8}}, true);
    CHECK(state.best_distance({2, 2}) == 4);  // never increases
  }
  SUBCASE("first visit wins within one episode") {
    const std::vector<PosRemaining> traj{{{2, 2}, 9}, {{2, 2}, 4}};
    state.end_episode(30, traj, true);
    CHECK(state.best_distance({2, 2}) == 9);
  }
  SUBCASE("truncated episodes update history only") {
    state.end_episode(40, std::vector<PosRemaining>{{{2, 2}, 9}}, false);
    CHECK(state.history() == std::vector<int>{40});
    CHECK_FALSE(state.best_distance({2, 2}).has_value());
    state.end_episode(20, {}, false);
    CHECK(state.history() == std::vector<int>{40, 20});
  }
  SUBCASE("unknown positions report no value") {
    CHECK_FALSE(state.best_distance({0, 0}).has_value());
  }
}
