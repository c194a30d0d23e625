// tests/test_lpc.cpp
//
// Copyright 2026  FDLP Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include "fdlp/lpc.hpp"
#include "fdlp/rng.hpp"
#include "oracles.hpp"

using namespace fdlp;

namespace {

// Random positive-definite autocorrelation: biased autocorrelation of a
// random sequence comfortably longer than the requested lag count.
std::vector<double> random_autocorr(int max_lag, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> x(static_cast<std::size_t>(max_lag) * 4 + 64);
  for (auto& v : x) v = rng.normal();
  return oracles::autocorr_brute(x, max_lag);
}

}  // namespace

TEST_CASE("autocorrelation of an impulse", "[lpc]") {
  const std::vector<double> x{1.0, 0.0, 0.0, 0.0};
  const auto r = autocorrelation(x, 2);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == Catch::Approx(1.0).margin(1e-12));
  CHECK(std::abs(r[1]) < 1e-12);
  CHECK(std::abs(r[2]) < 1e-12);
}

TEST_CASE("autocorrelation fast path matches the double loop", "[lpc]") {
  Rng rng(5);
  std::vector<double> x(777);
  for (auto& v : x) v = rng.uniform(-1, 1);
  const auto fast = autocorrelation(x, 160);
  const auto slow = oracles::autocorr_brute(x, 160);
  for (std::size_t t = 0; t < fast.size(); ++t)
    CHECK(fast[t] == Catch::Approx(slow[t]).margin(1e-10 * slow[0]));
}

TEST_CASE("autocorrelation scales quadratically and bounds r[0]", "[lpc]") {
  Rng rng(6);
  std::vector<double> x(300), scaled(300);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = rng.normal();
    scaled[i] = 3.0 * x[i];
  }
  const auto r = autocorrelation(x, 50);
  const auto rs = autocorrelation(scaled, 50);
  for (std::size_t t = 0; t < r.size(); ++t) {
    CHECK(rs[t] == Catch::Approx(9.0 * r[t]).margin(1e-9 * std::abs(r[0]) * 9));
    CHECK(r[0] >= std::abs(r[t]) - 1e-12);
  }
}

TEST_CASE("autocorrelation rejects excessive lag", "[lpc]") {
  const std::vector<double> x{1.0, 2.0};
  CHECK_THROWS_AS(autocorrelation(x, 2), ValidationError);
}

TEST_CASE("levinson on a white process", "[lpc]") {
  std::vector<double> r(11, 0.0);
  r[0] = 1.0;
  const ARModel m = levinson_durbin(r, 10);
  CHECK(m.error_gain == Catch::Approx(1.0));
  CHECK(m.coefficients[0] == 1.0);
  for (int i = 1; i <= 10; ++i) CHECK(m.coefficients[i] == 0.0);
}

TEST_CASE("levinson solves the AR(1) Yule-Walker system in closed form",
          "[lpc]") {
  // r[tau] = 0.9^tau, order 1: a = [1, -0.9], error gain 1 - 0.81 = 0.19.
  std::vector<double> r{1.0, 0.9};
  const ARModel m = levinson_durbin(r, 1);
  CHECK(m.coefficients[0] == Catch::Approx(1.0));
  CHECK(m.coefficients[1] == Catch::Approx(-0.9).margin(1e-12));
  CHECK(m.error_gain == Catch::Approx(0.19).margin(1e-12));
}

TEST_CASE("levinson matches the dense Toeplitz solve", "[lpc]") {
  for (int order : {1, 2, 5, 20, 80, 160}) {
    const auto r = random_autocorr(order, 1000 + order);
    const ARModel m = levinson_durbin(r, order);
    const auto dense = oracles::ar_coeffs_dense(r, order);
    double max_dev = 0.0;
    for (int i = 0; i <= order; ++i)
      max_dev = std::max(max_dev, std::abs(m.coefficients[i] - dense[i]));
    INFO("order=" << order);
    CHECK(max_dev < 1e-8);
  }
}

TEST_CASE("reflection coefficients stay inside the unit circle", "[lpc]") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = random_autocorr(60, 900 + seed);
    const ARModel m = levinson_durbin(r, 60);
    for (double k : m.reflections) CHECK(std::abs(k) < 1.0);
  }
}

TEST_CASE("levinson rejects degenerate autocorrelation", "[lpc]") {
  std::vector<double> r{0.0, 0.0};
  CHECK_THROWS_WITH(levinson_durbin(r, 1), "degenerate autocorrelation");
  std::vector<double> neg{-1.0, 0.0};
  CHECK_THROWS_AS(levinson_durbin(neg, 1), NumericalError);
}

TEST_CASE("order-0 model yields a flat envelope", "[lpc]") {
  ARModel m;
  m.coefficients = {1.0};
  m.error_gain = 2.5;
  const auto env = ar_envelope(m, 16);
  for (double v : env) CHECK(v == Catch::Approx(2.5));
}

TEST_CASE("a 2 s segment maps to exactly 800 envelope samples", "[lpc]") {
  const auto r = random_autocorr(160, 77);
  const ARModel m = levinson_durbin(r, 160);
  const auto env = ar_envelope(m, 800);
  REQUIRE(env.size() == 800);
  for (double v : env) {
    CHECK(v > 0.0);
    CHECK(std::isfinite(v));
  }
}
