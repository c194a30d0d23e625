// fdlp/lpc.hpp
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

#ifndef FDLP_LPC_HPP
#define FDLP_LPC_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "fdlp/fft.hpp"

namespace fdlp {

struct ARModel {
  std::vector<double> coefficients;  // a[0..p], a[0] == 1
  double error_gain = 0.0;           // final prediction error, >= 0
  std::vector<double> reflections;   // |k_i| < 1 for positive-definite input

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
};

// Biased estimator r[tau] = sum_k seq[k] seq[k+tau], computed through the
// transform domain (power spectrum of the zero-padded sequence).
inline std::vector<double> autocorrelation(std::span<const double> seq,
                                           int max_lag) {
  require(!seq.empty(), "empty input");
  require(max_lag >= 0, "max_lag must be >= 0");
  if (static_cast<std::size_t>(max_lag) >= seq.size())
    throw ValidationError("max_lag must be smaller than sequence length");

  const std::size_t m =
      detail::next_pow2(seq.size() + static_cast<std::size_t>(max_lag) + 1);
  std::vector<cplx> f(m, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < seq.size(); ++i) f[i] = seq[i];
  detail::fft_pow2(f, false);
  for (auto& v : f) v = cplx(std::norm(v), 0.0);
  detail::fft_pow2(f, true);
  std::vector<double> r(static_cast<std::size_t>(max_lag) + 1);
  const double inv_m = 1.0 / static_cast<double>(m);
  for (int t = 0; t <= max_lag; ++t) r[t] = f[t].real() * inv_m;
  return r;
}

// Levinson-Durbin recursion on the Toeplitz normal equations.
inline ARModel levinson_durbin(std::span<const double> r, int order) {
  require(!r.empty(), "empty autocorrelation");
  require(order >= 0, "order must be >= 0");
  require(static_cast<std::size_t>(order) < r.size(),
          "order exceeds available lags");
  if (!(r[0] > 0.0)) throw NumericalError("degenerate autocorrelation");

  ARModel model;
  model.coefficients.assign(static_cast<std::size_t>(order) + 1, 0.0);
  model.coefficients[0] = 1.0;
  model.error_gain = r[0];
  model.reflections.reserve(order);

  std::vector<double> prev(model.coefficients);
  for (int i = 1; i <= order; ++i) {
    double acc = r[i];
    for (int j = 1; j < i; ++j) acc += model.coefficients[j] * r[i - j];
    const double k = -acc / model.error_gain;
    if (!std::isfinite(k) || std::abs(k) >= 1.0)
      throw NumericalError("ill-conditioned");
    prev = model.coefficients;
    for (int j = 1; j < i; ++j)
      model.coefficients[j] = prev[j] + k * prev[i - j];
    model.coefficients[i] = k;
    model.error_gain *= (1.0 - k * k);
    model.reflections.push_back(k);
  }
  if (!std::isfinite(model.error_gain) || model.error_gain < 0.0)
    throw NumericalError("ill-conditioned");
  return model;
}

// AR power response on the one-sided grid omega_t = pi*t/num_samples,
// t in [0, num_samples): E[t] = g / |A(e^{j omega_t})|^2.
inline std::vector<double> ar_envelope(const ARModel& model, int num_samples) {
  require(num_samples >= 1, "num_samples must be >= 1");
  require(!model.coefficients.empty() && model.coefficients[0] == 1.0,
          "AR coefficients must start with 1");
  require(model.error_gain >= 0.0, "error_gain must be >= 0");

  const auto& a = model.coefficients;
  std::vector<double> env(num_samples);
  for (int t = 0; t < num_samples; ++t) {
    const double ang = -std::numbers::pi * static_cast<double>(t) /
                       static_cast<double>(num_samples);
    const cplx w(std::cos(ang), std::sin(ang));
    cplx acc(0.0, 0.0);
    for (std::size_t k = a.size(); k-- > 0;) acc = acc * w + a[k];  // Horner
    const double denom = std::norm(acc);
    const double value = model.error_gain / denom;
    if (!std::isfinite(value)) throw NumericalError("unstable model");
    env[t] = value;
  }
  return env;
}

}  // namespace fdlp

#endif  // FDLP_LPC_HPP
