// Copyright 2026 The qsot developers
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

#include "qsot/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsot {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : key_(mix64(seed + kGamma)) {}

std::uint64_t Rng::next_u64() {
  counter_ += 1;
  return mix64(key_ + counter_ * kGamma);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  have_spare_ = true;
  return r * std::cos(phi);
}

Rng Rng::split(std::uint64_t stream) const {
  Rng child(0);
  child.key_ = mix64(key_ ^ mix64(stream + kGamma));
  return child;
}

namespace {

// Inversion by geometric waiting times; O(trials * p) expected.
std::int64_t binomial_small(std::int64_t trials, double p, Rng& rng) {
  if (p <= 0.0) return 0;
  const double log_q = std::log1p(-p);
  std::int64_t successes = 0;
  std::int64_t position = 0;
  while (true) {
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    position += static_cast<std::int64_t>(std::floor(std::log(u) / log_q)) + 1;
    if (position > trials) break;
    ++successes;
  }
  return successes;
}

// Hormann's transformed rejection with squeeze (BTRS); valid for n*p >= 10.
std::int64_t binomial_btrs(std::int64_t n, double p, Rng& rng) {
  const double nd = static_cast<double>(n);
  const double q = 1.0 - p;
  const double spq = std::sqrt(nd * p * q);
  const double b = 1.15 + 2.53 * spq;
  const double a = -0.0873 + 0.0248 * b + 0.01 * p;
  const double c = nd * p + 0.5;
  const double v_r = 0.92 - 4.2 / b;
  const double alpha = (2.83 + 5.1 / b) * spq;
  const double lpq = std::log(p / q);
  const double m = std::floor((nd + 1.0) * p);
  const double h = std::lgamma(m + 1.0) + std::lgamma(nd - m + 1.0);
  while (true) {
    const double u = rng.uniform() - 0.5;
    const double v = rng.uniform();
    const double us = 0.5 - std::abs(u);
    const double kd = std::floor((2.0 * a / us + b) * u + c);
    if (kd < 0.0 || kd > nd) continue;
    if (us >= 0.07 && v <= v_r) return static_cast<std::int64_t>(kd);
    const double accept = h - std::lgamma(kd + 1.0) -
                          std::lgamma(nd - kd + 1.0) + (kd - m) * lpq;
    if (std::log(v * alpha / (a / (us * us) + b)) <= accept) {
      return static_cast<std::int64_t>(kd);
    }
  }
}

}  // namespace

std::int64_t binomial(std::int64_t trials, double p, Rng& rng) {
  if (trials < 0) throw std::invalid_argument("binomial: negative trial count");
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("binomial: probability outside [0, 1]");
  }
  if (trials == 0) return 0;
  if (p > 0.5) return trials - binomial(trials, 1.0 - p, rng);
  if (static_cast<double>(trials) * p < 10.0) {
    return binomial_small(trials, p, rng);
  }
  return binomial_btrs(trials, p, rng);
}

}  // namespace qsot
