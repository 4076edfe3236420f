/*
 * (C) Copyright 2026 affectq developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace affectq {

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean of an empty sequence");
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
  if (xs.size() < 2)
    throw std::invalid_argument("sample variance needs at least 2 values");
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return ss / static_cast<double>(xs.size() - 1);
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("pearson inputs must have equal length");
  if (xs.size() < 2)
    throw std::invalid_argument("pearson needs at least 2 pairs");
  const double mx = mean(xs);
  const double my = mean(ys);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw std::domain_error("pearson undefined for a constant sequence");
  return sxy / std::sqrt(sxx * syy);
}

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
  constexpr double kTiny = 1e-30;
  constexpr double kEps = 1e-14;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("incomplete beta requires a > 0 and b > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) -
                          std::lgamma(b) + a * std::log(x) +
                          b * std::log1p(-x);
  const double front = std::exp(ln_front);
  // Use the fraction on the side where it converges fast.
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double t_cdf(double t, int df) {
  if (df < 1) throw std::invalid_argument("t_cdf requires df >= 1");
  if (t == 0.0) return 0.5;
  const double fdf = static_cast<double>(df);
  const double x = fdf / (fdf + t * t);
  const double tail = 0.5 * regularized_incomplete_beta(0.5 * fdf, 0.5, x);
  return t > 0.0 ? 1.0 - tail : tail;
}

double t_critical(int df, double alpha, int tails) {
  if (df < 1) throw std::invalid_argument("t_critical requires df >= 1");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must be in (0, 1)");
  if (tails != 1 && tails != 2)
    throw std::invalid_argument("tails must be 1 or 2");
  const double p = tails == 1 ? 1.0 - alpha : 1.0 - 0.5 * alpha;
  double lo = -1.0;
  double hi = 1.0;
  while (t_cdf(lo, df) > p) lo *= 2.0;
  while (t_cdf(hi, df) < p) hi *= 2.0;
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (t_cdf(mid, df) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

TTestResult paired_t_test(std::span<const double> xs,
                          std::span<const double> ys, double alpha) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("paired t-test inputs must have equal length");
  if (xs.size() < 2)
    throw std::invalid_argument("paired t-test needs at least 2 pairs");
  const std::size_t n = xs.size();
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = xs[i] - ys[i];
  const double var_d = sample_variance(d);
  if (var_d == 0.0)
    throw std::domain_error(
        "paired t-test degenerate: differences have zero variance");

  TTestResult r{};
  r.mean_a = mean(xs);
  r.mean_b = mean(ys);
  r.var_a = sample_variance(xs);
  r.var_b = sample_variance(ys);
  try {
    r.pearson = pearson(xs, ys);
  } catch (const std::domain_error&) {
    r.pearson = std::numeric_limits<double>::quiet_NaN();
  }
  r.n = static_cast<int>(n);
  r.df = r.n - 1;
  r.t_stat = mean(d) / std::sqrt(var_d / static_cast<double>(n));
  r.p_one_tail = 1.0 - t_cdf(std::fabs(r.t_stat), r.df);
  r.p_two_tail = 2.0 * r.p_one_tail;
  r.t_crit_one_tail = t_critical(r.df, alpha, 1);
  r.t_crit_two_tail = t_critical(r.df, alpha, 2);
  return r;
}

}  // namespace affectq
