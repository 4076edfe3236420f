/*
 * (C) Copyright 2026 affectq developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <span>

namespace affectq {

// Sample moments. variance uses the n-1 denominator, the convention that
// reproduces spreadsheet-style t-test tables.
double mean(std::span<const double> xs);
double sample_variance(std::span<const double> xs);

// Sample Pearson correlation coefficient. Throws std::domain_error when
// either sequence is constant (correlation undefined).
double pearson(std::span<const double> xs, std::span<const double> ys);

// Regularized incomplete beta function I_x(a, b), evaluated with a
// Lentz-style continued fraction. Absolute accuracy ~1e-10.
double regularized_incomplete_beta(double a, double b, double x);

// Student-t cumulative distribution with df degrees of freedom.
double t_cdf(double t, int df);

// Quantile of the Student-t distribution found by bisection on t_cdf.
// tails = 1 returns the (1 - alpha) quantile, tails = 2 the (1 - alpha/2)
// quantile.
double t_critical(int df, double alpha, int tails);

// Everything a spreadsheet paired t-test report prints.
struct TTestResult {
  double mean_a;
  double mean_b;
  double var_a;
  double var_b;
  double pearson;  // NaN when either column is constant
  int n;
  int df;  // n - 1
  double t_stat;
  double p_one_tail;  // P(T >= |t|)
  double p_two_tail;
  double t_crit_one_tail;
  double t_crit_two_tail;
};

// Paired two-sample t-test on the differences x_i - y_i, critical values
// at the given significance level. Throws std::domain_error when the
// differences are constant (zero variance) and std::invalid_argument on
// length mismatch or n < 2.
TTestResult paired_t_test(std::span<const double> xs,
                          std::span<const double> ys, double alpha = 0.05);

}  // namespace affectq
