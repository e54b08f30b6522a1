#pragma once

#include <vector>

#include "resbench/errors.hpp"

namespace resbench {

// Quantiles use linear interpolation between order statistics:
// position h = (m - 1) * q, value = v[floor(h)] + frac(h) * (v[floor(h)+1] - v[floor(h)]).
struct QuartileSummary {
  double q1;
  double median;
  double q3;
};

double quantile(std::vector<double> values, double q);  // EmptySeries when empty
double median(std::vector<double> values);
QuartileSummary quartiles(std::vector<double> values);

struct PearsonResult {
  double r = 0.0;
  double p = 1.0;        // two-sided, via the t statistic with dof = N - 2
  long long dof = 0;
};

// Sample Pearson correlation. Throws LengthMismatch for unequal sizes,
// ConfigError for N < 3 and ConstantSeries when either series is constant.
PearsonResult pearson(const std::vector<double>& x, const std::vector<double>& y);

// Regularized incomplete beta I_x(a, b) by continued fraction; used for the
// t-distribution tail. Accurate to ~1e-10.
double incomplete_beta(double a, double b, double x);

}  // namespace resbench
