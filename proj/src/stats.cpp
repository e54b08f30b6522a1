#include "resbench/stats.hpp"

#include <algorithm>
#include <cmath>

namespace resbench {

double quantile(std::vector<double> values, double q) {
  if (values.empty()) {
    throw EmptySeries("quantile of an empty series");
  }
  std::sort(values.begin(), values.end());
  const double h = (static_cast<double>(values.size()) - 1.0) * q;
  const size_t lo = static_cast<size_t>(h);
  if (lo + 1 >= values.size()) {
    return values.back();
  }
  const double frac = h - static_cast<double>(lo);
  return values[lo] + frac * (values[lo + 1] - values[lo]);
}

double median(std::vector<double> values) {
  return quantile(std::move(values), 0.5);
}

QuartileSummary quartiles(std::vector<double> values) {
  if (values.empty()) {
    throw EmptySeries("quartiles of an empty series");
  }
  std::sort(values.begin(), values.end());
  auto at = [&](double q) {
    const double h = (static_cast<double>(values.size()) - 1.0) * q;
    const size_t lo = static_cast<size_t>(h);
    if (lo + 1 >= values.size()) {
      return values.back();
    }
    return values[lo] + (h - static_cast<double>(lo)) * (values[lo + 1] - values[lo]);
  };
  return {at(0.25), at(0.5), at(0.75)};
}

namespace {

// Continued fraction for the incomplete beta (Lentz's method).
double betacf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 1e-14;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) {
      break;
    }
  }
  return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                       a * std::log(x) + b * std::log1p(-x);
  const double bt = std::exp(ln_bt);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return bt * betacf(a, b, x) / a;
  }
  return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

PearsonResult pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) {
    throw LengthMismatch("pearson needs equal-length series");
  }
  const size_t m = x.size();
  if (m < 3) {
    throw ConfigError("pearson needs at least three points");
  }
  double mx = 0.0;
  double my = 0.0;
  for (size_t i = 0; i < m; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (size_t i = 0; i < m; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw ConstantSeries("pearson is undefined for a constant series");
  }
  PearsonResult res;
  res.r = sxy / std::sqrt(sxx * syy);
  res.r = std::clamp(res.r, -1.0, 1.0);
  res.dof = static_cast<long long>(m) - 2;
  if (std::abs(res.r) >= 1.0) {
    res.p = 0.0;
  } else {
    const double dof = static_cast<double>(res.dof);
    const double t2 = res.r * res.r * dof / (1.0 - res.r * res.r);
    res.p = incomplete_beta(dof / 2.0, 0.5, dof / (dof + t2));
  }
  return res;
}

}  // namespace resbench
