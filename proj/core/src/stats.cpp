#include "qotp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qotp {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kSqrt2Pi = 2.50662827463100050242;

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / kSqrt2);
}

struct MeanCi {
  double mean;
  double lo;
  double hi;
};

MeanCi mean_with_ci(std::span<const double> xs, double z) {
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double n = static_cast<double>(xs.size());
  const double mean = sum / n;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double se = xs.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
  return MeanCi{mean, mean - z * se, mean + z * se};
}

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("normal_quantile: p must lie in (0, 1)");
  }
  // Acklam's rational approximation, then one Halley step against erfc.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  const double e = normal_cdf(x) - p;
  const double u = e * kSqrt2Pi * std::exp(x * x / 2.0);
  return x - u / (1.0 + x * u / 2.0);
}

QberEstimate estimate_qber(std::uint64_t errors, std::uint64_t samples) {
  if (samples == 0) throw std::invalid_argument("estimate_qber: samples must be >= 1");
  if (errors > samples) throw std::invalid_argument("estimate_qber: errors exceed samples");

  const double z = normal_quantile(0.975);
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(errors) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return QberEstimate{errors, samples, p, std::max(0.0, center - half),
                      std::min(1.0, center + half)};
}

double threshold(double expected_r, std::uint64_t samples, double k_sigma) {
  if (samples == 0) throw std::invalid_argument("threshold: samples must be >= 1");
  const double sigma =
      std::sqrt(expected_r * (1.0 - expected_r) / static_cast<double>(samples));
  return std::clamp(expected_r + k_sigma * sigma, 0.0, 1.0);
}

DetectionReport detection_test(ArmCounts honest, ArmCounts attack, double alpha) {
  if (honest.trials < 30 || attack.trials < 30) {
    throw std::invalid_argument("detection_test: need at least 30 trials per arm");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("detection_test: alpha must lie in (0, 1)");
  }
  const double n1 = static_cast<double>(honest.trials);
  const double n2 = static_cast<double>(attack.trials);
  const double p1 = static_cast<double>(honest.aborts) / n1;
  const double p2 = static_cast<double>(attack.aborts) / n2;
  const double pooled =
      static_cast<double>(honest.aborts + attack.aborts) / (n1 + n2);
  const double se = std::sqrt(pooled * (1.0 - pooled) * (1.0 / n1 + 1.0 / n2));
  const double z = se > 0.0 ? (p1 - p2) / se : 0.0;
  const double z_crit = normal_quantile(1.0 - alpha / 2.0);

  DetectionReport report;
  report.honest_trials = honest.trials;
  report.attack_trials = attack.trials;
  report.honest_aborts = honest.aborts;
  report.attack_aborts = attack.aborts;
  report.abort_rate_diff = p1 - p2;
  report.z_statistic = z;
  report.z_critical = z_crit;
  report.indistinguishable = std::abs(z) < z_crit;
  return report;
}

LeakSummary summarize_leak(std::span<const double> leak_fractions,
                           std::span<const double> accuracies) {
  if (leak_fractions.empty() || leak_fractions.size() != accuracies.size()) {
    throw std::invalid_argument("summarize_leak: need matching non-empty inputs");
  }
  const double z = normal_quantile(0.975);
  const MeanCi leak = mean_with_ci(leak_fractions, z);
  const MeanCi acc = mean_with_ci(accuracies, z);

  LeakSummary out;
  out.trials = leak_fractions.size();
  out.mean_leak_fraction = leak.mean;
  out.leak_ci_low = leak.lo;
  out.leak_ci_high = leak.hi;
  out.mean_accuracy = acc.mean;
  out.accuracy_ci_low = acc.lo;
  out.accuracy_ci_high = acc.hi;
  return out;
}

}  // namespace qotp
