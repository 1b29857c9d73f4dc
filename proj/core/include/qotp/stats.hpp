#pragma once

#include <cstdint>
#include <span>

namespace qotp {

/// Binomial point estimate with a Wilson score 95% interval. Wilson rather
/// than Wald: the operating regime is rates near zero with moderate sample
/// counts, where Wald intervals collapse.
struct QberEstimate {
  std::uint64_t errors = 0;
  std::uint64_t samples = 0;
  double rate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;

  friend bool operator==(const QberEstimate&, const QberEstimate&) = default;
};

/// Abort counts for one arm of a detection experiment.
struct ArmCounts {
  std::uint64_t trials = 0;
  std::uint64_t aborts = 0;
};

/// Two-proportion z-test on abort rates. "Indistinguishable" means |z| is
/// below the two-sided critical value at significance alpha.
struct DetectionReport {
  std::uint64_t honest_trials = 0;
  std::uint64_t attack_trials = 0;
  std::uint64_t honest_aborts = 0;
  std::uint64_t attack_aborts = 0;
  double abort_rate_diff = 0.0;  // honest rate minus attack rate
  double z_statistic = 0.0;
  double z_critical = 0.0;
  bool indistinguishable = true;
};

struct LeakSummary {
  std::uint64_t trials = 0;
  double mean_leak_fraction = 0.0;
  double leak_ci_low = 0.0;
  double leak_ci_high = 0.0;
  double mean_accuracy = 0.0;
  double accuracy_ci_low = 0.0;
  double accuracy_ci_high = 0.0;
};

/// Inverse standard normal CDF, accurate to full double precision.
double normal_quantile(double p);

/// Throws std::invalid_argument if samples == 0 or errors > samples.
QberEstimate estimate_qber(std::uint64_t errors, std::uint64_t samples);

/// One-sided abort threshold: expected_r + k_sigma * binomial sigma at the
/// given sample count, clamped to [0, 1].
double threshold(double expected_r, std::uint64_t samples, double k_sigma);

/// Requires at least 30 trials per arm.
DetectionReport detection_test(ArmCounts honest, ArmCounts attack, double alpha);

/// Mean leak fraction and inference accuracy over non-aborted attack
/// trials, with normal-approximation 95% intervals. Throws on empty input.
LeakSummary summarize_leak(std::span<const double> leak_fractions,
                           std::span<const double> accuracies);

}  // namespace qotp
