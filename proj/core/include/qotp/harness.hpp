#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qotp/adversary.hpp"
#include "qotp/channel.hpp"
#include "qotp/session.hpp"
#include "qotp/stats.hpp"

namespace qotp {

/// Raised for malformed or out-of-range configuration; the message names
/// the offending field. The CLI maps this to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class NoiseKind : std::uint8_t { Ideal, Depolarizing };
enum class MessageSource : std::uint8_t { Random, Fixed };
enum class OutputFormat : std::uint8_t { Csv, Json };

struct AdversaryConfig {
  EveKind kind = EveKind::None;
  std::optional<double> attack_fraction;  // filled with 4r when omitted
  bool auto_fraction = false;             // true when derived from r
  bool camouflage = false;
  bool replace_channel = true;  // attack runs on replaced ideal channels
};

struct ExperimentConfig {
  std::size_t n = 10000;
  double r = 0.05;
  NoiseKind noise_kind = NoiseKind::Depolarizing;
  AdversaryConfig adversary;
  double first_check_fraction = 0.2;
  double second_check_fraction = 0.1;
  double k_sigma = 3.0;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  MessageSource message_source = MessageSource::Random;
  std::vector<std::uint8_t> fixed_message_bits;  // only for MessageSource::Fixed
};

/// One CSV/JSON row per trial. Fields absent for aborted or adversary-free
/// trials are emitted as empty CSV fields / JSON nulls.
struct TrialRow {
  std::uint64_t trial_index = 0;
  std::uint64_t seed_used = 0;
  double qber1 = 0.0;
  bool abort1 = false;
  std::optional<double> qber2;
  std::optional<bool> abort2;
  std::optional<std::uint64_t> message_errors;
  std::optional<double> leak_fraction;
  std::optional<double> eve_accuracy;
};

struct ExperimentSummary {
  std::uint64_t trials = 0;
  std::uint64_t aborts1 = 0;
  std::uint64_t aborts2 = 0;
  std::uint64_t aborted = 0;  // either check
  QberEstimate pooled_qber1;
  std::optional<QberEstimate> pooled_qber2;
  std::optional<double> mean_message_error_rate;
  std::optional<LeakSummary> leak;
  std::optional<DetectionReport> detection;  // attack runs with >= 30 trials
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<TrialRow> rows;
  ExperimentSummary summary;
};

struct SweepResult {
  std::string param;
  std::vector<double> values;
  std::vector<ExperimentResult> results;
};

/// Re-aggregation of emitted rows (used by `analyze`, which only has the
/// row-level rates, not the underlying sample counts).
struct RowSummary {
  std::uint64_t trials = 0;
  std::uint64_t aborts1 = 0;
  std::uint64_t aborts2 = 0;
  std::uint64_t aborted = 0;
  std::optional<double> mean_qber1;
  std::optional<double> mean_qber2;
  std::optional<double> mean_message_errors;
  std::optional<LeakSummary> leak;
};

/// Seed for trial `trial_index`, derived from the master seed with a
/// SplitMix64 step: mix64(master + (index + 1) * 0x9E3779B97F4A7C15).
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

/// Parse and validate a JSON config, applying documented defaults. Throws
/// ConfigError naming the offending field.
ExperimentConfig load_config(const std::string& text);

/// Validate a programmatically built or modified config.
void validate_config(const ExperimentConfig& config);

/// Run config.trials sessions with per-trial derived seeds. Attack runs
/// also execute a matched honest arm (decorrelated seed) to fill in the
/// detection report when trials >= 30.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// One experiment per value of `param` (one of r, n, attack_fraction,
/// k_sigma). Sweeping r re-derives an auto attack fraction.
SweepResult run_sweep(const ExperimentConfig& base, const std::string& param,
                      std::span<const double> values);

std::string to_csv(std::span<const TrialRow> rows);
std::string to_json(std::span<const TrialRow> rows);
/// Long-format sweep CSV: `param,value` columns prepended to the row schema.
std::string sweep_to_csv(const SweepResult& sweep);
std::string sweep_to_json(const SweepResult& sweep);

std::vector<TrialRow> rows_from_csv(const std::string& text);
std::vector<TrialRow> rows_from_json(const std::string& text);

RowSummary summarize_rows(std::span<const TrialRow> rows);

/// Fixed decimal formatting used by every emitter: 10 digits after the
/// point, locale-independent ("0.0950000000").
std::string format_fraction(double value);

}  // namespace qotp
