#include "qotp/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qotp {

namespace {

// First k entries of a uniform random permutation of [0, n), sorted.
std::vector<std::size_t> sample_positions(std::size_t n, std::size_t k, RandomSource& rng) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.uniform_below(n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

Basis random_basis(RandomSource& rng) {
  return rng.coin() ? Basis::X : Basis::Z;
}

}  // namespace

std::size_t round_half_to_even(double x) {
  const double f = std::floor(x);
  const double frac = x - f;
  const auto lo = static_cast<std::size_t>(f);
  if (frac > 0.5) return lo + 1;
  if (frac < 0.5) return lo;
  return lo % 2 == 0 ? lo : lo + 1;
}

std::size_t message_capacity(std::size_t n, double first_check_fraction,
                             double second_check_fraction) {
  const std::size_t first = round_half_to_even(first_check_fraction * static_cast<double>(n));
  const std::size_t surviving = n - first;
  const std::size_t checks =
      round_half_to_even(second_check_fraction * static_cast<double>(surviving));
  return surviving - checks;
}

std::pair<BatchRecord, QubitBatch> bob_prepare(std::size_t n, RandomSource& rng) {
  if (n == 0) throw std::invalid_argument("bob_prepare: batch size must be >= 1");
  BatchRecord record;
  record.prep_basis.reserve(n);
  record.prep_bit.reserve(n);
  QubitBatch batch;
  batch.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Basis basis = random_basis(rng);
    const auto bit = static_cast<std::uint8_t>(rng.coin_bit());
    record.prep_basis.push_back(basis);
    record.prep_bit.push_back(bit);
    batch.push_back(ConjugateState{basis, bit});
  }
  return {std::move(record), std::move(batch)};
}

std::pair<FirstCheckTranscript, std::vector<std::size_t>> alice_first_check(
    QubitBatch& batch, double fraction, RandomSource& rng) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw std::invalid_argument("alice_first_check: fraction must lie in (0, 1)");
  }
  const std::size_t n = batch.size();
  const std::size_t k = round_half_to_even(fraction * static_cast<double>(n));
  if (k == 0) {
    throw std::invalid_argument("alice_first_check: check subset is empty");
  }

  const std::vector<std::size_t> positions = sample_positions(n, k, rng);
  FirstCheckTranscript transcript;
  transcript.entries.reserve(k);
  for (const std::size_t pos : positions) {
    const Basis basis = random_basis(rng);
    const auto outcome = measure(batch[pos], basis, rng);
    batch[pos] = outcome.post_state;  // consumed; excluded from survivors
    transcript.entries.push_back(FirstCheckEntry{pos, basis, outcome.bit});
  }

  std::vector<std::size_t> surviving;
  surviving.reserve(n - k);
  std::size_t next_checked = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (next_checked < positions.size() && positions[next_checked] == i) {
      ++next_checked;
    } else {
      surviving.push_back(i);
    }
  }
  return {std::move(transcript), std::move(surviving)};
}

CheckVerdict bob_first_verify(const FirstCheckTranscript& transcript,
                              const BatchRecord& record, const ThresholdPolicy& policy) {
  std::uint64_t coinciding = 0;
  std::uint64_t mismatches = 0;
  for (const FirstCheckEntry& entry : transcript.entries) {
    if (entry.position >= record.size()) {
      throw std::invalid_argument("bob_first_verify: transcript position out of range");
    }
    if (entry.meas_basis != record.prep_basis[entry.position]) continue;
    ++coinciding;
    if (entry.outcome_bit != record.prep_bit[entry.position]) ++mismatches;
  }
  if (coinciding == 0) {
    throw std::invalid_argument("bob_first_verify: no coinciding-basis positions");
  }
  const QberEstimate qber = estimate_qber(mismatches, coinciding);
  const bool abort = qber.rate > threshold(policy.expected_r, coinciding, policy.k_sigma);
  return CheckVerdict{qber, abort};
}

EncodingPlan alice_encode(QubitBatch& batch, const std::vector<std::size_t>& surviving,
                          const std::vector<std::uint8_t>& message_bits,
                          double second_check_fraction, RandomSource& rng) {
  const std::size_t survivors = surviving.size();
  const std::size_t check_count =
      round_half_to_even(second_check_fraction * static_cast<double>(survivors));
  const std::size_t capacity = survivors - check_count;
  if (message_bits.size() > capacity) {
    throw std::invalid_argument("alice_encode: message exceeds capacity");
  }

  // Sample check slots among the survivors, then walk the survivors in
  // ascending order laying out check bits and message bits.
  const std::vector<std::size_t> check_slots = sample_positions(survivors, check_count, rng);

  EncodingPlan plan;
  plan.surviving_positions = surviving;
  plan.check_positions.reserve(check_count);
  plan.check_bits.reserve(check_count);
  plan.message_positions.reserve(capacity);
  plan.carried_message.reserve(capacity);
  plan.message_len = message_bits.size();

  std::size_t next_check = 0;
  std::size_t next_message = 0;
  for (std::size_t slot = 0; slot < survivors; ++slot) {
    const std::size_t pos = surviving[slot];
    if (next_check < check_slots.size() && check_slots[next_check] == slot) {
      ++next_check;
      const auto bit = static_cast<std::uint8_t>(rng.coin_bit());
      plan.check_positions.push_back(pos);
      plan.check_bits.push_back(bit);
      batch[pos] = apply_encoding(batch[pos], bit);
    } else {
      const std::uint8_t bit =
          next_message < message_bits.size() ? message_bits[next_message] : 0;
      ++next_message;
      plan.message_positions.push_back(pos);
      plan.carried_message.push_back(bit);
      batch[pos] = apply_encoding(batch[pos], bit);
    }
  }
  return plan;
}

std::vector<std::uint8_t> bob_decode(QubitBatch& batch, const BatchRecord& record,
                                     const std::vector<std::size_t>& surviving,
                                     RandomSource& rng) {
  std::vector<std::uint8_t> decoded;
  decoded.reserve(surviving.size());
  for (const std::size_t pos : surviving) {
    if (pos >= record.size()) {
      throw std::invalid_argument("bob_decode: surviving position out of range");
    }
    const auto outcome = measure(batch[pos], record.prep_basis[pos], rng);
    batch[pos] = outcome.post_state;
    decoded.push_back(static_cast<std::uint8_t>(outcome.bit ^ record.prep_bit[pos]));
  }
  return decoded;
}

CheckVerdict final_check(const std::vector<std::uint8_t>& decoded,
                         const EncodingPlan& plan, const ThresholdPolicy& policy) {
  if (plan.check_positions.empty()) {
    throw std::invalid_argument("final_check: no check positions");
  }
  if (decoded.size() != plan.surviving_positions.size()) {
    throw std::invalid_argument("final_check: decoded bits do not cover the survivors");
  }

  std::uint64_t mismatches = 0;
  std::size_t slot = 0;
  for (std::size_t k = 0; k < plan.check_positions.size(); ++k) {
    const std::size_t pos = plan.check_positions[k];
    while (slot < plan.surviving_positions.size() && plan.surviving_positions[slot] < pos) {
      ++slot;
    }
    if (decoded[slot] != plan.check_bits[k]) ++mismatches;
  }
  const std::uint64_t samples = plan.check_positions.size();
  const QberEstimate qber = estimate_qber(mismatches, samples);
  const bool abort = qber.rate > threshold(policy.expected_r, samples, policy.k_sigma);
  return CheckVerdict{qber, abort};
}

std::vector<std::uint8_t> extract_message_bits(const std::vector<std::uint8_t>& decoded,
                                               const EncodingPlan& plan) {
  std::vector<std::uint8_t> message;
  message.reserve(plan.message_len);
  std::size_t slot = 0;
  for (std::size_t k = 0; k < plan.message_len; ++k) {
    const std::size_t pos = plan.message_positions[k];
    while (slot < plan.surviving_positions.size() && plan.surviving_positions[slot] < pos) {
      ++slot;
    }
    message.push_back(decoded[slot]);
  }
  return message;
}

}  // namespace qotp
