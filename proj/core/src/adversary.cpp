#include "qotp/adversary.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qotp {

namespace {

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

// Probability with which camouflage applies a random Pauli from {X,Y,Z} to
// an untapped return qubit. Chosen so the second-check rate rises from the
// attack's fraction/4 to the honest round-trip rate 2r(1-r), r = fraction/4:
// the needed per-untapped flip rate is r(1-2r)/(1-4r), and a uniform
// non-identity Pauli flips with probability 2/3 of its application rate.
double camouflage_pauli_probability(double attack_fraction) {
  const double r = attack_fraction / 4.0;
  const double untapped = 1.0 - attack_fraction;
  if (untapped <= 0.0) return 0.0;
  const double flip = r * (1.0 - 2.0 * r) / untapped;
  return 1.5 * flip;
}

}  // namespace

double attack_fraction_for(double r) {
  if (!(r >= 0.0 && r <= 0.25)) {
    throw std::invalid_argument("attack_fraction_for: r must lie in [0, 0.25]");
  }
  return 4.0 * r;
}

std::vector<TapRecord> forward_intercept(QubitBatch& batch, double fraction,
                                         RandomSource& rng) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw std::invalid_argument("forward_intercept: fraction must lie in [0, 1]");
  }
  const std::size_t n = batch.size();
  const std::size_t k = round_half_to_even(fraction * static_cast<double>(n));
  const std::vector<std::size_t> positions = sample_positions(n, k, rng);

  std::vector<TapRecord> taps;
  taps.reserve(k);
  for (const std::size_t pos : positions) {
    const Basis basis = rng.coin() ? Basis::X : Basis::Z;
    const auto outcome = measure(batch[pos], basis, rng);
    batch[pos] = outcome.post_state;  // resend the collapsed state
    taps.push_back(TapRecord{pos, basis, outcome.bit, std::nullopt, std::nullopt});
  }
  return taps;
}

void backward_intercept(QubitBatch& batch, std::vector<TapRecord>& taps,
                        const std::vector<std::size_t>& surviving,
                        const EveStrategy& strategy, RandomSource& rng) {
  const std::size_t n = batch.size();
  std::vector<std::uint8_t> is_surviving(n, 0);
  for (const std::size_t pos : surviving) {
    if (pos >= n) throw std::invalid_argument("backward_intercept: position out of range");
    is_surviving[pos] = 1;
  }

  std::vector<std::uint8_t> is_tapped(n, 0);
  for (TapRecord& tap : taps) {
    if (tap.position >= n) {
      throw std::invalid_argument("backward_intercept: tap position out of range");
    }
    is_tapped[tap.position] = 1;
    if (!is_surviving[tap.position]) continue;  // discarded by the first check
    const auto outcome = measure(batch[tap.position], tap.eve_basis, rng);
    batch[tap.position] = outcome.post_state;
    tap.second_outcome = outcome.bit;
  }

  if (strategy.camouflage) {
    const double p = camouflage_pauli_probability(strategy.attack_fraction);
    if (p > 0.0) {
      for (const std::size_t pos : surviving) {
        if (is_tapped[pos]) continue;
        if (rng.uniform_double() < p) {
          static constexpr Pauli kErrors[] = {Pauli::X, Pauli::Y, Pauli::Z};
          batch[pos] = apply_pauli(batch[pos], kErrors[rng.uniform_below(3)]);
        }
      }
    }
  }
}

void infer_bits(std::vector<TapRecord>& taps) {
  for (TapRecord& tap : taps) {
    if (tap.second_outcome) {
      tap.inferred_bit = static_cast<std::uint8_t>(tap.first_outcome ^ *tap.second_outcome);
    }
  }
}

LeakReport build_leak_report(const std::vector<TapRecord>& taps, const EncodingPlan& plan) {
  LeakReport report;
  report.tapped_count = taps.size();

  // Encoded bit per position, over the full plan (check bits, message bits
  // and padding alike) so accuracy covers every inferred position.
  std::vector<std::pair<std::size_t, std::uint8_t>> encoded;
  encoded.reserve(plan.check_positions.size() + plan.message_positions.size());
  for (std::size_t k = 0; k < plan.check_positions.size(); ++k) {
    encoded.emplace_back(plan.check_positions[k], plan.check_bits[k]);
  }
  for (std::size_t k = 0; k < plan.message_positions.size(); ++k) {
    encoded.emplace_back(plan.message_positions[k], plan.carried_message[k]);
  }
  std::sort(encoded.begin(), encoded.end());

  // Positions that carry true message bits (the unpadded prefix).
  std::vector<std::size_t> true_message(plan.message_positions.begin(),
                                        plan.message_positions.begin() +
                                            static_cast<std::ptrdiff_t>(plan.message_len));

  std::uint64_t inferred_total = 0;
  std::uint64_t inferred_correct = 0;
  for (const TapRecord& tap : taps) {
    if (!tap.second_outcome) continue;
    ++report.surviving_tapped_count;
    if (!tap.inferred_bit) continue;
    const auto it = std::lower_bound(
        encoded.begin(), encoded.end(), tap.position,
        [](const auto& entry, std::size_t pos) { return entry.first < pos; });
    if (it == encoded.end() || it->first != tap.position) continue;
    ++inferred_total;
    if (*tap.inferred_bit == it->second) ++inferred_correct;
    if (std::binary_search(true_message.begin(), true_message.end(), tap.position)) {
      ++report.message_positions_learned;
    }
  }

  report.leak_fraction =
      plan.message_len == 0
          ? 0.0
          : static_cast<double>(report.message_positions_learned) /
                static_cast<double>(plan.message_len);
  report.accuracy_on_tapped =
      inferred_total == 0
          ? 1.0
          : static_cast<double>(inferred_correct) / static_cast<double>(inferred_total);
  return report;
}

}  // namespace qotp
