#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qotp/protocol.hpp"
#include "qotp/qubit.hpp"
#include "qotp/rng.hpp"

namespace qotp {

enum class EveKind : std::uint8_t { None, PaperAttack };

/// Intercept-resend strategy: measure a fraction of the forward pass in
/// random bases, resend the collapsed states, then re-measure the surviving
/// tapped qubits in the same bases on the return pass. The difference of
/// the two outcomes is the encoded bit.
///
/// camouflage additionally injects noise on untapped return qubits so the
/// second check matches the honest round-trip rate instead of sitting
/// below it. Off by default: the attack as given leaves the second check
/// low, which a one-sided threshold never flags.
struct EveStrategy {
  EveKind kind = EveKind::None;
  double attack_fraction = 0.0;
  bool camouflage = false;
};

struct TapRecord {
  std::size_t position;
  Basis eve_basis;
  std::uint8_t first_outcome;
  std::optional<std::uint8_t> second_outcome;  // only for surviving taps
  std::optional<std::uint8_t> inferred_bit;    // first XOR second
};

struct LeakReport {
  std::uint64_t tapped_count = 0;
  std::uint64_t surviving_tapped_count = 0;
  std::uint64_t message_positions_learned = 0;
  double leak_fraction = 0.0;      // learned message bits / total message bits
  double accuracy_on_tapped = 1.0;  // 1.0 vacuously when nothing was inferred
};

/// The attack fraction that hides behind channel error rate r: 4r. Throws
/// for r > 0.25 (the fraction would exceed 1).
double attack_fraction_for(double r);

/// First-pass tap: measure a random fraction of the batch in random bases
/// and forward the collapsed states. Untapped positions pass untouched.
std::vector<TapRecord> forward_intercept(QubitBatch& batch, double fraction,
                                         RandomSource& rng);

/// Return-pass tap: re-measure each previously tapped position that
/// survived the first check, in the same basis as before. The states Eve
/// forwarded are eigenstates of those bases, so this never disturbs what
/// Bob sees. With camouflage on, untapped survivors get calibrated noise.
void backward_intercept(QubitBatch& batch, std::vector<TapRecord>& taps,
                        const std::vector<std::size_t>& surviving,
                        const EveStrategy& strategy, RandomSource& rng);

/// Fill in inferred_bit = first_outcome XOR second_outcome wherever a
/// second outcome exists. sigma_y flips Eve-basis eigenstates and the
/// identity fixes them, whether or not Eve guessed Bob's basis.
void infer_bits(std::vector<TapRecord>& taps);

/// Score Eve's haul against the encoding plan. The plan is ground truth
/// for reporting only; the strategy itself never reads it.
LeakReport build_leak_report(const std::vector<TapRecord>& taps, const EncodingPlan& plan);

}  // namespace qotp
