#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "qotp/qubit.hpp"
#include "qotp/rng.hpp"
#include "qotp/stats.hpp"

namespace qotp {

/// The Monte Carlo sessions run on the symbolic backend throughout: every
/// state the protocol handles is one of the four conjugate-basis states.
using QubitBatch = std::vector<ConjugateState>;

/// One-sided abort rule: abort when the observed rate exceeds
/// expected_r + k_sigma binomial standard deviations. There is no lower
/// bound; a suspiciously clean channel never aborts.
struct ThresholdPolicy {
  double expected_r = 0.0;
  double k_sigma = 3.0;
};

struct ProtocolParams {
  std::size_t n = 0;
  double first_check_fraction = 0.2;
  double second_check_fraction = 0.1;
  ThresholdPolicy threshold_policy;  // expected_r is the per-pass rate
  std::vector<std::uint8_t> message_bits;
};

/// Bob's private preparation log. Never visible to Alice- or Eve-side
/// operations; the only cross-party flows are the qubit batch and the
/// public transcripts.
struct BatchRecord {
  std::vector<Basis> prep_basis;
  std::vector<std::uint8_t> prep_bit;

  std::size_t size() const { return prep_basis.size(); }
};

struct FirstCheckEntry {
  std::size_t position;
  Basis meas_basis;
  std::uint8_t outcome_bit;
};

/// Alice's public announcement after the forward pass: which positions she
/// measured, in which bases, with which results.
struct FirstCheckTranscript {
  std::vector<FirstCheckEntry> entries;
};

/// Alice's private encoding layout. check/message positions partition the
/// surviving positions; message bits shorter than capacity are padded with
/// zeros (identity encodings), message_len remembers the true length.
struct EncodingPlan {
  std::vector<std::size_t> surviving_positions;
  std::vector<std::size_t> check_positions;  // ascending
  std::vector<std::uint8_t> check_bits;      // aligned with check_positions
  std::vector<std::size_t> message_positions;  // ascending, all non-check survivors
  std::vector<std::uint8_t> carried_message;   // aligned, padded to capacity
  std::size_t message_len = 0;
};

struct CheckVerdict {
  QberEstimate qber;
  bool abort = false;
};

/// Deterministic tie-break for fraction*count position counts: round half
/// to even, so runs agree across platforms.
std::size_t round_half_to_even(double x);

/// Message capacity implied by the batch size and check fractions.
std::size_t message_capacity(std::size_t n, double first_check_fraction,
                             double second_check_fraction);

/// Bob prepares n qubits, each uniform over the four protocol states.
/// Draw order per position: basis coin, then bit coin. Throws if n == 0.
std::pair<BatchRecord, QubitBatch> bob_prepare(std::size_t n, RandomSource& rng);

/// Alice measures a random subset in random bases and announces the
/// results. The measured positions are consumed; the survivors are
/// returned in ascending order. Throws if the subset would be empty.
std::pair<FirstCheckTranscript, std::vector<std::size_t>> alice_first_check(
    QubitBatch& batch, double fraction, RandomSource& rng);

/// Bob compares announced outcomes with his preparation where the bases
/// coincide. Throws if no bases coincide (the check is undecidable).
CheckVerdict bob_first_verify(const FirstCheckTranscript& transcript,
                              const BatchRecord& record, const ThresholdPolicy& policy);

/// Alice encodes random check bits on a random subset of the survivors and
/// the message on the rest, in ascending position order. Throws if the
/// message exceeds capacity.
EncodingPlan alice_encode(QubitBatch& batch, const std::vector<std::size_t>& surviving,
                          const std::vector<std::uint8_t>& message_bits,
                          double second_check_fraction, RandomSource& rng);

/// Bob measures each surviving qubit in its preparation basis; decoded bit
/// = outcome XOR preparation bit. Result is aligned with `surviving`.
std::vector<std::uint8_t> bob_decode(QubitBatch& batch, const BatchRecord& record,
                                     const std::vector<std::size_t>& surviving,
                                     RandomSource& rng);

/// Check-bit comparison after decoding. Throws if the plan has no check
/// positions.
CheckVerdict final_check(const std::vector<std::uint8_t>& decoded,
                         const EncodingPlan& plan, const ThresholdPolicy& policy);

/// Decoded message bits (true length, padding stripped), extracted from the
/// per-survivor decode output.
std::vector<std::uint8_t> extract_message_bits(const std::vector<std::uint8_t>& decoded,
                                               const EncodingPlan& plan);

}  // namespace qotp
