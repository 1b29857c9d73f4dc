#pragma once

#include <optional>

#include "qotp/adversary.hpp"
#include "qotp/channel.hpp"
#include "qotp/protocol.hpp"

namespace qotp {

/// Per-trial result. When the first check aborts, nothing past qber1 is
/// populated. The leak report is present only for completed attack trials.
struct SessionOutcome {
  QberEstimate qber1;
  bool abort1 = false;
  std::optional<QberEstimate> qber2;
  std::optional<bool> abort2;
  std::optional<std::vector<std::uint8_t>> decoded_message;
  std::optional<LeakReport> eve_report;
};

/// One full session: prepare, forward transmit (Eve taps after the
/// channel), first check with abort, encode, backward transmit (Eve taps
/// before the channel), decode, check-bit comparison.
///
/// The first check thresholds against the policy's expected_r; the second
/// against roundtrip_qber(expected_r). EveKind::None consumes no
/// randomness, so a session with it is byte-identical to one with no
/// adversary wired in at all.
SessionOutcome run_session(const ProtocolParams& params, const ChannelModel& forward_channel,
                           const ChannelModel& backward_channel, const EveStrategy& eve,
                           RandomSource& rng);

}  // namespace qotp
