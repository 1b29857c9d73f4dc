#include "qotp/session.hpp"

namespace qotp {

namespace {

void transmit_all(QubitBatch& batch, const ChannelModel& model, RandomSource& rng) {
  if (model.kind == ChannelKind::Ideal) return;  // identity, no draws
  for (ConjugateState& state : batch) {
    state = transmit(state, model, rng);
  }
}

void transmit_surviving(QubitBatch& batch, const std::vector<std::size_t>& surviving,
                        const ChannelModel& model, RandomSource& rng) {
  if (model.kind == ChannelKind::Ideal) return;
  for (const std::size_t pos : surviving) {
    batch[pos] = transmit(batch[pos], model, rng);
  }
}

}  // namespace

SessionOutcome run_session(const ProtocolParams& params, const ChannelModel& forward_channel,
                           const ChannelModel& backward_channel, const EveStrategy& eve,
                           RandomSource& rng) {
  auto [record, batch] = bob_prepare(params.n, rng);

  transmit_all(batch, forward_channel, rng);
  std::vector<TapRecord> taps;
  if (eve.kind == EveKind::PaperAttack) {
    taps = forward_intercept(batch, eve.attack_fraction, rng);
  }

  auto [transcript, surviving] = alice_first_check(batch, params.first_check_fraction, rng);
  const CheckVerdict first = bob_first_verify(transcript, record, params.threshold_policy);

  SessionOutcome out;
  out.qber1 = first.qber;
  out.abort1 = first.abort;
  if (first.abort) return out;

  const EncodingPlan plan =
      alice_encode(batch, surviving, params.message_bits, params.second_check_fraction, rng);

  if (eve.kind == EveKind::PaperAttack) {
    backward_intercept(batch, taps, surviving, eve, rng);
  }
  transmit_surviving(batch, surviving, backward_channel, rng);

  const std::vector<std::uint8_t> decoded = bob_decode(batch, record, surviving, rng);
  const ThresholdPolicy second_policy{roundtrip_qber(params.threshold_policy.expected_r),
                                      params.threshold_policy.k_sigma};
  const CheckVerdict second = final_check(decoded, plan, second_policy);
  out.qber2 = second.qber;
  out.abort2 = second.abort;
  out.decoded_message = extract_message_bits(decoded, plan);

  if (eve.kind == EveKind::PaperAttack && !second.abort) {
    infer_bits(taps);
    out.eve_report = build_leak_report(taps, plan);
  }
  return out;
}

}  // namespace qotp
