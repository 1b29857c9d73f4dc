#include "qotp/channel.hpp"

#include <stdexcept>

namespace qotp {

namespace {

// Returns the Pauli error for one depolarizing use, Pauli::I for no error.
Pauli sample_depolarizing_error(double p, RandomSource& rng) {
  if (rng.uniform_double() >= p) return Pauli::I;
  switch (rng.uniform_below(3)) {
    case 0:
      return Pauli::X;
    case 1:
      return Pauli::Y;
    default:
      return Pauli::Z;
  }
}

}  // namespace

ConjugateState transmit(ConjugateState s, const ChannelModel& model, RandomSource& rng) {
  if (model.kind == ChannelKind::Ideal) return s;
  return apply_pauli(s, sample_depolarizing_error(model.param, rng));
}

PureState transmit(const PureState& s, const ChannelModel& model, RandomSource& rng) {
  if (model.kind == ChannelKind::Ideal) return s;
  return apply_pauli(s, sample_depolarizing_error(model.param, rng));
}

NoiseCalibration noise_calibration(double qber_r) {
  if (!(qber_r >= 0.0 && qber_r <= 0.5)) {
    throw std::invalid_argument("calibrate: qber_r must lie in [0, 0.5]");
  }
  // Flip probability of one depolarizing use is 2p/3, so p = (3/2) r.
  return NoiseCalibration{qber_r, 1.5 * qber_r};
}

ChannelModel calibrate(double qber_r) {
  const NoiseCalibration cal = noise_calibration(qber_r);
  return ChannelModel{ChannelKind::Depolarizing, cal.depol_p};
}

double roundtrip_qber(double qber_r) {
  return 2.0 * qber_r * (1.0 - qber_r);
}

}  // namespace qotp
