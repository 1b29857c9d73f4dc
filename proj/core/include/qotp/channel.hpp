#pragma once

#include "qotp/qubit.hpp"
#include "qotp/rng.hpp"

namespace qotp {

enum class ChannelKind : std::uint8_t { Ideal, Depolarizing };

/// Per-pass, per-qubit channel model. Depolarizing applies each of Pauli
/// X, Y, Z with probability param/3 and the identity otherwise.
struct ChannelModel {
  ChannelKind kind = ChannelKind::Ideal;
  double param = 0.0;  // total error probability p, unused for Ideal
};

/// Relation between the target per-pass bit error rate r (measured in the
/// preparation basis) and the depolarizing parameter p. Two of the three
/// Pauli errors flip either basis, so r = 2p/3.
struct NoiseCalibration {
  double qber_r;
  double depol_p;
};

ConjugateState transmit(ConjugateState s, const ChannelModel& model, RandomSource& rng);
PureState transmit(const PureState& s, const ChannelModel& model, RandomSource& rng);

/// Depolarizing model whose per-pass measured bit error rate in the
/// preparation basis equals qber_r. Throws outside [0, 0.5].
ChannelModel calibrate(double qber_r);

NoiseCalibration noise_calibration(double qber_r);

/// Probability of an odd number of bit flips over two independent passes,
/// each flipping with probability qber_r: 2r(1-r). This is the expected
/// second-check error rate under honest noise.
double roundtrip_qber(double qber_r);

}  // namespace qotp
