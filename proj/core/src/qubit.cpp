#include "qotp/qubit.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace qotp {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr std::complex<double> kImag{0.0, 1.0};
}  // namespace

template <>
ConjugateState new_eigenstate<ConjugateState>(Basis basis, int bit) {
  assert(bit == 0 || bit == 1);
  return ConjugateState{basis, static_cast<std::uint8_t>(bit)};
}

template <>
PureState new_eigenstate<PureState>(Basis basis, int bit) {
  assert(bit == 0 || bit == 1);
  if (basis == Basis::Z) {
    return bit == 0 ? PureState{1.0, 0.0} : PureState{0.0, 1.0};
  }
  return bit == 0 ? PureState{kInvSqrt2, kInvSqrt2} : PureState{kInvSqrt2, -kInvSqrt2};
}

PureState to_pure(ConjugateState s) {
  return new_eigenstate<PureState>(s.basis, s.bit);
}

double norm_squared(const PureState& s) {
  return std::norm(s.amp0) + std::norm(s.amp1);
}

ConjugateState apply_pauli(ConjugateState s, Pauli p) {
  // Phase dropped: X fixes X-eigenstates and Z fixes Z-eigenstates up to
  // sign, while Y flips the eigenbit in both bases.
  switch (p) {
    case Pauli::I:
      return s;
    case Pauli::X:
      if (s.basis == Basis::Z) s.bit ^= 1;
      return s;
    case Pauli::Y:
      s.bit ^= 1;
      return s;
    case Pauli::Z:
      if (s.basis == Basis::X) s.bit ^= 1;
      return s;
  }
  return s;
}

PureState apply_pauli(const PureState& s, Pauli p) {
  switch (p) {
    case Pauli::I:
      return s;
    case Pauli::X:
      return PureState{s.amp1, s.amp0};
    case Pauli::Y:
      return PureState{-kImag * s.amp1, kImag * s.amp0};
    case Pauli::Z:
      return PureState{s.amp0, -s.amp1};
  }
  return s;
}

ConjugateState apply_encoding(ConjugateState s, int message_bit) {
  assert(message_bit == 0 || message_bit == 1);
  return message_bit == 0 ? s : apply_pauli(s, Pauli::Y);
}

PureState apply_encoding(const PureState& s, int message_bit) {
  assert(message_bit == 0 || message_bit == 1);
  return message_bit == 0 ? s : apply_pauli(s, Pauli::Y);
}

double outcome_probability(ConjugateState s, Basis basis, int bit) {
  assert(bit == 0 || bit == 1);
  if (s.basis == basis) return s.bit == bit ? 1.0 : 0.0;
  return 0.5;
}

double outcome_probability(const PureState& s, Basis basis, int bit) {
  assert(bit == 0 || bit == 1);
  if (basis == Basis::Z) {
    return std::norm(bit == 0 ? s.amp0 : s.amp1);
  }
  const std::complex<double> c =
      bit == 0 ? (s.amp0 + s.amp1) * kInvSqrt2 : (s.amp0 - s.amp1) * kInvSqrt2;
  return std::norm(c);
}

ConjugateState collapse(ConjugateState s, Basis basis, int bit) {
  if (outcome_probability(s, basis, bit) == 0.0) {
    throw std::invalid_argument("collapse: outcome has zero probability");
  }
  return ConjugateState{basis, static_cast<std::uint8_t>(bit)};
}

PureState collapse(const PureState& s, Basis basis, int bit) {
  // Keep the phase of the projected amplitude; renormalize exactly.
  if (basis == Basis::Z) {
    const std::complex<double> a = bit == 0 ? s.amp0 : s.amp1;
    const double mag = std::abs(a);
    if (mag == 0.0) throw std::invalid_argument("collapse: outcome has zero probability");
    const std::complex<double> phase = a / mag;
    return bit == 0 ? PureState{phase, 0.0} : PureState{0.0, phase};
  }
  const std::complex<double> c =
      bit == 0 ? (s.amp0 + s.amp1) * kInvSqrt2 : (s.amp0 - s.amp1) * kInvSqrt2;
  const double mag = std::abs(c);
  if (mag == 0.0) throw std::invalid_argument("collapse: outcome has zero probability");
  const std::complex<double> a = (c / mag) * kInvSqrt2;
  return bit == 0 ? PureState{a, a} : PureState{a, -a};
}

MeasurementOutcome<ConjugateState> measure(ConjugateState s, Basis basis, RandomSource& rng) {
  if (s.basis == basis) {
    return MeasurementOutcome<ConjugateState>{s.bit, s};
  }
  const std::uint8_t bit = static_cast<std::uint8_t>(rng.coin_bit());
  return MeasurementOutcome<ConjugateState>{bit, ConjugateState{basis, bit}};
}

MeasurementOutcome<PureState> measure(const PureState& s, Basis basis, RandomSource& rng) {
  const double p0 = outcome_probability(s, basis, 0);
  const std::uint8_t bit = rng.uniform_double() < p0 ? 0 : 1;
  return MeasurementOutcome<PureState>{bit, collapse(s, basis, bit)};
}

}  // namespace qotp
