#pragma once

#include <complex>
#include <cstdint>

#include "qotp/rng.hpp"

namespace qotp {

/// Measurement basis: Z is the computational basis {|0>,|1>}, X the
/// conjugate basis {|+>,|->} with |+-> = (|0> +- |1>)/sqrt(2).
enum class Basis : std::uint8_t { Z, X };

enum class Pauli : std::uint8_t { I, X, Y, Z };

/// Symbolic backend: one of the four protocol states |0>,|1>,|+>,|->,
/// identified by (basis, eigenvalue bit). Global phase is dropped; the
/// statevector backend certifies that this loses nothing observable.
struct ConjugateState {
  Basis basis;
  std::uint8_t bit;

  friend bool operator==(const ConjugateState&, const ConjugateState&) = default;
};

/// Statevector backend: amp0|0> + amp1|1>, kept normalized to 1e-12.
struct PureState {
  std::complex<double> amp0;
  std::complex<double> amp1;
};

template <typename State>
struct MeasurementOutcome {
  std::uint8_t bit;
  State post_state;  // eigenstate of the measured basis with eigenbit `bit`
};

/// Eigenstate factory, usable with either backend:
/// new_eigenstate<ConjugateState>(...) or new_eigenstate<PureState>(...).
template <typename State>
State new_eigenstate(Basis basis, int bit);

template <>
ConjugateState new_eigenstate<ConjugateState>(Basis basis, int bit);
template <>
PureState new_eigenstate<PureState>(Basis basis, int bit);

/// Canonical amplitude embedding of the four protocol states.
PureState to_pure(ConjugateState s);

double norm_squared(const PureState& s);

ConjugateState apply_pauli(ConjugateState s, Pauli p);
PureState apply_pauli(const PureState& s, Pauli p);

/// Message encoding: identity carries 0, sigma_y carries 1. sigma_y flips
/// the eigenbit in both bases, so the receiver decodes by measuring in the
/// preparation basis.
ConjugateState apply_encoding(ConjugateState s, int message_bit);
PureState apply_encoding(const PureState& s, int message_bit);

/// Born probability of observing `bit` when measuring in `basis`.
/// The symbolic backend only ever returns 0, 1/2 or 1.
double outcome_probability(ConjugateState s, Basis basis, int bit);
double outcome_probability(const PureState& s, Basis basis, int bit);

/// Projective collapse onto the (basis, bit) eigenstate. Throws
/// std::invalid_argument if that outcome has probability zero.
ConjugateState collapse(ConjugateState s, Basis basis, int bit);
PureState collapse(const PureState& s, Basis basis, int bit);

/// Projective measurement. Symbolic backend: deterministic when the state
/// basis matches, otherwise a fair coin. Statevector backend: Born rule
/// with renormalized collapse.
MeasurementOutcome<ConjugateState> measure(ConjugateState s, Basis basis, RandomSource& rng);
MeasurementOutcome<PureState> measure(const PureState& s, Basis basis, RandomSource& rng);

}  // namespace qotp
