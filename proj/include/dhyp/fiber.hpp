#pragma once

#include <cstdint>
#include <string>

#include "dhyp/matrix.hpp"
#include "dhyp/pencilmap.hpp"

namespace dhyp {

// Transpose phenomena: char_coeffs is invariant under slotwise transpose, yet
// tuples are generically not simultaneously conjugate to their transposes.
// The one-sided certificate is the conjugation-invariant
//   f(A1, A2) = Tr(A1 A2 A1^2 A2^2) - Tr(A2^2 A1^2 A2 A1),
// which flips sign under transpose, vanishes identically for n = 2, and is
// generically nonzero for n >= 3.

MatrixTuple transpose_tuple(const MatrixTuple& A);

std::uint64_t witness_f(const FpMat& A1, const FpMat& A2);

// The five generators recovered from the n = 2, r = 2 coefficient vector:
// TrA1 = coeff(x0 x1), TrA2 = coeff(x0 x2), detA1 = coeff(x1^2),
// detA2 = coeff(x2^2), TrA1A2 = TrA1 TrA2 - coeff(x1 x2).
struct TraceInvariants {
  std::uint64_t tr1, tr2, det1, det2, tr12;
  bool operator==(const TraceInvariants&) const = default;
};

// Throws std::invalid_argument unless the vector has n = 2, r = 2 shape.
TraceInvariants reconstruct_2x2(const CoeffVector& coeffs);

// Recomputes the five invariants directly from a tuple (the round-trip target).
TraceInvariants direct_invariants_2x2(const MatrixTuple& A);

// det(X) = (Tr(X)^2 - Tr(X^2)) / 2 for 2x2 matrices over F_p with p > 2.
bool det_trace_identity_2x2(const FpMat& X);

// One-sided non-conjugacy certificate: nonzero f(A_1, A_2) proves (A_1,...,A_r)
// and its slotwise transpose are not simultaneously conjugate (f is
// conjugation-invariant and f = -f would force f = 0 since p > 2). A zero
// value is reported as inconclusive, never as a conjugacy claim. Requires r >= 2.
struct NonConjugacyReport {
  bool certified;       // true: certified not conjugate; false: inconclusive
  std::uint64_t f_value;
  std::string detail;
};

NonConjugacyReport nonconjugacy_check(const MatrixTuple& A);

}  // namespace dhyp
