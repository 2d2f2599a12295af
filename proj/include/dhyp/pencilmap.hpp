#pragma once

#include <cstdint>
#include <vector>

#include "dhyp/matrix.hpp"
#include "dhyp/poly.hpp"

namespace dhyp {

// Canonical index list for coefficient vectors: all degree-n multi-indices
// (i_0, ..., i_r) in graded-lex order, excluding the leading (n, 0, ..., 0)
// whose coefficient is normalized to 1.
std::vector<Monomial> coeff_indices(int n, int r);

// Coefficients of det(x_0 I + x_1 A_1 + ... + x_r A_r) aligned with
// coeff_indices(n, r). The leading coefficient is checked to be 1 and dropped.
struct CoeffVector {
  int n = 0;
  int r = 0;
  std::uint64_t p = 2;
  std::vector<Monomial> indices;
  std::vector<std::uint64_t> values;

  std::uint64_t coeff(const Monomial& m) const;  // throws if m is not listed
};

CoeffVector char_coeffs(const MatrixTuple& A);

// First derivative of char_coeffs at A in direction B: the coefficient vector
// of Tr(pencil(A)^ad * (x_1 B_1 + ... + x_r B_r)). Linear in B.
CoeffVector differential(const MatrixTuple& A, const MatrixTuple& B);

// Matrix of the differential: rows follow coeff_indices(n, r), columns are
// slot-major then row-major over the entries of B. Shape (C(r+n,n)-1) x (r n^2).
FpMat jacobian(const MatrixTuple& A);

// Kernel of the Jacobian reshaped into matrix tuples.
std::vector<MatrixTuple> kernel(const FpMat& J, std::uint64_t p, int n, int r);

// Kernel through the trace-power criterion: solutions of
// Tr((x_1 A_1 + ... + x_r A_r)^d (x_1 B_1 + ... + x_r B_r)) = 0 identically,
// for d = 0, ..., n-1. Valid when some matrix in the span of the A_m has n
// distinct eigenvalues; that is checked on up to 20 random combinations
// (squarefree characteristic polynomial via gcd with its derivative) and a
// std::domain_error is thrown when no witness combination is found.
std::vector<MatrixTuple> kernel_via_traces(const MatrixTuple& A, SplitMix64& rng);

// Span of the conjugation-orbit directions ([C, A_1], ..., [C, A_r]) with C
// running over the n^2 - 1 trace-zero elementary combinations; returns an
// independent basis of the span.
std::vector<MatrixTuple> pgl_tangent(const MatrixTuple& A);

// True when some linear combination drawn from rng has a squarefree
// characteristic polynomial (n distinct eigenvalues).
bool has_distinct_eigenvalue_combo(const MatrixTuple& A, SplitMix64& rng, int tries = 20);

bool tuple_in_span(const MatrixTuple& t, const std::vector<MatrixTuple>& basis);
bool same_tuple_span(const std::vector<MatrixTuple>& u, const std::vector<MatrixTuple>& v);

}  // namespace dhyp
