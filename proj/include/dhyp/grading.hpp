#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dhyp/matrix.hpp"
#include "dhyp/weylpair.hpp"

namespace dhyp {

// Character-space machinery at the triple (A1, A2, A1A2): the (Z/n)^2-action,
// the 3-dimensional spaces W_{e1,e2} with basis
//   (A1^{e1+1} A2^{e2}, A1^{e1} A2^{e2+1}, A1^{e1+1} A2^{e2+1}),
// and the linear systems in (t1, t2, t3) cutting out the kernel inside them.

using Triple = std::array<int, 3>;

// All (alpha, beta, gamma) >= 0 with alpha+beta+gamma <= n,
// alpha+gamma+e1 = 0 and beta+gamma+e2 = 0 (mod n), excluding (0,0,0).
std::vector<Triple> enumerate_triples(int e1, int e2, int n);

// Row of the constraint system for the coefficient of x1^alpha x2^beta x3^gamma:
//   (q^{beta+gamma} T(d,alpha-1,beta,gamma),
//    q^{-e1}        T(d,alpha,beta-1,gamma),
//    q^{beta-e1}    T(d,alpha,beta,gamma-1)),  d = alpha+beta+gamma-1.
// Throws std::domain_error unless the triple is admissible for (e1, e2).
std::array<std::uint64_t, 3> constraint_row(const QContext& qc, int e1, int e2,
                                            const Triple& t);

// Equivalent row in symmetric form, valid when the triple indices stay
// <= n-1: (q^{-e2} - q^{d+1}, q^{-e1} - q^{d+1}, q^{d+1} - q^{-e1-e2}).
// Asserts projective proportionality with constraint_row whenever both rows
// are nonzero.
std::array<std::uint64_t, 3> constraint_row_symmetric(const QContext& qc, int e1,
                                                      int e2, const Triple& t);

// 3 - rank of the full constraint system over all admissible triples.
int dim_V(const QContext& qc, int e1, int e2);

// (t1, t2, t3) = (1 - q^{e2}, q^{e1} - 1, q^{e1} - q^{e2}), coming from
// Tr(X^d [X, Y]) = 0 with Y = A1^{e1} A2^{e2}. Satisfies every constraint
// row; zero exactly at (e1, e2) = (0, 0).
std::array<std::uint64_t, 3> commutator_witness(const QContext& qc, int e1, int e2);

// Two admissible triples whose degree sums differ mod n; exists for every
// (e1, e2) != (0, 0). Throws std::domain_error at (0, 0).
std::pair<Triple, Triple> degree_witnesses(int e1, int e2, int n);

// Map (t1, t2, t3)-coordinates of W_{e1,e2} to the concrete matrix triple.
MatrixTuple char_space_element(const WeylPair& wp, int e1, int e2,
                               const std::array<std::uint64_t, 3>& t);

// sigma: (B1,B2,B3) -> (Conj_{A1} B1, q Conj_{A1} B2, q Conj_{A1} B3)
// tau:   (B1,B2,B3) -> (q^{-1} Conj_{A2} B1, Conj_{A2} B2, q^{-1} Conj_{A2} B3)
MatrixTuple apply_sigma(const WeylPair& wp, const MatrixTuple& B);
MatrixTuple apply_tau(const WeylPair& wp, const MatrixTuple& B);

// True when sigma(v) and tau(v) stay in the span of the basis for every basis
// element v.
bool verify_group_action(const WeylPair& wp, const std::vector<MatrixTuple>& kernel_basis);

}  // namespace dhyp
