#pragma once

#include <cstdint>
#include <vector>

#include "dhyp/matrix.hpp"
#include "dhyp/poly.hpp"
#include "dhyp/qcomb.hpp"

namespace dhyp {

// The clock matrix A1 = diag(1, q, ..., q^{n-1}) and the cyclic shift A2,
// with the shift direction chosen programmatically so that A2 A1 = q A1 A2.
// Satisfies A1^n = A2^n = I, and the n^2 monomials A1^{e1} A2^{e2} form a
// basis of M_n. Expansion routines verify themselves against brute-force
// matrix arithmetic and throw std::logic_error on any mismatch.
class WeylPair {
public:
  explicit WeylPair(const QContext& qc);

  const QContext& qc() const { return qc_; }
  const FpMat& a1() const { return a1_; }
  const FpMat& a2() const { return a2_; }
  FpMat a3() const { return a1_.mul(a2_); }
  int n() const { return qc_.n(); }
  std::uint64_t p() const { return qc_.p(); }
  std::uint64_t q() const { return qc_.q(); }

  // A1^{e1} A2^{e2}, exponents reduced mod n.
  FpMat basis_monomial(int e1, int e2) const;

  // Terms (a, b, coefficient) of (X + Y)^d = sum q_binom(d,a,b) X^a Y^b for
  // YX = qXY and 0 <= d <= n-1. Verifies the skew relation and the expansion.
  struct SkewTerm {
    int a, b;
    std::uint64_t coeff;
  };
  std::vector<SkewTerm> skew_binomial_expand(const FpMat& X, const FpMat& Y, int d) const;

  // Coefficient table of (x1 A1 + x2 A2 + x3 A1A2)^d: entry (a, b, c) with
  // a+b+c = d carries q^{c(c-1)/2} q_trinom(d,a,b,c) attached to the basis
  // monomial A1^{a+c} A2^{b+c}. Verified against the symbolic matrix power.
  struct PencilTerm {
    int a, b, c;
    std::uint64_t coeff;
    int mono_e1, mono_e2;  // (a+c, b+c) reduced mod n
  };
  std::vector<PencilTerm> pencil_power(int d) const;

  // Tr((x1 A1 + x2 A2 + x3 A1A2)^d A1^{e1} A2^{e2}) as a polynomial in
  // x1, x2, x3: n * sum q^{e1(b+c) + c(c-1)/2} q_trinom(d,a,b,c) x1^a x2^b x3^c
  // over a+b+c = d with a+c+e1 = 0 and b+c+e2 = 0 (mod n). Verified against
  // the brute-force trace.
  MultiPoly trace_with_monomial(int d, int e1, int e2) const;

  // The symbolic pencil x1 A1 + x2 A2 + x3 A1A2 (three variables, no x0).
  PolyMatrix symbolic_pencil() const;

private:
  QContext qc_;
  FpMat a1_, a2_;
};

}  // namespace dhyp
