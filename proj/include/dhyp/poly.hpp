#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dhyp/matrix.hpp"

namespace dhyp {

// Exponent vector (powers of x_0, ..., x_r); length is fixed per polynomial.
using Monomial = std::vector<int>;

// Graded lexicographic order: lower total degree first, ties broken so that
// exponent vectors descend lexicographically ((2,0) before (1,1) before (0,2)).
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over F_p. No stored zero coefficients;
// canonical term order makes equality and serialization deterministic.
class MultiPoly {
public:
  MultiPoly() : p_(2), nvars_(0) {}
  MultiPoly(std::uint64_t p, int nvars) : p_(p), nvars_(nvars) {}

  static MultiPoly constant(std::uint64_t p, int nvars, std::uint64_t c);
  static MultiPoly variable(std::uint64_t p, int nvars, int index);

  std::uint64_t p() const { return p_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }

  void set_coeff(const Monomial& m, std::uint64_t c);
  std::uint64_t coeff(const Monomial& m) const;  // throws on length mismatch

  MultiPoly add(const MultiPoly& o) const;
  MultiPoly sub(const MultiPoly& o) const;
  MultiPoly mul(const MultiPoly& o) const;
  MultiPoly scalar_mul(std::uint64_t c) const;
  // Multiply by the single variable x_index (exponent shift).
  MultiPoly shift(int index) const;

  std::uint64_t eval(const std::vector<std::uint64_t>& point) const;

  bool operator==(const MultiPoly& o) const;
  bool is_homogeneous(int degree) const;

  const std::map<Monomial, std::uint64_t, GradedLexLess>& terms() const { return terms_; }

  std::string to_string() const;  // deterministic, canonical order

private:
  std::uint64_t p_;
  int nvars_;
  std::map<Monomial, std::uint64_t, GradedLexLess> terms_;
};

// Square matrix of polynomials, e.g. the pencil x_0 I + x_1 A_1 + ... + x_r A_r.
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

// Entry (i,j) = delta_ij x_0 + sum_m (A_m)_ij x_m, in r+1 variables.
// An empty tuple (r = 0) yields x_0 I.
PolyMatrix pencil(const MatrixTuple& A);

// Exact determinant by cofactor expansion memoized on column subsets,
// O(2^n n) polynomial operations. Adequate for the n <= 6 CLI range.
MultiPoly det(const PolyMatrix& M);

// adj(M)[i][j] = (-1)^{i+j} det(M with row j, column i deleted);
// satisfies M * adj(M) = det(M) * I.
PolyMatrix adjugate(const PolyMatrix& M);

PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b);
MultiPoly poly_mat_trace(const PolyMatrix& m);

}  // namespace dhyp
