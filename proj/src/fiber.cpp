#include "dhyp/fiber.hpp"

#include <stdexcept>

#include "dhyp/fp.hpp"

namespace dhyp {

MatrixTuple transpose_tuple(const MatrixTuple& A) {
  std::vector<FpMat> mats;
  mats.reserve(A.mats.size());
  for (const FpMat& m : A.mats) mats.push_back(m.transpose());
  return MatrixTuple{A.p, A.n, std::move(mats)};
}

std::uint64_t witness_f(const FpMat& A1, const FpMat& A2) {
  if (A1.rows() != A1.cols() || A2.rows() != A2.cols() || A1.rows() != A2.rows() ||
      A1.p() != A2.p()) {
    throw std::invalid_argument("witness_f: shape or modulus mismatch");
  }
  std::uint64_t p = A1.p();
  FpMat s1 = A1.mul(A2).mul(A1.mul(A1)).mul(A2.mul(A2));
  FpMat s2 = A2.mul(A2).mul(A1.mul(A1)).mul(A2).mul(A1);
  return (s1.trace() + p - s2.trace()) % p;
}

TraceInvariants reconstruct_2x2(const CoeffVector& coeffs) {
  if (coeffs.n != 2 || coeffs.r != 2) {
    throw std::invalid_argument("reconstruct_2x2: requires n = 2, r = 2");
  }
  std::uint64_t p = coeffs.p;
  std::uint64_t tr1 = coeffs.coeff({1, 1, 0});
  std::uint64_t tr2 = coeffs.coeff({1, 0, 1});
  std::uint64_t det1 = coeffs.coeff({0, 2, 0});
  std::uint64_t det2 = coeffs.coeff({0, 0, 2});
  std::uint64_t cross = coeffs.coeff({0, 1, 1});
  std::uint64_t tr12 = (tr1 * tr2 % p + p - cross) % p;
  return {tr1, tr2, det1, det2, tr12};
}

TraceInvariants direct_invariants_2x2(const MatrixTuple& A) {
  if (A.n != 2 || A.r() != 2) {
    throw std::invalid_argument("direct_invariants_2x2: requires n = 2, r = 2");
  }
  const FpMat& a = A.mats[0];
  const FpMat& b = A.mats[1];
  return {a.trace(), b.trace(), a.det(), b.det(), a.mul(b).trace()};
}

bool det_trace_identity_2x2(const FpMat& X) {
  if (X.rows() != 2 || X.cols() != 2) {
    throw std::invalid_argument("det_trace_identity_2x2: requires a 2x2 matrix");
  }
  std::uint64_t p = X.p();
  if (p == 2) throw std::domain_error("det_trace_identity_2x2: requires p > 2");
  std::uint64_t t = X.trace();
  std::uint64_t t2 = X.mul(X).trace();
  std::uint64_t rhs = (t * t % p + p - t2) % p * mod_inv(2, p) % p;
  return X.det() == rhs;
}

NonConjugacyReport nonconjugacy_check(const MatrixTuple& A) {
  if (A.r() < 2) throw std::invalid_argument("nonconjugacy_check: requires r >= 2");
  std::uint64_t f = witness_f(A.mats[0], A.mats[1]);
  if (A.n == 2) {
    return {false, f, "identically inconclusive (n=2)"};
  }
  if (f != 0) {
    return {true, f, "not conjugate: f differs from -f"};
  }
  return {false, 0, "inconclusive: witness vanished"};
}

}  // namespace dhyp
