#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dhyp/fp.hpp"

namespace dhyp {

// q-combinatorics at a primitive n-th root of unity q in F_p.
// [a]_q = 1 + q + ... + q^{a-1} is nonzero for 1 <= a <= n-1, so the cached
// factorials [0]_q!, ..., [n-1]_q! are all invertible; [n]_q = 0, which is why
// coefficients are only defined for top index d <= n-1.
class QContext {
public:
  explicit QContext(const FieldCtx& ctx);  // ctx must carry a root

  const FieldCtx& field() const { return ctx_; }
  std::uint64_t p() const { return ctx_.p(); }
  int n() const { return ctx_.n(); }
  std::uint64_t q() const { return ctx_.q(); }

  std::uint64_t q_int(int a) const;   // a >= 0
  std::uint64_t q_fact(int a) const;  // 0 <= a <= n-1

  // [d]_q! / ([a]_q! [b]_q!) for a + b = d <= n-1; zero when a < 0 or b < 0.
  // Throws std::domain_error when a + b != d, d < 0, or d >= n.
  std::uint64_t q_binom(int d, int a, int b) const;

  // [d]_q! / ([a]_q! [b]_q! [c]_q!) with the same conventions.
  std::uint64_t q_trinom(int d, int a, int b, int c) const;

private:
  FieldCtx ctx_;
  std::vector<std::uint64_t> fact_;
};

// For 0 <= alpha, beta, gamma <= n-1 with 1 <= alpha+beta+gamma <= n and
// d = alpha+beta+gamma-1, the trinomial triple
//   (T(d, alpha-1, beta, gamma), T(d, alpha, beta-1, gamma), T(d, alpha, beta, gamma-1))
// is projectively (1 - q^alpha : 1 - q^beta : 1 - q^gamma).
struct RatioTriple {
  std::array<std::uint64_t, 3> trinomials;
  std::array<std::uint64_t, 3> targets;  // (1 - q^alpha, 1 - q^beta, 1 - q^gamma)
};

// Computes both triples and asserts their proportionality (throws
// std::logic_error on mismatch, std::domain_error outside the stated bounds).
RatioTriple ratio_triple(const QContext& qc, int alpha, int beta, int gamma);

}  // namespace dhyp
