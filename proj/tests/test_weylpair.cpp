#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dhyp/matrix.hpp"
#include "dhyp/poly.hpp"
#include "dhyp/qcomb.hpp"
#include "dhyp/weylpair.hpp"

using namespace dhyp;

namespace {

QContext context_for(int n) {
  std::uint64_t p = find_prime(n, true);
  return QContext(FieldCtx(p, n, primitive_root_of_unity(p, n)));
}

}  // namespace

TEST_CASE("generator matrices: diagonal clock and cyclic shift") {
  for (int n = 2; n <= 5; ++n) {
    WeylPair wp(context_for(n));
    const FpMat& A1 = wp.a1();
    const FpMat& A2 = wp.a2();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(A1.at(i, j) == (i == j ? wp.qc().field().qpow(i) : 0));
      }
    }
    // exactly one 1 per row and column, shifting every basis vector by one step
    int shift_hits = 0;
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        if (A2.at(i, j) == 0) continue;
        CHECK(A2.at(i, j) == 1);
        CHECK((j - i + n) % n == 1);
        ++shift_hits;
      }
    }
    CHECK(shift_hits == n);
  }
}

TEST_CASE("skew relation, order n, and basis independence") {
  for (int n = 2; n <= 5; ++n) {
    WeylPair wp(context_for(n));
    const FpMat& A1 = wp.a1();
    const FpMat& A2 = wp.a2();
    CHECK(A2.mul(A1) == A1.mul(A2).scalar_mul(wp.q()));
    CHECK(A1.pow(static_cast<std::uint64_t>(n)) == FpMat::identity(wp.p(), n));
    CHECK(A2.pow(static_cast<std::uint64_t>(n)) == FpMat::identity(wp.p(), n));
    // the n^2 monomials A1^{e1} A2^{e2} are linearly independent
    std::vector<std::vector<std::uint64_t>> rows;
    for (int e1 = 0; e1 < n; ++e1) {
      for (int e2 = 0; e2 < n; ++e2) {
        FpMat M = wp.basis_monomial(e1, e2);
        std::vector<std::uint64_t> row;
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) row.push_back(M.at(i, j));
        }
        rows.push_back(std::move(row));
      }
    }
    CHECK(row_rank(rows, wp.p()) == n * n);
  }
}

TEST_CASE("monomial exponents reduce mod n") {
  WeylPair wp(context_for(3));
  CHECK(wp.basis_monomial(3, 3) == FpMat::identity(wp.p(), 3));
  CHECK(wp.basis_monomial(4, 0) == wp.a1());
  CHECK(wp.basis_monomial(-1, 0) == wp.a1().pow(2));
  CHECK(wp.basis_monomial(1, 1) == wp.a3());
}

TEST_CASE("trace formula: n at (0,0) mod n, zero elsewhere") {
  for (int n = 2; n <= 5; ++n) {
    WeylPair wp(context_for(n));
    for (int e1 = 0; e1 < 2 * n; ++e1) {
      for (int e2 = 0; e2 < 2 * n; ++e2) {
        std::uint64_t tr = wp.basis_monomial(e1, e2).trace();
        if (e1 % n == 0 && e2 % n == 0) {
          CHECK(tr == static_cast<std::uint64_t>(n) % wp.p());
        } else {
          CHECK(tr == 0);
        }
      }
    }
  }
}

TEST_CASE("product powers collect a triangular q-power") {
  for (int n = 2; n <= 5; ++n) {
    WeylPair wp(context_for(n));
    const FieldCtx& f = wp.qc().field();
    for (int c = 0; c < 2 * n; ++c) {
      FpMat lhs = wp.a3().pow(static_cast<std::uint64_t>(c));
      FpMat rhs = wp.a1().pow(static_cast<std::uint64_t>(c))
                      .mul(wp.a2().pow(static_cast<std::uint64_t>(c)))
                      .scalar_mul(f.qpow(static_cast<long long>(c) * (c - 1) / 2));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("skew binomial expansion at the pinned degree-2 example") {
  WeylPair wp(context_for(3));
  auto terms = wp.skew_binomial_expand(wp.a1(), wp.a2(), 2);
  REQUIRE(terms.size() == 3);
  // (X + Y)^2 = X^2 + (1+q) XY + Y^2
  bool saw_cross = false;
  for (const auto& t : terms) {
    if (t.a == 2 && t.b == 0) CHECK(t.coeff == 1);
    if (t.a == 0 && t.b == 2) CHECK(t.coeff == 1);
    if (t.a == 1 && t.b == 1) {
      CHECK(t.coeff == 3);  // 1 + q at q = 2
      saw_cross = true;
    }
  }
  CHECK(saw_cross);
}

TEST_CASE("skew binomial expansion reproduces matrix powers") {
  for (int n = 2; n <= 5; ++n) {
    WeylPair wp(context_for(n));
    const QContext& qc = wp.qc();
    for (int d = 0; d < n; ++d) {
      auto terms = wp.skew_binomial_expand(wp.a1(), wp.a2(), d);
      FpMat acc(wp.p(), n, n);
      for (const auto& t : terms) {
        CHECK(t.coeff == qc.q_binom(d, t.a, t.b));
        acc = acc.add(wp.a1().pow(static_cast<std::uint64_t>(t.a))
                          .mul(wp.a2().pow(static_cast<std::uint64_t>(t.b)))
                          .scalar_mul(t.coeff));
      }
      CHECK(acc == wp.a1().add(wp.a2()).pow(static_cast<std::uint64_t>(d)));
    }
  }
}

TEST_CASE("skew binomial expansion rejects pairs violating the relation") {
  WeylPair wp(context_for(3));
  // swapped arguments satisfy XY = q^{-1} YX instead
  CHECK_THROWS_AS(wp.skew_binomial_expand(wp.a2(), wp.a1(), 2), std::invalid_argument);
  CHECK_THROWS_AS(
      wp.skew_binomial_expand(FpMat::identity(wp.p(), 3), wp.a2(), 1),
      std::invalid_argument);
}

TEST_CASE("pencil power terms carry trinomials and a triangular twist") {
  for (int n = 2; n <= 5; ++n) {
    WeylPair wp(context_for(n));
    const QContext& qc = wp.qc();
    const FieldCtx& f = qc.field();
    for (int d = 0; d < n; ++d) {
      auto terms = wp.pencil_power(d);
      for (const auto& t : terms) {
        CHECK(t.a + t.b + t.c == d);
        CHECK(t.coeff ==
              f.mul(f.qpow(static_cast<long long>(t.c) * (t.c - 1) / 2),
                    qc.q_trinom(d, t.a, t.b, t.c)));
        CHECK(t.mono_e1 == (t.a + t.c) % n);
        CHECK(t.mono_e2 == (t.b + t.c) % n);
      }
      // evaluate both sides at random scalars
      SplitMix64 rng(static_cast<std::uint64_t>(n * 10 + d));
      for (int s = 0; s < 5; ++s) {
        std::uint64_t x1 = rng.below(wp.p()), x2 = rng.below(wp.p()), x3 = rng.below(wp.p());
        FpMat pen = wp.a1().scalar_mul(x1).add(wp.a2().scalar_mul(x2)).add(wp.a3().scalar_mul(x3));
        FpMat want = pen.pow(static_cast<std::uint64_t>(d));
        FpMat got(wp.p(), n, n);
        for (const auto& t : terms) {
          std::uint64_t scalar = f.mul(t.coeff,
              f.mul(f.pow(x1, static_cast<std::uint64_t>(t.a)),
                    f.mul(f.pow(x2, static_cast<std::uint64_t>(t.b)),
                          f.pow(x3, static_cast<std::uint64_t>(t.c)))));
          got = got.add(wp.basis_monomial(t.mono_e1, t.mono_e2).scalar_mul(scalar));
        }
        CHECK(got == want);
      }
    }
  }
}

TEST_CASE("trace polynomials: degree-0 rows are the bare trace formula") {
  for (int n = 2; n <= 5; ++n) {
    WeylPair wp(context_for(n));
    MultiPoly t00 = wp.trace_with_monomial(0, 0, 0);
    CHECK(t00 == MultiPoly::constant(wp.p(), 3, static_cast<std::uint64_t>(n) % wp.p()));
    MultiPoly t10 = wp.trace_with_monomial(0, 1, 0);
    CHECK(t10.is_zero());
  }
}

TEST_CASE("trace polynomial at the pinned n = 2 point") {
  WeylPair wp(context_for(2));
  REQUIRE(wp.p() == 3);
  REQUIRE(wp.q() == 2);
  MultiPoly t = wp.trace_with_monomial(1, 1, 0);
  // only (a,b,c) = (1,0,0) satisfies the congruences; value n * q^0 * x1 = 2 x1
  MultiPoly want(3, 3);
  want.set_coeff({1, 0, 0}, 2);
  CHECK(t == want);
}

TEST_CASE("trace polynomials match brute-force traces at random points") {
  for (int n = 2; n <= 5; ++n) {
    WeylPair wp(context_for(n));
    const FieldCtx& f = wp.qc().field();
    SplitMix64 rng(static_cast<std::uint64_t>(n));
    for (int d = 0; d < n; ++d) {
      for (int e1 = 0; e1 < n; ++e1) {
        for (int e2 = 0; e2 < n; ++e2) {
          MultiPoly t = wp.trace_with_monomial(d, e1, e2);
          std::uint64_t x1 = rng.below(wp.p()), x2 = rng.below(wp.p()), x3 = rng.below(wp.p());
          FpMat pen = wp.a1().scalar_mul(x1).add(wp.a2().scalar_mul(x2)).add(wp.a3().scalar_mul(x3));
          std::uint64_t want = pen.pow(static_cast<std::uint64_t>(d)).mul(wp.basis_monomial(e1, e2)).trace();
          CHECK(t.eval({x1, x2, x3}) == want);
          (void)f;
        }
      }
    }
  }
}

TEST_CASE("symbolic pencil entries expose the three slots") {
  WeylPair wp(context_for(3));
  PolyMatrix P = wp.symbolic_pencil();
  FpMat A3 = wp.a3();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const MultiPoly& e = P[static_cast<size_t>(i)][static_cast<size_t>(j)];
      CHECK(e.coeff({1, 0, 0}) == wp.a1().at(i, j));
      CHECK(e.coeff({0, 1, 0}) == wp.a2().at(i, j));
      CHECK(e.coeff({0, 0, 1}) == A3.at(i, j));
    }
  }
}
