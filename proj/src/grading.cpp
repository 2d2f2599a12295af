#include "dhyp/grading.hpp"

#include <stdexcept>
#include <utility>

#include "dhyp/pencilmap.hpp"

namespace dhyp {

namespace {

int reduce_mod(int e, int n) { return ((e % n) + n) % n; }

bool admissible(int e1, int e2, int n, const Triple& t) {
  auto [al, be, ga] = t;
  if (al < 0 || be < 0 || ga < 0) return false;
  int s = al + be + ga;
  if (s < 1 || s > n) return false;
  return (al + ga + e1) % n == 0 && (be + ga + e2) % n == 0;
}

}  // namespace

std::vector<Triple> enumerate_triples(int e1, int e2, int n) {
  e1 = reduce_mod(e1, n);
  e2 = reduce_mod(e2, n);
  std::vector<Triple> out;
  for (int al = 0; al <= n; ++al) {
    for (int be = 0; al + be <= n; ++be) {
      for (int ga = 0; al + be + ga <= n; ++ga) {
        Triple t{al, be, ga};
        if (al + be + ga == 0) continue;
        if (admissible(e1, e2, n, t)) out.push_back(t);
      }
    }
  }
  return out;
}

std::array<std::uint64_t, 3> constraint_row(const QContext& qc, int e1, int e2,
                                            const Triple& t) {
  int n = qc.n();
  e1 = reduce_mod(e1, n);
  e2 = reduce_mod(e2, n);
  if (!admissible(e1, e2, n, t)) {
    throw std::domain_error("constraint_row: triple not admissible for (e1, e2)");
  }
  auto [al, be, ga] = t;
  int d = al + be + ga - 1;
  const FieldCtx& f = qc.field();
  auto qp = [&](long long e) { return f.qpow(e); };
  return {f.mul(qp(be + ga), qc.q_trinom(d, al - 1, be, ga)),
          f.mul(qp(-e1), qc.q_trinom(d, al, be - 1, ga)),
          f.mul(qp(be - e1), qc.q_trinom(d, al, be, ga - 1))};
}

std::array<std::uint64_t, 3> constraint_row_symmetric(const QContext& qc, int e1,
                                                      int e2, const Triple& t) {
  int n = qc.n();
  e1 = reduce_mod(e1, n);
  e2 = reduce_mod(e2, n);
  if (!admissible(e1, e2, n, t)) {
    throw std::domain_error("constraint_row_symmetric: triple not admissible for (e1, e2)");
  }
  auto [al, be, ga] = t;
  int dp1 = al + be + ga;
  const FieldCtx& f = qc.field();
  std::array<std::uint64_t, 3> row = {f.sub(f.qpow(-e2), f.qpow(dp1)),
                                      f.sub(f.qpow(-e1), f.qpow(dp1)),
                                      f.sub(f.qpow(dp1), f.qpow(-(e1 + e2)))};
  // where both rows are nonzero they must be projectively equal
  std::array<std::uint64_t, 3> direct = constraint_row(qc, e1, e2, t);
  bool row_zero = !row[0] && !row[1] && !row[2];
  bool direct_zero = !direct[0] && !direct[1] && !direct[2];
  if (!row_zero && !direct_zero) {
    // cross products of all index pairs vanish iff proportional
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        std::uint64_t lhs = f.mul(row[static_cast<size_t>(i)], direct[static_cast<size_t>(j)]);
        std::uint64_t rhs = f.mul(row[static_cast<size_t>(j)], direct[static_cast<size_t>(i)]);
        if (lhs != rhs) {
          throw std::logic_error("constraint_row_symmetric: not proportional to constraint_row");
        }
      }
    }
  }
  return row;
}

int dim_V(const QContext& qc, int e1, int e2) {
  int n = qc.n();
  std::vector<std::vector<std::uint64_t>> rows;
  for (const Triple& t : enumerate_triples(e1, e2, n)) {
    auto r = constraint_row(qc, e1, e2, t);
    rows.push_back({r[0], r[1], r[2]});
  }
  return 3 - row_rank(rows, qc.p());
}

std::array<std::uint64_t, 3> commutator_witness(const QContext& qc, int e1, int e2) {
  const FieldCtx& f = qc.field();
  return {f.sub(1, f.qpow(e2)), f.sub(f.qpow(e1), 1), f.sub(f.qpow(e1), f.qpow(e2))};
}

std::pair<Triple, Triple> degree_witnesses(int e1, int e2, int n) {
  e1 = reduce_mod(e1, n);
  e2 = reduce_mod(e2, n);
  if (e1 == 0 && e2 == 0) {
    throw std::domain_error("degree_witnesses: undefined at (0, 0)");
  }
  // reduce to e2 <= e1 by the (alpha, beta) swap symmetry
  bool swapped = e2 > e1;
  if (swapped) std::swap(e1, e2);
  Triple t1, t2;
  if (e2 >= 1) {
    t1 = {0, e1 - e2, n - e1};
    t2 = {1, e1 - e2 + 1, n - e1 - 1};
  } else {
    t1 = {0, e1, n - e1};
    t2 = {n - e1, 0, 0};
  }
  if (swapped) {
    std::swap(t1[0], t1[1]);
    std::swap(t2[0], t2[1]);
  }
  std::pair<Triple, Triple> out{t1, t2};
  int d1 = out.first[0] + out.first[1] + out.first[2] - 1;
  int d2 = out.second[0] + out.second[1] + out.second[2] - 1;
  if ((d1 - d2) % n == 0) {
    throw std::logic_error("degree_witnesses: degree sums collide mod n");
  }
  return out;
}

MatrixTuple char_space_element(const WeylPair& wp, int e1, int e2,
                               const std::array<std::uint64_t, 3>& t) {
  std::vector<FpMat> mats = {wp.basis_monomial(e1 + 1, e2).scalar_mul(t[0]),
                             wp.basis_monomial(e1, e2 + 1).scalar_mul(t[1]),
                             wp.basis_monomial(e1 + 1, e2 + 1).scalar_mul(t[2])};
  return MatrixTuple{wp.p(), wp.n(), std::move(mats)};
}

namespace {

MatrixTuple conj_scale(const WeylPair& wp, const FpMat& g, const MatrixTuple& B,
                       const std::array<std::uint64_t, 3>& scales) {
  FpMat gi = g.inverse();
  std::vector<FpMat> mats;
  mats.reserve(3);
  for (int m = 0; m < 3; ++m) {
    mats.push_back(g.mul(B.mats[static_cast<size_t>(m)]).mul(gi).scalar_mul(scales[static_cast<size_t>(m)]));
  }
  return MatrixTuple{wp.p(), wp.n(), std::move(mats)};
}

}  // namespace

MatrixTuple apply_sigma(const WeylPair& wp, const MatrixTuple& B) {
  if (B.r() != 3) throw std::invalid_argument("apply_sigma: tuple must have 3 slots");
  return conj_scale(wp, wp.a1(), B, {1, wp.q(), wp.q()});
}

MatrixTuple apply_tau(const WeylPair& wp, const MatrixTuple& B) {
  if (B.r() != 3) throw std::invalid_argument("apply_tau: tuple must have 3 slots");
  std::uint64_t qi = wp.qc().field().inv(wp.q());
  return conj_scale(wp, wp.a2(), B, {qi, 1, qi});
}

bool verify_group_action(const WeylPair& wp, const std::vector<MatrixTuple>& kernel_basis) {
  for (const MatrixTuple& v : kernel_basis) {
    if (!tuple_in_span(apply_sigma(wp, v), kernel_basis)) return false;
    if (!tuple_in_span(apply_tau(wp, v), kernel_basis)) return false;
  }
  return true;
}

}  // namespace dhyp
