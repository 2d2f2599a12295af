#include "dhyp/weylpair.hpp"

#include <stdexcept>

namespace dhyp {

namespace {

FpMat clock_matrix(const QContext& qc) {
  int n = qc.n();
  FpMat m(qc.p(), n, n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = qc.field().pow(qc.q(), static_cast<std::uint64_t>(i));
  }
  return m;
}

FpMat shift_matrix(std::uint64_t p, int n, int dir) {
  // dir 0: A2 e_j = e_{j-1 mod n}; dir 1: A2 e_j = e_{j+1 mod n}
  FpMat m(p, n, n);
  for (int j = 0; j < n; ++j) {
    int i = dir == 0 ? (j + n - 1) % n : (j + 1) % n;
    m.at(i, j) = 1;
  }
  return m;
}

}  // namespace

WeylPair::WeylPair(const QContext& qc) : qc_(qc), a1_(clock_matrix(qc)) {
  int n = qc.n();
  std::uint64_t p = qc.p();
  // the printed form of the shift is ambiguous; the defining relation is not
  bool found = false;
  for (int dir = 0; dir < 2 && !found; ++dir) {
    FpMat cand = shift_matrix(p, n, dir);
    if (cand.mul(a1_) == a1_.mul(cand).scalar_mul(qc.q())) {
      a2_ = cand;
      found = true;
    }
  }
  if (!found) throw std::logic_error("WeylPair: no shift direction satisfies A2 A1 = q A1 A2");
  FpMat id = FpMat::identity(p, n);
  if (!(a1_.pow(static_cast<std::uint64_t>(n)) == id) ||
      !(a2_.pow(static_cast<std::uint64_t>(n)) == id)) {
    throw std::logic_error("WeylPair: order-n invariant violated");
  }
  // the n^2 monomials A1^{e1} A2^{e2} must be linearly independent
  std::vector<std::vector<std::uint64_t>> rows;
  for (int e1 = 0; e1 < n; ++e1) {
    for (int e2 = 0; e2 < n; ++e2) {
      FpMat b = basis_monomial(e1, e2);
      std::vector<std::uint64_t> v;
      v.reserve(static_cast<size_t>(n) * n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) v.push_back(b.at(i, j));
      }
      rows.push_back(std::move(v));
    }
  }
  if (row_rank(rows, p) != n * n) {
    throw std::logic_error("WeylPair: basis monomials are not independent");
  }
}

FpMat WeylPair::basis_monomial(int e1, int e2) const {
  int n = qc_.n();
  int f1 = ((e1 % n) + n) % n;
  int f2 = ((e2 % n) + n) % n;
  return a1_.pow(static_cast<std::uint64_t>(f1)).mul(a2_.pow(static_cast<std::uint64_t>(f2)));
}

std::vector<WeylPair::SkewTerm> WeylPair::skew_binomial_expand(const FpMat& X,
                                                               const FpMat& Y,
                                                               int d) const {
  if (d < 0 || d >= qc_.n()) throw std::domain_error("skew_binomial_expand: d outside 0..n-1");
  if (!(Y.mul(X) == X.mul(Y).scalar_mul(qc_.q()))) {
    throw std::invalid_argument("skew_binomial_expand: arguments must satisfy YX = qXY");
  }
  std::vector<SkewTerm> terms;
  FpMat sum(p(), X.rows(), X.cols());
  for (int a = 0; a <= d; ++a) {
    int b = d - a;
    std::uint64_t c = qc_.q_binom(d, a, b);
    terms.push_back({a, b, c});
    sum = sum.add(X.pow(static_cast<std::uint64_t>(a))
                      .mul(Y.pow(static_cast<std::uint64_t>(b)))
                      .scalar_mul(c));
  }
  if (!(sum == X.add(Y).pow(static_cast<std::uint64_t>(d)))) {
    throw std::logic_error("skew_binomial_expand: expansion disagrees with brute force");
  }
  return terms;
}

PolyMatrix WeylPair::symbolic_pencil() const {
  int n = qc_.n();
  std::uint64_t pp = p();
  FpMat a3 = this->a3();
  PolyMatrix M(n, std::vector<MultiPoly>(n, MultiPoly(pp, 3)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      MultiPoly e(pp, 3);
      if (a1_.at(i, j)) e = e.add(MultiPoly::variable(pp, 3, 0).scalar_mul(a1_.at(i, j)));
      if (a2_.at(i, j)) e = e.add(MultiPoly::variable(pp, 3, 1).scalar_mul(a2_.at(i, j)));
      if (a3.at(i, j)) e = e.add(MultiPoly::variable(pp, 3, 2).scalar_mul(a3.at(i, j)));
      M[i][j] = std::move(e);
    }
  }
  return M;
}

std::vector<WeylPair::PencilTerm> WeylPair::pencil_power(int d) const {
  int n = qc_.n();
  std::uint64_t pp = p();
  if (d < 0 || d >= n) throw std::domain_error("pencil_power: d outside 0..n-1");
  std::vector<PencilTerm> terms;
  for (int a = 0; a <= d; ++a) {
    for (int b = 0; a + b <= d; ++b) {
      int c = d - a - b;
      std::uint64_t coeff = qc_.field().mul(
          qc_.field().pow(q(), static_cast<std::uint64_t>(c * (c - 1) / 2)),
          qc_.q_trinom(d, a, b, c));
      terms.push_back({a, b, c, coeff, (a + c) % n, (b + c) % n});
    }
  }
  // self-check against the brute-force symbolic power
  PolyMatrix P = symbolic_pencil();
  PolyMatrix PW(n, std::vector<MultiPoly>(n, MultiPoly(pp, 3)));
  for (int i = 0; i < n; ++i) PW[i][i] = MultiPoly::constant(pp, 3, 1);
  for (int k = 0; k < d; ++k) PW = poly_mat_mul(PW, P);
  PolyMatrix F(n, std::vector<MultiPoly>(n, MultiPoly(pp, 3)));
  for (const PencilTerm& t : terms) {
    FpMat mono = basis_monomial(t.mono_e1, t.mono_e2).scalar_mul(t.coeff);
    Monomial x{t.a, t.b, t.c};
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!mono.at(i, j)) continue;
        MultiPoly term(pp, 3);
        term.set_coeff(x, mono.at(i, j));
        F[i][j] = F[i][j].add(term);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(F[i][j] == PW[i][j])) {
        throw std::logic_error("pencil_power: expansion disagrees with brute force");
      }
    }
  }
  return terms;
}

MultiPoly WeylPair::trace_with_monomial(int d, int e1, int e2) const {
  int n = qc_.n();
  std::uint64_t pp = p();
  if (d < 0 || d >= n) throw std::domain_error("trace_with_monomial: d outside 0..n-1");
  int f1 = ((e1 % n) + n) % n;
  int f2 = ((e2 % n) + n) % n;
  MultiPoly out(pp, 3);
  for (int a = 0; a <= d; ++a) {
    for (int b = 0; a + b <= d; ++b) {
      int c = d - a - b;
      if ((a + c + f1) % n != 0 || (b + c + f2) % n != 0) continue;
      std::uint64_t coeff = qc_.field().mul(
          static_cast<std::uint64_t>(n) % pp,
          qc_.field().pow(q(), static_cast<std::uint64_t>(f1 * (b + c) + c * (c - 1) / 2)));
      coeff = qc_.field().mul(coeff, qc_.q_trinom(d, a, b, c));
      if (!coeff) continue;
      MultiPoly term(pp, 3);
      term.set_coeff(Monomial{a, b, c}, coeff);
      out = out.add(term);
    }
  }
  // self-check against the brute-force trace
  PolyMatrix P = symbolic_pencil();
  PolyMatrix PW(n, std::vector<MultiPoly>(n, MultiPoly(pp, 3)));
  for (int i = 0; i < n; ++i) PW[i][i] = MultiPoly::constant(pp, 3, 1);
  for (int k = 0; k < d; ++k) PW = poly_mat_mul(PW, P);
  FpMat mono = basis_monomial(f1, f2);
  MultiPoly brute(pp, 3);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (mono.at(j, i)) brute = brute.add(PW[i][j].scalar_mul(mono.at(j, i)));
    }
  }
  if (!(out == brute)) {
    throw std::logic_error("trace_with_monomial: expansion disagrees with brute force");
  }
  return out;
}

}  // namespace dhyp
