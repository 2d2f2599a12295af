#include "dhyp/pencilmap.hpp"

#include <map>
#include <stdexcept>

#include "dhyp/fp.hpp"

namespace dhyp {

std::vector<Monomial> coeff_indices(int n, int r) {
  // All length-(r+1) exponent vectors of total degree n, graded-lex order,
  // leading (n, 0, ..., 0) excluded.
  std::vector<Monomial> out;
  Monomial cur(r + 1, 0);
  // enumerate lexicographically descending: highest x_0 exponent first
  struct Rec {
    int n, r;
    std::vector<Monomial>* out;
    void go(Monomial& cur, int pos, int left) {
      if (pos == r) {
        cur[pos] = left;
        out->push_back(cur);
        cur[pos] = 0;
        return;
      }
      for (int e = left; e >= 0; --e) {
        cur[pos] = e;
        go(cur, pos + 1, left - e);
      }
      cur[pos] = 0;
    }
  } rec{n, r, &out};
  rec.go(cur, 0, n);
  out.erase(out.begin());  // (n, 0, ..., 0)
  return out;
}

std::uint64_t CoeffVector::coeff(const Monomial& m) const {
  for (size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] == m) return values[i];
  }
  throw std::invalid_argument("CoeffVector::coeff: index not listed");
}

CoeffVector char_coeffs(const MatrixTuple& A) {
  MultiPoly P = det(pencil(A));
  int n = A.n;
  int r = A.r();
  Monomial lead(r + 1, 0);
  lead[0] = n;
  if (P.coeff(lead) != 1 % A.p) {
    throw std::logic_error("char_coeffs: leading coefficient is not 1");
  }
  CoeffVector cv;
  cv.n = n;
  cv.r = r;
  cv.p = A.p;
  cv.indices = coeff_indices(n, r);
  cv.values.reserve(cv.indices.size());
  for (const Monomial& m : cv.indices) cv.values.push_back(P.coeff(m));
  return cv;
}

CoeffVector differential(const MatrixTuple& A, const MatrixTuple& B) {
  if (A.n != B.n || A.r() != B.r() || A.p != B.p) {
    throw std::invalid_argument("differential: shape mismatch");
  }
  PolyMatrix adj = adjugate(pencil(A));
  int n = A.n;
  int r = A.r();
  int nv = r + 1;
  // Tr(adj * sum_m x_m B_m) = sum_m x_m sum_{i,j} adj[i][j] (B_m)[j][i]
  MultiPoly tr(A.p, nv);
  for (int m = 0; m < r; ++m) {
    MultiPoly part(A.p, nv);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::uint64_t c = B.mats[m].at(j, i);
        if (c) part = part.add(adj[i][j].scalar_mul(c));
      }
    }
    tr = tr.add(part.shift(m + 1));
  }
  CoeffVector cv;
  cv.n = n;
  cv.r = r;
  cv.p = A.p;
  cv.indices = coeff_indices(n, r);
  cv.values.reserve(cv.indices.size());
  for (const Monomial& m : cv.indices) cv.values.push_back(tr.coeff(m));
  return cv;
}

FpMat jacobian(const MatrixTuple& A) {
  // One adjugate computation serves all columns: the column for the basis
  // direction E_ij in slot m is the coefficient vector of x_m * adj[j][i].
  PolyMatrix adj = adjugate(pencil(A));
  int n = A.n;
  int r = A.r();
  std::vector<Monomial> idx = coeff_indices(n, r);
  std::map<Monomial, int, GradedLexLess> row_of;
  for (size_t k = 0; k < idx.size(); ++k) row_of[idx[k]] = static_cast<int>(k);
  FpMat J(A.p, static_cast<int>(idx.size()), r * n * n);
  for (int m = 0; m < r; ++m) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        int col = m * n * n + i * n + j;
        for (const auto& [mono, c] : adj[j][i].terms()) {
          Monomial shifted = mono;
          ++shifted[m + 1];
          auto it = row_of.find(shifted);
          if (it == row_of.end()) {
            throw std::logic_error("jacobian: monomial outside coefficient index set");
          }
          J.at(it->second, col) = c;
        }
      }
    }
  }
  return J;
}

std::vector<MatrixTuple> kernel(const FpMat& J, std::uint64_t p, int n, int r) {
  std::vector<MatrixTuple> out;
  for (const auto& v : J.nullspace()) out.push_back(vec_to_tuple(v, p, n, r));
  return out;
}

namespace {

// Characteristic polynomial coefficients of a single matrix, low degree
// first, via the one-variable pencil determinant in x with M negated:
// det(xI - M).
std::vector<std::uint64_t> charpoly_1var(const FpMat& M) {
  int n = M.rows();
  std::uint64_t p = M.p();
  MatrixTuple t{p, n, {M.scalar_mul(p - 1)}};
  MultiPoly d = det(pencil(t));
  // variables (x_0, x_1) = (x, 1): collapse x_1 by substituting 1
  std::vector<std::uint64_t> coeffs(static_cast<size_t>(n) + 1, 0);
  for (const auto& [m, c] : d.terms()) {
    coeffs[static_cast<size_t>(m[0])] = (coeffs[static_cast<size_t>(m[0])] + c) % p;
  }
  return coeffs;
}

int poly_deg(const std::vector<std::uint64_t>& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[static_cast<size_t>(i)]) return i;
  }
  return -1;
}

std::vector<std::uint64_t> poly_gcd(std::vector<std::uint64_t> a,
                                    std::vector<std::uint64_t> b, std::uint64_t p) {
  while (poly_deg(b) >= 0) {
    int da = poly_deg(a);
    int db = poly_deg(b);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    std::uint64_t f = a[static_cast<size_t>(da)] * mod_inv(b[static_cast<size_t>(db)], p) % p;
    for (int i = 0; i <= db; ++i) {
      size_t k = static_cast<size_t>(da - db + i);
      a[k] = (a[k] + (p - f) * b[static_cast<size_t>(i)]) % p;
    }
  }
  return a;
}

bool squarefree_charpoly(const FpMat& M) {
  std::uint64_t p = M.p();
  std::vector<std::uint64_t> f = charpoly_1var(M);
  std::vector<std::uint64_t> df(f.size() - 1);
  for (size_t k = 1; k < f.size(); ++k) df[k - 1] = k % p * f[k] % p;
  return poly_deg(poly_gcd(f, df, p)) == 0;
}

}  // namespace

bool has_distinct_eigenvalue_combo(const MatrixTuple& A, SplitMix64& rng, int tries) {
  for (int t = 0; t < tries; ++t) {
    FpMat C(A.p, A.n, A.n);
    for (int m = 0; m < A.r(); ++m) {
      C = C.add(A.mats[m].scalar_mul(rng.below(A.p)));
    }
    if (squarefree_charpoly(C)) return true;
  }
  return false;
}

std::vector<MatrixTuple> kernel_via_traces(const MatrixTuple& A, SplitMix64& rng) {
  if (!has_distinct_eigenvalue_combo(A, rng)) {
    throw std::domain_error(
        "kernel_via_traces: no tested combination has distinct eigenvalues");
  }
  int n = A.n;
  int r = A.r();
  std::uint64_t p = A.p;
  // L = x_1 A_1 + ... + x_r A_r in r variables; rows of the system indexed by
  // (d, monomial), unknowns are the r n^2 entries of B (slot-major, row-major).
  PolyMatrix L(n, std::vector<MultiPoly>(n, MultiPoly(p, r)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      MultiPoly e(p, r);
      for (int m = 0; m < r; ++m) {
        std::uint64_t c = A.mats[m].at(i, j);
        if (c) e = e.add(MultiPoly::variable(p, r, m).scalar_mul(c));
      }
      L[i][j] = std::move(e);
    }
  }
  std::map<std::pair<int, Monomial>, std::vector<std::uint64_t>> rows;
  PolyMatrix PW(n, std::vector<MultiPoly>(n, MultiPoly(p, r)));
  for (int i = 0; i < n; ++i) PW[i][i] = MultiPoly::constant(p, r, 1);
  for (int d = 0; d < n; ++d) {
    if (d > 0) PW = poly_mat_mul(PW, L);
    // Tr(PW * x_m E_ij) = x_m * PW[j][i]: each monomial contributes to the
    // coefficient of B_m[i][j] in one row
    for (int m = 0; m < r; ++m) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          for (const auto& [mono, c] : PW[j][i].terms()) {
            Monomial shifted = mono;
            ++shifted[m];
            auto& row = rows[{d, shifted}];
            if (row.empty()) row.assign(static_cast<size_t>(r) * n * n, 0);
            size_t col = static_cast<size_t>(m) * n * n + static_cast<size_t>(i) * n + j;
            row[col] = (row[col] + c) % p;
          }
        }
      }
    }
  }
  std::vector<std::vector<std::uint64_t>> sys;
  for (auto& [key, row] : rows) sys.push_back(std::move(row));
  FpMat M(p, static_cast<int>(sys.size()), r * n * n);
  for (size_t i = 0; i < sys.size(); ++i) {
    for (size_t j = 0; j < sys[i].size(); ++j) M.at(static_cast<int>(i), static_cast<int>(j)) = sys[i][j];
  }
  std::vector<MatrixTuple> out;
  for (const auto& v : M.nullspace()) out.push_back(vec_to_tuple(v, p, n, r));
  return out;
}

std::vector<MatrixTuple> pgl_tangent(const MatrixTuple& A) {
  int n = A.n;
  std::uint64_t p = A.p;
  // trace-zero generators: E_ij (i != j) and E_ii - E_{i+1,i+1}
  std::vector<FpMat> gens;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      FpMat e(p, n, n);
      e.at(i, j) = 1;
      gens.push_back(std::move(e));
    }
  }
  for (int i = 0; i + 1 < n; ++i) {
    FpMat e(p, n, n);
    e.at(i, i) = 1;
    e.at(i + 1, i + 1) = p - 1;
    gens.push_back(std::move(e));
  }
  std::vector<std::vector<std::uint64_t>> rows;
  for (const FpMat& C : gens) {
    std::vector<FpMat> mats;
    for (int m = 0; m < A.r(); ++m) {
      mats.push_back(C.mul(A.mats[m]).sub(A.mats[m].mul(C)));
    }
    rows.push_back(tuple_to_vec(MatrixTuple{p, n, std::move(mats)}));
  }
  // reduce to an independent basis of the span
  FpMat M(p, static_cast<int>(rows.size()), A.r() * n * n);
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) M.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  }
  FpMat R = M.rref();
  std::vector<MatrixTuple> out;
  for (int i = 0; i < R.rows(); ++i) {
    std::vector<std::uint64_t> v(static_cast<size_t>(R.cols()));
    bool nz = false;
    for (int j = 0; j < R.cols(); ++j) {
      v[static_cast<size_t>(j)] = R.at(i, j);
      nz = nz || v[static_cast<size_t>(j)];
    }
    if (nz) out.push_back(vec_to_tuple(v, p, n, A.r()));
  }
  return out;
}

bool tuple_in_span(const MatrixTuple& t, const std::vector<MatrixTuple>& basis) {
  std::vector<std::vector<std::uint64_t>> rows;
  for (const MatrixTuple& b : basis) rows.push_back(tuple_to_vec(b));
  int r0 = row_rank(rows, t.p);
  rows.push_back(tuple_to_vec(t));
  return row_rank(rows, t.p) == r0;
}

bool same_tuple_span(const std::vector<MatrixTuple>& u, const std::vector<MatrixTuple>& v) {
  if (u.empty() && v.empty()) return true;
  std::uint64_t p = u.empty() ? v[0].p : u[0].p;
  std::vector<std::vector<std::uint64_t>> a, b;
  for (const MatrixTuple& t : u) a.push_back(tuple_to_vec(t));
  for (const MatrixTuple& t : v) b.push_back(tuple_to_vec(t));
  return same_row_span(a, b, p);
}

}  // namespace dhyp
