#include "dhyp/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dhyp/fp.hpp"

namespace dhyp {

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a > b;  // within a degree, x_0-heavy monomials come first
}

MultiPoly MultiPoly::constant(std::uint64_t p, int nvars, std::uint64_t c) {
  MultiPoly f(p, nvars);
  f.set_coeff(Monomial(nvars, 0), c % p);
  return f;
}

MultiPoly MultiPoly::variable(std::uint64_t p, int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("MultiPoly::variable: index out of range");
  MultiPoly f(p, nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  f.set_coeff(m, 1 % p);
  return f;
}

void MultiPoly::set_coeff(const Monomial& m, std::uint64_t c) {
  if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("MultiPoly: monomial length mismatch");
  c %= p_;
  if (c == 0) {
    terms_.erase(m);
  } else {
    terms_[m] = c;
  }
}

std::uint64_t MultiPoly::coeff(const Monomial& m) const {
  if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("MultiPoly: monomial length mismatch");
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

MultiPoly MultiPoly::add(const MultiPoly& o) const {
  if (nvars_ != o.nvars_ || p_ != o.p_) throw std::invalid_argument("MultiPoly::add: incompatible");
  MultiPoly f = *this;
  for (const auto& [m, c] : o.terms_) {
    std::uint64_t v = (f.coeff(m) + c) % p_;
    f.set_coeff(m, v);
  }
  return f;
}

MultiPoly MultiPoly::sub(const MultiPoly& o) const {
  if (nvars_ != o.nvars_ || p_ != o.p_) throw std::invalid_argument("MultiPoly::sub: incompatible");
  MultiPoly f = *this;
  for (const auto& [m, c] : o.terms_) {
    std::uint64_t v = (f.coeff(m) + p_ - c) % p_;
    f.set_coeff(m, v);
  }
  return f;
}

MultiPoly MultiPoly::mul(const MultiPoly& o) const {
  if (nvars_ != o.nvars_ || p_ != o.p_) throw std::invalid_argument("MultiPoly::mul: incompatible");
  MultiPoly f(p_, nvars_);
  Monomial m(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      auto [it, inserted] = f.terms_.try_emplace(m, 0);
      it->second = (it->second + ca * cb) % p_;
    }
  }
  for (auto it = f.terms_.begin(); it != f.terms_.end();) {
    it = it->second == 0 ? f.terms_.erase(it) : std::next(it);
  }
  return f;
}

MultiPoly MultiPoly::scalar_mul(std::uint64_t c) const {
  MultiPoly f(p_, nvars_);
  c %= p_;
  if (c == 0) return f;
  for (const auto& [m, v] : terms_) f.terms_[m] = v * c % p_;
  return f;
}

MultiPoly MultiPoly::shift(int index) const {
  if (index < 0 || index >= nvars_) throw std::invalid_argument("MultiPoly::shift: index out of range");
  MultiPoly f(p_, nvars_);
  for (const auto& [m, v] : terms_) {
    Monomial m2 = m;
    ++m2[index];
    f.terms_[std::move(m2)] = v;
  }
  return f;
}

std::uint64_t MultiPoly::eval(const std::vector<std::uint64_t>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("MultiPoly::eval: point length mismatch");
  std::uint64_t acc = 0;
  for (const auto& [m, c] : terms_) {
    std::uint64_t t = c;
    for (int i = 0; i < nvars_; ++i) t = t * mod_pow(point[i], static_cast<std::uint64_t>(m[i]), p_) % p_;
    acc = (acc + t) % p_;
  }
  return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return p_ == o.p_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

bool MultiPoly::is_homogeneous(int degree) const {
  for (const auto& [m, c] : terms_) {
    if (std::accumulate(m.begin(), m.end(), 0) != degree) return false;
  }
  return true;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      os << "*x" << i;
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

PolyMatrix pencil(const MatrixTuple& A) {
  int n = A.n;
  int nv = A.r() + 1;
  PolyMatrix M(n, std::vector<MultiPoly>(n, MultiPoly(A.p, nv)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      MultiPoly e(A.p, nv);
      if (i == j) e = e.add(MultiPoly::variable(A.p, nv, 0));
      for (int m = 0; m < A.r(); ++m) {
        std::uint64_t c = A.mats[m].at(i, j);
        if (c) e = e.add(MultiPoly::variable(A.p, nv, m + 1).scalar_mul(c));
      }
      M[i][j] = std::move(e);
    }
  }
  return M;
}

namespace {

// det of the submatrix on rows 0..k-1 and the k columns in mask, expanding
// along the last row; D indexed by column bitmask.
MultiPoly det_subset(const PolyMatrix& M, std::uint64_t p, int nvars) {
  int n = static_cast<int>(M.size());
  std::vector<MultiPoly> D(static_cast<size_t>(1) << n);
  D[0] = MultiPoly::constant(p, nvars, 1);
  for (std::uint64_t mask = 1; mask < (static_cast<std::uint64_t>(1) << n); ++mask) {
    int k = __builtin_popcountll(mask);
    MultiPoly acc(p, nvars);
    int t = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      const MultiPoly& entry = M[k - 1][j];
      if (!entry.is_zero()) {
        MultiPoly term = entry.mul(D[mask ^ (1ULL << j)]);
        if ((k - 1 + t) % 2) term = term.scalar_mul(p - 1);
        acc = acc.add(term);
      }
      ++t;
    }
    D[mask] = std::move(acc);
  }
  return D[(static_cast<std::uint64_t>(1) << n) - 1];
}

}  // namespace

MultiPoly det(const PolyMatrix& M) {
  int n = static_cast<int>(M.size());
  for (const auto& row : M) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("det: not square");
  }
  if (n == 0) throw std::invalid_argument("det: empty matrix");
  return det_subset(M, M[0][0].p(), M[0][0].nvars());
}

PolyMatrix adjugate(const PolyMatrix& M) {
  int n = static_cast<int>(M.size());
  if (n == 0) throw std::invalid_argument("adjugate: empty matrix");
  std::uint64_t p = M[0][0].p();
  int nvars = M[0][0].nvars();
  PolyMatrix adj(n, std::vector<MultiPoly>(n, MultiPoly(p, nvars)));
  if (n == 1) {
    adj[0][0] = MultiPoly::constant(p, nvars, 1);
    return adj;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      PolyMatrix minor;
      minor.reserve(static_cast<size_t>(n) - 1);
      for (int a = 0; a < n; ++a) {
        if (a == j) continue;  // delete row j
        std::vector<MultiPoly> row;
        row.reserve(static_cast<size_t>(n) - 1);
        for (int b = 0; b < n; ++b) {
          if (b == i) continue;  // delete column i
          row.push_back(M[a][b]);
        }
        minor.push_back(std::move(row));
      }
      MultiPoly d = det_subset(minor, p, nvars);
      adj[i][j] = ((i + j) % 2 == 0) ? std::move(d) : d.scalar_mul(p - 1);
    }
  }
  return adj;
}

PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  int n = static_cast<int>(a.size());
  std::uint64_t p = a[0][0].p();
  int nvars = a[0][0].nvars();
  PolyMatrix r(n, std::vector<MultiPoly>(n, MultiPoly(p, nvars)));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        r[i][j] = r[i][j].add(a[i][k].mul(b[k][j]));
      }
    }
  }
  return r;
}

MultiPoly poly_mat_trace(const PolyMatrix& m) {
  MultiPoly t(m[0][0].p(), m[0][0].nvars());
  for (size_t i = 0; i < m.size(); ++i) t = t.add(m[i][i]);
  return t;
}

}  // namespace dhyp
