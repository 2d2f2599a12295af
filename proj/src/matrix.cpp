#include "dhyp/matrix.hpp"

#include <stdexcept>

#include "dhyp/fp.hpp"

namespace dhyp {

FpMat::FpMat(std::uint64_t p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("FpMat: negative dimensions");
}

FpMat FpMat::identity(std::uint64_t p, int n) {
  FpMat m(p, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

bool FpMat::operator==(const FpMat& o) const {
  return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool FpMat::is_zero() const {
  for (std::uint64_t v : a_) {
    if (v) return false;
  }
  return true;
}

FpMat FpMat::add(const FpMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("FpMat::add: shape mismatch");
  FpMat m(p_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = (a_[i] + o.a_[i]) % p_;
  return m;
}

FpMat FpMat::sub(const FpMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("FpMat::sub: shape mismatch");
  FpMat m(p_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = (a_[i] + p_ - o.a_[i]) % p_;
  return m;
}

FpMat FpMat::mul(const FpMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("FpMat::mul: shape mismatch");
  FpMat m(p_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      std::uint64_t v = at(i, k);
      if (!v) continue;
      for (int j = 0; j < o.cols_; ++j) {
        m.at(i, j) = (m.at(i, j) + v * o.at(k, j)) % p_;
      }
    }
  }
  return m;
}

FpMat FpMat::scalar_mul(std::uint64_t c) const {
  FpMat m(p_, rows_, cols_);
  c %= p_;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * c % p_;
  return m;
}

FpMat FpMat::transpose() const {
  FpMat m(p_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  }
  return m;
}

FpMat FpMat::pow(std::uint64_t e) const {
  if (rows_ != cols_) throw std::invalid_argument("FpMat::pow: not square");
  FpMat acc = identity(p_, rows_);
  FpMat base = *this;
  while (e) {
    if (e & 1) acc = acc.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return acc;
}

std::uint64_t FpMat::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("FpMat::trace: not square");
  std::uint64_t t = 0;
  for (int i = 0; i < rows_; ++i) t = (t + at(i, i)) % p_;
  return t;
}

FpMat FpMat::rref() const {
  FpMat m = *this;
  int lead = 0;
  for (int row = 0; row < rows_ && lead < cols_; ++row) {
    int pivot = -1;
    while (lead < cols_) {
      for (int i = row; i < rows_; ++i) {
        if (m.at(i, lead)) {
          pivot = i;
          break;
        }
      }
      if (pivot >= 0) break;
      ++lead;
    }
    if (pivot < 0) break;
    if (pivot != row) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(row, j));
    }
    std::uint64_t s = mod_inv(m.at(row, lead), p_);
    for (int j = lead; j < cols_; ++j) m.at(row, j) = m.at(row, j) * s % p_;
    for (int i = 0; i < rows_; ++i) {
      if (i == row) continue;
      std::uint64_t f = m.at(i, lead);
      if (!f) continue;
      for (int j = lead; j < cols_; ++j) {
        m.at(i, j) = (m.at(i, j) + (p_ - f) * m.at(row, j)) % p_;
      }
    }
    ++lead;
  }
  return m;
}

int FpMat::rank() const {
  FpMat r = rref();
  int rk = 0;
  for (int i = 0; i < rows_; ++i) {
    bool nonzero = false;
    for (int j = 0; j < cols_; ++j) {
      if (r.at(i, j)) {
        nonzero = true;
        break;
      }
    }
    if (nonzero) ++rk;
  }
  return rk;
}

std::vector<std::vector<std::uint64_t>> FpMat::nullspace() const {
  FpMat r = rref();
  std::vector<int> pivot_col(rows_, -1);
  std::vector<bool> is_pivot(cols_, false);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (r.at(i, j)) {
        pivot_col[i] = j;
        is_pivot[j] = true;
        break;
      }
    }
  }
  std::vector<std::vector<std::uint64_t>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(cols_, 0);
    v[free] = 1;
    for (int i = 0; i < rows_; ++i) {
      if (pivot_col[i] >= 0) v[pivot_col[i]] = (p_ - r.at(i, free)) % p_;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::uint64_t FpMat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("FpMat::det: not square");
  FpMat m = *this;
  std::uint64_t d = 1 % p_;
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int i = col; i < rows_; ++i) {
      if (m.at(i, col)) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      d = (p_ - d) % p_;
    }
    d = d * m.at(col, col) % p_;
    std::uint64_t s = mod_inv(m.at(col, col), p_);
    for (int i = col + 1; i < rows_; ++i) {
      std::uint64_t f = m.at(i, col) * s % p_;
      if (!f) continue;
      for (int j = col; j < cols_; ++j) {
        m.at(i, j) = (m.at(i, j) + (p_ - f) * m.at(col, j)) % p_;
      }
    }
  }
  return d;
}

FpMat FpMat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("FpMat::inverse: not square");
  FpMat aug(p_, rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1 % p_;
  }
  FpMat r = aug.rref();
  for (int i = 0; i < rows_; ++i) {
    if (r.at(i, i) != 1 % p_) throw std::domain_error("FpMat::inverse: singular matrix");
  }
  FpMat inv(p_, rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = r.at(i, cols_ + j);
  }
  return inv;
}

FpMat FpMat::adjugate() const {
  if (rows_ != cols_) throw std::invalid_argument("FpMat::adjugate: not square");
  int n = rows_;
  FpMat adj(p_, n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj.at(0, 0) = 1 % p_;  // empty minor has determinant 1
    return adj;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      FpMat minor(p_, n - 1, n - 1);
      for (int a = 0, ai = 0; a < n; ++a) {
        if (a == j) continue;  // delete row j
        for (int b = 0, bj = 0; b < n; ++b) {
          if (b == i) continue;  // delete column i
          minor.at(ai, bj) = at(a, b);
          ++bj;
        }
        ++ai;
      }
      std::uint64_t d = minor.det();
      adj.at(i, j) = ((i + j) % 2 == 0) ? d : (p_ - d) % p_;
    }
  }
  return adj;
}

bool same_row_span(const std::vector<std::vector<std::uint64_t>>& u,
                   const std::vector<std::vector<std::uint64_t>>& v,
                   std::uint64_t p) {
  auto echelon = [p](const std::vector<std::vector<std::uint64_t>>& rows) {
    if (rows.empty()) return FpMat(p, 0, 0);
    FpMat m(p, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
      for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j] % p;
    }
    return m.rref();
  };
  FpMat a = echelon(u);
  FpMat b = echelon(v);
  // compare nonzero rows of both echelon forms
  auto nonzero_rows = [](const FpMat& m) {
    std::vector<std::vector<std::uint64_t>> rows;
    for (int i = 0; i < m.rows(); ++i) {
      std::vector<std::uint64_t> row(m.cols());
      bool nz = false;
      for (int j = 0; j < m.cols(); ++j) {
        row[j] = m.at(i, j);
        nz = nz || row[j];
      }
      if (nz) rows.push_back(std::move(row));
    }
    return rows;
  };
  return nonzero_rows(a) == nonzero_rows(b);
}

int row_rank(const std::vector<std::vector<std::uint64_t>>& rows, std::uint64_t p) {
  if (rows.empty()) return 0;
  FpMat m(p, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw std::invalid_argument("row_rank: ragged rows");
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j] % p;
  }
  return m.rank();
}

MatrixTuple make_tuple(std::uint64_t p, int n, std::vector<FpMat> mats) {
  for (const FpMat& m : mats) {
    if (m.rows() != n || m.cols() != n || m.p() != p) {
      throw std::invalid_argument("make_tuple: shape or modulus mismatch");
    }
  }
  return MatrixTuple{p, n, std::move(mats)};
}

FpMat random_matrix(std::uint64_t p, int n, SplitMix64& rng) {
  FpMat m(p, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.at(i, j) = rng.below(p);
  }
  return m;
}

MatrixTuple random_tuple(std::uint64_t p, int n, int r, SplitMix64& rng) {
  std::vector<FpMat> mats;
  mats.reserve(static_cast<size_t>(r));
  for (int m = 0; m < r; ++m) mats.push_back(random_matrix(p, n, rng));
  return MatrixTuple{p, n, std::move(mats)};
}

std::vector<std::uint64_t> tuple_to_vec(const MatrixTuple& t) {
  std::vector<std::uint64_t> v;
  v.reserve(static_cast<size_t>(t.r()) * t.n * t.n);
  for (const FpMat& m : t.mats) {
    for (int i = 0; i < t.n; ++i) {
      for (int j = 0; j < t.n; ++j) v.push_back(m.at(i, j));
    }
  }
  return v;
}

MatrixTuple vec_to_tuple(const std::vector<std::uint64_t>& v, std::uint64_t p, int n, int r) {
  if (v.size() != static_cast<size_t>(r) * n * n) {
    throw std::invalid_argument("vec_to_tuple: length mismatch");
  }
  std::vector<FpMat> mats;
  mats.reserve(static_cast<size_t>(r));
  size_t k = 0;
  for (int m = 0; m < r; ++m) {
    FpMat mat(p, n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) mat.at(i, j) = v[k++] % p;
    }
    mats.push_back(std::move(mat));
  }
  return MatrixTuple{p, n, std::move(mats)};
}

}  // namespace dhyp
