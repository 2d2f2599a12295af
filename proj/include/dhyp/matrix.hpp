#pragma once

#include <cstdint>
#include <vector>

#include "dhyp/rng.hpp"

namespace dhyp {

// Dense matrix over F_p, row-major. Also used for the linear systems arising
// from Jacobians and constraint rows, so rows x cols need not be square.
class FpMat {
public:
  FpMat() : p_(2), rows_(0), cols_(0) {}
  FpMat(std::uint64_t p, int rows, int cols);

  static FpMat identity(std::uint64_t p, int n);

  std::uint64_t p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint64_t& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  std::uint64_t at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const FpMat& o) const;
  bool is_zero() const;

  FpMat add(const FpMat& o) const;
  FpMat sub(const FpMat& o) const;
  FpMat mul(const FpMat& o) const;
  FpMat scalar_mul(std::uint64_t c) const;
  FpMat transpose() const;
  FpMat pow(std::uint64_t e) const;  // square only
  std::uint64_t trace() const;      // square only

  std::uint64_t det() const;        // square only, Gaussian elimination
  FpMat inverse() const;            // throws std::domain_error if singular
  FpMat adjugate() const;           // entrywise from (n-1)-minors

  // Gaussian elimination utilities.
  int rank() const;
  FpMat rref() const;
  // Basis of the right null space, one row per basis vector (cols() entries).
  std::vector<std::vector<std::uint64_t>> nullspace() const;

private:
  std::uint64_t p_;
  int rows_, cols_;
  std::vector<std::uint64_t> a_;
};

// Row span comparison via reduced echelon forms; rows are vectors over F_p.
bool same_row_span(const std::vector<std::vector<std::uint64_t>>& u,
                   const std::vector<std::vector<std::uint64_t>>& v,
                   std::uint64_t p);

// Rank of a list of row vectors.
int row_rank(const std::vector<std::vector<std::uint64_t>>& rows, std::uint64_t p);

// The point A = (A_1, ..., A_r) of M_n^r. r >= 1 except where noted; the
// r = 0 pencil edge case is handled by pencil() directly.
struct MatrixTuple {
  std::uint64_t p = 2;
  int n = 0;
  std::vector<FpMat> mats;

  int r() const { return static_cast<int>(mats.size()); }
};

MatrixTuple make_tuple(std::uint64_t p, int n, std::vector<FpMat> mats);

// Uniform entries via SplitMix64; slots in order, entries row-major.
MatrixTuple random_tuple(std::uint64_t p, int n, int r, SplitMix64& rng);
FpMat random_matrix(std::uint64_t p, int n, SplitMix64& rng);

// Flatten (B_1, ..., B_r) to a vector of length r*n^2, slot-major then
// row-major, matching the Jacobian column order.
std::vector<std::uint64_t> tuple_to_vec(const MatrixTuple& t);
MatrixTuple vec_to_tuple(const std::vector<std::uint64_t>& v, std::uint64_t p, int n, int r);

}  // namespace dhyp
