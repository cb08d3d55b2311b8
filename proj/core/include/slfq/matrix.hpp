#pragma once

#include <optional>
#include <vector>

#include "slfq/rational.hpp"

namespace slfq {

// Dense rational matrix, row-major. Maps act on column vectors from the
// left, so a map U -> V is dim(V) x dim(U).
//
// Every reduction routine below is deterministic and basis-canonical:
// equal subspaces come back as equal matrices regardless of the spanning
// set they were handed.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols);
  Mat(int rows, int cols, std::vector<Rat> data);

  static Mat identity(int n);
  static Mat zero(int rows, int cols);
  static Mat col_vec(std::vector<Rat> entries);
  static Mat row_vec(std::vector<Rat> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j);
  const Rat& at(int i, int j) const;

  bool operator==(const Mat& o) const = default;
  bool is_zero() const;
  bool is_identity() const;

  Mat transpose() const;
  Rat trace() const;
  Mat col(int j) const;
  Mat cols_subset(const std::vector<int>& idx) const;

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const Rat& c, const Mat& a);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> d_;
};

// Stacking helpers take the shared dimension explicitly so an empty block
// list still produces a shaped (rows x 0, resp. 0 x cols) matrix.
Mat hstack(int rows, const std::vector<Mat>& blocks);
Mat vstack(int cols, const std::vector<Mat>& blocks);
Mat block_diag(const std::vector<Mat>& blocks);

struct Rref {
  Mat m;
  std::vector<int> pivot_cols;
};

// Gauss-Jordan with first-nonzero pivot choice; exact over Q.
Rref rref(Mat a);
int rank(const Mat& a);

// Kernel basis, one column per free column of the RREF in ascending order,
// unit entry at the free coordinate. nullspace(zero map) == identity.
Mat nullspace(const Mat& a);

// Column-echelon basis of the column span. A full subspace always comes
// back as the identity, and colspace is a fixpoint on its own output.
Mat colspace(const Mat& a);

// Indices of standard basis vectors extending the independent columns of b
// to all of Q^rows, chosen greedily from index 0 upward.
std::vector<int> complement(const Mat& b);

// One solution x of a*x = b (free coordinates pinned to zero), or nullopt
// when the system is inconsistent. b may have several columns.
std::optional<Mat> solve(const Mat& a, const Mat& b);

}  // namespace slfq
