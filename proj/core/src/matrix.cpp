#include "slfq/matrix.hpp"

#include <cassert>
#include <utility>

namespace slfq {

Mat::Mat(int rows, int cols)
    : rows_(rows), cols_(cols), d_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  assert(rows >= 0 && cols >= 0);
}

Mat::Mat(int rows, int cols, std::vector<Rat> data)
    : rows_(rows), cols_(cols), d_(std::move(data)) {
  assert(rows >= 0 && cols >= 0);
  assert(d_.size() == static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::zero(int rows, int cols) { return Mat(rows, cols); }

Mat Mat::col_vec(std::vector<Rat> entries) {
  int n = static_cast<int>(entries.size());
  return Mat(n, 1, std::move(entries));
}

Mat Mat::row_vec(std::vector<Rat> entries) {
  int n = static_cast<int>(entries.size());
  return Mat(1, n, std::move(entries));
}

Rat& Mat::at(int i, int j) {
  assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
  return d_[static_cast<std::size_t>(i) * cols_ + j];
}

const Rat& Mat::at(int i, int j) const {
  assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
  return d_[static_cast<std::size_t>(i) * cols_ + j];
}

bool Mat::is_zero() const {
  for (const Rat& x : d_)
    if (x != 0) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != ((i == j) ? 1 : 0)) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rat Mat::trace() const {
  assert(rows_ == cols_);
  Rat s = 0;
  for (int i = 0; i < rows_; ++i) s += at(i, i);
  return s;
}

Mat Mat::col(int j) const {
  Mat c(rows_, 1);
  for (int i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
  return c;
}

Mat Mat::cols_subset(const std::vector<int>& idx) const {
  Mat c(rows_, static_cast<int>(idx.size()));
  for (int j = 0; j < static_cast<int>(idx.size()); ++j)
    for (int i = 0; i < rows_; ++i) c.at(i, j) = at(i, idx[j]);
  return c;
}

Mat operator+(const Mat& a, const Mat& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  Mat c = a;
  for (std::size_t k = 0; k < c.d_.size(); ++k) c.d_[k] += b.d_[k];
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  Mat c = a;
  for (std::size_t k = 0; k < c.d_.size(); ++k) c.d_[k] -= b.d_[k];
  return c;
}

Mat operator*(const Mat& a, const Mat& b) {
  assert(a.cols_ == b.rows_);
  Mat c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Rat& bkj = b.at(k, j);
        if (bkj != 0) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

Mat operator*(const Rat& c, const Mat& a) {
  Mat r = a;
  for (std::size_t k = 0; k < r.d_.size(); ++k) r.d_[k] *= c;
  return r;
}

Mat hstack(int rows, const std::vector<Mat>& blocks) {
  int total = 0;
  for (const Mat& b : blocks) {
    assert(b.rows() == rows);
    total += b.cols();
  }
  Mat m(rows, total);
  int off = 0;
  for (const Mat& b : blocks) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < b.cols(); ++j) m.at(i, off + j) = b.at(i, j);
    off += b.cols();
  }
  return m;
}

Mat vstack(int cols, const std::vector<Mat>& blocks) {
  int total = 0;
  for (const Mat& b : blocks) {
    assert(b.cols() == cols);
    total += b.rows();
  }
  Mat m(total, cols);
  int off = 0;
  for (const Mat& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < cols; ++j) m.at(off + i, j) = b.at(i, j);
    off += b.rows();
  }
  return m;
}

Mat block_diag(const std::vector<Mat>& blocks) {
  int r = 0, c = 0;
  for (const Mat& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Mat m(r, c);
  int ro = 0, co = 0;
  for (const Mat& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m.at(ro + i, co + j) = b.at(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return m;
}

Rref rref(Mat a) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    Rat inv = Rat(1) / a.at(r, c);
    if (inv != 1)
      for (int j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      Rat f = a.at(i, c);
      if (f == 0) continue;
      for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

int rank(const Mat& a) { return static_cast<int>(rref(a).pivot_cols.size()); }

Mat nullspace(const Mat& a) {
  Rref r = rref(a);
  int n = a.cols();
  std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
  for (int c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  Mat k(n, static_cast<int>(free_cols.size()));
  for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
    k.at(free_cols[static_cast<std::size_t>(j)], j) = 1;
    for (int i = 0; i < static_cast<int>(r.pivot_cols.size()); ++i)
      k.at(r.pivot_cols[static_cast<std::size_t>(i)], j) = -r.m.at(i, free_cols[static_cast<std::size_t>(j)]);
  }
  return k;
}

Mat colspace(const Mat& a) {
  Rref r = rref(a.transpose());
  int k = static_cast<int>(r.pivot_cols.size());
  Mat b(a.rows(), k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < a.rows(); ++j) b.at(j, i) = r.m.at(i, j);
  return b;
}

std::vector<int> complement(const Mat& b) {
  int n = b.rows(), k = b.cols();
  Rref r = rref(hstack(n, {b, Mat::identity(n)}));
  std::vector<int> out;
  for (int c : r.pivot_cols)
    if (c >= k) out.push_back(c - k);
  return out;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  assert(a.rows() == b.rows());
  Rref r = rref(hstack(a.rows(), {a, b}));
  for (int c : r.pivot_cols)
    if (c >= a.cols()) return std::nullopt;
  Mat x(a.cols(), b.cols());
  for (int i = 0; i < static_cast<int>(r.pivot_cols.size()); ++i) {
    int pc = r.pivot_cols[static_cast<std::size_t>(i)];
    for (int j = 0; j < b.cols(); ++j) x.at(pc, j) = r.m.at(i, a.cols() + j);
  }
  return x;
}

}  // namespace slfq
