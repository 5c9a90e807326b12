#ifndef HOMLEIB_MATRIX_HPP
#define HOMLEIB_MATRIX_HPP

#include "homleib/rational.hpp"

#include <cassert>
#include <vector>

namespace homleib {

using Vec = std::vector<Rat>;

/// Dense rational matrix, row-major. Vectors are columns: apply() is M*v.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), entries_(size_t(rows) * cols, Rat(0)) {
    assert(rows >= 0 && cols >= 0);
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static Mat from_rows(const std::vector<Vec>& rows, int cols) {
    Mat m(int(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
      assert(int(rows[i].size()) == cols);
      for (int j = 0; j < cols; ++j) m.at(int(i), j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return entries_[size_t(i) * cols_ + j];
  }
  const Rat& at(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return entries_[size_t(i) * cols_ + j];
  }

  Vec row(int i) const {
    Vec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }
  Vec col(int j) const {
    Vec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  Vec apply(const Vec& v) const {
    assert(int(v.size()) == cols_);
    Vec out(rows_, Rat(0));
    // column-sparse: O(nnz(v) * rows)
    for (int j = 0; j < cols_; ++j) {
      if (v[j] == 0) continue;
      for (int i = 0; i < rows_; ++i)
        if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    }
    return out;
  }

  Mat mul(const Mat& other) const {
    assert(cols_ == other.rows_);
    Mat out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Rat& a = at(i, k);
        if (a == 0) continue;
        for (int j = 0; j < other.cols_; ++j) {
          const Rat& b = other.at(k, j);
          if (b != 0) out.at(i, j) += a * b;
        }
      }
    return out;
  }

  Mat add(const Mat& other) const {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    Mat out(rows_, cols_);
    for (size_t t = 0; t < entries_.size(); ++t) out.entries_[t] = entries_[t] + other.entries_[t];
    return out;
  }

  Mat scale(const Rat& c) const {
    Mat out(rows_, cols_);
    for (size_t t = 0; t < entries_.size(); ++t) out.entries_[t] = entries_[t] * c;
    return out;
  }

  Mat transpose() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  /// Kronecker product; index convention (i*rB + k, j*cB + l), first factor major.
  Mat kron(const Mat& b) const {
    Mat out(rows_ * b.rows_, cols_ * b.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const Rat& a = at(i, j);
        if (a == 0) continue;
        for (int k = 0; k < b.rows_; ++k)
          for (int l = 0; l < b.cols_; ++l)
            if (b.at(k, l) != 0) out.at(i * b.rows_ + k, j * b.cols_ + l) = a * b.at(k, l);
      }
    return out;
  }

  /// n-fold Kronecker power; kron_power(0) is the 1x1 identity.
  Mat kron_power(int n) const {
    Mat out = Mat::identity(1);
    for (int t = 0; t < n; ++t) out = out.kron(*this);
    return out;
  }

  bool is_zero() const {
    for (const Rat& e : entries_)
      if (e != 0) return false;
    return true;
  }

  bool operator==(const Mat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
  }
  bool operator!=(const Mat& other) const { return !(*this == other); }

private:
  int rows_, cols_;
  std::vector<Rat> entries_;
};

inline Vec vec_zero(int n) { return Vec(n, Rat(0)); }

inline Vec vec_unit(int n, int i) {
  Vec v(n, Rat(0));
  v[i] = 1;
  return v;
}

inline bool vec_is_zero(const Vec& v) {
  for (const Rat& e : v)
    if (e != 0) return false;
  return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Vec vec_scale(const Vec& a, const Rat& c) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  return out;
}

inline void vec_axpy(Vec& acc, const Rat& c, const Vec& v) {
  assert(acc.size() == v.size());
  if (c == 0) return;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) acc[i] += c * v[i];
}

} // namespace homleib

#endif
