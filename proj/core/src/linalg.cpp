#include "homleib/linalg.hpp"

#include <algorithm>

namespace homleib {

std::pair<Mat, std::vector<int>> rref(const Mat& m) {
  IncrementalRref acc(m.cols());
  for (int i = 0; i < m.rows(); ++i) acc.insert(m.row(i));
  Subspace s = acc.snapshot();
  Mat out(m.rows(), m.cols());
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = s.basis()[i][j];
  return {out, s.pivots()};
}

bool IncrementalRref::insert(Vec v) {
  v = reduce(std::move(v));
  int p = -1;
  for (int j = 0; j < ambient_; ++j)
    if (v[j] != 0) {
      p = j;
      break;
    }
  if (p < 0) return false;
  Rat lead = v[p];
  for (int j = p; j < ambient_; ++j) v[j] /= lead;
  // back-eliminate the new pivot from existing rows, keep pivot order
  for (size_t r = 0; r < rows_.size(); ++r) {
    Rat c = rows_[r][p];
    if (c != 0)
      for (int j = p; j < ambient_; ++j) rows_[r][j] -= c * v[j];
  }
  auto it = std::upper_bound(pivots_.begin(), pivots_.end(), p);
  size_t pos = size_t(it - pivots_.begin());
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

Vec IncrementalRref::reduce(Vec v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    Rat c = v[pivots_[r]];
    if (c != 0)
      for (int j = pivots_[r]; j < ambient_; ++j) v[j] -= c * rows_[r][j];
  }
  return v;
}

Subspace IncrementalRref::snapshot() const {
  Subspace s(ambient_);
  s.basis_ = rows_;
  s.pivots_ = pivots_;
  return s;
}

Subspace Subspace::span(int ambient_dim, const std::vector<Vec>& vectors) {
  IncrementalRref acc(ambient_dim);
  for (const Vec& v : vectors) acc.insert(v);
  return acc.snapshot();
}

Subspace Subspace::full(int ambient_dim) {
  std::vector<Vec> rows;
  rows.reserve(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) rows.push_back(vec_unit(ambient_dim, i));
  return span(ambient_dim, rows);
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) return false;
  for (const Vec& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  // RREF basis: the coordinate along row i is v[pivot_i].
  Vec coords(basis_.size());
  Vec rem = v;
  for (size_t i = 0; i < basis_.size(); ++i) {
    coords[i] = rem[pivots_[i]];
    if (coords[i] != 0) vec_axpy(rem, -coords[i], basis_[i]);
  }
  if (!vec_is_zero(rem)) return std::nullopt;
  return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw Error(ErrorKind::precondition, "subspace sum: ambient mismatch");
  IncrementalRref acc(ambient_);
  for (const Vec& v : basis_) acc.insert(v);
  for (const Vec& v : other.basis_) acc.insert(v);
  return acc.snapshot();
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw Error(ErrorKind::precondition, "subspace intersection: ambient mismatch");
  // x lies in both spans iff both quotient projections kill it, so the
  // intersection is the kernel of the stacked constraint matrix.
  QuotientMap qa(ambient_, *this), qb(ambient_, other);
  Mat stacked(qa.projection().rows() + qb.projection().rows(), ambient_);
  for (int i = 0; i < qa.projection().rows(); ++i)
    for (int j = 0; j < ambient_; ++j) stacked.at(i, j) = qa.projection().at(i, j);
  for (int i = 0; i < qb.projection().rows(); ++i)
    for (int j = 0; j < ambient_; ++j) stacked.at(qa.projection().rows() + i, j) = qb.projection().at(i, j);
  // Projections annihilate exactly the subspace, so the stacked kernel is the
  // intersection... of the two KERNELS, i.e. of the two subspaces themselves
  // only if each projection's kernel equals the subspace — which holds.
  return kernel_basis(stacked);
}

Subspace Subspace::apply(const Mat& m) const {
  if (m.cols() != ambient_) throw Error(ErrorKind::precondition, "subspace apply: shape mismatch");
  std::vector<Vec> rows;
  rows.reserve(basis_.size());
  for (const Vec& v : basis_) rows.push_back(m.apply(v));
  return Subspace::span(m.rows(), rows);
}

Subspace kernel_basis(const Mat& m) {
  auto [r, pivots] = rref(m);
  int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec v(n, Rat(0));
    v[j] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(int(i), j);
    rows.push_back(std::move(v));
  }
  return Subspace::span(n, rows);
}

Subspace image_basis(const Mat& m) {
  std::vector<Vec> cols;
  cols.reserve(m.cols());
  for (int j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return Subspace::span(m.rows(), cols);
}

QuotientMap::QuotientMap(int ambient_dim, Subspace kernel) : ambient_(ambient_dim), kernel_(std::move(kernel)) {
  if (kernel_.ambient_dim() != ambient_dim)
    throw Error(ErrorKind::precondition, "quotient: kernel ambient mismatch");
  const auto& pivots = kernel_.pivots();
  std::vector<bool> is_pivot(ambient_dim, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free;
  for (int j = 0; j < ambient_dim; ++j)
    if (!is_pivot[j]) free.push_back(j);
  int q = int(free.size());
  projection_ = Mat(q, ambient_dim);
  section_ = Mat(ambient_dim, q);
  for (int a = 0; a < q; ++a) {
    projection_.at(a, free[a]) = 1;
    // subtract the reduction against the RREF kernel basis
    for (size_t i = 0; i < pivots.size(); ++i) projection_.at(a, pivots[i]) = -kernel_.basis()[i][free[a]];
    section_.at(free[a], a) = 1;
  }
}

std::optional<Vec> solve(const Mat& m, const Vec& rhs) {
  // Row-reduce the augmented matrix [m | rhs].
  Mat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  auto [r, pivots] = rref(aug);
  for (size_t i = 0; i < pivots.size(); ++i)
    if (pivots[i] == m.cols()) return std::nullopt; // inconsistent
  Vec x(m.cols(), Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r.at(int(i), m.cols());
  return x;
}

} // namespace homleib
