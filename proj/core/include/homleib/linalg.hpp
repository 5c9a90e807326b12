#ifndef HOMLEIB_LINALG_HPP
#define HOMLEIB_LINALG_HPP

#include "homleib/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace homleib {

/// Reduced row-echelon form. Returns the same-shape RREF (zero rows kept,
/// pushed to the bottom) together with the pivot column list.
std::pair<Mat, std::vector<int>> rref(const Mat& m);

/// A subspace of Q^n in canonical form: basis rows are an RREF grid with
/// strictly increasing pivot columns, so two subspaces are equal iff their
/// grids are identical.
class Subspace {
public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim) {}

  /// Canonicalizes the row span of `vectors` (each of length ambient_dim).
  static Subspace span(int ambient_dim, const std::vector<Vec>& vectors);
  static Subspace zero(int ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return int(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in the RREF basis; nullopt when v is outside the span.
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// Image under a linear map (columns of the result's ambient space).
  Subspace apply(const Mat& m) const;

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }
  bool operator!=(const Subspace& other) const { return !(*this == other); }

private:
  int ambient_;
  std::vector<Vec> basis_;
  std::vector<int> pivots_;
  friend class IncrementalRref;
};

/// All v with m*v = 0, canonical.
Subspace kernel_basis(const Mat& m);

/// Canonical column space of m.
Subspace image_basis(const Mat& m);

/// A quotient Q^n -> Q^n / S with a deterministic section: quotient
/// coordinates are the non-pivot coordinates of S, so projection(section) = id
/// and projection annihilates exactly S.
class QuotientMap {
public:
  QuotientMap() = default;
  QuotientMap(int ambient_dim, Subspace kernel);

  int ambient_dim() const { return ambient_; }
  int quotient_dim() const { return projection_.rows(); }
  const Subspace& kernel() const { return kernel_; }
  const Mat& projection() const { return projection_; }
  const Mat& section() const { return section_; }

  Vec project(const Vec& v) const { return projection_.apply(v); }
  Vec lift(const Vec& w) const { return section_.apply(w); }

private:
  int ambient_ = 0;
  Subspace kernel_;
  Mat projection_; // quotient_dim x ambient_dim
  Mat section_;    // ambient_dim x quotient_dim
};

inline QuotientMap quotient(int ambient_dim, const Subspace& s) { return QuotientMap(ambient_dim, s); }

/// Maintains a fully reduced RREF under streamed row insertion. The final
/// state is the canonical RREF of the span, independent of insertion order.
class IncrementalRref {
public:
  explicit IncrementalRref(int ambient_dim) : ambient_(ambient_dim) {}

  /// Returns true when the row enlarged the span.
  bool insert(Vec v);
  /// Reduces v against the current rows without inserting.
  Vec reduce(Vec v) const;

  int ambient_dim() const { return ambient_; }
  int rank() const { return int(rows_.size()); }
  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }
  Subspace snapshot() const;

private:
  int ambient_;
  std::vector<Vec> rows_;   // pivot columns strictly increasing
  std::vector<int> pivots_;
};

/// Solves m*x = rhs; nullopt when inconsistent. The solution with all free
/// variables set to zero is returned (deterministic).
std::optional<Vec> solve(const Mat& m, const Vec& rhs);

} // namespace homleib

#endif
