#ifndef HOMLEIB_ALGEBRA_HPP
#define HOMLEIB_ALGEBRA_HPP

#include "homleib/linalg.hpp"

#include <string>
#include <vector>

namespace homleib {

/// One violated axiom instance: which axiom, at which basis indices, and the
/// residual vector (LHS - RHS) that should have been zero.
struct Violation {
  std::string axiom;
  std::vector<int> indices;
  Vec residual;
};

using ValidationReport = std::vector<Violation>;

/// A finite-dimensional Hom-Leibniz algebra over Q: structure constants
/// sc[i][j] = coordinates of [e_i, e_j], and the companion endomorphism
/// alpha (columns are images of basis vectors).
struct HomLeibnizAlgebra {
  std::string name;
  int dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<std::vector<Vec>> sc;
  Mat alpha;

  static HomLeibnizAlgebra make(std::string name, int dim);

  const Vec& bracket_basis(int i, int j) const { return sc[i][j]; }

  /// Bilinear extension of the structure constants.
  Vec bracket(const Vec& x, const Vec& y) const;

  Vec alpha_apply(const Vec& v) const { return alpha.apply(v); }

  bool is_abelian() const;
  bool alpha_surjective() const;
  bool alpha_injective() const;
  bool is_regular() const { return alpha_surjective() && alpha_injective(); }

  std::string label(int i) const;
};

enum class CenterMode { two_sided, left };

/// Empty report iff the Hom-Leibniz identity holds on all basis triples and
/// alpha preserves the product on all basis pairs.
ValidationReport validate_algebra(const HomLeibnizAlgebra& g);

/// two_sided: {x : [x,y] = [y,x] = 0 for all y}; left drops the second
/// condition. Computed as the kernel of a stacked matrix.
Subspace center(const HomLeibnizAlgebra& g, CenterMode mode = CenterMode::two_sided);

/// Largest subspace whose alpha-iterates all stay central: the decreasing
/// chain W_k = {x : alpha^j(x) central for all j <= k}, stopped at the first
/// stabilization (within dim steps).
Subspace alpha_center(const HomLeibnizAlgebra& g, CenterMode mode = CenterMode::two_sided);

/// Intersection of all alpha^{-k}(S), k >= 0, by the same decreasing chain.
Subspace alpha_stable_core(const Subspace& s, const Mat& alpha);

struct SubIdeal {
  Subspace space;
  bool is_ideal = false;
};

bool is_subalgebra(const HomLeibnizAlgebra& g, const Subspace& s);
bool is_ideal(const HomLeibnizAlgebra& g, const Subspace& s);

/// Smallest subalgebra containing all [x,y], x in h, y in k: span-closure
/// under the bracket and alpha until stable.
Subspace higgins_commutator(const HomLeibnizAlgebra& g, const Subspace& h, const Subspace& k);

/// [g,g] as a subspace.
Subspace derived_subalgebra(const HomLeibnizAlgebra& g);

bool is_perfect(const HomLeibnizAlgebra& g);

/// An algebra homomorphism commuting with the endomorphisms.
struct Morphism {
  HomLeibnizAlgebra source;
  HomLeibnizAlgebra target;
  Mat matrix;

  Vec apply(const Vec& v) const { return matrix.apply(v); }
};

ValidationReport validate_morphism(const Morphism& f);
Morphism compose(const Morphism& g_after, const Morphism& f_first);

struct QuotientAlgebra {
  HomLeibnizAlgebra algebra;
  Morphism projection;
  QuotientMap map;
};

/// Pushes structure constants and alpha through the quotient by an ideal.
QuotientAlgebra quotient_algebra(const HomLeibnizAlgebra& g, const Subspace& ideal,
                                 const std::string& name = "");

/// Quotient by [g,g]; the result has zero bracket and the induced alpha.
QuotientAlgebra abelianization(const HomLeibnizAlgebra& g);

HomLeibnizAlgebra direct_sum(const HomLeibnizAlgebra& a, const HomLeibnizAlgebra& b);

/// Restricts g to a bracket-closed, alpha-invariant subspace, in the
/// subspace's own RREF coordinates. Also returns the embedding matrix.
struct Subalgebra {
  HomLeibnizAlgebra algebra;
  Mat embed; // g.dim x algebra.dim
};
Subalgebra subalgebra_from_subspace(const HomLeibnizAlgebra& g, const Subspace& s,
                                    const std::string& name = "");

/// Change of basis: structure constants and alpha conjugated by p (columns of
/// p are the new basis vectors, p invertible).
HomLeibnizAlgebra transport_basis(const HomLeibnizAlgebra& g, const Mat& p);

} // namespace homleib

#endif
