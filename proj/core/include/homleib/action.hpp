#ifndef HOMLEIB_ACTION_HPP
#define HOMLEIB_ACTION_HPP

#include "homleib/algebra.hpp"

namespace homleib {

/// A Hom-Leibniz action of `actor` M on `actee` N: bilinear maps
/// M x N -> N (left, m acting from the left) and N x M -> N (right),
/// subject to axioms (A1)-(A8).
struct HomAction {
  HomLeibnizAlgebra actor;
  HomLeibnizAlgebra actee;
  // left[i][j]  = coordinates in N of (basis m_i acting on basis n_j from the left)
  // right[j][i] = coordinates in N of (basis n_j acted on the right by basis m_i)
  std::vector<std::vector<Vec>> left;
  std::vector<std::vector<Vec>> right;

  static HomAction trivial(const HomLeibnizAlgebra& actor, const HomLeibnizAlgebra& actee);

  /// Bilinear extensions.
  Vec act_left(const Vec& m, const Vec& n) const;
  Vec act_right(const Vec& n, const Vec& m) const;
};

/// Checks axioms (A1)-(A8) on all basis tuples. Violations carry the axiom id
/// and the basis indices in the axiom's own variable order.
ValidationReport validate_action(const HomAction& a);

/// The action of g on an ideal (or of a subalgebra on an ideal) by the
/// bracket, expressed in the subspaces' own coordinates.
HomAction action_by_bracket(const HomLeibnizAlgebra& g, const Subalgebra& actor, const Subalgebra& actee);

/// Self-action of g by its product.
HomAction self_action(const HomLeibnizAlgebra& g);

struct SemidirectProduct {
  HomLeibnizAlgebra algebra; // carrier M (+) G, M block first
  Morphism include_actee;    // M -> M x| G, an ideal
  Morphism include_actor;    // G -> M x| G, a subalgebra
  Morphism project_actor;    // M x| G -> G
};

/// [(m1,x1),(m2,x2)] = ([m1,m2] + {alpha(x1)}m2 + m1{alpha(x2)}, [x1,x2]).
/// Requires validate_action(a) empty.
SemidirectProduct semidirect_product(const HomAction& a);

/// Two crossed modules mu1: M -> G, mu2: N -> G over a common base, with the
/// base actions they are equivariant for. M and N then act on each other
/// through G; those derived actions feed the tensor-product construction.
struct CrossedModulePair {
  HomLeibnizAlgebra base;
  HomLeibnizAlgebra m, n;
  Mat mu1, mu2;           // base.dim x m.dim, base.dim x n.dim
  HomAction action_on_m;  // base acting on m
  HomAction action_on_n;  // base acting on n

  Vec base_on_m_left(const Vec& x, const Vec& m_vec) const { return action_on_m.act_left(x, m_vec); }
  Vec base_on_m_right(const Vec& m_vec, const Vec& x) const { return action_on_m.act_right(m_vec, x); }
  Vec base_on_n_left(const Vec& x, const Vec& n_vec) const { return action_on_n.act_left(x, n_vec); }
  Vec base_on_n_right(const Vec& n_vec, const Vec& x) const { return action_on_n.act_right(n_vec, x); }

  // Mutual actions through the structure maps.
  Vec m_on_n_left(const Vec& m_vec, const Vec& n_vec) const { return base_on_n_left(mu1.apply(m_vec), n_vec); }
  Vec m_on_n_right(const Vec& n_vec, const Vec& m_vec) const { return base_on_n_right(n_vec, mu1.apply(m_vec)); }
  Vec n_on_m_left(const Vec& n_vec, const Vec& m_vec) const { return base_on_m_left(mu2.apply(n_vec), m_vec); }
  Vec n_on_m_right(const Vec& m_vec, const Vec& n_vec) const { return base_on_m_right(m_vec, mu2.apply(n_vec)); }
};

/// Equivariance and Peiffer identities for both structure maps, morphism
/// checks, and axioms (A1)-(A8) for the derived mutual actions.
ValidationReport validate_crossed_module(const CrossedModulePair& p);

/// Inclusion crossed modules for two ideals of g (the self pair when both
/// subspaces are the full space), with the bracket actions.
CrossedModulePair pair_from_ideals(const HomLeibnizAlgebra& g, const Subspace& m_space, const Subspace& n_space);

CrossedModulePair self_pair(const HomLeibnizAlgebra& g);

} // namespace homleib

#endif
