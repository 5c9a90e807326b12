#ifndef HOMLEIB_PRODUCTS_HPP
#define HOMLEIB_PRODUCTS_HPP

#include "homleib/action.hpp"
#include "homleib/homology.hpp"

namespace homleib {

enum class ProductKind { tensor, exterior };

/// A non-abelian tensor or exterior product realized as an explicit quotient
/// Q of the generator space F = (M(x)N) (+) (N(x)M). Generator (i,j) of the
/// first summand is m_i * n_j, generator (j,i) of the second is n_j * m_i.
/// The bracket on Q is the bilinear lift B(u,v) = lambda_M(u) (x) lambda_N(v)
/// placed in the first summand (the leading representative of the product
/// relations), verified to respect the relation space.
struct ProductPresentation {
  CrossedModulePair pair;
  ProductKind kind = ProductKind::tensor;
  HomLeibnizAlgebra total;

  Mat proj;    // total.dim x dim F
  Mat section; // dim F x total.dim
  Subspace relation_space; // in F; for the exterior kind includes the square lifts
  Subspace square_space;   // classes of the square generators in the *tensor* quotient
  int tensor_dim = 0;      // dim of the tensor quotient (pre-square)

  Mat lambda;   // commutator map into the base
  Mat lambda_m; // into M
  Mat lambda_n; // into N
  std::vector<std::string> gen_labels;

  int dim() const { return total.dim; }
  int carrier_dim() const { return proj.cols(); }
  int mn_offset() const { return pair.m.dim * pair.n.dim; }
};

/// Canonical span of all instances of the linear defining relations
/// (3a)-(4d) and the generator identifications hidden in (5a)-(5d),
/// enumerated over basis tuples.
Subspace relation_span(const CrossedModulePair& p);

ProductPresentation tensor_product(const CrossedModulePair& p, long cap = kDefaultCap);
ProductPresentation exterior_product(const CrossedModulePair& p, long cap = kDefaultCap);

/// The span (inside the tensor quotient q) of the classes m_a * n_b - n_a * m_b
/// over basis pairs of P = {(m,n) : mu1(m) = mu2(n)}.
Subspace square_subspace(const ProductPresentation& q);

ProductPresentation tensor_square(const HomLeibnizAlgebra& g, long cap = kDefaultCap);
ProductPresentation exterior_square(const HomLeibnizAlgebra& g, long cap = kDefaultCap);

/// Kernel of the commutator map, i.e. JL2 for a tensor square and the Schur
/// multiplier / HL2 realization for an exterior square.
Subspace commutator_kernel(const ProductPresentation& q);

/// The action of the base on the product from the four generator formulas,
/// checked against (A1)-(A8) and the lambda-compatibility identities.
struct GuestAction {
  HomAction action;
  ValidationReport report;
};
GuestAction guest_action(const ProductPresentation& q);

/// Generator-wise map k1*k2 -> f(k1)*f(k2) between self products, descended
/// to the quotients; verifies that relations map into relations.
Mat induced_product_map(const Morphism& f, ProductKind kind, long cap = kDefaultCap);

struct CheckItem {
  std::string name;
  bool applicable = true;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool all_passed() const {
    for (const auto& it : items)
      if (it.applicable && !it.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string detail = "") {
    items.push_back({std::move(name), true, pass, std::move(detail)});
  }
  void add_na(std::string name) { items.push_back({std::move(name), false, false, "not applicable"}); }
};

/// Exactness of (M ^ K) -> (K ^ K) ->> (G ^ G) for an ideal M of K.
CheckReport ideal_sequence_check(const HomLeibnizAlgebra& k, const Subspace& m_space, long cap = kDefaultCap);

/// For a validated action of G on M: M ^ (MxG) embeds into (MxG) ^ (MxG)
/// and the dimensions add up.
CheckReport split_injectivity_check(const HomAction& a, long cap = kDefaultCap);

/// Perfect-algebra package: the exterior square is perfect, the commutator
/// kernel is central, tensor and exterior squares coincide, and the kernel
/// has the homology dimension.
CheckReport perfect_checks(const HomLeibnizAlgebra& g, long cap = kDefaultCap);

/// The computable right-hand segment of the eight-term sequence
///   ker(M^K -> K) -> HL2(K) -> HL2(G) -> M/[M,K] -> HL1(K) ->> HL1(G),
/// with exactness verified at the four interior nodes by rank arithmetic.
/// When a splitting eta (a morphism G -> K with proj . eta = id) is supplied,
/// additionally verifies the short exact sequence
///   ker(M^K -> K) >-> HL2(K) ->> HL2(G).
CheckReport eight_term_check(const HomLeibnizAlgebra& k, const Subspace& m_space,
                             const Mat* eta = nullptr, long cap = kDefaultCap);

/// Direct-sum dimension formulas for JL2 and HL2, including the
/// surjective-endomorphism refinement when it applies.
CheckReport direct_sum_formulas_check(const HomLeibnizAlgebra& g1, const HomLeibnizAlgebra& g2,
                                      long cap = kDefaultCap);

} // namespace homleib

#endif
