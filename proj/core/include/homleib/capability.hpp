#ifndef HOMLEIB_CAPABILITY_HPP
#define HOMLEIB_CAPABILITY_HPP

#include "homleib/products.hpp"

#include <optional>

namespace homleib {

/// The four centers of an algebra plus the capability verdict. A non-capable
/// verdict carries a nonzero exterior-center witness.
struct CenterReport {
  Subspace z;       // two-sided center
  Subspace z_alpha; // alpha-center
  Subspace z_star;  // tensor center
  Subspace z_wedge; // exterior center
  bool capable = false;
  std::optional<Vec> witness;
};

/// Elements x whose alpha-iterates pair to zero with everything in g*g,
/// on both sides and in both generator families.
Subspace tensor_center(const HomLeibnizAlgebra& g, long cap = kDefaultCap);

/// Same stabilized intersection computed in the exterior square.
Subspace exterior_center(const HomLeibnizAlgebra& g, long cap = kDefaultCap);

/// Capability is decided by the vanishing of the exterior center.
std::pair<bool, CenterReport> is_capable(const HomLeibnizAlgebra& g, long cap = kDefaultCap);

/// Evaluates every capability criterion whose hypotheses the algebra
/// satisfies and cross-checks against the exterior-center verdict:
///   (a) perfect + surjective alpha: capable iff Z = 0
///   (b) perfect: capable iff Z_alpha inside ker(alpha)
///   (c) non-perfect + non-surjective alpha: capable
///   (d) surjective alpha: both pairing centers inside [g,g]
///   (e) for a regular direct sum (summands supplied): capable(g) implies
///       capable of both parts, and the exterior center embeds blockwise.
CheckReport capability_consistency_suite(const HomLeibnizAlgebra& g,
                                         const HomLeibnizAlgebra* summand1 = nullptr,
                                         const HomLeibnizAlgebra* summand2 = nullptr,
                                         long cap = kDefaultCap);

/// For a central alpha-invariant subalgebra n: n lies in the exterior center
/// iff dim HL2(g/n) = dim HL2(g) + dim(n cap [g,g]); the induced map
/// HL2(g) -> HL2(g/n) is injective exactly in that case.
CheckReport smallest_center_characterization_check(const HomLeibnizAlgebra& g, const Subspace& n,
                                                   long cap = kDefaultCap);

} // namespace homleib

#endif
