#ifndef HOMLEIB_HOMOLOGY_HPP
#define HOMLEIB_HOMOLOGY_HPP

#include "homleib/algebra.hpp"

namespace homleib {

/// Default bound on the number of entries of a tensor-power coordinate
/// space (boundary domains, product carriers).
inline constexpr long kDefaultCap = 20000;

/// Matrix of d_n : g^(x)n -> g^(x)(n-1) on the lexicographically ordered
/// tensor basis. Degrees 2 and 3 use the explicit commutator forms
/// d2(x(x)y) = [x,y] and
/// d3(x(x)y(x)z) = -[x,y](x)a(z) + a(x)(x)[y,z] + [x,z](x)a(y);
/// higher degrees use the general alternating double sum (which agrees with
/// d3 and differs from d2 by an overall sign that homology cannot see).
Mat boundary_matrix(const HomLeibnizAlgebra& g, int n);

/// The general-formula variant at every degree (d2 negated); kept for the
/// sign-convention regression test.
Mat boundary_matrix_general(const HomLeibnizAlgebra& g, int n);

/// Boundaries d_1 .. d_{N+1} with trivial coefficients; d_1 is the zero map
/// dim -> 0. Construction verifies d_n . d_{n+1} = 0 and throws an integrity
/// error otherwise.
struct ChainComplexSlice {
  const HomLeibnizAlgebra* algebra = nullptr;
  int max_degree = 0;
  std::vector<Mat> boundaries; // boundaries[n-1] = d_n, n = 1..N+1

  const Mat& d(int n) const { return boundaries.at(size_t(n) - 1); }
};

ChainComplexSlice chain_complex(const HomLeibnizAlgebra& g, int max_degree, long cap = kDefaultCap);

/// ker(d_n)/im(d_{n+1}) with a deterministic representative basis (RREF of
/// the kernel, reduced modulo the image) and the endomorphism induced by
/// alpha^(x)n on classes.
struct HomologyResult {
  int degree = 0;
  int dimension = 0;
  std::vector<Vec> representatives; // vectors in g^(x)n coordinates
  Mat induced_endo;                 // dimension x dimension

  // transport data: class coordinates of any cycle
  Subspace cycles;     // ker d_n
  Subspace boundaries; // im d_{n+1}
  QuotientMap classes; // on kernel coordinates
};

HomologyResult homology(const HomLeibnizAlgebra& g, int n, long cap = kDefaultCap);

/// Class coordinates of a cycle z in hom's basis.
Vec homology_class(const HomologyResult& hom, const Vec& cycle);

int hl_dim(const HomLeibnizAlgebra& g, int n, long cap = kDefaultCap);

/// Matrix of the map induced by f^(x)n on classes. Verifies the chain-map
/// property f^(x)(n-1) . d_n = d_n . f^(x)n first.
Mat induced_map_on_homology(const Morphism& f, int n, long cap = kDefaultCap);

} // namespace homleib

#endif
