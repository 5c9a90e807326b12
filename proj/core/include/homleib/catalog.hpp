#ifndef HOMLEIB_CATALOG_HPP
#define HOMLEIB_CATALOG_HPP

#include "homleib/products.hpp"

#include <functional>
#include <map>

namespace homleib {

/// A named deterministic constructor plus its regression contract: cheap
/// invariants re-verified on every build.
struct CatalogEntry {
  std::string id;
  std::string description;
  bool expected_valid = true;
  std::function<HomLeibnizAlgebra()> build;
  std::map<std::string, long> expected; // invariant name -> value
};

/// All positive entries (algebras expected to validate).
const std::vector<CatalogEntry>& catalog();

/// Deliberately broken entries for the negative tests.
const std::vector<CatalogEntry>& catalog_negatives();

std::vector<std::string> catalog_ids();

/// Builds by id, searching positives then negatives. Throws a precondition
/// error for unknown ids.
HomLeibnizAlgebra catalog_build(const std::string& id);
const CatalogEntry& catalog_entry(const std::string& id);

/// Re-verifies an entry's expected-values map.
CheckReport verify_expected(const CatalogEntry& entry);

// --- parameterized builders -------------------------------------------------

HomLeibnizAlgebra abelian_algebra(int n, const Mat& alpha, const std::string& name = "");

/// [e1,e2] = e3 with alpha(e1) = e3, alpha(e2) = e2, alpha(e3) = 0.
HomLeibnizAlgebra nil3_twisted();

/// The cover of an abelian algebra of dimension n (alpha the identity):
/// basis {e_i, e_jk}, [e_j,e_k] = e_jk, alpha multiplicative on the e_jk.
HomLeibnizAlgebra pair_cover(int base_dim);

/// Adjoins one t per central basis vector of an algebra with zero
/// endomorphism, bracketing the center into the t's against the lowest
/// non-central basis direction.
HomLeibnizAlgebra t_extension(const HomLeibnizAlgebra& g);

/// Heisenberg algebra of dimension 2n+1 as a Hom-Lie instance, alpha = id.
HomLeibnizAlgebra heisenberg(int n);

/// sl2 with [e,f] = h, [h,e] = 2e, [h,f] = -2f, antisymmetric, alpha = id.
HomLeibnizAlgebra sl2();

/// Degree-<=d truncation of the free multiplicative algebra over a Hom-vector
/// space (V, A): carrier (+)_{n<=d} V^(x)n / I_n where I_n is spanned by all
/// paddings of A(x).(y.z) - (x.y).A(z) + (x.z).A(y), the product is
/// concatenation reduced modulo the relations, degrees above d are killed.
HomLeibnizAlgebra free_nilpotent(int v_dim, const Mat& a, int degree, long cap = kDefaultCap);

/// Seed-deterministic composite algebras (direct sums and central quotients
/// of catalog entries) for test sweeps.
std::vector<HomLeibnizAlgebra> combinator_sweep(unsigned long seed, int count);

} // namespace homleib

#endif
