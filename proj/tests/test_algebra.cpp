#include "homleib/catalog.hpp"
#include "homleib/homology.hpp"

#include <doctest.h>

using namespace homleib;

TEST_CASE("bracket pinned values") {
  HomLeibnizAlgebra g = nil3_twisted();
  CHECK(g.bracket(vec_unit(3, 0), vec_unit(3, 1)) == vec_unit(3, 2)); // [e1,e2] = e3
  CHECK(vec_is_zero(g.bracket(vec_unit(3, 1), vec_unit(3, 0))));

  HomLeibnizAlgebra ab = abelian_algebra(3, Mat::identity(3));
  CHECK(vec_is_zero(ab.bracket(vec_unit(3, 0), vec_unit(3, 2))));

  HomLeibnizAlgebra h = heisenberg(1);
  Vec v = h.bracket(vec_unit(3, 1), vec_unit(3, 0)); // [y1,x1] = -z
  CHECK(v == Vec{Rat(0), Rat(0), Rat(-1)});

  CHECK_THROWS_AS((void)g.bracket(vec_unit(2, 0), vec_unit(3, 0)), Error);
}

TEST_CASE("validate_algebra accepts the whole catalog") {
  for (const auto& e : catalog()) {
    HomLeibnizAlgebra g = e.build();
    ValidationReport rep = validate_algebra(g);
    CHECK_MESSAGE(rep.empty(), e.id, ": ", rep.empty() ? "" : rep.front().axiom);
  }
}

TEST_CASE("validate_algebra pinpoints the mutated entries") {
  HomLeibnizAlgebra mm = catalog_build("mutant-mult");
  ValidationReport rep = validate_algebra(mm);
  REQUIRE_FALSE(rep.empty());
  CHECK(rep.front().axiom == "multiplicative");
  CHECK(rep.front().indices == std::vector<int>{0, 1});

  HomLeibnizAlgebra mi = catalog_build("mutant-identity");
  rep = validate_algebra(mi);
  REQUIRE_FALSE(rep.empty());
  CHECK(rep.front().axiom == "hom-leibniz");
  CHECK(rep.front().indices == std::vector<int>{0, 0, 1});
  bool saw_321 = false;
  for (const auto& v : rep)
    if (v.indices == std::vector<int>{2, 0, 1}) saw_321 = true;
  CHECK(saw_321); // [alpha(e3),[e1,e2]] = 0 but [[e3,e1],alpha(e2)] = e1
}

TEST_CASE("centers of the twisted 3-dim algebra") {
  HomLeibnizAlgebra g = nil3_twisted();
  Subspace z2 = center(g);
  REQUIRE(z2.dim() == 1);
  CHECK(z2.basis()[0] == vec_unit(3, 2));
  Subspace zl = center(g, CenterMode::left);
  CHECK(zl.dim() == 2);
  CHECK(zl.contains(vec_unit(3, 1)));
  CHECK(zl.contains(vec_unit(3, 2)));
  CHECK(alpha_center(g) == z2);
  // left alpha-center keeps e2 as well
  CHECK(alpha_center(g, CenterMode::left).dim() == 2);

  HomLeibnizAlgebra ab = abelian_algebra(2, Mat(2, 2));
  CHECK(center(ab) == Subspace::full(2));
  CHECK(center(ab, CenterMode::left) == Subspace::full(2));
}

TEST_CASE("alpha-center of the pair cover is the pair span") {
  HomLeibnizAlgebra k = pair_cover(1);
  Subspace za = alpha_center(k);
  REQUIRE(za.dim() == 1);
  CHECK(za.basis()[0] == vec_unit(2, 1)); // e11
}

TEST_CASE("surjective alpha forces alpha-center = center") {
  for (const auto& e : catalog()) {
    HomLeibnizAlgebra g = e.build();
    if (!g.alpha_surjective()) continue;
    CHECK_MESSAGE(alpha_center(g) == center(g), e.id);
  }
}

TEST_CASE("alpha-center is a central ideal across the catalog") {
  for (const auto& e : catalog()) {
    HomLeibnizAlgebra g = e.build();
    Subspace za = alpha_center(g);
    CHECK_MESSAGE(center(g).contains(za), e.id);
    CHECK_MESSAGE(is_ideal(g, za), e.id);
    for (const Vec& v : za.basis())
      for (int j = 0; j < g.dim; ++j) {
        CHECK(vec_is_zero(g.bracket(v, vec_unit(g.dim, j))));
        CHECK(vec_is_zero(g.bracket(vec_unit(g.dim, j), v)));
      }
  }
}

TEST_CASE("higgins commutator") {
  HomLeibnizAlgebra g = nil3_twisted();
  Subspace derived = derived_subalgebra(g);
  REQUIRE(derived.dim() == 1);
  CHECK(derived.basis()[0] == vec_unit(3, 2));

  CHECK(derived_subalgebra(abelian_algebra(2, Mat::identity(2))).dim() == 0);

  // [Z_alpha, g] = 0 and the result is an ideal of both arguments
  for (const auto& e : catalog()) {
    HomLeibnizAlgebra a = e.build();
    Subspace za = alpha_center(a);
    if (!is_ideal(a, za)) continue;
    Subspace comm = higgins_commutator(a, za, Subspace::full(a.dim));
    CHECK_MESSAGE(comm.dim() == 0, e.id);
    Subspace der = derived_subalgebra(a);
    CHECK_MESSAGE(is_ideal(a, der), e.id);
  }

  CHECK_THROWS_AS((void)higgins_commutator(g, Subspace::span(3, {vec_unit(3, 0)}), Subspace::full(3)), Error);
}

TEST_CASE("abelianization") {
  HomLeibnizAlgebra g = nil3_twisted();
  QuotientAlgebra ab = abelianization(g);
  CHECK(ab.algebra.dim == 2);
  CHECK(ab.algebra.is_abelian());
  // induced alpha: [e1] -> 0, [e2] -> [e2]
  CHECK(ab.algebra.alpha.col(0) == Vec{Rat(0), Rat(0)});
  CHECK(ab.algebra.alpha.col(1) == Vec{Rat(0), Rat(1)});
  CHECK(validate_morphism(ab.projection).empty());

  HomLeibnizAlgebra a = abelian_algebra(2, Mat::identity(2));
  CHECK(abelianization(a).algebra.dim == 2);

  CHECK(abelianization(heisenberg(1)).algebra.dim == 2);
}

TEST_CASE("quotient algebras") {
  HomLeibnizAlgebra g = nil3_twisted();
  QuotientAlgebra q0 = quotient_algebra(g, Subspace::zero(3));
  CHECK(q0.algebra.dim == 3);
  CHECK(q0.algebra.sc == g.sc);

  QuotientAlgebra qf = quotient_algebra(g, Subspace::full(3));
  CHECK(qf.algebra.dim == 0);

  QuotientAlgebra qz = quotient_algebra(g, Subspace::span(3, {vec_unit(3, 2)}));
  CHECK(qz.algebra.dim == 2);
  CHECK(qz.algebra.is_abelian());
  CHECK(vec_is_zero(qz.algebra.alpha.col(0)));

  // non-ideal input rejected: span{e1} is not alpha-invariant
  CHECK_THROWS_AS((void)quotient_algebra(g, Subspace::span(3, {vec_unit(3, 0)})), Error);
}

TEST_CASE("direct sums") {
  HomLeibnizAlgebra s = direct_sum(abelian_algebra(1, Mat::identity(1)), abelian_algebra(1, Mat::identity(1)));
  CHECK(s.dim == 2);
  CHECK(s.is_abelian());

  HomLeibnizAlgebra t = direct_sum(nil3_twisted(), abelian_algebra(1, Mat::identity(1)));
  CHECK(t.dim == 4);
  CHECK(center(t).dim() == 2);
  CHECK(validate_algebra(t).empty());

  HomLeibnizAlgebra u = direct_sum(heisenberg(1), heisenberg(1));
  CHECK(u.dim == 6);
  CHECK(derived_subalgebra(u).dim() == 2);
}

TEST_CASE("perfectness") {
  CHECK(is_perfect(sl2()));
  CHECK_FALSE(is_perfect(abelian_algebra(1, Mat::identity(1))));
  CHECK_FALSE(is_perfect(nil3_twisted()));
}

TEST_CASE("morphism validation and composition") {
  HomLeibnizAlgebra g = nil3_twisted();
  QuotientAlgebra ab = abelianization(g);
  Morphism pi = ab.projection;
  CHECK(validate_morphism(pi).empty());

  // quotient of the abelianization by its first coordinate (alpha kills it)
  QuotientAlgebra next = quotient_algebra(ab.algebra, Subspace::span(2, {vec_unit(2, 0)}));
  Morphism comp = compose(next.projection, pi);
  CHECK(validate_morphism(comp).empty());
  CHECK(comp.matrix.rows() == 1);

  // a non-equivariant matrix is rejected
  Morphism bad{g, g, Mat::identity(3)};
  bad.matrix.at(0, 0) = 2;
  CHECK_FALSE(validate_morphism(bad).empty());
}

TEST_CASE("basis transport preserves validity") {
  HomLeibnizAlgebra g = heisenberg(1);
  Mat p(3, 3);
  p.at(0, 1) = 1;
  p.at(1, 2) = 1;
  p.at(2, 0) = 1;
  HomLeibnizAlgebra t = transport_basis(g, p);
  CHECK(validate_algebra(t).empty());
  CHECK(center(t).dim() == center(g).dim());
}
