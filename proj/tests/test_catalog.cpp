#include "homleib/catalog.hpp"
#include "homleib/homology.hpp"

#include <doctest.h>

using namespace homleib;

namespace {

// Independent oracle: the degree-n relation component of the truncated free
// algebra by direct enumeration with a local elimination, no IncrementalRref.
int free_ideal_component_rank(int v_dim, const Mat& a, int n) {
  auto tensor = [](const Vec& x, const Vec& y) {
    Vec out(x.size() * y.size(), Rat(0));
    for (size_t i = 0; i < x.size(); ++i)
      for (size_t j = 0; j < y.size(); ++j) out[i * y.size() + j] = x[i] * y[j];
    return out;
  };
  std::vector<Mat> apow{Mat::identity(1)};
  for (int t = 1; t <= n; ++t) apow.push_back(apow.back().kron(a));
  long pow = 1;
  std::vector<long> dims(n + 1, 1);
  for (int t = 1; t <= n; ++t) dims[t] = (pow *= v_dim);

  std::vector<Vec> rows;
  for (int pu = 0; pu + 3 <= n; ++pu)
    for (int i = 1; pu + i + 2 <= n; ++i)
      for (int j = 1; pu + i + j + 1 <= n; ++j)
        for (int k = 1; pu + i + j + k <= n; ++k) {
          int qw = n - pu - i - j - k;
          for (long u = 0; u < dims[pu]; ++u)
            for (long x = 0; x < dims[i]; ++x)
              for (long y = 0; y < dims[j]; ++y)
                for (long z = 0; z < dims[k]; ++z)
                  for (long w = 0; w < dims[qw]; ++w) {
                    Vec ux = vec_unit(int(dims[i]), int(x));
                    Vec uy = vec_unit(int(dims[j]), int(y));
                    Vec uz = vec_unit(int(dims[k]), int(z));
                    Vec gen = tensor(apow[i].apply(ux), tensor(uy, uz));
                    gen = vec_sub(gen, tensor(ux, tensor(uy, apow[k].apply(uz))));
                    gen = vec_add(gen, tensor(ux, tensor(uz, apow[j].apply(uy))));
                    rows.push_back(tensor(vec_unit(int(dims[pu]), int(u)), tensor(gen, vec_unit(int(dims[qw]), int(w)))));
                  }
        }
  // plain Gaussian elimination, written independently of the library path
  int rank = 0;
  size_t cols = size_t(dims[n]);
  for (size_t col = 0; col < cols && rank < int(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < int(rows.size()); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < int(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rat f = rows[r][col] / rows[rank][col];
      for (size_t c2 = 0; c2 < cols; ++c2) rows[r][c2] -= f * rows[rank][c2];
    }
    ++rank;
  }
  return rank;
}

} // namespace

TEST_CASE("catalog has at least 12 entries and they all build") {
  CHECK(catalog().size() >= 12);
  for (const auto& e : catalog()) {
    HomLeibnizAlgebra g = e.build();
    CHECK_MESSAGE(g.dim > 0, e.id);
  }
  CHECK(catalog_negatives().size() >= 2);
  CHECK_THROWS_AS((void)catalog_build("no-such-entry"), Error);
}

TEST_CASE("regression contract: expected values verified on build") {
  for (const auto& e : catalog()) {
    CheckReport rep = verify_expected(e);
    for (const auto& it : rep.items) CHECK_MESSAGE(it.pass, it.name, " ", it.detail);
  }
  for (const auto& e : catalog_negatives()) {
    CheckReport rep = verify_expected(e);
    for (const auto& it : rep.items) CHECK_MESSAGE(it.pass, it.name);
  }
}

TEST_CASE("nil3t structure pinned") {
  HomLeibnizAlgebra g = catalog_build("nil3t");
  CHECK(g.dim == 3);
  CHECK(g.sc[0][1] == vec_unit(3, 2));
  CHECK(g.alpha.col(0) == vec_unit(3, 2)); // alpha(e1) = e3
  CHECK(g.alpha.col(1) == vec_unit(3, 1));
  CHECK(vec_is_zero(g.alpha.col(2)));
}

TEST_CASE("pair-cover structure") {
  HomLeibnizAlgebra k = pair_cover(1);
  CHECK(k.dim == 2);
  CHECK(k.sc[0][0] == vec_unit(2, 1)); // [e1,e1] = e11
  CHECK(alpha_center(k).basis()[0] == vec_unit(2, 1));
  CHECK(pair_cover(2).dim == 6);
  CHECK_THROWS_AS((void)pair_cover(0), Error);
}

TEST_CASE("t-extension and its cover property") {
  HomLeibnizAlgebra base = nil3_twisted();
  base.alpha = Mat(3, 3);
  HomLeibnizAlgebra k = t_extension(base);
  CHECK(k.dim == 4);
  CHECK(k.alpha.is_zero());
  CHECK(validate_algebra(k).empty());
  // K / Z_alpha(K) recovers the input up to the adapted basis
  Subspace za = alpha_center(k);
  REQUIRE(za.dim() == 1);
  QuotientAlgebra q = quotient_algebra(k, za);
  CHECK(q.algebra.dim == 3);
  CHECK(derived_subalgebra(q.algebra).dim() == derived_subalgebra(base).dim());

  CHECK_THROWS_AS((void)t_extension(nil3_twisted()), Error);       // alpha nonzero
  CHECK_THROWS_AS((void)t_extension(abelian_algebra(2, Mat(2, 2))), Error); // center not proper
}

TEST_CASE("heisenberg entries are Hom-Lie") {
  for (int n : {1, 2}) {
    HomLeibnizAlgebra h = heisenberg(n);
    CHECK(h.dim == 2 * n + 1);
    for (int i = 0; i < h.dim; ++i)
      for (int j = 0; j < h.dim; ++j) CHECK(h.sc[i][j] == vec_scale(h.sc[j][i], Rat(-1)));
    CHECK(validate_algebra(h).empty());
  }
  CHECK_THROWS_AS((void)heisenberg(0), Error);
}

TEST_CASE("free nilpotent truncations") {
  HomLeibnizAlgebra f1 = free_nilpotent(1, Mat::identity(1), 2);
  CHECK(f1.dim == 2);
  CHECK(f1.sc[0][0] == vec_unit(2, 1)); // [v,v] = v.v
  CHECK(vec_is_zero(f1.sc[0][1]));      // degree 3 is killed

  CHECK(free_nilpotent(2, Mat::identity(2), 2).dim == 6);

  // identity alpha collapses the whole degree-3 component; the oracle
  // enumerates the relation span independently
  CHECK(free_ideal_component_rank(2, Mat::identity(2), 3) == 8);
  CHECK(free_nilpotent(2, Mat::identity(2), 3).dim == 6);

  // a nilpotent alpha leaves part of degree 3 alive
  Mat a(2, 2);
  a.at(0, 1) = 1;
  int deg3_rank = free_ideal_component_rank(2, a, 3);
  CHECK(deg3_rank == 4);
  HomLeibnizAlgebra f3 = free_nilpotent(2, a, 3);
  CHECK(f3.dim == 2 + 4 + (8 - deg3_rank));
  CHECK(validate_algebra(f3).empty());

  CHECK_THROWS_AS((void)free_nilpotent(2, Mat::identity(2), 5, 20), Error); // carrier 62 > cap 20
}

TEST_CASE("combinator entries") {
  HomLeibnizAlgebra s = catalog_build("sum(nil3t,abelian(1))");
  CHECK(s.dim == 4);
  HomLeibnizAlgebra q = catalog_build("quot(nil3t,z)");
  CHECK(q.dim == 2);
  CHECK(q.is_abelian());
  CHECK(vec_is_zero(q.alpha.col(0)));
  HomLeibnizAlgebra sd = catalog_build("semidirect(nil3t)");
  CHECK(sd.dim == 3);
  CHECK(validate_algebra(sd).empty());
}

TEST_CASE("combinator sweep is seed-deterministic and valid") {
  auto a = combinator_sweep(99, 5);
  auto b = combinator_sweep(99, 5);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].dim == b[i].dim);
    CHECK(validate_algebra(a[i]).empty());
  }
  auto c = combinator_sweep(100, 5);
  bool same = true;
  for (size_t i = 0; i < a.size() && i < c.size(); ++i) same &= a[i].name == c[i].name;
  CHECK_FALSE(same);
}
