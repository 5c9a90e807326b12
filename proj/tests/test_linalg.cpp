#include "homleib/linalg.hpp"

#include <doctest.h>

using namespace homleib;

namespace {

Mat mat2(std::initializer_list<std::initializer_list<long>> rows) {
  int r = int(rows.size());
  int c = r == 0 ? 0 : int(rows.begin()->size());
  Mat m(r, c);
  int i = 0;
  for (auto& row : rows) {
    int j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

Vec qvec(std::initializer_list<long> vals) {
  Vec v;
  for (long x : vals) v.push_back(Rat(x));
  return v;
}

// deterministic rational pseudo-noise
Rat noise(unsigned long& state) {
  state = state * 6364136223846793005ULL + 1442695040888963407ULL;
  long num = long((state >> 40) % 13) - 6;
  long den = 1 + long((state >> 20) % 4);
  return rat_of(num, den);
}

} // namespace

TEST_CASE("rref pinned examples") {
  auto [r1, p1] = rref(mat2({{2, 4}, {1, 2}}));
  CHECK(r1 == mat2({{1, 2}, {0, 0}}));
  CHECK(p1 == std::vector<int>{0});

  auto [r2, p2] = rref(Mat::identity(3));
  CHECK(r2 == Mat::identity(3));
  CHECK(p2 == std::vector<int>{0, 1, 2});

  auto [r3, p3] = rref(mat2({{0, 1}, {1, 0}}));
  CHECK(r3 == Mat::identity(2));
  CHECK(p3 == std::vector<int>{0, 1});
}

TEST_CASE("kernel and image pinned examples") {
  CHECK(kernel_basis(Mat(2, 2)).dim() == 2);
  CHECK(kernel_basis(Mat::identity(3)).dim() == 0);
  Subspace k = kernel_basis(mat2({{1, 1}}));
  REQUIRE(k.dim() == 1);
  CHECK(k.basis()[0] == qvec({1, -1}));

  CHECK(image_basis(Mat(3, 2)).dim() == 0);
  CHECK(image_basis(Mat::identity(2)) == Subspace::full(2));
  Subspace im = image_basis(mat2({{1}, {2}}));
  REQUIRE(im.dim() == 1);
  CHECK(im.basis()[0] == qvec({1, 2}));
}

TEST_CASE("subspace operations") {
  Subspace x = Subspace::span(2, {qvec({1, 0})});
  Subspace y = Subspace::span(2, {qvec({0, 1})});
  CHECK(x.sum(y) == Subspace::full(2));

  Subspace s = Subspace::span(3, {qvec({1, 2, 0}), qvec({0, 0, 1})});
  CHECK(s.intersect(s) == s);

  Subspace full2 = Subspace::span(2, {qvec({1, 0}), qvec({0, 1})});
  Subspace diag = Subspace::span(2, {qvec({1, 1})});
  CHECK(full2.intersect(diag) == diag);

  CHECK(s.contains(qvec({2, 4, 5})));
  CHECK_FALSE(s.contains(qvec({1, 0, 0})));
  CHECK_THROWS_AS((void)x.sum(s), Error);
}

TEST_CASE("subspace canonicity is idempotent") {
  Subspace s = Subspace::span(3, {qvec({2, 4, 6}), qvec({1, 2, 4})});
  Subspace again = Subspace::span(3, s.basis());
  CHECK(s == again);
  // pivot columns strictly increase
  for (size_t i = 1; i < s.pivots().size(); ++i) CHECK(s.pivots()[i - 1] < s.pivots()[i]);
}

TEST_CASE("quotient maps") {
  QuotientMap q0(3, Subspace::zero(3));
  CHECK(q0.quotient_dim() == 3);
  CHECK(q0.projection() == Mat::identity(3));

  QuotientMap qf(3, Subspace::full(3));
  CHECK(qf.quotient_dim() == 0);

  QuotientMap q(2, Subspace::span(2, {qvec({1, 1})}));
  CHECK(q.quotient_dim() == 1);
  CHECK(vec_is_zero(q.project(qvec({1, 1}))));
  // projection . section = identity
  CHECK(q.projection().mul(q.section()) == Mat::identity(1));
}

TEST_CASE("rank-nullity and projection kernel on random rational matrices") {
  unsigned long state = 2024;
  for (int trial = 0; trial < 20; ++trial) {
    int rows = 1 + int(state % 5), cols = 1 + int((state >> 7) % 6);
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = noise(state);
    Subspace ker = kernel_basis(m);
    Subspace im = image_basis(m);
    CHECK(im.dim() + ker.dim() == cols);
    for (const Vec& v : ker.basis()) CHECK(vec_is_zero(m.apply(v)));

    QuotientMap q(cols, ker);
    for (const Vec& v : ker.basis()) CHECK(vec_is_zero(q.project(v)));
    // a random vector is killed iff it lies in the kernel
    Vec v(cols);
    for (int j = 0; j < cols; ++j) v[j] = noise(state);
    CHECK(vec_is_zero(q.project(v)) == ker.contains(v));

    // exact arithmetic: every rref entry is in canonical form
    auto [r, pivots] = rref(m);
    for (int i = 0; i < r.rows(); ++i)
      for (int j = 0; j < r.cols(); ++j) {
        const Rat& e = r.at(i, j);
        CHECK(e.get_den() > 0);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), e.get_num().get_mpz_t(), e.get_den().get_mpz_t());
        CHECK((e == 0 ? e.get_den() == 1 : g == 1));
      }
  }
}

TEST_CASE("solve") {
  Mat m = mat2({{1, 2}, {3, 4}});
  auto x = solve(m, qvec({5, 6}));
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == qvec({5, 6}));
  CHECK_FALSE(solve(mat2({{1, 1}, {1, 1}}), qvec({0, 1})).has_value());
}

TEST_CASE("rational parsing and serialization") {
  CHECK(rat_str(rat_parse("2/4")) == "1/2");
  CHECK(rat_str(rat_parse("-6/3")) == "-2");
  CHECK(rat_str(rat_parse("0")) == "0");
  CHECK(rat_str(rat_parse("7")) == "7");
  CHECK_THROWS_AS(rat_parse("1/0"), Error);
  CHECK_THROWS_AS(rat_parse("1/-2"), Error);
  CHECK_THROWS_AS(rat_parse("x"), Error);
  CHECK_THROWS_AS(rat_parse(""), Error);
}
