#include "homleib/catalog.hpp"

#include "homleib/action.hpp"
#include "homleib/homology.hpp"

namespace homleib {

HomLeibnizAlgebra abelian_algebra(int n, const Mat& alpha, const std::string& name) {
  HomLeibnizAlgebra g = HomLeibnizAlgebra::make(name.empty() ? "abelian(" + std::to_string(n) + ")" : name, n);
  g.alpha = alpha;
  return g;
}

HomLeibnizAlgebra nil3_twisted() {
  HomLeibnizAlgebra g = HomLeibnizAlgebra::make("nil3t", 3);
  g.sc[0][1][2] = 1;
  g.alpha.at(2, 0) = 1;
  g.alpha.at(1, 1) = 1;
  return g;
}

HomLeibnizAlgebra pair_cover(int base_dim) {
  if (base_dim < 1) throw Error(ErrorKind::precondition, "pair_cover: base_dim must be >= 1");
  const int n = base_dim, d = n + n * n;
  HomLeibnizAlgebra g = HomLeibnizAlgebra::make("paircover(" + std::to_string(n) + ")", d);
  auto pair_index = [&](int j, int k) { return n + j * n + k; };
  for (int i = 0; i < n; ++i) g.basis_labels[i] = "e" + std::to_string(i + 1);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      g.basis_labels[pair_index(j, k)] = "e" + std::to_string(j + 1) + std::to_string(k + 1);
      g.sc[j][k][pair_index(j, k)] = 1;
    }
  // alpha = id on the base; e_jk -> [alpha e_j, alpha e_k] = e_jk
  g.alpha = Mat::identity(d);
  return g;
}

HomLeibnizAlgebra t_extension(const HomLeibnizAlgebra& g) {
  if (!g.alpha.is_zero()) throw Error(ErrorKind::precondition, "t_extension: input must have zero endomorphism");
  Subspace z = alpha_center(g);
  const int r = z.dim();
  if (r == 0 || r == g.dim)
    throw Error(ErrorKind::precondition, "t_extension: need a proper nonzero center");
  // adapted basis: center rows first, then the complementary unit vectors
  Mat p(g.dim, g.dim);
  for (int a = 0; a < r; ++a)
    for (int i = 0; i < g.dim; ++i) p.at(i, a) = z.basis()[a][i];
  std::vector<bool> is_pivot(g.dim, false);
  for (int q : z.pivots()) is_pivot[q] = true;
  int col = r;
  for (int q = 0; q < g.dim; ++q)
    if (!is_pivot[q]) p.at(q, col++) = 1;
  HomLeibnizAlgebra adapted = transport_basis(g, p);

  const int d = g.dim + r;
  HomLeibnizAlgebra k = HomLeibnizAlgebra::make("t-ext[" + g.name + "]", d);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (int l = 0; l < g.dim; ++l) k.sc[i][j][l] = adapted.sc[i][j][l];
  for (int a = 0; a < r; ++a) {
    k.basis_labels[a] = "z" + std::to_string(a + 1);
    k.sc[a][r][g.dim + a] = 1; // [z_a, f_{j0}] = t_a with j0 the first non-central direction
  }
  for (int i = r; i < g.dim; ++i) k.basis_labels[i] = "f" + std::to_string(i - r + 1);
  for (int a = 0; a < r; ++a) k.basis_labels[g.dim + a] = "t" + std::to_string(a + 1);
  // alpha stays zero
  return k;
}

HomLeibnizAlgebra heisenberg(int n) {
  if (n < 1) throw Error(ErrorKind::precondition, "heisenberg: n must be >= 1");
  const int d = 2 * n + 1;
  HomLeibnizAlgebra g = HomLeibnizAlgebra::make("heisenberg(" + std::to_string(n) + ")", d);
  for (int i = 0; i < n; ++i) {
    g.basis_labels[i] = "x" + std::to_string(i + 1);
    g.basis_labels[n + i] = "y" + std::to_string(i + 1);
    g.sc[i][n + i][2 * n] = 1;
    g.sc[n + i][i][2 * n] = -1;
  }
  g.basis_labels[2 * n] = "z";
  g.alpha = Mat::identity(d);
  return g;
}

HomLeibnizAlgebra sl2() {
  HomLeibnizAlgebra g = HomLeibnizAlgebra::make("sl2", 3);
  g.basis_labels = {"e", "f", "h"};
  g.sc[0][1][2] = 1;
  g.sc[1][0][2] = -1;
  g.sc[2][0][0] = 2;
  g.sc[0][2][0] = -2;
  g.sc[2][1][1] = -2;
  g.sc[1][2][1] = 2;
  g.alpha = Mat::identity(3);
  return g;
}

namespace {

// Kronecker product of coordinate vectors.
Vec vec_tensor(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

long ipow(long b, int e) {
  long out = 1;
  while (e-- > 0) out *= b;
  return out;
}

} // namespace

HomLeibnizAlgebra free_nilpotent(int v_dim, const Mat& a, int degree, long cap) {
  if (v_dim < 1 || degree < 1) throw Error(ErrorKind::precondition, "free_nilpotent: bad parameters");
  long total_carrier = 0;
  for (int n = 1; n <= degree; ++n) total_carrier += ipow(v_dim, n);
  if (total_carrier > cap) throw Error(ErrorKind::cap_exceeded, "free_nilpotent: carrier exceeds cap");

  // A^(x)n per degree (A^(x)0 = 1x1 identity)
  std::vector<Mat> apow(degree + 1);
  apow[0] = Mat::identity(1);
  for (int n = 1; n <= degree; ++n) apow[n] = apow[n - 1].kron(a);

  // degree-n relation components: all paddings u (x) g(x,y,z) (x) w
  std::vector<Subspace> ideal(degree + 1);
  std::vector<QuotientMap> quot(degree + 1);
  for (int n = 1; n <= degree; ++n) {
    IncrementalRref acc(int(ipow(v_dim, n)));
    for (int pu = 0; pu + 3 <= n; ++pu)
      for (int i = 1; pu + i + 2 <= n; ++i)
        for (int j = 1; pu + i + j + 1 <= n; ++j)
          for (int kdeg = 1; pu + i + j + kdeg <= n; ++kdeg) {
            int qw = n - pu - i - j - kdeg;
            long nu = ipow(v_dim, pu), nx = ipow(v_dim, i), ny = ipow(v_dim, j), nz = ipow(v_dim, kdeg),
                 nw = ipow(v_dim, qw);
            for (long u = 0; u < nu; ++u)
              for (long x = 0; x < nx; ++x)
                for (long y = 0; y < ny; ++y)
                  for (long z = 0; z < nz; ++z) {
                    // g = A(x).(y.z) - (x.y).A(z) + (x.z).A(y), concatenation product
                    Vec ux = vec_unit(int(nx), int(x));
                    Vec uy = vec_unit(int(ny), int(y));
                    Vec uz = vec_unit(int(nz), int(z));
                    Vec gen =
                        vec_tensor(apow[i].apply(ux), vec_tensor(uy, uz));
                    gen = vec_sub(gen, vec_tensor(ux, vec_tensor(uy, apow[kdeg].apply(uz))));
                    gen = vec_add(gen, vec_tensor(ux, vec_tensor(uz, apow[j].apply(uy))));
                    for (long w = 0; w < nw; ++w) {
                      Vec padded = vec_tensor(vec_unit(int(nu), int(u)), vec_tensor(gen, vec_unit(int(nw), int(w))));
                      if (!vec_is_zero(padded)) acc.insert(std::move(padded));
                    }
                  }
          }
    ideal[n] = acc.snapshot();
    for (const Vec& v : ideal[n].basis())
      if (!ideal[n].contains(apow[n].apply(v)))
        throw Error(ErrorKind::integrity, "free_nilpotent: relations not alpha-invariant");
    quot[n] = QuotientMap(int(ipow(v_dim, n)), ideal[n]);
  }

  std::vector<int> offset(degree + 2, 0);
  for (int n = 1; n <= degree; ++n) offset[n + 1] = offset[n] + quot[n].quotient_dim();
  const int d = offset[degree + 1];
  HomLeibnizAlgebra out = HomLeibnizAlgebra::make("free-nilp(" + std::to_string(v_dim) + ",deg" +
                                                      std::to_string(degree) + ")",
                                                  d);
  // labels: the basis tensor v_{i1}...v_{in} behind each quotient coordinate
  for (int n = 1; n <= degree; ++n)
    for (int c = 0; c < quot[n].quotient_dim(); ++c) {
      int amb = -1;
      for (int r = 0; r < quot[n].ambient_dim() && amb < 0; ++r)
        if (quot[n].section().at(r, c) != 0) amb = r;
      std::string lbl = "v";
      std::vector<int> digits(n);
      long rem = amb;
      for (int t = n - 1; t >= 0; --t) {
        digits[t] = int(rem % v_dim);
        rem /= v_dim;
      }
      for (int t = 0; t < n; ++t) lbl += std::to_string(digits[t] + 1);
      out.basis_labels[offset[n] + c] = lbl;
    }
  // bracket = concatenation, reduced; degrees above d are killed
  for (int m = 1; m <= degree; ++m)
    for (int n = 1; n <= degree; ++n) {
      if (m + n > degree) continue;
      for (int ca = 0; ca < quot[m].quotient_dim(); ++ca)
        for (int cb = 0; cb < quot[n].quotient_dim(); ++cb) {
          Vec prod = quot[m + n].project(
              vec_tensor(quot[m].lift(vec_unit(quot[m].quotient_dim(), ca)),
                         quot[n].lift(vec_unit(quot[n].quotient_dim(), cb))));
          for (int r = 0; r < quot[m + n].quotient_dim(); ++r)
            out.sc[offset[m] + ca][offset[n] + cb][offset[m + n] + r] = prod[r];
        }
    }
  for (int n = 1; n <= degree; ++n) {
    Mat blk = quot[n].projection().mul(apow[n]).mul(quot[n].section());
    for (int r = 0; r < blk.rows(); ++r)
      for (int c = 0; c < blk.cols(); ++c) out.alpha.at(offset[n] + r, offset[n] + c) = blk.at(r, c);
  }
  ValidationReport rep = validate_algebra(out);
  if (!rep.empty()) throw Error(ErrorKind::integrity, "free_nilpotent: truncation fails validation");
  return out;
}

namespace {

HomLeibnizAlgebra nil3t_alpha_zero() {
  HomLeibnizAlgebra g = nil3_twisted();
  g.name = "nil3t(alpha=0)";
  g.alpha = Mat(3, 3);
  return g;
}

HomLeibnizAlgebra heisenberg_alpha_zero() {
  HomLeibnizAlgebra g = heisenberg(1);
  g.name = "heisenberg(1,alpha=0)";
  g.alpha = Mat(3, 3);
  return g;
}

HomLeibnizAlgebra semidirect_nil3t() {
  // nil3t splits as span{e1,e3} x| span{e2}
  HomLeibnizAlgebra g = nil3_twisted();
  Subspace m = Subspace::span(3, {vec_unit(3, 0), vec_unit(3, 2)});
  Subspace h = Subspace::span(3, {vec_unit(3, 1)});
  Subalgebra msub = subalgebra_from_subspace(g, m, "m");
  Subalgebra hsub = subalgebra_from_subspace(g, h, "g");
  HomAction act = action_by_bracket(g, hsub, msub);
  HomLeibnizAlgebra out = semidirect_product(act).algebra;
  out.name = "semidirect(nil3t)";
  return out;
}

HomLeibnizAlgebra quot_nil3t_center() {
  HomLeibnizAlgebra g = nil3_twisted();
  HomLeibnizAlgebra out = quotient_algebra(g, Subspace::span(3, {vec_unit(3, 2)}), "quot(nil3t,z)").algebra;
  return out;
}

HomLeibnizAlgebra mutant_multiplicativity() {
  // alpha(e3) = e3 breaks multiplicativity at (e1,e2)
  HomLeibnizAlgebra g = nil3_twisted();
  g.name = "mutant-mult";
  g.alpha.at(2, 2) = 1;
  return g;
}

HomLeibnizAlgebra mutant_identity() {
  // heisenberg(1) plus [e3,e1] = e1 breaks the Hom-Leibniz identity at (3,1,2)
  HomLeibnizAlgebra g = heisenberg(1);
  g.name = "mutant-identity";
  g.basis_labels = {"e1", "e2", "e3"};
  g.sc[2][0][0] = 1;
  return g;
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> entries;
  auto add = [&](std::string id, std::string desc, std::function<HomLeibnizAlgebra()> build,
                 std::map<std::string, long> expected) {
    entries.push_back({std::move(id), std::move(desc), true, std::move(build), std::move(expected)});
  };

  add("paircover(1)", "cover of abelian(1), alpha = id", [] { return pair_cover(1); },
      {{"dim", 2}, {"center", 1}, {"alpha_center", 1}, {"derived", 1}, {"hl1", 1}});
  add("paircover(2)", "cover of abelian(2), alpha = id", [] { return pair_cover(2); },
      {{"dim", 6}, {"center", 4}, {"alpha_center", 4}, {"derived", 4}, {"hl1", 2}});
  add("t-ext(1)", "t-extension of nil3t with alpha = 0",
      [] { return t_extension(nil3t_alpha_zero()); },
      {{"dim", 4}, {"center", 1}, {"alpha_center", 1}, {"derived", 2}, {"hl1", 2}});
  add("t-ext(2)", "t-extension of heisenberg(1) with alpha = 0",
      [] { return t_extension(heisenberg_alpha_zero()); },
      {{"dim", 4}, {"center", 1}, {"alpha_center", 1}, {"derived", 2}, {"hl1", 2}});
  add("nil3t", "[e1,e2] = e3; alpha: e1->e3, e2->e2, e3->0", nil3_twisted,
      {{"dim", 3}, {"center", 1}, {"alpha_center", 1}, {"derived", 1}, {"hl1", 2}});
  add("heisenberg(1)", "Heisenberg, dim 3, alpha = id", [] { return heisenberg(1); },
      {{"dim", 3}, {"center", 1}, {"alpha_center", 1}, {"derived", 1}, {"hl1", 2}});
  add("heisenberg(2)", "Heisenberg, dim 5, alpha = id", [] { return heisenberg(2); },
      {{"dim", 5}, {"center", 1}, {"alpha_center", 1}, {"derived", 1}, {"hl1", 4}});
  add("abelian(1)", "dim 1, alpha = id", [] { return abelian_algebra(1, Mat::identity(1)); },
      {{"dim", 1}, {"center", 1}, {"alpha_center", 1}, {"derived", 0}, {"hl1", 1}});
  add("abelian(2,zero)", "dim 2, alpha = 0", [] { return abelian_algebra(2, Mat(2, 2), "abelian(2,zero)"); },
      {{"dim", 2}, {"center", 2}, {"alpha_center", 2}, {"derived", 0}, {"hl1", 2}});
  add("abelian(2,nilp)", "dim 2, alpha nilpotent",
      [] {
        Mat a(2, 2);
        a.at(0, 1) = 1; // e2 -> e1, e1 -> 0
        return abelian_algebra(2, a, "abelian(2,nilp)");
      },
      {{"dim", 2}, {"center", 2}, {"alpha_center", 2}, {"derived", 0}, {"hl1", 2}});
  add("abelian(3,proj)", "dim 3, alpha a projection",
      [] {
        Mat a = Mat::identity(3);
        a.at(2, 2) = 0;
        return abelian_algebra(3, a, "abelian(3,proj)");
      },
      {{"dim", 3}, {"center", 3}, {"alpha_center", 3}, {"derived", 0}, {"hl1", 3}});
  add("sl2", "perfect Lie algebra as a Hom-Leibniz instance", sl2,
      {{"dim", 3}, {"center", 0}, {"alpha_center", 0}, {"derived", 3}, {"hl1", 0}});
  add("free-nilp(2,id,2)", "free nilpotent of class 2 on 2 generators",
      [] { return free_nilpotent(2, Mat::identity(2), 2); },
      {{"dim", 6}, {"center", 4}, {"alpha_center", 4}, {"derived", 4}, {"hl1", 2}});
  add("free-nilp(2,id,3)", "class-3 truncation on 2 generators (degree 3 collapses for alpha = id)",
      [] { return free_nilpotent(2, Mat::identity(2), 3); },
      {{"dim", 6}, {"center", 4}, {"alpha_center", 4}, {"derived", 4}, {"hl1", 2}});
  add("sum(nil3t,abelian(1))", "direct sum composite",
      [] { return direct_sum(nil3_twisted(), abelian_algebra(1, Mat::identity(1))); },
      {{"dim", 4}, {"center", 2}, {"alpha_center", 2}, {"derived", 1}, {"hl1", 3}});
  add("sum(heisenberg(1),heisenberg(1))", "direct sum composite",
      [] { return direct_sum(heisenberg(1), heisenberg(1)); },
      {{"dim", 6}, {"center", 2}, {"alpha_center", 2}, {"derived", 2}, {"hl1", 4}});
  add("semidirect(nil3t)", "span{e1,e3} x| span{e2}, reconstructs nil3t", semidirect_nil3t,
      {{"dim", 3}, {"center", 1}, {"alpha_center", 1}, {"derived", 1}, {"hl1", 2}});
  add("quot(nil3t,z)", "nil3t modulo its center", quot_nil3t_center,
      {{"dim", 2}, {"center", 2}, {"alpha_center", 2}, {"derived", 0}, {"hl1", 2}});
  return entries;
}

std::vector<CatalogEntry> make_negatives() {
  std::vector<CatalogEntry> entries;
  entries.push_back({"mutant-mult", "nil3t with alpha(e3) = e3: multiplicativity fails at (e1,e2)", false,
                     mutant_multiplicativity, {}});
  entries.push_back({"mutant-identity", "heisenberg(1) plus [e3,e1] = e1: identity fails at (e3,e1,e2)", false,
                     mutant_identity, {}});
  return entries;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const std::vector<CatalogEntry>& catalog_negatives() {
  static const std::vector<CatalogEntry> entries = make_negatives();
  return entries;
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& e : catalog()) ids.push_back(e.id);
  return ids;
}

const CatalogEntry& catalog_entry(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  for (const auto& e : catalog_negatives())
    if (e.id == id) return e;
  throw Error(ErrorKind::precondition, "unknown catalog entry \"" + id + "\"");
}

HomLeibnizAlgebra catalog_build(const std::string& id) { return catalog_entry(id).build(); }

CheckReport verify_expected(const CatalogEntry& entry) {
  CheckReport report;
  HomLeibnizAlgebra g = entry.build();
  bool valid = validate_algebra(g).empty();
  report.add(entry.id + ": validation", valid == entry.expected_valid);
  if (!entry.expected_valid) return report;
  for (const auto& [key, value] : entry.expected) {
    long got = -1;
    if (key == "dim") got = g.dim;
    else if (key == "center") got = center(g).dim();
    else if (key == "alpha_center") got = alpha_center(g).dim();
    else if (key == "derived") got = derived_subalgebra(g).dim();
    else if (key == "hl1") got = hl_dim(g, 1);
    report.add(entry.id + ": " + key, got == value,
               std::to_string(got) + " expected " + std::to_string(value));
  }
  return report;
}

std::vector<HomLeibnizAlgebra> combinator_sweep(unsigned long seed, int count) {
  std::vector<HomLeibnizAlgebra> out;
  const auto& entries = catalog();
  unsigned long state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
  auto next = [&](unsigned long mod) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return (state >> 33) % mod;
  };
  // keep composites small enough for product construction
  std::vector<int> small;
  for (size_t i = 0; i < entries.size(); ++i) {
    HomLeibnizAlgebra g = entries[i].build();
    if (g.dim <= 3) small.push_back(int(i));
  }
  for (int t = 0; t < count; ++t) {
    int a = small[next(small.size())];
    int b = small[next(small.size())];
    HomLeibnizAlgebra ga = entries[a].build(), gb = entries[b].build();
    if (next(2) == 0) {
      out.push_back(direct_sum(ga, gb));
    } else {
      Subspace za = alpha_center(ga);
      if (za.dim() > 0 && za.dim() < ga.dim && is_ideal(ga, za)) {
        out.push_back(quotient_algebra(ga, za, ga.name + "/Za").algebra);
      } else {
        out.push_back(direct_sum(ga, gb));
      }
    }
  }
  return out;
}

} // namespace homleib
