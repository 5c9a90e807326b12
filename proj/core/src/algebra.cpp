#include "homleib/algebra.hpp"

namespace homleib {

HomLeibnizAlgebra HomLeibnizAlgebra::make(std::string name, int dim) {
  HomLeibnizAlgebra g;
  g.name = std::move(name);
  g.dim = dim;
  g.basis_labels.resize(dim);
  for (int i = 0; i < dim; ++i) g.basis_labels[i] = "e" + std::to_string(i + 1);
  g.sc.assign(dim, std::vector<Vec>(dim, vec_zero(dim)));
  g.alpha = Mat(dim, dim);
  return g;
}

Vec HomLeibnizAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (int(x.size()) != dim || int(y.size()) != dim)
    throw Error(ErrorKind::precondition, "bracket: dimension mismatch");
  Vec out = vec_zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      vec_axpy(out, x[i] * y[j], sc[i][j]);
    }
  }
  return out;
}

bool HomLeibnizAlgebra::is_abelian() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!vec_is_zero(sc[i][j])) return false;
  return true;
}

bool HomLeibnizAlgebra::alpha_surjective() const { return image_basis(alpha).dim() == dim; }
bool HomLeibnizAlgebra::alpha_injective() const { return kernel_basis(alpha).dim() == 0; }

std::string HomLeibnizAlgebra::label(int i) const {
  return i < int(basis_labels.size()) ? basis_labels[i] : "e" + std::to_string(i + 1);
}

ValidationReport validate_algebra(const HomLeibnizAlgebra& g) {
  ValidationReport report;
  const int d = g.dim;
  // nonzero bitmaps let the basis sweeps skip trivially-zero instances
  // without touching GMP
  std::vector<std::vector<bool>> nz(d, std::vector<bool>(d, false));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) nz[i][j] = !vec_is_zero(g.sc[i][j]);
  std::vector<Vec> acol(d);
  std::vector<std::vector<bool>> anz(d);
  for (int i = 0; i < d; ++i) {
    acol[i] = g.alpha.col(i);
    anz[i].resize(d);
    for (int r = 0; r < d; ++r) anz[i][r] = acol[i][r] != 0;
  }
  auto bracket_hits = [&](const std::vector<bool>& xs, const std::vector<bool>& ys) {
    for (int i = 0; i < d; ++i) {
      if (!xs[i]) continue;
      for (int j = 0; j < d; ++j)
        if (ys[j] && nz[i][j]) return true;
    }
    return false;
  };
  // [alpha(x), [y,z]] = [[x,y], alpha(z)] - [[x,z], alpha(y)]
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        if (!nz[y][z] && !nz[x][y] && !nz[x][z]) continue;
        Vec lhs = g.bracket(acol[x], g.sc[y][z]);
        Vec rhs = vec_sub(g.bracket(g.sc[x][y], acol[z]), g.bracket(g.sc[x][z], acol[y]));
        Vec res = vec_sub(lhs, rhs);
        if (!vec_is_zero(res)) report.push_back({"hom-leibniz", {x, y, z}, res});
      }
  // alpha([x,y]) = [alpha(x), alpha(y)]
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      if (!nz[x][y] && !bracket_hits(anz[x], anz[y])) continue;
      Vec res = vec_sub(g.alpha.apply(g.sc[x][y]), g.bracket(acol[x], acol[y]));
      if (!vec_is_zero(res)) report.push_back({"multiplicative", {x, y}, res});
    }
  return report;
}

namespace {

// Rows: for each basis y, the map x -> [x, e_y] (and x -> [e_y, x] in
// two-sided mode), stacked. The kernel is the center.
Mat center_constraints(const HomLeibnizAlgebra& g, CenterMode mode) {
  const int d = g.dim;
  int blocks = (mode == CenterMode::two_sided) ? 2 * d : d;
  Mat c(blocks * d, d);
  for (int y = 0; y < d; ++y)
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) c.at(y * d + k, i) = g.sc[i][y][k];
  if (mode == CenterMode::two_sided)
    for (int y = 0; y < d; ++y)
      for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) c.at((d + y) * d + k, i) = g.sc[y][i][k];
  return c;
}

} // namespace

Subspace center(const HomLeibnizAlgebra& g, CenterMode mode) {
  return kernel_basis(center_constraints(g, mode));
}

Subspace alpha_stable_core(const Subspace& s, const Mat& alpha) {
  const int n = s.ambient_dim();
  Subspace w = s;
  for (int step = 0; step <= n; ++step) {
    // w_next = s  ∩  alpha^{-1}(w)
    QuotientMap q(n, w);
    Mat constraint = q.projection().mul(alpha);
    Subspace pre = kernel_basis(constraint);
    Subspace next = s.intersect(pre);
    if (next == w) return w;
    w = next;
  }
  return w; // dim bound makes this unreachable
}

Subspace alpha_center(const HomLeibnizAlgebra& g, CenterMode mode) {
  return alpha_stable_core(center(g, mode), g.alpha);
}

bool is_subalgebra(const HomLeibnizAlgebra& g, const Subspace& s) {
  for (const Vec& v : s.basis())
    if (!s.contains(g.alpha.apply(v))) return false;
  for (const Vec& a : s.basis())
    for (const Vec& b : s.basis())
      if (!s.contains(g.bracket(a, b))) return false;
  return true;
}

bool is_ideal(const HomLeibnizAlgebra& g, const Subspace& s) {
  for (const Vec& v : s.basis())
    if (!s.contains(g.alpha.apply(v))) return false;
  for (const Vec& a : s.basis())
    for (int j = 0; j < g.dim; ++j) {
      Vec ej = vec_unit(g.dim, j);
      if (!s.contains(g.bracket(a, ej))) return false;
      if (!s.contains(g.bracket(ej, a))) return false;
    }
  return true;
}

Subspace higgins_commutator(const HomLeibnizAlgebra& g, const Subspace& h, const Subspace& k) {
  if (!is_ideal(g, h) || !is_ideal(g, k))
    throw Error(ErrorKind::precondition, "higgins_commutator: inputs must be ideals");
  IncrementalRref acc(g.dim);
  for (const Vec& a : h.basis())
    for (const Vec& b : k.basis()) acc.insert(g.bracket(a, b));
  // close under bracket and alpha
  for (;;) {
    Subspace cur = acc.snapshot();
    bool grew = false;
    for (const Vec& a : cur.basis()) grew |= acc.insert(g.alpha.apply(a));
    for (const Vec& a : cur.basis())
      for (const Vec& b : cur.basis()) grew |= acc.insert(g.bracket(a, b));
    if (!grew) return acc.snapshot();
  }
}

Subspace derived_subalgebra(const HomLeibnizAlgebra& g) {
  Subspace full = Subspace::full(g.dim);
  return higgins_commutator(g, full, full);
}

bool is_perfect(const HomLeibnizAlgebra& g) { return derived_subalgebra(g).dim() == g.dim; }

ValidationReport validate_morphism(const Morphism& f) {
  ValidationReport report;
  const HomLeibnizAlgebra& s = f.source;
  const HomLeibnizAlgebra& t = f.target;
  if (f.matrix.rows() != t.dim || f.matrix.cols() != s.dim)
    throw Error(ErrorKind::precondition, "morphism: matrix shape mismatch");
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j) {
      Vec res = vec_sub(f.matrix.apply(s.sc[i][j]), t.bracket(f.matrix.col(i), f.matrix.col(j)));
      if (!vec_is_zero(res)) report.push_back({"homomorphism", {i, j}, res});
    }
  Mat comm = f.matrix.mul(s.alpha).add(t.alpha.mul(f.matrix).scale(Rat(-1)));
  if (!comm.is_zero()) report.push_back({"alpha-equivariance", {}, comm.col(0)});
  return report;
}

Morphism compose(const Morphism& g_after, const Morphism& f_first) {
  if (f_first.target.dim != g_after.source.dim)
    throw Error(ErrorKind::precondition, "compose: dimension mismatch");
  return Morphism{f_first.source, g_after.target, g_after.matrix.mul(f_first.matrix)};
}

QuotientAlgebra quotient_algebra(const HomLeibnizAlgebra& g, const Subspace& ideal, const std::string& name) {
  if (!is_ideal(g, ideal)) throw Error(ErrorKind::precondition, "quotient_algebra: not an ideal");
  QuotientMap q(g.dim, ideal);
  int d = q.quotient_dim();
  HomLeibnizAlgebra out = HomLeibnizAlgebra::make(name.empty() ? g.name + "/n" : name, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) out.sc[a][b] = q.project(g.bracket(q.lift(vec_unit(d, a)), q.lift(vec_unit(d, b))));
  out.alpha = q.projection().mul(g.alpha).mul(q.section());
  for (int a = 0; a < d; ++a) {
    // quotient coordinates are the non-pivot coordinates of the ideal
    int amb = -1;
    for (int j = 0; j < g.dim && amb < 0; ++j)
      if (q.section().at(j, a) != 0) amb = j;
    out.basis_labels[a] = "[" + g.label(amb) + "]";
  }
  ValidationReport rep = validate_algebra(out);
  if (!rep.empty()) throw Error(ErrorKind::integrity, "quotient_algebra: induced structure fails validation");
  Morphism proj{g, out, q.projection()};
  return QuotientAlgebra{out, proj, q};
}

QuotientAlgebra abelianization(const HomLeibnizAlgebra& g) {
  QuotientAlgebra out = quotient_algebra(g, derived_subalgebra(g), g.name + "^ab");
  return out;
}

HomLeibnizAlgebra direct_sum(const HomLeibnizAlgebra& a, const HomLeibnizAlgebra& b) {
  HomLeibnizAlgebra out = HomLeibnizAlgebra::make(a.name + "(+)" + b.name, a.dim + b.dim);
  for (int i = 0; i < a.dim; ++i) out.basis_labels[i] = a.label(i) + "'";
  for (int i = 0; i < b.dim; ++i) out.basis_labels[a.dim + i] = b.label(i) + "''";
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k) out.sc[i][j][k] = a.sc[i][j][k];
  for (int i = 0; i < b.dim; ++i)
    for (int j = 0; j < b.dim; ++j)
      for (int k = 0; k < b.dim; ++k) out.sc[a.dim + i][a.dim + j][a.dim + k] = b.sc[i][j][k];
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) out.alpha.at(i, j) = a.alpha.at(i, j);
  for (int i = 0; i < b.dim; ++i)
    for (int j = 0; j < b.dim; ++j) out.alpha.at(a.dim + i, a.dim + j) = b.alpha.at(i, j);
  return out;
}

Subalgebra subalgebra_from_subspace(const HomLeibnizAlgebra& g, const Subspace& s, const std::string& name) {
  if (!is_subalgebra(g, s))
    throw Error(ErrorKind::precondition, "subalgebra_from_subspace: subspace not a subalgebra");
  int d = s.dim();
  HomLeibnizAlgebra out = HomLeibnizAlgebra::make(name.empty() ? g.name + "|s" : name, d);
  Mat embed(g.dim, d);
  for (int a = 0; a < d; ++a)
    for (int j = 0; j < g.dim; ++j) embed.at(j, a) = s.basis()[a][j];
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      auto coords = s.coordinates(g.bracket(s.basis()[a], s.basis()[b]));
      out.sc[a][b] = *coords; // closure guaranteed by is_subalgebra
    }
  for (int a = 0; a < d; ++a) {
    auto coords = s.coordinates(g.alpha.apply(s.basis()[a]));
    for (int b = 0; b < d; ++b) out.alpha.at(b, a) = (*coords)[b];
  }
  return Subalgebra{out, embed};
}

HomLeibnizAlgebra transport_basis(const HomLeibnizAlgebra& g, const Mat& p) {
  // p columns = new basis in old coordinates; require invertibility
  Subspace img = image_basis(p);
  if (img.dim() != g.dim) throw Error(ErrorKind::precondition, "transport_basis: singular matrix");
  // p_inv via solving p * x = e_i
  Mat pinv(g.dim, g.dim);
  for (int i = 0; i < g.dim; ++i) {
    auto x = solve(p, vec_unit(g.dim, i));
    for (int j = 0; j < g.dim; ++j) pinv.at(j, i) = (*x)[j];
  }
  HomLeibnizAlgebra out = HomLeibnizAlgebra::make(g.name + "~", g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) out.sc[i][j] = pinv.apply(g.bracket(p.col(i), p.col(j)));
  out.alpha = pinv.mul(g.alpha).mul(p);
  return out;
}

} // namespace homleib
