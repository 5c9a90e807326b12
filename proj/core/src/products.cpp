#include "homleib/products.hpp"

#include <string>

namespace homleib {

namespace {

// Precomputed action tables for a crossed-module pair.
struct PairTables {
  int dm, dn, dF;
  std::vector<std::vector<Vec>> lmn; // {m_i}n_j in N
  std::vector<std::vector<Vec>> rmn; // m_i{n_j} in M
  std::vector<std::vector<Vec>> lnm; // {n_j}m_i in M
  std::vector<std::vector<Vec>> rnm; // n_j{m_i} in N
  std::vector<Vec> alpha_m, alpha_n;

  explicit PairTables(const CrossedModulePair& p) {
    dm = p.m.dim;
    dn = p.n.dim;
    dF = 2 * dm * dn;
    lmn.assign(dm, std::vector<Vec>(dn));
    rmn.assign(dm, std::vector<Vec>(dn));
    lnm.assign(dn, std::vector<Vec>(dm));
    rnm.assign(dn, std::vector<Vec>(dm));
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < dn; ++j) {
        Vec mi = vec_unit(dm, i), nj = vec_unit(dn, j);
        lmn[i][j] = p.m_on_n_left(mi, nj);
        rmn[i][j] = p.n_on_m_right(mi, nj);
        lnm[j][i] = p.n_on_m_left(nj, mi);
        rnm[j][i] = p.m_on_n_right(nj, mi);
      }
    alpha_m.resize(dm);
    for (int i = 0; i < dm; ++i) alpha_m[i] = p.m.alpha.col(i);
    alpha_n.resize(dn);
    for (int j = 0; j < dn; ++j) alpha_n[j] = p.n.alpha.col(j);
    fill_flags(p);
  }

  // nonzero flags so the relation sweep can skip trivially-zero instances
  std::vector<std::vector<bool>> nz_lmn, nz_rmn, nz_lnm, nz_rnm, nz_scm, nz_scn;
  std::vector<bool> nz_am, nz_an;

  void fill_flags(const CrossedModulePair& p) {
    auto flag = [](const Vec& v) { return !vec_is_zero(v); };
    nz_lmn.assign(dm, std::vector<bool>(dn));
    nz_rmn.assign(dm, std::vector<bool>(dn));
    nz_lnm.assign(dn, std::vector<bool>(dm));
    nz_rnm.assign(dn, std::vector<bool>(dm));
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < dn; ++j) {
        nz_lmn[i][j] = flag(lmn[i][j]);
        nz_rmn[i][j] = flag(rmn[i][j]);
        nz_lnm[j][i] = flag(lnm[j][i]);
        nz_rnm[j][i] = flag(rnm[j][i]);
      }
    nz_scm.assign(dm, std::vector<bool>(dm));
    for (int i = 0; i < dm; ++i)
      for (int a = 0; a < dm; ++a) nz_scm[i][a] = flag(p.m.sc[i][a]);
    nz_scn.assign(dn, std::vector<bool>(dn));
    for (int j = 0; j < dn; ++j)
      for (int k = 0; k < dn; ++k) nz_scn[j][k] = flag(p.n.sc[j][k]);
    nz_am.resize(dm);
    for (int i = 0; i < dm; ++i) nz_am[i] = flag(alpha_m[i]);
    nz_an.resize(dn);
    for (int j = 0; j < dn; ++j) nz_an[j] = flag(alpha_n[j]);
  }

  int idx1(int i, int j) const { return i * dn + j; }
  int idx2(int j, int i) const { return dm * dn + j * dm + i; }

  // u (x) w into the first summand
  Vec emb1(const Vec& u, const Vec& w) const {
    Vec out = vec_zero(dF);
    for (int i = 0; i < dm; ++i) {
      if (u[i] == 0) continue;
      for (int j = 0; j < dn; ++j)
        if (w[j] != 0) out[idx1(i, j)] += u[i] * w[j];
    }
    return out;
  }
  // w (x) u into the second summand
  Vec emb2(const Vec& w, const Vec& u) const {
    Vec out = vec_zero(dF);
    for (int j = 0; j < dn; ++j) {
      if (w[j] == 0) continue;
      for (int i = 0; i < dm; ++i)
        if (u[i] != 0) out[idx2(j, i)] += w[j] * u[i];
    }
    return out;
  }
};

template <typename Emit>
void enumerate_relations(const CrossedModulePair& p, const PairTables& t, Emit emit) {
  const auto& scm = p.m.sc;
  const auto& scn = p.n.sc;
  // (3a) a(m) * {m'}n = -a(m) * n{m'}
  for (int i = 0; i < t.dm; ++i) {
    if (!t.nz_am[i]) continue;
    for (int a = 0; a < t.dm; ++a)
      for (int j = 0; j < t.dn; ++j) {
        if (!t.nz_lmn[a][j] && !t.nz_rnm[j][a]) continue;
        emit(t.emb1(t.alpha_m[i], vec_add(t.lmn[a][j], t.rnm[j][a])));
      }
  }
  // (3b) a(n) * {n'}m = -a(n) * m{n'}
  for (int j = 0; j < t.dn; ++j) {
    if (!t.nz_an[j]) continue;
    for (int b = 0; b < t.dn; ++b)
      for (int i = 0; i < t.dm; ++i) {
        if (!t.nz_lnm[b][i] && !t.nz_rmn[i][b]) continue;
        emit(t.emb2(t.alpha_n[j], vec_add(t.lnm[b][i], t.rmn[i][b])));
      }
  }
  // (4a) a(m) * [n,n'] = m{n} * a(n') - m{n'} * a(n)
  for (int i = 0; i < t.dm; ++i)
    for (int j = 0; j < t.dn; ++j)
      for (int k = 0; k < t.dn; ++k) {
        bool t1 = t.nz_am[i] && t.nz_scn[j][k];
        bool t2 = t.nz_rmn[i][j] && t.nz_an[k];
        bool t3 = t.nz_rmn[i][k] && t.nz_an[j];
        if (!t1 && !t2 && !t3) continue;
        Vec v = t.emb1(t.alpha_m[i], scn[j][k]);
        v = vec_sub(v, t.emb1(t.rmn[i][j], t.alpha_n[k]));
        v = vec_add(v, t.emb1(t.rmn[i][k], t.alpha_n[j]));
        emit(std::move(v));
      }
  // (4b) a(n) * [m,m'] = n{m} * a(m') - n{m'} * a(m)
  for (int j = 0; j < t.dn; ++j)
    for (int i = 0; i < t.dm; ++i)
      for (int a = 0; a < t.dm; ++a) {
        bool t1 = t.nz_an[j] && t.nz_scm[i][a];
        bool t2 = t.nz_rnm[j][i] && t.nz_am[a];
        bool t3 = t.nz_rnm[j][a] && t.nz_am[i];
        if (!t1 && !t2 && !t3) continue;
        Vec v = t.emb2(t.alpha_n[j], scm[i][a]);
        v = vec_sub(v, t.emb2(t.rnm[j][i], t.alpha_m[a]));
        v = vec_add(v, t.emb2(t.rnm[j][a], t.alpha_m[i]));
        emit(std::move(v));
      }
  // (4c) [m,m'] * a(n) = {m}n * a(m') - a(m) * n{m'}
  for (int i = 0; i < t.dm; ++i)
    for (int a = 0; a < t.dm; ++a)
      for (int j = 0; j < t.dn; ++j) {
        bool t1 = t.nz_scm[i][a] && t.nz_an[j];
        bool t2 = t.nz_lmn[i][j] && t.nz_am[a];
        bool t3 = t.nz_am[i] && t.nz_rnm[j][a];
        if (!t1 && !t2 && !t3) continue;
        Vec v = t.emb1(scm[i][a], t.alpha_n[j]);
        v = vec_sub(v, t.emb2(t.lmn[i][j], t.alpha_m[a]));
        v = vec_add(v, t.emb1(t.alpha_m[i], t.rnm[j][a]));
        emit(std::move(v));
      }
  // (4d) [n,n'] * a(m) = {n}m * a(n') - a(n) * m{n'}
  for (int j = 0; j < t.dn; ++j)
    for (int k = 0; k < t.dn; ++k)
      for (int i = 0; i < t.dm; ++i) {
        bool t1 = t.nz_scn[j][k] && t.nz_am[i];
        bool t2 = t.nz_lnm[j][i] && t.nz_an[k];
        bool t3 = t.nz_an[j] && t.nz_rmn[i][k];
        if (!t1 && !t2 && !t3) continue;
        Vec v = t.emb2(scn[j][k], t.alpha_m[i]);
        v = vec_sub(v, t.emb1(t.lnm[j][i], t.alpha_n[k]));
        v = vec_add(v, t.emb2(t.alpha_n[j], t.rmn[i][k]));
        emit(std::move(v));
      }
  // (5a)-(5d): identify the two generator expressions of each product value
  for (int i = 0; i < t.dm; ++i)
    for (int j = 0; j < t.dn; ++j)
      for (int a = 0; a < t.dm; ++a)
        for (int b = 0; b < t.dn; ++b) {
          // (5a) m{n} * {m'}n' = {m}n * m'{n'}
          if ((t.nz_rmn[i][j] && t.nz_lmn[a][b]) || (t.nz_lmn[i][j] && t.nz_rmn[a][b]))
            emit(vec_sub(t.emb1(t.rmn[i][j], t.lmn[a][b]), t.emb2(t.lmn[i][j], t.rmn[a][b])));
          // (5b) {n}m * n'{m'} = n{m} * {n'}m'
          if ((t.nz_lnm[j][i] && t.nz_rnm[b][a]) || (t.nz_rnm[j][i] && t.nz_lnm[b][a]))
            emit(vec_sub(t.emb1(t.lnm[j][i], t.rnm[b][a]), t.emb2(t.rnm[j][i], t.lnm[b][a])));
          // (5c) m{n} * n'{m'} = {m}n * {n'}m'
          if ((t.nz_rmn[i][j] && t.nz_rnm[b][a]) || (t.nz_lmn[i][j] && t.nz_lnm[b][a]))
            emit(vec_sub(t.emb1(t.rmn[i][j], t.rnm[b][a]), t.emb2(t.lmn[i][j], t.lnm[b][a])));
          // (5d) {n}m * {m'}n' = n{m} * m'{n'}
          if ((t.nz_lnm[j][i] && t.nz_lmn[a][b]) || (t.nz_rnm[j][i] && t.nz_rmn[a][b]))
            emit(vec_sub(t.emb1(t.lnm[j][i], t.lmn[a][b]), t.emb2(t.rnm[j][i], t.rmn[a][b])));
        }
}

IncrementalRref gather_relations(const CrossedModulePair& p, const PairTables& t) {
  IncrementalRref acc(t.dF);
  enumerate_relations(p, t, [&](Vec v) {
    if (!vec_is_zero(v)) acc.insert(std::move(v));
  });
  return acc;
}

// lambda_M, lambda_N, lambda at the carrier level
struct CarrierMaps {
  Mat to_m, to_n, to_base;
};

CarrierMaps carrier_maps(const CrossedModulePair& p, const PairTables& t) {
  CarrierMaps maps;
  maps.to_m = Mat(t.dm, t.dF);
  maps.to_n = Mat(t.dn, t.dF);
  maps.to_base = Mat(p.base.dim, t.dF);
  for (int i = 0; i < t.dm; ++i)
    for (int j = 0; j < t.dn; ++j) {
      int c1 = t.idx1(i, j), c2 = t.idx2(j, i);
      for (int r = 0; r < t.dm; ++r) {
        maps.to_m.at(r, c1) = t.rmn[i][j][r]; // lambda_M(m*n) = m{n}
        maps.to_m.at(r, c2) = t.lnm[j][i][r]; // lambda_M(n*m) = {n}m
      }
      for (int r = 0; r < t.dn; ++r) {
        maps.to_n.at(r, c1) = t.lmn[i][j][r]; // lambda_N(m*n) = {m}n
        maps.to_n.at(r, c2) = t.rnm[j][i][r]; // lambda_N(n*m) = n{m}
      }
      Vec base1 = p.base.bracket(p.mu1.col(i), p.mu2.col(j));
      Vec base2 = p.base.bracket(p.mu2.col(j), p.mu1.col(i));
      for (int r = 0; r < p.base.dim; ++r) {
        maps.to_base.at(r, c1) = base1[r];
        maps.to_base.at(r, c2) = base2[r];
      }
    }
  return maps;
}

// Matching-image pairs P = {(m,n) : mu1(m) = mu2(n)} and the raw carrier
// vectors of the square generators m_a * n_b - n_a * m_b.
std::vector<Vec> square_generators(const CrossedModulePair& p, const PairTables& t) {
  Mat matching(p.base.dim, t.dm + t.dn);
  for (int r = 0; r < p.base.dim; ++r) {
    for (int i = 0; i < t.dm; ++i) matching.at(r, i) = p.mu1.at(r, i);
    for (int j = 0; j < t.dn; ++j) matching.at(r, t.dm + j) = -p.mu2.at(r, j);
  }
  Subspace pairs = kernel_basis(matching);
  std::vector<Vec> gens;
  for (const Vec& a : pairs.basis())
    for (const Vec& b : pairs.basis()) {
      Vec ua(a.begin(), a.begin() + t.dm), wa(a.begin() + t.dm, a.end());
      Vec ub(b.begin(), b.begin() + t.dm), wb(b.begin() + t.dm, b.end());
      Vec v = vec_sub(t.emb1(ua, wb), t.emb2(wa, ub));
      if (!vec_is_zero(v)) gens.push_back(std::move(v));
    }
  return gens;
}

ProductPresentation finish_presentation(const CrossedModulePair& p, const PairTables& t,
                                        const Subspace& relations, ProductKind kind) {
  ProductPresentation out;
  out.pair = p;
  out.kind = kind;
  out.relation_space = relations;

  QuotientMap q(t.dF, relations);
  const int d = q.quotient_dim();
  out.proj = q.projection();
  out.section = q.section();

  // alpha on generators: a(m*n) = a(m)*a(n); block Kronecker form
  Mat alpha_f(t.dF, t.dF);
  {
    Mat a1 = p.m.alpha.kron(p.n.alpha);
    Mat a2 = p.n.alpha.kron(p.m.alpha);
    for (int r = 0; r < a1.rows(); ++r)
      for (int c = 0; c < a1.cols(); ++c)
        if (a1.at(r, c) != 0) alpha_f.at(r, c) = a1.at(r, c);
    int off = t.dm * t.dn;
    for (int r = 0; r < a2.rows(); ++r)
      for (int c = 0; c < a2.cols(); ++c)
        if (a2.at(r, c) != 0) alpha_f.at(off + r, off + c) = a2.at(r, c);
  }
  for (const Vec& r : relations.basis())
    if (!relations.contains(alpha_f.apply(r)))
      throw Error(ErrorKind::integrity, "product: alpha does not preserve the relation space");

  CarrierMaps maps = carrier_maps(p, t);
  for (const Vec& r : relations.basis()) {
    if (!vec_is_zero(maps.to_m.apply(r)) || !vec_is_zero(maps.to_n.apply(r)) ||
        !vec_is_zero(maps.to_base.apply(r)))
      throw Error(ErrorKind::integrity, "product: a commutator map fails to kill the relations");
  }

  // bracket lift B(u,v) = lambda_M(u) (x) lambda_N(v), first summand.
  // B(R,F) = B(F,R) = 0 follows from the commutator maps killing R (checked
  // above), so the lift descends to the quotient.
  auto bracket_lift = [&](const Vec& u, const Vec& v) {
    return t.emb1(maps.to_m.apply(u), maps.to_n.apply(v));
  };

  std::string sep = (kind == ProductKind::tensor) ? "*" : "∧";
  HomLeibnizAlgebra total = HomLeibnizAlgebra::make(p.m.name + sep + p.n.name, d);
  for (int a = 0; a < d; ++a) {
    int f = -1;
    for (int r = 0; r < t.dF && f < 0; ++r)
      if (q.section().at(r, a) != 0) f = r;
    if (f < t.dm * t.dn) {
      int i = f / t.dn, j = f % t.dn;
      total.basis_labels[a] = "m[" + std::to_string(i + 1) + "]" + sep + "n[" + std::to_string(j + 1) + "]";
    } else {
      int rest = f - t.dm * t.dn;
      int j = rest / t.dm, i = rest % t.dm;
      total.basis_labels[a] = "n[" + std::to_string(j + 1) + "]" + sep + "m[" + std::to_string(i + 1) + "]";
    }
  }
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      total.sc[a][b] = q.project(bracket_lift(q.lift(vec_unit(d, a)), q.lift(vec_unit(d, b))));
  total.alpha = q.projection().mul(alpha_f).mul(q.section());
  ValidationReport vr = validate_algebra(total);
  if (!vr.empty()) throw Error(ErrorKind::integrity, "product: quotient fails Hom-Leibniz validation");
  out.total = total;
  out.gen_labels = total.basis_labels;

  out.lambda = maps.to_base.mul(q.section());
  out.lambda_m = maps.to_m.mul(q.section());
  out.lambda_n = maps.to_n.mul(q.section());
  {
    Morphism f1{total, p.base, out.lambda};
    Morphism f2{total, p.m, out.lambda_m};
    Morphism f3{total, p.n, out.lambda_n};
    if (!validate_morphism(f1).empty() || !validate_morphism(f2).empty() || !validate_morphism(f3).empty())
      throw Error(ErrorKind::integrity, "product: a commutator map is not a homomorphism");
  }
  return out;
}

void check_carrier_cap(const PairTables& t, long cap) {
  if (t.dF > cap)
    throw Error(ErrorKind::cap_exceeded,
                "size cap exceeded: product carrier " + std::to_string(t.dF) + " > " + std::to_string(cap));
}

} // namespace

Subspace relation_span(const CrossedModulePair& p) {
  PairTables t(p);
  return gather_relations(p, t).snapshot();
}

ProductPresentation tensor_product(const CrossedModulePair& p, long cap) {
  PairTables t(p);
  check_carrier_cap(t, cap);
  Subspace relations = gather_relations(p, t).snapshot();
  ProductPresentation out = finish_presentation(p, t, relations, ProductKind::tensor);
  out.tensor_dim = out.total.dim;
  out.square_space = Subspace::zero(out.total.dim);
  return out;
}

ProductPresentation exterior_product(const CrossedModulePair& p, long cap) {
  PairTables t(p);
  check_carrier_cap(t, cap);
  IncrementalRref acc = gather_relations(p, t);
  Subspace tensor_relations = acc.snapshot();
  QuotientMap tensor_q(t.dF, tensor_relations);

  std::vector<Vec> sq = square_generators(p, t);
  std::vector<Vec> sq_classes;
  for (const Vec& v : sq) sq_classes.push_back(tensor_q.project(v));
  Subspace square = Subspace::span(tensor_q.quotient_dim(), sq_classes);
  for (Vec& v : sq) acc.insert(std::move(v));

  ProductPresentation out = finish_presentation(p, t, acc.snapshot(), ProductKind::exterior);
  out.tensor_dim = tensor_q.quotient_dim();
  out.square_space = square;
  return out;
}

Subspace square_subspace(const ProductPresentation& q) {
  if (q.kind != ProductKind::tensor)
    throw Error(ErrorKind::precondition, "square_subspace: expects a tensor presentation");
  PairTables t(q.pair);
  std::vector<Vec> classes;
  for (const Vec& v : square_generators(q.pair, t)) classes.push_back(q.proj.apply(v));
  return Subspace::span(q.total.dim, classes);
}

ProductPresentation tensor_square(const HomLeibnizAlgebra& g, long cap) {
  return tensor_product(self_pair(g), cap);
}

ProductPresentation exterior_square(const HomLeibnizAlgebra& g, long cap) {
  return exterior_product(self_pair(g), cap);
}

Subspace commutator_kernel(const ProductPresentation& q) { return kernel_basis(q.lambda); }

GuestAction guest_action(const ProductPresentation& q) {
  const CrossedModulePair& p = q.pair;
  PairTables t(p);
  const HomAction& gm = p.action_on_m;
  const HomAction& gn = p.action_on_n;
  const int dg = p.base.dim, d = q.total.dim;

  // generator-level action of x on the carrier
  auto left_f = [&](int x, const Vec& f) {
    Vec out = vec_zero(t.dF);
    Vec ex = vec_unit(dg, x);
    for (int i = 0; i < t.dm; ++i)
      for (int j = 0; j < t.dn; ++j) {
        const Rat& c1 = f[t.idx1(i, j)];
        if (c1 != 0) {
          // {x}(m*n) = {x}m * a(n) - {x}n * a(m)
          Vec v = vec_sub(t.emb1(gm.act_left(ex, vec_unit(t.dm, i)), t.alpha_n[j]),
                          t.emb2(gn.act_left(ex, vec_unit(t.dn, j)), t.alpha_m[i]));
          vec_axpy(out, c1, v);
        }
        const Rat& c2 = f[t.idx2(j, i)];
        if (c2 != 0) {
          // {x}(n*m) = {x}n * a(m) - {x}m * a(n)
          Vec v = vec_sub(t.emb2(gn.act_left(ex, vec_unit(t.dn, j)), t.alpha_m[i]),
                          t.emb1(gm.act_left(ex, vec_unit(t.dm, i)), t.alpha_n[j]));
          vec_axpy(out, c2, v);
        }
      }
    return out;
  };
  auto right_f = [&](const Vec& f, int x) {
    Vec out = vec_zero(t.dF);
    Vec ex = vec_unit(dg, x);
    for (int i = 0; i < t.dm; ++i)
      for (int j = 0; j < t.dn; ++j) {
        const Rat& c1 = f[t.idx1(i, j)];
        if (c1 != 0) {
          // (m*n){x} = m{x} * a(n) + a(m) * n{x}
          Vec v = vec_add(t.emb1(gm.act_right(vec_unit(t.dm, i), ex), t.alpha_n[j]),
                          t.emb1(t.alpha_m[i], gn.act_right(vec_unit(t.dn, j), ex)));
          vec_axpy(out, c1, v);
        }
        const Rat& c2 = f[t.idx2(j, i)];
        if (c2 != 0) {
          // (n*m){x} = n{x} * a(m) + a(n) * m{x}
          Vec v = vec_add(t.emb2(gn.act_right(vec_unit(t.dn, j), ex), t.alpha_m[i]),
                          t.emb2(t.alpha_n[j], gm.act_right(vec_unit(t.dm, i), ex)));
          vec_axpy(out, c2, v);
        }
      }
    return out;
  };

  for (const Vec& r : q.relation_space.basis())
    for (int x = 0; x < dg; ++x)
      if (!q.relation_space.contains(left_f(x, r)) || !q.relation_space.contains(right_f(r, x)))
        throw Error(ErrorKind::integrity, "guest_action: action does not descend to the quotient");

  HomAction act;
  act.actor = p.base;
  act.actee = q.total;
  act.left.assign(dg, std::vector<Vec>(d));
  act.right.assign(d, std::vector<Vec>(dg));
  for (int x = 0; x < dg; ++x)
    for (int a = 0; a < d; ++a) {
      Vec lift = q.section.col(a);
      act.left[x][a] = q.proj.apply(left_f(x, lift));
      act.right[a][x] = q.proj.apply(right_f(lift, x));
    }

  GuestAction out;
  out.action = act;
  out.report = validate_action(act);

  // lambda-compatibility identities
  const HomLeibnizAlgebra& base = p.base;
  for (int x = 0; x < dg; ++x)
    for (int a = 0; a < d; ++a) {
      Vec lhs = q.lambda.apply(act.left[x][a]);
      Vec rhs = base.bracket(base.alpha.col(x), q.lambda.col(a));
      Vec res = vec_sub(lhs, rhs);
      if (!vec_is_zero(res)) out.report.push_back({"lambda-left-equivariance", {x, a}, res});
      lhs = q.lambda.apply(act.right[a][x]);
      rhs = base.bracket(q.lambda.col(a), base.alpha.col(x));
      res = vec_sub(lhs, rhs);
      if (!vec_is_zero(res)) out.report.push_back({"lambda-right-equivariance", {x, a}, res});
    }
  for (int a2 = 0; a2 < d; ++a2)
    for (int a = 0; a < d; ++a) {
      // {lambda(y')}y = [alpha(y'), y] and y{lambda(y')} = [y, alpha(y')]
      Vec lhs = act.act_left(q.lambda.col(a2), vec_unit(d, a));
      Vec rhs = q.total.bracket(q.total.alpha.col(a2), vec_unit(d, a));
      Vec res = vec_sub(lhs, rhs);
      if (!vec_is_zero(res)) out.report.push_back({"lambda-left-peiffer", {a2, a}, res});
      lhs = act.act_right(vec_unit(d, a), q.lambda.col(a2));
      rhs = q.total.bracket(vec_unit(d, a), q.total.alpha.col(a2));
      res = vec_sub(lhs, rhs);
      if (!vec_is_zero(res)) out.report.push_back({"lambda-right-peiffer", {a2, a}, res});
    }
  return out;
}

namespace {

// Carrier-level map between presentations induced by linear maps fm: M -> M',
// fn: N -> N' applied generator-wise.
Mat carrier_map(const ProductPresentation& src, const ProductPresentation& dst, const Mat& fm, const Mat& fn) {
  Mat block1 = fm.kron(fn); // first summands
  Mat block2 = fn.kron(fm); // second summands
  int rows = dst.carrier_dim(), cols = src.carrier_dim();
  Mat out(rows, cols);
  int dst_off = dst.mn_offset(), src_off = src.mn_offset();
  for (int r = 0; r < block1.rows(); ++r)
    for (int c = 0; c < block1.cols(); ++c)
      if (block1.at(r, c) != 0) out.at(r, c) = block1.at(r, c);
  for (int r = 0; r < block2.rows(); ++r)
    for (int c = 0; c < block2.cols(); ++c)
      if (block2.at(r, c) != 0) out.at(dst_off + r, src_off + c) = block2.at(r, c);
  return out;
}

// Descends a carrier map to the quotients, verifying relations land in
// relations.
Mat descend(const ProductPresentation& src, const ProductPresentation& dst, const Mat& carrier,
            const std::string& who) {
  for (const Vec& r : src.relation_space.basis())
    if (!dst.relation_space.contains(carrier.apply(r)))
      throw Error(ErrorKind::integrity, who + ": relations do not map into relations");
  return dst.proj.mul(carrier).mul(src.section);
}

} // namespace

Mat induced_product_map(const Morphism& f, ProductKind kind, long cap) {
  if (!validate_morphism(f).empty())
    throw Error(ErrorKind::precondition, "induced_product_map: invalid morphism");
  ProductPresentation src =
      (kind == ProductKind::tensor) ? tensor_square(f.source, cap) : exterior_square(f.source, cap);
  ProductPresentation dst =
      (kind == ProductKind::tensor) ? tensor_square(f.target, cap) : exterior_square(f.target, cap);
  Mat carrier = carrier_map(src, dst, f.matrix, f.matrix);
  return descend(src, dst, carrier, "induced_product_map");
}

CheckReport ideal_sequence_check(const HomLeibnizAlgebra& k, const Subspace& m_space, long cap) {
  CheckReport report;
  QuotientAlgebra g = quotient_algebra(k, m_space);

  ProductPresentation pmk = exterior_product(pair_from_ideals(k, m_space, Subspace::full(k.dim)), cap);
  ProductPresentation pkk = exterior_square(k, cap);
  ProductPresentation pgg = exterior_square(g.algebra, cap);

  Mat map1 = descend(pmk, pkk, carrier_map(pmk, pkk, pmk.pair.mu1, Mat::identity(k.dim)), "ideal_sequence");
  Mat map2 = induced_product_map(g.projection, ProductKind::exterior, cap);

  Subspace image1 = image_basis(map1);
  Subspace kernel2 = kernel_basis(map2);
  report.add("image(M^K -> K^K) = kernel(K^K -> G^G)", image1 == kernel2,
             "rank " + std::to_string(image1.dim()) + " vs kernel dim " + std::to_string(kernel2.dim()));
  int rank2 = image_basis(map2).dim();
  report.add("K^K -> G^G surjective", rank2 == pgg.total.dim,
             "rank " + std::to_string(rank2) + " of " + std::to_string(pgg.total.dim));
  return report;
}

CheckReport split_injectivity_check(const HomAction& a, long cap) {
  CheckReport report;
  SemidirectProduct sd = semidirect_product(a);
  const HomLeibnizAlgebra& k = sd.algebra;
  const int dm = a.actee.dim;
  std::vector<Vec> mrows;
  for (int i = 0; i < dm; ++i) mrows.push_back(vec_unit(k.dim, i));
  Subspace m_space = Subspace::span(k.dim, mrows);

  ProductPresentation pmk = exterior_product(pair_from_ideals(k, m_space, Subspace::full(k.dim)), cap);
  ProductPresentation pkk = exterior_square(k, cap);
  ProductPresentation pgg = exterior_square(a.actor, cap);

  Mat map1 = descend(pmk, pkk, carrier_map(pmk, pkk, pmk.pair.mu1, Mat::identity(k.dim)), "split_injectivity");
  int rank1 = image_basis(map1).dim();
  report.add("M^K -> K^K injective", rank1 == pmk.total.dim,
             "rank " + std::to_string(rank1) + " of " + std::to_string(pmk.total.dim));
  report.add("dim(K^K) = dim(M^K) + dim(G^G)", pkk.total.dim == pmk.total.dim + pgg.total.dim,
             std::to_string(pkk.total.dim) + " vs " + std::to_string(pmk.total.dim) + " + " +
                 std::to_string(pgg.total.dim));
  return report;
}

CheckReport perfect_checks(const HomLeibnizAlgebra& g, long cap) {
  if (!is_perfect(g)) throw Error(ErrorKind::precondition, "perfect_checks: algebra is not perfect");
  CheckReport report;
  ProductPresentation pt = tensor_square(g, cap);
  ProductPresentation pe = exterior_square(g, cap);
  report.add("exterior square perfect", derived_subalgebra(pe.total).dim() == pe.total.dim);
  Subspace ker = commutator_kernel(pe);
  report.add("ker(lambda) central", center(pe.total).contains(ker));
  report.add("dim(g*g) = dim(g^g)", pt.total.dim == pe.total.dim,
             std::to_string(pt.total.dim) + " vs " + std::to_string(pe.total.dim));
  int hl2 = hl_dim(g, 2, cap);
  report.add("dim ker(lambda) = dim HL2", ker.dim() == hl2,
             std::to_string(ker.dim()) + " vs " + std::to_string(hl2));
  return report;
}

CheckReport eight_term_check(const HomLeibnizAlgebra& k, const Subspace& m_space, const Mat* eta, long cap) {
  CheckReport report;
  QuotientAlgebra g = quotient_algebra(k, m_space);
  Subalgebra msub = subalgebra_from_subspace(k, m_space, "M");

  ProductPresentation pmk = exterior_product(pair_from_ideals(k, m_space, Subspace::full(k.dim)), cap);
  ProductPresentation pkk = exterior_square(k, cap);
  ProductPresentation pgg = exterior_square(g.algebra, cap);

  Subspace ker_mk = commutator_kernel(pmk);
  Subspace ker_k = commutator_kernel(pkk);
  Subspace ker_g = commutator_kernel(pgg);

  Mat map1 = descend(pmk, pkk, carrier_map(pmk, pkk, pmk.pair.mu1, Mat::identity(k.dim)), "eight_term");
  Mat map2 = induced_product_map(g.projection, ProductKind::exterior, cap);

  Subspace in_k = ker_mk.apply(map1);
  if (!ker_k.contains(in_k)) throw Error(ErrorKind::integrity, "eight_term: map1 escapes ker(lambda_K)");
  Subspace out_k = ker_k.intersect(kernel_basis(map2));
  report.add("exact at HL2(K)", in_k == out_k,
             "image " + std::to_string(in_k.dim()) + ", kernel " + std::to_string(out_k.dim()));

  Subspace in_g = ker_k.apply(map2);
  if (!ker_g.contains(in_g)) throw Error(ErrorKind::integrity, "eight_term: map2 escapes ker(lambda_G)");

  // connecting map: lift through the quotient section, push through lambda_K,
  // land in M, project modulo [M,K]
  Subspace mk_comm = higgins_commutator(k, m_space, Subspace::full(k.dim));
  std::vector<Vec> comm_coords;
  for (const Vec& v : mk_comm.basis()) {
    auto c = m_space.coordinates(v);
    if (!c) throw Error(ErrorKind::integrity, "eight_term: [M,K] escapes M");
    comm_coords.push_back(*c);
  }
  QuotientMap qm(msub.algebra.dim, Subspace::span(msub.algebra.dim, comm_coords));

  Mat lift_carrier = carrier_map(pgg, pkk, g.map.section(), g.map.section());
  Mat delta(qm.quotient_dim(), ker_g.dim());
  for (int a = 0; a < ker_g.dim(); ++a) {
    Vec w = pgg.section.apply(ker_g.basis()[a]);
    Vec u = pkk.proj.apply(lift_carrier.apply(w));
    Vec z = pkk.lambda.apply(u);
    auto zc = m_space.coordinates(z);
    if (!zc) throw Error(ErrorKind::integrity, "eight_term: connecting image escapes M");
    Vec cls = qm.project(*zc);
    for (int r = 0; r < qm.quotient_dim(); ++r) delta.at(r, a) = cls[r];
  }

  // exactness at HL2(G): image(map2 | ker) = kernel(delta) inside ker_g
  std::vector<Vec> ker_delta_rows;
  Subspace delta_kernel = kernel_basis(delta);
  for (const Vec& c : delta_kernel.basis()) {
    Vec v = vec_zero(ker_g.ambient_dim());
    for (int i = 0; i < ker_g.dim(); ++i) vec_axpy(v, c[i], ker_g.basis()[i]);
    ker_delta_rows.push_back(std::move(v));
  }
  Subspace ker_delta = Subspace::span(ker_g.ambient_dim(), ker_delta_rows);
  report.add("exact at HL2(G)", in_g == ker_delta,
             "image " + std::to_string(in_g.dim()) + ", kernel " + std::to_string(ker_delta.dim()));

  QuotientAlgebra kab = abelianization(k);
  QuotientAlgebra gab = abelianization(g.algebra);
  Mat map4 = kab.map.projection().mul(msub.embed).mul(qm.section());
  Mat map5 = gab.map.projection().mul(g.map.projection()).mul(kab.map.section());
  Subspace in_m = image_basis(delta);
  Subspace out_m = kernel_basis(map4);
  report.add("exact at M/[M,K]", in_m == out_m,
             "image " + std::to_string(in_m.dim()) + ", kernel " + std::to_string(out_m.dim()));
  Subspace in_h1 = image_basis(map4);
  Subspace out_h1 = kernel_basis(map5);
  report.add("exact at HL1(K)", in_h1 == out_h1,
             "image " + std::to_string(in_h1.dim()) + ", kernel " + std::to_string(out_h1.dim()));
  report.add("HL1(K) -> HL1(G) surjective", image_basis(map5).dim() == gab.algebra.dim);

  if (eta != nullptr) {
    Morphism split{g.algebra, k, *eta};
    if (!validate_morphism(split).empty())
      throw Error(ErrorKind::precondition, "eight_term: eta is not a morphism");
    if (g.map.projection().mul(*eta) != Mat::identity(g.algebra.dim))
      throw Error(ErrorKind::precondition, "eight_term: eta is not a splitting");
    report.add("split: ker(lambda_MK) -> HL2(K) injective", in_k.dim() == ker_mk.dim(),
               std::to_string(in_k.dim()) + " vs " + std::to_string(ker_mk.dim()));
    report.add("split: HL2(K) -> HL2(G) surjective", in_g == ker_g);
    report.add("split: dim HL2(K) = dim ker(lambda_MK) + dim HL2(G)",
               ker_k.dim() == ker_mk.dim() + ker_g.dim(),
               std::to_string(ker_k.dim()) + " vs " + std::to_string(ker_mk.dim()) + " + " +
                   std::to_string(ker_g.dim()));
  }
  return report;
}

CheckReport direct_sum_formulas_check(const HomLeibnizAlgebra& g1, const HomLeibnizAlgebra& g2, long cap) {
  CheckReport report;
  HomLeibnizAlgebra sum = direct_sum(g1, g2);

  auto jl2 = [&](const HomLeibnizAlgebra& g) { return commutator_kernel(tensor_square(g, cap)).dim(); };
  int jl2_sum = jl2(sum), jl2_1 = jl2(g1), jl2_2 = jl2(g2);
  int hl2_sum = hl_dim(sum, 2, cap), hl2_1 = hl_dim(g1, 2, cap), hl2_2 = hl_dim(g2, 2, cap);

  HomLeibnizAlgebra a1 = abelianization(g1).algebra;
  HomLeibnizAlgebra a2 = abelianization(g2).algebra;
  HomLeibnizAlgebra d = direct_sum(a1, a2);
  std::vector<Vec> rows1, rows2;
  for (int i = 0; i < a1.dim; ++i) rows1.push_back(vec_unit(d.dim, i));
  for (int i = 0; i < a2.dim; ++i) rows2.push_back(vec_unit(d.dim, a1.dim + i));
  Subspace block1 = Subspace::span(d.dim, rows1), block2 = Subspace::span(d.dim, rows2);
  int t12 = tensor_product(pair_from_ideals(d, block1, block2), cap).total.dim;
  int t21 = tensor_product(pair_from_ideals(d, block2, block1), cap).total.dim;

  // raw cross terms (the trivially-acting pair of the summands themselves),
  // reported for diagnosis: the stated formulas collapse these to the
  // abelianized cross terms, which is exact when the endomorphisms are
  // surjective
  std::vector<Vec> srows1, srows2;
  for (int i = 0; i < g1.dim; ++i) srows1.push_back(vec_unit(sum.dim, i));
  for (int i = 0; i < g2.dim; ++i) srows2.push_back(vec_unit(sum.dim, g1.dim + i));
  Subspace sblock1 = Subspace::span(sum.dim, srows1), sblock2 = Subspace::span(sum.dim, srows2);
  int c12 = tensor_product(pair_from_ideals(sum, sblock1, sblock2), cap).total.dim;
  int c21 = tensor_product(pair_from_ideals(sum, sblock2, sblock1), cap).total.dim;

  report.add("JL2(g1+g2) = JL2(g1) + JL2(g2) + dim(ab1*ab2) + dim(ab2*ab1)",
             jl2_sum == jl2_1 + jl2_2 + t12 + t21,
             std::to_string(jl2_sum) + " vs " + std::to_string(jl2_1) + "+" + std::to_string(jl2_2) + "+" +
                 std::to_string(t12) + "+" + std::to_string(t21) + "; raw cross " + std::to_string(c12) +
                 "," + std::to_string(c21));
  report.add("HL2(g1+g2) = HL2(g1) + HL2(g2) + dim(ab1*ab2)", hl2_sum == hl2_1 + hl2_2 + t12,
             std::to_string(hl2_sum) + " vs " + std::to_string(hl2_1) + "+" + std::to_string(hl2_2) + "+" +
                 std::to_string(t12));
  if (g1.alpha_surjective() && g2.alpha_surjective()) {
    int refined = hl2_1 + hl2_2 + a1.dim * a2.dim + a2.dim * a1.dim;
    report.add("surjective refinement with tensor cross terms", hl2_sum == refined,
               std::to_string(hl2_sum) + " vs " + std::to_string(refined));
  } else {
    report.add_na("surjective refinement with tensor cross terms");
  }
  if (is_perfect(g1) && is_perfect(g2)) {
    report.add("perfect summands: cross terms vanish", t12 == 0 && t21 == 0,
               std::to_string(t12) + ", " + std::to_string(t21));
  } else {
    report.add_na("perfect summands: cross terms vanish");
  }
  return report;
}

} // namespace homleib
