#include "homleib/action.hpp"

namespace homleib {

HomAction HomAction::trivial(const HomLeibnizAlgebra& actor, const HomLeibnizAlgebra& actee) {
  HomAction a;
  a.actor = actor;
  a.actee = actee;
  a.left.assign(actor.dim, std::vector<Vec>(actee.dim, vec_zero(actee.dim)));
  a.right.assign(actee.dim, std::vector<Vec>(actor.dim, vec_zero(actee.dim)));
  return a;
}

Vec HomAction::act_left(const Vec& m, const Vec& n) const {
  Vec out = vec_zero(actee.dim);
  for (int i = 0; i < actor.dim; ++i) {
    if (m[i] == 0) continue;
    for (int j = 0; j < actee.dim; ++j)
      if (n[j] != 0) vec_axpy(out, m[i] * n[j], left[i][j]);
  }
  return out;
}

Vec HomAction::act_right(const Vec& n, const Vec& m) const {
  Vec out = vec_zero(actee.dim);
  for (int j = 0; j < actee.dim; ++j) {
    if (n[j] == 0) continue;
    for (int i = 0; i < actor.dim; ++i)
      if (m[i] != 0) vec_axpy(out, n[j] * m[i], right[j][i]);
  }
  return out;
}

ValidationReport validate_action(const HomAction& a) {
  ValidationReport report;
  const HomLeibnizAlgebra& M = a.actor;
  const HomLeibnizAlgebra& N = a.actee;
  auto alphaM = [&](int i) { return M.alpha.col(i); };
  auto alphaN = [&](int j) { return N.alpha.col(j); };

  for (int i = 0; i < M.dim; ++i)
    for (int i2 = 0; i2 < M.dim; ++i2)
      for (int j = 0; j < N.dim; ++j) {
        // (A1) {[m,m']}(alpha n) = ({m}n){alpha m'} + {alpha m}({m'}n)
        // (the second summand written via (A5); the bracket self-action
        // satisfies exactly this form of the axiom)
        Vec lhs = a.act_left(M.sc[i][i2], alphaN(j));
        Vec rhs = vec_add(a.act_right(a.left[i][j], alphaM(i2)), a.act_left(alphaM(i), a.left[i2][j]));
        Vec res = vec_sub(lhs, rhs);
        if (!vec_is_zero(res)) report.push_back({"A1", {i, i2, j}, res});
        // (A3) (alpha n){[m,m']} = (n{m}){alpha m'} - (n{m'}){alpha m}
        lhs = a.act_right(alphaN(j), M.sc[i][i2]);
        rhs = vec_sub(a.act_right(a.right[j][i], alphaM(i2)), a.act_right(a.right[j][i2], alphaM(i)));
        res = vec_sub(lhs, rhs);
        if (!vec_is_zero(res)) report.push_back({"A3", {i, i2, j}, res});
        // (A5) {alpha m}({m'}n) = -{alpha m}(n{m'})
        lhs = a.act_left(alphaM(i), a.left[i2][j]);
        rhs = vec_scale(a.act_left(alphaM(i), a.right[j][i2]), Rat(-1));
        res = vec_sub(lhs, rhs);
        if (!vec_is_zero(res)) report.push_back({"A5", {i, i2, j}, res});
      }

  for (int i = 0; i < M.dim; ++i)
    for (int j = 0; j < N.dim; ++j)
      for (int j2 = 0; j2 < N.dim; ++j2) {
        // (A2) {alpha m}[n,n'] = [{m}n, alpha n'] - [{m}n', alpha n]
        Vec lhs = a.act_left(alphaM(i), N.sc[j][j2]);
        Vec rhs = vec_sub(N.bracket(a.left[i][j], alphaN(j2)), N.bracket(a.left[i][j2], alphaN(j)));
        Vec res = vec_sub(lhs, rhs);
        if (!vec_is_zero(res)) report.push_back({"A2", {i, j, j2}, res});
        // (A4) [n,n']{alpha m} = [n{m}, alpha n'] + [alpha n, n'{m}]
        lhs = a.act_right(N.sc[j][j2], alphaM(i));
        rhs = vec_add(N.bracket(a.right[j][i], alphaN(j2)), N.bracket(alphaN(j), a.right[j2][i]));
        res = vec_sub(lhs, rhs);
        if (!vec_is_zero(res)) report.push_back({"A4", {i, j, j2}, res});
        // (A6) [alpha n, {m}n'] = -[alpha n, n'{m}]
        lhs = N.bracket(alphaN(j), a.left[i][j2]);
        rhs = vec_scale(N.bracket(alphaN(j), a.right[j2][i]), Rat(-1));
        res = vec_sub(lhs, rhs);
        if (!vec_is_zero(res)) report.push_back({"A6", {j, i, j2}, res});
      }

  for (int i = 0; i < M.dim; ++i)
    for (int j = 0; j < N.dim; ++j) {
      // (A7) alpha({m}n) = {alpha m}(alpha n)
      Vec res = vec_sub(N.alpha.apply(a.left[i][j]), a.act_left(alphaM(i), alphaN(j)));
      if (!vec_is_zero(res)) report.push_back({"A7", {i, j}, res});
      // (A8) alpha(n{m}) = (alpha n){alpha m}
      res = vec_sub(N.alpha.apply(a.right[j][i]), a.act_right(alphaN(j), alphaM(i)));
      if (!vec_is_zero(res)) report.push_back({"A8", {i, j}, res});
    }
  return report;
}

HomAction action_by_bracket(const HomLeibnizAlgebra& g, const Subalgebra& actor, const Subalgebra& actee) {
  HomAction a;
  a.actor = actor.algebra;
  a.actee = actee.algebra;
  const int dm = actor.algebra.dim, dn = actee.algebra.dim;
  a.left.assign(dm, std::vector<Vec>(dn, vec_zero(dn)));
  a.right.assign(dn, std::vector<Vec>(dm, vec_zero(dn)));
  Subspace actee_span = image_basis(actee.embed);
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < dn; ++j) {
      Vec l = g.bracket(actor.embed.col(i), actee.embed.col(j));
      Vec r = g.bracket(actee.embed.col(j), actor.embed.col(i));
      auto lc = actee_span.coordinates(l);
      auto rc = actee_span.coordinates(r);
      if (!lc || !rc)
        throw Error(ErrorKind::precondition, "action_by_bracket: bracket escapes the actee (not an ideal)");
      a.left[i][j] = *lc;
      a.right[j][i] = *rc;
    }
  return a;
}

HomAction self_action(const HomLeibnizAlgebra& g) {
  Subalgebra whole{g, Mat::identity(g.dim)};
  return action_by_bracket(g, whole, whole);
}

SemidirectProduct semidirect_product(const HomAction& a) {
  ValidationReport rep = validate_action(a);
  if (!rep.empty())
    throw Error(ErrorKind::precondition, "semidirect_product: action fails (A1)-(A8), first at " + rep.front().axiom);
  const HomLeibnizAlgebra& M = a.actee;
  const HomLeibnizAlgebra& G = a.actor;
  const int dm = M.dim, dg = G.dim, d = dm + dg;
  HomLeibnizAlgebra s = HomLeibnizAlgebra::make(M.name + "x|" + G.name, d);
  for (int i = 0; i < dm; ++i) s.basis_labels[i] = M.label(i);
  for (int i = 0; i < dg; ++i) s.basis_labels[dm + i] = G.label(i);

  auto put_m = [&](Vec& slot, const Vec& mv) {
    for (int k = 0; k < dm; ++k) slot[k] += mv[k];
  };
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < dm; ++j) put_m(s.sc[i][j], M.sc[i][j]);
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < dg; ++j) put_m(s.sc[i][dm + j], a.act_right(vec_unit(dm, i), G.alpha.col(j)));
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j < dm; ++j) put_m(s.sc[dm + i][j], a.act_left(G.alpha.col(i), vec_unit(dm, j)));
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j < dg; ++j)
      for (int k = 0; k < dg; ++k) s.sc[dm + i][dm + j][dm + k] = G.sc[i][j][k];
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < dm; ++j) s.alpha.at(i, j) = M.alpha.at(i, j);
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j < dg; ++j) s.alpha.at(dm + i, dm + j) = G.alpha.at(i, j);

  ValidationReport srep = validate_algebra(s);
  if (!srep.empty())
    throw Error(ErrorKind::integrity, "semidirect_product: carrier fails Hom-Leibniz validation");

  Mat inc_m(d, dm), inc_g(d, dg), proj_g(dg, d);
  for (int i = 0; i < dm; ++i) inc_m.at(i, i) = 1;
  for (int i = 0; i < dg; ++i) inc_g.at(dm + i, i) = 1;
  for (int i = 0; i < dg; ++i) proj_g.at(i, dm + i) = 1;
  return SemidirectProduct{s, Morphism{M, s, inc_m}, Morphism{G, s, inc_g}, Morphism{s, G, proj_g}};
}

namespace {

void check_side(const HomLeibnizAlgebra& base, const HomLeibnizAlgebra& part, const Mat& mu,
                const HomAction& act, const std::string& tag, ValidationReport& report) {
  Morphism f{part, base, mu};
  for (Violation v : validate_morphism(f)) {
    v.axiom = tag + "-" + v.axiom;
    report.push_back(v);
  }
  for (Violation v : validate_action(act)) {
    v.axiom = tag + "-action-" + v.axiom;
    report.push_back(v);
  }
  // equivariance: mu({x}m) = [x, mu(m)],  mu(m{x}) = [mu(m), x]
  for (int x = 0; x < base.dim; ++x)
    for (int i = 0; i < part.dim; ++i) {
      Vec res = vec_sub(mu.apply(act.left[x][i]), base.bracket(vec_unit(base.dim, x), mu.col(i)));
      if (!vec_is_zero(res)) report.push_back({tag + "-equivariance-left", {x, i}, res});
      res = vec_sub(mu.apply(act.right[i][x]), base.bracket(mu.col(i), vec_unit(base.dim, x)));
      if (!vec_is_zero(res)) report.push_back({tag + "-equivariance-right", {x, i}, res});
    }
  // Peiffer: {mu(m)}m' = [m,m'] = m{mu(m')}
  for (int i = 0; i < part.dim; ++i)
    for (int j = 0; j < part.dim; ++j) {
      Vec res = vec_sub(act.act_left(mu.col(i), vec_unit(part.dim, j)), part.sc[i][j]);
      if (!vec_is_zero(res)) report.push_back({tag + "-peiffer-left", {i, j}, res});
      res = vec_sub(act.act_right(vec_unit(part.dim, i), mu.col(j)), part.sc[i][j]);
      if (!vec_is_zero(res)) report.push_back({tag + "-peiffer-right", {i, j}, res});
    }
}

} // namespace

ValidationReport validate_crossed_module(const CrossedModulePair& p) {
  ValidationReport report;
  check_side(p.base, p.m, p.mu1, p.action_on_m, "mu1", report);
  check_side(p.base, p.n, p.mu2, p.action_on_n, "mu2", report);

  // derived mutual actions must themselves satisfy (A1)-(A8)
  HomAction m_on_n;
  m_on_n.actor = p.m;
  m_on_n.actee = p.n;
  m_on_n.left.assign(p.m.dim, std::vector<Vec>(p.n.dim));
  m_on_n.right.assign(p.n.dim, std::vector<Vec>(p.m.dim));
  for (int i = 0; i < p.m.dim; ++i)
    for (int j = 0; j < p.n.dim; ++j) {
      m_on_n.left[i][j] = p.m_on_n_left(vec_unit(p.m.dim, i), vec_unit(p.n.dim, j));
      m_on_n.right[j][i] = p.m_on_n_right(vec_unit(p.n.dim, j), vec_unit(p.m.dim, i));
    }
  for (Violation v : validate_action(m_on_n)) {
    v.axiom = "mutual-mn-" + v.axiom;
    report.push_back(v);
  }
  HomAction n_on_m;
  n_on_m.actor = p.n;
  n_on_m.actee = p.m;
  n_on_m.left.assign(p.n.dim, std::vector<Vec>(p.m.dim));
  n_on_m.right.assign(p.m.dim, std::vector<Vec>(p.n.dim));
  for (int j = 0; j < p.n.dim; ++j)
    for (int i = 0; i < p.m.dim; ++i) {
      n_on_m.left[j][i] = p.n_on_m_left(vec_unit(p.n.dim, j), vec_unit(p.m.dim, i));
      n_on_m.right[i][j] = p.n_on_m_right(vec_unit(p.m.dim, i), vec_unit(p.n.dim, j));
    }
  for (Violation v : validate_action(n_on_m)) {
    v.axiom = "mutual-nm-" + v.axiom;
    report.push_back(v);
  }
  return report;
}

CrossedModulePair pair_from_ideals(const HomLeibnizAlgebra& g, const Subspace& m_space, const Subspace& n_space) {
  if (!is_ideal(g, m_space) || !is_ideal(g, n_space))
    throw Error(ErrorKind::precondition, "pair_from_ideals: subspaces must be ideals (alpha-invariant)");
  Subalgebra whole{g, Mat::identity(g.dim)};
  Subalgebra m_sub = subalgebra_from_subspace(g, m_space, g.name + ".m");
  Subalgebra n_sub = subalgebra_from_subspace(g, n_space, g.name + ".n");
  CrossedModulePair p;
  p.base = g;
  p.m = m_sub.algebra;
  p.n = n_sub.algebra;
  p.mu1 = m_sub.embed;
  p.mu2 = n_sub.embed;
  p.action_on_m = action_by_bracket(g, whole, m_sub);
  p.action_on_n = action_by_bracket(g, whole, n_sub);
  ValidationReport rep = validate_crossed_module(p);
  if (!rep.empty())
    throw Error(ErrorKind::integrity, "pair_from_ideals: crossed-module validation failed at " + rep.front().axiom);
  return p;
}

CrossedModulePair self_pair(const HomLeibnizAlgebra& g) {
  return pair_from_ideals(g, Subspace::full(g.dim), Subspace::full(g.dim));
}

} // namespace homleib
