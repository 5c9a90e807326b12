#include "homleib/capability.hpp"

namespace homleib {

namespace {

// {x : the classes of x*e_j, e_j*x vanish in the product, both families},
// then stabilized under alpha.
Subspace pairing_center(const HomLeibnizAlgebra& g, const ProductPresentation& q) {
  const int d = g.dim;
  const int dq = q.total.dim;
  const int off = q.mn_offset();
  Mat constraints(4 * d * dq, d);
  int row = 0;
  for (int j = 0; j < d; ++j) {
    // class matrices as functions of x, one per condition
    for (int variant = 0; variant < 4; ++variant) {
      for (int i = 0; i < d; ++i) {
        int f;
        switch (variant) {
          case 0: f = i * d + j; break;        // (x (x) e_j) first family
          case 1: f = j * d + i; break;        // (e_j (x) x) first family
          case 2: f = off + i * d + j; break;  // second family, x first
          default: f = off + j * d + i; break; // second family, x second
        }
        for (int r = 0; r < dq; ++r) constraints.at(row + r, i) += q.proj.at(r, f);
      }
      row += dq;
    }
  }
  Subspace s = kernel_basis(constraints);
  return alpha_stable_core(s, g.alpha);
}

} // namespace

Subspace tensor_center(const HomLeibnizAlgebra& g, long cap) {
  return pairing_center(g, tensor_square(g, cap));
}

Subspace exterior_center(const HomLeibnizAlgebra& g, long cap) {
  return pairing_center(g, exterior_square(g, cap));
}

std::pair<bool, CenterReport> is_capable(const HomLeibnizAlgebra& g, long cap) {
  CenterReport report;
  report.z = center(g);
  report.z_alpha = alpha_center(g);
  // both squares share the relation sweep of the self pair; build each once
  CrossedModulePair pair = self_pair(g);
  report.z_star = pairing_center(g, tensor_product(pair, cap));
  report.z_wedge = pairing_center(g, exterior_product(pair, cap));
  report.capable = report.z_wedge.dim() == 0;
  if (!report.capable) report.witness = report.z_wedge.basis().front();
  return {report.capable, report};
}

CheckReport capability_consistency_suite(const HomLeibnizAlgebra& g, const HomLeibnizAlgebra* summand1,
                                         const HomLeibnizAlgebra* summand2, long cap) {
  CheckReport report;
  auto [capable, centers] = is_capable(g, cap);
  bool perfect = is_perfect(g);
  bool surj = g.alpha_surjective();
  Subspace derived = derived_subalgebra(g);

  if (perfect && surj) {
    bool z_zero = centers.z.dim() == 0;
    report.add("(a) perfect, surjective alpha: capable iff Z = 0", capable == z_zero,
               std::string("capable=") + (capable ? "yes" : "no") + ", dim Z=" + std::to_string(centers.z.dim()));
  } else {
    report.add_na("(a) perfect, surjective alpha: capable iff Z = 0");
  }

  if (perfect) {
    Subspace ker_alpha = kernel_basis(g.alpha);
    bool in_ker = ker_alpha.contains(centers.z_alpha);
    report.add("(b) perfect: capable iff Z_alpha inside ker(alpha)", capable == in_ker);
  } else {
    report.add_na("(b) perfect: capable iff Z_alpha inside ker(alpha)");
  }

  if (!perfect && !surj) {
    report.add("(c) non-perfect, non-surjective alpha: capable", capable,
               "dim Z_wedge=" + std::to_string(centers.z_wedge.dim()));
  } else {
    report.add_na("(c) non-perfect, non-surjective alpha: capable");
  }

  if (surj) {
    report.add("(d) surjective alpha: Z*, Z_wedge inside [g,g]",
               derived.contains(centers.z_star) && derived.contains(centers.z_wedge));
  } else {
    report.add_na("(d) surjective alpha: Z*, Z_wedge inside [g,g]");
  }

  if (summand1 != nullptr && summand2 != nullptr && g.is_regular()) {
    // blockwise inclusion Z_wedge(g1+g2) <= Z_wedge(g1) (+) Z_wedge(g2)
    Subspace zw1 = exterior_center(*summand1, cap);
    Subspace zw2 = exterior_center(*summand2, cap);
    int d1 = summand1->dim, d2 = summand2->dim;
    std::vector<Vec> rows;
    for (const Vec& v : zw1.basis()) {
      Vec w = vec_zero(d1 + d2);
      for (int i = 0; i < d1; ++i) w[i] = v[i];
      rows.push_back(std::move(w));
    }
    for (const Vec& v : zw2.basis()) {
      Vec w = vec_zero(d1 + d2);
      for (int i = 0; i < d2; ++i) w[d1 + i] = v[i];
      rows.push_back(std::move(w));
    }
    Subspace block_sum = Subspace::span(d1 + d2, rows);
    report.add("(e) Z_wedge(g1+g2) inside Z_wedge(g1) (+) Z_wedge(g2)", block_sum.contains(centers.z_wedge),
               std::to_string(centers.z_wedge.dim()) + " vs " + std::to_string(block_sum.dim()));
    if (capable) {
      bool c1 = zw1.dim() == 0, c2 = zw2.dim() == 0;
      report.add("(e) capable regular sum: both summands capable", c1 && c2);
    } else {
      report.add_na("(e) capable regular sum: both summands capable");
    }
  } else {
    report.add_na("(e) regular direct-sum inheritance");
  }
  return report;
}

CheckReport smallest_center_characterization_check(const HomLeibnizAlgebra& g, const Subspace& n, long cap) {
  // precondition: n is a central (two-sided) alpha-invariant subalgebra
  Subspace z = center(g);
  if (!z.contains(n)) throw Error(ErrorKind::precondition, "smallest_center_check: n is not central");
  for (const Vec& v : n.basis())
    if (!n.contains(g.alpha.apply(v)))
      throw Error(ErrorKind::precondition, "smallest_center_check: n is not alpha-invariant");

  CheckReport report;
  Subspace zw = exterior_center(g, cap);
  bool inside = zw.contains(n);

  QuotientAlgebra q = quotient_algebra(g, n);
  int hl2_quot = hl_dim(q.algebra, 2, cap);
  int hl2_g = hl_dim(g, 2, cap);
  int extra = n.intersect(derived_subalgebra(g)).dim();
  bool identity_holds = hl2_quot == hl2_g + extra;
  report.add("n inside Z_wedge iff dim HL2(g/n) = dim HL2(g) + dim(n cap [g,g])", inside == identity_holds,
             std::to_string(hl2_quot) + " vs " + std::to_string(hl2_g) + " + " + std::to_string(extra) +
                 (inside ? " (n central-exterior)" : " (n not in Z_wedge)"));

  Mat induced = induced_map_on_homology(q.projection, 2, cap);
  bool injective = kernel_basis(induced).dim() == 0;
  report.add("HL2(g) -> HL2(g/n) injective iff n inside Z_wedge", injective == inside);
  return report;
}

} // namespace homleib
