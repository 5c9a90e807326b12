#include "homleib/homology.hpp"

#include <string>

namespace homleib {

namespace {

long ipow(long base, int exp) {
  long out = 1;
  for (int i = 0; i < exp; ++i) {
    out *= base;
    if (out < 0) throw Error(ErrorKind::cap_exceeded, "tensor power overflows");
  }
  return out;
}

void check_cap(const HomLeibnizAlgebra& g, int degree, long cap) {
  if (ipow(g.dim, degree) > cap)
    throw Error(ErrorKind::cap_exceeded, "size cap exceeded: dim^" + std::to_string(degree) + " = " +
                                             std::to_string(ipow(g.dim, degree)) + " > " + std::to_string(cap));
}

// Accumulates c * (factor_1 (x) ... (x) factor_k) into a column.
void add_tensor(Vec& column, const Rat& c, const std::vector<const Vec*>& factors, int dim) {
  size_t k = factors.size();
  std::vector<int> idx(k, 0);
  // iterate over the full index grid, skipping zero factors early
  for (;;) {
    Rat coeff = c;
    long pos = 0;
    bool zero = false;
    for (size_t t = 0; t < k; ++t) {
      const Rat& e = (*factors[t])[idx[t]];
      if (e == 0) {
        zero = true;
        break;
      }
      coeff *= e;
      pos = pos * dim + idx[t];
    }
    if (!zero) column[pos] += coeff;
    // odometer advance; desk-scale dims keep the full grid cheap
    size_t t = k;
    while (t > 0) {
      --t;
      if (++idx[t] < dim) break;
      idx[t] = 0;
      if (t == 0) return;
    }
    if (k == 0) return;
  }
}

Mat assemble_general(const HomLeibnizAlgebra& g, int n) {
  const int d = g.dim;
  long rows = ipow(d, n - 1), cols = ipow(d, n);
  Mat out(static_cast<int>(rows), static_cast<int>(cols));
  std::vector<int> tuple(n, 0);
  std::vector<Vec> alpha_cols(d);
  for (int i = 0; i < d; ++i) alpha_cols[i] = g.alpha.col(i);
  for (long c = 0; c < cols; ++c) {
    // decode lexicographic tuple (first slot major)
    long rem = c;
    for (int t = n - 1; t >= 0; --t) {
      tuple[t] = int(rem % d);
      rem /= d;
    }
    Vec column(rows, Rat(0));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        // slot i (0-based) carries [x_i, x_j], slot j is omitted, all other
        // slots get alpha; sign (-1)^{j+1} with 1-based j
        const Vec& br = g.sc[tuple[i]][tuple[j]];
        if (vec_is_zero(br)) continue;
        Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1); // (-1)^{J+1}, J = j+1 one-based
        std::vector<const Vec*> factors;
        factors.reserve(n - 1);
        for (int t = 0; t < n; ++t) {
          if (t == j) continue;
          factors.push_back(t == i ? &br : &alpha_cols[tuple[t]]);
        }
        add_tensor(column, sign, factors, d);
      }
    for (long r = 0; r < rows; ++r)
      if (column[r] != 0) out.at(int(r), int(c)) = column[r];
  }
  return out;
}

} // namespace

Mat boundary_matrix_general(const HomLeibnizAlgebra& g, int n) {
  if (n < 1) throw Error(ErrorKind::precondition, "boundary_matrix: degree must be >= 1");
  if (n == 1) return Mat(0, g.dim);
  return assemble_general(g, n);
}

Mat boundary_matrix(const HomLeibnizAlgebra& g, int n) {
  if (n < 1) throw Error(ErrorKind::precondition, "boundary_matrix: degree must be >= 1");
  if (n == 1) return Mat(0, g.dim);
  if (n == 2) {
    // d2(e_i (x) e_j) = [e_i, e_j]
    Mat out(g.dim, g.dim * g.dim);
    for (int i = 0; i < g.dim; ++i)
      for (int j = 0; j < g.dim; ++j)
        for (int k = 0; k < g.dim; ++k)
          if (g.sc[i][j][k] != 0) out.at(k, i * g.dim + j) = g.sc[i][j][k];
    return out;
  }
  return assemble_general(g, n);
}

ChainComplexSlice chain_complex(const HomLeibnizAlgebra& g, int max_degree, long cap) {
  if (max_degree < 1) throw Error(ErrorKind::precondition, "chain_complex: max degree must be >= 1");
  check_cap(g, max_degree + 1, cap);
  ChainComplexSlice slice;
  slice.algebra = &g;
  slice.max_degree = max_degree;
  for (int n = 1; n <= max_degree + 1; ++n) slice.boundaries.push_back(boundary_matrix(g, n));
  for (int n = 1; n <= max_degree; ++n) {
    Mat prod = slice.d(n).mul(slice.d(n + 1));
    if (!prod.is_zero())
      throw Error(ErrorKind::integrity, "chain_complex: d_" + std::to_string(n) + " . d_" + std::to_string(n + 1) +
                                            " != 0 (boundary formula bug)");
  }
  return slice;
}

HomologyResult homology(const HomLeibnizAlgebra& g, int n, long cap) {
  check_cap(g, n + 1, cap);
  Mat dn = boundary_matrix(g, n);
  Mat dn1 = boundary_matrix(g, n + 1);
  {
    Mat prod = dn.mul(dn1);
    if (!prod.is_zero()) throw Error(ErrorKind::integrity, "homology: d.d != 0");
  }

  HomologyResult hom;
  hom.degree = n;
  hom.cycles = kernel_basis(dn);
  hom.boundaries = image_basis(dn1);

  // image coordinates inside the kernel's RREF basis
  std::vector<Vec> img_coords;
  for (const Vec& b : hom.boundaries.basis()) {
    auto c = hom.cycles.coordinates(b);
    if (!c) throw Error(ErrorKind::integrity, "homology: boundary escapes the cycle space");
    img_coords.push_back(*c);
  }
  int k = hom.cycles.dim();
  hom.classes = QuotientMap(k, Subspace::span(k, img_coords));
  hom.dimension = hom.classes.quotient_dim();

  for (int a = 0; a < hom.dimension; ++a) {
    Vec coords = hom.classes.lift(vec_unit(hom.dimension, a));
    Vec rep = vec_zero(dn.cols());
    for (int i = 0; i < k; ++i) vec_axpy(rep, coords[i], hom.cycles.basis()[i]);
    hom.representatives.push_back(std::move(rep));
  }

  // induced endomorphism: alpha^(x)n preserves cycles and boundaries
  Mat an = g.alpha.kron_power(n);
  for (const Vec& v : hom.cycles.basis())
    if (!hom.cycles.contains(an.apply(v)))
      throw Error(ErrorKind::integrity, "homology: alpha^(x)n does not preserve ker d_n");
  for (const Vec& v : hom.boundaries.basis())
    if (!hom.boundaries.contains(an.apply(v)))
      throw Error(ErrorKind::integrity, "homology: alpha^(x)n does not preserve im d_{n+1}");
  hom.induced_endo = Mat(hom.dimension, hom.dimension);
  for (int a = 0; a < hom.dimension; ++a) {
    Vec cls = homology_class(hom, an.apply(hom.representatives[a]));
    for (int b = 0; b < hom.dimension; ++b) hom.induced_endo.at(b, a) = cls[b];
  }
  return hom;
}

Vec homology_class(const HomologyResult& hom, const Vec& cycle) {
  auto coords = hom.cycles.coordinates(cycle);
  if (!coords) throw Error(ErrorKind::precondition, "homology_class: vector is not a cycle");
  return hom.classes.project(*coords);
}

int hl_dim(const HomLeibnizAlgebra& g, int n, long cap) {
  check_cap(g, n + 1, cap);
  Mat dn = boundary_matrix(g, n);
  Mat dn1 = boundary_matrix(g, n + 1);
  int ker = kernel_basis(dn).dim();
  int im = image_basis(dn1).dim();
  return ker - im;
}

Mat induced_map_on_homology(const Morphism& f, int n, long cap) {
  ValidationReport rep = validate_morphism(f);
  if (!rep.empty()) throw Error(ErrorKind::precondition, "induced_map_on_homology: invalid morphism");
  check_cap(f.source, n + 1, cap);
  check_cap(f.target, n + 1, cap);
  Mat fn = f.matrix.kron_power(n);
  // chain-map property f^(x)(n-1) . d_n = d_n . f^(x)n; at n = 1 both sides
  // are the zero map into the discarded coefficient line
  if (n >= 2) {
    Mat fn1 = f.matrix.kron_power(n - 1);
    Mat lhs = fn1.mul(boundary_matrix(f.source, n));
    Mat rhs = boundary_matrix(f.target, n).mul(fn);
    Mat diff = lhs.add(rhs.scale(Rat(-1)));
    if (!diff.is_zero()) throw Error(ErrorKind::integrity, "induced_map_on_homology: chain-map check failed");
  }

  HomologyResult src = homology(f.source, n, cap);
  HomologyResult tgt = homology(f.target, n, cap);
  Mat out(tgt.dimension, src.dimension);
  for (int a = 0; a < src.dimension; ++a) {
    Vec cls = homology_class(tgt, fn.apply(src.representatives[a]));
    for (int b = 0; b < tgt.dimension; ++b) out.at(b, a) = cls[b];
  }
  return out;
}

} // namespace homleib
