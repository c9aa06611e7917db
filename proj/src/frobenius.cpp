#include "mtc/frobenius.hpp"

#include <cmath>
#include <sstream>

#include "mtc/errors.hpp"

namespace mtc {

namespace {

void require_shapes(const AlgebraPresentation& ap) {
  const size_t n = static_cast<size_t>(ap.dim);
  if (ap.dim < 1) throw ShapeMismatch("presentation: dim must be >= 1");
  if (ap.m.size() != n * n * n || ap.delta.size() != n * n * n ||
      ap.eta.size() != n || ap.eps.size() != n)
    throw ShapeMismatch("presentation: tensor shapes inconsistent with dim");
  if (ap.grading && ap.grading->size() != n)
    throw ShapeMismatch("presentation: grading length != dim");
  if (ap.swap_xi && ap.swap_xi->size() != n * n)
    throw ShapeMismatch("presentation: swap table size != dim^2");
  for (const auto& v : ap.m)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw ShapeMismatch("presentation: non-finite entry in m");
  for (const auto& v : ap.delta)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw ShapeMismatch("presentation: non-finite entry in delta");
}

void require_swap(const AlgebraPresentation& ap) {
  if (!ap.swap_xi) throw SwapMissing("presentation has no swap table");
}

}  // namespace

AxiomReport check_algebra(const AlgebraPresentation& ap) {
  require_shapes(ap);
  const int n = ap.dim;
  AxiomReport out;

  // m(id (x) m) vs m(m (x) id) on e_i (x) e_j (x) e_k, component l.
  double assoc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Complex lhs, rhs;
          for (int c = 0; c < n; ++c) {
            lhs += ap.mm(j, k, c) * ap.mm(i, c, l);
            rhs += ap.mm(i, j, c) * ap.mm(c, k, l);
          }
          assoc = std::max(assoc, std::abs(lhs - rhs));
        }
  out.report.add("associativity", assoc <= tolerance(), assoc);

  double unit = 0.0;
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      Complex right, left;
      for (int c = 0; c < n; ++c) {
        right += ap.eta[c] * ap.mm(i, c, l);
        left += ap.eta[c] * ap.mm(c, i, l);
      }
      const Complex want = (i == l) ? Complex(1.0) : Complex(0.0);
      unit = std::max({unit, std::abs(right - want), std::abs(left - want)});
    }
  out.report.add("unit", unit <= tolerance(), unit);
  return out;
}

AxiomReport check_coalgebra(const AlgebraPresentation& ap) {
  require_shapes(ap);
  const int n = ap.dim;
  AxiomReport out;

  double coassoc = 0.0;
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Complex lhs, rhs;
          for (int c = 0; c < n; ++c) {
            lhs += ap.dd(a, c, k) * ap.dd(c, i, j);  // (Delta (x) id) Delta
            rhs += ap.dd(a, i, c) * ap.dd(c, j, k);  // (id (x) Delta) Delta
          }
          coassoc = std::max(coassoc, std::abs(lhs - rhs));
        }
  out.report.add("coassociativity", coassoc <= tolerance(), coassoc);

  double counit = 0.0;
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i) {
      Complex right, left;
      for (int c = 0; c < n; ++c) {
        right += ap.dd(a, i, c) * ap.eps[c];
        left += ap.dd(a, c, i) * ap.eps[c];
      }
      const Complex want = (a == i) ? Complex(1.0) : Complex(0.0);
      counit = std::max({counit, std::abs(right - want), std::abs(left - want)});
    }
  out.report.add("counit", counit <= tolerance(), counit);
  return out;
}

AxiomReport check_frobenius(const AlgebraPresentation& ap) {
  require_shapes(ap);
  const int n = ap.dim;
  AxiomReport out;

  // Three maps A (x) A -> A (x) A evaluated on e_i (x) e_j, component (u,v).
  double left = 0.0, right = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          Complex f1, f2, f3;
          for (int c = 0; c < n; ++c) {
            f1 += ap.dd(i, u, c) * ap.mm(c, j, v);  // (id (x) m)(Delta (x) id)
            f2 += ap.mm(i, j, c) * ap.dd(c, u, v);  // Delta m
            f3 += ap.dd(j, c, v) * ap.mm(i, c, u);  // (m (x) id)(id (x) Delta)
          }
          left = std::max(left, std::abs(f1 - f2));
          right = std::max(right, std::abs(f2 - f3));
        }
  out.report.add("frobenius left", left <= tolerance(), left);
  out.report.add("frobenius right", right <= tolerance(), right);
  return out;
}

AxiomReport check_special(const AlgebraPresentation& ap) {
  require_shapes(ap);
  const int n = ap.dim;
  AxiomReport out;

  // m Delta as an endomorphism.
  CMatrix md(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Complex acc;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) acc += ap.dd(i, u, v) * ap.mm(u, v, k);
      md.at(i, k) = acc;
    }

  double off = 0.0;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (i != k) off = std::max(off, std::abs(md.at(i, k)));
  if (off > tolerance()) {
    std::ostringstream os;
    os << "m . Delta has off-diagonal residue " << off;
    throw NotScalar(os.str());
  }

  Complex beta_a;
  for (int i = 0; i < n; ++i) beta_a += md.at(i, i);
  beta_a /= static_cast<double>(n);
  double diag = 0.0;
  for (int i = 0; i < n; ++i)
    diag = std::max(diag, std::abs(md.at(i, i) - beta_a));

  Complex beta_i;
  for (int c = 0; c < n; ++c) beta_i += ap.eps[c] * ap.eta[c];

  const auto show = [](Complex z) {
    std::ostringstream os;
    os << z.real();
    if (std::abs(z.imag()) > 1e-12) os << (z.imag() < 0 ? "-" : "+")
                                       << std::abs(z.imag()) << "i";
    return os.str();
  };
  out.derived["beta_A"] = beta_a;
  out.derived["beta_I"] = beta_i;
  out.report.add("m . Delta scalar", diag <= tolerance(), std::max(off, diag));
  out.report.add("beta_A invertible", std::abs(beta_a) > tolerance(), 0.0,
                 "beta_A = " + show(beta_a));
  out.report.add("beta_I invertible", std::abs(beta_i) > tolerance(), 0.0,
                 "beta_I = " + show(beta_i));
  return out;
}

Complex beta_scalar(const AlgebraPresentation& ap) {
  require_shapes(ap);
  const int n = ap.dim;
  Complex beta;
  for (int g = 0; g < n; ++g) {
    if (ap.eta[g] == Complex{}) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Complex d = ap.dd(g, i, j);
        if (d == Complex{}) continue;
        for (int k = 0; k < n; ++k)
          beta += ap.eta[g] * d * ap.mm(i, j, k) * ap.eps[k];
      }
  }
  return beta;
}

CMatrix star_product(const AlgebraPresentation& ap, const CMatrix& f,
                     const CMatrix& g) {
  require_shapes(ap);
  const int n = ap.dim;
  if (f.rows != n || f.cols != n || g.rows != n || g.cols != n)
    throw ShapeMismatch("star_product: endomorphism shape mismatch");
  // (f*g)(e_k) = sum delta[k][i][j] m(f e_i (x) g e_j)
  CMatrix out(n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Complex d = ap.dd(k, i, j);
        if (d == Complex{}) continue;
        for (int p = 0; p < n; ++p) {
          if (f.at(p, i) == Complex{}) continue;
          for (int q = 0; q < n; ++q) {
            const Complex fg = d * f.at(p, i) * g.at(q, j);
            if (fg == Complex{}) continue;
            for (int l = 0; l < n; ++l) out.at(l, k) += fg * ap.mm(p, q, l);
          }
        }
      }
  return out;
}

AxiomReport check_swap_commutative(const AlgebraPresentation& ap) {
  require_shapes(ap);
  require_swap(ap);
  const int n = ap.dim;
  AxiomReport out;

  double modulus = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      modulus = std::max(modulus, std::abs(std::abs(ap.xi(i, j)) - 1.0));
  out.report.add("swap entries unimodular", modulus <= tolerance(), modulus);

  // Hexagon-style axioms restricted to scalar tables:
  //  m[j][k][l] (xi[i][j] xi[i][k] - xi[i][l]) = 0
  //  m[i][j][l] (xi[i][k] xi[j][k] - xi[l][k]) = 0
  double hex = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const Complex a = ap.mm(j, k, l) * (ap.xi(i, j) * ap.xi(i, k) -
                                              ap.xi(i, l));
          const Complex b = ap.mm(i, j, l) * (ap.xi(i, k) * ap.xi(j, k) -
                                              ap.xi(l, k));
          hex = std::max({hex, std::abs(a), std::abs(b)});
        }
  out.report.add("swap hexagon", hex <= tolerance(), hex);

  double unit = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (ap.eta[j] == Complex{}) continue;
      unit = std::max({unit, std::abs(ap.eta[j] * (ap.xi(i, j) - 1.0)),
                       std::abs(ap.eta[j] * (ap.xi(j, i) - 1.0))});
    }
  out.report.add("swap unit", unit <= tolerance(), unit);

  // m . swap = m
  double comm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        comm = std::max(comm,
                        std::abs(ap.xi(i, j) * ap.mm(j, i, k) - ap.mm(i, j, k)));
  out.report.add("swap-commutativity", comm <= tolerance(), comm);
  return out;
}

AxiomReport check_bialgebra_identity(const AlgebraPresentation& ap) {
  require_shapes(ap);
  require_swap(ap);
  const int n = ap.dim;
  const Complex beta_a = check_special(ap).scalar("beta_A");
  AxiomReport out;
  out.derived["beta_A"] = beta_a;

  // lhs[a][b][u][v] = sum_{j,p} xi[j][p] P[a][j][p][u] Q[b][p][j][v]
  //   P[a][j][p][u] = sum_i delta[a][i][j] m[i][p][u]
  //   Q[b][p][j][v] = sum_q delta[b][p][q] m[j][q][v]
  const size_t n2 = static_cast<size_t>(n) * n;
  std::vector<Complex> P(n2 * n2), Q(n2 * n2);
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < n; ++j)
      for (int p = 0; p < n; ++p)
        for (int u = 0; u < n; ++u) {
          Complex acc;
          for (int i = 0; i < n; ++i) acc += ap.dd(a, i, j) * ap.mm(i, p, u);
          P[((static_cast<size_t>(a) * n + j) * n + p) * n + u] = acc;
        }
  for (int b = 0; b < n; ++b)
    for (int p = 0; p < n; ++p)
      for (int j = 0; j < n; ++j)
        for (int v = 0; v < n; ++v) {
          Complex acc;
          for (int q = 0; q < n; ++q) acc += ap.dd(b, p, q) * ap.mm(j, q, v);
          Q[((static_cast<size_t>(b) * n + p) * n + j) * n + v] = acc;
        }

  double residual = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          Complex lhs;
          for (int j = 0; j < n; ++j)
            for (int p = 0; p < n; ++p)
              lhs += ap.xi(j, p) *
                     P[((static_cast<size_t>(a) * n + j) * n + p) * n + u] *
                     Q[((static_cast<size_t>(b) * n + p) * n + j) * n + v];
          Complex rhs;
          for (int c = 0; c < n; ++c) rhs += ap.mm(a, b, c) * ap.dd(c, u, v);
          residual = std::max(residual, std::abs(lhs - beta_a * rhs));
        }
  out.report.add("bialgebra identity", residual <= tolerance(), residual);
  return out;
}

namespace {

int fs_sign(const AlgebraPresentation& ap, Complex dim_a) {
  const auto special = check_special(ap);
  const Complex prod = special.scalar("beta_A") * special.scalar("beta_I");
  if (std::abs(prod) <= tolerance())
    throw NotUnimodular("fs_indicator: beta_A beta_I not invertible");
  const Complex ratio = dim_a / prod;
  if (std::abs(std::abs(ratio) - 1.0) > tolerance() ||
      std::abs(ratio.imag()) > tolerance())
    throw NotUnimodular("fs_indicator: dim(A)/(beta_A beta_I) is not a sign");
  return ratio.real() > 0.0 ? 1 : -1;
}

}  // namespace

int fs_indicator(const AlgebraPresentation& ap) {
  require_shapes(ap);
  return fs_sign(ap, Complex(static_cast<double>(ap.dim)));
}

int fs_indicator(const AlgebraPresentation& ap, const ModularDatum& md) {
  require_shapes(ap);
  if (!ap.grading) return fs_indicator(ap);
  Complex dim_a;
  for (int label : *ap.grading) dim_a += quantum_dim(md, label);
  return fs_sign(ap, dim_a);
}

std::optional<bool> is_haploid(const AlgebraPresentation& ap, int unit_label) {
  if (!ap.grading) return std::nullopt;
  int count = 0;
  for (int label : *ap.grading)
    if (label == unit_label) ++count;
  return count == 1;
}

AlgebraPresentation function_algebra(int size) {
  if (size < 1) throw InputError("function_algebra: size must be >= 1");
  AlgebraPresentation ap;
  ap.dim = size;
  const size_t n = static_cast<size_t>(size);
  ap.m.assign(n * n * n, Complex{});
  ap.delta.assign(n * n * n, Complex{});
  ap.eta.assign(n, Complex(1.0));
  ap.eps.assign(n, Complex(1.0));
  for (int g = 0; g < size; ++g) {
    ap.m[(static_cast<size_t>(g) * size + g) * size + g] = 1.0;      // pointwise
    ap.delta[(static_cast<size_t>(g) * size + g) * size + g] = 1.0;  // diagonal
  }
  ap.swap_xi = std::vector<Complex>(n * n, Complex(1.0));
  return ap;
}

AlgebraPresentation twisted_group_algebra(const AbelianGroup& g,
                                          const Cocycle2& psi) {
  if (!is_cocycle(g, psi))
    throw InvalidCocycle("twisted_group_algebra: psi fails the cocycle test");
  const int n = g.size();
  AlgebraPresentation ap;
  ap.dim = n;
  const size_t sn = static_cast<size_t>(n);
  ap.m.assign(sn * sn * sn, Complex{});
  ap.delta.assign(sn * sn * sn, Complex{});
  ap.eta.assign(sn, Complex{});
  ap.eps.assign(sn, Complex{});
  ap.eta[g.identity()] = 1.0;
  ap.eps[g.identity()] = 1.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = g.add(a, b);
      ap.m[(static_cast<size_t>(a) * n + b) * n + ab] = to_complex(psi.at(a, b));
    }
  for (int a = 0; a < n; ++a)
    for (int h = 0; h < n; ++h) {
      const int ah = g.add(a, h);
      const int hinv = g.neg(h);
      ap.delta[(static_cast<size_t>(a) * n + ah) * n + hinv] =
          to_complex(phase_inv(psi.at(ah, hinv)));
    }
  ap.swap_xi = std::vector<Complex>(sn * sn, Complex(1.0));
  return ap;
}

}  // namespace mtc
