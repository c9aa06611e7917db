#pragma once

#include <optional>
#include <vector>

#include "mtc/group_cohomology.hpp"
#include "mtc/linalg.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/report.hpp"
#include "mtc/scalars.hpp"

namespace mtc {

// Explicit structure tensors of a candidate algebra object in Vec or on
// graded lines. Conventions:
//   m(e_i (x) e_j)   = sum_k  m[i][j][k] e_k
//   Delta(e_k)       = sum_ij delta[k][i][j] e_i (x) e_j
//   swap(e_i (x) e_j) = xi[i][j] e_j (x) e_i
struct AlgebraPresentation {
  int dim = 0;
  std::vector<Complex> m;       // dim^3
  std::vector<Complex> eta;     // dim
  std::vector<Complex> delta;   // dim^3
  std::vector<Complex> eps;     // dim
  std::optional<std::vector<int>> grading;       // datum label per basis vector
  std::optional<std::vector<Complex>> swap_xi;   // dim^2 scalar table

  Complex mm(int i, int j, int k) const {
    return m[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  Complex dd(int k, int i, int j) const {
    return delta[(static_cast<size_t>(k) * dim + i) * dim + j];
  }
  Complex xi(int i, int j) const {
    return (*swap_xi)[static_cast<size_t>(i) * dim + j];
  }
};

// Associativity and the two unit identities.
AxiomReport check_algebra(const AlgebraPresentation& ap);
// Coassociativity and the two counit identities.
AxiomReport check_coalgebra(const AlgebraPresentation& ap);
// Both Frobenius compatibility equalities
// (id (x) m)(Delta (x) id) = Delta m = (m (x) id)(id (x) Delta).
AxiomReport check_frobenius(const AlgebraPresentation& ap);
// m Delta = beta_A id and eps eta = beta_I with both scalars invertible;
// throws NotScalar when m Delta has off-diagonal residue beyond tau.
AxiomReport check_special(const AlgebraPresentation& ap);

// eps . m . Delta . eta; equals beta_A * beta_I for special algebras.
Complex beta_scalar(const AlgebraPresentation& ap);

// Convolution-style product f*g = m (f (x) g) Delta on endomorphisms;
// its unit is eta . eps.
CMatrix star_product(const AlgebraPresentation& ap, const CMatrix& f,
                     const CMatrix& g);

// m . swap = m, plus the swap axioms restricted to scalar tables on lines.
// Throws SwapMissing without a swap table.
AxiomReport check_swap_commutative(const AlgebraPresentation& ap);

// (m (x) m)(id (x) swap (x) id)(Delta (x) Delta) = beta_A Delta m.
AxiomReport check_bialgebra_identity(const AlgebraPresentation& ap);

// Sign of dim(A) / (beta_A beta_I); throws NotUnimodular when the ratio is
// not +-1 within tau. The ungraded overload uses dim(A) = dim; the graded
// one sums quantum dimensions of the graded components.
int fs_indicator(const AlgebraPresentation& ap);
int fs_indicator(const AlgebraPresentation& ap, const ModularDatum& md);

// Unit-label multiplicity of a graded presentation (nullopt when ungraded).
std::optional<bool> is_haploid(const AlgebraPresentation& ap, int unit_label);

// Functions on a finite set: pointwise product, diagonal coproduct,
// integral counit. Special Frobenius with (beta_A, beta_I) = (1, size).
AlgebraPresentation function_algebra(int size);

// Twisted group algebra of a finite abelian group:
//   m(e_g (x) e_h) = psi(g,h) e_{gh},
//   Delta(e_g) = sum_h psi(gh, h^-1)^-1 e_{gh} (x) e_{h^-1},
// normalized so that (beta_A, beta_I) = (|G|, 1). The trivial swap
// xi == 1 is attached. Throws InvalidCocycle.
AlgebraPresentation twisted_group_algebra(const AbelianGroup& g,
                                          const Cocycle2& psi);

}  // namespace mtc
