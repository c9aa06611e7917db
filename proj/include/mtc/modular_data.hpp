#pragma once

#include <string>
#include <vector>

#include "mtc/fusion_ring.hpp"
#include "mtc/group_cohomology.hpp"
#include "mtc/linalg.hpp"
#include "mtc/report.hpp"
#include "mtc/scalars.hpp"

namespace mtc {

// Modular datum: simple-object labels, symmetric unitary S-matrix, exact
// twists theta, and the tensor unit. Charge conjugation is always derived
// from S^2, never supplied.
struct ModularDatum {
  std::vector<std::string> labels;
  CMatrix S;
  std::vector<PhaseQ> theta;
  int unit = 0;

  int size() const { return static_cast<int>(labels.size()); }
};

// Axioms: S symmetric, S unitary, theta[unit] = 1, S^2 a permutation after
// {0,1}-rounding, S[unit][.] real and strictly positive.
ValidationReport validate(const ModularDatum& md);

// d_a = S[unit][a] / S[unit][unit]
Complex quantum_dim(const ModularDatum& md, int a);

// Permutation extracted from S^2 (throws DimensionMismatch if S^2 does not
// round to a permutation).
std::vector<int> charge_conjugation(const ModularDatum& md);

// Verlinde coefficients N_{ij}^k = sum_a S_ia S_ja conj(S_ka) / S_{unit,a},
// rounded to integers. Throws NonIntegralFusion if any pre-rounding value
// is farther than 1e-6 from a non-negative integer. If max_deviation is
// non-null it receives the worst pre-rounding deviation.
FusionRing verlinde_fusion(const ModularDatum& md,
                           double* max_deviation = nullptr);

// Single Verlinde row N_{ij}^* without building the full ring.
std::vector<std::int64_t> fusion_row(const ModularDatum& md, int i, int j);

// Monodromy charge of x with respect to the simple current j: the phase q
// with S[x][j]/S[x][unit] = e^{2 pi i q}, snapped to the nearest rational
// with denominator <= n * order(j). Throws NotASimpleCurrent when d_j != 1,
// PhaseSnapFailure when the snap misses by more than 1e-6.
PhaseQ monodromy_charge(const ModularDatum& md, int x, int j);

// All labels of quantum dimension 1; closure under fusion and duality is
// asserted.
std::vector<int> simple_currents(const ModularDatum& md);

// Order of a simple current under fusion.
int current_order(const ModularDatum& md, int j);

// Affine su(2) level k: labels 0..k,
// S[a][b] = sqrt(2/(k+2)) sin(pi (a+1)(b+1) / (k+2)),
// theta[a] = a(a+2) / (4(k+2)) mod 1.
ModularDatum su2_level(int k);

// Drinfeld double of a finite abelian group: labels are pairs (g, chi),
// S_{(g,chi),(h,rho)} = chi(h) rho(g) / |G|, theta_{(g,chi)} = chi(g).
ModularDatum drinfeld_double_abelian(const AbelianGroup& g);

}  // namespace mtc
