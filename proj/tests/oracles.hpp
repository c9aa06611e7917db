#pragma once

// Independent oracles used only by the test suites. Nothing here calls the
// implementation paths it certifies:
//  - H^2 class counts come from exact integer linear algebra on the cocycle
//    identity (Smith normal form), with C^x-coboundary equivalence decided
//    by solvability of an inhomogeneous system over Z_{e^2};
//  - su(2) fusion coefficients come from the truncated Clebsch-Gordan rule;
//  - boundary entropies come from a Perron eigenvector.

#include <cstdint>
#include <vector>

#include "mtc/group_cohomology.hpp"
#include "mtc/linalg.hpp"

namespace oracle {

// Diagonal form U*A*V = D with U, V invertible mod the stated modulus; all
// arithmetic is carried out in Z/modulus so entries stay bounded. Kernel
// counts and solvability questions mod any divisor of the modulus only
// need such a diagonal form.
struct Snf {
  int rows = 0, cols = 0;
  std::int64_t modulus = 0;
  std::vector<std::int64_t> diag;
  std::vector<std::vector<std::int64_t>> U;  // rows x rows
  std::vector<std::vector<std::int64_t>> V;  // cols x cols
};

Snf smith_normal_form(std::vector<std::vector<std::int64_t>> a,
                      std::int64_t modulus);

// Number of solutions of A x == 0 (mod n).
std::int64_t kernel_count_mod(const Snf& s, std::int64_t n);

// Brute-force class count of H^2(G, C^x): cocycles with values in mu_e
// counted by SNF, divided by the order of the mu_e-valued coboundary
// subgroup (three kernel counts, no closed-form shortcuts).
std::int64_t h2_class_count(const mtc::AbelianGroup& g);

// Enumerates all normalized mu_e-valued cocycles and classifies them by the
// coboundary solvability test; returns the class count. Feasible for the
// small groups (|Z^2| up to ~10^5).
std::int64_t h2_enumerate_and_classify(const mtc::AbelianGroup& g,
                                       std::int64_t* num_cocycles = nullptr);

// C^x-coboundary equivalence via the solvability route (independent of the
// antisymmetrization test in the library).
bool equivalent_by_solvability(const mtc::AbelianGroup& g,
                               const mtc::Cocycle2& a, const mtc::Cocycle2& b);

// Truncated Clebsch-Gordan fusion of su(2) at level k.
std::int64_t su2_cg_coeff(int k, int i, int j, int l);

// Ratios v_n / v_m0 of the Perron eigenvector of a non-negative matrix.
std::vector<double> perron_ratios(const mtc::IMatrix& m, int m0);

}  // namespace oracle
