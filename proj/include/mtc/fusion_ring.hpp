#pragma once

#include <cstdint>
#include <vector>

#include "mtc/linalg.hpp"
#include "mtc/report.hpp"

namespace mtc {

struct NimRep;

// Fusion ring with non-negative integer structure constants N_{ij}^k,
// distinguished unit and a duality involution. Commutativity is not
// assumed; every check is written order-sensitively.
struct FusionRing {
  int n = 0;
  int unit = 0;
  std::vector<int> dual;            // involutive permutation of labels
  std::vector<std::int64_t> N;      // flat n^3, index (i*n + j)*n + k

  FusionRing() = default;
  FusionRing(int labels, int unit_label, std::vector<int> dual_perm,
             std::vector<std::int64_t> coeffs);

  std::int64_t coeff(int i, int j, int k) const {
    return N[(static_cast<size_t>(i) * n + j) * n + k];
  }
  std::int64_t& coeff(int i, int j, int k) {
    return N[(static_cast<size_t>(i) * n + j) * n + k];
  }
};

// Group ring of a finite group given by its multiplication table
// (mul[a][b] = index of ab); used for Z_n / Z2xZ2 style expected rings.
FusionRing group_ring(const std::vector<std::vector<int>>& mul);

// Reports unit, associativity, duality and involution axioms, each with
// the first counterexample indices on failure.
ValidationReport check_ring_axioms(const FusionRing& fr);

// Left-multiplication matrix (N_i)_j^k = N_{ij}^k.
IMatrix fusion_matrix(const FusionRing& fr, int i);

// Regular NIM-rep: boundaries are the ring labels, R(i) = fusion_matrix(i).
NimRep regular_nimrep(const FusionRing& fr);

}  // namespace mtc
