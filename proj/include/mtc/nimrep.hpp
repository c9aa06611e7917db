#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtc/fusion_ring.hpp"
#include "mtc/linalg.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/report.hpp"

namespace mtc {

// Non-negative integer matrix representation of a fusion ring: R(unit) = 1,
// R(dual(i)) = R(i)^t, R(i) R(j) = sum_k N_{ij}^k R(k). Rows/columns index
// boundary labels.
struct NimRep {
  FusionRing ring;
  std::vector<std::string> boundaries;
  std::vector<IMatrix> R;  // one b x b matrix per ring label

  int num_boundaries() const { return static_cast<int>(boundaries.size()); }
};

// Exact integer verification of all three NIM-rep properties, with the
// first counterexample (i, j, row, col) on failure.
ValidationReport verify(const NimRep& nim);

// Chebyshev construction from a graph: R(0) = 1, R(1) = adjacency,
// R(l+1) = R(1) R(l) - R(l-1), over the Verlinde ring of su2_level(k).
// Throws NegativeEntry if the recursion leaves the non-negative cone and
// TruncationFailure if R(k+1) != 0.
NimRep from_su2_graph(const IMatrix& adjacency, int k);

// Underlying algebra object per label: multiplicity = min_m R(X)_m^m.
std::vector<std::int64_t> reconstruct_algebra(const NimRep& nim);

// Boundary m0 attaining every minimum in reconstruct_algebra
// simultaneously (lowest index on ties), or nullopt: the physicality test.
std::optional<int> physical_m0(const NimRep& nim);

// branching(nim, m0)[n][X] = R(X)_{m0}^n: the C-decomposition of each
// boundary as seen through the forgetful functor.
std::vector<std::vector<std::int64_t>> branching(const NimRep& nim, int m0);

// Consistency of a candidate boundary fusion ring (basis = boundaries,
// unit = m0): R(X) must equal sum_p R(X)_{m0}^p * fusion_matrix(cand, p)
// as exact integer matrices.
ValidationReport boundary_fusion_check(const NimRep& nim, int m0,
                                       const FusionRing& candidate);

// Boundary entropies Dim(n) = sum_X branching[n][X] d_X normalized so
// Dim(m0) = 1. Throws NoPhysicalM0.
std::vector<double> boundary_dims(const NimRep& nim, const ModularDatum& md);

}  // namespace mtc
