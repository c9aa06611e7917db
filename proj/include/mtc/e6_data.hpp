#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "mtc/linalg.hpp"
#include "mtc/report.hpp"

namespace mtc::e6 {

inline constexpr int kNumLabels = 11;     // su2 level 10 labels 0..10
inline constexpr int kNumBoundaries = 6;  // o^, v^, s^ and o', v', s'

// Golden dataset for the level-10 example: boundary names, the boundary
// decomposition table, the 6x6x6 boundary fusion constants, the extended
// 3x3 S-matrix (basis order o-hat, s-hat, v-hat), dim(6) = 2+sqrt(3) and
// the eleven character vectors. Embedded in source and checksummed.
struct Golden {
  std::array<std::string, kNumBoundaries> boundary_names;
  // branching[b][x] = multiplicity of su2 label x in boundary b
  std::array<std::array<int, kNumLabels>, kNumBoundaries> branching;
  // fusion[p][q][r] over boundaries in boundary_names order, unit = o-hat
  std::array<std::array<std::array<int, kNumBoundaries>, kNumBoundaries>,
             kNumBoundaries>
      fusion;
  std::array<std::array<double, 3>, 3> s_ext;  // basis (o-hat, s-hat, v-hat)
  double dim6 = 0.0;
  std::array<std::pair<std::string, std::array<double, kNumLabels>>, 11>
      characters;

  std::uint64_t checksum() const;
};

const Golden& golden();
std::uint64_t golden_checksum_expected();

// Adjacency of the 6-node graph (5-path with a node attached to its
// middle), the one whose Chebyshev tower closes at level 10.
IMatrix dynkin_adjacency();

// End-to-end verification of the level-10 example against the golden
// constants: datum axioms, graph construction, reconstruction, branching,
// boundary fusion, boundary entropies, character closure and the extended
// S-matrix, plus the golden checksum.
ValidationReport run_all_checks();

// Same battery against a caller-supplied golden copy (for perturbation
// tests).
ValidationReport run_checks_against(const Golden& g);

}  // namespace mtc::e6
