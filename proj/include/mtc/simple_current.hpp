#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mtc/modular_data.hpp"
#include "mtc/report.hpp"
#include "mtc/scalars.hpp"

namespace mtc {

// Candidate algebra object A = (+)_{J in H} J built from a group H of
// simple currents inside a modular datum.
struct CurrentAlgebraCandidate {
  ModularDatum datum;
  std::vector<int> subset;  // contains unit, closed under fusion and duality
};

// Validates dimension-1, unit membership and closure; throws NotCurrents /
// NotClosed.
CurrentAlgebraCandidate candidate(const ModularDatum& md, std::vector<int> H);

struct TwistAdmissibility {
  struct Entry {
    int label = 0;
    int order = 1;          // N_J, the fusion order of the current
    PhaseQ twist;           // theta_J
    PhaseQ twist_power;     // theta_J ^ N_J
    bool passed = false;    // twist_power == 1 exactly
  };
  std::vector<Entry> entries;
  bool passed = false;
};

// theta_J^{N_J} = 1 test per current (the swap-existence criterion).
TwistAdmissibility twist_admissible(const CurrentAlgebraCandidate& c);

// True iff every pair of currents in H has trivial mutual monodromy.
bool monodromy_neutral(const CurrentAlgebraCandidate& c);

// Labels with trivial monodromy charge against every current in H.
std::vector<int> local_sector(const CurrentAlgebraCandidate& c);

struct ExtensionData {
  std::vector<int> local;                 // charge-zero labels
  std::vector<std::vector<int>> orbits;   // partition of local under H
  ModularDatum extended;                  // one label per orbit
};

// Fixed-point-free extension: requires theta_J = 1 exactly for all J and
// monodromy neutrality, partitions the local sector into free H-orbits and
// builds the extended datum by the orbit-sum rule rescaled to unitarity.
// Throws NotAdmissible / FixedPointsPresent.
ExtensionData extend(const CurrentAlgebraCandidate& c);

// Coefficient vector of a character sum over the irreducible characters of
// a modular datum.
using CharacterVector = std::vector<double>;

// Coefficients of f(-1/tau) when f has coefficients v: returns S^t v.
// Throws LengthMismatch; requires a real result (real S-matrices).
CharacterVector s_transform(const ModularDatum& md, const CharacterVector& v);

// The eleven distinguished level-10 character vectors (hat, check and
// breve families, chi_5 and the alternating vector). Throws WrongDatum
// unless md is su2_level(10).
std::vector<std::pair<std::string, CharacterVector>> e6_character_set(
    const ModularDatum& md10);

// Verifies the eleven S-transformation identities of the level-10 family
// against the extended 3x3 S-matrix, each within 1e-9.
ValidationReport e6_closure_check(const ModularDatum& md10);

}  // namespace mtc
