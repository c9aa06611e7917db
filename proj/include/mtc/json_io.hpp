#pragma once

#include <string>

#include <json.hpp>

#include "mtc/frobenius.hpp"
#include "mtc/group_cohomology.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/nimrep.hpp"
#include "mtc/scalars.hpp"

namespace mtc {

using Json = nlohmann::ordered_json;

Json to_json(const PhaseQ& p);            // {"num":..,"den":..}
Json to_json(const Complex& z);           // {"re":..,"im":..}
Json to_json(const ModularDatum& md);     // {"labels","S","theta","unit"}
Json to_json(const FusionRing& fr);       // {"n","unit","dual","N"}
Json to_json(const AlgebraPresentation&); // {"dim","m","eta","delta","eps",...}
Json to_json(const AbelianGroup& g);      // {"orders":[..]}
Json to_json(const Cocycle2& psi);        // [[{"num","den"},..],..]
Json to_json(const NimRep& nim);          // {"ring","boundaries","R"}
Json to_json(const ValidationReport& vr);
Json to_json(const AxiomReport& ar);

PhaseQ phase_from_json(const Json& j);
Complex complex_from_json(const Json& j);
ModularDatum modular_datum_from_json(const Json& j);
FusionRing fusion_ring_from_json(const Json& j);
AlgebraPresentation algebra_from_json(const Json& j);
AbelianGroup abelian_group_from_json(const Json& j);
Cocycle2 cocycle_from_json(const Json& j, int group_size);
// "ring" may be inline or a path relative to base_dir.
NimRep nimrep_from_json(const Json& j, const std::string& base_dir = {});

Json load_json_file(const std::string& path);  // throws InputError

// Loads and validates a modular datum; with force=true the validation
// failure is ignored (shape errors still throw).
ModularDatum load_modular_datum(const std::string& path, bool force = false);

}  // namespace mtc
