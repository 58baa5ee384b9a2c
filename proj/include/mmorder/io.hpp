#pragma once

#include <string>

#include "json.hpp"
#include "mmorder/maps.hpp"
#include "mmorder/order.hpp"
#include "mmorder/space.hpp"
#include "mmorder/transport.hpp"

namespace mm {

using Json = nlohmann::ordered_json;

// Space files: {"label": str, "points": [str], "dist": [[rational]], "mass": [rational]}
Json space_to_json(const FiniteMMSpace& space);
FiniteMMSpace space_from_json(const Json& j);

// Couplings: {"rows": n, "cols": m, "matrix": [[rational]]}
Json coupling_to_json(const Coupling& pi);
Coupling coupling_from_json(const Json& j);

// Order witnesses: {"epsilon", "S": [[i,j]], "coupling": [[rational]], "dis", "uncovered"}
Json order_witness_to_json(const OrderWitness& w);
OrderWitness order_witness_from_json(const Json& j, int rows, int cols);

// Maps: {"domain": label, "codomain": label, "image": [j]}
Json map_to_json(const PointMap& f, const std::string& domain, const std::string& codomain);
PointMap map_from_json(const Json& j);

Json ky_witness_to_json(const KYWitness& w);

Json triple_to_json(const TripleMeasure& t);

Json compose_report_to_json(const ComposeReport& r);

// File helpers; parse errors surface as InputError naming the path.
Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);

FiniteMMSpace load_space(const std::string& path);
void save_space(const std::string& path, const FiniteMMSpace& space);

}  // namespace mm
