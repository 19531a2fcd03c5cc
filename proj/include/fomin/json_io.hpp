#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "fomin/diff_verify.hpp"
#include "fomin/families.hpp"
#include "fomin/growth.hpp"
#include "fomin/ideal_lattice.hpp"
#include "fomin/point_poset.hpp"
#include "fomin/weight_scheme.hpp"
#include "fomin/weight_solve.hpp"

namespace fomin {

using nlohmann::json;

// {"max_rank": int, "complete_below": int,
//  "points": [{"id": str, "rank": int, "up": [str]}]}
json poset_to_json(const PointPosetWindow& P);
PointPosetWindow poset_from_json(const json& j);

// {"r": "p/q", "w": {"id": "p/q", ...}}
json weights_to_json(const PointPosetWindow& P, const WeightScheme& w);
WeightScheme weights_from_json(const PointPosetWindow& P, const json& j);

json report_to_json(const CheckReport& rep);
json identity_to_json(const IdentityReport& rep);
json trace_to_json(const PropagationTrace& t);
json case_table_to_json(const std::vector<CaseRow>& rows);
json classify_to_json(const ClassifyReport& rep);
json rsk_to_json(const GradedWeightedGraph& G, const RskResult& res);
json lattice_to_json(const PointPosetWindow& P, const IdealLattice& lat);

std::string case_table_text(const std::vector<CaseRow>& rows);

/// Hasse diagram with rank-based layering.
void poset_to_dot(std::ostream& os, const PointPosetWindow& P);
void lattice_to_dot(std::ostream& os, const PointPosetWindow& P,
                    const IdealLattice& lat, const WeightScheme* w);

}  // namespace fomin
