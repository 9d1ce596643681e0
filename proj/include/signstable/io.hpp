#pragma once

#include <json.hpp>

#include <string>

#include "signstable/cg.hpp"
#include "signstable/seeds.hpp"
#include "signstable/stability.hpp"
#include "signstable/surfaces.hpp"

namespace signstable {

using json = nlohmann::ordered_json;

// Everything here is 1-based on the JSON side.
json seed_to_json(const ExchangeSeed& s);
ExchangeSeed seed_from_json(const json& j);

json path_to_json(const MutationPath& p);
// "seed" may be a seed object or a builtin name; steps are {"mut": k},
// {"swap": [i, j]} or {"perm": [images]} (expanded into swaps).
MutationPath path_from_json(const json& j);

json triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const json& j);

json point_to_json(const QVec& v);
QVec point_from_json(const json& j);
QVec parse_point(const std::string& csv);

json matrix_to_json(const QMat& m);
QMat matrix_from_json(const json& j);

json report_to_json(const StabilityReport& r);
json weak_report_to_json(const WeakStabilityReport& r);
json cg_to_json(const CGState& s);

std::string format_real(double x);

// Parses inline JSON or, failing that, reads the named file.
json load_json(const std::string& text_or_path);

}  // namespace signstable
