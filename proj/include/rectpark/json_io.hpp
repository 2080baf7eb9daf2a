#pragma once

#include <string>

#include "json.hpp"
#include "rectpark/parking.hpp"
#include "rectpark/positivity.hpp"
#include "rectpark/symfunc.hpp"

namespace rectpark {

using Json = nlohmann::json;

// {"basis": "h", "terms": [{"index": [2,1], "num": "3", "den": "1"}, ...]}
// Terms appear in canonical order; integers are decimal strings.
Json to_json(const SymFunc& f);
// Throws std::invalid_argument on malformed input.
SymFunc symfunc_from_json(const Json& j);

// {"basis": "hh", "terms": [{"x": [2], "y": [1,1], "num": "1", "den": "1"}, ...]}
Json to_json(const BiSymFunc& f);
BiSymFunc bisymfunc_from_json(const Json& j);

// {"m": 5, "n": 4, "seq": [3,2,1,0], "word": "SESESESEE"}
Json to_json(const RectDyckPath& path);
RectDyckPath dyck_path_from_json(const Json& j);
// {"m": 2, "n": 1, "word": "SEE"}
Json to_json(const FreePath& path);
// {"m": 6, "n": 3, "word": [0,0,4]}
Json to_json(const ParkingFunction& pf);
ParkingFunction parking_from_json(const Json& j);

// {"mu": [...], "a": 1, "b": 2, "iota": 0, "schur_positive": true,
//  "coefficients": {"2,1": "1", ...}}
Json to_json(const ConjectureCase& c);
// Same layout keyed by the hook, with "h_positive" and h coefficients.
Json hook_report_json(int k, int j, int a, int b, const PositivityReport& r);

// Result metadata wrapper: {"m","n","a","b","d","filter","basis","value"}.
Json wrap_result(const RectangleParams& params, const std::string& filter, const Json& value,
                 const std::string& basis);

}  // namespace rectpark
