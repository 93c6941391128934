#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "sercomp/types.hpp"

namespace sercomp {

// Instance files are UTF-8 JSON:
//   {
//     "services": ["s1", ...],
//     "executions": K,
//     "providers": [
//       {"id": "p1", "services": ["s1"], "node": "a",
//        "availability": "1100..."                       // bit per execution
//                      | {"period": 2, "active_offsets": [0]}},
//       ...
//     ],
//     "topology": {"nodes": ["a", ...],
//                  "edges": [{"u": "a", "v": "b", "w": 10}, ...]}
//   }
// The leftmost availability character is execution 1. Parsing throws
// ParseError on anything that does not match this shape.

Instance instance_from_json(const nlohmann::json& j);
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);

nlohmann::ordered_json instance_to_json(const Instance& instance);
std::string instance_to_string(const Instance& instance);

// Plan files:
//   {"algo": ..., "Y": ..., "total_cost": ...,
//    "segments": [{"start", "length", "assignment": [provider ids],
//                  "unit_cost"}, ...]}
// Integral costs are emitted as JSON integers so repeated runs are
// byte-identical.
nlohmann::ordered_json plan_to_json(const Plan& plan, std::string_view algo,
                                    const Instance& instance);
std::string plan_to_string(const Plan& plan, std::string_view algo,
                           const Instance& instance);

}  // namespace sercomp
