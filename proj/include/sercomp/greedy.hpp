#pragma once

#include "sercomp/schedule.hpp"
#include "sercomp/types.hpp"

namespace sercomp {

// Minimum-switch plan: at each segment start, assign every service the
// provider that stays available longest from there, then run the solution
// for as long as the shortest-lived assigned provider allows. The resulting
// segment count is the minimum achievable. Costs are not assigned; every
// segment's unit_cost is 0. O(K * m * n).
//
// Throws InfeasibleError when some execution leaves a service uncovered.
Plan greedy_plan(const Instance& instance, const AvailabilityMatrix& x);

}  // namespace sercomp
