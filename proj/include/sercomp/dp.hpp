#pragma once

#include "sercomp/cost.hpp"
#include "sercomp/schedule.hpp"
#include "sercomp/types.hpp"

namespace sercomp {

// Cheapest plan among all plans that use exactly Y segments. Y is normally
// the switch count reported by greedy_plan, i.e. the minimum feasible
// segment count; cost is minimized subject to that.
//
// Throws std::invalid_argument when Y is outside [1, K] and InfeasibleError
// when no split into exactly Y feasible segments exists (Y below the true
// minimum).
Plan dp_plan(const Instance& instance, const AvailabilityMatrix& x,
             const DistanceTable& dist, int Y);

}  // namespace sercomp
