#pragma once

#include "sercomp/cost.hpp"
#include "sercomp/schedule.hpp"
#include "sercomp/types.hpp"

namespace sercomp {

// Comparison algorithm: independently picks the cheapest valid solution at
// every execution, ignoring switches. Consecutive executions that happen to
// pick the same solution merge into one segment, so the switch count is the
// number of distinct runs. Throws InfeasibleError on an uncoverable
// execution.
Plan baseline_plan(const Instance& instance, const AvailabilityMatrix& x,
                   const DistanceTable& dist);

}  // namespace sercomp
