#pragma once

#include "sercomp/schedule.hpp"
#include "sercomp/types.hpp"

namespace sercomp {

// Checks every structural invariant (distinct identifiers, schedules that
// expand to K bits, providers on known nodes, nonnegative weights, every
// service offered by someone) and then scans all K executions for
// per-execution coverage. Never throws; the report carries the violations.
ValidationReport validate_instance(const Instance& instance);

// Checks that a plan is well-formed for the given instance: segments tile
// [1, K] in order, and every assigned provider serves its position and stays
// active through its whole segment. Structural sanity for planner output;
// used heavily by the test harness.
ValidationReport validate_plan(const Instance& instance, const AvailabilityMatrix& x,
                               const Plan& plan);

}  // namespace sercomp
