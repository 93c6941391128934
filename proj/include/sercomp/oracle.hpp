#pragma once

#include "sercomp/cost.hpp"
#include "sercomp/schedule.hpp"
#include "sercomp/types.hpp"

namespace sercomp {

// Reference implementations used as ground truth by the test suite. Both
// deliberately avoid the run-length table and the layered-graph query so they
// share no logic with the planners they check. Exponential/quadratic; meant
// for small instances only (K up to ~16 for the segment count, K <= 10 and
// a handful of providers per service for the cost search).

// Minimum number of segments tiling [1, K] such that every segment admits a
// solution active throughout. Throws InfeasibleError when some execution has
// an uncoverable service.
int oracle_min_segments(const Instance& instance, const AvailabilityMatrix& x);

// Minimum total cost over every ordered split of [1, K] into exactly Y
// segments, each segment costed by exhaustive enumeration of all provider
// tuples. Throws InfeasibleError when no split into Y segments is feasible,
// std::invalid_argument when Y is outside [1, K].
double oracle_min_cost(const Instance& instance, const AvailabilityMatrix& x,
                       const DistanceTable& dist, int Y);

}  // namespace sercomp
