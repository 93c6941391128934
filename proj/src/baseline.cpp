#include "sercomp/baseline.hpp"

#include <string>
#include <utility>

namespace sercomp {

Plan baseline_plan(const Instance& instance, const AvailabilityMatrix& x,
                   const DistanceTable& dist) {
    CostEngine engine(instance, x, dist);
    Plan plan;
    for (int k = 1; k <= x.K; ++k) {
        auto result = engine.min_cost(k, 1);
        if (!result) {
            throw InfeasibleError("execution " + std::to_string(k) +
                                  " admits no valid solution");
        }
        // Identical solutions always carry identical cost, so extending the
        // previous segment keeps its unit_cost accurate.
        if (!plan.segments.empty() && plan.segments.back().solution == result->solution) {
            plan.segments.back().length += 1;
        } else {
            plan.segments.push_back({k, 1, std::move(result->solution), result->unit_cost});
        }
        plan.total_cost += result->unit_cost;
    }
    return plan;
}

}  // namespace sercomp
