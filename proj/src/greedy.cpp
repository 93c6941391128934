#include "sercomp/greedy.hpp"

#include <limits>
#include <string>
#include <utility>

namespace sercomp {

Plan greedy_plan(const Instance& instance, const AvailabilityMatrix& x) {
    const auto runs = availability_runs(x);
    const auto by_service = providers_by_service(instance);
    const int m = instance.service_count();
    const int K = x.K;

    Plan plan;
    int k = 1;
    while (k <= K) {
        Composition solution;
        solution.providers.reserve(m);
        int length = std::numeric_limits<int>::max();
        for (int j = 0; j < m; ++j) {
            int best_provider = -1;
            int best_run = 0;
            for (int i : by_service[j]) {  // index order; ties keep the smallest
                const int r = runs.at(i, k);
                if (r > best_run) {
                    best_run = r;
                    best_provider = i;
                }
            }
            if (best_provider < 0) {
                throw InfeasibleError("execution " + std::to_string(k) +
                                      " infeasible for " + instance.query.services[j]);
            }
            solution.providers.push_back(best_provider);
            if (best_run < length) length = best_run;
        }
        plan.segments.push_back({k, length, std::move(solution), 0.0});
        k += length;
    }
    return plan;
}

}  // namespace sercomp
