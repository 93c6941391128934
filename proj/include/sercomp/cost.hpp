#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "sercomp/schedule.hpp"
#include "sercomp/types.hpp"

namespace sercomp {

inline constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

// Shortest-path transmission cost between every provider pair; +inf when the
// two providers sit in disconnected components.
struct DistanceTable {
    int n = 0;
    std::vector<double> dist;

    double at(int i, int h) const { return dist[static_cast<std::size_t>(i) * n + h]; }
};

// One Dijkstra run per distinct provider node. Throws std::invalid_argument
// on negative edge weights or providers placed on unknown nodes.
DistanceTable provider_distances(const PhysicalTopology& topology,
                                 const std::vector<Provider>& providers);

struct MinCostResult {
    Composition solution;
    double unit_cost = 0.0;
};

// Per-instance query engine. Precomputes the availability run table and the
// per-service provider lists once; every query afterwards is const and safe
// to issue from multiple threads. The referenced instance, matrix, and
// distance table must outlive the engine.
class CostEngine {
public:
    CostEngine(const Instance& instance, const AvailabilityMatrix& x,
               const DistanceTable& dist);

    // True iff every service has a provider active on all of k .. k+q-1.
    bool segment_feasible(int k, int q) const;

    // Cheapest solution usable unchanged on executions k .. k+q-1, together
    // with its per-execution cost. nullopt when no such solution exists (some
    // service has no provider spanning the segment, or every candidate tuple
    // crosses a disconnected provider pair). Ties resolve to the
    // lexicographically smallest assignment by provider index.
    std::optional<MinCostResult> min_cost(int k, int q) const;

    int executions() const { return x_->K; }
    const AvailabilityRuns& runs() const { return runs_; }

private:
    void check_range(int k, int q) const;

    const Instance* instance_;
    const AvailabilityMatrix* x_;
    const DistanceTable* dist_;
    AvailabilityRuns runs_;
    std::vector<std::vector<int>> service_providers_;
};

// Convenience wrappers that build a throwaway engine per call. Fine for
// one-off queries; batch callers should hold a CostEngine.
bool segment_feasible(const AvailabilityMatrix& x, const Instance& instance,
                      int k, int q);
std::optional<MinCostResult> min_cost_solution(const Instance& instance,
                                               const AvailabilityMatrix& x,
                                               const DistanceTable& dist,
                                               int k, int q);

}  // namespace sercomp
