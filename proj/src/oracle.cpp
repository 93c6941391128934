#include "sercomp/oracle.hpp"

#include <queue>
#include <stdexcept>
#include <string>

namespace sercomp {

namespace {

bool active_through(const AvailabilityMatrix& x, int i, int k, int q) {
    for (int e = k; e < k + q; ++e) {
        if (!x.active(i, e)) return false;
    }
    return true;
}

// Direct check: every service has some provider awake for all of k .. k+q-1.
bool interval_coverable(const AvailabilityMatrix& x,
                        const std::vector<std::vector<int>>& by_service,
                        int k, int q) {
    for (const auto& candidates : by_service) {
        bool covered = false;
        for (int i : candidates) {
            if (active_through(x, i, k, q)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

void require_all_executions_feasible(const AvailabilityMatrix& x,
                                     const Instance& instance,
                                     const std::vector<std::vector<int>>& by_service) {
    for (int k = 1; k <= x.K; ++k) {
        for (std::size_t j = 0; j < by_service.size(); ++j) {
            bool covered = false;
            for (int i : by_service[j]) {
                if (x.active(i, k)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) {
                throw InfeasibleError("execution " + std::to_string(k) +
                                      " infeasible for " + instance.query.services[j]);
            }
        }
    }
}

// Cheapest provider tuple for the segment by odometer enumeration over the
// product of the per-service candidate lists; +inf when none exists.
double brute_segment_cost(const AvailabilityMatrix& x, const DistanceTable& dist,
                          const std::vector<std::vector<int>>& by_service,
                          int k, int q) {
    const int m = static_cast<int>(by_service.size());
    std::vector<std::vector<int>> candidates(m);
    for (int j = 0; j < m; ++j) {
        for (int i : by_service[j]) {
            if (active_through(x, i, k, q)) candidates[j].push_back(i);
        }
        if (candidates[j].empty()) return kInfiniteCost;
    }

    double best = kInfiniteCost;
    std::vector<std::size_t> pick(m, 0);
    while (true) {
        double cost = 0.0;
        for (int j = 1; j < m; ++j) {
            cost += dist.at(candidates[j - 1][pick[j - 1]], candidates[j][pick[j]]);
        }
        if (cost < best) best = cost;

        int j = m - 1;
        while (j >= 0 && ++pick[j] == candidates[j].size()) {
            pick[j] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return best;
}

}  // namespace

int oracle_min_segments(const Instance& instance, const AvailabilityMatrix& x) {
    const auto by_service = providers_by_service(instance);
    require_all_executions_feasible(x, instance, by_service);

    // BFS over execution boundaries: node k stands for "executions 1 .. k-1
    // already tiled"; an edge k -> k+q exists when [k, k+q-1] is coverable.
    const int K = x.K;
    std::vector<int> steps(K + 2, -1);
    std::queue<int> frontier;
    steps[1] = 0;
    frontier.push(1);
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        if (u == K + 1) return steps[u];
        for (int q = 1; u + q <= K + 1; ++q) {
            if (!interval_coverable(x, by_service, u, q)) break;  // shrinking candidate sets
            if (steps[u + q] < 0) {
                steps[u + q] = steps[u] + 1;
                frontier.push(u + q);
            }
        }
    }
    throw InfeasibleError("no tiling of [1, " + std::to_string(K) + "] exists");
}

double oracle_min_cost(const Instance& instance, const AvailabilityMatrix& x,
                       const DistanceTable& dist, int Y) {
    const int K = x.K;
    if (Y < 1 || Y > K) {
        throw std::invalid_argument("segment count " + std::to_string(Y) +
                                    " outside [1, " + std::to_string(K) + "]");
    }
    const auto by_service = providers_by_service(instance);

    double best = kInfiniteCost;
    // Enumerate ordered splits of [1, K] into exactly `parts` segments.
    auto recurse = [&](auto&& self, int k, int parts, double acc) -> void {
        if (parts == 1) {
            const int q = K - k + 1;
            const double c = brute_segment_cost(x, dist, by_service, k, q);
            if (c < kInfiniteCost && acc + c * q < best) best = acc + c * q;
            return;
        }
        const int max_q = (K - k + 1) - (parts - 1);
        for (int q = 1; q <= max_q; ++q) {
            const double c = brute_segment_cost(x, dist, by_service, k, q);
            if (!(c < kInfiniteCost)) break;  // longer segments only get harder
            self(self, k + q, parts - 1, acc + c * q);
        }
    };
    recurse(recurse, 1, Y, 0.0);

    if (!(best < kInfiniteCost)) {
        throw InfeasibleError("no feasible split of [1, " + std::to_string(K) +
                              "] into " + std::to_string(Y) + " segments");
    }
    return best;
}

}  // namespace sercomp
