#include "sercomp/dp.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sercomp {

namespace {

// Lazily filled (k, q) -> min_cost cache. Every (k, q) pair is queried at
// most a handful of times across the table fill and the reconstruction, but
// the layered-graph search behind each query is the expensive part.
class SegmentCostCache {
public:
    SegmentCostCache(const CostEngine& engine, int K)
        : engine_(&engine), K_(K), entries_(static_cast<std::size_t>(K + 1) * (K + 1)) {}

    const std::optional<MinCostResult>& get(int k, int q) {
        auto& entry = entries_[static_cast<std::size_t>(k) * (K_ + 1) + q];
        if (!entry.computed) {
            entry.result = engine_->min_cost(k, q);
            entry.computed = true;
        }
        return entry.result;
    }

private:
    struct Entry {
        bool computed = false;
        std::optional<MinCostResult> result;
    };
    const CostEngine* engine_;
    int K_;
    std::vector<Entry> entries_;
};

}  // namespace

Plan dp_plan(const Instance& instance, const AvailabilityMatrix& x,
             const DistanceTable& dist, int Y) {
    const int K = x.K;
    if (Y < 1 || Y > K) {
        throw std::invalid_argument("segment count " + std::to_string(Y) +
                                    " outside [1, " + std::to_string(K) + "]");
    }

    CostEngine engine(instance, x, dist);
    SegmentCostCache cache(engine, K);

    // table[h][k]: cheapest completion of executions k .. K when the h-th of
    // Y segments starts at k. Segment h can only start within [h, K-Y+h],
    // since h-1 segments precede it and Y-h must still fit after it.
    std::vector<std::vector<double>> table(Y + 2, std::vector<double>(K + 2, kInfiniteCost));
    std::vector<std::vector<int>> choice(Y + 1, std::vector<int>(K + 1, 0));

    for (int k = Y; k <= K; ++k) {
        const int q = K - k + 1;  // the last segment must reach execution K
        const auto& result = cache.get(k, q);
        table[Y][k] = result ? result->unit_cost * q : kInfiniteCost;
    }
    for (int h = Y - 1; h >= 1; --h) {
        for (int k = h; k <= K - Y + h; ++k) {
            double best = kInfiniteCost;
            int best_q = 0;
            const int max_q = K - Y + h + 1 - k;
            for (int q = 1; q <= max_q; ++q) {
                const auto& result = cache.get(k, q);
                if (!result) break;  // a longer segment cannot become feasible
                const double value = result->unit_cost * q + table[h + 1][k + q];
                if (value < best) {
                    best = value;
                    best_q = q;
                }
            }
            table[h][k] = best;
            choice[h][k] = best_q;
        }
    }

    if (!(table[1][1] < kInfiniteCost)) {
        throw InfeasibleError("no feasible split of [1, " + std::to_string(K) +
                              "] into " + std::to_string(Y) + " segments");
    }

    Plan plan;
    int k = 1;
    for (int h = 1; h <= Y; ++h) {
        const int q = (h == Y) ? K - k + 1 : choice[h][k];
        const auto& result = cache.get(k, q);
        plan.segments.push_back({k, q, result->solution, result->unit_cost});
        plan.total_cost += result->unit_cost * q;
        k += q;
    }
    return plan;
}

}  // namespace sercomp
