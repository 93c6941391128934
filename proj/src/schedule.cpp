#include "sercomp/schedule.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sercomp {

std::vector<std::uint8_t> expand_availability(const AvailabilitySpec& spec, int K) {
    if (const auto* explicit_bits = std::get_if<ExplicitBits>(&spec)) {
        if (static_cast<int>(explicit_bits->bits.size()) != K) {
            throw ScheduleSpecError("availability has " +
                                    std::to_string(explicit_bits->bits.size()) +
                                    " bits, expected " + std::to_string(K));
        }
        return explicit_bits->bits;
    }
    const auto& periodic = std::get<PeriodicSchedule>(spec);
    if (periodic.period < 1) {
        throw ScheduleSpecError("schedule period must be >= 1, got " +
                                std::to_string(periodic.period));
    }
    for (int offset : periodic.active_offsets) {
        if (offset < 0 || offset >= periodic.period) {
            throw ScheduleSpecError("active offset " + std::to_string(offset) +
                                    " outside [0, " + std::to_string(periodic.period) + ")");
        }
    }
    std::vector<std::uint8_t> bits(K, 0);
    for (int k = 1; k <= K; ++k) {
        const int phase = (k - 1) % periodic.period;
        const bool on = std::find(periodic.active_offsets.begin(),
                                  periodic.active_offsets.end(),
                                  phase) != periodic.active_offsets.end();
        bits[k - 1] = on ? 1 : 0;
    }
    return bits;
}

AvailabilityMatrix build_availability(const Instance& instance) {
    const int n = instance.provider_count();
    const int K = instance.executions();
    AvailabilityMatrix x(n, K);
    for (int i = 0; i < n; ++i) {
        const auto row = expand_availability(instance.providers[i].availability, K);
        std::copy(row.begin(), row.end(),
                  x.bits.begin() + static_cast<std::size_t>(i) * K);
    }
    return x;
}

AvailabilityRuns availability_runs(const AvailabilityMatrix& x) {
    AvailabilityRuns table;
    table.n = x.n;
    table.K = x.K;
    table.runs.assign(static_cast<std::size_t>(x.n) * x.K, 0);
    for (int i = 0; i < x.n; ++i) {
        int run = 0;
        for (int k = x.K; k >= 1; --k) {
            run = x.active(i, k) ? run + 1 : 0;
            table.runs[static_cast<std::size_t>(i) * x.K + (k - 1)] = run;
        }
    }
    return table;
}

bool feasible_execution(const AvailabilityMatrix& x, const Instance& instance, int k) {
    if (k < 1 || k > x.K) {
        throw std::out_of_range("execution index " + std::to_string(k) +
                                " outside [1, " + std::to_string(x.K) + "]");
    }
    const auto by_service = providers_by_service(instance);
    for (const auto& candidates : by_service) {
        bool covered = false;
        for (int i : candidates) {
            if (x.active(i, k)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

}  // namespace sercomp
