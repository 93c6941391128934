#pragma once

#include <cstdint>
#include <vector>

#include "sercomp/types.hpp"

namespace sercomp {

// x_ik bits for n providers over K executions, row-major.
struct AvailabilityMatrix {
    int n = 0;
    int K = 0;
    std::vector<std::uint8_t> bits;

    AvailabilityMatrix() = default;
    AvailabilityMatrix(int n_, int K_)
        : n(n_), K(K_), bits(static_cast<std::size_t>(n_) * K_, 0) {}

    bool active(int i, int k) const {
        return bits[static_cast<std::size_t>(i) * K + (k - 1)] != 0;
    }
    void set(int i, int k, bool on) {
        bits[static_cast<std::size_t>(i) * K + (k - 1)] = on ? 1 : 0;
    }
};

// at(i, k): number of consecutive executions, starting at k inclusive, for
// which provider i stays active; 0 when it is asleep at k.
struct AvailabilityRuns {
    int n = 0;
    int K = 0;
    std::vector<int> runs;

    int at(int i, int k) const {
        return runs[static_cast<std::size_t>(i) * K + (k - 1)];
    }
};

// Expands an availability spec to K bits. Throws ScheduleSpecError when the
// spec cannot produce exactly K bits (wrong literal length, period < 1,
// offset outside [0, period)).
std::vector<std::uint8_t> expand_availability(const AvailabilitySpec& spec, int K);

// Row i is provider i's expanded bit sequence.
AvailabilityMatrix build_availability(const Instance& instance);

// Backward scan satisfying runs[i][k] = bits[i][k] ? 1 + runs[i][k+1] : 0.
AvailabilityRuns availability_runs(const AvailabilityMatrix& x);

// True iff every service has at least one active provider at execution k.
bool feasible_execution(const AvailabilityMatrix& x, const Instance& instance, int k);

}  // namespace sercomp
