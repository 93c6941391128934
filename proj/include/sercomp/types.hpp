#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace sercomp {

// Identifiers are user-facing strings ("s1", "p3", "n17"); all computation
// uses dense 0-based indices into the owning vectors. Executions are 1-based,
// matching the instance file format where the leftmost availability bit is
// execution 1.

struct ServiceQuery {
    std::vector<std::string> services;  // invocation order, s_1 .. s_m
    int executions = 0;                 // K, how many times the query runs
};

// Explicit per-execution availability bits, leftmost = execution 1.
struct ExplicitBits {
    std::vector<std::uint8_t> bits;
};

// Periodic schedule: active at execution k iff (k-1) % period is listed.
struct PeriodicSchedule {
    int period = 0;
    std::vector<int> active_offsets;
};

using AvailabilitySpec = std::variant<ExplicitBits, PeriodicSchedule>;

struct Provider {
    std::string id;
    std::vector<std::string> services;  // subset of the query's services
    std::string node;                   // location in the physical topology
    AvailabilitySpec availability;
};

struct PhysicalTopology {
    struct Edge {
        std::string u;
        std::string v;
        double w = 0.0;  // nonnegative transmission cost
    };
    std::vector<std::string> nodes;
    std::vector<Edge> edges;  // undirected
};

struct Instance {
    ServiceQuery query;
    std::vector<Provider> providers;
    PhysicalTopology topology;

    int service_count() const { return static_cast<int>(query.services.size()); }
    int provider_count() const { return static_cast<int>(providers.size()); }
    int executions() const { return query.executions; }
};

// One provider index per required service, in query order. The same provider
// may serve several positions.
struct Composition {
    std::vector<int> providers;

    friend bool operator==(const Composition&, const Composition&) = default;
};

struct PlanSegment {
    int start = 0;   // first execution covered, 1-based
    int length = 0;  // number of consecutive executions covered
    Composition solution;
    double unit_cost = 0.0;  // transmission cost charged per execution
};

// Segments tile [1, K] in order; the switch count Y is the segment count.
struct Plan {
    std::vector<PlanSegment> segments;
    double total_cost = 0.0;

    int switch_count() const { return static_cast<int>(segments.size()); }
};

struct Violation {
    enum class Kind { structural, infeasible };
    Kind kind = Kind::structural;
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

// Some execution admits no valid assignment for some service.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed instance file or value that does not match the schema.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Availability schedule that cannot be expanded (bad period/offsets/length).
class ScheduleSpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Random generation gave up after exhausting its retry budget.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// For each service position j, the sorted indices of providers offering s_j.
std::vector<std::vector<int>> providers_by_service(const Instance& instance);

}  // namespace sercomp
