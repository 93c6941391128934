#include "sercomp/validate.hpp"

#include <string>
#include <unordered_map>
#include <unordered_set>

namespace sercomp {

namespace {

void add(ValidationReport& report, Violation::Kind kind, std::string message) {
    report.ok = false;
    report.violations.push_back({kind, std::move(message)});
}

void structural(ValidationReport& report, std::string message) {
    add(report, Violation::Kind::structural, std::move(message));
}

}  // namespace

ValidationReport validate_instance(const Instance& instance) {
    ValidationReport report;
    const int m = instance.service_count();
    const int K = instance.executions();

    if (m < 1) structural(report, "query has no services");
    if (K < 1) structural(report, "executions must be >= 1, got " + std::to_string(K));

    std::unordered_set<std::string> service_set;
    for (const auto& s : instance.query.services) {
        if (!service_set.insert(s).second) structural(report, "duplicate service id: " + s);
    }

    std::unordered_set<std::string> node_set;
    for (const auto& node : instance.topology.nodes) {
        if (!node_set.insert(node).second) structural(report, "duplicate node id: " + node);
    }
    for (const auto& edge : instance.topology.edges) {
        if (edge.u == edge.v) structural(report, "self-loop edge at " + edge.u);
        if (edge.w < 0.0) {
            structural(report, "negative edge weight on " + edge.u + "-" + edge.v);
        }
        if (!node_set.count(edge.u)) structural(report, "edge references unknown node: " + edge.u);
        if (!node_set.count(edge.v)) structural(report, "edge references unknown node: " + edge.v);
    }

    std::unordered_set<std::string> provider_set;
    bool schedules_ok = true;
    for (const auto& provider : instance.providers) {
        if (!provider_set.insert(provider.id).second) {
            structural(report, "duplicate provider id: " + provider.id);
        }
        for (const auto& s : provider.services) {
            if (!service_set.count(s)) {
                structural(report, "provider " + provider.id + " offers unknown service: " + s);
            }
        }
        if (!node_set.count(provider.node)) {
            structural(report, "provider " + provider.id + " placed on unknown node: " +
                                   provider.node);
        }
        if (K >= 1) {
            try {
                (void)expand_availability(provider.availability, K);
            } catch (const ScheduleSpecError& error) {
                schedules_ok = false;
                structural(report, "provider " + provider.id + ": " + error.what());
            }
        }
    }

    const auto by_service = providers_by_service(instance);
    for (int j = 0; j < m; ++j) {
        if (by_service[j].empty()) {
            structural(report, "service without provider: " + instance.query.services[j]);
        }
    }

    // The coverage scan needs expandable schedules and a sane shape.
    if (!schedules_ok || m < 1 || K < 1) return report;
    for (int j = 0; j < m; ++j) {
        if (by_service[j].empty()) return report;
    }

    const AvailabilityMatrix x = build_availability(instance);
    for (int k = 1; k <= K; ++k) {
        for (int j = 0; j < m; ++j) {
            bool covered = false;
            for (int i : by_service[j]) {
                if (x.active(i, k)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) {
                add(report, Violation::Kind::infeasible,
                    "execution " + std::to_string(k) + " infeasible for " +
                        instance.query.services[j]);
            }
        }
    }
    return report;
}

ValidationReport validate_plan(const Instance& instance, const AvailabilityMatrix& x,
                               const Plan& plan) {
    ValidationReport report;
    const int m = instance.service_count();
    const int K = x.K;
    const auto by_service = providers_by_service(instance);

    if (plan.segments.empty()) {
        structural(report, "plan has no segments");
        return report;
    }
    int expected_start = 1;
    for (std::size_t s = 0; s < plan.segments.size(); ++s) {
        const auto& segment = plan.segments[s];
        const std::string label = "segment " + std::to_string(s + 1);
        if (segment.start != expected_start) {
            structural(report, label + " starts at " + std::to_string(segment.start) +
                                   ", expected " + std::to_string(expected_start));
        }
        if (segment.length < 1) {
            structural(report, label + " has nonpositive length");
            continue;
        }
        expected_start = segment.start + segment.length;
        if (static_cast<int>(segment.solution.providers.size()) != m) {
            structural(report, label + " assigns " +
                                   std::to_string(segment.solution.providers.size()) +
                                   " providers, expected " + std::to_string(m));
            continue;
        }
        for (int j = 0; j < m; ++j) {
            const int i = segment.solution.providers[j];
            if (i < 0 || i >= instance.provider_count()) {
                structural(report, label + " assigns out-of-range provider index");
                continue;
            }
            bool offers = false;
            for (int candidate : by_service[j]) {
                if (candidate == i) {
                    offers = true;
                    break;
                }
            }
            if (!offers) {
                structural(report, label + ": " + instance.providers[i].id +
                                       " does not offer " + instance.query.services[j]);
            }
            for (int k = segment.start; k < segment.start + segment.length; ++k) {
                if (k < 1 || k > K || !x.active(i, k)) {
                    add(report, Violation::Kind::infeasible,
                        label + ": " + instance.providers[i].id + " inactive at execution " +
                            std::to_string(k));
                    break;
                }
            }
        }
    }
    if (expected_start != K + 1) {
        structural(report, "segments cover [1, " + std::to_string(expected_start - 1) +
                               "], expected [1, " + std::to_string(K) + "]");
    }
    return report;
}

}  // namespace sercomp
