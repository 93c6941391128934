#include "sercomp/json_io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace sercomp {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& require(const json& j, const char* key, const char* where) {
    auto it = j.find(key);
    if (j.is_object() && it != j.end()) return *it;
    throw ParseError(std::string(where) + ": missing field '" + key + "'");
}

std::string as_string(const json& j, const char* where) {
    if (!j.is_string()) throw ParseError(std::string(where) + ": expected a string");
    return j.get<std::string>();
}

int as_int(const json& j, const char* where) {
    if (!j.is_number_integer()) throw ParseError(std::string(where) + ": expected an integer");
    return j.get<int>();
}

double as_number(const json& j, const char* where) {
    if (!j.is_number()) throw ParseError(std::string(where) + ": expected a number");
    return j.get<double>();
}

std::vector<std::string> as_string_array(const json& j, const char* where) {
    if (!j.is_array()) throw ParseError(std::string(where) + ": expected an array");
    std::vector<std::string> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(as_string(item, where));
    return out;
}

AvailabilitySpec parse_availability(const json& j, const std::string& provider_id) {
    const std::string where = "provider " + provider_id + " availability";
    if (j.is_string()) {
        ExplicitBits bits;
        const auto text = j.get<std::string>();
        bits.bits.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1') {
                throw ParseError(where + ": bitstring may only contain '0'/'1'");
            }
            bits.bits.push_back(c == '1' ? 1 : 0);
        }
        return bits;
    }
    if (j.is_object()) {
        PeriodicSchedule periodic;
        periodic.period = as_int(require(j, "period", where.c_str()), where.c_str());
        const auto& offsets = require(j, "active_offsets", where.c_str());
        if (!offsets.is_array()) throw ParseError(where + ": active_offsets must be an array");
        for (const auto& offset : offsets) {
            periodic.active_offsets.push_back(as_int(offset, where.c_str()));
        }
        return periodic;
    }
    throw ParseError(where + ": expected a bitstring or a periodic schedule object");
}

// Integral values print as integers; keeps emitted files stable and diffable.
ordered_json number(double v) {
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 9.0e15) {
        return static_cast<std::int64_t>(v);
    }
    return v;
}

ordered_json availability_to_json(const AvailabilitySpec& spec) {
    if (const auto* explicit_bits = std::get_if<ExplicitBits>(&spec)) {
        std::string text;
        text.reserve(explicit_bits->bits.size());
        for (auto b : explicit_bits->bits) text.push_back(b ? '1' : '0');
        return text;
    }
    const auto& periodic = std::get<PeriodicSchedule>(spec);
    ordered_json j;
    j["period"] = periodic.period;
    j["active_offsets"] = periodic.active_offsets;
    return j;
}

}  // namespace

Instance instance_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("instance: expected a JSON object");
    Instance instance;
    instance.query.services = as_string_array(require(j, "services", "instance"), "services");
    instance.query.executions = as_int(require(j, "executions", "instance"), "executions");

    const auto& providers = require(j, "providers", "instance");
    if (!providers.is_array()) throw ParseError("providers: expected an array");
    for (const auto& p : providers) {
        if (!p.is_object()) throw ParseError("providers: expected objects");
        Provider provider;
        provider.id = as_string(require(p, "id", "provider"), "provider id");
        provider.services = as_string_array(require(p, "services", "provider"),
                                            "provider services");
        provider.node = as_string(require(p, "node", "provider"), "provider node");
        provider.availability = parse_availability(require(p, "availability", "provider"),
                                                   provider.id);
        instance.providers.push_back(std::move(provider));
    }

    const auto& topology = require(j, "topology", "instance");
    instance.topology.nodes = as_string_array(require(topology, "nodes", "topology"),
                                              "topology nodes");
    const auto& edges = require(topology, "edges", "topology");
    if (!edges.is_array()) throw ParseError("topology edges: expected an array");
    for (const auto& e : edges) {
        PhysicalTopology::Edge edge;
        edge.u = as_string(require(e, "u", "edge"), "edge u");
        edge.v = as_string(require(e, "v", "edge"), "edge v");
        edge.w = as_number(require(e, "w", "edge"), "edge w");
        instance.topology.edges.push_back(std::move(edge));
    }
    return instance;
}

Instance parse_instance(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("instance: invalid JSON");
    return instance_from_json(j);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

ordered_json instance_to_json(const Instance& instance) {
    ordered_json j;
    j["services"] = instance.query.services;
    j["executions"] = instance.query.executions;
    auto& providers = j["providers"] = ordered_json::array();
    for (const auto& provider : instance.providers) {
        ordered_json p;
        p["id"] = provider.id;
        p["services"] = provider.services;
        p["node"] = provider.node;
        p["availability"] = availability_to_json(provider.availability);
        providers.push_back(std::move(p));
    }
    auto& topology = j["topology"] = ordered_json::object();
    topology["nodes"] = instance.topology.nodes;
    auto& edges = topology["edges"] = ordered_json::array();
    for (const auto& edge : instance.topology.edges) {
        ordered_json e;
        e["u"] = edge.u;
        e["v"] = edge.v;
        e["w"] = number(edge.w);
        edges.push_back(std::move(e));
    }
    return j;
}

std::string instance_to_string(const Instance& instance) {
    return instance_to_json(instance).dump(2) + "\n";
}

ordered_json plan_to_json(const Plan& plan, std::string_view algo,
                          const Instance& instance) {
    ordered_json j;
    j["algo"] = algo;
    j["Y"] = plan.switch_count();
    j["total_cost"] = number(plan.total_cost);
    auto& segments = j["segments"] = ordered_json::array();
    for (const auto& segment : plan.segments) {
        ordered_json s;
        s["start"] = segment.start;
        s["length"] = segment.length;
        auto& assignment = s["assignment"] = ordered_json::array();
        for (int i : segment.solution.providers) {
            assignment.push_back(instance.providers[i].id);
        }
        s["unit_cost"] = number(segment.unit_cost);
        segments.push_back(std::move(s));
    }
    return j;
}

std::string plan_to_string(const Plan& plan, std::string_view algo,
                           const Instance& instance) {
    return plan_to_json(plan, algo, instance).dump(2) + "\n";
}

}  // namespace sercomp
