#include "sercomp/cost.hpp"

#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace sercomp {

namespace {

struct Adjacency {
    // CSR-style adjacency over node indices.
    std::vector<int> offsets;
    std::vector<std::pair<int, double>> arcs;
};

Adjacency build_adjacency(const PhysicalTopology& topology,
                          const std::unordered_map<std::string, int>& node_index) {
    const int num_nodes = static_cast<int>(topology.nodes.size());
    std::vector<int> degree(num_nodes, 0);
    std::vector<std::pair<std::pair<int, int>, double>> resolved;
    resolved.reserve(topology.edges.size());
    for (const auto& edge : topology.edges) {
        if (edge.w < 0.0) {
            throw std::invalid_argument("negative edge weight on " + edge.u + "-" + edge.v);
        }
        auto u_it = node_index.find(edge.u);
        auto v_it = node_index.find(edge.v);
        if (u_it == node_index.end() || v_it == node_index.end()) {
            throw std::invalid_argument("edge references unknown node: " + edge.u + "-" + edge.v);
        }
        resolved.push_back({{u_it->second, v_it->second}, edge.w});
        ++degree[u_it->second];
        ++degree[v_it->second];
    }
    Adjacency adj;
    adj.offsets.assign(num_nodes + 1, 0);
    for (int v = 0; v < num_nodes; ++v) adj.offsets[v + 1] = adj.offsets[v] + degree[v];
    adj.arcs.resize(adj.offsets.back());
    std::vector<int> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
    for (const auto& [uv, w] : resolved) {
        adj.arcs[cursor[uv.first]++] = {uv.second, w};
        adj.arcs[cursor[uv.second]++] = {uv.first, w};
    }
    return adj;
}

std::vector<double> dijkstra(const Adjacency& adj, int num_nodes, int source) {
    std::vector<double> dist(num_nodes, kInfiniteCost);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[source] = 0.0;
    heap.push({0.0, source});
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue;
        for (int a = adj.offsets[u]; a < adj.offsets[u + 1]; ++a) {
            const auto& [v, w] = adj.arcs[a];
            if (d + w < dist[v]) {
                dist[v] = d + w;
                heap.push({dist[v], v});
            }
        }
    }
    return dist;
}

}  // namespace

DistanceTable provider_distances(const PhysicalTopology& topology,
                                 const std::vector<Provider>& providers) {
    std::unordered_map<std::string, int> node_index;
    node_index.reserve(topology.nodes.size());
    for (int v = 0; v < static_cast<int>(topology.nodes.size()); ++v) {
        node_index.emplace(topology.nodes[v], v);
    }
    const int n = static_cast<int>(providers.size());
    std::vector<int> provider_node(n);
    for (int i = 0; i < n; ++i) {
        auto it = node_index.find(providers[i].node);
        if (it == node_index.end()) {
            throw std::invalid_argument("provider " + providers[i].id +
                                        " placed on unknown node " + providers[i].node);
        }
        provider_node[i] = it->second;
    }

    const Adjacency adj = build_adjacency(topology, node_index);
    const int num_nodes = static_cast<int>(topology.nodes.size());

    // Providers can share a node; run Dijkstra once per distinct source node.
    std::unordered_map<int, std::vector<double>> by_source;
    for (int i = 0; i < n; ++i) {
        if (!by_source.count(provider_node[i])) {
            by_source.emplace(provider_node[i], dijkstra(adj, num_nodes, provider_node[i]));
        }
    }

    DistanceTable table;
    table.n = n;
    table.dist.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const auto& row = by_source.at(provider_node[i]);
        for (int h = 0; h < n; ++h) {
            table.dist[static_cast<std::size_t>(i) * n + h] = row[provider_node[h]];
        }
    }
    return table;
}

CostEngine::CostEngine(const Instance& instance, const AvailabilityMatrix& x,
                       const DistanceTable& dist)
    : instance_(&instance),
      x_(&x),
      dist_(&dist),
      runs_(availability_runs(x)),
      service_providers_(providers_by_service(instance)) {}

void CostEngine::check_range(int k, int q) const {
    if (k < 1 || q < 1 || k + q - 1 > x_->K) {
        throw std::out_of_range("segment (k=" + std::to_string(k) + ", q=" +
                                std::to_string(q) + ") outside [1, " +
                                std::to_string(x_->K) + "]");
    }
}

bool CostEngine::segment_feasible(int k, int q) const {
    check_range(k, q);
    for (const auto& candidates : service_providers_) {
        bool covered = false;
        for (int i : candidates) {
            if (runs_.at(i, k) >= q) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

// The candidate solutions for a segment form a layered DAG: layer j holds the
// providers able to serve s_j through the whole segment, consecutive layers
// are fully connected with inter-provider distance as the arc cost, and a
// zero-cost virtual source/sink frame the first and last layers. The cheapest
// solution is the shortest source-to-sink path. suffix[j][t] below is the
// cheapest completion from the t-th candidate of layer j to the sink; the
// forward reconstruction then picks, at each layer, the smallest provider
// index that still achieves the optimum, which yields the lexicographically
// smallest minimum-cost assignment.
std::optional<MinCostResult> CostEngine::min_cost(int k, int q) const {
    check_range(k, q);
    const int m = instance_->service_count();

    std::vector<std::vector<int>> layers(m);
    for (int j = 0; j < m; ++j) {
        for (int i : service_providers_[j]) {
            if (runs_.at(i, k) >= q) layers[j].push_back(i);
        }
        if (layers[j].empty()) return std::nullopt;
    }

    std::vector<std::vector<double>> suffix(m);
    suffix[m - 1].assign(layers[m - 1].size(), 0.0);
    for (int j = m - 2; j >= 0; --j) {
        suffix[j].assign(layers[j].size(), kInfiniteCost);
        for (std::size_t t = 0; t < layers[j].size(); ++t) {
            const int i = layers[j][t];
            double best = kInfiniteCost;
            for (std::size_t t2 = 0; t2 < layers[j + 1].size(); ++t2) {
                const double c = dist_->at(i, layers[j + 1][t2]) + suffix[j + 1][t2];
                if (c < best) best = c;
            }
            suffix[j][t] = best;
        }
    }

    double best = kInfiniteCost;
    std::size_t pick = 0;
    for (std::size_t t = 0; t < layers[0].size(); ++t) {
        if (suffix[0][t] < best) {
            best = suffix[0][t];
            pick = t;
        }
    }
    if (!(best < kInfiniteCost)) return std::nullopt;  // all tuples cross a gap

    MinCostResult result;
    result.unit_cost = best;
    result.solution.providers.reserve(m);
    result.solution.providers.push_back(layers[0][pick]);
    for (int j = 1; j < m; ++j) {
        const int prev = layers[j - 1][pick];
        const double need = suffix[j - 1][pick];
        for (std::size_t t = 0; t < layers[j].size(); ++t) {
            if (dist_->at(prev, layers[j][t]) + suffix[j][t] == need) {
                pick = t;
                break;
            }
        }
        result.solution.providers.push_back(layers[j][pick]);
    }
    return result;
}

bool segment_feasible(const AvailabilityMatrix& x, const Instance& instance,
                      int k, int q) {
    const auto runs = availability_runs(x);
    if (k < 1 || q < 1 || k + q - 1 > x.K) {
        throw std::out_of_range("segment (k=" + std::to_string(k) + ", q=" +
                                std::to_string(q) + ") outside [1, " +
                                std::to_string(x.K) + "]");
    }
    for (const auto& candidates : providers_by_service(instance)) {
        bool covered = false;
        for (int i : candidates) {
            if (runs.at(i, k) >= q) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

std::optional<MinCostResult> min_cost_solution(const Instance& instance,
                                               const AvailabilityMatrix& x,
                                               const DistanceTable& dist,
                                               int k, int q) {
    return CostEngine(instance, x, dist).min_cost(k, q);
}

}  // namespace sercomp
