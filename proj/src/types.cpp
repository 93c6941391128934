#include "sercomp/types.hpp"

#include <unordered_map>

namespace sercomp {

std::vector<std::vector<int>> providers_by_service(const Instance& instance) {
    std::unordered_map<std::string, int> service_index;
    service_index.reserve(instance.query.services.size());
    for (int j = 0; j < instance.service_count(); ++j) {
        service_index.emplace(instance.query.services[j], j);
    }
    std::vector<std::vector<int>> result(instance.service_count());
    for (int i = 0; i < instance.provider_count(); ++i) {
        for (const auto& service : instance.providers[i].services) {
            auto it = service_index.find(service);
            if (it != service_index.end()) {
                result[it->second].push_back(i);
            }
        }
    }
    return result;  // provider loops run in index order, so each list is sorted
}

}  // namespace sercomp
