#include "treebound/io.hpp"

#include <json.hpp>

namespace treebound {

std::string tree_to_json(const Tree& t) {
    nlohmann::ordered_json j;
    j["n"] = t.order();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : t.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    return j.dump();
}

Tree tree_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Tree::from_edges(n, edges);
}

}  // namespace treebound
