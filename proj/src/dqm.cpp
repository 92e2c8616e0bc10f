#include "ndga/dqm.hpp"

#include <algorithm>

namespace ndga {

std::vector<std::pair<MultiIndex, Scalar>> graph_L_neighbors(const MultiIndex& s) {
    std::vector<std::pair<MultiIndex, Scalar>> out;
    out.emplace_back(s.prepend_zero(), Scalar(1));
    out.emplace_back(s, Scalar::sign_power(s.size_plus_length()));
    for (std::size_t i = 1; i <= s.length(); ++i) {
        out.emplace_back(s.plus_unit(i), Scalar::sign_power(static_cast<long>(s.before(i).weight() + i - 1)));
    }
    return out;
}

WeightedDigraph<MultiIndex> graph_L() { return WeightedDigraph<MultiIndex>(graph_L_neighbors); }

Scalar c_oracle(const MultiIndex& s, unsigned N) { return kernel(graph_L(), N, MultiIndex{}, s); }

LabelledGraph::LabelledGraph(std::vector<EdgeSpec> edges) : edges_(std::move(edges)) {
    for (const auto& e : edges_) {
        adjacency_[e.from].emplace_back(e.to, e.weight);
        vertices_.push_back(e.from);
        vertices_.push_back(e.to);
    }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool LabelledGraph::has_vertex(const std::string& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

WeightedDigraph<std::string> LabelledGraph::digraph() const {
    auto adjacency = adjacency_;
    return WeightedDigraph<std::string>([adjacency](const std::string& v) {
        auto it = adjacency.find(v);
        return it == adjacency.end() ? std::vector<std::pair<std::string, Scalar>>{} : it->second;
    });
}

} // namespace ndga
