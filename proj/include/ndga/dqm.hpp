#ifndef NDGA_DQM_HPP
#define NDGA_DQM_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ndga/multi_index.hpp"
#include "ndga/scalar.hpp"

namespace ndga {

/// A weighted directed graph given by its neighbour function. Vertices are
/// only materialized when reached, so the vertex set may be infinite as long
/// as every vertex has finitely many out-edges.
template <class Vertex>
class WeightedDigraph {
public:
    using Edge = std::pair<Vertex, Scalar>; // (target, weight)
    using Neighbors = std::function<std::vector<Edge>(const Vertex&)>;

    explicit WeightedDigraph(Neighbors neighbors) : neighbors_(std::move(neighbors)) {}

    std::vector<Edge> neighbors(const Vertex& v) const { return neighbors_(v); }

private:
    Neighbors neighbors_;
};

/// ω_n(·, x): the path-sum of every vertex reachable from x in exactly n steps.
/// Layer by layer: ω_0 = [x], ω_{k+1}(z) = Σ_{y -w-> z} ω_k(y) w.
template <class Vertex>
std::map<Vertex, Scalar> kernel_row(const WeightedDigraph<Vertex>& G, unsigned n, const Vertex& x) {
    std::map<Vertex, Scalar> layer{{x, Scalar(1)}};
    for (unsigned step = 0; step < n; ++step) {
        std::map<Vertex, Scalar> next;
        for (const auto& [v, amplitude] : layer) {
            if (amplitude.is_zero()) continue;
            for (const auto& [w, weight] : G.neighbors(v)) next[w] += amplitude * weight;
        }
        layer = std::move(next);
    }
    for (auto it = layer.begin(); it != layer.end();) it = it->second.is_zero() ? layer.erase(it) : std::next(it);
    return layer;
}

/// ω_n(y, x): sum over length-n paths x -> y of the product of edge weights.
template <class Vertex>
Scalar kernel(const WeightedDigraph<Vertex>& G, unsigned n, const Vertex& x, const Vertex& y) {
    const auto row = kernel_row(G, n, x);
    auto it = row.find(y);
    return it == row.end() ? Scalar(0) : it->second;
}

template <class Vertex>
struct WeightedPath {
    std::vector<Vertex> vertices; // n + 1 vertices for a path of n edges
    Scalar weight;
};

namespace detail {

template <class Vertex>
void walk(const WeightedDigraph<Vertex>& G, unsigned remaining, const Vertex& y, WeightedPath<Vertex>& current,
          std::vector<WeightedPath<Vertex>>& out) {
    if (remaining == 0) {
        if (current.vertices.back() == y) out.push_back(current);
        return;
    }
    const Vertex here = current.vertices.back();
    for (const auto& [next, weight] : G.neighbors(here)) {
        const Scalar saved = current.weight;
        current.vertices.push_back(next);
        current.weight *= weight;
        walk(G, remaining - 1, y, current, out);
        current.vertices.pop_back();
        current.weight = saved;
    }
}

} // namespace detail

/// Every length-n path from x to y, depth first in neighbour order.
template <class Vertex>
std::vector<WeightedPath<Vertex>> enumerate_paths(const WeightedDigraph<Vertex>& G, unsigned n, const Vertex& x,
                                                  const Vertex& y) {
    std::vector<WeightedPath<Vertex>> out;
    WeightedPath<Vertex> current{{x}, Scalar(1)};
    detail::walk(G, n, y, current, out);
    return out;
}

/// Out-edges of s in the multi-index graph L:
///   s -> (0, s)    weight 1
///   s -> s         weight (-1)^{|s| + l(s)}
///   s -> s + e_i   weight (-1)^{|s_{<i}| + i - 1},  1 <= i <= l(s)
std::vector<std::pair<MultiIndex, Scalar>> graph_L_neighbors(const MultiIndex& s);

WeightedDigraph<MultiIndex> graph_L();

/// Path-sum value kernel(L, N, ∅, s).
Scalar c_oracle(const MultiIndex& s, unsigned N);

/// Generic labelled graph from {"edges": [{"from", "to", "weight"}]} data.
/// Parallel edges are kept; neighbour order is file order.
class LabelledGraph {
public:
    struct EdgeSpec {
        std::string from;
        std::string to;
        Scalar weight;
    };

    explicit LabelledGraph(std::vector<EdgeSpec> edges);

    bool has_vertex(const std::string& v) const;
    const std::vector<std::string>& vertices() const { return vertices_; } // sorted
    const std::vector<EdgeSpec>& edges() const { return edges_; }
    WeightedDigraph<std::string> digraph() const;

private:
    std::vector<EdgeSpec> edges_;
    std::vector<std::string> vertices_;
    std::map<std::string, std::vector<std::pair<std::string, Scalar>>> adjacency_;
};

} // namespace ndga

#endif // NDGA_DQM_HPP
