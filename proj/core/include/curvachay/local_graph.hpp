#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "curvachay/rational.hpp"

namespace curvachay {

/// Finite rooted weighted graph: a ball of a Cayley graph, a whole finite
/// Cayley graph, or an arbitrary test graph. Simple by construction. The
/// `radius` field states which ball around the root the graph certifies:
/// every vertex strictly inside it has all of its neighbours present.
/// kWholeGraph means nothing is missing anywhere.
class LocalGraph {
  public:
    static constexpr int kWholeGraph = std::numeric_limits<int>::max();

    struct Edge {
        int u = 0, v = 0;
        Rational w = 1;
        std::vector<int> labels_uv;  // letter ids mapping u to v
        std::vector<int> labels_vu;  // letter ids mapping v to u
    };

    LocalGraph() = default;

    int add_vertex(std::string name, Rational measure = 1);
    /// Adds an undirected edge; rejects loops and duplicates.
    int add_edge(int u, int v, Rational w = 1);

    int n() const { return static_cast<int>(names_.size()); }
    int root = 0;
    int radius = kWholeGraph;

    const std::string& name(int v) const { return names_[v]; }
    const Rational& measure(int v) const { return measure_[v]; }
    Rational& measure(int v) { return measure_[v]; }

    bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }
    int edge_index(int u, int v) const;  // -1 when absent
    Edge& edge(int idx) { return edges_[idx]; }
    const Edge& edge(int idx) const { return edges_[idx]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Rational& weight(int u, int v) const;

    /// Letter ids attached to the directed edge u -> v.
    std::vector<int>& directed_labels(int u, int v);
    const std::vector<int>& directed_labels(int u, int v) const;

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    Rational weighted_degree(int v) const;

    /// Names of the letters referenced by edge labels (Cayley graphs only).
    std::vector<std::string> letter_names;

    /// Distance of every vertex from the root (graph metric).
    std::vector<int> dist_from_root() const { return bfs_distances(root); }

    /// BFS distances from one source; unreachable = -1.
    std::vector<int> bfs_distances(int source) const;

    /// True when the graph certifies the k-ball around x.
    bool certifies(int x, int k) const;

    std::string to_dot() const;
    std::string to_json() const;

  private:
    std::vector<std::string> names_;
    std::vector<Rational> measure_;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
    std::map<std::pair<int, int>, int> edge_map_;
};

}  // namespace curvachay
