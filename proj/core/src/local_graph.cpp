#include "curvachay/local_graph.hpp"

#include <deque>
#include <sstream>

#include <nlohmann/json.hpp>

#include "curvachay/errors.hpp"

namespace curvachay {

int LocalGraph::add_vertex(std::string name, Rational measure) {
    names_.push_back(std::move(name));
    measure_.push_back(std::move(measure));
    adj_.emplace_back();
    return n() - 1;
}

int LocalGraph::add_edge(int u, int v, Rational w) {
    if (u == v) throw InvalidInput("loop edge rejected: graphs are simple");
    if (adjacent(u, v)) throw InvalidInput("duplicate edge rejected: graphs are simple");
    if (w <= 0) throw InvalidInput("edge weights must be positive");
    auto key = std::minmax(u, v);
    Edge e;
    e.u = key.first;
    e.v = key.second;
    e.w = std::move(w);
    edges_.push_back(std::move(e));
    int idx = static_cast<int>(edges_.size()) - 1;
    edge_map_[{key.first, key.second}] = idx;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    return idx;
}

int LocalGraph::edge_index(int u, int v) const {
    auto key = std::minmax(u, v);
    auto it = edge_map_.find({key.first, key.second});
    return it == edge_map_.end() ? -1 : it->second;
}

const Rational& LocalGraph::weight(int u, int v) const {
    int idx = edge_index(u, v);
    if (idx < 0) throw InvalidInput("weight queried for a non-edge");
    return edges_[idx].w;
}

std::vector<int>& LocalGraph::directed_labels(int u, int v) {
    int idx = edge_index(u, v);
    if (idx < 0) throw InvalidInput("labels queried for a non-edge");
    return u == edges_[idx].u ? edges_[idx].labels_uv : edges_[idx].labels_vu;
}

const std::vector<int>& LocalGraph::directed_labels(int u, int v) const {
    int idx = edge_index(u, v);
    if (idx < 0) throw InvalidInput("labels queried for a non-edge");
    return u == edges_[idx].u ? edges_[idx].labels_uv : edges_[idx].labels_vu;
}

Rational LocalGraph::weighted_degree(int v) const {
    Rational d = 0;
    for (int u : adj_[v]) d += weight(v, u);
    return d;
}

std::vector<int> LocalGraph::bfs_distances(int source) const {
    std::vector<int> dist(n(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj_[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

bool LocalGraph::certifies(int x, int k) const {
    if (radius == kWholeGraph) return true;
    int d = dist_from_root()[x];
    return d >= 0 && d + k <= radius;
}

std::string LocalGraph::to_dot() const {
    std::ostringstream os;
    os << "graph ball {\n";
    for (int v = 0; v < n(); ++v)
        os << "  v" << v << " [label=\"" << names_[v] << "\"" << (v == root ? ", shape=doublecircle" : "") << "];\n";
    for (const Edge& e : edges_) {
        os << "  v" << e.u << " -- v" << e.v << " [";
        if (!e.labels_uv.empty() && !letter_names.empty()) {
            os << "label=\"";
            for (std::size_t i = 0; i < e.labels_uv.size(); ++i)
                os << (i ? "," : "") << letter_names[e.labels_uv[i]];
            os << "\", ";
        }
        os << "weight=\"" << to_fraction_string(e.w) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string LocalGraph::to_json() const {
    nlohmann::ordered_json j;
    j["root"] = root;
    j["radius"] = radius == kWholeGraph ? nlohmann::ordered_json("whole") : nlohmann::ordered_json(radius);
    nlohmann::ordered_json verts = nlohmann::ordered_json::array();
    for (int v = 0; v < n(); ++v) {
        nlohmann::ordered_json jv;
        jv["id"] = v;
        jv["name"] = names_[v];
        jv["measure"] = to_fraction_string(measure_[v]);
        verts.push_back(jv);
    }
    j["vertices"] = verts;
    nlohmann::ordered_json jedges = nlohmann::ordered_json::array();
    for (const Edge& e : edges_) {
        nlohmann::ordered_json je;
        je["u"] = e.u;
        je["v"] = e.v;
        je["weight"] = to_fraction_string(e.w);
        if (!letter_names.empty()) {
            nlohmann::ordered_json luv = nlohmann::ordered_json::array();
            for (int l : e.labels_uv) luv.push_back(letter_names[l]);
            nlohmann::ordered_json lvu = nlohmann::ordered_json::array();
            for (int l : e.labels_vu) lvu.push_back(letter_names[l]);
            je["labels_uv"] = luv;
            je["labels_vu"] = lvu;
        }
        jedges.push_back(je);
    }
    j["edges"] = jedges;
    return j.dump();
}

}  // namespace curvachay
