#include "curvachay/ball.hpp"

#include <algorithm>
#include <unordered_map>

#include "curvachay/errors.hpp"

namespace curvachay {

std::vector<Letter> symmetrized_letters(const DefiningGraph& h) {
    std::vector<Letter> letters;
    for (int g = 0; g < h.size(); ++g) {
        letters.push_back({g, 1});
        if (h.orders[g] != GeneratorOrder::finite(2)) letters.push_back({g, -1});
    }
    return letters;
}

std::string letter_name(const DefiningGraph& h, Letter l) {
    return l.sign > 0 ? h.vertices[l.gen] : h.vertices[l.gen] + "^-1";
}

BallWithElements ball_with_elements(const Presentation& p, int radius, const BallOptions& opts) {
    if (!p.is_raach()) throw InvalidInput("ball construction requires a raach presentation");
    if (radius < 1) throw InvalidInput("ball radius must be >= 1");
    if (radius > opts.radius_cap) throw InvalidInput("ball radius exceeds configured cap");
    const DefiningGraph& h = *p.defining_graph;
    const std::vector<Letter> letters = symmetrized_letters(h);

    BallWithElements out;
    LocalGraph& g = out.graph;
    g.radius = radius;
    for (const Letter& l : letters) g.letter_names.push_back(letter_name(h, l));

    std::unordered_map<GroupElement, int, GroupElementHash> index;
    std::vector<GroupElement>& elems = out.elements;

    GroupElement identity;
    index[identity] = g.add_vertex("e");
    elems.push_back(identity);

    std::vector<int> layer{0};
    for (int depth = 0; depth < radius && !layer.empty(); ++depth) {
        // discover the next layer first so its vertex numbering is sorted
        std::vector<GroupElement> discovered;
        for (int u : layer)
            for (const Letter& l : letters) {
                GroupElement v = multiply(p, elems[u], l);
                if (!index.count(v)) {
                    index[v] = -1;  // reserve; numbered after sorting
                    discovered.push_back(std::move(v));
                }
            }
        std::sort(discovered.begin(), discovered.end());
        std::vector<int> next_layer;
        for (GroupElement& v : discovered) {
            if (elems.size() >= opts.vertex_cap)
                throw BudgetExceeded("ball construction exceeds the vertex cap");
            int id = g.add_vertex(element_to_string(p, v));
            index[v] = id;
            elems.push_back(std::move(v));
            next_layer.push_back(id);
        }
        // add all edges out of the current layer
        for (int u : layer)
            for (std::size_t li = 0; li < letters.size(); ++li) {
                GroupElement v = multiply(p, elems[u], letters[li]);
                int vid = index.at(v);
                if (vid == u) throw Error("generator acts trivially in a raach group");
                if (!g.adjacent(u, vid)) g.add_edge(u, vid);
                auto& lab = g.directed_labels(u, vid);
                if (std::find(lab.begin(), lab.end(), static_cast<int>(li)) == lab.end())
                    lab.push_back(static_cast<int>(li));
            }
        layer = std::move(next_layer);
    }
    // edges inside the outermost sphere, completing the induced subgraph
    for (int u : layer)
        for (std::size_t li = 0; li < letters.size(); ++li) {
            GroupElement v = multiply(p, elems[u], letters[li]);
            auto it = index.find(v);
            if (it == index.end()) continue;
            int vid = it->second;
            if (!g.adjacent(u, vid)) g.add_edge(u, vid);
            auto& lab = g.directed_labels(u, vid);
            if (std::find(lab.begin(), lab.end(), static_cast<int>(li)) == lab.end())
                lab.push_back(static_cast<int>(li));
        }
    return out;
}

LocalGraph ball(const Presentation& p, int radius, const BallOptions& opts) {
    return ball_with_elements(p, radius, opts).graph;
}

}  // namespace curvachay
