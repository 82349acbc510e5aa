#include "curvachay/cycles.hpp"

#include <algorithm>
#include <map>

#include "curvachay/ball.hpp"
#include "curvachay/errors.hpp"

namespace curvachay {

int CycleReport::count(int length) const {
    int c = 0;
    for (const auto& cy : cycles) c += static_cast<int>(cy.letters.size()) == length;
    return c;
}

std::vector<const CycleThroughIdentity*> CycleReport::violations() const {
    std::vector<const CycleThroughIdentity*> out;
    for (const auto& cy : cycles)
        if (!cy.classified) out.push_back(&cy);
    return out;
}

namespace {

Letter canonical_inverse(const DefiningGraph& h, Letter l) {
    if (h.orders[l.gen] == GeneratorOrder::finite(2)) return l;  // s == s^-1
    return inverse(l);
}

bool commuting_distinct(const DefiningGraph& h, Letter a, Letter b) {
    return a.gen != b.gen && h.adjacent(a.gen, b.gen);
}

void classify(const DefiningGraph& h, CycleThroughIdentity& cy) {
    const auto& ls = cy.letters;
    const std::size_t len = ls.size();
    cy.classified = false;
    if (len == 3) {
        if (ls[0] == ls[1] && ls[1] == ls[2] && h.orders[ls[0].gen] == GeneratorOrder::finite(3)) {
            cy.classified = true;
            cy.form = "order-3 triangle";
        }
        return;
    }
    if (len == 4) {
        if (ls[0] == ls[1] && ls[1] == ls[2] && ls[2] == ls[3] &&
            h.orders[ls[0].gen] == GeneratorOrder::finite(4)) {
            cy.classified = true;
            cy.form = "order-4 square";
            return;
        }
        if (ls[2] == canonical_inverse(h, ls[0]) && ls[3] == canonical_inverse(h, ls[1]) &&
            commuting_distinct(h, ls[0], ls[1])) {
            cy.classified = true;
            cy.form = "commuting square";
        }
        return;
    }
    if (len == 5) {
        // two base generators: three equal letters of an order-3 generator t
        // and a mutually-inverse pair of a commuting generator s
        std::map<int, std::vector<Letter>> by_gen;
        for (const Letter& l : ls) by_gen[l.gen].push_back(l);
        if (by_gen.size() != 2) return;
        auto it = by_gen.begin();
        int gen_a = it->first;
        std::vector<Letter> letters_a = it->second;
        ++it;
        int gen_b = it->first;
        std::vector<Letter> letters_b = it->second;
        if (letters_a.size() > letters_b.size()) {
            std::swap(gen_a, gen_b);
            std::swap(letters_a, letters_b);
        }
        if (letters_a.size() != 2 || letters_b.size() != 3) return;
        if (h.orders[gen_b] != GeneratorOrder::finite(3)) return;
        if (!h.adjacent(gen_a, gen_b)) return;
        if (!(letters_b[0] == letters_b[1] && letters_b[1] == letters_b[2])) return;
        if (letters_a[1] != canonical_inverse(h, letters_a[0])) return;
        if (ls[0] == ls[4] && h.orders[ls[0].gen] != GeneratorOrder::finite(3)) return;
        cy.classified = true;
        cy.form = "commuting order-3 pentagon";
    }
}

}  // namespace

CycleReport classify_short_cycles(const Presentation& p) {
    if (!p.is_raach()) throw InvalidInput("cycle classification requires a raach presentation");
    const DefiningGraph& h = *p.defining_graph;
    LocalGraph g = ball(p, 3);
    const std::vector<Letter> letters = symmetrized_letters(h);

    CycleReport report;
    std::vector<int> path{g.root};
    std::vector<bool> on_path(g.n(), false);
    on_path[g.root] = true;

    auto letter_on = [&](int u, int v) {
        const auto& lab = g.directed_labels(u, v);
        if (lab.size() != 1) throw Error("Cayley edge with non-unique label");
        return letters[lab[0]];
    };

    // depth-first enumeration of simple cycles through the root, one
    // direction kept per cycle (second vertex below last vertex)
    auto dfs = [&](auto&& self, int v) -> void {
        if (path.size() >= 3 && g.adjacent(v, g.root)) {
            if (path[1] < path.back()) {
                CycleThroughIdentity cy;
                for (std::size_t i = 0; i + 1 < path.size(); ++i)
                    cy.letters.push_back(letter_on(path[i], path[i + 1]));
                cy.letters.push_back(letter_on(path.back(), g.root));
                classify(h, cy);
                report.cycles.push_back(std::move(cy));
            }
        }
        if (path.size() == 5) return;
        for (int u : g.neighbors(v)) {
            if (on_path[u]) continue;
            path.push_back(u);
            on_path[u] = true;
            self(self, u);
            path.pop_back();
            on_path[u] = false;
        }
    };
    for (int u : g.neighbors(g.root)) {
        path.push_back(u);
        on_path[u] = true;
        dfs(dfs, u);
        path.pop_back();
        on_path[u] = false;
    }
    return report;
}

}  // namespace curvachay
