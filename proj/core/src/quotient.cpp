#include "curvachay/quotient.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "curvachay/errors.hpp"

namespace curvachay {

namespace {

void require_same_alphabet(const Presentation& p, const Presentation& p_prime) {
    if (p.alphabet != p_prime.alphabet) throw InvalidInput("quotient map requires identical alphabets");
}

// 1-Lipschitz holds iff every domain edge maps to an edge or a point;
// a sampled pairwise check confirms it against the graph metrics.
bool verify_lipschitz(const LocalGraph& domain, const LocalGraph& codomain, const std::vector<int>& image) {
    for (const auto& e : domain.edges()) {
        int iu = image[e.u], iv = image[e.v];
        if (iu != iv && !codomain.adjacent(iu, iv)) return false;
    }
    std::vector<std::vector<int>> cod_dist(codomain.n());
    for (int v = 0; v < codomain.n(); ++v) cod_dist[v] = codomain.bfs_distances(v);
    int step = std::max(1, domain.n() / 24);
    for (int u = 0; u < domain.n(); u += step) {
        std::vector<int> dom_dist = domain.bfs_distances(u);
        for (int v = 0; v < domain.n(); ++v) {
            if (dom_dist[v] < 0) continue;
            if (cod_dist[image[u]][image[v]] > dom_dist[v]) return false;
        }
    }
    return true;
}

bool surjective_onto(const std::vector<int>& image, int codomain_size) {
    std::set<int> hit(image.begin(), image.end());
    return static_cast<int>(hit.size()) == codomain_size;
}

}  // namespace

bool relators_contained(const Presentation& p, const Presentation& p_prime) {
    for (const Word& r : p.relators) {
        Word rr = freely_reduce(r);
        bool found = false;
        for (const Word& s : p_prime.relators)
            if (freely_reduce(s) == rr) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

std::vector<Word> coset_words(const CosetTable& t) {
    std::vector<Word> words(t.n());
    std::vector<bool> seen(t.n(), false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        for (int x = 0; x < 2 * t.num_generators; ++x) {
            int d = t.act(c, x);
            if (seen[d]) continue;
            seen[d] = true;
            words[d] = words[c];
            words[d].letters.push_back({x / 2, x % 2 == 0 ? 1 : -1});
            queue.push_back(d);
        }
    }
    return words;
}

VertexMap quotient_map(const Presentation& p, const Presentation& p_prime,
                       const CosetTable& domain, const CosetTable& codomain) {
    require_same_alphabet(p, p_prime);
    if (!relators_contained(p, p_prime))
        throw InvalidInput("relators of the source are not contained in the target");

    VertexMap vm;
    std::vector<Word> words = coset_words(domain);
    vm.image.reserve(domain.n());
    for (const Word& w : words) vm.image.push_back(codomain.trace(0, w));
    vm.surjective = surjective_onto(vm.image, codomain.n());
    vm.lipschitz_verified =
        verify_lipschitz(cayley_from_cosets(domain), cayley_from_cosets(codomain), vm.image);
    return vm;
}

VertexMap quotient_map(const Presentation& p, const Presentation& p_prime,
                       const BallWithElements& domain, const CosetTable& codomain) {
    require_same_alphabet(p, p_prime);
    if (!relators_contained(p, p_prime))
        throw InvalidInput("relators of the source are not contained in the target");

    VertexMap vm;
    vm.image.reserve(domain.graph.n());
    const DefiningGraph& h = *p.defining_graph;
    for (const GroupElement& g : domain.elements) vm.image.push_back(codomain.trace(0, word_of(h, g)));
    vm.surjective = surjective_onto(vm.image, codomain.n());
    vm.lipschitz_verified = verify_lipschitz(domain.graph, cayley_from_cosets(codomain), vm.image);
    return vm;
}

}  // namespace curvachay
