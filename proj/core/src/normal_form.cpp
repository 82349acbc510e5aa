#include "curvachay/normal_form.hpp"

#include <algorithm>
#include <sstream>

#include "curvachay/errors.hpp"

namespace curvachay {

namespace {

// exponent reduced into the canonical range; 0 means the syllable vanishes
long canonical_exp(const DefiningGraph& h, int gen, long exp) {
    if (h.orders[gen].is_infinite()) return exp;
    long m = h.orders[gen].value;
    long r = exp % m;
    if (r < 0) r += m;
    return r;
}

bool movable_past(const DefiningGraph& h, int a, int b) { return a != b && h.adjacent(a, b); }

// Merges same-generator syllables that commutation moves can bring
// together, reducing exponents mod order, until stable.
void merge_fixpoint(const DefiningGraph& h, std::vector<Syllable>& seq) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < seq.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < seq.size(); ++j) {
                if (seq[j].gen == seq[i].gen) {
                    seq[i].exp = canonical_exp(h, seq[i].gen, seq[i].exp + seq[j].exp);
                    seq.erase(seq.begin() + static_cast<long>(j));
                    if (seq[i].exp == 0) seq.erase(seq.begin() + static_cast<long>(i));
                    changed = true;
                    break;
                }
                if (!movable_past(h, seq[j].gen, seq[i].gen)) break;
            }
        }
        if (!changed) {
            // exponents may still be un-normalized on first entry
            for (std::size_t i = 0; i < seq.size(); ++i) {
                long c = canonical_exp(h, seq[i].gen, seq[i].exp);
                if (c != seq[i].exp) {
                    seq[i].exp = c;
                    changed = true;
                }
                if (c == 0) {
                    seq.erase(seq.begin() + static_cast<long>(i));
                    changed = true;
                    break;
                }
            }
        }
    }
}

// Greedy lexicographic minimization: repeatedly emit the least generator
// whose syllable can be shuffled to the front.
void lex_minimize(const DefiningGraph& h, std::vector<Syllable>& seq) {
    std::vector<Syllable> out;
    out.reserve(seq.size());
    while (!seq.empty()) {
        std::size_t best = 0;
        bool found = false;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            bool movable = true;
            for (std::size_t k = 0; k < i && movable; ++k)
                movable = movable_past(h, seq[k].gen, seq[i].gen);
            if (movable && (!found || seq[i].gen < seq[best].gen)) {
                best = i;
                found = true;
            }
        }
        out.push_back(seq[best]);
        seq.erase(seq.begin() + static_cast<long>(best));
    }
    seq = std::move(out);
}

std::vector<Syllable> normalize(const DefiningGraph& h, std::vector<Syllable> seq) {
    merge_fixpoint(h, seq);
    lex_minimize(h, seq);
    return seq;
}

const DefiningGraph& graph_of(const Presentation& p) {
    if (!p.is_raach()) throw InvalidInput("normal forms require a raach presentation");
    return *p.defining_graph;
}

}  // namespace

bool GroupElement::operator<(const GroupElement& other) const {
    return std::lexicographical_compare(
        syllables.begin(), syllables.end(), other.syllables.begin(), other.syllables.end(),
        [](const Syllable& a, const Syllable& b) {
            if (a.gen != b.gen) return a.gen < b.gen;
            return a.exp < b.exp;
        });
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const {
    std::uint64_t hash = 1469598103934665603ull;
    auto mix = [&hash](std::uint64_t v) {
        hash ^= v;
        hash *= 1099511628211ull;
    };
    for (const Syllable& s : g.syllables) {
        mix(static_cast<std::uint64_t>(s.gen) + 1);
        mix(static_cast<std::uint64_t>(s.exp + (1ll << 32)));
    }
    return static_cast<std::size_t>(hash);
}

long syllable_letter_count(const DefiningGraph& h, const Syllable& s) {
    if (h.orders[s.gen].is_infinite()) return std::labs(s.exp);
    long m = h.orders[s.gen].value;
    return std::min(s.exp, m - s.exp);
}

long word_length(const DefiningGraph& h, const GroupElement& g) {
    long total = 0;
    for (const Syllable& s : g.syllables) total += syllable_letter_count(h, s);
    return total;
}

GroupElement normal_form(const Presentation& p, const Word& w) {
    const DefiningGraph& h = graph_of(p);
    std::vector<Syllable> seq;
    seq.reserve(w.letters.size());
    for (const Letter& l : w.letters) seq.push_back({l.gen, l.sign});
    return GroupElement{normalize(h, std::move(seq))};
}

GroupElement multiply(const Presentation& p, const GroupElement& g, Letter l) {
    const DefiningGraph& h = graph_of(p);
    std::vector<Syllable> seq = g.syllables;
    seq.push_back({l.gen, l.sign});
    return GroupElement{normalize(h, std::move(seq))};
}

GroupElement group_inverse(const Presentation& p, const GroupElement& g) {
    const DefiningGraph& h = graph_of(p);
    std::vector<Syllable> seq;
    seq.reserve(g.syllables.size());
    for (auto it = g.syllables.rbegin(); it != g.syllables.rend(); ++it) seq.push_back({it->gen, -it->exp});
    return GroupElement{normalize(h, std::move(seq))};
}

Word word_of(const DefiningGraph& h, const GroupElement& g) {
    Word w;
    for (const Syllable& s : g.syllables) {
        long exp = s.exp;
        if (!h.orders[s.gen].is_infinite()) {
            long m = h.orders[s.gen].value;
            if (m - s.exp < s.exp) exp = s.exp - m;  // negative spelling is shorter
        }
        Letter l{s.gen, exp >= 0 ? 1 : -1};
        for (long k = 0; k < std::labs(exp); ++k) w.letters.push_back(l);
    }
    return w;
}

std::string element_to_string(const Presentation& p, const GroupElement& g) {
    if (g.is_identity()) return "e";
    std::ostringstream os;
    bool first = true;
    for (const Syllable& s : g.syllables) {
        if (!first) os << ' ';
        os << p.alphabet[s.gen];
        if (s.exp != 1) os << '^' << s.exp;
        first = false;
    }
    return os.str();
}

}  // namespace curvachay
