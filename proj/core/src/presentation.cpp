#include "curvachay/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

#include "curvachay/errors.hpp"

namespace curvachay {

Letter inverse(Letter l) { return {l.gen, -l.sign}; }

Word Word::inverse_word() const {
    Word out;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(inverse(*it));
    return out;
}

Word freely_reduce(const Word& w) {
    std::vector<Letter> stack;
    for (const Letter& l : w.letters) {
        if (!stack.empty() && stack.back().gen == l.gen && stack.back().sign == -l.sign)
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return Word{std::move(stack)};
}

int DefiningGraph::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return static_cast<int>(i);
    return -1;
}

bool DefiningGraph::adjacent(int i, int j) const {
    if (i == j) return false;
    return edges.count({std::min(i, j), std::max(i, j)}) > 0;
}

void DefiningGraph::add_edge(int i, int j) {
    if (i == j) throw InvalidInput("self-loop in defining graph");
    edges.insert({std::min(i, j), std::max(i, j)});
}

int Presentation::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == name) return static_cast<int>(i);
    return -1;
}

int AssociatedPair::weighted_degree(int i) const {
    int d = 0;
    for (int j = 0; j < size(); ++j) d += weight[i][j];
    return d;
}

int AssociatedPair::find_vertex(int base, int sign) const {
    for (int i = 0; i < size(); ++i)
        if (vertices[i].base == base && vertices[i].sign == sign) return i;
    // order-2 generators have a single vertex standing for both signs
    for (int i = 0; i < size(); ++i)
        if (vertices[i].base == base) return i;
    return -1;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool try_consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!try_consume(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
    bool try_keyword(const std::string& kw) {
        skip_ws();
        if (text.compare(pos, kw.size(), kw) == 0) {
            std::size_t end = pos + kw.size();
            if (end >= text.size() || !(std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_')) {
                pos = end;
                return true;
            }
        }
        return false;
    }
    std::string name() {
        skip_ws();
        std::size_t start = pos;
        auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
        auto tail = [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
        };
        if (pos >= text.size() || !head(text[pos])) throw ParseError("expected generator name", pos);
        ++pos;
        while (pos < text.size() && tail(text[pos])) ++pos;
        return text.substr(start, pos - start);
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected integer", start);
        return std::stol(text.substr(start, pos - start));
    }
};

void append_power(Word& w, int gen, long exp) {
    Letter l{gen, exp >= 0 ? 1 : -1};
    for (long k = 0; k < std::labs(exp); ++k) w.letters.push_back(l);
}

Word parse_word(Cursor& cur, const std::vector<std::string>& alphabet) {
    Word w;
    while (true) {
        char c = cur.peek();
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) break;
        std::size_t name_pos = cur.pos;
        std::string n = cur.name();
        int gen = -1;
        for (std::size_t i = 0; i < alphabet.size(); ++i)
            if (alphabet[i] == n) gen = static_cast<int>(i);
        if (gen < 0) throw ParseError("unknown generator '" + n + "' in word", name_pos);
        long exp = 1;
        if (cur.try_consume('^')) exp = cur.integer();
        append_power(w, gen, exp);
    }
    if (w.letters.empty()) throw ParseError("expected word", cur.pos);
    return w;
}

Presentation parse_raach(Cursor& cur) {
    DefiningGraph h;
    cur.expect('{');
    while (true) {
        std::size_t name_pos = cur.pos;
        std::string n = cur.name();
        if (h.index_of(n) >= 0) throw ParseError("duplicate generator '" + n + "'", name_pos);
        cur.expect(':');
        GeneratorOrder ord;
        if (cur.try_keyword("inf")) {
            ord = GeneratorOrder::infinite();
        } else {
            std::size_t ord_pos = cur.pos;
            long v = cur.integer();
            if (v < 2 || v > 4)
                throw ParseError("generator order must be one of 2, 3, 4, inf", ord_pos);
            ord = GeneratorOrder::finite(static_cast<int>(v));
        }
        h.vertices.push_back(n);
        h.orders.push_back(ord);
        if (cur.try_consume(',')) continue;
        break;
    }
    if (cur.try_consume(';')) {
        if (cur.try_keyword("commute")) {
            while (true) {
                cur.expect('(');
                std::size_t a_pos = cur.pos;
                std::string a = cur.name();
                cur.expect(',');
                std::size_t b_pos = cur.pos;
                std::string b = cur.name();
                cur.expect(')');
                int ia = h.index_of(a), ib = h.index_of(b);
                if (ia < 0) throw ParseError("commutation edge names unknown generator '" + a + "'", a_pos);
                if (ib < 0) throw ParseError("commutation edge names unknown generator '" + b + "'", b_pos);
                if (ia == ib) throw ParseError("commutation edge must join distinct generators", a_pos);
                h.add_edge(ia, ib);
                if (cur.try_consume(',')) continue;
                break;
            }
            cur.try_consume(';');
        }
    }
    cur.expect('}');
    return presentation_from_graph(h);
}

Presentation parse_group(Cursor& cur) {
    Presentation p;
    cur.expect('<');
    while (true) {
        std::size_t name_pos = cur.pos;
        std::string n = cur.name();
        if (p.index_of(n) >= 0) throw ParseError("duplicate generator '" + n + "'", name_pos);
        p.alphabet.push_back(n);
        if (cur.try_consume(',')) continue;
        break;
    }
    cur.expect('|');
    while (true) {
        Word w = parse_word(cur, p.alphabet);
        p.relators.push_back(freely_reduce(w));
        if (cur.try_consume(',')) continue;
        break;
    }
    cur.expect('>');
    return p;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    Cursor cur{text};
    Presentation p;
    if (cur.try_keyword("raach")) {
        p = parse_raach(cur);
    } else if (cur.try_keyword("group")) {
        p = parse_group(cur);
    } else {
        throw ParseError("expected 'raach' or 'group'", cur.pos);
    }
    if (!cur.eof()) throw ParseError("trailing input", cur.pos);
    return p;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string word_to_text(const Presentation& p, const Word& w) {
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < w.letters.size()) {
        std::size_t j = i;
        while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
        long exp = static_cast<long>(j - i) * w.letters[i].sign;
        if (!first) os << ' ';
        os << p.alphabet[w.letters[i].gen];
        if (exp != 1) os << '^' << exp;
        first = false;
        i = j;
    }
    return os.str();
}

std::string to_text(const Presentation& p) {
    std::ostringstream os;
    if (p.is_raach()) {
        const DefiningGraph& h = *p.defining_graph;
        os << "raach { ";
        for (int i = 0; i < h.size(); ++i) {
            if (i) os << ", ";
            os << h.vertices[i] << ':';
            if (h.orders[i].is_infinite())
                os << "inf";
            else
                os << h.orders[i].value;
        }
        if (!h.edges.empty()) {
            os << "; commute ";
            bool first = true;
            for (const auto& [a, b] : h.edges) {
                if (!first) os << ", ";
                os << '(' << h.vertices[a] << ',' << h.vertices[b] << ')';
                first = false;
            }
        }
        os << "; }";
    } else {
        os << "group <";
        for (std::size_t i = 0; i < p.alphabet.size(); ++i) {
            if (i) os << ',';
            os << p.alphabet[i];
        }
        os << " | ";
        for (std::size_t i = 0; i < p.relators.size(); ++i) {
            if (i) os << ", ";
            os << word_to_text(p, p.relators[i]);
        }
        os << '>';
    }
    return os.str();
}

std::string presentation_to_json(const Presentation& p) {
    nlohmann::ordered_json j;
    j["kind"] = p.is_raach() ? "raach" : "general";
    j["alphabet"] = p.alphabet;
    nlohmann::ordered_json rels = nlohmann::ordered_json::array();
    for (const Word& w : p.relators) {
        nlohmann::ordered_json rel = nlohmann::ordered_json::array();
        for (const Letter& l : w.letters) rel.push_back({p.alphabet[l.gen], l.sign});
        rels.push_back(rel);
    }
    j["relators"] = rels;
    if (p.is_raach()) {
        const DefiningGraph& h = *p.defining_graph;
        nlohmann::ordered_json g;
        g["vertices"] = h.vertices;
        nlohmann::ordered_json orders = nlohmann::ordered_json::array();
        for (const auto& o : h.orders) orders.push_back(o.is_infinite() ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(o.value));
        g["orders"] = orders;
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (const auto& [a, b] : h.edges) edges.push_back({h.vertices[a], h.vertices[b]});
        g["edges"] = edges;
        j["defining_graph"] = g;
    }
    return j.dump();
}

std::string associated_pair_to_json(const AssociatedPair& ap) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json verts = nlohmann::ordered_json::array();
    for (const auto& v : ap.vertices) verts.push_back(v.label);
    j["vertices"] = verts;
    j["weights"] = ap.weight;
    return j.dump();
}

// ---------------------------------------------------------------------------
// Associated pair and products
// ---------------------------------------------------------------------------

AssociatedPair associated_pair(const DefiningGraph& h) {
    AssociatedPair ap;
    for (int i = 0; i < h.size(); ++i) {
        ap.vertices.push_back({h.vertices[i], i, 1});
        if (h.orders[i] != GeneratorOrder::finite(2))
            ap.vertices.push_back({h.vertices[i] + "^-1", i, -1});
    }
    const int n = ap.size();
    ap.weight.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto& u = ap.vertices[i];
            const auto& v = ap.vertices[j];
            int w = 0;
            if (u.base == v.base) {
                // the pair {s, s^-1}
                if (h.orders[u.base] == GeneratorOrder::finite(3))
                    w = 2;
                else if (h.orders[u.base] == GeneratorOrder::finite(4))
                    w = 1;
            } else if (h.adjacent(u.base, v.base)) {
                w = 1;
            }
            ap.weight[i][j] = ap.weight[j][i] = w;
        }
    }
    return ap;
}

DefiningGraph raach_product(const DefiningGraph& h1, const DefiningGraph& h2) {
    DefiningGraph h = h1;
    std::vector<int> remap(h2.size());
    for (int i = 0; i < h2.size(); ++i) {
        std::string name = h2.vertices[i];
        int suffix = 2;
        while (h.index_of(name) >= 0) name = h2.vertices[i] + "_" + std::to_string(suffix++);
        remap[i] = h.size();
        h.vertices.push_back(name);
        h.orders.push_back(h2.orders[i]);
    }
    for (const auto& [a, b] : h2.edges) h.add_edge(remap[a], remap[b]);
    for (int i = 0; i < h1.size(); ++i)
        for (int j = 0; j < h2.size(); ++j) h.add_edge(i, remap[j]);
    return h;
}

std::vector<Word> raach_relators(const DefiningGraph& h) {
    std::vector<Word> rels;
    for (int i = 0; i < h.size(); ++i) {
        if (!h.orders[i].is_infinite()) {
            Word w;
            append_power(w, i, h.orders[i].value);
            rels.push_back(std::move(w));
        }
    }
    for (const auto& [a, b] : h.edges) {
        Word w;
        w.letters = {{a, -1}, {b, -1}, {a, 1}, {b, 1}};
        rels.push_back(std::move(w));
    }
    return rels;
}

Presentation presentation_from_graph(const DefiningGraph& h) {
    Presentation p;
    p.alphabet = h.vertices;
    p.relators = raach_relators(h);
    p.defining_graph = h;
    return p;
}

}  // namespace curvachay
