#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace curvachay {

/// Order of a generator: 0 encodes infinite order.
struct GeneratorOrder {
    int value = 0;

    static GeneratorOrder infinite() { return {0}; }
    static GeneratorOrder finite(int k) { return {k}; }

    bool is_infinite() const { return value == 0; }
    bool operator==(const GeneratorOrder&) const = default;
};

/// One signed generator symbol.
struct Letter {
    int gen = 0;
    int sign = 1;  // +1 or -1

    bool operator==(const Letter&) const = default;
};

Letter inverse(Letter l);

/// A word over the symmetrized alphabet; empty = identity.
struct Word {
    std::vector<Letter> letters;

    bool operator==(const Word&) const = default;
    Word inverse_word() const;
};

/// Cancels adjacent s s^-1 pairs until stable.
Word freely_reduce(const Word& w);

/// Defining data of a right-angled Artin-Coxeter hybrid: generator names,
/// orders in {2,3,4,inf} and a simple commutation graph.
struct DefiningGraph {
    std::vector<std::string> vertices;        // declaration order
    std::vector<GeneratorOrder> orders;       // parallel to vertices
    std::set<std::pair<int, int>> edges;      // i < j

    int index_of(const std::string& name) const;  // -1 when absent
    bool adjacent(int i, int j) const;
    void add_edge(int i, int j);
    int size() const { return static_cast<int>(vertices.size()); }

    bool operator==(const DefiningGraph&) const = default;
};

struct Presentation {
    std::vector<std::string> alphabet;            // declaration order
    std::vector<Word> relators;                   // freely reduced
    std::optional<DefiningGraph> defining_graph;  // engaged for the raach kind

    bool is_raach() const { return defining_graph.has_value(); }
    int index_of(const std::string& name) const;

    bool operator==(const Presentation&) const = default;
};

/// Weighted graph on the symmetrized generators S*. Order-2 generators
/// contribute a single vertex (s identified with s^-1); all others
/// contribute the pair s, s^-1 consecutively in declaration order.
struct AssociatedPair {
    struct Vertex {
        std::string label;  // "a" or "a^-1"
        int base = 0;       // generator index in the defining graph
        int sign = 1;       // +1 for s, -1 for s^-1
    };

    std::vector<Vertex> vertices;
    std::vector<std::vector<int>> weight;  // symmetric, values in {0,1,2}

    int size() const { return static_cast<int>(vertices.size()); }
    int weighted_degree(int i) const;
    int find_vertex(int base, int sign) const;
};

/// Parses the textual grammar:
///   raach { a:2, b:3; commute (a,b); }
///   group <a,b | a^4, b^-1 a^2>
Presentation parse_presentation(const std::string& text);

/// Inverse of parse_presentation up to whitespace; reparsing the output
/// yields an equal Presentation.
std::string to_text(const Presentation& p);
std::string word_to_text(const Presentation& p, const Word& w);

/// Stable-key-order JSON for pipeline use.
std::string presentation_to_json(const Presentation& p);
std::string associated_pair_to_json(const AssociatedPair& ap);

AssociatedPair associated_pair(const DefiningGraph& h);

/// Direct product: disjoint union of the defining graphs plus all edges
/// between the two vertex sets. Name collisions get a numeric suffix.
DefiningGraph raach_product(const DefiningGraph& h1, const DefiningGraph& h2);

/// Relators generated by a defining graph: s^ord for finite orders and a
/// commutator per edge.
std::vector<Word> raach_relators(const DefiningGraph& h);

/// Wraps a defining graph into a raach Presentation (alphabet +
/// materialized relators).
Presentation presentation_from_graph(const DefiningGraph& h);

}  // namespace curvachay
