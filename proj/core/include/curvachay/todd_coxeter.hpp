#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvachay/local_graph.hpp"
#include "curvachay/presentation.hpp"
#include "curvachay/rational.hpp"

namespace curvachay {

/// Closed coset table of a finite group: the action of every letter of
/// S u S^-1 on the cosets of the trivial subgroup (equivalently the right
/// regular representation). Coset 0 is the identity.
struct CosetTable {
    int num_generators = 0;
    std::vector<std::string> letter_names;    // size 2|S|: s then s^-1
    std::vector<std::vector<int>> action;     // [coset][column]

    int n() const { return static_cast<int>(action.size()); }
    static int column(int gen, int sign) { return 2 * gen + (sign < 0 ? 1 : 0); }
    static int inverse_column(int col) { return col ^ 1; }

    int act(int coset, int col) const { return action[coset][col]; }
    int trace(int coset, const Word& w) const;

    /// Action is a permutation per column, columns are mutually inverse,
    /// and every relator traces back to its start from every coset.
    bool is_closed(const Presentation& p) const;

    std::string to_json() const;
};

/// HLT coset enumeration with lookahead over the trivial subgroup.
/// Deterministic: cosets are numbered in first-definition order. Throws
/// BudgetExceeded when more than max_cosets live cosets would be needed.
CosetTable todd_coxeter(const Presentation& p, int max_cosets);

/// Partition of the 2|S| letters by their permutation action. Letters that
/// act trivially (collapsed generators) belong to no class.
struct LetterClasses {
    std::vector<int> class_of;                // letter -> class id, -1 when collapsed
    std::vector<std::vector<int>> members;    // class -> letters, ascending
    std::vector<int> inverse_class;           // class -> class of the inverse letters

    int num_classes() const { return static_cast<int>(members.size()); }
};
LetterClasses letter_classes(const CosetTable& t);

/// Simple Cayley graph of the finite group: one undirected edge per
/// merged-generator class pair {g, g^-1}; collapsed generators produce no
/// edge; directed labels record every letter realizing the step, so merge
/// multiplicities can be read off the labels. m == 1; edge weights come
/// from class_weights (indexed by class id) or default to 1.
LocalGraph cayley_from_cosets(const CosetTable& t,
                              const std::optional<std::vector<Rational>>& class_weights = std::nullopt);

}  // namespace curvachay
