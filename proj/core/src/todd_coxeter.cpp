#include "curvachay/todd_coxeter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include <nlohmann/json.hpp>

#include "curvachay/errors.hpp"

namespace curvachay {

int CosetTable::trace(int coset, const Word& w) const {
    int c = coset;
    for (const Letter& l : w.letters) c = action[c][column(l.gen, l.sign)];
    return c;
}

bool CosetTable::is_closed(const Presentation& p) const {
    const int cols = 2 * num_generators;
    for (int c = 0; c < n(); ++c)
        for (int x = 0; x < cols; ++x) {
            int d = action[c][x];
            if (d < 0 || d >= n()) return false;
            if (action[d][inverse_column(x)] != c) return false;
        }
    for (const Word& r : p.relators)
        for (int c = 0; c < n(); ++c)
            if (trace(c, r) != c) return false;
    return true;
}

std::string CosetTable::to_json() const {
    nlohmann::ordered_json j;
    j["cosets"] = n();
    j["letters"] = letter_names;
    nlohmann::ordered_json act;
    for (int x = 0; x < 2 * num_generators; ++x) {
        nlohmann::ordered_json col = nlohmann::ordered_json::array();
        for (int c = 0; c < n(); ++c) col.push_back(action[c][x] + 1);  // 1-based, coset 1 = identity
        act[letter_names[x]] = col;
    }
    j["action"] = act;
    return j.dump();
}

namespace {

// HLT enumerator state; cosets are 1-based internally, 0 = undefined slot.
class Enumerator {
  public:
    Enumerator(const Presentation& p, int max_cosets)
        : presentation_(p), max_live_(max_cosets), cols_(2 * static_cast<int>(p.alphabet.size())) {
        for (const Word& w : p.relators) {
            if (w.letters.empty()) continue;
            std::vector<int> r;
            for (const Letter& l : w.letters) r.push_back(CosetTable::column(l.gen, l.sign));
            relators_.push_back(std::move(r));
        }
        table_.push_back(std::vector<int>(cols_, 0));  // dummy slot 0
        rep_.push_back(0);
        new_coset();  // coset 1 = identity
    }

    CosetTable run() {
        // coincidences can restructure cosets that were swept earlier, so
        // sweep until a pass defines and merges nothing
        while (true) {
            std::size_t defined = defined_count_, merged = merged_count_;
            sweep();
            if (defined == defined_count_ && merged == merged_count_) break;
        }
        return finalize();
    }

  private:
    void sweep() {
        for (int alpha = 1; alpha < static_cast<int>(table_.size()); ++alpha) {
            if (!alive(alpha)) continue;
            for (const auto& r : relators_) {
                scan_and_fill(alpha, r);
                if (!alive(alpha)) break;
            }
            if (!alive(alpha)) continue;
            for (int x = 0; x < cols_; ++x) {
                if (entry(alpha, x) == 0) define(alpha, x);
                if (!alive(alpha)) break;
            }
        }
    }

    int entry(int a, int x) const { return table_[a][x]; }
    bool alive(int a) const { return rep_[a] == a; }

    int rep(int a) {
        int r = a;
        while (rep_[r] != r) r = rep_[r];
        while (rep_[a] != r) {
            int next = rep_[a];
            rep_[a] = r;
            a = next;
        }
        return r;
    }

    int new_coset() {
        if (live_ >= max_live_) {
            lookahead();
            if (live_ >= max_live_)
                throw BudgetExceeded("coset enumeration budget exhausted (group may be infinite or large)");
        }
        table_.push_back(std::vector<int>(cols_, 0));
        rep_.push_back(static_cast<int>(table_.size()) - 1);
        ++live_;
        ++defined_count_;
        return static_cast<int>(table_.size()) - 1;
    }

    void set_pair(int a, int x, int b) {
        table_[a][x] = b;
        table_[b][CosetTable::inverse_column(x)] = a;
    }

    void define(int a, int x) {
        int b = new_coset();
        a = rep(a);  // a may have died inside a lookahead pass
        if (entry(a, x) == 0)
            set_pair(a, x, b);
        else
            merge_queue(b, entry(a, x));
        process_queue();
    }

    void merge_queue(int a, int b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);  // keep the smaller index alive
        rep_[b] = a;
        --live_;
        ++merged_count_;
        queue_.push_back(b);
    }

    void process_queue() {
        while (!queue_.empty()) {
            int d = queue_.front();
            queue_.pop_front();
            for (int x = 0; x < cols_; ++x) {
                int e = table_[d][x];
                if (e == 0) continue;
                table_[e][CosetTable::inverse_column(x)] = 0;
                table_[d][x] = 0;
                int d1 = rep(d), e1 = rep(e);
                if (table_[d1][x] != 0)
                    merge_queue(e1, table_[d1][x]);
                else if (table_[e1][CosetTable::inverse_column(x)] != 0)
                    merge_queue(d1, table_[e1][CosetTable::inverse_column(x)]);
                else
                    set_pair(d1, x, e1);
            }
        }
    }

    void scan_and_fill(int alpha, const std::vector<int>& r, bool fill = true) {
        int f = alpha, b = alpha;
        std::size_t i = 0, j = r.size();
        while (true) {
            while (i < j && entry(f, r[i]) != 0) f = entry(f, r[i++]);
            if (i == j) {
                if (f != b) {
                    merge_queue(f, b);
                    process_queue();
                }
                return;
            }
            while (j > i && entry(b, CosetTable::inverse_column(r[j - 1])) != 0)
                b = entry(b, CosetTable::inverse_column(r[--j]));
            if (j == i) {
                merge_queue(f, b);
                process_queue();
                return;
            }
            if (j == i + 1) {
                set_pair(f, r[i], b);
                process_queue();
                return;
            }
            if (!fill) return;
            define(f, r[i]);
            f = rep(f);
            b = rep(b);
            if (!alive(alpha)) return;
            // re-scan from scratch: coincidences may have restructured the path
            f = b = alpha = rep(alpha);
            i = 0;
            j = r.size();
        }
    }

    // Scans every relator at every live coset without defining new cosets,
    // harvesting coincidences to free table space.
    void lookahead() {
        for (int a = 1; a < static_cast<int>(table_.size()); ++a) {
            if (!alive(a)) continue;
            for (const auto& r : relators_) {
                scan_and_fill(a, r, /*fill=*/false);
                if (!alive(a)) break;
            }
        }
    }

    CosetTable finalize() {
        // compact live cosets in first-definition order
        std::vector<int> new_id(table_.size(), -1);
        int count = 0;
        for (int a = 1; a < static_cast<int>(table_.size()); ++a)
            if (alive(a)) new_id[a] = count++;

        CosetTable t;
        t.num_generators = static_cast<int>(presentation_.alphabet.size());
        for (const std::string& name : presentation_.alphabet) {
            t.letter_names.push_back(name);
            t.letter_names.push_back(name + "^-1");
        }
        t.action.assign(count, std::vector<int>(cols_, -1));
        for (int a = 1; a < static_cast<int>(table_.size()); ++a) {
            if (!alive(a)) continue;
            for (int x = 0; x < cols_; ++x) {
                int e = table_[a][x];
                if (e == 0) throw Error("enumeration finished with an incomplete table");
                t.action[new_id[a]][x] = new_id[rep(e)];
            }
        }
        if (!t.is_closed(presentation_)) throw Error("enumeration produced a non-closed table");
        return t;
    }

    const Presentation& presentation_;
    int max_live_;
    int cols_;
    std::vector<std::vector<int>> relators_;
    std::vector<std::vector<int>> table_;
    std::vector<int> rep_;
    std::deque<int> queue_;
    int live_ = 0;
    std::size_t defined_count_ = 0;
    std::size_t merged_count_ = 0;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, int max_cosets) {
    if (max_cosets < 1) throw InvalidInput("coset budget must be positive");
    return Enumerator(p, max_cosets).run();
}

LetterClasses letter_classes(const CosetTable& t) {
    const int letters = 2 * t.num_generators;
    LetterClasses lc;
    lc.class_of.assign(letters, -1);

    std::map<std::vector<int>, int> seen;
    for (int x = 0; x < letters; ++x) {
        std::vector<int> perm(t.n());
        bool trivial = true;
        for (int c = 0; c < t.n(); ++c) {
            perm[c] = t.act(c, x);
            trivial = trivial && perm[c] == c;
        }
        if (trivial) continue;
        auto [it, inserted] = seen.try_emplace(std::move(perm), lc.num_classes());
        if (inserted) lc.members.emplace_back();
        lc.class_of[x] = it->second;
        lc.members[it->second].push_back(x);
    }
    lc.inverse_class.assign(lc.num_classes(), -1);
    for (int x = 0; x < letters; ++x)
        if (lc.class_of[x] >= 0)
            lc.inverse_class[lc.class_of[x]] = lc.class_of[CosetTable::inverse_column(x)];
    return lc;
}

LocalGraph cayley_from_cosets(const CosetTable& t, const std::optional<std::vector<Rational>>& class_weights) {
    LetterClasses lc = letter_classes(t);
    if (class_weights) {
        if (static_cast<int>(class_weights->size()) != lc.num_classes())
            throw InvalidInput("class weight vector size mismatch");
        for (int c = 0; c < lc.num_classes(); ++c) {
            if ((*class_weights)[c] <= 0) throw InvalidInput("class weights must be positive");
            if ((*class_weights)[c] != (*class_weights)[lc.inverse_class[c]])
                throw InvalidInput("class weights must agree on inverse generators");
        }
    }

    LocalGraph g;
    g.root = 0;
    g.radius = LocalGraph::kWholeGraph;
    g.letter_names = t.letter_names;
    for (int c = 0; c < t.n(); ++c) g.add_vertex(std::to_string(c + 1));

    for (int c = 0; c < t.n(); ++c) {
        for (int x = 0; x < 2 * t.num_generators; ++x) {
            int cls = lc.class_of[x];
            if (cls < 0) continue;  // collapsed generators are ignored
            int d = t.act(c, x);
            if (!g.adjacent(c, d)) {
                Rational w = class_weights ? (*class_weights)[cls] : Rational(1);
                g.add_edge(c, d, w);
            }
            auto& lab = g.directed_labels(c, d);
            if (std::find(lab.begin(), lab.end(), x) == lab.end()) lab.push_back(x);
        }
    }
    return g;
}

}  // namespace curvachay
