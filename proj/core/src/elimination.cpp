#include "curvachay/elimination.hpp"

#include "curvachay/errors.hpp"

namespace curvachay {

namespace {

// Transformed defining graph shared by both eliminations; they differ only
// in whether the fresh pair commutes.
Elimination replace_by_involution_pair(const DefiningGraph& h, int s0, bool pair_commutes) {
    Elimination e;
    e.old_generator = s0;

    DefiningGraph out;
    std::vector<int> remap(h.size(), -1);
    for (int i = 0; i < h.size(); ++i) {
        if (i == s0) continue;
        remap[i] = out.size();
        out.vertices.push_back(h.vertices[i]);
        out.orders.push_back(h.orders[i]);
    }
    auto fresh = [&out](std::string base) {
        while (out.index_of(base) >= 0) base += "'";
        return base;
    };
    e.new_primed = out.size();
    out.vertices.push_back(fresh(h.vertices[s0] + "'"));
    out.orders.push_back(GeneratorOrder::finite(2));
    e.new_doubled = out.size();
    out.vertices.push_back(fresh(h.vertices[s0] + "''"));
    out.orders.push_back(GeneratorOrder::finite(2));

    for (const auto& [a, b] : h.edges) {
        if (a != s0 && b != s0) {
            out.add_edge(remap[a], remap[b]);
        } else {
            int other = remap[a == s0 ? b : a];
            out.add_edge(other, e.new_primed);
            out.add_edge(other, e.new_doubled);
        }
    }
    if (pair_commutes) out.add_edge(e.new_primed, e.new_doubled);

    e.transformed = std::move(out);
    // remap is reconstructible: every generator except s0 keeps its name
    return e;
}

int mapped_index(const Elimination& e, const DefiningGraph& src, int gen) {
    return e.transformed.index_of(src.vertices[gen]);
}

}  // namespace

Word Elimination::forward(const Word& w) const {
    Word out;
    if (order_four) {
        // powers of s0 become strings of the positive letter (s0^-1 -> s0^3)
        std::vector<Letter> expanded;
        for (const Letter& l : w.letters) {
            if (l.gen != old_generator) {
                expanded.push_back(l);
            } else if (l.sign > 0) {
                expanded.push_back(l);
            } else {
                for (int k = 0; k < 3; ++k) expanded.push_back({l.gen, 1});
            }
        }
        bool primed_next = true;
        for (const Letter& l : expanded) {
            if (l.gen != old_generator) {
                int g = mapped_index(*this, source_, l.gen);
                out.letters.push_back({g, l.sign});
            } else {
                out.letters.push_back({primed_next ? new_primed : new_doubled, 1});
                primed_next = !primed_next;
            }
        }
    } else {
        // first occurrence: s0 -> s0', s0^-1 -> s0''; afterwards equal signs
        // alternate the letter, opposite signs repeat it
        int prev_sign = 0;
        int prev_out = 0;
        for (const Letter& l : w.letters) {
            if (l.gen != old_generator) {
                int g = mapped_index(*this, source_, l.gen);
                out.letters.push_back({g, l.sign});
                continue;
            }
            int next;
            if (prev_sign == 0)
                next = l.sign > 0 ? new_primed : new_doubled;
            else if (l.sign == prev_sign)
                next = prev_out == new_primed ? new_doubled : new_primed;
            else
                next = prev_out;
            out.letters.push_back({next, 1});
            prev_sign = l.sign;
            prev_out = next;
        }
    }
    return out;
}

Word Elimination::backward(const Word& w) const {
    // drop even powers of s0' and s0'', reduce odd powers to a single letter
    std::vector<Letter> compact;
    std::size_t i = 0;
    while (i < w.letters.size()) {
        const Letter& l = w.letters[i];
        if (l.gen != new_primed && l.gen != new_doubled) {
            compact.push_back(l);
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < w.letters.size() && w.letters[j].gen == l.gen) ++j;
        if ((j - i) % 2 == 1) compact.push_back({l.gen, 1});
        i = j;
    }
    // replacements parse left to right: the first occurrence fixes the sign
    // (s0' -> s0, s0'' -> s0^-1); later occurrences repeat the previous
    // output when the source letter changed and flip it when it repeated
    Word out;
    int prev_src = -1;
    int prev_sign = 0;
    for (const Letter& l : compact) {
        if (l.gen != new_primed && l.gen != new_doubled) {
            int g = source_.index_of(transformed.vertices[l.gen]);
            out.letters.push_back({g, l.sign});
            continue;
        }
        int sign;
        if (prev_src < 0)
            sign = l.gen == new_primed ? 1 : -1;
        else if (l.gen == prev_src)
            sign = -prev_sign;
        else
            sign = prev_sign;
        out.letters.push_back({old_generator, sign});
        prev_src = l.gen;
        prev_sign = sign;
    }
    return out;
}

Elimination eliminate_r4(const DefiningGraph& h, int s0) {
    if (s0 < 0 || s0 >= h.size() || h.orders[s0] != GeneratorOrder::finite(4))
        throw InvalidInput("eliminate_r4 requires a generator of order 4");
    Elimination e = replace_by_involution_pair(h, s0, /*pair_commutes=*/true);
    e.order_four = true;
    e.source_ = h;
    return e;
}

Elimination eliminate_rinf(const DefiningGraph& h, int s0) {
    if (s0 < 0 || s0 >= h.size() || !h.orders[s0].is_infinite())
        throw InvalidInput("eliminate_rinf requires a generator of infinite order");
    Elimination e = replace_by_involution_pair(h, s0, /*pair_commutes=*/false);
    e.order_four = false;
    e.source_ = h;
    return e;
}

}  // namespace curvachay
