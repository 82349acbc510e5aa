#include "curvachay/presets.hpp"

#include <sstream>

namespace curvachay {

namespace {

std::string tree_text(int d) {
    std::ostringstream os;
    os << "raach { ";
    for (int i = 0; i < d; ++i) os << (i ? ", " : "") << static_cast<char>('a' + i) << ":2";
    os << "; }";
    return os.str();
}

std::string triangle_tree_text(int d0) {
    std::ostringstream os;
    os << "raach { ";
    for (int i = 0; i < d0; ++i) os << (i ? ", " : "") << static_cast<char>('a' + i) << ":3";
    os << "; }";
    return os.str();
}

std::string complete_text(int d, const std::string& order) {
    std::ostringstream os;
    os << "raach { ";
    for (int i = 0; i < d; ++i) os << (i ? ", " : "") << static_cast<char>('a' + i) << ":" << order;
    if (d > 1) {
        os << "; commute ";
        bool first = true;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                os << (first ? "" : ", ") << "(" << static_cast<char>('a' + i) << ","
                   << static_cast<char>('a' + j) << ")";
                first = false;
            }
    }
    os << "; }";
    return os.str();
}

std::vector<Preset> make_presets() {
    std::vector<Preset> out;
    for (int d = 2; d <= 8; ++d) out.push_back({"tree_d" + std::to_string(d), tree_text(d)});
    for (int d0 = 2; d0 <= 4; ++d0)
        out.push_back({"triangle_tree_" + std::to_string(d0), triangle_tree_text(d0)});
    for (int d = 2; d <= 4; ++d)
        out.push_back({"hypercube_" + std::to_string(d), complete_text(d, "2")});
    for (int n = 1; n <= 3; ++n) out.push_back({"lattice_z" + std::to_string(n), complete_text(n, "inf")});
    out.push_back({"k4_relator", "group <a,b | a^4, b^-1 a^2>"});
    out.push_back({"k4_relator_quotient", "group <a,b | a^4, b^-1 a^2, a^2>"});
    return out;
}

}  // namespace

const std::vector<Preset>& builtin_presets() {
    static const std::vector<Preset> presets = make_presets();
    return presets;
}

std::optional<std::string> preset_text(const std::string& name) {
    for (const Preset& p : builtin_presets())
        if (p.name == name) return p.text;
    return std::nullopt;
}

const std::vector<std::pair<std::string, std::string>>& builtin_monotonicity_pairs() {
    static const std::vector<std::pair<std::string, std::string>> pairs = {
        {"group <a,b | a^4, b^-1 a^2>", "group <a,b | a^4, b^-1 a^2, a^2>"},
        {"group <a | a^6>", "group <a | a^6, a^3>"},
        {"group <a | a^6>", "group <a | a^6, a^2>"},
        {"group <a | a^4>", "group <a | a^4, a^2>"},
        {"group <a,b | a^2, b^2, a b a b a b a b a b a b>",
         "group <a,b | a^2, b^2, a b a b a b a b a b a b, a b a b a b>"},
        {"group <a,b | a^2, b^2, a b a b a b a b>", "group <a,b | a^2, b^2, a b a b a b a b, a b a b>"},
        {"group <a,b | a^2, b^2, a b a b>", "group <a,b | a^2, b^2, a b a b, b>"},
        {"group <a | a^8>", "group <a | a^8, a^4>"},
        {"group <a | a^8>", "group <a | a^8, a^2>"},
        {"group <a,b | a^3, b^3, a^-1 b^-1 a b>", "group <a,b | a^3, b^3, a^-1 b^-1 a b, b^-1 a>"},
        {"group <a,b | a^2, b^2, a b a b a b>", "group <a,b | a^2, b^2, a b a b a b, a b>"},
        {"group <a | a^5>", "group <a | a^5>"},
    };
    return pairs;
}

}  // namespace curvachay
