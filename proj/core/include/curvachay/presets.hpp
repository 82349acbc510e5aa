#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace curvachay {

/// Named builtin presentations (trees, triangle trees, hypercubes, free
/// abelian lattices, the order-4 relator example and its quotient).
struct Preset {
    std::string name;
    std::string text;
};

const std::vector<Preset>& builtin_presets();
std::optional<std::string> preset_text(const std::string& name);

/// Quotient pairs (source text, target text) with target relators
/// extending the source relators; used by the monotonicity harness.
const std::vector<std::pair<std::string, std::string>>& builtin_monotonicity_pairs();

}  // namespace curvachay
