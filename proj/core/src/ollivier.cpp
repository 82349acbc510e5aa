#include "curvachay/ollivier.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

#include "curvachay/errors.hpp"
#include "curvachay/lp.hpp"
#include "curvachay/matrix.hpp"

namespace curvachay {

EdgeCurvature kappa_lly_laplacian(const LocalGraph& g, int x, int y, const LaplacianKind& kind) {
    if (!g.adjacent(x, y)) throw InvalidInput("edge curvature expects an edge");
    DistanceTable table = local_distances(g, x, y);
    const std::vector<int>& support = table.support;

    // variables: f(u) for u in support \ {x, y}; f(x) = 0, f(y) = 1 fixed
    std::vector<int> vars;
    std::vector<int> var_of(g.n(), -1);
    for (int u : support) {
        if (u == x || u == y) continue;
        var_of[u] = static_cast<int>(vars.size());
        vars.push_back(u);
    }
    const int n = static_cast<int>(vars.size());
    auto fixed_value = [&](int u) -> std::optional<Rational> {
        if (u == x) return Rational(0);
        if (u == y) return Rational(1);
        return std::nullopt;
    };

    // objective: Delta f(x) - Delta f(y)
    std::vector<Rational> c(n, Rational(0));
    Rational constant = 0;
    auto add_delta = [&](int at, int sign) {
        Rational m = vertex_measure(g, kind, at);
        Rational f_at_coeff = 0;
        for (int u : g.neighbors(at)) {
            Rational w = edge_weight(g, kind, at, u) / m;
            if (auto fv = fixed_value(u))
                constant += sign * w * (*fv);
            else
                c[var_of[u]] += sign * w;
            f_at_coeff -= w;
        }
        if (auto fv = fixed_value(at))
            constant += sign * f_at_coeff * (*fv);
        else
            c[var_of[at]] += sign * f_at_coeff;
    };
    add_delta(x, +1);
    add_delta(y, -1);

    // constraints: f(u) - f(v) <= d(u,v) for all ordered support pairs
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (std::size_t a = 0; a < support.size(); ++a)
        for (std::size_t b = 0; b < support.size(); ++b) {
            if (a == b) continue;
            int u = support[a], v = support[b];
            Rational bound = table.dist(u, v);
            std::vector<Rational> row(n, Rational(0));
            if (auto fu = fixed_value(u))
                bound -= *fu;
            else
                row[var_of[u]] += 1;
            if (auto fv = fixed_value(v))
                bound += *fv;
            else
                row[var_of[v]] -= 1;
            bool empty = std::all_of(row.begin(), row.end(), [](const Rational& r) { return r == 0; });
            if (empty) {
                if (bound < 0) throw Error("inconsistent distance constraints");
                continue;
            }
            rows.push_back(std::move(row));
            rhs.push_back(std::move(bound));
        }

    EdgeCurvature out;
    out.support = support;
    if (n == 0) {
        out.value = constant;
        out.witness = {Rational(0), Rational(1)};
        return out;
    }
    RatMatrix a(static_cast<int>(rows.size()), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < n; ++j) a.at(static_cast<int>(i), j) = rows[i][j];
    LpResult lp = lp_minimize(a, rhs, c);
    if (lp.status != LpResult::Status::optimal)
        throw Error("edge curvature program failed to solve");
    out.value = lp.objective + constant;
    out.witness.reserve(support.size());
    for (int u : support) {
        if (auto fv = fixed_value(u))
            out.witness.push_back(*fv);
        else
            out.witness.push_back(lp.x[var_of[u]]);
    }
    return out;
}

std::string edge_curvature_to_json(const EdgeCurvature& k) {
    nlohmann::ordered_json j;
    j["value_rational"] = to_fraction_string(k.value);
    j["value_float"] = to_double(k.value);
    nlohmann::ordered_json w;
    nlohmann::ordered_json f = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < k.support.size(); ++i)
        f.push_back({k.support[i], to_fraction_string(k.witness[i])});
    w["f"] = f;
    j["witness"] = w;
    return j.dump();
}

}  // namespace curvachay
