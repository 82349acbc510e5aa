#pragma once

#include <vector>

#include "curvachay/matrix.hpp"
#include "curvachay/rational.hpp"

namespace curvachay {

/// Exact rational linear program: minimize c.x subject to A x <= b with
/// free variables. Solved by two-phase primal simplex with Bland's rule
/// (free variables split into nonnegative pairs internally).
struct LpResult {
    enum class Status { optimal, infeasible, unbounded } status = Status::optimal;
    Rational objective = 0;
    std::vector<Rational> x;
};

LpResult lp_minimize(const RatMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace curvachay
