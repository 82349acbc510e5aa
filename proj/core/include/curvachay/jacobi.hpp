#pragma once

#include <vector>

namespace curvachay {

struct EigenDecomposition {
    std::vector<double> values;                // ascending
    std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
};

/// Cyclic Jacobi rotations on a symmetric matrix. Sweeps run until the
/// Frobenius norm of the strict upper triangle drops below `tol`.
EigenDecomposition jacobi_eigen(std::vector<std::vector<double>> a, double tol = 1e-12, int max_sweeps = 128);

double min_eigenvalue(const std::vector<std::vector<double>>& a);

}  // namespace curvachay
