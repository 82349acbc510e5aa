#include "curvachay/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace curvachay {

namespace {

double off_norm(const std::vector<std::vector<double>>& a) {
    const int n = static_cast<int>(a.size());
    double s = 0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) s += a[p][q] * a[p][q];
    return std::sqrt(s);
}

}  // namespace

EigenDecomposition jacobi_eigen(std::vector<std::vector<double>> a, double tol, int max_sweeps) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) v[i][i] = 1.0;

    for (int sweep = 0; sweep < max_sweeps && off_norm(a) >= tol; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);

                double apq = a[p][q], app = a[p][p], aqq = a[q][q];
                a[p][q] = a[q][p] = 0.0;
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        double arp = a[r][p], arq = a[r][q];
                        a[r][p] = a[p][r] = arp - s * (arq + tau * arp);
                        a[r][q] = a[q][r] = arq + s * (arp - tau * arq);
                    }
                    double vrp = v[r][p], vrq = v[r][q];
                    v[r][p] = vrp - s * (vrq + tau * vrp);
                    v[r][q] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a[i][i] < a[j][j]; });

    EigenDecomposition out;
    out.values.reserve(n);
    out.vectors.reserve(n);
    for (int k : order) {
        out.values.push_back(a[k][k]);
        std::vector<double> col(n);
        for (int r = 0; r < n; ++r) col[r] = v[r][k];
        out.vectors.push_back(std::move(col));
    }
    return out;
}

double min_eigenvalue(const std::vector<std::vector<double>>& a) {
    return jacobi_eigen(a).values.front();
}

}  // namespace curvachay
