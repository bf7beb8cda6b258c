#include "antisym/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace antisym {

std::vector<PerturbationReport::Cluster>
degenerate_clusters(const std::vector<double>& eigs, double tol) {
    if (tol <= 0.0)
        throw std::invalid_argument("cluster tolerance must be positive");
    for (size_t k = 1; k < eigs.size(); ++k)
        if (eigs[k] < eigs[k - 1])
            throw std::invalid_argument("eigenvalues must be ascending");

    double scale = 1.0;
    for (double e : eigs)
        scale = std::max(scale, std::abs(e));
    const double gap = tol * scale;

    std::vector<PerturbationReport::Cluster> out;
    size_t k = 0;
    while (k < eigs.size()) {
        size_t end = k + 1;
        while (end < eigs.size() && eigs[end] - eigs[end - 1] <= gap)
            ++end;
        out.push_back({eigs[k], static_cast<int>(end - k)});
        k = end;
    }
    return out;
}

PerturbationReport first_order_corrections(const HamiltonianFamily& f, double cluster_tol) {
    const int n = f.size();
    if (n > kMaxEigenDim)
        throw std::invalid_argument("perturbation analysis limited to n <= " +
                                    std::to_string(kMaxEigenDim));

    const auto hermitian = symmetric_eigensystem(f.hamiltonian_at(0.0).real());
    const auto& s = f.graph().signature();

    PerturbationReport rep;
    rep.clusters = degenerate_clusters(hermitian.values, cluster_tol);

    Eigen::VectorXd sig(n);
    for (int j = 0; j < n; ++j)
        sig(j) = s[j];

    int col = 0;
    for (const auto& cluster : rep.clusters) {
        const int m = cluster.multiplicity;
        const RealMatrix basis = hermitian.vectors.middleCols(col, m);
        // W = i*diag(s) projects to i * (V^T diag(s) V); the real factor is
        // symmetric, so the coefficients are exactly i times its spectrum.
        const RealMatrix projected = basis.transpose() * sig.asDiagonal() * basis;
        const auto sub = symmetric_eigensystem(projected);
        for (double mu : sub.values)
            rep.corrections.emplace_back(0.0, mu);
        col += m;
    }

    for (const auto& c : rep.corrections)
        if (std::abs(c.imag()) > kBreakingThreshold)
            rep.extremely_broken = true;
    return rep;
}

} // namespace antisym
