#pragma once

#include "antisym/eigensolver.hpp"
#include "antisym/lattice.hpp"

#include <complex>
#include <vector>

namespace antisym {

/// First-order degenerate perturbation theory on H(gamma) = H(0) + gamma*W,
/// W = i*diag(s). corrections holds the n first-order coefficients lambda^(1)
/// in E ~ E^(0) + gamma*lambda^(1), grouped by cluster in cluster order.
struct PerturbationReport {
    struct Cluster {
        double eigenvalue;
        int multiplicity;
    };
    std::vector<Cluster> clusters;
    std::vector<std::complex<double>> corrections;
    bool extremely_broken = false;
};

inline constexpr double kDefaultClusterTol = 1e-8;
inline constexpr double kBreakingThreshold = 1e-8;

/// Maximal runs of consecutive ascending eigenvalues with gap <= tol*scale,
/// scale = max(1, max |eig|).
std::vector<PerturbationReport::Cluster>
degenerate_clusters(const std::vector<double>& eigs, double tol = kDefaultClusterTol);

/// Diagonalizes each degenerate cluster's projection of W = i*diag(s) onto
/// the H(0) eigenspace; predicts extremely broken antiunitary symmetry when
/// any first-order coefficient has |Im| above the breaking threshold.
PerturbationReport first_order_corrections(const HamiltonianFamily& f,
                                           double cluster_tol = kDefaultClusterTol);

} // namespace antisym
