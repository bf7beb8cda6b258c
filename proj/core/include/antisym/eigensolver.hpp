#pragma once

#include "antisym/lattice.hpp"

#include <complex>
#include <vector>

namespace antisym {

class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& msg, double worst_residual)
        : std::runtime_error(msg), worst_residual(worst_residual) {}
    double worst_residual;
};

/// Eigenvalues in canonical order: ascending by real part, ties broken by
/// imaginary part. residual_bound is the worst verified ||Mv - lambda*v||_2
/// over all returned eigenpairs.
struct Spectrum {
    std::vector<std::complex<double>> values;
    double residual_bound = 0.0;
};

/// Partition of a spectrum into real eigenvalues, conjugate pairs, and
/// leftovers that match neither criterion within tol.
struct RealityReport {
    int real_count = 0;
    int pair_count = 0;
    std::vector<std::complex<double>> unpaired;
    double tol = 0.0;
};

inline constexpr double kDefaultRealityTol = 1e-9;
inline constexpr int kMaxEigenDim = 64;

/// All eigenvalues of a dense complex matrix, n <= 64. Every returned value
/// is verified against a unit eigenvector to ||Mv - lambda*v||_2 <=
/// 1e-10 * ||M||_F; SolverError carries the worst residual on failure.
Spectrum eigenvalues(const ComplexMatrix& m);

/// Eigendecomposition of a real symmetric matrix: ascending eigenvalues and
/// orthonormal eigenvector columns, verified to ||MV - V*Lambda||_F <=
/// 1e-10 * ||M||_F and ||V^T V - I|| <= 1e-10.
struct SymmetricEigensystem {
    std::vector<double> values;
    RealMatrix vectors;
};
SymmetricEigensystem symmetric_eigensystem(const RealMatrix& m);

/// Counts eigenvalues real within tol*scale (scale = max(1, max |value|)),
/// then greedily matches the rest into conjugate pairs, closest
/// |l_i - conj(l_j)| first.
RealityReport classify_reality(const Spectrum& s, double tol = kDefaultRealityTol);

} // namespace antisym
