#include "antisym/eigensolver.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace antisym {

namespace {

// Canonical order: ascending real part, ties by imaginary part. Real parts
// separated only by rounding noise count as ties, so conjugate pairs always
// come out (a - bi, a + bi) regardless of which one the QR sweep found first.
void canonical_sort(std::vector<std::complex<double>>& values) {
    std::sort(values.begin(), values.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  if (a.real() != b.real())
                      return a.real() < b.real();
                  return a.imag() < b.imag();
              });
    double scale = 1.0;
    for (const auto& v : values)
        scale = std::max(scale, std::abs(v));
    const double tie = 1e-12 * scale;
    size_t lo = 0;
    while (lo < values.size()) {
        size_t hi = lo + 1;
        while (hi < values.size() && values[hi].real() - values[hi - 1].real() <= tie)
            ++hi;
        std::sort(values.begin() + lo, values.begin() + hi,
                  [](const std::complex<double>& a, const std::complex<double>& b) {
                      if (a.imag() != b.imag())
                          return a.imag() < b.imag();
                      return a.real() < b.real();
                  });
        lo = hi;
    }
}

} // namespace

Spectrum eigenvalues(const ComplexMatrix& m) {
    using LongComplex = std::complex<long double>;
    using LongMatrix = Eigen::Matrix<LongComplex, Eigen::Dynamic, Eigen::Dynamic>;

    const int n = static_cast<int>(m.rows());
    if (n != m.cols())
        throw SolverError("matrix must be square", 0.0);
    if (n > kMaxEigenDim)
        throw SolverError("dimension " + std::to_string(n) + " exceeds limit " +
                          std::to_string(kMaxEigenDim), 0.0);
    if (!m.allFinite())
        throw SolverError("matrix has non-finite entries", 0.0);

    const double norm = m.norm();

    // Extended precision keeps defective eigenvalues (exceptional points,
    // sqrt(eps)-conditioned) accurate well past double's 1e-8 floor.
    LongMatrix mx(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mx(i, j) = LongComplex(m(i, j).real(), m(i, j).imag());

    Eigen::ComplexEigenSolver<LongMatrix> solver(mx, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success)
        throw SolverError("eigenvalue iteration failed to converge",
                          std::numeric_limits<double>::infinity());

    Spectrum s;
    s.values.resize(n);
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        const LongComplex lambda = solver.eigenvalues()(k);
        Eigen::Vector<LongComplex, Eigen::Dynamic> v = solver.eigenvectors().col(k);
        v.normalize();
        const double res = static_cast<double>((mx * v - lambda * v).norm());
        worst = std::max(worst, res);
        s.values[k] = std::complex<double>(static_cast<double>(lambda.real()),
                                           static_cast<double>(lambda.imag()));
    }
    if (worst > 1e-10 * std::max(norm, std::numeric_limits<double>::min()))
        throw SolverError("eigenpair residual " + std::to_string(worst) +
                          " exceeds 1e-10 * ||M||_F", worst);
    s.residual_bound = worst;
    canonical_sort(s.values);
    return s;
}

SymmetricEigensystem symmetric_eigensystem(const RealMatrix& m) {
    const int n = static_cast<int>(m.rows());
    if (n != m.cols())
        throw SolverError("matrix must be square", 0.0);
    const double norm = m.norm();
    const double sym_tol = 1e-12 * std::max(1.0, norm);
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > sym_tol)
        throw SolverError("matrix is not symmetric to 1e-12", 0.0);

    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw SolverError("symmetric eigenvalue iteration failed to converge",
                          std::numeric_limits<double>::infinity());

    const RealMatrix v = solver.eigenvectors();
    const Eigen::VectorXd lam = solver.eigenvalues();
    const double res = (m * v - v * lam.asDiagonal()).norm();
    if (res > 1e-10 * std::max(norm, std::numeric_limits<double>::min()))
        throw SolverError("symmetric residual exceeds 1e-10 * ||M||_F", res);
    const double orth = (v.transpose() * v - RealMatrix::Identity(n, n)).norm();
    if (orth > 1e-10)
        throw SolverError("eigenvector columns are not orthonormal to 1e-10", orth);

    SymmetricEigensystem out;
    out.values.assign(lam.data(), lam.data() + n);
    out.vectors = v;
    return out;
}

RealityReport classify_reality(const Spectrum& s, double tol) {
    if (tol <= 0.0)
        throw std::invalid_argument("reality tolerance must be positive");
    RealityReport rep;
    rep.tol = tol;

    double scale = 1.0;
    for (const auto& v : s.values)
        scale = std::max(scale, std::abs(v));
    const double eps = tol * scale;

    std::vector<std::complex<double>> rest;
    for (const auto& v : s.values) {
        if (std::abs(v.imag()) <= eps)
            ++rep.real_count;
        else
            rest.push_back(v);
    }

    // Greedy conjugate pairing, closest |l_i - conj(l_j)| first.
    std::vector<bool> used(rest.size(), false);
    while (true) {
        double best = std::numeric_limits<double>::infinity();
        size_t bi = 0, bj = 0;
        for (size_t i = 0; i < rest.size(); ++i) {
            if (used[i]) continue;
            for (size_t j = i + 1; j < rest.size(); ++j) {
                if (used[j]) continue;
                const double d = std::abs(rest[i] - std::conj(rest[j]));
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (best > eps)
            break;
        used[bi] = used[bj] = true;
        ++rep.pair_count;
    }
    for (size_t i = 0; i < rest.size(); ++i)
        if (!used[i])
            rep.unpaired.push_back(rest[i]);
    return rep;
}

} // namespace antisym
