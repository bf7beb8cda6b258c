#pragma once

#include "antisym/eigensolver.hpp"
#include "antisym/lattice.hpp"

#include <string>
#include <vector>

namespace antisym {

enum class Phase { Unbroken, Broken };

/// Spectra on a uniform gamma grid with per-point phase labels.
/// phases[k] == Unbroken exactly when real_counts[k] == n.
struct SweepResult {
    std::vector<double> gammas;
    std::vector<Spectrum> spectra;
    std::vector<Phase> phases;
    std::vector<int> real_counts;
};

/// A located real-count transition. gamma is the bisection bracket midpoint;
/// min_gap is the smallest pairwise eigenvalue distance there.
struct ExceptionalPoint {
    double gamma;
    double bracket_width;
    double min_gap;
};

inline constexpr double kEpBracketWidth = 1e-10;

/// Solves H(gamma) on an inclusive uniform grid of `steps` points. Grid
/// points are independent; ANTISYM_THREADS caps the worker count.
SweepResult sweep(const HamiltonianFamily& f, double lo, double hi, int steps,
                  double reality_tol = kDefaultRealityTol);

/// Scans the real-eigenvalue count on a grid and bisects every adjacent pair
/// with differing counts down to bracket width 1e-10. Results ascending,
/// deduplicated within 1e-9.
std::vector<ExceptionalPoint> find_exceptional_points(const HamiltonianFamily& f,
                                                      double lo, double hi, int grid,
                                                      double reality_tol = kDefaultRealityTol);

/// Figure-reproduction tables: fig2 sweeps ring4 and fig4 sweeps chain4 over
/// gamma in [0, 2] with 201 points. Each row is
/// (gamma, Re l_1..l_n, Im l_1..l_n) in canonical eigenvalue order.
std::vector<std::vector<double>> figure_data(const std::string& fig);

/// The same table for an arbitrary family and grid.
std::vector<std::vector<double>> sweep_table(const HamiltonianFamily& f, double lo,
                                             double hi, int steps);

/// CSV rendering with header gamma,re_1..re_n,im_1..im_n and 9 significant
/// digits per value.
std::string render_csv(const std::vector<std::vector<double>>& rows);

} // namespace antisym
