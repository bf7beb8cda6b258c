// Test-only oracles, independent of the library's eigensolver path:
// characteristic-polynomial root finding, cofactor determinants, closed-form
// spectra of the built-in 4-site models, and n!-brute-force automorphisms.
#pragma once

#include "antisym/lattice.hpp"
#include "antisym/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

namespace oracles {

using antisym::ComplexMatrix;
using cplx = std::complex<double>;

// det by recursive cofactor expansion, n <= 8.
inline cplx det_cofactor(const ComplexMatrix& m) {
    const int n = static_cast<int>(m.rows());
    if (n == 1)
        return m(0, 0);
    cplx det = 0.0;
    double sign = 1.0;
    for (int k = 0; k < n; ++k) {
        ComplexMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r)
            for (int c = 0, cc = 0; c < n; ++c)
                if (c != k)
                    minor(r - 1, cc++) = m(r, c);
        det += sign * m(0, k) * det_cofactor(minor);
        sign = -sign;
    }
    return det;
}

// Characteristic polynomial coefficients by Faddeev-LeVerrier:
// p(x) = x^n + c[1] x^(n-1) + ... + c[n].
inline std::vector<cplx> char_poly(const ComplexMatrix& m) {
    const int n = static_cast<int>(m.rows());
    std::vector<cplx> c(n + 1);
    c[0] = 1.0;
    ComplexMatrix mk = ComplexMatrix::Identity(n, n);
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        c[k] = -mk.trace() / static_cast<double>(k);
        mk += c[k] * ComplexMatrix::Identity(n, n);
    }
    return c;
}

// Durand-Kerner simultaneous root iteration on a monic polynomial.
inline std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    auto eval = [&](cplx x) {
        cplx v = coeffs[0];
        for (int k = 1; k <= n; ++k)
            v = v * x + coeffs[k];
        return v;
    };
    double radius = 1.0;
    for (int k = 1; k <= n; ++k)
        radius = std::max(radius, std::pow(std::abs(coeffs[k]), 1.0 / k));
    std::vector<cplx> roots(n);
    const cplx seed(0.4, 0.9);
    cplx p = 1.0;
    for (int k = 0; k < n; ++k) {
        p *= seed;
        roots[k] = radius * p;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0.0;
        for (int k = 0; k < n; ++k) {
            cplx denom = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != k)
                    denom *= roots[k] - roots[j];
            const cplx delta = eval(roots[k]) / denom;
            roots[k] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-13 * std::max(1.0, radius))
            break;
    }
    return roots;
}

// Eigenvalues via det(xI - M) roots; fully independent of the library path.
inline std::vector<cplx> eigenvalues_by_roots(const ComplexMatrix& m) {
    auto roots = poly_roots(char_poly(m));
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
        if (a.real() != b.real())
            return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

// Closed-form ring4 spectrum {+-sqrt(4-g^2), +-i*g}, continued for g > 2.
inline std::vector<cplx> ring4_closed_form(double g) {
    const double d = 4.0 - g * g;
    std::vector<cplx> v;
    if (d >= 0) {
        v = {cplx(-std::sqrt(d), 0), cplx(std::sqrt(d), 0)};
    } else {
        v = {cplx(0, -std::sqrt(-d)), cplx(0, std::sqrt(-d))};
    }
    v.emplace_back(0, -g);
    v.emplace_back(0, g);
    return v;
}

// Closed-form chain4 spectrum: +-sqrt((3 +- sqrt5 - 2 g^2)/2).
inline std::vector<cplx> chain4_closed_form(double g) {
    std::vector<cplx> v;
    for (double sgn : {1.0, -1.0}) {
        const double d = (3.0 + sgn * std::sqrt(5.0) - 2.0 * g * g) / 2.0;
        if (d >= 0) {
            v.emplace_back(-std::sqrt(d), 0);
            v.emplace_back(std::sqrt(d), 0);
        } else {
            v.emplace_back(0, -std::sqrt(-d));
            v.emplace_back(0, std::sqrt(-d));
        }
    }
    return v;
}

// Largest distance under optimal (greedy-suffices-at-desk-scale: exhaustive
// for n <= 8, greedy otherwise) matching of two multisets.
inline double multiset_distance(std::vector<cplx> a, std::vector<cplx> b) {
    if (a.size() != b.size())
        return std::numeric_limits<double>::infinity();
    const int n = static_cast<int>(a.size());
    if (n <= 8) {
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        double best = std::numeric_limits<double>::infinity();
        do {
            double worst = 0.0;
            for (int k = 0; k < n; ++k)
                worst = std::max(worst, std::abs(a[k] - b[idx[k]]));
            best = std::min(best, worst);
        } while (std::next_permutation(idx.begin(), idx.end()));
        return best;
    }
    double worst = 0.0;
    std::vector<bool> used(n, false);
    for (int k = 0; k < n; ++k) {
        double d = std::numeric_limits<double>::infinity();
        int pick = -1;
        for (int j = 0; j < n; ++j)
            if (!used[j] && std::abs(a[k] - b[j]) < d) {
                d = std::abs(a[k] - b[j]);
                pick = j;
            }
        used[pick] = true;
        worst = std::max(worst, d);
    }
    return worst;
}

// Brute force over all n! permutations; the independent check for the
// backtracking enumerator.
inline std::vector<antisym::SitePermutation> brute_automorphisms(const antisym::SiteGraph& g) {
    const int n = g.size();
    const antisym::RealMatrix w = g.coupling_matrix();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<antisym::SitePermutation> out;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                ok = w(perm[i], perm[j]) == w(i, j);
        if (ok)
            out.push_back({perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Random connected-ish graph with small-integer couplings and +-1 signature.
inline antisym::SiteGraph random_graph(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> weight(1, 3);
    std::vector<antisym::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                edges.push_back({i, j, static_cast<double>(weight(rng))});
    if (edges.empty())
        edges.push_back({0, 1, 1.0});
    std::vector<double> sig(n);
    for (int i = 0; i < n; ++i)
        sig[i] = coin(rng) ? 1.0 : -1.0;
    return antisym::SiteGraph(n, std::move(edges), std::move(sig));
}

// Random lattice with a conjugating symmetry by construction: two mirrored
// halves with opposite signatures, swapped by sigma(i) = i + m mod 2m.
inline antisym::SiteGraph random_mirrored_graph(std::mt19937& rng, int half) {
    const int n = 2 * half;
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> weight(1, 3);
    std::vector<antisym::Edge> edges;
    auto add_pair = [&](int i, int j, double w) {
        int a = std::min(i, j), b = std::max(i, j);
        int am = (a + half) % n, bm = (b + half) % n;
        if (am > bm)
            std::swap(am, bm);
        edges.push_back({a, b, w});
        if (std::make_pair(am, bm) != std::make_pair(a, b))
            edges.push_back({am, bm, w});
    };
    for (int i = 0; i < half; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) && coin(rng)) {
                // skip if the mirror image was already added
                bool dup = false;
                int am = (i + half) % n, bm = (j + half) % n;
                if (am > bm)
                    std::swap(am, bm);
                for (const auto& e : edges)
                    if ((e.i == i && e.j == j) || (e.i == am && e.j == bm))
                        dup = true;
                if (!dup)
                    add_pair(i, j, static_cast<double>(weight(rng)));
            }
    if (edges.empty()) {
        edges.push_back({0, 1 % n, 1.0});
        int am = half, bm = (1 + half) % n;
        if (am > bm)
            std::swap(am, bm);
        if (!(am == 0 && bm == 1))
            edges.push_back({am, bm, 1.0});
    }
    std::vector<double> sig(n);
    for (int i = 0; i < half; ++i) {
        sig[i] = coin(rng) ? 1.0 : -1.0;
        sig[i + half] = -sig[i];
    }
    return antisym::SiteGraph(n, std::move(edges), std::move(sig));
}

} // namespace oracles
