#include "antisym/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

namespace antisym {

namespace {

int worker_count(int jobs) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0)
        n = 1;
    if (const char* env = std::getenv("ANTISYM_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1)
            n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return static_cast<int>(std::min<unsigned>(n, static_cast<unsigned>(jobs)));
}

Spectrum solve_at(const HamiltonianFamily& f, double gamma) {
    try {
        return eigenvalues(f.hamiltonian_at(gamma));
    } catch (const SolverError& e) {
        throw SolverError("solver failed at gamma=" + std::to_string(gamma) + ": " + e.what(),
                          e.worst_residual);
    }
}

int real_count(const HamiltonianFamily& f, double gamma, double tol) {
    const Spectrum s = solve_at(f, gamma);
    return classify_reality(s, tol).real_count;
}

double min_pairwise_gap(const Spectrum& s) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < s.values.size(); ++i)
        for (size_t j = i + 1; j < s.values.size(); ++j)
            best = std::min(best, std::abs(s.values[i] - s.values[j]));
    return best;
}

} // namespace

SweepResult sweep(const HamiltonianFamily& f, double lo, double hi, int steps,
                  double reality_tol) {
    if (!(lo < hi))
        throw std::invalid_argument("sweep range requires lo < hi");
    if (steps < 2)
        throw std::invalid_argument("sweep needs at least 2 steps");

    SweepResult r;
    r.gammas.resize(steps);
    r.spectra.resize(steps);
    for (int k = 0; k < steps; ++k)
        r.gammas[k] = lo + (hi - lo) * k / (steps - 1);

    const int workers = worker_count(steps);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    auto run = [&] {
        try {
            for (int k = next.fetch_add(1); k < steps; k = next.fetch_add(1))
                r.spectra[k] = solve_at(f, r.gammas[k]);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
        }
    };
    if (workers <= 1) {
        run();
    } else {
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(run);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    const int n = f.size();
    for (int k = 0; k < steps; ++k) {
        const int rc = classify_reality(r.spectra[k], reality_tol).real_count;
        r.real_counts.push_back(rc);
        r.phases.push_back(rc == n ? Phase::Unbroken : Phase::Broken);
    }
    return r;
}

std::vector<ExceptionalPoint> find_exceptional_points(const HamiltonianFamily& f,
                                                      double lo, double hi, int grid,
                                                      double reality_tol) {
    if (!(lo < hi))
        throw std::invalid_argument("scan range requires lo < hi");
    if (grid < 16)
        throw std::invalid_argument("EP scan needs at least 16 grid points");

    std::vector<double> gammas(grid);
    std::vector<int> counts(grid);
    for (int k = 0; k < grid; ++k) {
        gammas[k] = lo + (hi - lo) * k / (grid - 1);
        counts[k] = real_count(f, gammas[k], reality_tol);
    }

    std::vector<ExceptionalPoint> found;
    for (int k = 0; k + 1 < grid; ++k) {
        if (counts[k] == counts[k + 1])
            continue;
        double a = gammas[k], b = gammas[k + 1];
        int ca = counts[k];
        while (b - a > kEpBracketWidth) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b)
                break; // floating-point limit of the bracket
            if (real_count(f, mid, reality_tol) == ca)
                a = mid;
            else
                b = mid;
        }
        const double ep = 0.5 * (a + b);
        found.push_back({ep, b - a, min_pairwise_gap(solve_at(f, ep))});
    }

    std::sort(found.begin(), found.end(),
              [](const ExceptionalPoint& x, const ExceptionalPoint& y) {
                  return x.gamma < y.gamma;
              });
    std::vector<ExceptionalPoint> out;
    for (const auto& ep : found)
        if (out.empty() || ep.gamma - out.back().gamma > 1e-9)
            out.push_back(ep);
    return out;
}

std::vector<std::vector<double>> sweep_table(const HamiltonianFamily& f, double lo,
                                             double hi, int steps) {
    const SweepResult r = sweep(f, lo, hi, steps);
    const int n = f.size();
    std::vector<std::vector<double>> rows;
    rows.reserve(steps);
    for (int k = 0; k < steps; ++k) {
        std::vector<double> row;
        row.reserve(1 + 2 * n);
        row.push_back(r.gammas[k]);
        for (const auto& v : r.spectra[k].values)
            row.push_back(v.real());
        for (const auto& v : r.spectra[k].values)
            row.push_back(v.imag());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<double>> figure_data(const std::string& fig) {
    if (fig == "fig2")
        return sweep_table(build_ring(4), 0.0, 2.0, 201);
    if (fig == "fig4")
        return sweep_table(build_chain(4), 0.0, 2.0, 201);
    throw std::invalid_argument("unknown figure id '" + fig + "' (expected fig2 or fig4)");
}

std::string render_csv(const std::vector<std::vector<double>>& rows) {
    if (rows.empty())
        return "";
    const int n = static_cast<int>((rows.front().size() - 1) / 2);
    std::string out = "gamma";
    for (int k = 1; k <= n; ++k)
        out += ",re_" + std::to_string(k);
    for (int k = 1; k <= n; ++k)
        out += ",im_" + std::to_string(k);
    out += "\n";
    char buf[64];
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            double v = row[i];
            if (v == 0.0)
                v = 0.0; // collapse -0
            std::snprintf(buf, sizeof buf, "%.9g", v);
            if (i)
                out += ',';
            out += buf;
        }
        out += '\n';
    }
    return out;
}

} // namespace antisym
