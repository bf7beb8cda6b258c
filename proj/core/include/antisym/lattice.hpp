#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace antisym {

using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// Validation failure while building or parsing a lattice.
class LatticeError : public std::runtime_error {
public:
    explicit LatticeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Edge {
    int i;
    int j;
    double w;
};

/// A signed lattice: n sites, real symmetric couplings on edges, and a
/// per-site gain/loss weight s_j multiplying the imaginary on-site term.
/// Edges are kept in canonical (i < j, lexicographic) order.
class SiteGraph {
public:
    SiteGraph(int n, std::vector<Edge> edges, std::vector<double> signature);

    int size() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<double>& signature() const { return signature_; }

    /// Dense coupling matrix: w on edges, 0 elsewhere. Real symmetric.
    RealMatrix coupling_matrix() const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<double> signature_;
};

/// The one-parameter family H(gamma) = A + i*gamma*diag(s) over a SiteGraph.
/// Immutable after construction; H(gamma) is complex symmetric (H = H^T)
/// and H(0) is the real symmetric Hermitian limit.
class HamiltonianFamily {
public:
    explicit HamiltonianFamily(SiteGraph graph) : graph_(std::move(graph)) {}

    const SiteGraph& graph() const { return graph_; }
    int size() const { return graph_.size(); }

    ComplexMatrix hamiltonian_at(double gamma) const;

private:
    SiteGraph graph_;
};

/// Cycle 0-1-...-(n-1)-0 with unit couplings and alternating +1/-1 signature.
/// Requires even n >= 4.
HamiltonianFamily build_ring(int n);

/// Path 0-1-...-(n-1) with unit couplings and alternating signature starting
/// at +1. Requires n >= 2.
HamiltonianFamily build_chain(int n);

/// The relabelled open chain: edges {0-2, 1-2, 1-3}, signature (+1,+1,-1,-1).
HamiltonianFamily build_ho2();

/// Parses the textual lattice format (JSON object with fields n, edges,
/// signature). Throws LatticeError with a location on malformed input.
SiteGraph load_graph(const std::string& text);

/// Serializes a SiteGraph to the same format; load_graph round-trips
/// byte-identically after canonical edge sorting.
std::string save_graph(const SiteGraph& g);

} // namespace antisym
