#include "antisym/lattice.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace antisym {

SiteGraph::SiteGraph(int n, std::vector<Edge> edges, std::vector<double> signature)
    : n_(n), edges_(std::move(edges)), signature_(std::move(signature)) {
    if (n_ <= 0)
        throw LatticeError("site count must be positive, got " + std::to_string(n_));
    if (static_cast<int>(signature_.size()) != n_)
        throw LatticeError("signature length " + std::to_string(signature_.size()) +
                           " does not match site count " + std::to_string(n_));
    for (double s : signature_)
        if (!std::isfinite(s))
            throw LatticeError("signature entries must be finite");

    for (auto& e : edges_) {
        if (e.i > e.j)
            std::swap(e.i, e.j);
        if (e.i < 0 || e.j >= n_)
            throw LatticeError("edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                               ") out of range for n=" + std::to_string(n_));
        if (e.i == e.j)
            throw LatticeError("self-loop (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                               ") is not allowed");
        if (!std::isfinite(e.w) || e.w == 0.0)
            throw LatticeError("coupling on edge (" + std::to_string(e.i) + "," +
                               std::to_string(e.j) + ") must be finite and nonzero");
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    for (size_t k = 1; k < edges_.size(); ++k)
        if (edges_[k - 1].i == edges_[k].i && edges_[k - 1].j == edges_[k].j)
            throw LatticeError("duplicate edge (" + std::to_string(edges_[k].i) + "," +
                               std::to_string(edges_[k].j) + ")");
}

RealMatrix SiteGraph::coupling_matrix() const {
    RealMatrix a = RealMatrix::Zero(n_, n_);
    for (const auto& e : edges_) {
        a(e.i, e.j) = e.w;
        a(e.j, e.i) = e.w;
    }
    return a;
}

ComplexMatrix HamiltonianFamily::hamiltonian_at(double gamma) const {
    if (!std::isfinite(gamma))
        throw LatticeError("gamma must be finite");
    const int n = graph_.size();
    ComplexMatrix h = graph_.coupling_matrix().cast<std::complex<double>>();
    for (int j = 0; j < n; ++j)
        h(j, j) = std::complex<double>(0.0, gamma * graph_.signature()[j]);
    return h;
}

HamiltonianFamily build_ring(int n) {
    if (n < 4 || n % 2 != 0)
        throw LatticeError("ring size must be even and >= 4 (alternating signature "
                           "requires an even cycle), got " + std::to_string(n));
    std::vector<Edge> edges;
    std::vector<double> sig(n);
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n, 1.0});
        sig[i] = (i % 2 == 0) ? 1.0 : -1.0;
    }
    return HamiltonianFamily(SiteGraph(n, std::move(edges), std::move(sig)));
}

HamiltonianFamily build_chain(int n) {
    if (n < 2)
        throw LatticeError("chain needs at least 2 sites, got " + std::to_string(n));
    std::vector<Edge> edges;
    std::vector<double> sig(n);
    for (int i = 0; i < n; ++i) {
        if (i + 1 < n)
            edges.push_back({i, i + 1, 1.0});
        sig[i] = (i % 2 == 0) ? 1.0 : -1.0;
    }
    return HamiltonianFamily(SiteGraph(n, std::move(edges), std::move(sig)));
}

HamiltonianFamily build_ho2() {
    std::vector<Edge> edges = {{0, 2, 1.0}, {1, 2, 1.0}, {1, 3, 1.0}};
    std::vector<double> sig = {1.0, 1.0, -1.0, -1.0};
    return HamiltonianFamily(SiteGraph(4, std::move(edges), std::move(sig)));
}

SiteGraph load_graph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw LatticeError(std::string("lattice parse error: ") + e.what());
    }
    if (!j.is_object())
        throw LatticeError("lattice file must be a JSON object");
    for (const char* field : {"n", "edges", "signature"})
        if (!j.contains(field))
            throw LatticeError(std::string("lattice file missing field '") + field + "'");
    if (!j["n"].is_number_integer())
        throw LatticeError("field 'n' must be an integer");
    int n = j["n"].get<int>();
    if (!j["edges"].is_array())
        throw LatticeError("field 'edges' must be an array of [i, j, w] triples");
    std::vector<Edge> edges;
    int idx = 0;
    for (const auto& item : j["edges"]) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
            !item[1].is_number_integer() || !item[2].is_number())
            throw LatticeError("edges[" + std::to_string(idx) + "] must be [i, j, w] with "
                               "integer indices and a real coupling");
        edges.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<double>()});
        ++idx;
    }
    if (!j["signature"].is_array())
        throw LatticeError("field 'signature' must be an array of reals");
    std::vector<double> sig;
    idx = 0;
    for (const auto& item : j["signature"]) {
        if (!item.is_number())
            throw LatticeError("signature[" + std::to_string(idx) + "] must be a real number");
        sig.push_back(item.get<double>());
        ++idx;
    }
    return SiteGraph(n, std::move(edges), std::move(sig));
}

std::string save_graph(const SiteGraph& g) {
    nlohmann::json j;
    j["n"] = g.size();
    auto edges = nlohmann::json::array();
    for (const auto& e : g.edges())
        edges.push_back({e.i, e.j, e.w});
    j["edges"] = edges;
    j["signature"] = g.signature();
    return j.dump(2) + "\n";
}

} // namespace antisym
