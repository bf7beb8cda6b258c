#include "antisym/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace antisym {

SitePermutation SitePermutation::identity(int n) {
    SitePermutation p;
    p.perm.resize(n);
    std::iota(p.perm.begin(), p.perm.end(), 0);
    return p;
}

SitePermutation operator*(const SitePermutation& a, const SitePermutation& b) {
    SitePermutation c;
    c.perm.resize(a.perm.size());
    for (size_t i = 0; i < a.perm.size(); ++i)
        c.perm[i] = a.perm[b.perm[i]];
    return c;
}

SitePermutation SitePermutation::inverse() const {
    SitePermutation inv;
    inv.perm.resize(perm.size());
    for (size_t i = 0; i < perm.size(); ++i)
        inv.perm[perm[i]] = static_cast<int>(i);
    return inv;
}

int SitePermutation::order() const {
    const auto id = identity(size());
    SitePermutation p = *this;
    int k = 1;
    while (!(p == id)) {
        p = p * (*this);
        ++k;
    }
    return k;
}

bool SitePermutation::is_involution() const {
    return (*this) * (*this) == identity(size());
}

RealMatrix SitePermutation::matrix() const {
    const int n = size();
    RealMatrix u = RealMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        u(perm[i], i) = 1.0;
    return u;
}

bool GroupInfo::is_abelian() const {
    const int g = order();
    for (int a = 0; a < g; ++a)
        for (int b = a + 1; b < g; ++b)
            if (table[a][b] != table[b][a])
                return false;
    return true;
}

namespace {

void automorphism_backtrack(const RealMatrix& w, std::vector<int>& image,
                            std::vector<bool>& used, int depth,
                            std::vector<SitePermutation>& out) {
    const int n = static_cast<int>(w.rows());
    if (depth == n) {
        out.push_back({image});
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (used[v])
            continue;
        bool ok = true;
        for (int l = 0; l < depth && ok; ++l)
            ok = w(v, image[l]) == w(depth, l);
        if (!ok)
            continue;
        image[depth] = v;
        used[v] = true;
        automorphism_backtrack(w, image, used, depth + 1, out);
        used[v] = false;
    }
}

} // namespace

std::vector<SitePermutation> enumerate_automorphisms(const SiteGraph& g) {
    const int n = g.size();
    if (n > kMaxAutomorphismSites)
        throw std::invalid_argument("automorphism search limited to n <= " +
                                    std::to_string(kMaxAutomorphismSites));
    const RealMatrix w = g.coupling_matrix();
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    std::vector<SitePermutation> out;
    // image values tried in ascending order, so output is lexicographic.
    automorphism_backtrack(w, image, used, 0, out);
    return out;
}

SymmetryReport classify_symmetries(const HamiltonianFamily& f) {
    const SiteGraph& g = f.graph();
    const int n = g.size();
    const auto& s = g.signature();

    SymmetryReport rep;
    for (const auto& p : enumerate_automorphisms(g)) {
        bool preserves = true, negates = true;
        for (int j = 0; j < n; ++j) {
            if (s[p.perm[j]] != s[j])
                preserves = false;
            if (s[p.perm[j]] != -s[j])
                negates = false;
        }
        // signature == 0 satisfies both; H = H* then, list under both sets.
        if (preserves)
            rep.commuting.push_back(p);
        if (negates)
            rep.conjugating.push_back(p);
    }

    // Defining identities re-checked at an arbitrary nonzero probe.
    const ComplexMatrix h = f.hamiltonian_at(0.7);
    for (const auto& p : rep.commuting) {
        const RealMatrix u = p.matrix();
        if ((u.transpose() * h * u - h).norm() > 1e-12)
            throw std::logic_error("commuting classification failed verification");
    }
    for (const auto& p : rep.conjugating) {
        const RealMatrix u = p.matrix();
        if ((u.transpose() * h * u - h.conjugate()).norm() > 1e-12)
            throw std::logic_error("conjugating classification failed verification");
    }

    for (const auto& p : rep.conjugating)
        if (p.is_involution())
            rep.parities.push_back(p);

    std::vector<SitePermutation> gens = rep.commuting;
    gens.insert(gens.end(), rep.conjugating.begin(), rep.conjugating.end());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    rep.group0 = build_group(gens);
    rep.group0.irrep_dims = irrep_dimensions(rep.group0);
    rep.group0.name = identify_group(rep.group0);
    return rep;
}

GroupInfo build_group(const std::vector<SitePermutation>& perms) {
    if (perms.empty())
        throw std::invalid_argument("build_group needs at least one permutation");
    const size_t cap = 2 * perms.size();

    std::set<SitePermutation> elems(perms.begin(), perms.end());
    elems.insert(SitePermutation::identity(perms.front().size()));
    const size_t given = elems.size();

    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<SitePermutation> snapshot(elems.begin(), elems.end());
        for (const auto& a : snapshot) {
            for (const auto& b : snapshot) {
                if (elems.insert(a * b).second) {
                    grew = true;
                    if (elems.size() > cap)
                        throw std::runtime_error(
                            "closure exceeded twice the input size; input is not "
                            "close to a group");
                }
            }
        }
    }

    GroupInfo g;
    g.elements.assign(elems.begin(), elems.end());
    g.closure_completed = elems.size() != given || given != perms.size();

    const int order = g.order();
    auto index_of = [&](const SitePermutation& p) {
        return static_cast<int>(std::lower_bound(g.elements.begin(), g.elements.end(), p) -
                                g.elements.begin());
    };

    g.table.assign(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            g.table[a][b] = index_of(g.elements[a] * g.elements[b]);

    std::vector<bool> assigned(order, false);
    for (int x = 0; x < order; ++x) {
        if (assigned[x])
            continue;
        std::set<int> cls;
        for (int h = 0; h < order; ++h)
            cls.insert(index_of(g.elements[h].inverse() * g.elements[x] * g.elements[h]));
        for (int c : cls)
            assigned[c] = true;
        g.classes.emplace_back(cls.begin(), cls.end());
    }

    for (const auto& e : g.elements)
        g.element_orders.push_back(e.order());
    std::sort(g.element_orders.begin(), g.element_orders.end());
    return g;
}

namespace {

void irrep_search(int remaining, int remaining_sq, int min_dim, int group_order,
                  std::vector<int>& current, std::vector<std::vector<int>>& solutions) {
    if (remaining == 0) {
        if (remaining_sq == 0)
            solutions.push_back(current);
        return;
    }
    for (int d = min_dim; d * d <= remaining_sq; ++d) {
        if (group_order % d != 0)
            continue;
        current.push_back(d);
        irrep_search(remaining - 1, remaining_sq - d * d, d, group_order, current, solutions);
        current.pop_back();
    }
}

} // namespace

std::vector<int> irrep_dimensions(const GroupInfo& g) {
    if (g.order() > 16)
        throw std::invalid_argument("irrep dimension search limited to |G| <= 16");
    const int k = static_cast<int>(g.classes.size());
    std::vector<int> current;
    std::vector<std::vector<int>> solutions;
    irrep_search(k, g.order(), 1, g.order(), current, solutions);
    if (solutions.empty())
        throw std::runtime_error("no irrep dimension multiset fits |G| and class count");
    if (solutions.size() > 1) {
        std::string msg = "irrep dimensions ambiguous:";
        for (const auto& sol : solutions) {
            msg += " {";
            for (size_t i = 0; i < sol.size(); ++i)
                msg += (i ? "," : "") + std::to_string(sol[i]);
            msg += "}";
        }
        throw std::runtime_error(msg);
    }
    return solutions.front();
}

std::string identify_group(const GroupInfo& g) {
    const int n = g.order();
    if (n > 8)
        return "unidentified";
    const bool abelian = g.is_abelian();
    const auto& ords = g.element_orders;
    const int max_order = ords.empty() ? 1 : ords.back();

    switch (n) {
    case 1: return "C1";
    case 2: return "C2";
    case 3: return "C3";
    case 4:
        if (!abelian) return "unidentified";
        return max_order == 4 ? "C4" : "C2 x C2";
    case 5: return "C5";
    case 6:
        return abelian ? "C6" : "S3 (≅ D3)";
    case 7: return "C7";
    case 8:
        if (abelian) {
            if (max_order == 8) return "C8";
            if (max_order == 4) return "C4 x C2";
            return "C2 x C2 x C2";
        }
        if (ords == std::vector<int>{1, 2, 2, 2, 2, 2, 4, 4})
            return "D4 (≅ C4v)";
        if (ords == std::vector<int>{1, 2, 4, 4, 4, 4, 4, 4})
            return "Q8";
        return "unidentified";
    default:
        return "unidentified";
    }
}

namespace {

// H_b[P(i)][P(j)] == H_a[i][j] for all gamma, via exact coupling and
// signature matching during the backtrack.
bool relabel_backtrack(const RealMatrix& wa, const RealMatrix& wb,
                       const std::vector<double>& sa, const std::vector<double>& sb,
                       std::vector<int>& image, std::vector<bool>& used, int depth) {
    const int n = static_cast<int>(wa.rows());
    if (depth == n)
        return true;
    for (int v = 0; v < n; ++v) {
        if (used[v] || sb[v] != sa[depth])
            continue;
        bool ok = true;
        for (int l = 0; l < depth && ok; ++l)
            ok = wb(v, image[l]) == wa(depth, l);
        if (!ok)
            continue;
        image[depth] = v;
        used[v] = true;
        if (relabel_backtrack(wa, wb, sa, sb, image, used, depth + 1))
            return true;
        used[v] = false;
    }
    return false;
}

} // namespace

std::optional<SitePermutation> find_relabeling(const HamiltonianFamily& a,
                                               const HamiltonianFamily& b) {
    const int n = a.size();
    if (n != b.size())
        throw std::invalid_argument("families must have equal site counts");
    if (n > 10)
        throw std::invalid_argument("relabeling search limited to n <= 10");
    if (a.graph().edges().size() != b.graph().edges().size())
        return std::nullopt;

    const RealMatrix wa = a.graph().coupling_matrix();
    const RealMatrix wb = b.graph().coupling_matrix();
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    if (!relabel_backtrack(wa, wb, a.graph().signature(), b.graph().signature(),
                           image, used, 0))
        return std::nullopt;

    SitePermutation p{image};
    const RealMatrix u = p.matrix();
    for (double gamma : {0.0, 1.0}) {
        const ComplexMatrix ha = a.hamiltonian_at(gamma);
        const ComplexMatrix hb = b.hamiltonian_at(gamma);
        if ((u * ha * u.transpose() - hb).norm() > 1e-12)
            throw std::logic_error("relabeling candidate failed matrix verification");
    }
    return p;
}

} // namespace antisym
