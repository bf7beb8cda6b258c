#pragma once

#include "antisym/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace antisym {

/// Permutation of lattice sites; perm[i] is the image of site i. The induced
/// matrix U with U[perm[i]][i] = 1 is orthogonal.
struct SitePermutation {
    std::vector<int> perm;

    static SitePermutation identity(int n);
    int size() const { return static_cast<int>(perm.size()); }

    /// Composition (a * b) applies b first, then a; matches the product of
    /// the induced matrices U_a * U_b.
    friend SitePermutation operator*(const SitePermutation& a, const SitePermutation& b);
    SitePermutation inverse() const;
    int order() const;
    bool is_involution() const;

    RealMatrix matrix() const;

    friend bool operator==(const SitePermutation&, const SitePermutation&) = default;
    friend auto operator<=>(const SitePermutation& a, const SitePermutation& b) {
        return a.perm <=> b.perm;
    }
};

/// Finite permutation group with its multiplication table (indices into
/// elements), conjugacy classes, element orders, irrep dimensions, and a
/// catalog name when the group is recognized.
struct GroupInfo {
    std::vector<SitePermutation> elements;      // sorted lexicographically
    std::vector<std::vector<int>> table;        // table[a][b] = index of a*b
    std::vector<std::vector<int>> classes;      // conjugacy classes of indices
    std::vector<int> element_orders;            // sorted multiset
    std::vector<int> irrep_dims;                // sorted multiset
    std::string name = "unidentified";
    bool closure_completed = false;             // input was not closed

    int order() const { return static_cast<int>(elements.size()); }
    bool is_abelian() const;
};

/// Classification of the permutation symmetries of a Hamiltonian family:
/// commuting (U^-1 H U = H), conjugating (U^-1 H U = H*, the unitary parts
/// of antiunitary symmetries), and the generalized-parity involutions among
/// the conjugating set. group0 is the point group of the Hermitian limit.
struct SymmetryReport {
    std::vector<SitePermutation> commuting;
    std::vector<SitePermutation> conjugating;
    std::vector<SitePermutation> parities;
    GroupInfo group0;
};

inline constexpr int kMaxAutomorphismSites = 24;

/// All permutations preserving the weighted coupling graph (weights compared
/// exactly), sorted lexicographically. Backtracking search; n <= 24.
std::vector<SitePermutation> enumerate_automorphisms(const SiteGraph& g);

/// Splits the graph automorphisms by their action on the gain/loss
/// signature: preserved -> commuting, negated -> conjugating, otherwise
/// discarded. Builds and identifies the Hermitian-limit point group.
SymmetryReport classify_symmetries(const HamiltonianFamily& f);

/// Multiplication table, conjugacy classes, and element orders of the group
/// generated by the given permutations. Completes the closure when the input
/// is not closed; fails if the closure exceeds twice the input size.
GroupInfo build_group(const std::vector<SitePermutation>& perms);

/// The unique multiset of |classes| positive divisors of |G| with
/// sum of squares |G|, by exhaustive search. |G| <= 16.
std::vector<int> irrep_dimensions(const GroupInfo& g);

/// Catalog lookup over groups of order <= 8 by (order, abelian flag,
/// element-order multiset). Falls back to "unidentified".
std::string identify_group(const GroupInfo& g);

/// A site relabeling P with P * H_a(gamma) * P^-1 = H_b(gamma) for all
/// gamma, or nullopt. Lexicographically first match; n <= 10.
std::optional<SitePermutation> find_relabeling(const HamiltonianFamily& a,
                                               const HamiltonianFamily& b);

} // namespace antisym
