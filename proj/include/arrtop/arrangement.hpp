#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrtop/affine_subspace.hpp"
#include "arrtop/errors.hpp"
#include "arrtop/poset.hpp"
#include "arrtop/simplicial_complex.hpp"

namespace arrtop {

/// Subset of input subspaces, as sorted 0-based indices.
using AtomSet = std::vector<int>;

inline std::string atom_set_label(const AtomSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += "a" + std::to_string(s[i] + 1);
    }
    return out + "}";
}

/// A validated collection A = {A_1, ..., A_k} in Q^n.
struct Arrangement {
    int ambient_dim = 0;
    std::vector<AffineSubspace> subspaces;

    /**
     * Checks the arrangement axioms: at least one subspace, all in the
     * same ambient space, and no containments among the A_i (duplicates
     * included).
     */
    static Arrangement validate(std::vector<AffineSubspace> subspaces, int n) {
        if (n < 1) throw ValidationError("ambient dimension must be at least 1");
        if (subspaces.empty())
            throw ValidationError("arrangement must contain at least one subspace");
        for (std::size_t i = 0; i < subspaces.size(); ++i)
            if (subspaces[i].ambient_dim() != n)
                throw DimensionMismatch("subspace A" + std::to_string(i + 1) +
                                        " does not live in Q^" + std::to_string(n));
        for (std::size_t i = 0; i < subspaces.size(); ++i) {
            for (std::size_t j = i + 1; j < subspaces.size(); ++j) {
                const bool ij = subspaces[i].contains(subspaces[j]);
                const bool ji = subspaces[j].contains(subspaces[i]);
                if (ij && ji)
                    throw ContainmentViolation("subspaces A" + std::to_string(i + 1) +
                                               " and A" + std::to_string(j + 1) +
                                               " are equal");
                if (ij)
                    throw ContainmentViolation("subspace A" + std::to_string(j + 1) +
                                               " is contained in A" + std::to_string(i + 1));
                if (ji)
                    throw ContainmentViolation("subspace A" + std::to_string(i + 1) +
                                               " is contained in A" + std::to_string(j + 1));
            }
        }
        Arrangement a;
        a.ambient_dim = n;
        a.subspaces = std::move(subspaces);
        return a;
    }
};

/**
 * L(A): all nonempty intersections of input subspaces, ordered by reverse
 * inclusion.  Element x carries the flat flats[x]; the input subspaces sit
 * at poset elements atoms[0..k-1] (which are exactly the minimal elements,
 * in input order, labeled a1..ak; derived flats are labeled f1, f2, ...).
 */
struct IntersectionLattice {
    FinitePoset poset;
    std::vector<AffineSubspace> flats;  // B: poset element -> flat
    std::vector<int> atoms;             // input index -> poset element
    int ambient_dim = 0;
};

inline IntersectionLattice intersection_semilattice(const Arrangement& a) {
    std::vector<AffineSubspace> flats = a.subspaces;
    std::map<std::string, int> by_key;
    for (std::size_t i = 0; i < flats.size(); ++i) by_key.emplace(flats[i].key(), i);

    // Worklist closure under pairwise nonempty intersection; the loop bound
    // grows as new flats are appended, so every pair is eventually tried.
    for (std::size_t i = 0; i < flats.size(); ++i) {
        for (std::size_t j = i + 1; j < flats.size(); ++j) {
            std::optional<AffineSubspace> cut = AffineSubspace::intersect(flats[i], flats[j]);
            if (!cut) continue;
            auto [it, fresh] = by_key.emplace(cut->key(), static_cast<int>(flats.size()));
            if (fresh) flats.push_back(std::move(*cut));
        }
    }

    const int k = static_cast<int>(a.subspaces.size());
    const int total = static_cast<int>(flats.size());
    std::vector<int> order(total);
    for (int i = 0; i < total; ++i) order[i] = i;
    // Atoms keep input order; derived flats sort by descending dimension,
    // then canonical form, for stable labels.
    std::sort(order.begin() + k, order.end(), [&](int x, int y) {
        if (flats[x].dimension() != flats[y].dimension())
            return flats[x].dimension() > flats[y].dimension();
        return flats[x].key() < flats[y].key();
    });

    IntersectionLattice l;
    l.ambient_dim = a.ambient_dim;
    l.flats.reserve(total);
    std::vector<std::string> labels;
    labels.reserve(total);
    for (int i = 0; i < total; ++i) {
        l.flats.push_back(flats[order[i]]);
        labels.push_back(i < k ? "a" + std::to_string(i + 1)
                               : "f" + std::to_string(i - k + 1));
    }
    std::vector<std::vector<bool>> leq(total, std::vector<bool>(total, false));
    for (int x = 0; x < total; ++x)
        for (int y = 0; y < total; ++y) leq[x][y] = l.flats[x].contains(l.flats[y]);
    l.poset = FinitePoset::from_leq(std::move(labels), std::move(leq));
    if (!l.poset.is_semilattice())
        throw NotASemilattice("intersection closure violated the semilattice property");
    l.atoms.resize(k);
    for (int i = 0; i < k; ++i) l.atoms[i] = i;
    return l;
}

/// Δ(L(A)), the ZZ model's indexing complex.
inline SimplicialComplex zz_skeleton(const IntersectionLattice& l) {
    return order_complex(l.poset);
}

/// Bd(N(L(A))), the combinatorial carrier of the Vassiliev model.
inline SimplicialComplex vassiliev_skeleton(const IntersectionLattice& l) {
    return barycentric_subdivision(nerve_complex(l.poset));
}

/// Poset elements of the atoms in S; rejects out-of-range indices.
inline std::vector<int> atom_elements(const IntersectionLattice& l, const AtomSet& s) {
    std::vector<int> el;
    el.reserve(s.size());
    for (int i : s) {
        if (i < 0 || i >= static_cast<int>(l.atoms.size()))
            throw UnknownElement("atom index " + std::to_string(i + 1) + " out of range");
        el.push_back(l.atoms[i]);
    }
    return el;
}

inline std::optional<int> join_of_atoms(const IntersectionLattice& l, const AtomSet& s) {
    return l.poset.join(atom_elements(l, s));
}

/// B(join S) = the intersection of the A_i named by S.
inline AffineSubspace subspace_of_vertex_set(const IntersectionLattice& l, const AtomSet& s) {
    if (s.empty()) throw ValidationError("subspace_of_vertex_set: empty atom set");
    std::optional<int> x = join_of_atoms(l, s);
    if (!x) throw NoJoin("atoms " + atom_set_label(s) + " have empty intersection");
    return l.flats[*x];
}

/// Direct fold of the exact intersections, bypassing the lattice.
inline std::optional<AffineSubspace> exact_intersection_of_atoms(const IntersectionLattice& l,
                                                                 const AtomSet& s) {
    if (s.empty()) throw ValidationError("exact_intersection_of_atoms: empty atom set");
    const std::vector<int> el = atom_elements(l, s);
    std::optional<AffineSubspace> acc = l.flats[el[0]];
    for (std::size_t i = 1; i < el.size() && acc; ++i)
        acc = AffineSubspace::intersect(*acc, l.flats[el[i]]);
    return acc;
}

/**
 * Number of simplices Bd(N(L)) would have, without building it: chains in
 * the face poset of N(L) are enumerated directly, and the count saturates
 * at cap + 1 once it passes cap.  Used as the size guard before the
 * expensive constructions.
 */
inline long long count_vassiliev_simplices(const IntersectionLattice& l, long long cap) {
    if (cap < 0) cap = 0;
    const int k = static_cast<int>(l.atoms.size());
    const int p = l.poset.size();
    std::vector<int> join_table(static_cast<std::size_t>(p) * p, -1);
    for (int x = 0; x < p; ++x)
        for (int y = x; y < p; ++y) {
            std::optional<int> j = l.poset.join(std::vector<int>{x, y});
            join_table[static_cast<std::size_t>(x) * p + y] = j ? *j : -1;
            join_table[static_cast<std::size_t>(y) * p + x] = j ? *j : -1;
        }
    long long count = 0;
    bool over = false;
    std::vector<char> used(k, 0);
    // Each recursion node is one chain of nerve faces: `used` marks the
    // chain's top set, `cur` its join (-1 when the chain is still empty).
    // Adding an atom completes a chain; recursing with start 0 opens the
    // next, strictly larger, chain element, while start a+1 keeps growing
    // the current one.  Every chain is reached exactly once.
    auto grow = [&](auto&& self, int start, int cur) -> void {
        for (int a = start; a < k; ++a) {
            if (over) return;
            if (used[a]) continue;
            const int ea = l.atoms[a];
            const int nj =
                cur < 0 ? ea : join_table[static_cast<std::size_t>(cur) * p + ea];
            if (nj < 0) continue;
            if (++count > cap) {
                over = true;
                return;
            }
            used[a] = 1;
            self(self, 0, nj);
            self(self, a + 1, nj);
            used[a] = 0;
        }
    };
    grow(grow, 0, -1);
    return over ? cap + 1 : count;
}

}  // namespace arrtop
