#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/simplicial_complex.hpp"
#include "arrtop/smith.hpp"

namespace arrtop {

/// One reduced (co)homology group: free rank plus invariant factors >= 2.
struct HomologyGroup {
    long long free_rank = 0;
    std::vector<Integer> torsion;  // divisibility order, each >= 2

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
};

/**
 * Per-degree reduced integer homology, degrees from -1 upward.  Degrees
 * not stored are zero.  The direct sum of two profiles renormalizes
 * torsion into invariant-factor form, so equality is well defined.
 */
class HomologyProfile {
  public:
    void set(int degree, HomologyGroup g) {
        normalize_torsion(g.torsion);
        if (g.trivial())
            groups_.erase(degree);
        else
            groups_[degree] = std::move(g);
    }

    /// Degreewise direct sum with another group.
    void add(int degree, const HomologyGroup& g) {
        if (g.trivial()) return;
        HomologyGroup& mine = groups_[degree];
        mine.free_rank += g.free_rank;
        mine.torsion.insert(mine.torsion.end(), g.torsion.begin(), g.torsion.end());
        normalize_torsion(mine.torsion);
        if (mine.trivial()) groups_.erase(degree);
    }

    void add_profile(const HomologyProfile& other) {
        for (const auto& [d, g] : other.groups_) add(d, g);
    }

    HomologyGroup at(int degree) const {
        auto it = groups_.find(degree);
        return it == groups_.end() ? HomologyGroup{} : it->second;
    }

    long long free_rank(int degree) const { return at(degree).free_rank; }

    /// Shift every degree upward by `amount`.
    HomologyProfile shifted(int amount) const {
        HomologyProfile out;
        for (const auto& [d, g] : groups_) out.groups_[d + amount] = g;
        return out;
    }

    const std::map<int, HomologyGroup>& groups() const { return groups_; }

    bool operator==(const HomologyProfile& o) const { return groups_ == o.groups_; }
    bool operator!=(const HomologyProfile& o) const { return !(*this == o); }

    std::string to_string() const {
        if (groups_.empty()) return "trivial";
        std::ostringstream os;
        bool first = true;
        for (const auto& [d, g] : groups_) {
            if (!first) os << ", ";
            first = false;
            os << "H~_" << d << " = ";
            bool need_sum = false;
            if (g.free_rank == 1) {
                os << "Z";
                need_sum = true;
            } else if (g.free_rank > 1) {
                os << "Z^" << g.free_rank;
                need_sum = true;
            }
            for (const Integer& t : g.torsion) {
                if (need_sum) os << " + ";
                os << "Z/" << t;
                need_sum = true;
            }
        }
        return os.str();
    }

    /**
     * Renormalize a multiset of cyclic orders into invariant factors
     * (d_1 | d_2 | ... ), via pairwise gcd/lcm exchanges.
     */
    static void normalize_torsion(std::vector<Integer>& t) {
        t.erase(std::remove_if(t.begin(), t.end(), [](const Integer& v) { return v <= 1; }),
                t.end());
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < t.size(); ++i)
                for (std::size_t j = i + 1; j < t.size(); ++j)
                    if (t[j] % t[i] != 0) {
                        Integer g = boost::multiprecision::gcd(t[i], t[j]);
                        Integer l = t[i] / g * t[j];
                        t[i] = g;
                        t[j] = l;
                        changed = true;
                    }
        }
        std::sort(t.begin(), t.end());
        t.erase(std::remove_if(t.begin(), t.end(), [](const Integer& v) { return v == 1; }),
                t.end());
    }

  private:
    std::map<int, HomologyGroup> groups_;
};

/**
 * Boundary matrix of K in degree d over the canonical simplex order:
 * rows are (d-1)-simplices, columns d-simplices, signs alternate over the
 * sorted vertex tuple.  d = 0 gives the augmentation row of ones, which
 * makes every downstream computation reduced.
 */
inline IntMatrix boundary_matrix(const SimplicialComplex& k, int d) {
    if (d == 0) {
        const auto& verts = k.simplices_of_dim(0);
        return IntMatrix(1, std::vector<Integer>(verts.size(), Integer(1)));
    }
    const auto& rows_sims = k.simplices_of_dim(d - 1);
    const auto& col_sims = k.simplices_of_dim(d);
    std::map<Simplex, int> row_index;
    for (std::size_t i = 0; i < rows_sims.size(); ++i) row_index[rows_sims[i]] = static_cast<int>(i);
    IntMatrix m(rows_sims.size(), std::vector<Integer>(col_sims.size(), Integer(0)));
    for (std::size_t j = 0; j < col_sims.size(); ++j) {
        const Simplex& s = col_sims[j];
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face;
            face.reserve(s.size() - 1);
            for (std::size_t t = 0; t < s.size(); ++t)
                if (t != i) face.push_back(s[t]);
            m[row_index.at(face)][j] = (i % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

/**
 * Reduced integer homology of K via Smith normal form, degrees -1..dim(K).
 * The augmentation makes H~_{-1} of the empty complex Z and kills it
 * everywhere else, which downstream formulas rely on.
 */
inline HomologyProfile reduced_homology(const SimplicialComplex& k) {
    HomologyProfile out;
    const int top = k.dim();
    // chain ranks: c[-1] = 1 (augmentation), c[d] = #d-simplices
    auto chain_rank = [&](int d) -> long long {
        if (d == -1) return 1;
        if (d < -1 || d > top) return 0;
        return static_cast<long long>(k.simplices_of_dim(d).size());
    };
    std::vector<SmithResult> snf(top + 2);  // snf[d] = SNF of boundary_matrix(d), d=0..top
    for (int d = 0; d <= top; ++d) snf[d] = smith_normal_form(boundary_matrix(k, d));
    auto rank_of = [&](int d) -> int {  // rank of boundary map C_d -> C_{d-1}
        if (d < 0 || d > top) return 0;
        return snf[d].rank;
    };
    for (int d = -1; d <= top; ++d) {
        HomologyGroup g;
        g.free_rank = chain_rank(d) - rank_of(d) - rank_of(d + 1);
        if (d + 1 <= top)
            for (const Integer& v : snf[d + 1].diagonal)
                if (v > 1) g.torsion.push_back(v);
        out.set(d, std::move(g));
    }
    return out;
}

/**
 * Homology of the join with the minimal d-sphere: every reduced group
 * moves up d+1 degrees; d = -1 is the identity.
 */
inline HomologyProfile shift_join_sphere(const HomologyProfile& p, int d) {
    if (d < -1) throw Error("shift_join_sphere: dimension below -1");
    return p.shifted(d + 1);
}

/**
 * Reduced homology of the one-point compactification of the union,
 * assembled as the wedge over all lattice elements x of
 * Δ(L_{<x}) joined with a dim(B(x))-sphere.
 */
inline HomologyProfile compactified_union_homology(const IntersectionLattice& l) {
    HomologyProfile out;
    for (int x = 0; x < l.poset.size(); ++x) {
        const HomologyProfile local =
            reduced_homology(order_complex(l.poset.lower_set(x, /*strict=*/true)));
        out.add_profile(shift_join_sphere(local, l.flats[x].dimension()));
    }
    return out;
}

/**
 * Reduced integer cohomology of the complement: degreewise sum over
 * lattice elements of the lower-interval homology in complementary
 * degree n - i - dim(B(x)) - 2.
 */
inline HomologyProfile complement_cohomology(const IntersectionLattice& l, int n) {
    if (n != l.ambient_dim)
        throw DimensionMismatch("complement_cohomology: n differs from the arrangement");
    HomologyProfile out;
    for (int x = 0; x < l.poset.size(); ++x) {
        const HomologyProfile local =
            reduced_homology(order_complex(l.poset.lower_set(x, /*strict=*/true)));
        const int dim_bx = l.flats[x].dimension();
        for (const auto& [j, g] : local.groups()) {
            const int i = n - j - dim_bx - 2;
            out.add(i, g);
        }
    }
    return out;
}

enum class DualityVerdict { pass, warn, fail };

/**
 * Alexander duality cross-check: complement cohomology in degree i against
 * compactified-union homology in degree n - i - 1.  Free ranks must match
 * in every degree; a torsion mismatch only downgrades the verdict to warn,
 * since the duality degree shift for torsion is not pinned down here.
 */
inline DualityVerdict alexander_duality_verdict(const HomologyProfile& complement,
                                                const HomologyProfile& compactified, int n) {
    std::vector<int> degrees;
    for (const auto& [i, g] : complement.groups()) degrees.push_back(i);
    for (const auto& [j, g] : compactified.groups()) degrees.push_back(n - j - 1);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    DualityVerdict verdict = DualityVerdict::pass;
    for (int i : degrees) {
        const HomologyGroup a = complement.at(i);
        const HomologyGroup b = compactified.at(n - i - 1);
        if (a.free_rank != b.free_rank) return DualityVerdict::fail;
        if (a.torsion != b.torsion) verdict = DualityVerdict::warn;
    }
    return verdict;
}

/// True unless free ranks fail to match in some degree.
inline bool alexander_duality_check(const IntersectionLattice& l, int n) {
    return alexander_duality_verdict(complement_cohomology(l, n),
                                     compactified_union_homology(l), n) != DualityVerdict::fail;
}

}  // namespace arrtop
