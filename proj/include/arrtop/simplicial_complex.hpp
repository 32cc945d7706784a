#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arrtop/errors.hpp"
#include "arrtop/poset.hpp"

namespace arrtop {

using Simplex = std::vector<int>;  // sorted, duplicate-free vertex indices

/// Canonical simplex order: by dimension, then lexicographically.
inline bool simplex_less(const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

/**
 * A finite abstract simplicial complex.  Simplices are canonical sorted
 * vertex tuples, stored explicitly (all faces, not facets only) in a fixed
 * order: dimension first, then lexicographic.  Construction enforces
 * downward closure and rejects phantom vertices.
 */
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    /**
     * Build from an explicit simplex list.  Throws NotAComplex when the
     * list is not downward closed or a vertex appears in no simplex.
     */
    static SimplicialComplex from_simplices(std::vector<std::string> vertex_labels,
                                            std::vector<Simplex> simplices) {
        SimplicialComplex k = assemble(std::move(vertex_labels), std::move(simplices));
        k.require_closed();
        return k;
    }

    /// Build as the downward closure of the given generating simplices.
    static SimplicialComplex closure(std::vector<std::string> vertex_labels,
                                     const std::vector<Simplex>& generators) {
        std::set<Simplex> faces;
        for (const Simplex& g : generators) {
            Simplex s = g;
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            add_faces(s, faces);
        }
        return assemble(std::move(vertex_labels),
                        std::vector<Simplex>(faces.begin(), faces.end()));
    }

    int vertex_count() const { return static_cast<int>(vertex_labels_.size()); }
    const std::string& vertex_label(int v) const { return vertex_labels_.at(v); }
    const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
    const std::vector<Simplex>& simplices() const { return simplices_; }
    std::size_t simplex_count() const { return simplices_.size(); }
    bool empty() const { return simplices_.empty(); }

    bool has_simplex(const Simplex& s) const { return simplex_index(s) >= 0; }

    /// Index of s (any vertex order) in the canonical simplex order, or -1.
    int simplex_index(Simplex s) const {
        std::sort(s.begin(), s.end());
        auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s, simplex_less);
        if (it == simplices_.end() || *it != s) return -1;
        return static_cast<int>(it - simplices_.begin());
    }

    /// Dimension of the complex; -1 when empty.
    int dim() const {
        return simplices_.empty() ? -1 : static_cast<int>(simplices_.back().size()) - 1;
    }

    /// Simplex counts per dimension 0..dim().
    std::vector<long long> f_vector() const {
        std::vector<long long> f(dim() + 1, 0);
        for (const Simplex& s : simplices_) ++f[s.size() - 1];
        return f;
    }

    const std::vector<Simplex>& simplices_of_dim(int d) const {
        static const std::vector<Simplex> none;
        if (d < 0 || d >= static_cast<int>(by_dim_.size())) return none;
        return by_dim_[d];
    }

    long long euler_characteristic() const {
        long long chi = 0;
        for (const Simplex& s : simplices_) chi += (s.size() % 2 == 1) ? 1 : -1;
        return chi;
    }

    std::string simplex_label(const Simplex& s) const {
        std::string out = "{";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ',';
            out += vertex_labels_[s[i]];
        }
        return out + "}";
    }

    bool operator==(const SimplicialComplex& other) const {
        return vertex_labels_ == other.vertex_labels_ && simplices_ == other.simplices_;
    }

  private:
    static void add_faces(const Simplex& s, std::set<Simplex>& out) {
        if (s.empty()) return;
        if (!out.insert(s).second) return;
        if (s.size() == 1) return;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face;
            face.reserve(s.size() - 1);
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i) face.push_back(s[j]);
            add_faces(face, out);
        }
    }

    static SimplicialComplex assemble(std::vector<std::string> vertex_labels,
                                      std::vector<Simplex> simplices) {
        SimplicialComplex k;
        k.vertex_labels_ = std::move(vertex_labels);
        for (Simplex& s : simplices) {
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw NotAComplex("simplex with repeated vertex");
            if (s.empty()) throw NotAComplex("empty simplex");
            for (int v : s)
                if (v < 0 || v >= k.vertex_count())
                    throw NotAComplex("simplex references unknown vertex");
        }
        std::sort(simplices.begin(), simplices.end(), simplex_less);
        simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
        k.simplices_ = std::move(simplices);

        std::vector<bool> used(k.vertex_count(), false);
        for (const Simplex& s : k.simplices_)
            for (int v : s) used[v] = true;
        for (int v = 0; v < k.vertex_count(); ++v)
            if (!used[v]) throw NotAComplex("vertex \"" + k.vertex_labels_[v] +
                                            "\" appears in no simplex");

        if (!k.simplices_.empty()) k.by_dim_.resize(k.simplices_.back().size());
        for (const Simplex& s : k.simplices_) k.by_dim_[s.size() - 1].push_back(s);
        return k;
    }

    void require_closed() const {
        for (const Simplex& s : simplices_) {
            if (s.size() == 1) continue;
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i) face.push_back(s[j]);
                if (!has_simplex(face))
                    throw NotAComplex("missing face " + simplex_label(face) + " of " +
                                      simplex_label(s));
            }
        }
    }

    std::vector<std::string> vertex_labels_;
    std::vector<Simplex> simplices_;
    std::vector<std::vector<Simplex>> by_dim_;
};

/// Δ(P): vertices are the elements of P, simplices its nonempty chains.
inline SimplicialComplex order_complex(const FinitePoset& p) {
    std::vector<Simplex> chains = p.all_chains();
    for (Simplex& c : chains) std::sort(c.begin(), c.end());
    return SimplicialComplex::from_simplices(p.labels(), std::move(chains));
}

/**
 * N(P): vertices are the minimal elements of P; a collection of minimal
 * elements spans a simplex iff it has a join in P.  Propagates
 * NotASemilattice from the underlying join queries.
 */
inline SimplicialComplex nerve_complex(const FinitePoset& p) {
    const std::vector<int> mins = p.minimal_elements();
    const int k = static_cast<int>(mins.size());
    std::vector<std::string> labels;
    labels.reserve(k);
    for (int m : mins) labels.push_back(p.label(m));

    std::vector<Simplex> simplices;
    Simplex cur;          // indices into mins
    std::vector<int> el;  // corresponding poset elements
    // Supersets of a joinless set are joinless, so prune on failure.
    auto extend = [&](auto&& self, int start) -> void {
        for (int i = start; i < k; ++i) {
            el.push_back(mins[i]);
            if (p.join(el).has_value()) {
                cur.push_back(i);
                simplices.push_back(cur);
                self(self, i + 1);
                cur.pop_back();
            }
            el.pop_back();
        }
    };
    extend(extend, 0);
    return SimplicialComplex::from_simplices(std::move(labels), std::move(simplices));
}

/// F(K): the nonempty faces of K ordered by inclusion.
inline FinitePoset face_poset(const SimplicialComplex& k) {
    const auto& sims = k.simplices();
    const int m = static_cast<int>(sims.size());
    std::vector<std::string> labels;
    labels.reserve(m);
    for (const Simplex& s : sims) labels.push_back(k.simplex_label(s));
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            leq[a][b] = std::includes(sims[b].begin(), sims[b].end(), sims[a].begin(),
                                      sims[a].end());
    return FinitePoset::from_leq(std::move(labels), std::move(leq));
}

/// Bd(K) = Δ(F(K)); vertices follow K's canonical simplex order.
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
    return order_complex(face_poset(k));
}

/**
 * Join K * L: simplices are all unions of a simplex-or-empty from each
 * side.  Vertex labels are made disjoint by suffixing right-hand labels
 * with primes on collision.
 */
inline SimplicialComplex join_complex(const SimplicialComplex& k, const SimplicialComplex& l) {
    std::vector<std::string> labels = k.vertex_labels();
    std::set<std::string> seen(labels.begin(), labels.end());
    const int off = k.vertex_count();
    for (const std::string& rl : l.vertex_labels()) {
        std::string cand = rl;
        while (!seen.insert(cand).second) cand += '\'';
        labels.push_back(cand);
    }
    std::vector<Simplex> out;
    out.reserve((k.simplex_count() + 1) * (l.simplex_count() + 1) - 1);
    for (const Simplex& s : k.simplices()) out.push_back(s);
    for (const Simplex& t : l.simplices()) {
        Simplex shifted;
        shifted.reserve(t.size());
        for (int v : t) shifted.push_back(v + off);
        out.push_back(shifted);
        for (const Simplex& s : k.simplices()) {
            Simplex u = s;
            u.insert(u.end(), shifted.begin(), shifted.end());
            out.push_back(std::move(u));
        }
    }
    return SimplicialComplex::from_simplices(std::move(labels), std::move(out));
}

/**
 * The minimal simplicial d-sphere: boundary of the (d+1)-simplex.
 * d = -1 yields the empty complex.
 */
inline SimplicialComplex sphere_complex(int d) {
    if (d < -1) throw Error("sphere_complex: dimension below -1");
    if (d == -1) return SimplicialComplex();
    const int n = d + 2;  // vertices of the (d+1)-simplex
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
    std::vector<Simplex> facets;
    for (int skip = 0; skip < n; ++skip) {
        Simplex f;
        for (int v = 0; v < n; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::closure(std::move(labels), facets);
}

}  // namespace arrtop
