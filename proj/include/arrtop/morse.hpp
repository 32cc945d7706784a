#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/errors.hpp"
#include "arrtop/simplicial_complex.hpp"

namespace arrtop {

/// A simplex of Bd(N(L)): a chain S_1 < ... < S_t of nerve faces.
struct ChainSimplex {
    std::vector<AtomSet> sets;

    std::string label() const {
        std::string out = "(";
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (i) out += '<';
            out += atom_set_label(sets[i]);
        }
        return out + ")";
    }
};

/// Validated constructor: strict inclusions and a join for every entry.
inline ChainSimplex make_chain(const IntersectionLattice& l, std::vector<AtomSet> sets) {
    if (sets.empty()) throw ValidationError("chain simplex must be nonempty");
    for (AtomSet& s : sets) {
        std::sort(s.begin(), s.end());
        if (s.empty()) throw ValidationError("chain entries must be nonempty atom sets");
        if (!join_of_atoms(l, s))
            throw ValidationError("chain entry " + atom_set_label(s) + " is not a nerve face");
    }
    for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
        const bool subset = std::includes(sets[i + 1].begin(), sets[i + 1].end(),
                                          sets[i].begin(), sets[i].end());
        if (!subset || sets[i].size() == sets[i + 1].size())
            throw ValidationError("chain entries must strictly increase");
    }
    return ChainSimplex{std::move(sets)};
}

/// True iff join(S) exists and S already holds every atom below it.
inline bool is_complete(const IntersectionLattice& l, const AtomSet& s) {
    if (s.empty()) throw ValidationError("is_complete: empty atom set");
    std::optional<int> x = join_of_atoms(l, s);
    if (!x) return false;
    for (int j = 0; j < static_cast<int>(l.atoms.size()); ++j) {
        if (!l.poset.leq(l.atoms[j], *x)) continue;
        if (!std::binary_search(s.begin(), s.end(), j)) return false;
    }
    return true;
}

/// C(S): every atom below join(S).  The smallest complete superset of S.
inline AtomSet completion(const IntersectionLattice& l, const AtomSet& s) {
    if (s.empty()) throw ValidationError("completion: empty atom set");
    std::optional<int> x = join_of_atoms(l, s);
    if (!x) throw NoJoin("completion: atoms " + atom_set_label(s) + " have empty intersection");
    AtomSet out;
    for (int j = 0; j < static_cast<int>(l.atoms.size()); ++j)
        if (l.poset.leq(l.atoms[j], *x)) out.push_back(j);
    return out;
}

/// piv(Σ) and its 1-based position ι(Σ); both absent when every entry is complete.
struct Pivot {
    std::optional<AtomSet> set;
    std::optional<int> index;
};

inline Pivot pivot(const IntersectionLattice& l, const ChainSimplex& c) {
    for (int i = static_cast<int>(c.sets.size()); i >= 1; --i)
        if (!is_complete(l, c.sets[i - 1])) return {c.sets[i - 1], i};
    return {std::nullopt, std::nullopt};
}

/**
 * The §-4.3 matching on Bd(N(L)).  Simplices are indexed by their position
 * in complex.simplices(); vertex_sets maps a vertex of the subdivision back
 * to the nerve face it stands for.
 */
struct MorseMatching {
    SimplicialComplex complex;               // Bd(N(L))
    std::vector<AtomSet> vertex_sets;        // vertex -> nerve face
    std::vector<std::pair<int, int>> pairs;  // (σ, τ), τ = σ ∪ {C(piv σ)}
    std::vector<int> forward;                // the σ of each pair
    std::vector<int> backward;               // the τ of each pair
    std::vector<int> critical;               // everything unmatched
};

/// Chain form of a simplex of w.complex (vertex ids ascend with face size).
inline ChainSimplex chain_of(const MorseMatching& w, int simplex_index) {
    const Simplex& s = w.complex.simplices().at(simplex_index);
    ChainSimplex c;
    c.sets.reserve(s.size());
    for (int v : s) c.sets.push_back(w.vertex_sets.at(v));
    return c;
}

inline MorseMatching build_matching(const IntersectionLattice& l) {
    MorseMatching w;
    const SimplicialComplex nerve = nerve_complex(l.poset);
    w.complex = barycentric_subdivision(nerve);
    w.vertex_sets.assign(nerve.simplices().begin(), nerve.simplices().end());

    // Per nerve face: completeness and the vertex holding its completion.
    const int nv = static_cast<int>(w.vertex_sets.size());
    std::vector<char> complete(nv, 0);
    std::vector<int> completion_vertex(nv, -1);
    for (int v = 0; v < nv; ++v) {
        complete[v] = is_complete(l, w.vertex_sets[v]) ? 1 : 0;
        if (!complete[v]) {
            const int cv = nerve.simplex_index(completion(l, w.vertex_sets[v]));
            if (cv < 0) throw Error("completion is not a nerve face");
            completion_vertex[v] = cv;
        }
    }

    const auto& sims = w.complex.simplices();
    for (int s = 0; s < static_cast<int>(sims.size()); ++s) {
        const Simplex& chain = sims[s];
        int pv = -1;  // vertex holding piv: last incomplete entry
        for (int i = static_cast<int>(chain.size()) - 1; i >= 0; --i)
            if (!complete[chain[i]]) {
                pv = chain[i];
                break;
            }
        if (pv < 0) {
            w.critical.push_back(s);
            continue;
        }
        const int cv = completion_vertex[pv];
        if (std::binary_search(chain.begin(), chain.end(), cv)) {
            w.backward.push_back(s);
            continue;
        }
        Simplex tau = chain;
        tau.insert(std::upper_bound(tau.begin(), tau.end(), cv), cv);
        const int t = w.complex.simplex_index(tau);
        if (t < 0) throw Error("matched partner is not a simplex of Bd(N(L))");
        w.forward.push_back(s);
        w.pairs.emplace_back(s, t);
    }
    return w;
}

/**
 * Acyclicity of a matching by direct cycle search: matched covering edges
 * point upward, all other covering edges downward; the matching is acyclic
 * iff this directed graph has no cycle.
 */
inline bool verify_acyclic(const SimplicialComplex& k,
                           const std::vector<std::pair<int, int>>& pairs) {
    const auto& sims = k.simplices();
    const int m = static_cast<int>(sims.size());
    std::vector<int> match_up(m, -1);
    for (const auto& [s, t] : pairs) match_up[s] = t;

    std::vector<std::vector<int>> adj(m);
    for (int b = 0; b < m; ++b) {
        if (sims[b].size() == 1) continue;
        for (std::size_t i = 0; i < sims[b].size(); ++i) {
            Simplex facet;
            facet.reserve(sims[b].size() - 1);
            for (std::size_t j = 0; j < sims[b].size(); ++j)
                if (j != i) facet.push_back(sims[b][j]);
            const int a = k.simplex_index(facet);
            if (a < 0) throw NotAComplex("missing facet while building the flow graph");
            if (match_up[a] == b)
                adj[a].push_back(b);
            else
                adj[b].push_back(a);
        }
    }

    // Iterative three-color DFS.
    std::vector<char> color(m, 0);
    std::vector<std::pair<int, std::size_t>> stack;
    for (int root = 0; root < m; ++root) {
        if (color[root] != 0) continue;
        stack.emplace_back(root, 0);
        color[root] = 1;
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            if (next < adj[node].size()) {
                const int to = adj[node][next++];
                if (color[to] == 1) return false;
                if (color[to] == 0) {
                    color[to] = 1;
                    stack.emplace_back(to, 0);
                }
            } else {
                color[node] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

inline bool verify_acyclic(const MorseMatching& w) {
    return verify_acyclic(w.complex, w.pairs);
}

/**
 * The paper's own acyclicity certificate: ι is preserved across each pair
 * and strictly drops along any other downward step out of a matched τ into
 * another forward simplex.
 */
inline bool verify_iota_monotone(const IntersectionLattice& l, const MorseMatching& w) {
    const auto& sims = w.complex.simplices();
    std::vector<char> is_forward(sims.size(), 0);
    std::vector<int> iota(sims.size(), -1);
    std::vector<AtomSet> piv_set(sims.size());
    for (int s = 0; s < static_cast<int>(sims.size()); ++s) {
        const Pivot p = pivot(l, chain_of(w, s));
        if (p.index) {
            iota[s] = *p.index;
            piv_set[s] = *p.set;
        }
    }
    for (int s : w.forward) is_forward[s] = 1;

    for (const auto& [s, t] : w.pairs) {
        if (iota[s] < 0 || iota[t] < 0) return false;
        if (iota[s] != iota[t] || piv_set[s] != piv_set[t]) return false;
        const Simplex& tau = sims[t];
        for (std::size_t i = 0; i < tau.size(); ++i) {
            Simplex facet;
            facet.reserve(tau.size() - 1);
            for (std::size_t j = 0; j < tau.size(); ++j)
                if (j != i) facet.push_back(tau[j]);
            const int a = w.complex.simplex_index(facet);
            if (a < 0 || a == s || !is_forward[a]) continue;
            if (!(iota[a] < iota[s])) return false;
        }
    }
    return true;
}

/**
 * The unmatched simplices as a complex of their own; throws NotAComplex
 * when they are not downward closed.  Vertices are re-indexed to those
 * that actually occur, keeping their labels.
 */
inline SimplicialComplex critical_subcomplex(const SimplicialComplex& k,
                                             const std::vector<std::pair<int, int>>& pairs) {
    const auto& sims = k.simplices();
    std::vector<char> matched(sims.size(), 0);
    for (const auto& [s, t] : pairs) matched[s] = matched[t] = 1;

    std::vector<int> new_id(k.vertex_count(), -1);
    std::vector<std::string> labels;
    std::vector<Simplex> kept;
    for (std::size_t s = 0; s < sims.size(); ++s) {
        if (matched[s]) continue;
        Simplex mapped;
        mapped.reserve(sims[s].size());
        for (int v : sims[s]) {
            if (new_id[v] < 0) {
                new_id[v] = static_cast<int>(labels.size());
                labels.push_back(k.vertex_label(v));
            }
            mapped.push_back(new_id[v]);
        }
        std::sort(mapped.begin(), mapped.end());
        kept.push_back(std::move(mapped));
    }
    return SimplicialComplex::from_simplices(std::move(labels), std::move(kept));
}

inline SimplicialComplex critical_subcomplex(const MorseMatching& w) {
    return critical_subcomplex(w.complex, w.pairs);
}

/**
 * Checks that the critical subcomplex of the canonical matching is Δ(L)
 * under the relabeling sending a complete atom set to its join.
 */
inline bool critical_matches_zz(const IntersectionLattice& l, const MorseMatching& w) {
    SimplicialComplex crit;
    try {
        crit = critical_subcomplex(w);
    } catch (const NotAComplex&) {
        return false;
    }
    // Relabel each critical vertex (a complete nerve face) by its join.
    std::map<std::string, std::string> relabel;
    for (std::size_t v = 0; v < w.vertex_sets.size(); ++v) {
        std::optional<int> x = join_of_atoms(l, w.vertex_sets[v]);
        if (!x) continue;
        relabel[w.complex.vertex_label(static_cast<int>(v))] = l.poset.label(*x);
    }
    std::set<std::set<std::string>> got, want;
    for (const Simplex& s : crit.simplices()) {
        std::set<std::string> names;
        for (int v : s) {
            auto it = relabel.find(crit.vertex_label(v));
            if (it == relabel.end()) return false;
            names.insert(it->second);
        }
        if (names.size() != s.size()) return false;  // relabeling must stay injective
        got.insert(std::move(names));
    }
    const SimplicialComplex zz = order_complex(l.poset);
    for (const Simplex& s : zz.simplices()) {
        std::set<std::string> names;
        for (int v : s) names.insert(zz.vertex_label(v));
        want.insert(std::move(names));
    }
    return got == want;
}

/**
 * Orders the matched pairs into a sequence of elementary collapses from K
 * down to the critical subcomplex.  At each step the removed σ must be a
 * free face (its sole remaining proper coface is its partner τ); pairs are
 * scanned by descending dim τ, then by labels, and the first free pair is
 * taken.  StuckCollapse reports a state with no removable pair.
 */
inline std::vector<std::pair<int, int>> collapse_sequence(
    const SimplicialComplex& k, const std::vector<std::pair<int, int>>& pairs) {
    const auto& sims = k.simplices();
    const int m = static_cast<int>(sims.size());

    // Proper-coface counts, maintained as simplices are removed.
    std::vector<int> cofaces(m, 0);
    std::vector<int> face_ids;
    auto for_each_proper_face = [&](const Simplex& s, auto&& fn) {
        Simplex sub;
        auto rec = [&](auto&& self, std::size_t from, bool skipped) -> void {
            if (from == s.size()) {
                if (skipped && !sub.empty()) fn(sub);
                return;
            }
            sub.push_back(s[from]);
            self(self, from + 1, skipped);
            sub.pop_back();
            self(self, from + 1, true);
        };
        rec(rec, 0, false);
    };
    for (int i = 0; i < m; ++i)
        for_each_proper_face(sims[i], [&](const Simplex& f) {
            const int fi = k.simplex_index(f);
            if (fi < 0) throw NotAComplex("missing face while preparing collapse");
            ++cofaces[fi];
        });

    std::vector<int> order(pairs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Simplex& ta = sims[pairs[a].second];
        const Simplex& tb = sims[pairs[b].second];
        if (ta.size() != tb.size()) return ta.size() > tb.size();
        const std::string la = k.simplex_label(ta), lb = k.simplex_label(tb);
        if (la != lb) return la < lb;
        return k.simplex_label(sims[pairs[a].first]) < k.simplex_label(sims[pairs[b].first]);
    });

    std::vector<char> alive(m, 1), done(pairs.size(), 0);
    std::vector<std::pair<int, int>> seq;
    seq.reserve(pairs.size());
    auto remove_simplex = [&](int idx) {
        alive[idx] = 0;
        for_each_proper_face(sims[idx], [&](const Simplex& f) { --cofaces[k.simplex_index(f)]; });
    };
    for (std::size_t steps = 0; steps < pairs.size(); ++steps) {
        bool moved = false;
        for (int pi : order) {
            if (done[pi]) continue;
            const auto& [s, t] = pairs[pi];
            if (!alive[s] || !alive[t]) throw StuckCollapse("pair member already removed");
            if (cofaces[s] != 1) continue;
            remove_simplex(t);
            remove_simplex(s);
            seq.emplace_back(s, t);
            done[pi] = 1;
            moved = true;
            break;
        }
        if (!moved) throw StuckCollapse("no free pair left after " +
                                        std::to_string(seq.size()) + " steps");
    }
    return seq;
}

inline std::vector<std::pair<int, int>> collapse_sequence(const MorseMatching& w) {
    return collapse_sequence(w.complex, w.pairs);
}

/// The CLI's textual form of a collapse run.
inline std::vector<std::string> collapse_trace(const SimplicialComplex& k,
                                               const std::vector<std::pair<int, int>>& seq) {
    auto chain_text = [&](const Simplex& s) {
        std::string out = "(";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += '<';
            out += k.vertex_label(s[i]);
        }
        return out + ")";
    };
    std::vector<std::string> lines;
    lines.reserve(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto& [s, t] = seq[i];
        lines.push_back("step " + std::to_string(i + 1) + ": remove σ=" +
                        chain_text(k.simplices()[s]) + ", τ=" + chain_text(k.simplices()[t]));
    }
    return lines;
}

/// One entry of the identity-condition report.
struct IdentityCheck {
    int pair_index = 0;
    bool trivial = false;
    bool pass = false;
    std::string detail;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_pass = true;
};

/**
 * Theorem-level check that each matched pair's attaching map is an
 * identity.  The only pairs with content are those whose pivot sits at the
 * top of the chain; for them the exact intersection over piv(Σ) must equal
 * the exact intersection over its completion.  All other pairs restrict to
 * the top entry and are identities by construction.
 */
inline IdentityReport verify_identity_condition(const IntersectionLattice& l,
                                                const MorseMatching& w) {
    IdentityReport rep;
    for (std::size_t i = 0; i < w.pairs.size(); ++i) {
        const ChainSimplex c = chain_of(w, w.pairs[i].first);
        const Pivot p = pivot(l, c);
        IdentityCheck chk;
        chk.pair_index = static_cast<int>(i);
        if (!p.index) {
            chk.pass = false;
            chk.detail = "forward simplex has no pivot";
            rep.all_pass = false;
            rep.checks.push_back(std::move(chk));
            continue;
        }
        if (*p.index != static_cast<int>(c.sets.size())) {
            chk.trivial = true;
            chk.pass = true;
            chk.detail = "pivot below the top entry; identity by restriction";
            rep.checks.push_back(std::move(chk));
            continue;
        }
        const std::optional<AffineSubspace> lhs = exact_intersection_of_atoms(l, *p.set);
        const std::optional<AffineSubspace> rhs =
            exact_intersection_of_atoms(l, completion(l, *p.set));
        // The lattice lookup must agree with the exact fold on both sides,
        // otherwise equality of the two lookups would be vacuous.
        const AffineSubspace looked_up = subspace_of_vertex_set(l, *p.set);
        chk.pass = lhs && rhs && *lhs == *rhs && *lhs == looked_up &&
                   looked_up == subspace_of_vertex_set(l, completion(l, *p.set));
        chk.detail = "intersection over " + atom_set_label(*p.set) +
                     (chk.pass ? " equals " : " differs from ") + "intersection over " +
                     atom_set_label(completion(l, *p.set));
        if (!chk.pass) rep.all_pass = false;
        rep.checks.push_back(std::move(chk));
    }
    return rep;
}

}  // namespace arrtop
