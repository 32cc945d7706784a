#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrtop/errors.hpp"

namespace arrtop {

/**
 * A finite poset over an indexed list of opaque labels, with the relation
 * held as a dense boolean table.  Construction validates reflexivity,
 * antisymmetry and transitivity; instances are immutable afterwards.
 */
class FinitePoset {
  public:
    FinitePoset() = default;

    /// Build from an explicit leq table (row-major, leq[a][b] means a <= b).
    static FinitePoset from_leq(std::vector<std::string> labels,
                                std::vector<std::vector<bool>> leq) {
        const int n = static_cast<int>(labels.size());
        if (static_cast<int>(leq.size()) != n)
            throw Error("from_leq: table size differs from label count");
        FinitePoset p;
        p.labels_ = std::move(labels);
        p.n_ = n;
        p.leq_.assign(static_cast<std::size_t>(n) * n, 0);
        for (int a = 0; a < n; ++a) {
            if (static_cast<int>(leq[a].size()) != n)
                throw Error("from_leq: table is not square");
            for (int b = 0; b < n; ++b) p.leq_[a * n + b] = leq[a][b] ? 1 : 0;
        }
        p.validate();
        return p;
    }

    /// Build as the reflexive-transitive closure of covering pairs (a < b).
    static FinitePoset from_covers(std::vector<std::string> labels,
                                   const std::vector<std::pair<int, int>>& covers) {
        const int n = static_cast<int>(labels.size());
        FinitePoset p;
        p.labels_ = std::move(labels);
        p.n_ = n;
        p.leq_.assign(static_cast<std::size_t>(n) * n, 0);
        for (int a = 0; a < n; ++a) p.leq_[a * n + a] = 1;
        for (auto [a, b] : covers) {
            if (a < 0 || a >= n || b < 0 || b >= n) throw UnknownElement("from_covers: bad index");
            p.leq_[a * n + b] = 1;
        }
        // Floyd-Warshall closure.
        for (int k = 0; k < n; ++k)
            for (int a = 0; a < n; ++a)
                if (p.leq_[a * n + k])
                    for (int b = 0; b < n; ++b)
                        if (p.leq_[k * n + b]) p.leq_[a * n + b] = 1;
        p.validate();
        return p;
    }

    int size() const { return n_; }
    const std::string& label(int i) const { return labels_[check(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool leq(int a, int b) const { return leq_[check(a) * n_ + check(b)] != 0; }
    bool less(int a, int b) const { return a != b && leq(a, b); }

    int index_of(const std::string& label) const {
        for (int i = 0; i < n_; ++i)
            if (labels_[i] == label) return i;
        return -1;
    }

    /// Elements with nothing strictly below them.
    std::vector<int> minimal_elements() const {
        std::vector<int> out;
        for (int x = 0; x < n_; ++x) {
            bool minimal = true;
            for (int y = 0; y < n_ && minimal; ++y)
                if (less(y, x)) minimal = false;
            if (minimal) out.push_back(x);
        }
        return out;
    }

    /// Induced subposet on {y <= x} (or {y < x} when strict); labels kept.
    FinitePoset lower_set(int x, bool strict) const {
        check(x);
        std::vector<int> keep;
        for (int y = 0; y < n_; ++y)
            if (strict ? less(y, x) : leq(y, x)) keep.push_back(y);
        return induced(keep);
    }

    /// Induced subposet on an arbitrary element subset, in the given order.
    FinitePoset induced(const std::vector<int>& keep) const {
        FinitePoset p;
        p.n_ = static_cast<int>(keep.size());
        p.labels_.reserve(keep.size());
        for (int y : keep) p.labels_.push_back(labels_[check(y)]);
        p.leq_.assign(static_cast<std::size_t>(p.n_) * p.n_, 0);
        for (int a = 0; a < p.n_; ++a)
            for (int b = 0; b < p.n_; ++b) p.leq_[a * p.n_ + b] = leq(keep[a], keep[b]) ? 1 : 0;
        return p;
    }

    /**
     * Least common upper bound of S.  Returns std::nullopt when S has no
     * common upper bound at all; throws NotASemilattice when upper bounds
     * exist but none of them is least.
     */
    std::optional<int> join(const std::vector<int>& S) const {
        if (S.empty()) throw Error("join: empty set");
        std::vector<int> ub;
        for (int z = 0; z < n_; ++z) {
            bool all = true;
            for (int s : S)
                if (!leq(check(s), z)) {
                    all = false;
                    break;
                }
            if (all) ub.push_back(z);
        }
        if (ub.empty()) return std::nullopt;
        std::vector<int> min_ub;
        for (int u : ub) {
            bool minimal = true;
            for (int v : ub)
                if (less(v, u)) {
                    minimal = false;
                    break;
                }
            if (minimal) min_ub.push_back(u);
        }
        if (min_ub.size() != 1)
            throw NotASemilattice("join: upper bounds exist but have no least element");
        return min_ub[0];
    }

    /// Pairwise check of both semilattice conditions (joins and meets).
    bool is_semilattice() const {
        auto unique_extreme = [&](const std::vector<int>& set, bool want_least) {
            if (set.empty()) return true;
            int extremes = 0;
            for (int u : set) {
                bool extreme = true;
                for (int v : set)
                    if (want_least ? less(v, u) : less(u, v)) {
                        extreme = false;
                        break;
                    }
                if (extreme) ++extremes;
            }
            return extremes == 1;
        };
        for (int x = 0; x < n_; ++x) {
            for (int y = x + 1; y < n_; ++y) {
                std::vector<int> ub, lb;
                for (int z = 0; z < n_; ++z) {
                    if (leq(x, z) && leq(y, z)) ub.push_back(z);
                    if (leq(z, x) && leq(z, y)) lb.push_back(z);
                }
                if (!unique_extreme(ub, /*want_least=*/true)) return false;
                if (!unique_extreme(lb, /*want_least=*/false)) return false;
            }
        }
        return true;
    }

    /**
     * The poset of all nonempty chains of *this, ordered by inclusion.
     * Chains are enumerated by length, then lexicographically on their
     * element index sequences, and labeled "{l1<l2<...}".
     */
    FinitePoset barycentric_subdivision() const {
        std::vector<std::vector<int>> chains = all_chains();
        std::vector<std::string> labels;
        labels.reserve(chains.size());
        for (const auto& ch : chains) {
            std::string l = "{";
            for (std::size_t i = 0; i < ch.size(); ++i) {
                if (i) l += '<';
                l += labels_[ch[i]];
            }
            l += '}';
            labels.push_back(std::move(l));
        }
        const int m = static_cast<int>(chains.size());
        FinitePoset p;
        p.labels_ = std::move(labels);
        p.n_ = m;
        p.leq_.assign(static_cast<std::size_t>(m) * m, 0);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                p.leq_[a * m + b] = std::includes(chains[b].begin(), chains[b].end(),
                                                  chains[a].begin(), chains[a].end())
                                        ? 1
                                        : 0;
        p.validate();
        return p;
    }

    /// All pairs (a, b) with a < b and nothing strictly between.
    std::vector<std::pair<int, int>> covering_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < n_; ++a) {
            for (int b = 0; b < n_; ++b) {
                if (!less(a, b)) continue;
                bool cover = true;
                for (int z = 0; z < n_ && cover; ++z)
                    if (less(a, z) && less(z, b)) cover = false;
                if (cover) out.emplace_back(a, b);
            }
        }
        return out;
    }

    /**
     * All nonempty chains, each sorted ascending by element index, listed
     * by (length, lexicographic index sequence).
     */
    std::vector<std::vector<int>> all_chains() const {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        // DFS over sets of pairwise-comparable elements with increasing
        // indices; each chain is produced exactly once.
        auto extend = [&](auto&& self, int start) -> void {
            for (int x = start; x < n_; ++x) {
                bool comparable = true;
                for (int y : cur)
                    if (!leq(x, y) && !leq(y, x)) {
                        comparable = false;
                        break;
                    }
                if (!comparable) continue;
                cur.push_back(x);
                out.push_back(cur);
                self(self, x + 1);
                cur.pop_back();
            }
        };
        extend(extend, 0);
        std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        return out;
    }

  private:
    int check(int i) const {
        if (i < 0 || i >= n_) throw UnknownElement("element index out of range");
        return i;
    }

    void validate() const {
        for (int a = 0; a < n_; ++a)
            if (!leq_[a * n_ + a]) throw Error("poset relation is not reflexive");
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (a != b && leq_[a * n_ + b] && leq_[b * n_ + a])
                    throw Error("poset relation is not antisymmetric");
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (leq_[a * n_ + b])
                    for (int c = 0; c < n_; ++c)
                        if (leq_[b * n_ + c] && !leq_[a * n_ + c])
                            throw Error("poset relation is not transitive");
    }

    std::vector<std::string> labels_;
    int n_ = 0;
    std::vector<std::uint8_t> leq_;
};

}  // namespace arrtop
