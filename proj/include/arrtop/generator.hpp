#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "arrtop/arrangement.hpp"

namespace arrtop {

/**
 * Seed-deterministic random rational arrangements for property testing:
 * ambient dimension 2..4, 2..5 subspaces, integer coefficients in [-3, 3].
 * Draws reduce mt19937_64 output by explicit modulo so the stream does not
 * depend on the standard library's distribution internals.  Inconsistent,
 * full-space, and containment-violating draws are rejected and redrawn.
 *
 * A third of the draws force every right-hand side to zero (a central
 * arrangement) and another third zero them per subspace with probability
 * one half.  Fully generic position makes every nerve face complete and
 * the matching empty, so without these modes the collapse machinery would
 * never run on random input.
 */
class ArrangementGenerator {
  public:
    explicit ArrangementGenerator(std::uint64_t seed) : rng_(seed) {}

    Arrangement next() {
        for (int attempt = 0; attempt < 10000; ++attempt) {
            const int n = 2 + draw(3);
            const int k = 2 + draw(4);
            const int style = draw(3);  // 0 generic, 1 central, 2 mixed
            std::vector<AffineSubspace> subs;
            subs.reserve(k);
            bool ok = true;
            for (int i = 0; i < k; ++i) {
                const bool central = style == 1 || (style == 2 && draw(2) == 0);
                std::optional<AffineSubspace> s = random_subspace(n, central);
                if (!s) {
                    ok = false;
                    break;
                }
                for (const AffineSubspace& t : subs)
                    if (t.contains(*s) || s->contains(t)) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
                subs.push_back(std::move(*s));
            }
            if (!ok) continue;
            return Arrangement::validate(std::move(subs), n);
        }
        throw Error("arrangement generator exhausted its retry budget");
    }

  private:
    int draw(int bound) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(bound)); }

    std::optional<AffineSubspace> random_subspace(int n, bool central) {
        const int codim = 1 + draw(n);
        QMatrix eqs(codim, QVector(n));
        QVector rhs(codim);
        for (int r = 0; r < codim; ++r) {
            for (int c = 0; c < n; ++c) eqs[r][c] = Rational(draw(7) - 3);
            rhs[r] = central ? Rational(0) : Rational(draw(7) - 3);
        }
        std::optional<AffineSubspace> s = AffineSubspace::canonicalize(eqs, rhs, n);
        if (!s) return std::nullopt;       // inconsistent system
        if (s->rank() == 0) return std::nullopt;  // degenerated to the whole space
        return s;
    }

    std::mt19937_64 rng_;
};

}  // namespace arrtop
