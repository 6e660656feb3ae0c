#pragma once

// Shared fixtures: the worked braidings and random generators.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"

namespace fixtures {

using nichols::BraidingMatrix;
using nichols::ContextPtr;
using nichols::IntMatrix;
using nichols::ScalarContext;
using nichols::UnitMonomial;

// q_ii = t^d_i, q_ij = t^(d_i a_ij) for i < j, q_ji = 1. Requires d_i a_ij = d_j a_ji.
inline BraidingMatrix generic_cartan(const IntMatrix& c, const std::vector<int64_t>& d) {
    auto ctx = ScalarContext::make(0, {"t"});
    const int n = c.rows();
    BraidingMatrix q(ctx, n);
    for (int i = 0; i < n; ++i) {
        q.set(i, i, UnitMonomial::parameter(ctx, 0, d[size_t(i)]));
        for (int j = i + 1; j < n; ++j) q.set(i, j, UnitMonomial::parameter(ctx, 0, d[size_t(i)] * c(i, j)));
    }
    return q;
}

inline BraidingMatrix a2_generic() {
    return nichols::parse_braiding("rank 2\nparams t\nentry 1 1 t\nentry 1 2 t^-1\nentry 2 1 1\nentry 2 2 t\n");
}
inline BraidingMatrix b2_generic() { return generic_cartan({{2, -2}, {-1, 2}}, {1, 2}); }
inline BraidingMatrix g2_generic() { return generic_cartan({{2, -3}, {-1, 2}}, {1, 3}); }
inline BraidingMatrix a3_generic() { return generic_cartan({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}); }
inline BraidingMatrix affine_generic() { return generic_cartan({{2, -2}, {-2, 2}}, {1, 1}); }

inline BraidingMatrix rank1_minus_one() { return nichols::parse_braiding("rank 1\norder 2\nentry 1 1 z\n"); }

// Cartan type A2 with q_ii a primitive third root of unity.
inline BraidingMatrix a2_root3() {
    return nichols::parse_braiding("rank 2\norder 3\nentry 1 1 z\nentry 1 2 z^2\nentry 2 1 1\nentry 2 2 z\n");
}

// Random Cartan-type braiding over a torsion or a generic context. Each pair is chosen so that
// q_ij q_ji is a small nonpositive power of both q_ii and q_jj.
template <class Rng>
BraidingMatrix random_cartan_braiding(Rng& rng, int max_rank = 4) {
    std::uniform_int_distribution<int> rank_dist(1, max_rank), order_dist(2, 24), coin(0, 2);
    std::uniform_int_distribution<int64_t> small(-6, 6);
    for (;;) {
        const int n = rank_dist(rng);
        const bool generic = coin(rng) == 0;
        const int order = generic ? 0 : order_dist(rng);
        auto ctx = ScalarContext::make(order, generic ? std::vector<std::string>{"t"} : std::vector<std::string>{});
        auto unit = [&](int64_t tors, int64_t free) {
            return generic ? UnitMonomial(ctx, 0, {free}) : UnitMonomial(ctx, tors, {});
        };
        BraidingMatrix q(ctx, n);
        for (int i = 0; i < n; ++i) {
            const int64_t x = generic ? std::uniform_int_distribution<int64_t>(1, 3)(rng)
                                      : std::uniform_int_distribution<int64_t>(1, order - 1)(rng);
            q.set(i, i, unit(x, x));
        }
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                // try a few candidate products q_ii^a; keep one that also is a power of q_jj
                std::vector<UnitMonomial> candidates{UnitMonomial(ctx)};
                for (int64_t a = -1; a >= -4; --a) candidates.push_back(q.at(i, i).pow(a));
                std::shuffle(candidates.begin(), candidates.end(), rng);
                std::optional<UnitMonomial> chosen;
                for (const auto& sym : candidates) {
                    if (nichols::solve_power(q.at(j, j), sym).greatest_nonpositive()) {
                        chosen = sym;
                        break;
                    }
                }
                if (!chosen) {
                    ok = false;
                    break;
                }
                const UnitMonomial qij = unit(small(rng), small(rng));
                q.set(i, j, qij);
                q.set(j, i, *chosen * qij.inverse());
            }
        if (ok && nichols::is_cartan_type(q)) return q;
    }
}

// Random braiding over a torsion context; every q_ii has order >= 2 so every
// index is reflectable. Off-diagonal entries may carry a free parameter.
template <class Rng>
BraidingMatrix random_reflectable(Rng& rng, int max_rank = 4) {
    std::uniform_int_distribution<int> rank_dist(1, max_rank), order_dist(2, 24);
    std::uniform_int_distribution<int64_t> e(-30, 30);
    const int n = rank_dist(rng), order = order_dist(rng);
    auto ctx = ScalarContext::make(order, {"t"});
    BraidingMatrix q(ctx, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                int64_t x = 0;
                while (x % order == 0) x = e(rng);
                q.set(i, i, UnitMonomial(ctx, x, {0}));
            } else {
                q.set(i, j, UnitMonomial(ctx, e(rng), {e(rng) % 3}));
            }
        }
    return q;
}

}  // namespace fixtures
