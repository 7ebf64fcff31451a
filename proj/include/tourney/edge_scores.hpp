#ifndef TOURNEY_EDGE_SCORES_HPP
#define TOURNEY_EDGE_SCORES_HPP

#include "tourney/rational.hpp"
#include "tourney/tournament.hpp"

#include <cstdint>

namespace tourney {

/// Classification of the other n-2 vertices w relative to an arc u -> v.
struct EdgeScore {
    Vertex a = 0; ///< u -> w and v -> w
    Vertex b = 0; ///< w -> u and w -> v
    Vertex c = 0; ///< u -> w -> v
    Vertex d = 0; ///< v -> w -> u, closing a 3-cycle with the arc

    friend bool operator==(const EdgeScore&, const EdgeScore&) = default;
};

/// Throws NotAnArc unless u -> v.
EdgeScore edge_score(const Tournament& t, Vertex u, Vertex v);

/// Score of an arc known to exist; no validation.
inline EdgeScore arc_score(const Tournament& t, Vertex u, Vertex v) noexcept
{
    const auto out_u = t.out_row(u), in_u = t.in_row(u);
    const auto out_v = t.out_row(v), in_v = t.in_row(v);
    EdgeScore e;
    for (std::size_t i = 0; i < out_u.size(); ++i) {
        e.a += static_cast<Vertex>(__builtin_popcountll(out_u[i] & out_v[i]));
        e.b += static_cast<Vertex>(__builtin_popcountll(in_u[i] & in_v[i]));
        e.c += static_cast<Vertex>(__builtin_popcountll(out_u[i] & in_v[i]));
        e.d += static_cast<Vertex>(__builtin_popcountll(in_u[i] & out_v[i]));
    }
    return e;
}

/// Calls fn(u, v, score) for every arc u -> v, in order of u then v.
template <class Fn>
void for_each_arc_score(const Tournament& t, Fn&& fn)
{
    for (Vertex u = 0; u < t.order(); ++u) {
        const auto row = t.out_row(u);
        for (std::size_t w = 0; w < row.size(); ++w)
            for (Word bits = row[w]; bits; bits &= bits - 1) {
                const auto v = static_cast<Vertex>(w * bits_per_word + __builtin_ctzll(bits));
                fn(u, v, arc_score(t, u, v));
            }
    }
}

/// The two arc sums behind the exact 5-cycle count and the count itself:
///   8 * c5 = 6 * C(n,5) - s1 + 2 * s2
/// where s1 = sum (C+D)(A-B)^2 + (A+B)(C-D)^2 and s2 = sum (A+B)(C+D).
struct C5Breakdown {
    Rational base;      ///< 3/4 * C(n,5)
    std::int64_t s1 = 0;
    std::int64_t s2 = 0;
    std::int64_t c5 = 0;
};

/// Number of directed 5-cycles from the edge score sequence, O(n^3 / 64).
C5Breakdown c5_exact(const Tournament& t);

/// Number of directed 3-cycles, C(n,3) - sum_v C(od(v),2).
std::int64_t c3_closed(const Tournament& t);

/// sum_w (od(w) - (n-1)/2)^2
Rational score_variance(const Tournament& t);

/// 3/4 C(n,5) + 1/4 C(n,2) ((n-2)/2)^2
Rational upper_bound_c5(std::int64_t n);

/// 3/4 C(n,5) - 1/2 C(n-2,2) score_variance(t) - 3/8 C(n,3).
///
/// The last term enters with a minus sign. That is what bounding the
/// subtracted sum by 4 C(n-2,2) var + 3 C(n,3) actually yields; the plus-sign
/// variant is false already for the regular 5-tournament (4.5 > 2).
Rational lower_bound_c5(const Tournament& t);

/// The stages of the inequality chain behind lower_bound_c5:
///   s1 <= mid = (n-2) sum_arcs [(od(v) - id(u))^2 + (od(u) - od(v) - 1)^2]
///   mid == vertexform = 4 C(n-2,2) score_variance + 3 C(n,3)
struct SubtractedSumChain {
    std::int64_t s1 = 0;
    std::int64_t mid = 0;
    Rational vertexform;
};

SubtractedSumChain subtracted_sum_chain(const Tournament& t);

/// Largest possible number of 3-cycles (resp. 4-cycles) in an n-tournament.
Rational max_c3(std::int64_t n);
Rational max_c4(std::int64_t n);

/// Expected number of 5-cycles in a uniformly random n-tournament.
Rational expected_c5(std::int64_t n);

} // namespace tourney

#endif
