// Naive reference computations used only by the tests. They touch the
// tournament through beats() alone and share no code with the library's
// bitset routines.
#ifndef TOURNEY_TESTS_ORACLE_HPP
#define TOURNEY_TESTS_ORACLE_HPP

#include "tourney/edge_scores.hpp"
#include "tourney/tournament.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using tourney::Tournament;
using tourney::Vertex;

inline tourney::EdgeScore edge_score(const Tournament& t, Vertex u, Vertex v)
{
    tourney::EdgeScore s;
    for (Vertex w = 0; w < t.order(); ++w) {
        if (w == u || w == v)
            continue;
        const bool uw = t.beats(u, w), vw = t.beats(v, w);
        if (uw && vw)
            ++s.a;
        else if (!uw && !vw)
            ++s.b;
        else if (uw)
            ++s.c;
        else
            ++s.d;
    }
    return s;
}

// Directed k-cycles by depth-first search from each start vertex, keeping only
// paths whose other vertices exceed the start (so each cycle is counted once).
inline std::int64_t cycles(const Tournament& t, Vertex k)
{
    const Vertex n = t.order();
    if (k < 3 || k > n)
        return 0;
    std::int64_t total = 0;
    std::vector<bool> used(n, false);
    std::vector<Vertex> path;
    auto extend = [&](auto&& self, Vertex start) -> void {
        const Vertex last = path.back();
        if (path.size() == k) {
            total += t.beats(last, start);
            return;
        }
        for (Vertex w = start + 1; w < n; ++w)
            if (!used[w] && t.beats(last, w)) {
                used[w] = true;
                path.push_back(w);
                self(self, start);
                path.pop_back();
                used[w] = false;
            }
    };
    for (Vertex s = 0; s < n; ++s) {
        path = {s};
        extend(extend, s);
    }
    return total;
}

// Transitive k-subsets by bitmask enumeration: a set is transitive iff it
// contains no directed triangle.
inline std::int64_t acyclic(const Tournament& t, Vertex k)
{
    const Vertex n = t.order();
    std::int64_t total = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<Vertex>(__builtin_popcount(mask)) != k)
            continue;
        bool ok = true;
        for (Vertex a = 0; a < n && ok; ++a)
            for (Vertex b = 0; b < n && ok; ++b)
                for (Vertex c = 0; c < n && ok; ++c)
                    if ((mask >> a & 1) && (mask >> b & 1) && (mask >> c & 1) && t.beats(a, b) && t.beats(b, c) &&
                        t.beats(c, a))
                        ok = false;
        total += ok;
    }
    return total;
}

} // namespace oracle

#endif
