#ifndef TOURNEY_ACYCLIC_HPP
#define TOURNEY_ACYCLIC_HPP

#include "tourney/rational.hpp"
#include "tourney/tournament.hpp"

#include <cstdint>

namespace tourney {

/// Number of k-subsets inducing a transitive subtournament, by enumeration.
/// Throws BadParameter for k == 0.
std::int64_t count_acyclic(const Tournament& t, Vertex k);

/// Same count via the unique-source decomposition: every transitive k-set is
/// its source plus a transitive (k-1)-set among the source's out-neighbours.
std::int64_t count_acyclic_recursive(const Tournament& t, Vertex k);

/// Lower bound on the number of transitive k-subtournaments:
/// prod_{i<k} (x - 2^i + 1) / 2^C(k,2) when x > 2^(k-1) - 1, else 0.
/// Defined for rational x; the recursion evaluates it at (n-1)/2.
Rational f_lower(const Rational& x, Vertex k);
Rational f_lower(std::int64_t n, Vertex k);

/// Expected count in a random tournament, n (n-1) ... (n-k+1) / 2^C(k,2).
Rational g_expected(std::int64_t n, Vertex k);

} // namespace tourney

#endif
