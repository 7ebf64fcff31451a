#ifndef TOURNEY_CENSUS_HPP
#define TOURNEY_CENSUS_HPP

#include "tourney/tournament.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace tourney {

/// Isomorphism classes of 5-vertex tournaments.
inline constexpr std::size_t class_count = 12;

/// Number of rows in the relation matrix.
inline constexpr std::size_t r_count = 14;

/// Counts directed cycles through exactly k vertices by enumerating every
/// k-subset and every Hamiltonian ordering starting at its smallest vertex.
/// Returns 0 when k < 3 or k > n. Cost is C(n,k) (k-1)!.
std::int64_t count_k_cycles_bruteforce(const Tournament& t, Vertex k);

/// The twelve classes, ordered by (ham_count, canonical) ascending.
///
/// A labeled 5-tournament is encoded as the 10-bit word whose bit i is the
/// orientation of the i-th pair in serialization order. Its canonical form is
/// the lexicographically smallest bit string over all 120 relabelings.
struct ClassTable {
    std::array<Tournament, class_count> reps;
    std::array<std::string, class_count> canonical;
    std::array<int, class_count> ham_counts{};
    std::array<int, class_count> sizes{}; ///< labeled tournaments per class
    std::array<std::uint8_t, 1024> index_of_pattern{};
};

ClassTable build_class_table();

/// Process-wide table, built on first use.
const ClassTable& class_table();

/// 10-bit pair-orientation pattern of the subtournament on v[0..4].
unsigned pattern5(const Tournament& t, const std::array<Vertex, 5>& v) noexcept;

/// Throws WrongOrder unless t has 5 vertices.
std::size_t classify5(const Tournament& t);

using Census5 = std::array<std::int64_t, class_count>;

/// Induced 5-subtournament counts per class; all zero when n < 5.
Census5 census5(const Tournament& t);

/// Entry i - 1 holds quantity i:
///   1..8   sum over arcs of C(X,2) Y for (X,Y) in
///          (A,C) (A,D) (B,C) (B,D) (C,A) (C,B) (D,A) (D,B)
///   9..12  sum of ABC, ABD, ACD, BCD
///   13     C(n,5)
///   14     number of 5-cycles (brute force for n <= 12, c5_exact otherwise)
using RQuantities = std::array<std::int64_t, r_count>;

RQuantities r_quantities(const Tournament& t);

/// m[i][j] = r_quantities(class_table().reps[j])[i].
using RelationMatrix = std::array<std::array<std::int64_t, class_count>, r_count>;

RelationMatrix recover_matrix();

} // namespace tourney

#endif
