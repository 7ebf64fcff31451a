#ifndef TOURNEY_SCAN_HPP
#define TOURNEY_SCAN_HPP

#include "tourney/rational.hpp"
#include "tourney/tournament.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace tourney {

/// Largest order for which scan records include a brute-force 4-cycle count.
inline constexpr Vertex scan_c4_cap = 12;

struct ScanRecord {
    std::uint64_t seed = 0;
    Vertex n = 0;
    std::int64_t c3 = 0;
    std::optional<std::int64_t> c4;
    std::int64_t c5 = 0;
    std::int64_t s1 = 0;
    std::int64_t s2 = 0;
    Rational lower_bound;
    Rational upper_bound;
    Rational score_variance;
};

/// Statistics of Tournament::random(n, 0.5, seed).
ScanRecord scan_record(Vertex n, std::uint64_t seed);

/// Seed of row `index` in a scan started from `base_seed`.
inline std::uint64_t scan_seed(std::uint64_t base_seed, std::uint64_t index) noexcept
{
    return base_seed + index;
}

/// "seed,n,c3,c4,c5,s1,s2,lower_bound,upper_bound,score_variance"
std::string scan_csv_header();

/// Rationals are written as exact decimals (their denominators are powers of
/// two); c4 is left empty above scan_c4_cap.
std::string scan_csv_row(const ScanRecord& record);

/// Exact decimal expansion when the denominator is a power of two, "p/q"
/// otherwise.
std::string format_decimal(const Rational& value);

} // namespace tourney

#endif
